"""Report payloads shared by the command line and the HTTP API.

Each builder returns a ``Report``: a JSON-ready payload and its plain-text
rendering, both carrying the same values.
"""

import json
from typing import NamedTuple

from ncpoly import Polynomial, format_polynomial, leading_term
from words import format_word


class Report(NamedTuple):
    payload: dict
    text: str
    exit_code: int = 0

    def render(self, as_json=False):
        if as_json:
            return json.dumps(self.payload, indent=2, sort_keys=True) + "\n"
        return self.text if self.text.endswith("\n") else self.text + "\n"


def format_rule(rule, alphabet):
    """``lead -> rest`` where rule = lead - rest."""
    lead = leading_term(rule, alphabet).monomial
    rest = Polynomial.monomial(lead) - rule
    return f"{format_word(lead)} -> {format_polynomial(rest, alphabet)}"


def error_payload(exc):
    return {"error": exc.code, "details": str(exc)}


def normal_form_report(word, result, fingerprint):
    payload = {"command": "normalform", "fingerprint": fingerprint,
               "word": format_word(word), "normal_form": format_word(result)}
    return Report(payload, format_word(result))


def completion_report(system, fingerprint):
    alphabet = system.alphabet
    rules = [format_rule(rule, alphabet) for rule in system.sorted_rules()]
    stats = {k: system.stats[k] for k in ("steps", "compositions", "added")}
    payload = {
        "command": "complete",
        "fingerprint": fingerprint,
        "status": system.status.value,
        "order": alphabet.format_order(),
        "rules": rules,
        "stats": stats,
    }
    if "reason" in system.stats:
        payload["reason"] = system.stats["reason"]
    lines = [f"status: {system.status.value}", f"order: {payload['order']}", f"rules: {len(rules)}"]
    lines += [f"  {rule}" for rule in rules]
    lines += [f"{name}: {value}" for name, value in stats.items()]
    if "reason" in payload:
        lines.append(f"reason: {payload['reason']}")
    exit_code = 0 if system.is_completed else 3
    return Report(payload, "\n".join(lines), exit_code)


def irr_report(words, max_len, fingerprint):
    formatted = [format_word(w) for w in words]
    payload = {"command": "irr", "fingerprint": fingerprint, "max_len": max_len,
               "count": len(formatted), "words": formatted}
    return Report(payload, "\n".join(formatted))


def fox_report(word, generator, derivative, alphabet):
    text = format_polynomial(derivative, alphabet)
    payload = {"command": "fox", "word": format_word(word), "generator": generator.name, "derivative": text}
    return Report(payload, text)


def factorization_report(presentation_text, factorization, alphabet, fingerprint):
    f = format_polynomial(factorization.f, alphabet)
    D = [format_polynomial(d, alphabet) for d in factorization.D]
    payload = {
        "command": "factor",
        "fingerprint": fingerprint,
        "presentation": presentation_text,
        "f": f,
        "D": D,
        "exact": factorization.exact,
    }
    lines = [presentation_text.rstrip("\n"), f"f: {f}"]
    lines += [f"D{i}: {d}" for i, d in enumerate(D, start=1)]
    lines.append(f"exact: {str(factorization.exact).lower()}")
    return Report(payload, "\n".join(lines), 0 if factorization.exact else 1)


def classify_report(index, analysis, alphabet):
    phi1 = None if analysis.phi1 is None else format_polynomial(analysis.phi1, alphabet)
    payload = {
        "command": "classify",
        "relator": index,
        "case": analysis.tag.value,
        "phi1": phi1,
        "u": None if analysis.u is None else format_word(analysis.u),
        "fbar": format_word(analysis.fbar),
    }
    return Report(payload, analysis.tag.value)


def witness_payload(report, alphabet):
    return {
        "beta": report.beta.format(),
        "D": [format_polynomial(d, alphabet) for d in report.D],
        "f": format_polynomial(report.f, alphabet),
        "A": report.A.format(),
        "B": report.B.format(),
        "product_zero": report.product_zero,
        "nontrivial": report.nontrivial,
    }


def witness_report(reports, alphabet, fingerprint):
    witnesses = [witness_payload(r, alphabet) for r in reports]
    payload = {"command": "witness", "fingerprint": fingerprint, "count": len(witnesses), "witnesses": witnesses}
    blocks = []
    for k, w in enumerate(witnesses, start=1):
        blocks.append("\n".join([
            f"witness {k}",
            "  beta: (" + ", ".join(w["beta"]) + ")",
            "  D: (" + ", ".join(w["D"]) + ")",
            f"  f: {w['f']}",
            f"  A: {w['A']}",
            f"  B: {w['B']}",
            f"  product_zero: {str(w['product_zero']).lower()}",
            f"  nontrivial: {str(w['nontrivial']).lower()}",
        ]))
    text = "\n".join(blocks) if blocks else "no kernel vectors within bounds"
    exit_code = 0 if any(w["nontrivial"] and w["product_zero"] for w in witnesses) else 1
    return Report(payload, text, exit_code)


def torsion_report(n, holds):
    payload = {"command": "torsion-check", "n": n, "holds": holds}
    return Report(payload, str(holds).lower(), 0 if holds else 1)

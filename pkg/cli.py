"""Command line front end.

    python cli.py fox samples/z2.txt -w "x^3" -x x
    python cli.py complete samples/worked_example.txt --json
    python cli.py witness samples/z2.txt --support-len 1 --coeff-bound 1

Reports go to stdout. Failures print {"error": code, "details": message}
to stderr and exit 1 (analysis negative), 2 (bad input) or 3 (limits).
"""

import argparse
import json
import logging
import sys
from typing import NamedTuple

import database
from config import get_config, setup_logging
from errors import FoxDivError, ParseError
from family import (
    FamilySpec,
    analyze_phi1,
    build_family,
    common_divisor,
    factor_derivatives,
    parse_family,
)
from fox import fox_derivative
from groupring import (
    GroupRing,
    Presentation,
    PresentationKind,
    fingerprint,
    format_presentation,
    parse_presentation,
    presentation_to_rules,
    to_semigroup,
)
from gsbasis import CompletionLimits, shirshov_complete
from ncpoly import parse_polynomial
from reports import (
    classify_report,
    completion_report,
    error_payload,
    factorization_report,
    fox_report,
    irr_report,
    normal_form_report,
    torsion_report,
    witness_report,
)
from witness import presentation_factorization, search_kernel, torsion_identity_check, verify_witness
from words import parse_word

logger = logging.getLogger(__name__)

VERBS = ("normalform", "complete", "irr", "fox", "factor", "classify", "witness", "torsion-check")


class Command(NamedTuple):
    verb: str
    source: object = None
    flags: dict = {}


def parse_text(text):
    """A Presentation or a FamilySpec, depending on the header line."""
    for raw in text.splitlines():
        content = raw.split("#", 1)[0].strip()
        if content:
            if content == "family":
                return parse_family(text)
            return parse_presentation(text)
    raise ParseError("empty input", 1, 1)


def parse_input(path):
    try:
        with open(path, 'r') as f:
            text = f.read()
    except OSError as exc:
        raise FoxDivError(f"cannot read {path}: {exc.strerror}", code="io_error") from None
    return parse_text(text)


def _presentation_of(parsed):
    if isinstance(parsed, FamilySpec):
        return build_family(parsed)
    return parsed


def _limits(flags, config):
    return CompletionLimits.from_config(
        config,
        max_rules=flags.get("max_rules"),
        max_steps=flags.get("max_steps"),
        max_degree=flags.get("max_degree"),
    )


def _require(flags, name, verb):
    value = flags.get(name)
    if value is None:
        raise FoxDivError(f"{verb} needs --{name.replace('_', '-')}", code="missing_flag")
    return value


def run(cmd, config=None):
    """Execute one command and return its Report."""
    config = config or get_config()
    flags = cmd.flags or {}
    if cmd.verb not in VERBS:
        raise FoxDivError(f"unknown command {cmd.verb!r}", code="unknown_command")
    if cmd.verb == "torsion-check":
        n = _require(flags, "n", cmd.verb)
        return torsion_report(n, torsion_identity_check(n, _limits(flags, config)))
    if cmd.source is None:
        raise FoxDivError(f"{cmd.verb} needs an input file", code="missing_input")
    if isinstance(cmd.source, (Presentation, FamilySpec)):
        parsed = cmd.source
    elif isinstance(cmd.source, str):
        parsed = parse_text(cmd.source)
    else:
        raise FoxDivError("input must be the text of a presentation or family file", code="bad_flag")
    limits = _limits(flags, config)
    logger.info("running %s", cmd.verb)

    if cmd.verb == "fox":
        alphabet = parsed.alphabet
        word = parse_word(_require(flags, "word", cmd.verb), alphabet)
        generator = alphabet.generator(_require(flags, "x", cmd.verb))
        return fox_report(word, generator, fox_derivative(word, generator), alphabet)

    if cmd.verb in ("factor", "classify"):
        if not isinstance(parsed, FamilySpec):
            raise FoxDivError(f"{cmd.verb} needs a family file", code="needs_family")
        if cmd.verb == "factor":
            presentation = build_family(parsed)
            return factorization_report(format_presentation(presentation), factor_derivatives(parsed),
                                        parsed.alphabet, fingerprint(presentation))
        build_family(parsed)
        index = _require(flags, "index", cmd.verb)
        f = flags.get("f")
        f = common_divisor(parsed) if f is None else parse_polynomial(f, parsed.alphabet)
        return classify_report(index, analyze_phi1(parsed, index, f), parsed.alphabet)

    presentation = _presentation_of(parsed)
    digest = fingerprint(presentation)

    if cmd.verb == "complete":
        semigroup = presentation
        if presentation.kind is PresentationKind.GROUP:
            semigroup = to_semigroup(presentation)
        system = shirshov_complete(presentation_to_rules(semigroup), limits)
        report = completion_report(system, digest)
        if flags.get("archive"):
            database.archive_completion(report.payload, config.get("archive_db"))
        return report

    ring = GroupRing(presentation, limits)
    if cmd.verb == "normalform":
        word = parse_word(_require(flags, "word", cmd.verb), ring.alphabet)
        return normal_form_report(word, ring.normal_form(word), digest)
    if cmd.verb == "irr":
        max_len = _require(flags, "max_len", cmd.verb)
        return irr_report(ring.basis(max_len), max_len, digest)

    # witness
    if isinstance(parsed, FamilySpec):
        factorization = factor_derivatives(parsed)
    else:
        factorization = presentation_factorization(ring, flags.get("x"))
    if flags.get("beta") is not None:
        reports = [verify_witness(ring, flags["beta"], factorization)]
    else:
        vectors = search_kernel(
            ring,
            _require(flags, "support_len", cmd.verb),
            _require(flags, "coeff_bound", cmd.verb),
            workers=flags.get("workers") or config.get("workers", 1),
        )
        reports = [verify_witness(ring, beta, factorization) for beta in vectors]
    report = witness_report(reports, ring.alphabet, digest)
    if flags.get("archive"):
        for witness in report.payload["witnesses"]:
            database.archive_witness(digest, witness, config.get("archive_db"))
    return report


def read_beta(path):
    """One polynomial per line; '#' comments and blank lines skipped."""
    try:
        with open(path, 'r') as f:
            lines = f.read().splitlines()
    except OSError as exc:
        raise FoxDivError(f"cannot read {path}: {exc.strerror}", code="io_error") from None
    return [line.split("#", 1)[0].strip() for line in lines if line.split("#", 1)[0].strip()]


def build_parser():
    parser = argparse.ArgumentParser(prog="foxdiv", description="Fox derivatives, Groebner-Shirshov completion "
                                     "and zero-divisor witnesses for finitely presented groups.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def command(name, needs_input=True, **kwargs):
        p = sub.add_parser(name, **kwargs)
        if needs_input:
            p.add_argument("input", help="presentation or family file")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--max-rules", type=int, default=None)
        p.add_argument("--max-steps", type=int, default=None)
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--archive", action="store_true", help="store the report in the archive database")
        return p

    command("normalform", help="normal form of a word").add_argument("-w", "--word", required=True)
    command("complete", help="Groebner-Shirshov completion report")
    command("irr", help="irreducible words").add_argument("--max-len", type=int, default=3)
    p = command("fox", help="Fox derivative of a word")
    p.add_argument("-w", "--word", required=True)
    p.add_argument("-x", required=True, help="generator to differentiate by")
    command("factor", help="common right divisor of a family's derivatives")
    p = command("classify", help="case of phi_1 for one relator of a family")
    p.add_argument("-i", "--index", type=int, required=True)
    p.add_argument("-f", default=None, help="divisor polynomial (default: the family's f)")
    p = command("witness", help="kernel vectors and zero-divisor pairs")
    p.add_argument("--support-len", type=int, default=1)
    p.add_argument("--coeff-bound", type=int, default=1)
    p.add_argument("--beta", default=None, help="file with one beta entry per line")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("-x", default=None, help="generator to differentiate by (default: first)")
    command("torsion-check", needs_input=False, help="(1-g)(1+g+...+g^(n-1)) = 0 in Z[C_n]") \
        .add_argument("-n", type=int, required=True)
    return parser


def _flags(args):
    skip = {"verb", "input", "json"}
    flags = {k: v for k, v in vars(args).items() if k not in skip}
    if flags.get("beta"):
        flags["beta"] = read_beta(flags["beta"])
    return flags


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = get_config()
    setup_logging(config)
    try:
        source = None
        if getattr(args, "input", None) is not None:
            source = parse_input(args.input)
        report = run(Command(args.verb, source, _flags(args)), config)
    except FoxDivError as exc:
        sys.stderr.write(json.dumps(error_payload(exc)) + "\n")
        return exc.exit_code
    sys.stdout.write(report.render(args.json))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())

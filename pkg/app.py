import argparse
import logging

from flask import Flask, request, jsonify

import database
from cli import VERBS, Command, run
from config import get_config, setup_logging
from errors import FoxDivError
from reports import error_payload

app = Flask(__name__)
logger = logging.getLogger(__name__)

INT_FLAGS = ("max_rules", "max_steps", "max_degree", "max_len", "index", "support_len", "coeff_bound", "workers", "n")
TEXT_FLAGS = ("word", "x", "f")


def _flags_from_json(data):
    flags = {}
    for name in INT_FLAGS:
        if data.get(name) is not None:
            value = data[name]
            if isinstance(value, bool) or not isinstance(value, (int, str)) or not str(value).lstrip("-").isdigit():
                raise FoxDivError(f"'{name}' must be an integer", code="bad_flag")
            flags[name] = int(value)
    for name in TEXT_FLAGS:
        if data.get(name) is not None:
            flags[name] = str(data[name])
    beta = data.get("beta")
    if beta is not None:
        if not isinstance(beta, list) or not all(isinstance(b, str) for b in beta):
            raise FoxDivError("'beta' must be a list of polynomial strings", code="bad_flag")
        flags["beta"] = beta
    flags["archive"] = bool(data.get("archive", False))
    return flags


@app.route('/ping', methods=['GET'])
def ping():
    return jsonify({"status": "ok", "commands": list(VERBS)})


@app.route('/<verb>', methods=['POST'])
def run_verb(verb):
    if verb not in VERBS:
        return jsonify({"error": "unknown_command", "details": f"no command {verb!r}"}), 404
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        return jsonify({"error": "bad_request", "details": "expected a JSON object body"}), 400
    try:
        flags = _flags_from_json(data)
        report = run(Command(verb, data.get("input"), flags), get_config())
    except FoxDivError as e:
        logger.info("%s failed: %s", verb, e)
        return jsonify(error_payload(e)), 422 if e.exit_code == 1 else 400
    return jsonify(report.payload), 200 if report.exit_code == 0 else 422


@app.route('/archive/<fingerprint>', methods=['GET'])
def archive(fingerprint):
    db_path = get_config().get("archive_db")
    completion = database.latest_completion(fingerprint, db_path)
    witnesses = database.witnesses_for(fingerprint, db_path)
    if completion is None and not witnesses:
        return jsonify({"error": "not_found", "details": "nothing archived for this fingerprint"}), 404
    return jsonify({"fingerprint": fingerprint, "completion": completion, "witnesses": witnesses})


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description='Run the foxdiv HTTP API.')
    parser.add_argument('--port', type=int, default=5002,
                        help='The port to run the application on.')
    args = parser.parse_args()
    setup_logging()
    app.run(debug=False, port=args.port)

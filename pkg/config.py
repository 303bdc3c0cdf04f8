import json
import logging
import os
import sys

CONFIG_FILE = 'config.json'

DEFAULT_CONFIG = {
    "max_rules": 500,
    "max_steps": 100000,
    "max_degree": 24,
    "workers": 1,
    "log_file": None,
    "archive_db": os.path.join("instance", "foxdiv.db"),
}

LOG_LEVELS = {
    "off": None,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}


def get_config():
    """Loads configuration from the JSON file, falling back to defaults."""
    path = os.environ.get("FOXDIV_CONFIG", CONFIG_FILE)
    config = dict(DEFAULT_CONFIG)
    try:
        with open(path, 'r') as f:
            loaded = json.load(f)
    except (FileNotFoundError, json.JSONDecodeError):
        return config
    if isinstance(loaded, dict):
        config.update({k: v for k, v in loaded.items() if k in DEFAULT_CONFIG})
    return config


def save_config(data, path=None):
    """Saves configuration to the JSON file."""
    with open(path or os.environ.get("FOXDIV_CONFIG", CONFIG_FILE), 'w') as f:
        json.dump(data, f, indent=4)


def setup_logging(config=None):
    """Configure the root logger from FOXDIV_LOG (off, info, debug); records go to stderr, never stdout."""
    config = config or get_config()
    level_name = os.environ.get("FOXDIV_LOG", "off").strip().lower()
    if level_name not in LOG_LEVELS:
        sys.stderr.write(f"foxdiv: unknown FOXDIV_LOG value {level_name!r} (expected off, info or debug), logging stays off\n")
    level = LOG_LEVELS.get(level_name)
    if level is None:
        logging.disable(logging.CRITICAL)
        return
    logging.disable(logging.NOTSET)
    handlers = [logging.StreamHandler(sys.stderr)]
    if config.get("log_file"):
        handlers.append(logging.FileHandler(config["log_file"]))
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(levelname)s - [foxdiv] - %(message)s',
        handlers=handlers,
        force=True,
    )

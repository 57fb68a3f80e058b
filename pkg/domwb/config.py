import logging
import os
from pathlib import Path

from dotenv import load_dotenv

_log = logging.getLogger(__name__)

BUDGET_ENV_VAR = "DOMWB_BUDGET"
TAB_LIMIT_ENV_VAR = "DOMWB_TAB_LIMIT"

DEFAULT_BUDGET = 5000
DEFAULT_TAB_LIMIT = 2

_dotenv_loaded = False


def setup_env(dotenv_paths: list[str] | None = None):
    """
    Load `.env` files so the DOMWB_* variables can be configured without exporting them.

    Variables already present in the environment are never overridden.

    Parameters
    ----------
    dotenv_paths : list[str] | None, optional
        Candidate .env files, by default `./.env` and `$HOME/.env`.
    """
    global _dotenv_loaded
    if _dotenv_loaded:
        return

    if dotenv_paths is None:
        dotenv_paths = [
            os.path.join(os.getcwd(), ".env"),
            os.path.join(str(Path.home()), ".env"),
        ]

    for dotenv_path in dotenv_paths:
        if os.path.isfile(dotenv_path):
            load_dotenv(dotenv_path=dotenv_path, override=False)
            _log.debug(f"Loaded environment from {dotenv_path}")
    _dotenv_loaded = True


def get_int_setting(name: str, default: int) -> int:
    """
    Read a non-negative integer setting from the environment.

    Parameters
    ----------
    name : str
        Name of the environment variable.
    default : int
        Value used when the variable is unset or empty.

    Returns
    -------
    int
        The configured value.
    """
    setup_env()
    raw_value = os.environ.get(name, None)
    if raw_value is None or raw_value.strip() == "":
        return default

    try:
        value = int(raw_value)
    except ValueError:
        e = ValueError(f"{name} must be an integer, got {raw_value!r}")
        _log.error(e)
        raise e

    if value < 0:
        e = ValueError(f"{name} must be non-negative, got {value}")
        _log.error(e)
        raise e
    return value


def get_enumeration_budget() -> int:
    """Maximum number of elements a single enumeration may produce."""
    return get_int_setting(BUDGET_ENV_VAR, DEFAULT_BUDGET)


def get_default_tab_limit() -> int:
    return get_int_setting(TAB_LIMIT_ENV_VAR, DEFAULT_TAB_LIMIT)

import os
from configparser import ConfigParser
from pathlib import Path
from typing import Iterable, List, Union

DEFAULT_PATH = Path(__file__).with_name("config.ini")
ENV_VAR = "SCHURPOS_CONFIG"


def config_loader(path: Union[str, Path, Iterable[Union[str, Path]]] = DEFAULT_PATH) -> ConfigParser:
    """Read ``config.ini`` (or the given files, later ones winning) into a `ConfigParser`.

    Parameters:
        path (`str` | `Path` | `Iterable`): One file or several to layer on top of each other.

    Returns:
        `ConfigParser`: Keys are case-insensitive, ``#`` and ``;`` start comments.
    """
    parser = ConfigParser(comment_prefixes=("#", ";"))
    parser.read(path)
    return parser


def _csv(value: str) -> List[str]:
    return [item.strip() for item in value.split(",")]


cfg = config_loader(os.environ.get(ENV_VAR, DEFAULT_PATH))
_app, _common, _cors, _docs = cfg["APP"], cfg["COMMON"], cfg["CORS"], cfg["DOCS"]
_sampling, _limits = cfg["SAMPLING"], cfg["LIMITS"]

# [APP]
APP_NAME: str = _app["NAME"]
"""Shown in ``--version`` and as the OpenAPI title."""
APP_VERSION: str = _app["VERSION"]
APP_DESCRIPTION: str = _app["DESCRIPTION"]
"""CLI help text and OpenAPI description."""

# [COMMON]
DEBUG: bool = _common.getboolean("DEBUG")
"""FastAPI debug mode, tracebacks in error pages."""
LOG_LEVEL: str = _common.get("LOG_LEVEL", "WARNING").upper()
"""Level of the root logger for the CLI and the web app."""

# [CORS]
ORIGINS: List[str] = _csv(_cors["ORIGINS"])
ALLOW_CREDENTIALS: bool = _cors.getboolean("ALLOW_CREDENTIALS")
ALLOW_METHODS: List[str] = _csv(_cors["ALLOW_METHODS"])
ALLOW_HEADERS: List[str] = _csv(_cors["ALLOW_HEADERS"])

# [DOCS]
DOCS_URL: str = _docs["URL"]
"""Where the swagger UI is served."""
OPENAPI_URL: str = _docs["OPENAPI_URL"]
DOCS_TITLE: str = _docs["TITLE"]

# [SAMPLING]
DEFAULT_SEED: int = _sampling.getint("SEED")
"""Seed used by `sample` when none is given."""
DEFAULT_SAMPLES: int = _sampling.getint("SAMPLES")
WORKERS: int = _sampling.getint("WORKERS")
"""Worker processes for Monte Carlo sampling (1 runs in-process)."""

# [LIMITS]
MAX_DEGREE: int = _limits.getint("MAX_DEGREE")
"""Largest degree accepted by the HTTP endpoints."""
MAX_SAMPLES: int = _limits.getint("MAX_SAMPLES")

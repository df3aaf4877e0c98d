"""
Stored simulation defaults: flag > stored file > environment > built-in.
"""

import os
from contextlib import suppress
from typing import Optional

import typer
from pydantic import ValidationError

from .constants import C_DEFAULT_RUNS, C_DEFAULT_SEED, C_DEFAULT_WORKERS
from .errors import ClientSideValidationError, ConfigLoadError
from .models import SimulationDefaults

APP_DIR = typer.get_app_dir("wager")
ENV_PREFIX = "WAGER_"


def get_defaults_path():
    return os.path.join(APP_DIR, "defaults.json")


def builtin_defaults():
    return SimulationDefaults(
        runs=C_DEFAULT_RUNS,
        seed=C_DEFAULT_SEED,
        workers=C_DEFAULT_WORKERS,
    )


def _load_from_env():

    data = builtin_defaults().dict()
    for name in data:
        value = os.environ.get(ENV_PREFIX + name.upper())
        if value is not None:
            data[name] = value

    try:
        return SimulationDefaults(**data)
    except ValidationError as e:
        raise ClientSideValidationError(e.errors()) from e


def load_stored_defaults() -> Optional[SimulationDefaults]:

    path = get_defaults_path()

    try:
        res = SimulationDefaults.parse_file(path)

    except FileNotFoundError:
        return None

    except ValueError as e:
        raise ConfigLoadError(path) from e

    return res


def load_defaults() -> SimulationDefaults:
    return load_stored_defaults() or _load_from_env()


def save_defaults(defaults: SimulationDefaults):
    os.makedirs(os.path.dirname(get_defaults_path()), exist_ok=True)
    with open(get_defaults_path(), "w", encoding="utf-8") as f:
        f.write(defaults.json())


def remove_defaults():
    with suppress(FileNotFoundError):
        os.remove(get_defaults_path())


def load_default_seed():
    return load_defaults().seed


def load_default_runs():
    return load_defaults().runs


def load_default_workers():
    return load_defaults().workers

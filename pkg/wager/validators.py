import math
import os
from typing import List, Optional, Tuple

from typer import BadParameter

from .constants import C_MAX_SEED


def string(value: Optional[str]):

    if value is None:
        return value

    value = value.strip()
    if len(value) > 0:
        return value

    raise BadParameter("Empty string not allowed")


def file_read_required(value: Optional[str]):

    if value is None:
        return value

    value = value.strip()
    if not os.path.isfile(value):
        raise BadParameter("No such file")

    return value


def positive_int(value: Optional[int]):

    if value is None:
        return None

    if value <= 0:
        raise BadParameter("Positive integer required")

    return value


def open_probability(value: Optional[float]):

    if value is None:
        return None

    if not (0.0 < value < 1.0):
        raise BadParameter("Value in the open interval (0, 1) required")

    return value


def open_probabilities(values: Optional[List[float]]):
    return [open_probability(v) for v in values] if values else values


def fractions(values: Optional[List[float]]):

    if not values:
        return values

    for value in values:
        if not (0.0 < value <= 1.0):
            raise BadParameter("Fractions must satisfy 0 < fraction ≤ 1")

    return values


def positive_ints(values: Optional[List[int]]):
    return [positive_int(v) for v in values] if values else values


def nonnegative_float(value: Optional[float]):

    if value is None:
        return None

    if not (math.isfinite(value) and value >= 0):
        raise BadParameter("Nonnegative number required")

    return value


def seed(value: Optional[int]):

    if value is None:
        return None

    if not (0 <= value <= C_MAX_SEED):
        raise BadParameter(f"Seed must satisfy 0 ≤ seed ≤ {C_MAX_SEED}")

    return value


def prior_pair(value: Optional[str]) -> Optional[Tuple[float, float]]:

    if value is None:
        return None

    parts = [part.strip() for part in value.split(",")]
    if len(parts) != 2:
        raise BadParameter("Prior must be given as 'a,b', e.g. '1,1'")

    try:
        a, b = float(parts[0]), float(parts[1])
    except ValueError as e:
        raise BadParameter("Prior pseudo-counts must be numbers") from e

    if not all(math.isfinite(v) and v > 0 for v in (a, b)):
        raise BadParameter("Prior pseudo-counts must be positive")

    return a, b


def record_format(value: Optional[str]):

    if value is None:
        return value

    # typer hands enum-typed options to callbacks already converted
    value = getattr(value, "value", value)

    if value not in ("csv", "json"):
        raise BadParameter("Sweep records are written as csv or json")

    return value

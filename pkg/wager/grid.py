"""
Sweep grid files.

Flat text, one `key = value[, value ...]` per line, `#` starts a comment.
See docs/grid-format.md for the keys and their meaning.
"""

from decimal import Decimal, InvalidOperation
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from .errors import GridParseError
from .models import PriorShape, SweepGrid

# Grid file key -> SweepGrid field
FIELDS = {
    "p": "p_values",
    "n": "n_values",
    "m_fractions": "m_fractions",
    "alpha": "alpha_values",
    "confidence": "alpha_values",
    "prior_shapes": "prior_shapes",
    "k_fractions": "k_fractions",
    "priors": "priors",
    "penalty": "abstain_penalty",
    "runs": "runs",
    "seed": "master_seed",
}

REQUIRED_KEYS = ["p", "n", "m_fractions"]
SCALAR_KEYS = ["penalty", "runs", "seed"]
OPTIONAL_LIST_KEYS = ["prior_shapes", "k_fractions", "priors"]


########################################
# Value parsers
########################################


def _parse_float(token: str) -> float:
    try:
        return float(Decimal(token))
    except InvalidOperation as e:
        raise ValueError(f"'{token}' is not a number") from e


def _parse_int(token: str) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ValueError(f"'{token}' is not an integer") from e


def _parse_confidence(token: str) -> float:
    try:
        return float(1 - Decimal(token))
    except InvalidOperation as e:
        raise ValueError(f"'{token}' is not a number") from e


def _parse_shape(token: str) -> PriorShape:
    try:
        return PriorShape(token)
    except ValueError as e:
        names = ", ".join(s.value for s in PriorShape)
        raise ValueError(f"'{token}' is not a prior shape ({names})") from e


def _parse_prior(token: str) -> Tuple[float, float]:
    parts = token.split(":")
    if len(parts) != 2:
        raise ValueError(f"'{token}' is not an 'a:b' pair")
    return _parse_float(parts[0]), _parse_float(parts[1])


PARSERS: Dict[str, Callable[[str], object]] = {
    "p": _parse_float,
    "n": _parse_int,
    "m_fractions": _parse_float,
    "alpha": _parse_float,
    "confidence": _parse_confidence,
    "prior_shapes": _parse_shape,
    "k_fractions": _parse_float,
    "priors": _parse_prior,
    "penalty": _parse_float,
    "runs": _parse_int,
    "seed": _parse_int,
}


########################################
# Parse
########################################


def _split_values(value: str) -> List[str]:
    return [token.strip() for token in value.split(",") if token.strip()]


def parse_grid(text: str, fallback: Optional[dict] = None) -> SweepGrid:

    """
    Parse grid file text. Keys missing from the file are taken from
    `fallback` (SweepGrid field names), then from SweepGrid defaults
    """

    values: Dict[str, object] = {}
    lines: Dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        key, sep, value = line.partition("=")
        key = key.strip()

        if not sep:
            raise GridParseError(lineno, key, "expected 'key = value'")

        if key not in PARSERS:
            raise GridParseError(lineno, key, "unknown key")

        field = FIELDS[key]
        if field in values:
            raise GridParseError(lineno, key, "duplicate key")

        tokens = _split_values(value)
        if not tokens and key not in OPTIONAL_LIST_KEYS:
            raise GridParseError(lineno, key, "value required")

        if key in SCALAR_KEYS and len(tokens) != 1:
            raise GridParseError(lineno, key, "exactly one value required")

        try:
            parsed = [PARSERS[key](token) for token in tokens]
        except ValueError as e:
            raise GridParseError(lineno, key, str(e)) from e

        values[field] = parsed[0] if key in SCALAR_KEYS else parsed
        lines[field] = lineno

    last_line = len(text.splitlines())
    for key in REQUIRED_KEYS + ["alpha"]:
        if FIELDS[key] not in values:
            shown = "alpha' or 'confidence" if key == "alpha" else key
            raise GridParseError(last_line, shown, "missing key")

    if "prior_shapes" not in values and "priors" not in values:
        values["prior_shapes"] = [PriorShape.uniform]

    for field, value in (fallback or {}).items():
        values.setdefault(field, value)

    try:
        return SweepGrid(**values)
    except ValidationError as e:
        error = e.errors()[0]
        field = str(error["loc"][0])
        if field == "__root__":
            field = "prior_shapes"
        key = next((k for k, f in FIELDS.items() if f == field), field)
        raise GridParseError(lines.get(field, last_line), key, error["msg"]) from e


########################################
# Format
########################################


def _join(values: list) -> str:
    return ", ".join(values)


def format_grid(grid: SweepGrid) -> str:

    """Grid file text which parses back to an equivalent grid"""

    priors = [f"{a!r}:{b!r}" for a, b in grid.priors]

    lines = [
        "# wager sweep grid",
        f"p = {_join([repr(v) for v in grid.p_values])}",
        f"n = {_join([str(v) for v in grid.n_values])}",
        f"m_fractions = {_join([repr(v) for v in grid.m_fractions])}",
        f"alpha = {_join([repr(v) for v in grid.alpha_values])}",
        f"prior_shapes = {_join([s.value for s in grid.prior_shapes])}",
        f"k_fractions = {_join([repr(v) for v in grid.k_fractions])}",
        f"priors = {_join(priors)}",
        f"penalty = {grid.abstain_penalty!r}",
        f"runs = {grid.runs}",
        f"seed = {grid.master_seed}",
    ]

    return "\n".join(lines) + "\n"

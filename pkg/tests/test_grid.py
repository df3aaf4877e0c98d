import pytest
from pydantic import ValidationError

from wager.errors import GridParseError
from wager.grid import format_grid, parse_grid
from wager.harness import count_cells, default_grid
from wager.models import PriorShape, SweepGrid
from wager.tables import TABLES

TINY = """
# one cell
p = 0.5
n = 20
m_fractions = 0.5
alpha = 0.1   # Conf level 0.9
runs = 10
seed = 7
"""


def test_parse_tiny_grid():
    grid = parse_grid(TINY)
    assert grid.p_values == [0.5]
    assert grid.n_values == [20]
    assert grid.prior_shapes == [PriorShape.uniform]
    assert (grid.runs, grid.master_seed) == (10, 7)
    assert count_cells(grid) == 1


def test_confidence_key_gives_alpha():
    grid = parse_grid(TINY.replace("alpha = 0.1", "confidence = 0.95, 0.99"))
    assert grid.alpha_values == [0.05, 0.01]


def test_fallback_fills_missing_keys():
    text = "p = 0.5\nn = 10\nm_fractions = 1.0\nalpha = 0.2\n"
    grid = parse_grid(text, {"runs": 42, "master_seed": 9})
    assert (grid.runs, grid.master_seed) == (42, 9)

    grid = parse_grid(TINY, {"runs": 42})
    assert grid.runs == 10


def test_explicit_priors():
    grid = parse_grid(TINY + "priors = 2:3, 0.5:0.5\n")
    assert grid.priors == [(2.0, 3.0), (0.5, 0.5)]
    assert grid.prior_shapes == []
    assert count_cells(grid) == 2


def test_grid_model_needs_some_prior():
    fields = dict(p_values=[0.5], n_values=[10], m_fractions=[1.0], alpha_values=[0.1])
    assert SweepGrid(**fields, priors=[(1.0, 2.0)]).prior_shapes == []

    with pytest.raises(ValidationError, match="at least one prior"):
        SweepGrid(**fields)


@pytest.mark.parametrize(
    "grid",
    [default_grid(100, 20240101)] + [spec.grid(10, 5, 0.01) for spec in TABLES.values()],
)
def test_format_round_trip(grid):
    assert parse_grid(format_grid(grid)) == grid


@pytest.mark.parametrize(
    "text, line, key",
    [
        (TINY + "colour = red\n", 9, "colour"),
        (TINY + "p = 0.3\n", 9, "p"),
        (TINY + "n\n", 9, "n"),
        (TINY.replace("n = 20", "n = twenty"), 4, "n"),
        (TINY.replace("n = 20", "n = 0"), 4, "n"),
        (TINY.replace("p = 0.5", "p = 1.5"), 3, "p"),
        (TINY.replace("runs = 10", "runs = 1, 2"), 7, "runs"),
        (TINY + "prior_shapes = tails\n", 9, "prior_shapes"),
        (TINY + "prior_shapes = flat\n", 9, "prior_shapes"),
        (TINY + "priors = 1-2\n", 9, "priors"),
    ],
)
def test_parse_errors_name_line_and_key(text, line, key):
    with pytest.raises(GridParseError) as info:
        parse_grid(text)

    assert info.value.line == line
    assert info.value.key == key
    assert f"Grid line {line}, key '{key}'" in str(info.value)


def test_missing_key():
    with pytest.raises(GridParseError, match="missing key"):
        parse_grid("p = 0.5\nn = 10\nalpha = 0.1\n")

"""
Reproduction of the published tables at 10000 runs per cell.
Run with: pytest --runslow tests/test_reproduction.py
"""

import math

import pytest

from wager.harness import resolve_m
from wager.models import AgentKind
from wager.tables import OVERALL, reproduce_table

RUNS = 10000
SEED = 42
WORKERS = 4
TOLERANCE = 0.05

pytestmark = pytest.mark.slow

BAYES, CONF, SAMPLE = AgentKind.bayes, AgentKind.conf, AgentKind.sample


@pytest.fixture(scope="module")
def table_two():
    return reproduce_table(2, RUNS, SEED, WORKERS)


def assert_gap(better, worse, sigmas=3):
    combined = math.sqrt(better.std_error**2 + worse.std_error**2)
    assert better.mean - worse.mean > sigmas * combined


@pytest.mark.parametrize(
    "p, kind, expected",
    [(0.1, CONF, 0.5395), (0.1, BAYES, 0.4002), (0.9, CONF, 0.5467)],
)
def test_table_two_spot_values(table_two, p, kind, expected):
    cell = table_two.find(p, "50").agents[kind]
    assert cell.mean == pytest.approx(expected, abs=TOLERANCE)


def test_bayes_wins_short_games(table_two):
    row = table_two.find(OVERALL, "3")
    assert_gap(row.agents[BAYES], row.agents[CONF])


@pytest.mark.parametrize("n", ["30", "50"])
def test_conf_wins_long_games(table_two, n):
    row = table_two.find(OVERALL, n)
    assert_gap(row.agents[CONF], row.agents[BAYES])
    assert_gap(row.agents[CONF], row.agents[SAMPLE])


def test_conf_per_actual_bet_in_every_cell(table_two):
    for row in table_two.rows:
        conf = row.agents[CONF]
        m = resolve_m(0.5, int(row.value))
        if conf.bets < m and conf.mean >= 0:
            assert conf.per_actual >= conf.mean - 3 * conf.std_error, (row.p, row.value)


@pytest.mark.parametrize("n", ["20", "30", "50"])
def test_conf_per_actual_bet(table_two, n):
    row = table_two.find(OVERALL, n)
    conf = row.agents[CONF]
    assert conf.per_actual >= conf.mean
    assert conf.per_actual > row.agents[BAYES].per_actual


def test_conf_decays_with_tokens():
    table = reproduce_table(3, RUNS, SEED, WORKERS)
    means = [row.agents[CONF].mean for row in table.overall()]
    assert [row.value for row in table.overall()] == ["2", "6", "10", "14", "20"]
    assert all(a > b for a, b in zip(means, means[1:]))


def test_conf_decays_with_confidence():
    table = reproduce_table(4, RUNS, SEED, WORKERS)
    low = table.find(OVERALL, "0.7").agents[CONF]
    high = table.find(OVERALL, "0.99").agents[CONF]
    assert_gap(low, high)


def test_matching_prior_wins():
    table = reproduce_table(5, RUNS, SEED, WORKERS)

    def bayes(p, prior):
        return table.find(p, prior).agents[BAYES].mean

    assert bayes(0.1, "(1,11)") > bayes(0.1, "(11,1)")
    assert bayes(0.9, "(11,1)") > bayes(0.9, "(1,11)")

    overall = {row.value: row.agents[BAYES].mean for row in table.overall()}
    assert max(overall, key=overall.get) == "(1,1)"

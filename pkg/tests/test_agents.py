from types import SimpleNamespace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wager.agents import (
    BayesState,
    ConfState,
    SampleState,
    bayes_action,
    conf_action,
    observe,
    sample_action,
    wants_token,
)
from wager.models import Action, AgentKind, Outcome
from wager.stats import (
    BetaParams,
    ConfidenceInterval,
    Counts,
    beta_mean,
    confidence_interval,
)

prices = st.floats(min_value=1e-9, max_value=1 - 1e-9)
counts = st.builds(
    Counts,
    st.integers(min_value=0, max_value=30),
    st.integers(min_value=0, max_value=30),
)


def fixed_interval(lower, upper):
    return SimpleNamespace(interval=ConfidenceInterval(lower, upper, 0.9))


########################################
# Bayes
########################################


def test_bayes_buys_at_mean():
    state = BayesState(BetaParams(1, 1))
    assert bayes_action(state, 0.5) == Action.buy
    assert bayes_action(state, 0.5 - 1e-9) == Action.buy


def test_bayes_sells_above_mean():
    state = BayesState(BetaParams(3, 7))
    assert bayes_action(state, 0.7) == Action.sell


@given(prior_a=st.floats(0.5, 20), prior_b=st.floats(0.5, 20), evidence=counts, price=prices)
def test_bayes_never_holds(prior_a, prior_b, evidence, price):
    state = BayesState(BetaParams(prior_a, prior_b), evidence)
    action = state.action(price)
    assert action != Action.hold

    # Buying when its expected payoff is not worse than selling
    mean = beta_mean(state.posterior)
    assert (action == Action.buy) == (mean - price >= price - mean)


########################################
# Conf
########################################


def test_conf_holds_in_total_ignorance():
    assert conf_action(ConfState(0.1), 0.5) == Action.hold


@pytest.mark.parametrize(
    "price, expected",
    [
        (0.1, Action.buy),
        (0.2, Action.hold),
        (0.3, Action.hold),
        (0.4, Action.hold),
        (0.5, Action.sell),
    ],
)
def test_conf_bounds_are_strict(price, expected):
    assert conf_action(fixed_interval(0.2, 0.4), price) == expected


@given(evidence=counts, price=prices, alpha=st.sampled_from([0.5, 0.1, 0.01]))
def test_conf_holds_exactly_inside_interval(evidence, price, alpha):
    state = ConfState(alpha, evidence)
    interval = confidence_interval(evidence, alpha)
    holds = state.action(price) == Action.hold
    assert holds == interval.contains(price)


########################################
# Sample
########################################


@pytest.mark.parametrize(
    "evidence, price, expected",
    [
        (Counts(3, 1), 0.75, Action.buy),
        (Counts(1, 3), 0.5, Action.sell),
        (Counts(0, 0), 0.4, Action.buy),
        (Counts(0, 0), 0.6, Action.sell),
    ],
)
def test_sample_action(evidence, price, expected):
    assert sample_action(SampleState(evidence), price) == expected


########################################
# Observation
########################################


def test_observe_increments_one_count():
    state = observe(SampleState(Counts(3, 1)), Outcome.heads)
    assert state.evidence == Counts(4, 1)


def test_observe_bayes_tails():
    state = observe(BayesState(BetaParams(1, 1)), Outcome.tails)
    assert state.evidence == Counts(0, 1)
    assert state.posterior == BetaParams(1, 2)
    assert state.prior == BetaParams(1, 1)


def test_observe_conf_head():
    state = observe(ConfState(0.1), Outcome.heads)
    assert state.evidence == Counts(1, 0)
    assert state.alpha == 0.1
    assert state.interval.lower == pytest.approx(0.05, abs=1e-10)


def test_conf_interval_recomputed_from_counts():
    state = ConfState(0.1)
    outcomes = [Outcome.heads, Outcome.tails, Outcome.heads, Outcome.heads]
    for outcome in outcomes:
        state = observe(state, outcome)

    assert state.interval == confidence_interval(Counts(3, 1), 0.1)


########################################
# Tokens
########################################


def test_bayes_waits_for_last_trials():
    assert not wants_token(AgentKind.bayes, 1, 20, 10, 10, Action.buy)
    assert not wants_token(AgentKind.bayes, 10, 20, 10, 10, Action.buy)
    assert wants_token(AgentKind.bayes, 11, 20, 10, 10, Action.sell)
    assert wants_token(AgentKind.sample, 20, 20, 10, 1, Action.buy)


def test_conf_bets_whenever_it_can():
    assert not wants_token(AgentKind.conf, 3, 20, 10, 5, Action.hold)
    assert not wants_token(AgentKind.conf, 3, 20, 10, 0, Action.buy)
    assert wants_token(AgentKind.conf, 1, 20, 10, 10, Action.sell)


def test_no_token_no_bet():
    for kind in AgentKind:
        assert not wants_token(kind, 20, 20, 10, 0, Action.buy)

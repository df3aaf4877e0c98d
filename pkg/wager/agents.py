"""
Decision rules of the three players and their evidence updating.

Agent states are immutable values: observing an outcome returns a new
state. Bayes and Sample always have an opinion (Buy or Sell) and spend
their tokens on the last m trials; Conf holds whenever the price falls
inside its confidence interval and bets whenever it can otherwise.
"""

from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field, replace
from typing import TypeVar

from .models import Action, AgentKind, Outcome
from .stats import (
    BetaParams,
    ConfidenceInterval,
    Counts,
    beta_mean,
    beta_posterior,
    confidence_interval,
)

SAMPLE_FALLBACK_PROPORTION = 0.5


class AgentState(metaclass=ABCMeta):

    kind: AgentKind
    evidence: Counts

    @abstractmethod
    def action(self, price: float) -> Action:
        pass


State = TypeVar("State", bound=AgentState)


@dataclass(frozen=True)
class BayesState(AgentState):
    prior: BetaParams
    evidence: Counts = field(default_factory=Counts)
    kind = AgentKind.bayes

    @property
    def posterior(self) -> BetaParams:
        return beta_posterior(self.prior, self.evidence)

    def action(self, price: float) -> Action:
        return bayes_action(self, price)


@dataclass(frozen=True)
class ConfState(AgentState):
    alpha: float
    evidence: Counts = field(default_factory=Counts)
    kind = AgentKind.conf

    @property
    def interval(self) -> ConfidenceInterval:
        return confidence_interval(self.evidence, self.alpha)

    def action(self, price: float) -> Action:
        return conf_action(self, price)


@dataclass(frozen=True)
class SampleState(AgentState):
    evidence: Counts = field(default_factory=Counts)
    kind = AgentKind.sample

    @property
    def proportion(self) -> float:
        if self.evidence.total == 0:
            return SAMPLE_FALLBACK_PROPORTION
        return self.evidence.heads / self.evidence.total

    def action(self, price: float) -> Action:
        return sample_action(self, price)


########################################
# Decisions
########################################


def bayes_action(state: BayesState, price: float) -> Action:
    # Expected payoff of buying (x - t) beats selling (t - x); ties buy
    if price <= beta_mean(state.posterior):
        return Action.buy
    return Action.sell


def conf_action(state: ConfState, price: float) -> Action:
    interval = state.interval
    if price < interval.lower:
        return Action.buy
    if price > interval.upper:
        return Action.sell
    return Action.hold


def sample_action(state: SampleState, price: float) -> Action:
    if price <= state.proportion:
        return Action.buy
    return Action.sell


def observe(state: State, outcome: Outcome) -> State:
    heads = outcome == Outcome.heads
    return replace(state, evidence=state.evidence.add(heads))


########################################
# Token scheduling
########################################


def wants_token(
    kind: AgentKind,
    trial_index: int,
    n: int,
    m: int,
    tokens_left: int,
    action: Action,
) -> bool:

    """
    Whether the agent spends a token on this trial.
    When False, the agent's effective action is Hold
    """

    if tokens_left <= 0:
        return False

    if kind == AgentKind.conf:
        return action != Action.hold

    # Bayes and Sample save their tokens for the last m trials
    return trial_index > n - m

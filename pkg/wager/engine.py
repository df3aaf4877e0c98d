"""
One complete game of the ticket market.

Each trial posts a uniformly random ticket price and tosses a coin with
chance of heads p. Every agent decides from its current state, the token
budget gates whether the decision takes effect, payoffs follow the
ticket rules, and afterwards all agents observe the outcome.

The generator is consumed in a fixed order: price, then toss, per trial.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from pydantic import ValidationError

from .agents import AgentState, BayesState, ConfState, SampleState, observe, wants_token
from .errors import ConfigError
from .models import AGENT_ORDER, Action, AgentKind, GameConfig, Outcome

logger = logging.getLogger(__name__)

# Replaces an exact zero draw so that prices stay inside (0, 1)
MIN_PRICE = 2.0**-54


########################################
# Types
########################################


@dataclass(frozen=True)
class Trial:
    index: int
    price: float
    outcome: Outcome

    def __post_init__(self):
        if not (0.0 < self.price < 1.0):
            raise ConfigError(f"ticket price must lie in (0, 1), got {self.price}")
        if self.index < 1:
            raise ConfigError(f"trial index must be positive, got {self.index}")


class LedgerEntry(NamedTuple):
    index: int
    action: Action
    payoff: float
    penalty: float = 0.0


@dataclass(frozen=True)
class AgentResult:
    kind: AgentKind
    m: int
    ledger: Tuple[LedgerEntry, ...]

    @property
    def total_profit(self) -> float:
        payoffs = sum(entry.payoff for entry in self.ledger)
        return payoffs - sum(entry.penalty for entry in self.ledger)

    @property
    def bets_placed(self) -> int:
        return sum(1 for entry in self.ledger if entry.action != Action.hold)

    @property
    def penalized_holds(self) -> int:
        return sum(1 for entry in self.ledger if entry.penalty > 0)

    @property
    def profit_per_allowed_bet(self) -> float:
        return profit_metrics(self, self.m)[0]

    @property
    def profit_per_actual_bet(self) -> float:
        return profit_metrics(self, self.m)[1]


@dataclass(frozen=True)
class GameResult:
    config: GameConfig
    trials: Tuple[Trial, ...]
    agents: Dict[AgentKind, AgentResult]

    def agent(self, kind: AgentKind) -> AgentResult:
        return self.agents[kind]


def new_game_config(**fields) -> GameConfig:

    """Build a GameConfig, reporting violated invariants as ConfigError"""

    try:
        return GameConfig(**fields)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise ConfigError(messages) from e


########################################
# Rules
########################################


def payoff(action: Action, outcome: Outcome, price: float) -> float:

    """
    Ticket pays $1 on heads. Buying costs price,
    selling collects it and pays out on heads
    """

    if action == Action.buy:
        return 1.0 - price if outcome == Outcome.heads else -price

    if action == Action.sell:
        return -(1.0 - price) if outcome == Outcome.heads else price

    return 0.0


def _to_trial(index: int, price_draw: float, toss_draw: float, p: float):
    price = float(price_draw) or MIN_PRICE
    outcome = Outcome.heads if toss_draw < p else Outcome.tails
    return Trial(index, price, outcome)


def sample_trial(rng: np.random.Generator, p: float, index: int = 1) -> Trial:
    price_draw, toss_draw = rng.random(2)
    return _to_trial(index, price_draw, toss_draw, p)


def generate_trials(rng: np.random.Generator, p: float, n: int) -> List[Trial]:
    # Row-major fill keeps the price-then-toss order of sample_trial
    draws = rng.random((n, 2))
    return [_to_trial(i + 1, price, toss, p) for i, (price, toss) in enumerate(draws)]


def initial_states(config: GameConfig) -> Dict[AgentKind, AgentState]:
    states = {
        AgentKind.sample: SampleState(),
        AgentKind.bayes: BayesState(config.prior),
        AgentKind.conf: ConfState(config.alpha),
    }
    return {kind: states[kind] for kind in AGENT_ORDER}


########################################
# Game
########################################


def _check_trials(config: GameConfig, trials: Sequence[Trial]):
    if len(trials) != config.n:
        raise ConfigError(f"expected {config.n} trials, got {len(trials)}")

    for expected, trial in enumerate(trials, start=1):
        if trial.index != expected:
            raise ConfigError(f"trial {expected} has index {trial.index}")


def run_game(
    config: GameConfig,
    rng: Optional[np.random.Generator] = None,
    trials: Optional[Iterable[Trial]] = None,
) -> GameResult:

    """
    Play one game. Trials come either from the generator
    or from an injected sequence (for hand-traced games)
    """

    if trials is None:
        if rng is None:
            raise ConfigError("either a generator or injected trials required")
        trials = generate_trials(rng, config.p, config.n)

    trials = tuple(trials)
    _check_trials(config, trials)

    n, m = config.n, config.m
    penalty = config.abstain_penalty

    states = initial_states(config)
    tokens = {kind: m for kind in states}
    ledgers: Dict[AgentKind, List[LedgerEntry]] = {kind: [] for kind in states}

    for trial in trials:
        for kind, state in states.items():

            action = state.action(trial.price)
            if wants_token(kind, trial.index, n, m, tokens[kind], action):
                tokens[kind] -= 1
                value = payoff(action, trial.outcome, trial.price)
            else:
                action = Action.hold
                value = 0.0

            charge = 0.0
            if kind == AgentKind.conf and penalty > 0 and tokens[kind] > 0:
                if action == Action.hold:
                    charge = penalty

            ledgers[kind].append(LedgerEntry(trial.index, action, value, charge))

        # Agents learn from every outcome, bet or not
        states = {kind: observe(state, trial.outcome) for kind, state in states.items()}

    agents = {
        kind: AgentResult(kind=kind, m=m, ledger=tuple(ledger))
        for kind, ledger in ledgers.items()
    }

    return GameResult(config=config, trials=trials, agents=agents)


def profit_metrics(result: AgentResult, m: int) -> Tuple[float, float]:

    """
    Profit per allowed bet (total / m) and per actual bet
    (total / bets placed, 0 when no bet was placed)
    """

    if m < 1:
        raise ConfigError("m must be a positive integer")

    total = result.total_profit
    bets = result.bets_placed

    per_allowed = total / m
    per_actual = total / bets if bets > 0 else 0.0
    return per_allowed, per_actual

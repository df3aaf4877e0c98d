import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field, root_validator, validator

from .constants import C_MAX_SEED
from .stats import BetaParams


class OutputMode(str, Enum):
    human = "human"
    json = "json"


class OutputFormat(str, Enum):
    csv = "csv"
    json = "json"
    human = "human"


class Verbosity(str, Enum):
    none = "none"
    info = "info"
    warning = "warning"
    error = "error"
    debug = "debug"


class Action(str, Enum):
    buy = "Buy"
    sell = "Sell"
    hold = "Hold"


class Outcome(str, Enum):
    heads = "H"
    tails = "T"


class AgentKind(str, Enum):

    sample = "Sample"
    """ Bets by the raw sample proportion """

    bayes = "Bayes"
    """ Bets by the posterior mean of a beta belief """

    conf = "Conf"
    """ Bets only when the price leaves its confidence interval """


AGENT_ORDER = (AgentKind.sample, AgentKind.bayes, AgentKind.conf)


class PriorShape(str, Enum):

    uniform = "uniform"
    """ (1, 1) """

    tails = "tails"
    """ (1, k + 1), favors tails """

    heads = "heads"
    """ (k + 1, 1), favors heads """

    symmetric = "symmetric"
    """ (k + 1, k + 1), favors a fair coin """


PRIOR_SHAPE_ORDER = (
    PriorShape.uniform,
    PriorShape.tails,
    PriorShape.heads,
    PriorShape.symmetric,
)


########################################
# Game
########################################


def _open_unit(name: str, value: float):
    if not (0.0 < value < 1.0):
        raise ValueError(f"{name} must satisfy 0 < {name} < 1")
    return value


class GameConfig(BaseModel):

    """Parameters of one experiment cell"""

    p: float
    """ True chance of heads """

    n: int
    """ Number of trials """

    m: int
    """ Token budget: max number of bets per agent """

    alpha: float
    """ Conf plays at confidence level 1 - alpha """

    prior_a: float = 1.0
    prior_b: float = 1.0
    """ Bayes prior beta(a, b) """

    abstain_penalty: float = 0.0
    """ Charged to Conf for every hold while tokens remain """

    class Config:
        frozen = True

    @validator("p")
    def check_p(cls, value: float):
        return _open_unit("p", value)

    @validator("alpha")
    def check_alpha(cls, value: float):
        return _open_unit("alpha", value)

    @validator("n")
    def check_n(cls, value: int):
        if value < 1:
            raise ValueError("n must be a positive integer")
        return value

    @validator("prior_a", "prior_b")
    def check_prior(cls, value: float):
        if not (math.isfinite(value) and value > 0):
            raise ValueError("prior pseudo-counts must be positive")
        return value

    @validator("abstain_penalty")
    def check_penalty(cls, value: float):
        if not (math.isfinite(value) and value >= 0):
            raise ValueError("abstain_penalty must be nonnegative")
        return value

    @root_validator(skip_on_failure=True)
    def check_budget(cls, values: dict):
        if not (1 <= values["m"] <= values["n"]):
            raise ValueError("m must satisfy 1 ≤ m ≤ n")
        return values

    @property
    def prior(self) -> BetaParams:
        return BetaParams(self.prior_a, self.prior_b)

    def describe(self) -> str:
        return (
            f"p={self.p:g} n={self.n} m={self.m} alpha={self.alpha:g} "
            f"prior=({self.prior_a:g},{self.prior_b:g})"
        )


########################################
# Aggregates
########################################


class AgentSummary(BaseModel):

    mean_profit_per_allowed_bet: float
    """ Headline metric: total profit / m, averaged over runs """

    std_error: float = Field(ge=0)
    """ Standard error of the mean above """

    mean_bets_placed: float = Field(ge=0)

    mean_profit_per_actual_bet: float
    """ Total profit / bets placed (0 with no bets), averaged over runs """

    std_error_per_actual: float = Field(ge=0)


class CellSummary(BaseModel):
    config: GameConfig
    runs: int = Field(ge=1)
    seed: int
    agents: Dict[AgentKind, AgentSummary]

    def agent(self, kind: AgentKind) -> AgentSummary:
        return self.agents[kind]


class OutputRecord(BaseModel):

    """One row per (cell, agent) of sweep output"""

    p: float
    n: int
    m: int
    alpha: float
    prior_a: float
    prior_b: float
    agent: AgentKind
    mean_profit_per_allowed_bet: float
    std_error: float
    mean_bets_placed: float
    runs: int
    seed: int

    @validator("*")
    def check_finite(cls, value):
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError("numeric fields must be finite")
        return value

    @classmethod
    def columns(cls) -> List[str]:
        return list(cls.__fields__.keys())


########################################
# Sweep grid
########################################


class SweepGrid(BaseModel):

    """Cross-product of experiment parameters"""

    p_values: List[float]
    n_values: List[int]
    m_fractions: List[float]
    alpha_values: List[float]
    prior_shapes: List[PriorShape] = []
    k_fractions: List[float] = []
    priors: List[Tuple[float, float]] = []
    """ Explicit priors, enumerated after the shape-derived ones """

    runs: int = Field(100, ge=1)
    master_seed: int = Field(0, ge=0, le=C_MAX_SEED)
    abstain_penalty: float = Field(0.0, ge=0)

    @validator("p_values", "alpha_values", each_item=True)
    def check_open_unit(cls, value: float):
        return _open_unit("value", value)

    @validator("m_fractions", "k_fractions", each_item=True)
    def check_fraction(cls, value: float):
        if not (0.0 < value <= 1.0):
            raise ValueError("fraction must satisfy 0 < fraction ≤ 1")
        return value

    @validator("n_values", each_item=True)
    def check_trials(cls, value: int):
        if value < 1:
            raise ValueError("n must be a positive integer")
        return value

    @validator("priors", each_item=True)
    def check_explicit_prior(cls, value: Tuple[float, float]):
        if not all(math.isfinite(v) and v > 0 for v in value):
            raise ValueError("prior pseudo-counts must be positive")
        return value

    @validator("p_values", "n_values", "m_fractions", "alpha_values")
    def check_not_empty(cls, value: list):
        if not value:
            raise ValueError("at least one value required")
        return value

    @root_validator(skip_on_failure=True)
    def check_priors(cls, values: dict):
        shapes = values["prior_shapes"]
        if not shapes and not values["priors"]:
            raise ValueError("at least one prior shape or explicit prior required")

        k_dependent = [s for s in shapes if s != PriorShape.uniform]
        if k_dependent and not values["k_fractions"]:
            raise ValueError("prior shapes other than uniform need k_fractions")

        return values


########################################
# Stored defaults
########################################


class SimulationDefaults(BaseModel):
    runs: int = Field(ge=1)
    seed: int = Field(ge=0, le=C_MAX_SEED)
    workers: int = Field(ge=1)

    def display_dict(self):
        return self.dict()


@dataclass
class AppContext:
    verbosity: Verbosity
    output_mode: OutputMode

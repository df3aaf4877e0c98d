"""
Parameter-grid sweeps and Monte Carlo aggregation.

A sweep enumerates the cross-product of a SweepGrid in list order
(p, n, m fraction, alpha, prior), runs every cell `runs` times and keeps
only the per-agent aggregates. Every run draws its own generator from
(master seed, cell id, run index), so results do not depend on how the
cells are scheduled over worker processes.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from decimal import ROUND_HALF_UP, Decimal
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from .engine import run_game
from .errors import ConfigError
from .models import (
    AgentKind,
    AgentSummary,
    CellSummary,
    GameConfig,
    PriorShape,
    SweepGrid,
)
from .seeding import run_generator, run_seed, stream_key
from .stats import BetaParams, log_interval_cache

logger = logging.getLogger(__name__)

DEFAULT_P_VALUES = [0.1, 0.3, 0.5, 0.7, 0.9]
DEFAULT_N_VALUES = [3, 5, 10, 20, 30, 50]
DEFAULT_FRACTIONS = [0.1, 0.3, 0.5, 0.7, 1.0]
DEFAULT_ALPHAS = [0.5, 0.4, 0.3, 0.2, 0.1, 0.05, 0.01]
DEFAULT_PRIOR_SHAPES = [
    PriorShape.uniform,
    PriorShape.tails,
    PriorShape.heads,
    PriorShape.symmetric,
]


def default_grid(runs: int = 100, master_seed: int = 0) -> SweepGrid:

    """Full experimental design: 16800 cells"""

    return SweepGrid(
        p_values=DEFAULT_P_VALUES,
        n_values=DEFAULT_N_VALUES,
        m_fractions=DEFAULT_FRACTIONS,
        alpha_values=DEFAULT_ALPHAS,
        prior_shapes=DEFAULT_PRIOR_SHAPES,
        k_fractions=DEFAULT_FRACTIONS,
        runs=runs,
        master_seed=master_seed,
    )


########################################
# Parameter resolution
########################################


def _scaled(fraction: float, n: int) -> int:
    if not (0.0 < fraction <= 1.0):
        raise ConfigError(f"fraction must satisfy 0 < fraction ≤ 1, got {fraction}")
    if n < 1:
        raise ConfigError(f"n must be a positive integer, got {n}")

    # Decimal of the shortest repr keeps 0.7 * 5 at exactly 3.5
    product = Decimal(repr(fraction)) * n
    return int(product.quantize(Decimal(1), rounding=ROUND_HALF_UP))


def resolve_m(fraction: float, n: int) -> int:
    return max(1, _scaled(fraction, n))


def resolve_k(k_fraction: float, n: int) -> int:
    # k = 0 is allowed: every shape then collapses to (1, 1)
    return _scaled(k_fraction, n)


def shape_prior(shape: PriorShape, k: int) -> BetaParams:
    if shape == PriorShape.tails:
        return BetaParams(1, k + 1)
    if shape == PriorShape.heads:
        return BetaParams(k + 1, 1)
    if shape == PriorShape.symmetric:
        return BetaParams(k + 1, k + 1)
    return BetaParams(1, 1)


def resolve_priors(k_fraction: float, n: int) -> Tuple[BetaParams, ...]:

    """The four prior shapes (1,1), (1,k+1), (k+1,1), (k+1,k+1)"""

    k = resolve_k(k_fraction, n)
    return tuple(shape_prior(shape, k) for shape in DEFAULT_PRIOR_SHAPES)


def grid_priors(grid: SweepGrid, n: int) -> List[BetaParams]:

    result = []
    if PriorShape.uniform in grid.prior_shapes:
        result.append(BetaParams(1, 1))

    shapes = [s for s in grid.prior_shapes if s != PriorShape.uniform]
    for k_fraction in grid.k_fractions:
        k = resolve_k(k_fraction, n)
        result.extend(shape_prior(shape, k) for shape in shapes)

    result.extend(BetaParams(a, b) for a, b in grid.priors)
    return result


def enumerate_cells(grid: SweepGrid) -> List[GameConfig]:

    cells = []
    for p in grid.p_values:
        for n in grid.n_values:
            priors = grid_priors(grid, n)
            for fraction in grid.m_fractions:
                m = resolve_m(fraction, n)
                for alpha in grid.alpha_values:
                    for prior in priors:
                        config = GameConfig(
                            p=p,
                            n=n,
                            m=m,
                            alpha=alpha,
                            prior_a=prior.a,
                            prior_b=prior.b,
                            abstain_penalty=grid.abstain_penalty,
                        )
                        cells.append(config)

    return cells


def count_cells(grid: SweepGrid) -> int:
    per_n = [len(grid_priors(grid, n)) for n in grid.n_values]
    rest = len(grid.p_values) * len(grid.m_fractions) * len(grid.alpha_values)
    return rest * sum(per_n)


########################################
# Monte Carlo
########################################


def _mean_and_error(values: np.ndarray) -> Tuple[float, float]:
    mean = float(np.mean(values))
    if len(values) < 2:
        return mean, 0.0
    return mean, float(np.std(values, ddof=1) / math.sqrt(len(values)))


def run_cell(
    config: GameConfig,
    runs: int,
    master_seed: int,
    cell_id: Optional[int] = None,
) -> CellSummary:

    """
    Play `runs` independent games of one cell and aggregate per agent.
    By default the cell id is the trial stream key of (p, n)
    """

    if runs < 1:
        raise ConfigError(f"runs must be a positive integer, got {runs}")

    if cell_id is None:
        cell_id = stream_key(config.p, config.n)

    per_allowed: Dict[AgentKind, List[float]] = {}
    per_actual: Dict[AgentKind, List[float]] = {}
    bets: Dict[AgentKind, List[int]] = {}

    for run_index in range(runs):
        rng = run_generator(run_seed(master_seed, cell_id, run_index))
        result = run_game(config, rng)

        for kind, agent in result.agents.items():
            allowed, actual = agent.profit_per_allowed_bet, agent.profit_per_actual_bet
            per_allowed.setdefault(kind, []).append(allowed)
            per_actual.setdefault(kind, []).append(actual)
            bets.setdefault(kind, []).append(agent.bets_placed)

    agents = {}
    for kind in per_allowed:
        mean, error = _mean_and_error(np.asarray(per_allowed[kind]))
        mean_actual, error_actual = _mean_and_error(np.asarray(per_actual[kind]))

        agents[kind] = AgentSummary(
            mean_profit_per_allowed_bet=mean,
            std_error=error,
            mean_bets_placed=float(np.mean(bets[kind])),
            mean_profit_per_actual_bet=mean_actual,
            std_error_per_actual=error_actual,
        )

    logger.debug("Cell %s: cell_id=%#018x runs=%d", config.describe(), cell_id, runs)
    return CellSummary(config=config, runs=runs, seed=master_seed, agents=agents)


def _run_cell_task(task: Tuple[GameConfig, int, int]) -> CellSummary:
    config, runs, master_seed = task
    return run_cell(config, runs, master_seed)


def iter_sweep(grid: SweepGrid, workers: int = 1) -> Iterator[CellSummary]:

    """
    Yield one CellSummary per cell, always in enumeration order.
    Cells are spread over `workers` processes when workers > 1
    """

    if workers < 1:
        raise ConfigError(f"workers must be a positive integer, got {workers}")

    cells = enumerate_cells(grid)
    tasks = [(config, grid.runs, grid.master_seed) for config in cells]
    logger.info("Sweep: %d cells x %d runs, %d worker(s)", len(cells), grid.runs, workers)

    if workers == 1:
        for task in tasks:
            yield _run_cell_task(task)
    else:
        chunksize = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as executor:
            yield from executor.map(_run_cell_task, tasks, chunksize=chunksize)

    log_interval_cache()
    logger.info("Sweep finished: %d cells", len(cells))


def sweep(
    grid: SweepGrid,
    workers: int = 1,
    progress: Optional[Callable[[CellSummary], None]] = None,
) -> List[CellSummary]:

    summaries = []
    for summary in iter_sweep(grid, workers):
        summaries.append(summary)
        if progress:
            progress(summary)

    return summaries

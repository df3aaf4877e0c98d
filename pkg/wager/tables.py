"""
Reproduction of the published result tables.

Each table is a sweep grid with all but one parameter fixed. Rows are
grouped per chance of heads p, followed by an "Overall" block averaging
each row over p with equal weight.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Union

from pydantic import BaseModel

from .errors import UnknownTableError
from .harness import DEFAULT_ALPHAS, DEFAULT_FRACTIONS, DEFAULT_N_VALUES, DEFAULT_P_VALUES, sweep
from .models import AGENT_ORDER, AgentKind, CellSummary, GameConfig, PriorShape, SweepGrid

OVERALL = "Overall"


@dataclass(frozen=True)
class TableSpec:
    table_id: int
    caption: str
    parameter: str
    """ Column title of the varying parameter """

    grid: Callable[..., SweepGrid]
    label: Callable[[GameConfig], str]


def _grid(**fields) -> Callable[..., SweepGrid]:
    def build(runs: int, master_seed: int, abstain_penalty: float = 0.0):
        return SweepGrid(
            runs=runs,
            master_seed=master_seed,
            abstain_penalty=abstain_penalty,
            **fields,
        )

    return build


TABLES: Dict[int, TableSpec] = {
    2: TableSpec(
        table_id=2,
        caption="Net profit per allowed bet, varying the number of trials n "
        "(m = 0.5n, alpha = 0.1, prior beta(1,1))",
        parameter="n",
        grid=_grid(
            p_values=DEFAULT_P_VALUES,
            n_values=DEFAULT_N_VALUES,
            m_fractions=[0.5],
            alpha_values=[0.1],
            prior_shapes=[PriorShape.uniform],
        ),
        label=lambda config: str(config.n),
    ),
    3: TableSpec(
        table_id=3,
        caption="Net profit per allowed bet, varying the number of tokens m "
        "(n = 20, alpha = 0.1, prior beta(1,1))",
        parameter="m",
        grid=_grid(
            p_values=DEFAULT_P_VALUES,
            n_values=[20],
            m_fractions=DEFAULT_FRACTIONS,
            alpha_values=[0.1],
            prior_shapes=[PriorShape.uniform],
        ),
        label=lambda config: str(config.m),
    ),
    4: TableSpec(
        table_id=4,
        caption="Net profit per allowed bet, varying the level of confidence "
        "1 - alpha (n = 20, m = 10, prior beta(1,1))",
        parameter="1-alpha",
        grid=_grid(
            p_values=DEFAULT_P_VALUES,
            n_values=[20],
            m_fractions=[0.5],
            alpha_values=DEFAULT_ALPHAS,
            prior_shapes=[PriorShape.uniform],
        ),
        label=lambda config: f"{1 - config.alpha:.2f}".rstrip("0"),
    ),
    5: TableSpec(
        table_id=5,
        caption="Net profit per allowed bet, varying the prior beta(a,b) "
        "(n = 20, m = 10, alpha = 0.1)",
        parameter="(a,b)",
        grid=_grid(
            p_values=DEFAULT_P_VALUES,
            n_values=[20],
            m_fractions=[0.5],
            alpha_values=[0.1],
            prior_shapes=[
                PriorShape.uniform,
                PriorShape.heads,
                PriorShape.tails,
                PriorShape.symmetric,
            ],
            k_fractions=[0.5],
        ),
        label=lambda config: f"({config.prior_a:g},{config.prior_b:g})",
    ),
}


def get_table_spec(table_id: int) -> TableSpec:
    try:
        return TABLES[table_id]
    except KeyError as e:
        raise UnknownTableError(table_id, sorted(TABLES)) from e


########################################
# Models
########################################


class AgentCell(BaseModel):
    mean: float
    std_error: float
    per_actual: float
    bets: float


class TableRow(BaseModel):
    p: Union[float, str]
    """ Chance of heads, or "Overall" """

    value: str
    """ Label of the varying parameter """

    agents: Dict[AgentKind, AgentCell]


class Table(BaseModel):
    table_id: int
    caption: str
    parameter: str
    runs: int
    seed: int
    rows: List[TableRow]

    @classmethod
    def columns(cls) -> List[str]:
        columns = ["p", "value"]
        for kind in AGENT_ORDER:
            name = kind.value.lower()
            columns.extend(
                [name, f"{name}_std_error", f"{name}_per_actual", f"{name}_bets"]
            )
        return columns

    def flat_rows(self) -> List[dict]:

        result = []
        for row in self.rows:
            flat = {"p": row.p, "value": row.value}
            for kind in AGENT_ORDER:
                name = kind.value.lower()
                cell = row.agents[kind]
                flat[name] = cell.mean
                flat[f"{name}_std_error"] = cell.std_error
                flat[f"{name}_per_actual"] = cell.per_actual
                flat[f"{name}_bets"] = cell.bets
            result.append(flat)

        return result

    def overall(self) -> List[TableRow]:
        return [row for row in self.rows if row.p == OVERALL]

    def find(self, p: Union[float, str], value: str) -> TableRow:
        for row in self.rows:
            if row.p == p and row.value == value:
                return row
        raise KeyError(f"no row p={p}, value={value}")


########################################
# Build
########################################


def _cell_row(summary: CellSummary, label: str) -> TableRow:
    agents = {}
    for kind, agent in summary.agents.items():
        agents[kind] = AgentCell(
            mean=agent.mean_profit_per_allowed_bet,
            std_error=agent.std_error,
            per_actual=agent.mean_profit_per_actual_bet,
            bets=agent.mean_bets_placed,
        )
    return TableRow(p=summary.config.p, value=label, agents=agents)


def _overall_row(rows: List[TableRow]) -> TableRow:

    # Equal weight per p; errors of independent means combine in quadrature
    count = len(rows)
    agents = {}
    for kind in AGENT_ORDER:
        cells = [row.agents[kind] for row in rows]
        agents[kind] = AgentCell(
            mean=sum(c.mean for c in cells) / count,
            std_error=math.sqrt(sum(c.std_error**2 for c in cells)) / count,
            per_actual=sum(c.per_actual for c in cells) / count,
            bets=sum(c.bets for c in cells) / count,
        )

    return TableRow(p=OVERALL, value=rows[0].value, agents=agents)


def build_table(
    spec: TableSpec,
    summaries: List[CellSummary],
    runs: int,
    master_seed: int,
) -> Table:

    p_count = len({s.config.p for s in summaries})
    per_p = len(summaries) // p_count

    rows = [_cell_row(s, spec.label(s.config)) for s in summaries]

    overall = []
    for j in range(per_p):
        overall.append(_overall_row([rows[i * per_p + j] for i in range(p_count)]))

    return Table(
        table_id=spec.table_id,
        caption=spec.caption,
        parameter=spec.parameter,
        runs=runs,
        seed=master_seed,
        rows=rows + overall,
    )


def reproduce_table(
    table_id: int,
    runs: int,
    master_seed: int,
    workers: int = 1,
    abstain_penalty: float = 0.0,
    progress: Optional[Callable[[CellSummary], None]] = None,
) -> Table:

    spec = get_table_spec(table_id)
    grid = spec.grid(runs, master_seed, abstain_penalty)
    summaries = sweep(grid, workers, progress)
    return build_table(spec, summaries, runs, master_seed)

from typing import Optional

import typer

from wager import output, validators
from wager.callback import DefaultRunsCallback, DefaultSeedCallback, DefaultWorkersCallback
from wager.harness import count_cells
from wager.helper import open_output, progressbar
from wager.models import AGENT_ORDER, AppContext, OutputFormat, OutputMode
from wager.output import render_list
from wager.records import table_to_csv, table_to_json
from wager.tables import Table, get_table_spec, reproduce_table

FORMATS = [e.value for e in OutputFormat]

########################################
# Rendering
########################################


def render_table_human(table: Table) -> str:

    columns = [("p", "p"), ("value", table.parameter)]
    for kind in AGENT_ORDER:
        name = kind.value.lower()
        columns.append((name, kind.value))
        columns.append((f"{name}_std_error", "± se"))

    columns.append(("conf_per_actual", "Conf per actual bet"))
    columns.append(("conf_bets", "Conf bets"))

    caption = f"Table {table.table_id}: {table.caption}"
    details = f"runs={table.runs}, seed={table.seed}"
    return f"{caption}\n{details}\n{render_list(table.flat_rows(), columns)}\n"


def render_table(table: Table, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.csv:
        return table_to_csv(table)
    if fmt == OutputFormat.json:
        return table_to_json(table)
    return render_table_human(table)


########################################
# Reproduce table
########################################


def table(
    ctx: typer.Context,
    table_id: int = typer.Option(
        ...,
        "--id",
        help="Table to reproduce: 2 (trials n), 3 (tokens m), "
        "4 (confidence 1 - alpha), 5 (priors)",
    ),
    runs: int = typer.Option(
        None,
        "--runs",
        callback=DefaultRunsCallback(),
        help="Games per cell. 100 matches the published tables",
    ),
    seed: int = typer.Option(
        None,
        "--seed",
        callback=DefaultSeedCallback(),
        help="Master seed",
    ),
    workers: int = typer.Option(
        None,
        "--workers",
        callback=DefaultWorkersCallback(),
        help="Worker processes. Output does not depend on it",
    ),
    fmt: OutputFormat = typer.Option(
        OutputFormat.csv.value,
        "--format",
        autocompletion=lambda: FORMATS,
        metavar=f"[{'|'.join(FORMATS)}]",
        help="Output format",
    ),
    penalty: float = typer.Option(
        0.0,
        "--penalty",
        callback=validators.nonnegative_float,
        help="Charge Conf this much for every hold while tokens remain",
    ),
    out: Optional[str] = typer.Option(
        None,
        "--out",
        help="Write to file instead of stdout",
    ),
):
    app_ctx: AppContext = ctx.obj
    spec = get_table_spec(table_id)

    show_progress = out is not None and app_ctx.output_mode == OutputMode.human
    length = count_cells(spec.grid(runs, seed))

    with open_output(out) as f:
        with progressbar(f"Table {table_id}", length, show_progress) as progress:
            result = reproduce_table(table_id, runs, seed, workers, penalty, progress)

        f.write(render_table(result, fmt))

    if out is not None:
        output.success(f"Table {table_id} written to '{out}'")


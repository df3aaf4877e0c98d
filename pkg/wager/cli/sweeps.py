from typing import List, Optional

import typer
from pydantic import ValidationError

from wager import output, validators
from wager.callback import DefaultWorkersCallback
from wager.defaults import load_defaults
from wager.errors import ClientSideValidationError
from wager.grid import format_grid, parse_grid
from wager.harness import count_cells, default_grid, iter_sweep
from wager.helper import open_output, progressbar, read_text, write_text
from wager.models import AppContext, OutputFormat, OutputMode, PriorShape, SweepGrid
from wager.records import RecordWriter, to_output_records
from wager.tables import get_table_spec

FORMATS = [OutputFormat.csv.value, OutputFormat.json.value]
SHAPES = [e.value for e in PriorShape]

########################################
# App
########################################

app_grid = typer.Typer(name="grid", help="Sweep grid files")

########################################
# Utils
########################################


def load_grid(
    grid_path: Optional[str],
    overrides: dict,
) -> SweepGrid:

    """
    Grid from file (or the full default grid), then flag overrides.
    Precedence: flag > grid file > stored defaults
    """

    defaults = load_defaults()

    if grid_path:
        fallback = {"runs": defaults.runs, "master_seed": defaults.seed}
        grid = parse_grid(read_text(grid_path), fallback)
    else:
        grid = default_grid(defaults.runs, defaults.seed)

    updates = {k: v for k, v in overrides.items() if v is not None and v != [] and v != ()}
    if not updates:
        return grid

    try:
        return SweepGrid(**{**grid.dict(), **updates})
    except ValidationError as e:
        raise ClientSideValidationError(e.errors()) from e


########################################
# Sweep
########################################


def sweep(
    ctx: typer.Context,
    grid_path: Optional[str] = typer.Option(
        None,
        "--grid",
        callback=validators.file_read_required,
        help="Grid file. Default: the full published design (16800 cells)",
    ),
    p: Optional[List[float]] = typer.Option(
        None,
        "--p",
        callback=validators.open_probabilities,
        help="Chance of heads values (repeatable). Overrides the grid",
    ),
    n: Optional[List[int]] = typer.Option(
        None,
        "--n",
        callback=validators.positive_ints,
        help="Trial counts (repeatable). Overrides the grid",
    ),
    m_fractions: Optional[List[float]] = typer.Option(
        None,
        "--m-fraction",
        callback=validators.fractions,
        help="Token budgets as fractions of n (repeatable). Overrides the grid",
    ),
    alpha: Optional[List[float]] = typer.Option(
        None,
        "--alpha",
        callback=validators.open_probabilities,
        help="Conf alpha values (repeatable). Overrides the grid",
    ),
    prior_shapes: Optional[List[PriorShape]] = typer.Option(
        None,
        "--prior-shape",
        autocompletion=lambda: SHAPES,
        metavar=f"[{'|'.join(SHAPES)}]",
        help="Prior shapes (repeatable). Overrides the grid",
    ),
    k_fractions: Optional[List[float]] = typer.Option(
        None,
        "--k-fraction",
        callback=validators.fractions,
        help="Prior strengths k as fractions of n (repeatable). Overrides the grid",
    ),
    runs: Optional[int] = typer.Option(
        None,
        "--runs",
        callback=validators.positive_int,
        help="Games per cell. Overrides the grid file and stored defaults",
    ),
    seed: Optional[int] = typer.Option(
        None,
        "--seed",
        callback=validators.seed,
        help="Master seed. Overrides the grid file and stored defaults",
    ),
    penalty: Optional[float] = typer.Option(
        None,
        "--penalty",
        callback=validators.nonnegative_float,
        help="Charge Conf this much for every hold while tokens remain",
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
        callback=validators.record_format,
        autocompletion=lambda: FORMATS,
        metavar=f"[{'|'.join(FORMATS)}]",
        help="Output format",
    ),
    out: Optional[str] = typer.Option(
        None,
        "--out",
        help="Write to file instead of stdout",
    ),
):
    app_ctx: AppContext = ctx.obj

    overrides = {
        "p_values": p,
        "n_values": n,
        "m_fractions": m_fractions,
        "alpha_values": alpha,
        "prior_shapes": prior_shapes,
        "k_fractions": k_fractions,
        "runs": runs,
        "master_seed": seed,
        "abstain_penalty": penalty,
    }

    grid = load_grid(grid_path, overrides)

    show_progress = out is not None and app_ctx.output_mode == OutputMode.human
    cells = count_cells(grid)

    with open_output(out) as f:
        writer = RecordWriter(f, fmt.value)
        with progressbar("Cells", cells, show_progress) as progress:
            for summary in iter_sweep(grid, workers):
                writer.write(to_output_records(summary))
                progress(summary)
        writer.close()

    if out is not None:
        output.success(f"{cells} cells, {writer.count} rows written to '{out}'")


########################################
# Show grid
########################################


@app_grid.command(
    name="show",
    help="Print a grid file: the full published design or a table's grid",
)
def show_grid(
    table_id: Optional[int] = typer.Option(
        None,
        "--table",
        help="Show the grid behind a reproduction table (2-5)",
    ),
    out: Optional[str] = typer.Option(
        None,
        "--out",
        help="Write to file instead of stdout",
    ),
):
    defaults = load_defaults()

    if table_id is None:
        grid = default_grid(defaults.runs, defaults.seed)
    else:
        grid = get_table_spec(table_id).grid(defaults.runs, defaults.seed)

    text = format_grid(grid)
    if out is None:
        output.result(text.rstrip("\n"))
    else:
        write_text(out, text)
        output.success(f"Grid written to '{out}'")


########################################
# Check grid
########################################


@app_grid.command(
    name="check",
    help="Parse a grid file and report its size",
)
def check_grid(
    ctx: typer.Context,
    grid_path: str = typer.Argument(
        ...,
        callback=validators.file_read_required,
        help="Grid file",
    ),
):
    app_ctx: AppContext = ctx.obj
    output_mode = app_ctx.output_mode

    defaults = load_defaults()
    fallback = {"runs": defaults.runs, "master_seed": defaults.seed}
    grid = parse_grid(read_text(grid_path), fallback)

    data = grid.dict()
    data["cells"] = count_cells(grid)
    data["prior_shapes"] = ", ".join(s.value for s in grid.prior_shapes)

    columns = [
        ("cells", "Cells"),
        ("p_values", "p"),
        ("n_values", "n"),
        ("m_fractions", "m fractions"),
        ("alpha_values", "alpha"),
        ("prior_shapes", "Prior shapes"),
        ("k_fractions", "k fractions"),
        ("priors", "Explicit priors"),
        ("abstain_penalty", "Penalty"),
        ("runs", "Runs"),
        ("master_seed", "Seed"),
    ]

    output.dict_data(data, columns, output_mode)

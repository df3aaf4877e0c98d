import sys

import typer

from wager import output
from wager.cli import config, game, sweeps, tables
from wager.errors import BadParameterError, WagerError, WagerValidationError
from wager.logs import configure_logging
from wager.models import AppContext, OutputMode, Verbosity

app = typer.Typer(
    name="wager",
    help="Ticket market simulator: Bayes vs confidence intervals vs sample proportion",
)

app.command(name="run", help="Play one game and show its ledger")(game.run_game_cmd)
app.command(name="table", help="Reproduce a published result table")(tables.table)
app.command(name="sweep", help="Sweep a parameter grid, one row per cell and agent")(
    sweeps.sweep
)

app.add_typer(sweeps.app_grid)
app.add_typer(config.app)


@app.callback()
def common_options(
    ctx: typer.Context,
    verbosity: str = typer.Option(
        Verbosity.none.value,
        "-v",
        "--verbosity",
        help="Enable logging output. Usually used for debugging",
        autocompletion=lambda: [e.value for e in Verbosity],
        metavar=f"[{'|'.join([e.value for e in Verbosity])}]",
    ),
    output_mode: str = typer.Option(
        OutputMode.human.value,
        "-o",
        "--output-mode",
        help="Choose an output mode. Human-readable by default",
        autocompletion=lambda: [e.value for e in OutputMode],
        metavar=f"[{'|'.join([e.value for e in OutputMode])}]",
    ),
):
    try:
        verbosity = Verbosity(verbosity)
        output_mode = OutputMode(output_mode)
    except ValueError as e:
        raise typer.BadParameter(str(e)) from e

    configure_logging(verbosity)

    ctx.obj = AppContext(
        verbosity=verbosity,
        output_mode=output_mode,
    )


def main():
    try:
        app()
    except WagerValidationError as e:
        output.validation_errors(e)
        sys.exit(1)
    except BadParameterError as e:
        output.bad_parameters(e)
        sys.exit(1)
    except WagerError as e:
        output.error(str(e))
        sys.exit(1)
    else:
        sys.exit(0)

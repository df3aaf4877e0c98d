import typer
from pydantic import ValidationError

from wager import output, validators
from wager.defaults import (
    get_defaults_path,
    load_defaults,
    remove_defaults,
    save_defaults,
)
from wager.errors import ClientSideValidationError
from wager.models import AppContext, SimulationDefaults

########################################
# App
########################################

app = typer.Typer(name="config", help="Manage stored simulation defaults")


########################################
# Autocompletion
########################################


def config_keys():
    return ["runs", "seed", "workers"]


########################################
# Commands
########################################


@app.command(
    name="init",
    help="Store simulation defaults used when flags are absent",
)
def init_config(
    runs: int = typer.Option(
        ...,
        prompt=True,
        callback=validators.positive_int,
        help="Games per cell",
    ),
    seed: int = typer.Option(
        ...,
        prompt=True,
        callback=validators.seed,
        help="Master seed",
    ),
    workers: int = typer.Option(
        ...,
        prompt=True,
        callback=validators.positive_int,
        help="Worker processes",
    ),
):
    try:
        defaults = SimulationDefaults(runs=runs, seed=seed, workers=workers)
    except ValidationError as e:
        raise ClientSideValidationError(e.errors()) from e

    save_defaults(defaults)
    output.success(f"Defaults saved to '{get_defaults_path()}'")


@app.command(
    name="get",
    help="Get default value by name",
)
def get_config_field(
    field_name: str = typer.Argument(
        ...,
        callback=validators.string,
        autocompletion=config_keys,
        help="Name of field to show: runs, seed, workers",
    ),
):
    defaults = load_defaults().dict()

    if field_name not in defaults:
        output.error(f"Unknown field name '{field_name}'")
        raise typer.Exit(code=1)

    output.result(str(defaults[field_name]))


@app.command(
    name="set",
    help="Set default value by name",
)
def set_config_field(
    field_name: str = typer.Argument(
        ...,
        autocompletion=config_keys,
        callback=validators.string,
        help="Name of field to change: runs, seed, workers",
    ),
    field_value: str = typer.Argument(
        ...,
        callback=validators.string,
        help="Value will be set to that field",
    ),
):
    defaults = load_defaults().dict()

    if field_name not in defaults:
        output.error(f"Unknown field name '{field_name}'")
        raise typer.Exit(code=1)

    try:
        defaults.update({field_name: field_value})
        save_defaults(SimulationDefaults(**defaults))

    except ValidationError as e:
        raise ClientSideValidationError(e.errors()) from e

    output.success("Defaults updated successfully")


@app.command(
    name="show",
    help="Show effective defaults",
)
def show_config(ctx: typer.Context):

    app_ctx: AppContext = ctx.obj
    output_mode = app_ctx.output_mode

    columns = [
        ("runs", "Runs"),
        ("seed", "Seed"),
        ("workers", "Workers"),
    ]

    output.dict_data(load_defaults().display_dict(), columns, output_mode)


@app.command(
    name="reset",
    help="Remove stored defaults, falling back to environment and built-ins",
)
def reset_config():
    remove_defaults()
    output.success("Defaults removed")

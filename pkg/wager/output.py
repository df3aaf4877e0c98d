import json
from typing import Any, Dict, List, Tuple

import typer
from pydantic import BaseModel
from pydantic.error_wrappers import display_errors
from tabulate import tabulate

from .constants import C_TABLE_PRECISION
from .errors import BadParameterError, WagerValidationError
from .models import OutputMode

STATUS_OK = "OK"
STATUS_FAILED = "FAILED"
FLOAT_FORMAT = f".{C_TABLE_PRECISION}f"


def success(message: str):
    typer.echo(f"{STATUS_OK} - {message}", err=True)


def error(message: str):
    typer.echo(f"{STATUS_FAILED} - {message}", err=True)


def message(message: str, mode: OutputMode):
    if mode == OutputMode.human:
        typer.echo(message)


def result(value: str):
    typer.echo(value)


def validation_errors(e: WagerValidationError):
    typer.echo(f"{STATUS_FAILED} - {e}\n{display_errors(e.errors)}", err=True)


def _param_opts(ctx: typer.Context, name: str) -> str:
    param = next((p for p in ctx.command.params if p.name == name), None)
    if param is None:
        return f"'{name}'"
    return " / ".join(f"'{opt}'" for opt in param.opts)


def bad_parameters(e: BadParameterError):
    opts = ", ".join([_param_opts(e.ctx, param) for param in e.params])
    typer.echo(f"{STATUS_FAILED} - {e}. See help for {opts}", err=True)


def _default(obj):
    if isinstance(obj, BaseModel):
        return obj.dict()
    raise TypeError()


def _dump_json(data: Any):
    typer.echo(json.dumps(data, default=_default))


def render_list(
    list_of_data: List[Dict[str, Any]],
    columns: List[Tuple[str, str]],
) -> str:

    names, titles = zip(*columns)
    rows = [[data.get(name, "") for name in names] for data in list_of_data]
    return tabulate(rows, headers=titles, tablefmt="psql", floatfmt=FLOAT_FORMAT)


def list_data(
    data: List[Dict[str, Any]],
    columns: List[Tuple[str, str]],
    mode: OutputMode,
):

    if mode == OutputMode.human:
        if not data:
            success("No records. Empty")
            return
        typer.echo(render_list(data, columns))
    else:
        _dump_json(data)


def _dict_data_human(data: Dict[str, Any], columns: List[Tuple[str, str]]):
    rows = [[display_name, data.get(name, "")] for name, display_name in columns]
    typer.echo(tabulate(rows, tablefmt="simple", floatfmt=FLOAT_FORMAT))


def dict_data(
    data: dict,
    columns: List[Tuple[str, str]],
    mode: OutputMode,
):

    if mode == OutputMode.human:
        _dict_data_human(data, columns)
    else:
        _dump_json(data)


def result_json(data: Any):
    _dump_json(data)

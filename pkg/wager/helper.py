import sys
from contextlib import contextmanager
from typing import IO, Iterator, List, Optional

import typer

from .engine import Trial
from .errors import ConfigError, InputReadError, OutputWriteError, TrialFileError
from .models import Outcome


def read_text(filepath: str) -> str:

    try:
        with open(filepath, "r", encoding="utf-8") as f:
            return f.read()

    except OSError as e:
        raise InputReadError(filepath) from e


def write_text(filepath: str, data: str):

    try:
        with open(filepath, "w", encoding="utf-8", newline="") as f:
            f.write(data)

    except OSError as e:
        raise OutputWriteError(filepath) from e


@contextmanager
def open_output(filepath: Optional[str]) -> Iterator[IO]:

    """Yield the output file, or stdout when no path is given"""

    if filepath is None:
        yield sys.stdout
        return

    try:
        f = open(filepath, "w", encoding="utf-8", newline="")
    except OSError as e:
        raise OutputWriteError(filepath) from e

    with f:
        yield f


@contextmanager
def progressbar(label: str, length: int, enabled: bool):

    """Yield a per-item progress callback, a no-op when disabled"""

    if not enabled:
        yield lambda *_: None
        return

    with typer.progressbar(length=length, label=label, file=sys.stderr) as progress:
        yield lambda *_: progress.update(1)


########################################
# Injected trials
########################################


def _parse_outcome(token: str) -> Outcome:
    try:
        return Outcome(token.upper())
    except ValueError as e:
        raise ValueError(f"outcome must be H or T, got '{token}'") from e


def parse_trials(text: str) -> List[Trial]:

    """
    One 'price,outcome' pair per line, outcome is H or T.
    Blank lines and '#' comments are ignored
    """

    trials = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        parts = [part.strip() for part in line.split(",")]
        if len(parts) != 2:
            raise TrialFileError(lineno, "expected 'price,outcome'")

        try:
            price = float(parts[0])
            outcome = _parse_outcome(parts[1])
            trials.append(Trial(len(trials) + 1, price, outcome))

        except ConfigError as e:
            raise TrialFileError(lineno, str(e)) from e

        except ValueError as e:
            raise TrialFileError(lineno, str(e)) from e

    return trials


def format_trials(trials: List[Trial]) -> str:
    return "".join(f"{t.price!r},{t.outcome.value}\n" for t in trials)


def load_trials(filepath: str) -> List[Trial]:
    return parse_trials(read_text(filepath))

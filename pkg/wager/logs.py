import logging

from rich.console import Console
from rich.logging import RichHandler

from .models import Verbosity

LOG_FORMAT = "%(name)s: %(message)s"

_LEVELS = {
    Verbosity.debug: logging.DEBUG,
    Verbosity.info: logging.INFO,
    Verbosity.warning: logging.WARNING,
    Verbosity.error: logging.ERROR,
}


def configure_logging(verbosity: Verbosity):

    """Route library logs to stderr. Results never go through logging"""

    root = logging.getLogger("wager")
    for handler in list(root.handlers):
        root.removeHandler(handler)

    if verbosity == Verbosity.none:
        root.setLevel(logging.CRITICAL + 1)
        root.addHandler(logging.NullHandler())
        return

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=verbosity == Verbosity.debug,
    )
    handler.setFormatter(logging.Formatter(LOG_FORMAT))

    root.setLevel(_LEVELS[verbosity])
    root.addHandler(handler)

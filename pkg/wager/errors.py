class WagerError(Exception):
    """Base exception for all errors of wager"""


class DomainError(WagerError, ValueError):
    def __init__(self, func: str, message: str) -> None:
        super().__init__(f"{func}: {message}")
        self.func = func


class ConvergenceError(WagerError, ArithmeticError):
    def __init__(self, func: str, iterations: int) -> None:
        super().__init__(f"{func}: no convergence after {iterations} iterations")
        self.func = func
        self.iterations = iterations


class ConfigError(WagerError, ValueError):
    """GameConfig invariant is violated"""


class ConfigLoadError(WagerError):
    def __init__(self, path: str) -> None:
        super().__init__(
            f"Stored defaults file is corrupted: '{path}'\n"
            "Please, run 'wager config reset' to resolve the issue"
        )


class GridParseError(WagerError):
    def __init__(self, line: int, key: str, message: str) -> None:
        super().__init__(f"Grid line {line}, key '{key}': {message}")
        self.line = line
        self.key = key


class TrialFileError(WagerError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"Trial file line {line}: {message}")
        self.line = line


class UnknownTableError(WagerError):
    def __init__(self, table_id: int, known: list) -> None:
        known_ids = ", ".join(map(str, known))
        super().__init__(f"Unknown table id {table_id}. Known tables: {known_ids}")
        self.table_id = table_id


class OutputWriteError(WagerError):
    def __init__(self, path: str) -> None:
        super().__init__(f"Failed to open file for writing: '{path}'")
        self.path = path


class InputReadError(WagerError):
    def __init__(self, path: str) -> None:
        super().__init__(f"Failed to open file for reading: '{path}'")
        self.path = path


class BadParameterError(WagerError):
    def __init__(self, ctx, msg: str, *params: str) -> None:
        super().__init__(msg)
        self.params = params
        self.ctx = ctx


class WagerValidationError(WagerError):
    def __init__(self, msg: str, errors: list) -> None:
        super().__init__(msg)
        self.errors = errors


class ClientSideValidationError(WagerValidationError):
    def __init__(self, errors: list) -> None:
        super().__init__("Input data is invalid", errors)

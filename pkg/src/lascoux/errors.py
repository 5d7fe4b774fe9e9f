"""Exception hierarchy shared by the library and the CLI exit codes."""


class LascouxError(Exception):
    exit_code = 1


class InputError(LascouxError, ValueError):
    """Malformed or out-of-domain arguments."""

    exit_code = 1


class ConsistencyError(LascouxError, ArithmeticError):
    """Two independent routes to the same number disagree."""

    exit_code = 2


class ResourceError(LascouxError, RuntimeError):
    """A configured computational budget was exceeded."""

    exit_code = 3

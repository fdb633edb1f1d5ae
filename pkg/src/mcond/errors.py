"""Exception types shared across the package."""


class ModelError(ValueError):
    """Structurally malformed model: bad table shape, out-of-range entry,
    missing operation, violated precondition."""


class SizeCapError(ModelError):
    """A requested construction or sweep exceeds the configured size cap."""


class ModelInconsistencyError(ModelError):
    """A derived object (induced equivalence, quotient map, ...) failed a
    well-definedness check that holds in every genuine model.  Signals that
    the input is not what it claims to be."""


class ParseError(ValueError):
    """Syntax or sort error, with a position for diagnostics."""

    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        self.pos = pos
        self.line = line
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif pos is not None:
            where = f" (at column {pos})"
        super().__init__(message + where)


class EvalError(ValueError):
    """Term evaluation failed: unbound variable or operation the model lacks."""

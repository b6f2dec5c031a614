"""Exception types shared across the package."""


class RelativesError(Exception):
    """Base class for all errors raised by this package."""


class UniverseMismatchError(RelativesError):
    """Two relations on different universe sizes were combined."""


class ParseError(RelativesError):
    """Lexical or syntactic error in a term, formula, or file format."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnboundVariableError(RelativesError):
    """A term was evaluated with a free variable missing from the environment."""


class RelationFileError(RelativesError):
    """Malformed relation file."""


class ProofScriptError(RelativesError):
    """Malformed proof script."""

"""Exception hierarchy.

Input/validation problems derive from :class:`ValueError` (the CLI maps
them to exit status 2); :class:`InternalConsistencyError` signals a bug
and maps to exit status 1.
"""


class EdvlabError(Exception):
    """Base class for all package errors."""


class InvalidTreeError(EdvlabError, ValueError):
    pass


class InvalidEdgeError(EdvlabError, ValueError):
    pass


class NoEdgesError(EdvlabError, ValueError):
    pass


class InvalidArgumentError(EdvlabError, ValueError):
    pass


class InvalidComparisonError(EdvlabError, ValueError):
    pass


class InvalidMoveError(EdvlabError, ValueError):
    pass


class InvalidPairError(EdvlabError, ValueError):
    pass


class PreconditionError(EdvlabError, ValueError):
    """A construction precondition failed; ``condition`` names which one."""

    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition


class ClosureOverflowError(EdvlabError, RuntimeError):
    pass


class InternalConsistencyError(EdvlabError, RuntimeError):
    pass

"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates a documented precondition."""


class UnsupportedCaseError(Exception):
    """The requested parameters fall outside the supported construction cases."""


class SearchSpaceError(Exception):
    """An exhaustive search would exceed its hard guard; results are never truncated."""


class ConsistencyError(Exception):
    """An internal cross-check failed, indicating an invalid arithmetic setup."""

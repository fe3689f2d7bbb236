"""Exception hierarchy shared across the package."""


class QdptsError(Exception):
    """Base class for all package errors."""


class ConfigError(QdptsError):
    """Invalid configuration value (qubit count out of range, bad ratios, ...)."""


class ContractError(QdptsError):
    """Caller violated an operation's contract (shape or dimension mismatch)."""


class NumericError(QdptsError):
    """Non-finite value or lost invariant encountered during computation."""


class DegenerateInputError(QdptsError):
    """Input is degenerate for the requested operation (e.g. zero-norm vector)."""


class UnsupportedGateError(QdptsError):
    """Gate/binding combination outside what the requested routine supports."""


class IngestionError(QdptsError):
    """Malformed input data file."""

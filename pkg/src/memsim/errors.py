"""Exception hierarchy shared across the package."""


class MemsimError(Exception):
    """Base class for all errors raised by memsim."""


class ConfigError(MemsimError, ValueError):
    """Invalid configuration: bad parameter values, malformed config text,
    violated model invariants.

    ``errors`` holds the individual messages when several problems were
    collected in one validation pass.
    """

    def __init__(self, message, errors=None):
        super().__init__(message)
        self.errors = list(errors) if errors is not None else [message]


class DomainError(MemsimError, ValueError):
    """An argument lies outside the admissible domain of an operation
    (state out of bounds, time outside a sampled waveform's span, ...)."""


class NumericalError(MemsimError, ArithmeticError):
    """Integration produced a non-finite value; message carries step context."""

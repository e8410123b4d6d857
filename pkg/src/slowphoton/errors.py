"""Exception types shared across the library and the CLI."""


class ValidityError(ValueError):
    """A formula was requested outside its stated validity regime."""


class ConvergenceError(RuntimeError):
    """A numerical evaluation failed its self-convergence check."""


class ConfigError(ValueError):
    """A scenario config file could not be parsed."""


class UnsupportedWaveformError(ValueError):
    """The requested analytic route does not exist for this waveform."""


class TruncatedSupportWarning(UserWarning):
    """An integration grid does not cover the envelope's support."""

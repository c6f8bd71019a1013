"""Exception types shared across the package."""


class WenoLabError(Exception):
    """Base class for all package errors."""


class ConfigError(WenoLabError, ValueError):
    """Invalid run configuration, unknown problem or scheme name."""


class DegenerateInput(WenoLabError, ValueError):
    """Input that sits on a singularity of a formula (zero wave speed, pole, ...)."""


class NumericalFailure(WenoLabError, ArithmeticError):
    """A run produced a non-finite or non-physical state.

    ``location`` carries the cell index (int or (i, j) tuple) when known.
    """

    def __init__(self, message, location=None, step=None):
        self.message = message
        self.location = location
        self.step = step
        parts = [message]
        if step is not None:
            parts.append(f"step={step}")
        if location is not None:
            parts.append(f"cell={location}")
        super().__init__(" ".join(parts))


class NonConvergence(NumericalFailure):
    """An iterative solve (characteristics, star pressure) did not converge."""


class CacheCorruption(WenoLabError, IOError):
    """A cached reference file failed its checksum."""

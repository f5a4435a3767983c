"""Exception types shared across the package."""


class FilmwavesError(Exception):
    """Base class for errors raised by this package."""


class AdmissibilityError(FilmwavesError, ValueError):
    """A state violates the positivity required by an operation."""

    def __init__(self, state, message="state has a non-positive component"):
        self.state = tuple(state)
        super().__init__(f"{message}: {self.state}")


class InversionError(FilmwavesError, ValueError):
    """Invariant coordinates admit no state on the admissible branch."""


class WrongBranchError(FilmwavesError, ValueError):
    """A wave-curve parameter lies on the wrong side of the start state."""


class BracketError(FilmwavesError, RuntimeError):
    """A root bracket does not contain a sign change.

    Carries the bracket endpoints and the residual values there so a
    caller (or a log reader) can see how the solve failed.
    """

    def __init__(self, lo, hi, f_lo, f_hi, what="root solve"):
        self.lo, self.hi = lo, hi
        self.f_lo, self.f_hi = f_lo, f_hi
        super().__init__(
            f"{what}: no sign change on [{lo:.17g}, {hi:.17g}] "
            f"(F(lo)={f_lo:.17g}, F(hi)={f_hi:.17g})"
        )


class WaveOrderingError(FilmwavesError, RuntimeError):
    """Constructed wave speeds are not monotone for strictly admissible data."""

    def __init__(self, speeds, i):
        self.speeds = tuple(speeds)
        self.index = i
        super().__init__(
            f"wave speeds not monotone: s[{i}]={speeds[i]:.17g} > "
            f"s[{i + 1}]={speeds[i + 1]:.17g} in {self.speeds}"
        )


class CellPositivityError(FilmwavesError, RuntimeError):
    """A cell average left the positive cone during initialization or stepping."""

    def __init__(self, cell, time, values, stage="update"):
        self.cell = cell
        self.time = time
        self.values = tuple(values)
        super().__init__(
            f"non-positive cell average after {stage}: cell {cell} at t={time:.17g}, "
            f"(f, b, g, q)={self.values}"
        )


class ConfigError(FilmwavesError, ValueError):
    """A scenario configuration file or value is invalid."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")

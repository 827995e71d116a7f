"""Exception hierarchy shared across the package."""


class PenscoreError(Exception):
    """Base class for all errors raised by this package."""


class NonFiniteInput(PenscoreError):
    """Input array contains NaN or infinite entries."""


class ZeroVarianceColumn(PenscoreError):
    """A feature column is constant and cannot be standardized."""

    def __init__(self, column: int, name: str | None = None):
        self.column = column
        self.name = name
        label = f"column {column}" if name is None else f"column {column} ({name!r})"
        super().__init__(f"{label} has zero sample variance")


class IndexOutOfRange(PenscoreError, IndexError):
    """Feature index outside [0, d)."""


class CsvParseError(PenscoreError):
    """A CSV cell could not be parsed as a number."""

    def __init__(self, row: int, column: str, value: str):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(
            f"row {row}, column {column!r}: cannot parse {value!r} as a number"
        )


class SolverNotConverged(PenscoreError):
    """Coordinate descent exhausted its sweep budget without meeting the KKT tolerance."""

    def __init__(self, iterations: int, max_violation: float | None = None):
        self.iterations = iterations
        self.max_violation = max_violation
        msg = f"solver did not converge after {iterations} sweeps"
        if max_violation is not None:
            msg += f" (max KKT violation {max_violation:.3e})"
        super().__init__(msg)


class RankDeficientActiveSet(PenscoreError):
    """Gram matrix of the active columns is singular; the projection variance is undefined."""


class RankDeficient(PenscoreError):
    """Design matrix is rank deficient."""


class Underdetermined(PenscoreError):
    """Too few residual degrees of freedom to estimate the noise variance."""


class DegenerateZeroVariance(PenscoreError):
    """Residuals vanish; the response lies in the span of the design."""


class SelectedSetTooLarge(PenscoreError):
    """Cross-validated support too large for an OLS refit on the complementary half."""


class QuadratureNotConverged(PenscoreError):
    """Adaptive quadrature could not reach the requested tolerance."""

"""Exception types shared across the package.

Input problems (bad CSV cells, malformed rows, invalid study configs) map to
CLI exit code 2; numerical failures inside the fitting pipeline map to exit
code 3. Contract violations on library arguments raise plain ``ValueError``.
"""


class InputDataError(Exception):
    """Malformed or unreadable input (CSV, config file)."""


class MalformedRowError(InputDataError):
    """A CSV row does not have the expected number of cells."""


class CellParseError(InputDataError):
    """A CSV cell could not be parsed; carries 1-based row/column position."""

    def __init__(self, row: int, col: int, cell: str):
        self.row = row
        self.col = col
        self.cell = cell
        super().__init__(f"cannot parse cell at row {row}, column {col}: {cell!r}")


class StudyConfigError(InputDataError):
    """A simulation study config violates the schema; names the bad field."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"config field '{field}': {message}")


class IdentifiabilityError(ValueError):
    """The regression design is rank deficient or over-parameterized."""


class NumericalFailureError(Exception):
    """A numerical procedure produced non-finite values or could not proceed."""

    def __init__(self, message: str, iteration: int | None = None):
        self.iteration = iteration
        if iteration is not None:
            message = f"{message} (iteration {iteration})"
        super().__init__(message)


class DegenerateCurveError(NumericalFailureError):
    """The trend curve is constant; all derivatives vanish identically."""

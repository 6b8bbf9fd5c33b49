"""
Exception hierarchy shared by the numeric modules and the CLI
"""
from dataclasses import dataclass
from typing import List, Optional

import numpy as np


class QlgaError(Exception):
    """Base class for every error raised by this package"""


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    site: Optional[int] = None

    def __str__(self) -> str:
        where = f" (site {self.site})" if self.site is not None else ""
        return f"{self.code}{where}: {self.message}"


class ConfigValidationError(QlgaError):
    """A lattice config failed schema or physics checks; carries every violation found"""

    def __init__(self, violations: List[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    @property
    def codes(self) -> List[str]:
        return [v.code for v in self.violations]


class LengthMismatch(QlgaError):
    pass


class CapExceeded(QlgaError):
    pass


class OutOfRange(QlgaError):
    pass


class BadRange(QlgaError):
    pass


class NumericalError(QlgaError):
    """Numerical failure; the CLI maps these to exit status 2"""


class ZeroSpinor(NumericalError):
    pass


class DenominatorNearZero(NumericalError):
    pass


class SingularSystem(NumericalError):
    pass


class ConvergenceFailure(NumericalError):
    def __init__(self, message: str, matrix: Optional[np.ndarray] = None):
        super().__init__(message)
        self.matrix = matrix

"""
One-particle state container
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class State:
    """
    Amplitudes psi(x) = (psi_{-1}(x), psi_{+1}(x)) stored as an (N, 2) complex array.
    Column 0 is the left-mover, column 1 the right-mover.
    """
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.ndim != 2 or amps.shape[1] != 2:
            raise ValueError(f"amplitudes must have shape (N, 2), got {amps.shape}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_vector(cls, vector: np.ndarray) -> "State":
        return cls(np.asarray(vector, dtype=complex).reshape(-1, 2))

    @property
    def size(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def vector(self) -> np.ndarray:
        return self.amplitudes.reshape(-1)

    def probabilities(self) -> np.ndarray:
        """Per-site, per-component probabilities, shape (N, 2)"""
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.sqrt(self.probabilities().sum()))

"""
Time evolution of one-particle states, wave packets and region observables
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
import pandas as pd
from scipy.special import gammaln

from config.constants import TRAJECTORY_COLUMNS
from config.schemas import LatticeConfig, PacketSpec, RuleParams
from lattice_gas.lattice import GlobalOperator, apply_amplitudes, site_params
from lattice_gas.spectral import planewave_spinor
from lattice_gas.state import State
from utils.errors import BadRange, LengthMismatch, OutOfRange

logger = logging.getLogger(__name__)

__all__ = [
    "State",
    "Trajectory",
    "binomial_packet",
    "packet_for_config",
    "plane_wave_state",
    "evolve",
    "region_probability",
    "centroid",
    "mirror_state",
]


def binomial_packet(
    spec: PacketSpec, params: RuleParams, size: int, corner_indices: Iterable[int] = ()
) -> State:
    """
    Square-root-binomial envelope times a plane wave of the local rule.

    psi(x) = C sqrt(binom(w, x - x0 + w/2)) e^{i k0 x} v_hat(k0, epsilon) for |x - x0| <= w/2

    Args:
        spec: packet center, width, carrier wavenumber and branch
        params: rule at the packet's initial support, used for the spinor
        size: lattice size N
        corner_indices: flat basis indices forced to zero (Type II corners)

    Returns:
        normalized State

    Raises:
        OutOfRange when the support leaves the lattice
    """
    half = spec.width // 2
    if spec.x0 - half < 0 or spec.x0 + half > size - 1:
        raise OutOfRange(f"packet support {spec.x0 - half}..{spec.x0 + half} leaves lattice 0..{size - 1}")

    n = np.arange(spec.width + 1)
    log_binom = gammaln(spec.width + 1) - gammaln(n + 1) - gammaln(spec.width - n + 1)
    envelope = np.exp(0.5 * (log_binom - log_binom.max()))
    sites = np.arange(spec.x0 - half, spec.x0 + half + 1)
    spinor = planewave_spinor(spec.k0, spec.epsilon, params).normalized

    amplitudes = np.zeros((size, 2), dtype=complex)
    amplitudes[sites] = (envelope * np.exp(1j * spec.k0 * sites))[:, None] * spinor[None, :]
    flat = amplitudes.reshape(-1)
    for index in corner_indices:
        flat[index] = 0
    norm = np.linalg.norm(amplitudes)
    if norm == 0:
        raise OutOfRange("packet support lies entirely on corner states")
    amplitudes /= norm
    return State(amplitudes)


def packet_for_config(spec: PacketSpec, config: LatticeConfig, op: Optional[GlobalOperator] = None) -> State:
    """Packet built with the rule of the segment containing x0, corners of op zeroed"""
    if not 0 <= spec.x0 < config.size:
        raise OutOfRange(f"packet center {spec.x0} outside lattice 0..{config.size - 1}")
    rule = site_params(config)[spec.x0]
    corners = op.corner_mask if op is not None else ()
    return binomial_packet(spec, rule, config.size, corners)


def plane_wave_state(k: float, epsilon: int, params: RuleParams, size: int) -> State:
    """Unit-norm plane wave v_hat e^{ikx} / sqrt(N)"""
    spinor = planewave_spinor(k, epsilon, params).normalized
    phases = np.exp(1j * k * np.arange(size)) / np.sqrt(size)
    return State(phases[:, None] * spinor[None, :])


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray  # (R,)
    probabilities: np.ndarray  # (R, N, 2)
    norms: np.ndarray  # (R,)
    amplitudes: Optional[np.ndarray] = None  # (R, N, 2) when recorded
    final: Optional[State] = None

    def __len__(self) -> int:
        return len(self.times)

    def total_probabilities(self) -> np.ndarray:
        """p_total per recorded time and site, shape (R, N)"""
        return self.probabilities.sum(axis=2)

    def norm_drift(self) -> float:
        return float(np.abs(self.norms - self.norms[0]).max()) if len(self) else 0.0

    def to_frame(self) -> pd.DataFrame:
        """Long table in (t, x) order"""
        rows, size = self.probabilities.shape[:2]
        p = self.probabilities.reshape(rows * size, 2)
        return pd.DataFrame(
            {
                "t": np.repeat(self.times, size),
                "x": np.tile(np.arange(size), rows),
                "p_minus": p[:, 0],
                "p_plus": p[:, 1],
                "p_total": p[:, 0] + p[:, 1],
            },
            columns=TRAJECTORY_COLUMNS,
        )


def evolve(
    op: GlobalOperator, state: State, steps: int, record_every: int = 1, record_amplitudes: bool = False
) -> Trajectory:
    """
    Apply the operator `steps` times, recording at t = 0, stride, 2 stride, ... and at t = steps.

    Raises:
        LengthMismatch, BadRange
    """
    if state.size != op.size:
        raise LengthMismatch(f"state has {state.size} sites, operator has {op.size}")
    if steps < 0:
        raise BadRange(f"steps must be nonnegative, got {steps}")
    if record_every < 1:
        raise BadRange(f"record stride must be positive, got {record_every}")

    times, probabilities, norms, snapshots = [], [], [], []

    def record(t: int, amplitudes: np.ndarray) -> None:
        p = np.abs(amplitudes) ** 2
        times.append(t)
        probabilities.append(p)
        norms.append(float(np.sqrt(p.sum())))
        if record_amplitudes:
            snapshots.append(amplitudes.copy())

    amplitudes = state.amplitudes
    record(0, amplitudes)
    for t in range(1, steps + 1):
        amplitudes = apply_amplitudes(op, amplitudes)
        if t % record_every == 0 or t == steps:
            record(t, amplitudes)
    logger.debug("evolved N=%d for %d steps, %d records", op.size, steps, len(times))
    return Trajectory(
        times=np.asarray(times, dtype=int),
        probabilities=np.asarray(probabilities),
        norms=np.asarray(norms),
        amplitudes=np.asarray(snapshots) if record_amplitudes else None,
        final=State(amplitudes),
    )


def region_probability(state: State, start: int, end: int) -> float:
    """Probability on sites start..end inclusive"""
    if not 0 <= start <= end <= state.size - 1:
        raise BadRange(f"region {start}..{end} is not inside 0..{state.size - 1}")
    return float(state.probabilities()[start:end + 1].sum())


def centroid(state: State) -> float:
    """Probability-weighted mean site"""
    p = state.probabilities().sum(axis=1)
    total = p.sum()
    if total == 0:
        raise BadRange("centroid of an all-zero state is undefined")
    return float(np.dot(np.arange(state.size), p) / total)


def mirror_state(state: State) -> State:
    """Parity image: psi'(x) = P psi(N - 1 - x)"""
    return State(state.amplitudes[::-1, ::-1].copy())

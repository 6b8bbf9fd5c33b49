"""
Spectral analysis: dispersion, plane-wave eigenvectors, reflection amplitudes,
boundary eigenfunctions, quantization roots, trapped modes and full spectra.

Convention: an eigenvalue lambda = e^{-i omega}, omega = -arg(lambda) in (-pi, pi].
A plane wave on the epsilon branch has lambda = e^{-i epsilon omega}.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
import scipy.linalg
from scipy.optimize import root_scalar

from config.constants import (
    BAND_EDGE_TOL,
    CORNER,
    CORNER_AMPLITUDE_TOL,
    DENOMINATOR_TOL,
    EIGEN_RESIDUAL_TOL,
    IN_BAND,
    PROBE_LATTICE_SITES,
    ROOTS_COLUMNS,
    ROOT_FUNCTION_TOL,
    SINGULAR_CONDITION_LIMIT,
    SPECTRUM_COLUMNS,
    SWEEP_WORKERS,
    TRAPPED,
    ZERO_SPINOR_TOL,
)
from config.schemas import LatticeConfig, RuleParams
from lattice_gas import weights
from lattice_gas.lattice import (
    ALLOWED_BOUNDARY_PARAMS,
    GlobalOperator,
    apply_amplitudes,
    assemble_operator,
    config_to_raw,
    dense,
    validate_config,
)
from lattice_gas.state import State
from utils.errors import (
    ConfigValidationError,
    ConvergenceFailure,
    DenominatorNearZero,
    SingularSystem,
    Violation,
    ZeroSpinor,
)
from utils.numeric_helpers import wrap_angle

logger = logging.getLogger(__name__)


# Dispersion

def dispersion_cos(k, params: RuleParams):
    """cos(omega) = cos k cos(theta) cos(rho) + sin(theta) sin(rho); k may be complex"""
    return np.cos(k) * np.cos(params.theta) * np.cos(params.rho) + np.sin(params.theta) * np.sin(params.rho)


def dispersion_omega(k, params: RuleParams):
    """Principal frequency in [0, pi] for real k"""
    return np.arccos(np.clip(np.real(dispersion_cos(k, params)), -1.0, 1.0))


def group_velocity(k: float, params: RuleParams) -> float:
    """d(omega)/dk on the epsilon=+1 branch"""
    omega = float(dispersion_omega(k, params))
    if abs(np.sin(omega)) < DENOMINATOR_TOL:
        return 0.0
    return float(np.sin(k) * np.cos(params.theta) * np.cos(params.rho) / np.sin(omega))


def band_range(params: RuleParams) -> Tuple[float, float]:
    """
    Range of |omega| over real k.

    Returns (theta - rho, pi - theta - rho) for 0 <= rho <= theta <= pi/2; other angles
    take the extremes of the dispersion relation at k = 0 and k = pi.
    """
    offset = np.sin(params.theta) * np.sin(params.rho)
    swing = abs(np.cos(params.theta) * np.cos(params.rho))
    upper = np.clip(offset + swing, -1.0, 1.0)
    lower = np.clip(offset - swing, -1.0, 1.0)
    return float(np.arccos(upper)), float(np.arccos(lower))


def transfer_symbol(k, params: RuleParams) -> np.ndarray:
    """D(k) = w_minus e^{-ik} + w_zero + w_plus e^{ik}"""
    w_m, w_0, w_p = weights.bulk_weights(params)
    return w_m * np.exp(-1j * k) + w_0 + w_p * np.exp(1j * k)


# Plane waves

@dataclass(frozen=True)
class PlaneWave:
    k: complex
    epsilon: int
    omega: complex
    spinor: np.ndarray  # unnormalized eigenvector of D(k)

    @property
    def eigenvalue(self) -> complex:
        return complex(np.exp(-1j * self.epsilon * self.omega))

    @property
    def normalized(self) -> np.ndarray:
        return self.spinor / np.linalg.norm(self.spinor)


def planewave_spinor(k, epsilon: int, params: RuleParams, omega=None) -> PlaneWave:
    """
    Eigenvector of D(k) with eigenvalue e^{-i epsilon omega}.

    For real k omega defaults to the principal dispersion value; for complex k the
    principal branch of arccos is used unless omega is supplied.

    Raises:
        ZeroSpinor when both components vanish
    """
    if omega is None:
        if np.iscomplexobj(k) and abs(np.imag(k)) > 0:
            omega = np.arccos(complex(dispersion_cos(k, params)))
        else:
            k = float(np.real(k))
            omega = float(dispersion_omega(k, params))
    lam = np.exp(-1j * epsilon * omega)
    c_r, s_r = np.cos(params.rho), np.sin(params.rho)
    c_t, s_t = np.cos(params.theta), np.sin(params.theta)
    spinor = np.array(
        [
            1j * s_r * c_t - 1j * np.exp(-1j * k) * c_r * s_t,
            s_r * s_t + np.exp(1j * k) * c_r * c_t - lam,
        ],
        dtype=complex,
    )
    if np.linalg.norm(spinor) < ZERO_SPINOR_TOL:
        raise ZeroSpinor(f"plane-wave spinor vanishes at k={k}, epsilon={epsilon}, rho={params.rho}, theta={params.theta}")
    return PlaneWave(k=k, epsilon=epsilon, omega=omega, spinor=spinor)


def _pair(k, epsilon: int, params: RuleParams) -> Tuple[PlaneWave, PlaneWave]:
    incident = planewave_spinor(k, epsilon, params)
    reflected = planewave_spinor(-k, epsilon, params, omega=incident.omega)
    return incident, reflected


def _ratio(numerator: complex, denominator: complex, what: str, k) -> complex:
    if abs(denominator) < DENOMINATOR_TOL:
        raise DenominatorNearZero(f"{what}: denominator {abs(denominator):.3e} at k={k}")
    return -numerator / denominator


# Reflection amplitudes

def reflection_type1(k, epsilon: int, params: RuleParams, upsilon: float) -> complex:
    """Reflection amplitude of a plane wave at a left Type I boundary"""
    v, u = (wave.spinor for wave in _pair(k, epsilon, params))
    alpha = np.exp(1j * upsilon) - np.sin(params.rho)
    c_r = np.cos(params.rho)
    numerator = alpha * v[0] - 1j * np.exp(-1j * k) * c_r * v[1]
    denominator = alpha * u[0] - 1j * np.exp(1j * k) * c_r * u[1]
    return complex(_ratio(numerator, denominator, "type I reflection", k))


def reflection_type1_right(k, epsilon: int, params: RuleParams, upsilon: float, size: int) -> complex:
    """
    Reflection amplitude demanded by a right Type I boundary at site size-1.

    Moving the boundary from size-1 to size-1+m multiplies the result by e^{2ikm}.
    """
    v, u = (wave.spinor for wave in _pair(k, epsilon, params))
    alpha = np.exp(1j * upsilon) - np.sin(params.rho)
    c_r = np.cos(params.rho)
    numerator = alpha * v[1] - 1j * np.exp(1j * k) * c_r * v[0]
    denominator = alpha * u[1] - 1j * np.exp(-1j * k) * c_r * u[0]
    return complex(np.exp(2j * k * (size - 1)) * _ratio(numerator, denominator, "right type I reflection", k))


def reflection_type2(k, epsilon: int, params: RuleParams, zeta: float) -> complex:
    """Reflection amplitude at a left Type II boundary; the corner component is held at zero"""
    incident, reflected = _pair(k, epsilon, params)
    v, u = incident.spinor, reflected.spinor
    beta = np.exp(1j * zeta) * np.sin(params.rho) - incident.eigenvalue
    c_r = np.cos(params.rho)
    numerator = beta * v[1] + 1j * np.exp(1j * (zeta + k)) * c_r * v[0]
    denominator = beta * u[1] + 1j * np.exp(1j * (zeta - k)) * c_r * u[0]
    return complex(_ratio(numerator, denominator, "type II reflection", k))


def _type3_unknowns(
    k, epsilon: int, params: RuleParams, theta_prime: float, upsilon: float, zeta: float
) -> Tuple[complex, complex]:
    incident, reflected = _pair(k, epsilon, params)
    v, u = incident.spinor, reflected.spinor
    lam = incident.eigenvalue
    b_zero, b_plus, _ = weights.type3_boundary_row(params, theta_prime, upsilon, zeta)
    (p, q), (r, t) = b_zero
    m1, m2 = b_plus[0, 0], b_plus[1, 0]
    forward, backward = np.exp(1j * k), np.exp(-1j * k)
    system = np.array(
        [
            [p - lam, q * u[1] + m1 * u[0] * backward],
            [r, (t - lam) * u[1] + m2 * u[0] * backward],
        ],
        dtype=complex,
    )
    rhs = -np.array(
        [q * v[1] + m1 * v[0] * forward, (t - lam) * v[1] + m2 * v[0] * forward],
        dtype=complex,
    )
    condition = np.linalg.cond(system)
    if not np.isfinite(condition) or condition > SINGULAR_CONDITION_LIMIT:
        raise SingularSystem(f"type III boundary system has condition number {condition:.3e} at k={k}")
    psi_minus_0, amplitude = np.linalg.solve(system, rhs)
    return complex(amplitude), complex(psi_minus_0)


# Boundary eigenfunctions

@dataclass(frozen=True)
class BoundaryEigenfunction:
    kind: str
    omega: complex  # signed frequency epsilon * omega
    A: complex
    state: State
    residual: float
    psi_minus_0: complex

    @property
    def eigenvalue(self) -> complex:
        return complex(np.exp(-1j * self.omega))


def _probe_operator(kind: str, params: RuleParams, upsilon: float, zeta: float,
                    theta_prime: float, n_sites: int) -> GlobalOperator:
    left = {"kind": kind}
    for key, value in (("upsilon", upsilon), ("zeta", zeta), ("theta_prime", theta_prime)):
        if key in ALLOWED_BOUNDARY_PARAMS[kind]:
            left[key] = value
    config = validate_config(
        {
            "size": n_sites,
            "boundaries": {"left": left, "right": {"kind": "typeI", "upsilon": 0.0}},
            "segments": [{"from": 0, "to": n_sites - 1, "rho": params.rho, "theta": params.theta}],
        }
    )
    return assemble_operator(config)


def boundary_eigenfunction(
    kind: str,
    k,
    epsilon: int,
    params: RuleParams,
    upsilon: float = 0.0,
    zeta: float = 0.0,
    theta_prime: float = 0.0,
    n_sites: int = PROBE_LATTICE_SITES,
) -> BoundaryEigenfunction:
    """
    Incident plus reflected plane wave satisfying a left boundary of the given kind.

    The residual |U psi - lambda psi| is measured on a probe lattice over every row
    except the far-right boundary row.
    """
    incident, reflected = _pair(k, epsilon, params)
    psi_minus_0: Optional[complex] = None
    if kind == "typeI":
        amplitude = reflection_type1(k, epsilon, params, upsilon)
    elif kind == "typeII":
        amplitude = reflection_type2(k, epsilon, params, zeta)
        psi_minus_0 = 0j
    elif kind == "typeIII":
        amplitude, psi_minus_0 = _type3_unknowns(k, epsilon, params, theta_prime, upsilon, zeta)
    else:
        raise ValueError(f"boundary kind {kind!r} has no reflection amplitude")

    x = np.arange(n_sites)
    amplitudes = (
        np.exp(1j * k * x)[:, None] * incident.spinor[None, :]
        + amplitude * np.exp(-1j * k * x)[:, None] * reflected.spinor[None, :]
    )
    if psi_minus_0 is None:
        psi_minus_0 = complex(amplitudes[0, 0])
    amplitudes[0, 0] = psi_minus_0

    op = _probe_operator(kind, params, upsilon, zeta, theta_prime, n_sites)
    lam = incident.eigenvalue
    mismatch = apply_amplitudes(op, amplitudes) - lam * amplitudes
    residual = float(np.abs(mismatch[: n_sites - 1]).max())
    return BoundaryEigenfunction(
        kind=kind,
        omega=epsilon * incident.omega,
        A=amplitude,
        state=State(amplitudes),
        residual=residual,
        psi_minus_0=psi_minus_0,
    )


def eigenfunction_type3(
    k, epsilon: int, params: RuleParams, theta_prime: float, upsilon: float, zeta: float,
    n_sites: int = PROBE_LATTICE_SITES,
) -> Tuple[complex, complex, BoundaryEigenfunction]:
    """Solve the Type III boundary row for (A, psi_minus(0)) and assemble the eigenfunction"""
    eigenfunction = boundary_eigenfunction(
        "typeIII", k, epsilon, params, upsilon=upsilon, zeta=zeta, theta_prime=theta_prime, n_sites=n_sites
    )
    return eigenfunction.A, eigenfunction.psi_minus_0, eigenfunction


# Quantization

def _quantization_function(k: float, size: int, theta: float) -> float:
    # tan(Nk) - sin(k) cot(theta), multiplied through by cos(Nk) sin(theta)
    return float(np.sin(size * k) * np.sin(theta) - np.sin(k) * np.cos(theta) * np.cos(size * k))


def _bracketed_root(func, lo: float, hi: float) -> Optional[float]:
    f_lo, f_hi = func(lo), func(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        return None
    solution = root_scalar(func, bracket=[lo, hi], method="brentq", xtol=1e-15, rtol=4 * np.finfo(float).eps)
    return float(solution.root)


def quantization_roots(size: int, theta: float) -> List[float]:
    """
    Allowed wavenumbers of a lattice with Type I boundaries at both ends, rho = 0, upsilon = 0.

    Solves tan(N k) = sin(k) cot(theta) strictly inside (0, pi). Poles at (n + 1/2) pi / N
    bracket one root per full branch; the partial branches next to k = 0 and k = pi are
    scanned separately. The endpoints themselves give a vanishing eigenfunction and are
    never returned.
    """
    if size < 2:
        raise ValueError(f"quantization needs at least 2 sites, got {size}")
    if abs(np.sin(theta)) < ZERO_SPINOR_TOL:
        raise ValueError("theta must have a nonzero sine")

    def func(k: float) -> float:
        return _quantization_function(k, size, theta)

    poles = [(n + 0.5) * np.pi / size for n in range(size)]
    edge = 1e-9 * poles[0]
    brackets = [(edge, poles[0])]
    brackets += list(zip(poles[:-1], poles[1:]))
    brackets.append((poles[-1], np.pi - edge))

    roots = []
    for lo, hi in brackets:
        root = _bracketed_root(func, lo, hi)
        if root is None or not edge < root < np.pi - edge:
            continue
        if abs(func(root)) > ROOT_FUNCTION_TOL * max(1.0, size):
            logger.warning("quantization root at k=%.17g leaves |f|=%.3e", root, abs(func(root)))
        roots.append(root)
    logger.debug("quantization: N=%d theta=%.6f -> %d roots", size, theta, len(roots))
    return roots


def general_quantization_roots(
    size: int, params: RuleParams, upsilon: float, epsilon: int = 1, samples_per_site: int = 64
) -> List[float]:
    """
    Allowed wavenumbers for Type I boundaries with arbitrary (rho, upsilon).

    Matches the left and right reflection amplitudes: scans the phase of A_left * conj(A_right)
    over a k grid and polishes each zero crossing with brentq.
    """
    def mismatch(k: float) -> float:
        try:
            left = reflection_type1(k, epsilon, params, upsilon)
            right = reflection_type1_right(k, epsilon, params, upsilon, size)
        except (DenominatorNearZero, ZeroSpinor):
            return float("nan")
        return float(np.angle(left * np.conj(right)))

    grid = np.linspace(0.0, np.pi, samples_per_site * size + 1)[1:-1]
    values = np.array([mismatch(k) for k in grid])
    roots = []
    for lo, hi, f_lo, f_hi in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if not (np.isfinite(f_lo) and np.isfinite(f_hi)) or np.sign(f_lo) == np.sign(f_hi):
            continue
        # a wrap through +-pi also flips sign; only genuine crossings of zero are roots
        if abs(f_lo - f_hi) > np.pi:
            continue
        root = _bracketed_root(mismatch, lo, hi)
        if root is None:
            continue
        left = reflection_type1(root, epsilon, params, upsilon)
        right = reflection_type1_right(root, epsilon, params, upsilon, size)
        if abs(left - right) <= 1e-8 * max(1.0, abs(left)):
            roots.append(root)
    return roots


# Trapped modes

@dataclass(frozen=True)
class TrappedWavenumber:
    z: complex  # e^{ik}
    k: complex
    omega: float
    decaying: bool  # |z| < 1: decays away from a left boundary
    band_edge: bool  # |z| == 1, degenerate with the band edge


def trapped_wavenumbers(theta: float) -> Tuple[TrappedWavenumber, TrappedWavenumber]:
    """
    Complex wavenumbers e^{ik} = -tan(theta) +- sec(theta) of the boundary-trapped modes at rho = 0.

    The + root carries omega = 0 and the - root omega = pi.
    """
    if abs(np.cos(theta)) < ZERO_SPINOR_TOL:
        raise ValueError("trapped wavenumbers need cos(theta) != 0")
    tan_t, sec_t = np.tan(theta), 1.0 / np.cos(theta)
    out = []
    for z in (-tan_t + sec_t, -tan_t - sec_t):
        z = complex(z)
        cos_k = 0.5 * (z + 1.0 / z)
        cos_omega = float(np.real(cos_k * np.cos(theta)))
        modulus = abs(z)
        out.append(
            TrappedWavenumber(
                z=z,
                k=complex(-1j * np.log(z)),
                omega=float(np.arccos(np.clip(cos_omega, -1.0, 1.0))),
                decaying=modulus < 1.0 - BAND_EDGE_TOL,
                band_edge=abs(modulus - 1.0) <= BAND_EDGE_TOL,
            )
        )
    return out[0], out[1]


# Full spectra

@dataclass(frozen=True)
class SpectralResult:
    """Eigenpairs of a dense operator sorted by omega"""
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns, unit 2-norm
    omegas: np.ndarray
    residuals: np.ndarray
    classifications: Tuple[str, ...]
    corner_weights: np.ndarray  # probability carried on masked corner states

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.eigenvalues)

    @property
    def relevant(self) -> np.ndarray:
        """Eigenpairs with no amplitude on any Type II corner state"""
        return np.sqrt(self.corner_weights) <= CORNER_AMPLITUDE_TOL

    def count(self, classification: str) -> int:
        return sum(1 for label in self.classifications if label == classification)

    def to_frame(self, param: Optional[float] = None) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "param": [param] * len(self),
                "index": np.arange(len(self)),
                "re_lambda": self.eigenvalues.real,
                "im_lambda": self.eigenvalues.imag,
                "omega": self.omegas,
                "modulus": self.moduli,
                "classification": list(self.classifications),
            },
            columns=SPECTRUM_COLUMNS,
        )


def _bands(op: GlobalOperator) -> List[Tuple[float, float]]:
    unique: Dict[Tuple[float, float], Tuple[float, float]] = {}
    for rule in op.rules:
        key = (rule.rho, rule.theta)
        if key not in unique:
            unique[key] = band_range(rule)
    return list(unique.values())


def _in_band(omega: float, bands: Sequence[Tuple[float, float]]) -> bool:
    magnitude = abs(omega)
    return any(lo - BAND_EDGE_TOL <= magnitude <= hi + BAND_EDGE_TOL for lo, hi in bands)


def full_spectrum(op: GlobalOperator, bands: Optional[Sequence[Tuple[float, float]]] = None) -> SpectralResult:
    """
    All 2N eigenpairs of the dense operator.

    Args:
        op: assembled operator within the dense cap
        bands: |omega| intervals counted as in-band; defaults to the union over the operator's rules

    Raises:
        CapExceeded, ConvergenceFailure
    """
    matrix = dense(op)
    try:
        eigenvalues, eigenvectors = scipy.linalg.eig(matrix)
    except (np.linalg.LinAlgError, ValueError) as error:
        raise ConvergenceFailure(f"eigen-decomposition failed: {error}", matrix) from error

    eigenvectors = eigenvectors / np.linalg.norm(eigenvectors, axis=0, keepdims=True)
    residuals = np.abs(matrix @ eigenvectors - eigenvectors * eigenvalues[None, :]).max(axis=0)
    worst = float(residuals.max()) if residuals.size else 0.0
    if worst > EIGEN_RESIDUAL_TOL:
        raise ConvergenceFailure(f"eigenpair residual {worst:.3e} exceeds {EIGEN_RESIDUAL_TOL:.0e}", matrix)

    omegas = wrap_angle(-np.angle(eigenvalues))
    order = np.argsort(omegas, kind="stable")
    eigenvalues, eigenvectors = eigenvalues[order], eigenvectors[:, order]
    omegas, residuals = omegas[order], residuals[order]

    mask = sorted(op.corner_mask)
    if mask:
        corner_weights = (np.abs(eigenvectors[mask, :]) ** 2).sum(axis=0)
    else:
        corner_weights = np.zeros(len(eigenvalues))

    bands = _bands(op) if bands is None else bands
    classifications = []
    for omega, weight in zip(omegas, corner_weights):
        if weight > 0.5:
            classifications.append(CORNER)
        elif _in_band(omega, bands):
            classifications.append(IN_BAND)
        else:
            classifications.append(TRAPPED)
    logger.debug("spectrum: N=%d, worst residual %.3e, %d trapped", op.size, worst, classifications.count(TRAPPED))
    return SpectralResult(eigenvalues, eigenvectors, omegas, residuals, tuple(classifications), corner_weights)


def trapped_decay_ratio(vector: np.ndarray, sites: int = 8) -> float:
    """
    Per-site amplitude ratio of a boundary-localized eigenvector.

    Fits log sqrt(p(x)) linearly over sites 1..sites counted inward from the end of the
    lattice holding more probability.
    """
    probabilities = State.from_vector(vector).probabilities().sum(axis=1)
    half = len(probabilities) // 2
    if probabilities[:half].sum() < probabilities[half:].sum():
        probabilities = probabilities[::-1]
    x = np.arange(1, sites + 1)
    slope, _ = np.polyfit(x, 0.5 * np.log(probabilities[x]), 1)
    return float(np.exp(slope))


# Sweeps

@dataclass(frozen=True)
class SweepResult:
    parameter: str
    values: Tuple[float, ...]
    spectra: Tuple[SpectralResult, ...]

    def to_frame(self) -> pd.DataFrame:
        frames = [spectrum.to_frame(param=value) for value, spectrum in zip(self.values, self.spectra)]
        return pd.concat(frames, ignore_index=True)


def with_boundary_parameter(config: LatticeConfig, parameter: str, value: float) -> LatticeConfig:
    """Copy of a bounded config with the parameter set on every boundary whose kind takes it"""
    raw = config_to_raw(config)
    touched = False
    for side in ("left", "right"):
        spec = raw["boundaries"][side]
        if parameter in ALLOWED_BOUNDARY_PARAMS[spec["kind"]]:
            spec[parameter] = float(value)
            touched = True
    if not touched:
        raise ConfigValidationError(
            [Violation("BoundaryParamMismatch", f"no boundary of this config takes {parameter}")]
        )
    return validate_config(raw)


def boundary_sweep(
    config: LatticeConfig, parameter: str, grid: Sequence[float], workers: Optional[int] = None
) -> SweepResult:
    """
    Full spectrum at each grid value of a boundary parameter applied to both ends.

    Grid points are independent; with workers > 1 they run on a thread pool and are
    merged back in grid order.
    """
    if parameter not in ("upsilon", "zeta", "theta_prime"):
        raise ValueError(f"unknown sweep parameter {parameter!r}")
    workers = SWEEP_WORKERS if workers is None else workers

    def run(value: float) -> SpectralResult:
        return full_spectrum(assemble_operator(with_boundary_parameter(config, parameter, value)))

    values = tuple(float(v) for v in grid)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            spectra = tuple(executor.map(run, values))
    else:
        spectra = tuple(run(value) for value in values)
    logger.info("sweep over %s: %d grid points", parameter, len(values))
    return SweepResult(parameter, values, spectra)


def roots_frame(roots: Sequence[float], theta: float) -> pd.DataFrame:
    """Quantization roots with their rho = 0 frequencies"""
    rule = RuleParams(rho=0.0, theta=theta)
    return pd.DataFrame(
        {
            "index": np.arange(len(roots)),
            "k": np.asarray(roots, dtype=float),
            "omega": [float(dispersion_omega(k, rule)) for k in roots],
        },
        columns=ROOTS_COLUMNS,
    )

"""
Lattice configuration, global operator assembly and unitarity checks
"""
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Optional, Tuple, Union

import numpy as np
from pydantic import ValidationError

from config.constants import ANGLE_EQUALITY_TOL, DENSE_CAP, UNITARITY_TOL
from config.schemas import (
    BoundarySpec,
    JunctionSpec,
    LatticeConfig,
    RawLatticeConfig,
    RuleParams,
    SegmentSpec,
)
from lattice_gas import weights
from lattice_gas.state import State
from utils.errors import CapExceeded, ConfigValidationError, LengthMismatch, Violation

logger = logging.getLogger(__name__)

ALLOWED_BOUNDARY_PARAMS = {
    "periodic": set(),
    "typeI": {"upsilon"},
    "typeII": {"zeta"},
    "typeIII": {"upsilon", "zeta", "theta_prime"},
}


def _same_angle(a: float, b: float) -> bool:
    return abs(a - b) <= ANGLE_EQUALITY_TOL


def _same_params(a: RuleParams, b: RuleParams) -> bool:
    return _same_angle(a.rho, b.rho) and _same_angle(a.theta, b.theta)


def _schema_violations(error: ValidationError) -> List[Violation]:
    violations = []
    for item in error.errors():
        location = ".".join(str(part) for part in item.get("loc", ()))
        violations.append(Violation("SchemaError", f"{location}: {item.get('msg')}"))
    return violations


def _boundary_violations(raw: RawLatticeConfig) -> List[Violation]:
    violations = []
    left, right = raw.boundaries.left, raw.boundaries.right
    if (left.kind == "periodic") != (right.kind == "periodic"):
        violations.append(Violation("BoundaryParamMismatch", "periodic on one side requires periodic on both"))
    for name, spec in (("left", left), ("right", right)):
        supplied = {key for key in ("upsilon", "zeta", "theta_prime") if getattr(spec, key) is not None}
        if spec.kind == "typeIII" and spec.theta_prime is None:
            violations.append(Violation("SchemaError", f"{name} boundary of kind typeIII needs theta_prime"))
        extras = supplied - ALLOWED_BOUNDARY_PARAMS[spec.kind]
        if extras:
            violations.append(
                Violation(
                    "BoundaryParamMismatch",
                    f"{name} boundary of kind {spec.kind} does not take {', '.join(sorted(extras))}",
                )
            )
    return violations


def _segment_violations(raw: RawLatticeConfig) -> List[Violation]:
    violations = []
    size = raw.size
    expected_start = 0
    for segment in raw.segments:
        if segment.start > segment.end:
            violations.append(Violation("SchemaError", f"segment {segment.start}..{segment.end} is empty", segment.start))
            continue
        if segment.start > expected_start:
            violations.append(
                Violation("GapInSegments", f"sites {expected_start}..{segment.start - 1} are not covered", expected_start)
            )
        elif segment.start < expected_start:
            violations.append(
                Violation("OverlapInSegments", f"segment starting at {segment.start} overlaps its predecessor", segment.start)
            )
        expected_start = max(expected_start, segment.end + 1)
    if expected_start < size:
        violations.append(Violation("GapInSegments", f"sites {expected_start}..{size - 1} are not covered", expected_start))
    elif expected_start > size:
        violations.append(Violation("OverlapInSegments", f"segments extend past site {size - 1}", size))
    if len(raw.segments) > 1:
        for segment in raw.segments:
            if segment.length < 2:
                violations.append(
                    Violation("SegmentTooShort", "segments between junctions need at least 2 sites", segment.start)
                )
    return violations


def _junction_violations(raw: RawLatticeConfig, periodic: bool) -> List[Violation]:
    violations = []
    segments = raw.segments
    pairs: Dict[int, Tuple[SegmentSpec, SegmentSpec]] = {
        left.end: (left, right) for left, right in zip(segments[:-1], segments[1:])
    }
    required = set(pairs)
    if periodic and len(segments) > 1:
        seam = (segments[-1], segments[0])
        pairs[raw.size - 1] = seam
        if not _same_params(seam[0].params, seam[1].params):
            required.add(raw.size - 1)

    seen = set()
    for junction in raw.junctions:
        if junction.site in seen:
            violations.append(Violation("JunctionPlacement", "more than one junction at this site", junction.site))
            continue
        seen.add(junction.site)
        if junction.site not in pairs:
            violations.append(
                Violation("JunctionPlacement", "junction site must be the last site of a segment", junction.site)
            )
            continue
        left, right = pairs[junction.site]
        if junction.kind == "typeI" and not _same_angle(left.theta, right.theta):
            violations.append(
                Violation(
                    "ThetaMismatchAtTypeI",
                    f"theta changes from {left.theta!r} to {right.theta!r} across a Type I junction",
                    junction.site,
                )
            )
        if junction.kind == "typeII" and not _same_angle(left.rho, right.rho):
            violations.append(
                Violation(
                    "RhoMismatchAtTypeII",
                    f"rho changes from {left.rho!r} to {right.rho!r} across a Type II junction",
                    junction.site,
                )
            )
    for site in sorted(required - seen):
        violations.append(Violation("JunctionPlacement", "adjacent segments have no junction", site))
    return violations


def validate_config(raw: Union[Dict[str, Any], RawLatticeConfig]) -> LatticeConfig:
    """
    Check a raw lattice description and return the validated config.

    Args:
        raw: parsed JSON mapping or an already parsed RawLatticeConfig

    Returns:
        LatticeConfig

    Raises:
        ConfigValidationError carrying every violation found
    """
    if not isinstance(raw, RawLatticeConfig):
        try:
            raw = RawLatticeConfig.model_validate(raw)
        except ValidationError as error:
            raise ConfigValidationError(_schema_violations(error)) from error

    periodic = raw.boundaries.left.kind == "periodic" and raw.boundaries.right.kind == "periodic"
    violations = _boundary_violations(raw)

    kinds = {raw.boundaries.left.kind, raw.boundaries.right.kind}
    min_size = 3 if kinds & {"typeII", "typeIII"} else 2
    if raw.size < min_size:
        violations.append(Violation("SizeTooSmall", f"lattice needs at least {min_size} sites, got {raw.size}"))
    else:
        violations.extend(_segment_violations(raw))
        if not violations:
            violations.extend(_junction_violations(raw, periodic))

    if violations:
        raise ConfigValidationError(violations)

    config = LatticeConfig(
        size=raw.size,
        periodic=periodic,
        left=None if periodic else raw.boundaries.left.model_copy(update={"side": "left"}),
        right=None if periodic else raw.boundaries.right.model_copy(update={"side": "right"}),
        segments=list(raw.segments),
        junctions=sorted(raw.junctions, key=lambda j: j.site),
    )
    logger.debug("validated config: N=%d periodic=%s segments=%d junctions=%d",
                 config.size, config.periodic, len(config.segments), len(config.junctions))
    return config


def load_config(path: Union[str, Path]) -> LatticeConfig:
    """Read a JSON config file and validate it"""
    text = Path(path).read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as error:
        raise ConfigValidationError([Violation("SchemaError", f"{path}: {error}")]) from error
    return validate_config(raw)


def config_to_raw(config: LatticeConfig) -> Dict[str, Any]:
    """Inverse of validate_config: the JSON-ready mapping of a validated config"""
    if config.periodic:
        boundaries = {"left": {"kind": "periodic"}, "right": {"kind": "periodic"}}
    else:
        boundaries = {
            name: spec.model_dump(exclude_none=True, exclude={"side"})
            for name, spec in (("left", config.left), ("right", config.right))
        }
    return {
        "size": config.size,
        "boundaries": boundaries,
        "segments": [segment.model_dump(by_alias=True) for segment in config.segments],
        "junctions": [junction.model_dump() for junction in config.junctions],
    }


def site_params(config: LatticeConfig) -> List[RuleParams]:
    """Rule parameters of the segment owning each site"""
    params: List[Optional[RuleParams]] = [None] * config.size
    for segment in config.segments:
        rule = segment.params
        for x in range(segment.start, segment.end + 1):
            params[x] = rule
    return params  # type: ignore[return-value]


def _segment_pairs(config: LatticeConfig) -> Dict[int, Tuple[RuleParams, RuleParams]]:
    segments = config.segments
    pairs = {left.end: (left.params, right.params) for left, right in zip(segments[:-1], segments[1:])}
    if config.periodic and len(segments) > 1:
        pairs[config.size - 1] = (segments[-1].params, segments[0].params)
    return pairs


def left_boundary_row(spec: BoundarySpec, params: RuleParams) -> weights.BoundaryRow:
    """Blocks of a boundary placed at site 0 with the rule of the adjoining segment"""
    if spec.kind == "typeI":
        zero = weights.type1_boundary_w0(params, spec.upsilon_value)
        inward, adjacent = weights.w_plus(params), weights.w_minus(params)
    elif spec.kind == "typeII":
        zero, inward = weights.type2_boundary_row(params, spec.zeta_value)
        adjacent = weights.w_minus(params)
    elif spec.kind == "typeIII":
        zero, inward, adjacent = weights.type3_boundary_row(
            params, spec.theta_prime, spec.upsilon_value, spec.zeta_value
        )
    else:
        raise ValueError(f"boundary kind {spec.kind!r} has no boundary row")
    return weights.BoundaryRow(side="left", zero=zero, inward=inward, adjacent=adjacent)


@dataclass(frozen=True)
class CornerInfo:
    index: int  # flat basis index 2x + component
    site: int
    side: str
    expected_factor: complex  # e^{i zeta} sin(rho)


@dataclass(frozen=True)
class GlobalOperator:
    """
    Block-tridiagonal evolution operator stored as per-site block rows.

    minus[x] acts on site x-1, zero[x] on site x, plus[x] on site x+1 (indices wrap when periodic).
    """
    size: int
    periodic: bool
    minus: np.ndarray
    zero: np.ndarray
    plus: np.ndarray
    corners: Tuple[CornerInfo, ...] = ()
    rules: Tuple[RuleParams, ...] = ()

    @property
    def dimension(self) -> int:
        return 2 * self.size

    @property
    def corner_mask(self) -> FrozenSet[int]:
        return frozenset(corner.index for corner in self.corners)

    @property
    def physical_indices(self) -> np.ndarray:
        mask = self.corner_mask
        return np.array([i for i in range(self.dimension) if i not in mask], dtype=int)


def assemble_operator(config: LatticeConfig) -> GlobalOperator:
    """
    Lay out the block rows of U for a validated config.

    Args:
        config: validated lattice config

    Returns:
        GlobalOperator; never materialized densely here
    """
    n = config.size
    params = site_params(config)
    minus = np.empty((n, 2, 2), dtype=complex)
    zero = np.empty((n, 2, 2), dtype=complex)
    plus = np.empty((n, 2, 2), dtype=complex)
    for x, rule in enumerate(params):
        minus[x], zero[x], plus[x] = weights.bulk_weights(rule)

    pairs = _segment_pairs(config)
    for junction in config.junctions:
        j = junction.site
        left, right = pairs[j]
        if junction.kind == "typeI":
            minus[j] = weights.w_minus(left)
            zero[j] = weights.type1_junction_w0(left.rho, left.theta, right.rho)
            plus[j] = weights.w_plus(right)
        elif junction.kind == "combined":
            hat_minus, hat_zero, hat_plus = weights.combined_junction_blocks(left, right)
            minus[j] = weights.w_minus(left)
            zero[j] = hat_zero
            plus[j] = hat_plus
            minus[(j + 1) % n] = hat_minus
        # typeII: row j stays fully left, row j+1 fully right

    corners: List[CornerInfo] = []
    if not config.periodic:
        minus[0] = 0
        plus[n - 1] = 0
        left_row = left_boundary_row(config.left, params[0])
        zero[0], plus[0], minus[1] = left_row.zero, left_row.inward, left_row.adjacent

        right_row = weights.parity_reflect_boundary(left_boundary_row(config.right, params[n - 1]))
        zero[n - 1], minus[n - 1], plus[n - 2] = right_row.zero, right_row.inward, right_row.adjacent

        for spec, site, component, rule in (
            (config.left, 0, 0, params[0]),
            (config.right, n - 1, 1, params[n - 1]),
        ):
            if spec.kind == "typeII":
                factor = complex(np.exp(1j * spec.zeta_value) * np.sin(rule.rho))
                corners.append(CornerInfo(2 * site + component, site, spec.side, factor))

    for array in (minus, zero, plus):
        array.setflags(write=False)
    return GlobalOperator(n, config.periodic, minus, zero, plus, tuple(corners), tuple(params))


def apply_amplitudes(op: GlobalOperator, amplitudes: np.ndarray) -> np.ndarray:
    """One time step on an (N, 2) amplitude array"""
    if amplitudes.shape != (op.size, 2):
        raise LengthMismatch(f"state has shape {amplitudes.shape}, operator expects ({op.size}, 2)")
    from_left = np.roll(amplitudes, 1, axis=0)
    from_right = np.roll(amplitudes, -1, axis=0)
    if not op.periodic:
        from_left[0] = 0
        from_right[-1] = 0
    return (
        np.einsum("xij,xj->xi", op.minus, from_left)
        + np.einsum("xij,xj->xi", op.zero, amplitudes)
        + np.einsum("xij,xj->xi", op.plus, from_right)
    )


def apply(op: GlobalOperator, state: State) -> State:
    """psi(t+1, x) = w_minus psi(t, x-1) + w_zero psi(t, x) + w_plus psi(t, x+1)"""
    return State(apply_amplitudes(op, state.amplitudes))


def dense(op: GlobalOperator, cap: Optional[int] = None) -> np.ndarray:
    """Materialize U as a 2N x 2N complex matrix"""
    cap = DENSE_CAP if cap is None else cap
    if op.size > cap:
        raise CapExceeded(f"N={op.size} exceeds the dense cap of {cap} sites")
    n = op.size
    matrix = np.zeros((2 * n, 2 * n), dtype=complex)
    for x in range(n):
        rows = slice(2 * x, 2 * x + 2)
        for offset, blocks in ((-1, op.minus), (0, op.zero), (1, op.plus)):
            y = x + offset
            if not op.periodic and not 0 <= y < n:
                continue
            y %= n
            matrix[rows, 2 * y:2 * y + 2] += blocks[x]
    return matrix


@dataclass(frozen=True)
class CornerReport:
    side: str
    index: int
    amplitude: complex
    modulus: float
    expected_modulus: float


@dataclass(frozen=True)
class UnitarityReport:
    full_residual_left: float  # max |U^dagger U - I|
    full_residual_right: float  # max |U U^dagger - I|
    physical_residual_left: float
    physical_residual_right: float
    leakage: float  # largest coupling between corner states and the physical subspace
    corners: Tuple[CornerReport, ...] = field(default_factory=tuple)
    tolerance: float = UNITARITY_TOL

    @property
    def full_residual(self) -> float:
        return max(self.full_residual_left, self.full_residual_right)

    @property
    def physical_residual(self) -> float:
        return max(self.physical_residual_left, self.physical_residual_right)

    @property
    def passed(self) -> bool:
        if not self.corners:
            return self.full_residual <= self.tolerance
        corner_ok = all(abs(c.modulus - c.expected_modulus) <= self.tolerance for c in self.corners)
        return self.physical_residual <= self.tolerance and self.leakage <= self.tolerance and corner_ok

    def lines(self) -> List[str]:
        out = [
            f"full residual |U^dag U - I| = {self.full_residual_left:.3e}, |U U^dag - I| = {self.full_residual_right:.3e}",
            f"physical residual |U^dag U - I| = {self.physical_residual_left:.3e}, "
            f"|U U^dag - I| = {self.physical_residual_right:.3e}",
        ]
        for corner in self.corners:
            out.append(
                f"{corner.side} corner state {corner.index}: amplitude {corner.amplitude:.12g}, "
                f"modulus {corner.modulus:.12g} (expected {corner.expected_modulus:.12g})"
            )
        out.append("PASS" if self.passed else "FAIL")
        return out


def _residual(matrix: np.ndarray) -> Tuple[float, float]:
    eye = np.eye(matrix.shape[1])
    left = np.abs(matrix.conj().T @ matrix - eye).max() if matrix.size else 0.0
    right = np.abs(matrix @ matrix.conj().T - np.eye(matrix.shape[0])).max() if matrix.size else 0.0
    return float(left), float(right)


def unitarity_report(op: GlobalOperator) -> UnitarityReport:
    """Residuals of U^dagger U - I and U U^dagger - I on the full space and on the corner complement"""
    matrix = dense(op)
    full_left, full_right = _residual(matrix)
    keep = op.physical_indices
    phys_left, phys_right = _residual(matrix[np.ix_(keep, keep)])
    mask = sorted(op.corner_mask)
    leakage = 0.0
    if mask:
        leakage = float(max(np.abs(matrix[np.ix_(mask, keep)]).max(), np.abs(matrix[np.ix_(keep, mask)]).max()))
    corners = tuple(
        CornerReport(
            side=corner.side,
            index=corner.index,
            amplitude=complex(matrix[corner.index, corner.index]),
            modulus=float(abs(matrix[corner.index, corner.index])),
            expected_modulus=float(abs(corner.expected_factor)),
        )
        for corner in op.corners
    )
    return UnitarityReport(full_left, full_right, phys_left, phys_right, leakage, corners)


def mirror_config(config: LatticeConfig) -> LatticeConfig:
    """
    Parity image of a bounded config: sites reversed, boundary sides swapped.

    A Type II bond (j, j+1) maps to (N-2-j, N-1-j); a Type I mixed site j maps to N-1-j.
    The combined junction has no parity image of the same form and is rejected.
    """
    if config.periodic:
        raise ValueError("mirror_config supports bounded lattices only")
    n = config.size
    params = site_params(config)
    new_junctions = []
    for junction in config.junctions:
        if junction.kind == "combined":
            raise ValueError("the combined junction is not parity symmetric")
        offset = 1 if junction.kind == "typeI" else 2
        new_junctions.append(JunctionSpec(kind=junction.kind, site=n - offset - junction.site))
    new_junctions.sort(key=lambda j: j.site)

    starts = [0] + [j.site + 1 for j in new_junctions]
    ends = [j.site for j in new_junctions] + [n - 1]
    segments = []
    for start, end in zip(starts, ends):
        rule = params[n - 1 - start]
        segments.append({"from": start, "to": end, "rho": rule.rho, "theta": rule.theta})

    left = config.right.model_dump(exclude_none=True, exclude={"side"})
    right = config.left.model_dump(exclude_none=True, exclude={"side"})
    return validate_config(
        {
            "size": n,
            "boundaries": {"left": left, "right": right},
            "segments": segments,
            "junctions": [j.model_dump() for j in new_junctions],
        }
    )


def parity_permutation(size: int) -> np.ndarray:
    """Permutation matrix of site reversal combined with mover exchange"""
    perm = np.zeros((2 * size, 2 * size))
    for x in range(size):
        for c in range(2):
            perm[2 * (size - 1 - x) + (1 - c), 2 * x + c] = 1.0
    return perm

"""
Weight matrices - every 2x2 block of the evolution rule as a closed-form function of angles.

Row/column index 0 is the left-mover component, index 1 the right-mover component.
"""
from dataclasses import dataclass
from typing import Literal, Tuple

import numpy as np

from config.schemas import RuleParams

WeightBlock = np.ndarray

PARITY = np.array([[0, 1], [1, 0]], dtype=complex)


def bulk_weights(params: RuleParams) -> Tuple[WeightBlock, WeightBlock, WeightBlock]:
    """
    Homogeneous parity invariant rule.

    Args:
        params: (rho, theta) of the rule

    Returns:
        (w_minus, w_zero, w_plus); w_minus acts on the site to the left, w_plus on the site to the right
    """
    c_r, s_r = np.cos(params.rho), np.sin(params.rho)
    c_t, s_t = np.cos(params.theta), np.sin(params.theta)
    w_minus = c_r * np.array([[0, 1j * s_t], [0, c_t]], dtype=complex)
    w_zero = s_r * np.array([[s_t, -1j * c_t], [-1j * c_t, s_t]], dtype=complex)
    w_plus = c_r * np.array([[c_t, 0], [1j * s_t, 0]], dtype=complex)
    return w_minus, w_zero, w_plus


def w_minus(params: RuleParams) -> WeightBlock:
    return bulk_weights(params)[0]


def w_zero(params: RuleParams) -> WeightBlock:
    return bulk_weights(params)[1]


def w_plus(params: RuleParams) -> WeightBlock:
    return bulk_weights(params)[2]


def type1_boundary_w0(params: RuleParams, upsilon: float) -> WeightBlock:
    """On-site weight at a Type I boundary: w_zero with sin(rho) in the first column replaced by e^{i upsilon}"""
    phase = np.exp(1j * upsilon)
    s_r = np.sin(params.rho)
    c_t, s_t = np.cos(params.theta), np.sin(params.theta)
    return np.array(
        [[phase * s_t, -1j * c_t * s_r],
         [-1j * phase * c_t, s_t * s_r]],
        dtype=complex,
    )


def type1_junction_w0(rho_left: float, theta: float, rho_right: float) -> WeightBlock:
    """
    On-site weight at a Type I inhomogeneity.

    The left-mover column carries sin(rho_left), the right-mover column sin(rho_right).
    """
    c_t, s_t = np.cos(theta), np.sin(theta)
    s_l, s_r = np.sin(rho_left), np.sin(rho_right)
    return np.array(
        [[s_t * s_l, -1j * c_t * s_r],
         [-1j * c_t * s_l, s_t * s_r]],
        dtype=complex,
    )


def type2_boundary_row(params: RuleParams, zeta: float) -> Tuple[WeightBlock, WeightBlock]:
    """
    Left Type II boundary row (b_zero, b_plus), evaluated with rho' = rho and cos(theta') = 0.

    The inward left-mover state at the boundary site decouples and is multiplied by e^{i zeta} sin(rho).
    """
    phase = np.exp(1j * zeta)
    b_zero = phase * np.sin(params.rho) * np.eye(2, dtype=complex)
    b_plus = phase * np.cos(params.rho) * np.array([[0, 0], [1j, 0]], dtype=complex)
    return b_zero, b_plus


def type3_boundary_row(
    params: RuleParams, theta_prime: float, upsilon: float, zeta: float
) -> Tuple[WeightBlock, WeightBlock, WeightBlock]:
    """
    Left Type III boundary row, gauge phases fixed to zero.

    Returns:
        (b_zero, b_plus, b_minus); b_minus is the block of row 1 acting on site 0
    """
    e_u, e_z = np.exp(1j * upsilon), np.exp(1j * zeta)
    c_p, s_p = np.cos(theta_prime), np.sin(theta_prime)
    s_r = np.sin(params.rho)
    b_zero = np.array(
        [[e_u * s_p, -1j * e_z * c_p * s_r],
         [-1j * e_u * c_p, e_z * s_p * s_r]],
        dtype=complex,
    )
    b_plus = e_z * w_plus(RuleParams(rho=params.rho, theta=theta_prime))
    b_minus = w_minus(params)
    return b_zero, b_plus, b_minus


def combined_junction_blocks(
    left: RuleParams, right: RuleParams
) -> Tuple[WeightBlock, WeightBlock, WeightBlock]:
    """
    Hatted blocks of an adjacent Type I / Type II pair changing (rho', theta') to (rho, theta).

    Returns:
        (hat_minus, hat_zero, hat_plus); hat_zero and hat_plus sit in the junction row,
        hat_minus in the row after it
    """
    hat_minus = w_minus(right)
    hat_plus = w_plus(RuleParams(rho=right.rho, theta=left.theta))
    hat_zero = type1_junction_w0(left.rho, left.theta, right.rho)
    return hat_minus, hat_zero, hat_plus


def parity_transform(block: WeightBlock) -> WeightBlock:
    return PARITY @ block @ PARITY


@dataclass(frozen=True)
class BoundaryRow:
    """
    Blocks a boundary contributes to the operator.

    zero sits on the diagonal at the boundary site, inward couples the boundary row to its
    neighbour site, adjacent is the neighbour row's block acting on the boundary site.
    """
    side: Literal["left", "right"]
    zero: WeightBlock
    inward: WeightBlock
    adjacent: WeightBlock


def parity_reflect_boundary(row: BoundaryRow) -> BoundaryRow:
    """Mirror a boundary recipe onto the opposite end of the lattice"""
    return BoundaryRow(
        side="right" if row.side == "left" else "left",
        zero=parity_transform(row.zero),
        inward=parity_transform(row.inward),
        adjacent=parity_transform(row.adjacent),
    )


def bulk_unitarity_residual(params: RuleParams) -> float:
    """Largest deviation of the bulk row and column normalization identities"""
    blocks = bulk_weights(params)
    rows = sum(w @ w.conj().T for w in blocks)
    cols = sum(w.conj().T @ w for w in blocks)
    eye = np.eye(2)
    return float(max(np.abs(rows - eye).max(), np.abs(cols - eye).max()))

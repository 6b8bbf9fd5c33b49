"""
Parsing and formatting helpers shared by the CLI and the writers
"""
import hashlib
import math
from pathlib import Path
from typing import List, Union

import numpy as np

from config.schemas import PacketSpec
from utils.errors import BadRange


def parse_grid(text: str) -> List[float]:
    """
    Parse a sweep grid "a:b:n" into n evenly spaced values in [a, b)

    Args:
        text: grid description, angles in decimal radians

    Returns:
        List of grid values
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise BadRange(f"grid must look like a:b:n, got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as error:
        raise BadRange(f"grid {text!r}: {error}") from error
    if count < 1:
        raise BadRange(f"grid needs at least one point, got {count}")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise BadRange(f"grid bounds must be finite, got {text!r}")
    return [float(v) for v in np.linspace(start, stop, count, endpoint=False)]


def parse_packet(text: str) -> PacketSpec:
    """
    Parse a packet description "k0,x0,w,eps"

    Args:
        text: comma separated wavenumber, center site, even width and branch (+1 or -1)

    Returns:
        PacketSpec
    """
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 4:
        raise BadRange(f"packet must look like k0,x0,w,eps, got {text!r}")
    try:
        return PacketSpec(k0=float(parts[0]), x0=int(parts[1]), width=int(parts[2]), epsilon=int(parts[3]))
    except ValueError as error:
        raise BadRange(f"packet {text!r}: {error}") from error


def sha256_file(path: Union[str, Path]) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def format_complex(value: complex) -> str:
    """17 significant digits, e.g. 1.7071067811865475+1.7071067811865475i"""
    value = complex(value)
    sign = "+" if value.imag >= 0 or math.isnan(value.imag) else "-"
    return f"{value.real:.17g}{sign}{abs(value.imag):.17g}i"


def wrap_angle(angle):
    """Map angles into (-pi, pi]; values already inside are returned unchanged"""
    angle = np.asarray(angle, dtype=float)
    wrapped = np.where(np.abs(angle) <= np.pi, angle, np.remainder(angle + np.pi, 2 * np.pi) - np.pi)
    wrapped = np.where(wrapped <= -np.pi, wrapped + 2 * np.pi, wrapped)
    return float(wrapped) if wrapped.ndim == 0 else wrapped

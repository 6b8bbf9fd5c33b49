"""
Shared fixtures and config builders for the test suite
"""
import json
from typing import Any, Dict, List, Optional

import numpy as np
import pytest

from lattice_gas.lattice import assemble_operator, validate_config

QUARTER = np.pi / 4
THIRD = np.pi / 3


def boundary(kind: str, **params: float) -> Dict[str, Any]:
    return {"kind": kind, **params}


def config_dict(
    size: int,
    left: Dict[str, Any],
    right: Optional[Dict[str, Any]] = None,
    segments: Optional[List[Dict[str, Any]]] = None,
    junctions: Optional[List[Dict[str, Any]]] = None,
    rho: float = 0.0,
    theta: float = QUARTER,
) -> Dict[str, Any]:
    """Raw config; a single homogeneous segment unless segments are given"""
    return {
        "size": size,
        "boundaries": {"left": left, "right": right if right is not None else left},
        "segments": segments or [{"from": 0, "to": size - 1, "rho": rho, "theta": theta}],
        "junctions": junctions or [],
    }


def build(raw: Dict[str, Any]):
    config = validate_config(raw)
    return config, assemble_operator(config)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def write_config(tmp_path):
    def _write(raw: Dict[str, Any], name: str = "config.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(raw), encoding="utf-8")
        return str(path)
    return _write

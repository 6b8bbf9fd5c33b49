from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from config.constants import TRAJECTORY_COLUMNS
from config.schemas import PacketSpec, RuleParams
from lattice_gas import dynamics
from lattice_gas.lattice import assemble_operator, load_config, mirror_config
from lattice_gas.spectral import dispersion_omega, group_velocity
from utils.errors import BadRange, LengthMismatch, OutOfRange

from conftest import QUARTER, boundary, build, config_dict

CONFIGS = Path(__file__).resolve().parent.parent / "configs"

PERIODIC = boundary("periodic")
TYPE1 = boundary("typeI", upsilon=0.0)
TYPE2 = boundary("typeII", zeta=0.0)
TYPE3 = boundary("typeIII", theta_prime=0.4, upsilon=0.3, zeta=-1.1)
SCATTERING_PACKET = PacketSpec(k0=QUARTER, x0=16, width=32)


# Packets

def test_delta_packet():
    spec = PacketSpec(k0=0.3, x0=5, width=0, epsilon=1)
    state = dynamics.binomial_packet(spec, RuleParams(rho=0.2, theta=0.7), 10)
    p = state.probabilities().sum(axis=1)
    assert p[5] == pytest.approx(1.0, abs=1e-15)
    assert np.count_nonzero(p) == 1


def test_binomial_envelope():
    spec = PacketSpec(k0=1.1, x0=6, width=4, epsilon=-1)
    state = dynamics.binomial_packet(spec, RuleParams(rho=0.5, theta=0.9), 12)
    p = state.probabilities().sum(axis=1)
    assert np.allclose(p[4:9], np.array([1, 4, 6, 4, 1]) / 16, atol=1e-15)
    assert state.norm() == pytest.approx(1.0, abs=1e-14)


def test_packet_rejects_bad_support_and_width():
    with pytest.raises(OutOfRange):
        dynamics.binomial_packet(PacketSpec(k0=0.0, x0=2, width=6), RuleParams(rho=0.0, theta=QUARTER), 10)
    with pytest.raises(OutOfRange):
        dynamics.binomial_packet(PacketSpec(k0=0.0, x0=8, width=4), RuleParams(rho=0.0, theta=QUARTER), 10)
    with pytest.raises(ValidationError):
        PacketSpec(k0=0.0, x0=5, width=3)


def test_packet_zeroes_type2_corners():
    config, op = build(config_dict(16, TYPE2, rho=QUARTER, theta=QUARTER))
    state = dynamics.packet_for_config(PacketSpec(k0=QUARTER, x0=1, width=2), config, op)
    assert state.amplitudes[0, 0] == 0
    assert state.norm() == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(OutOfRange):
        dynamics.packet_for_config(PacketSpec(k0=QUARTER, x0=16, width=0), config, op)


# Evolution

def test_zero_steps_records_initial_state():
    config, op = build(config_dict(8, TYPE1))
    state = dynamics.packet_for_config(PacketSpec(k0=0.5, x0=4, width=2), config, op)
    trajectory = dynamics.evolve(op, state, 0)
    assert len(trajectory) == 1
    assert np.allclose(trajectory.probabilities[0], state.probabilities())


def test_record_stride_includes_last_step():
    config, op = build(config_dict(8, TYPE1))
    state = dynamics.packet_for_config(PacketSpec(k0=0.5, x0=4, width=2), config, op)
    trajectory = dynamics.evolve(op, state, 10, record_every=4)
    assert list(trajectory.times) == [0, 4, 8, 10]


def test_evolve_rejects_bad_input():
    config, op = build(config_dict(8, TYPE1))
    state = dynamics.packet_for_config(PacketSpec(k0=0.5, x0=4, width=2), config, op)
    with pytest.raises(LengthMismatch):
        dynamics.evolve(op, dynamics.State(np.zeros((6, 2))), 3)
    with pytest.raises(BadRange):
        dynamics.evolve(op, state, -1)
    with pytest.raises(BadRange):
        dynamics.evolve(op, state, 3, record_every=0)


def test_periodic_plane_wave_is_stationary():
    rule = RuleParams(rho=0.3, theta=0.7)
    _, op = build(config_dict(16, PERIODIC, rho=rule.rho, theta=rule.theta))
    state = dynamics.plane_wave_state(2 * np.pi * 3 / 16, 1, rule, 16)
    trajectory = dynamics.evolve(op, state, 20)
    assert np.allclose(trajectory.probabilities, trajectory.probabilities[0][None], atol=1e-12)


def test_plane_wave_phase_follows_dispersion():
    rule = RuleParams(rho=0.0, theta=QUARTER)
    k = 2 * np.pi * 8 / 64
    _, op = build(config_dict(64, PERIODIC, rho=0.0, theta=QUARTER))
    state = dynamics.plane_wave_state(k, 1, rule, 64)
    final = dynamics.evolve(op, state, 100).final
    expected = np.exp(-1j * 100 * dispersion_omega(k, rule)) * state.amplitudes
    assert np.abs(final.amplitudes - expected).max() <= 1e-9


@pytest.mark.parametrize("left", [TYPE1, TYPE3, PERIODIC])
def test_norm_conserved_over_long_runs(left, rng):
    config, op = build(config_dict(32, left, rho=0.6, theta=1.1))
    amplitudes = rng.normal(size=(32, 2)) + 1j * rng.normal(size=(32, 2))
    state = dynamics.State(amplitudes / np.linalg.norm(amplitudes))
    trajectory = dynamics.evolve(op, state, 1000, record_every=50)
    assert trajectory.norm_drift() <= 1e-10


def test_type2_corner_stays_empty():
    config, op = build(config_dict(16, TYPE2, rho=QUARTER, theta=QUARTER))
    state = dynamics.packet_for_config(PacketSpec(k0=2.0, x0=3, width=6, epsilon=-1), config, op)
    trajectory = dynamics.evolve(op, state, 50, record_amplitudes=True)
    assert np.all(trajectory.amplitudes[:, 0, 0] == 0)
    assert np.all(trajectory.amplitudes[:, 15, 1] == 0)
    assert trajectory.norm_drift() <= 1e-12


def test_packet_moves_at_group_velocity():
    rule = RuleParams(rho=QUARTER, theta=QUARTER)
    config, op = build(config_dict(128, PERIODIC, rho=QUARTER, theta=QUARTER))
    state = dynamics.packet_for_config(PacketSpec(k0=QUARTER, x0=40, width=64), config, op)
    final = dynamics.evolve(op, state, 16).final
    speed = (dynamics.centroid(final) - dynamics.centroid(state)) / 16
    assert group_velocity(QUARTER, rule) == pytest.approx(0.6786, abs=1e-4)
    assert speed == pytest.approx(group_velocity(QUARTER, rule), rel=0.1)


def test_packet_crosses_type2_junction():
    config = load_config(CONFIGS / "junction_typeII.json")
    op = assemble_operator(config)
    state = dynamics.packet_for_config(SCATTERING_PACKET, config, op)
    trajectory = dynamics.evolve(op, state, 256, record_every=16, record_amplitudes=True)
    assert trajectory.norm_drift() <= 1e-10
    centroids = [dynamics.centroid(dynamics.State(a)) for a in trajectory.amplitudes]
    first = next(i for i, c in enumerate(centroids) if c > 31.5)
    crossed = dynamics.State(trajectory.amplitudes[first])
    assert dynamics.region_probability(crossed, 32, 63) > dynamics.region_probability(crossed, 0, 31)


def test_packet_reflects_from_type1_wall():
    config = load_config(CONFIGS / "packet_typeI.json")
    op = assemble_operator(config)
    state = dynamics.packet_for_config(SCATTERING_PACKET, config, op)
    trajectory = dynamics.evolve(op, state, 192, record_every=16, record_amplitudes=True)
    centroids = np.array([dynamics.centroid(dynamics.State(a)) for a in trajectory.amplitudes])
    peak = int(np.argmax(centroids))
    assert centroids[0] == pytest.approx(16.0, abs=1e-9)
    assert centroids[peak] > 48
    assert 0 < trajectory.times[peak] < 128
    assert centroids[list(trajectory.times).index(128)] < centroids[peak]
    assert dynamics.region_probability(trajectory.final, 0, 31) > 0.5


@pytest.mark.parametrize("path", sorted(CONFIGS.glob("*.json")), ids=lambda p: p.stem)
def test_shipped_configs_conserve_norm(path):
    config = load_config(path)
    op = assemble_operator(config)
    if config.size >= 64:
        spec = SCATTERING_PACKET
    else:
        spec = PacketSpec(k0=QUARTER, x0=config.size // 2, width=2)
    state = dynamics.packet_for_config(spec, config, op)
    assert dynamics.evolve(op, state, 256, record_every=64).norm_drift() <= 1e-10


def test_evolution_commutes_with_parity(rng):
    raw = config_dict(
        20,
        boundary("typeI", upsilon=0.4),
        TYPE3,
        segments=[
            {"from": 0, "to": 9, "rho": 0.2, "theta": 0.9},
            {"from": 10, "to": 19, "rho": 0.7, "theta": 0.9},
        ],
        junctions=[{"kind": "typeI", "site": 9}],
    )
    config, op = build(raw)
    mirrored_op = assemble_operator(mirror_config(config))
    amplitudes = rng.normal(size=(20, 2)) + 1j * rng.normal(size=(20, 2))
    state = dynamics.State(amplitudes / np.linalg.norm(amplitudes))

    direct = dynamics.mirror_state(dynamics.evolve(op, state, 30).final)
    via_mirror = dynamics.evolve(mirrored_op, dynamics.mirror_state(state), 30).final
    assert np.abs(direct.amplitudes - via_mirror.amplitudes).max() <= 1e-12


# Observables

def test_region_probability():
    config, op = build(config_dict(12, TYPE1))
    state = dynamics.packet_for_config(PacketSpec(k0=0.2, x0=6, width=4), config, op)
    assert dynamics.region_probability(state, 0, 11) == pytest.approx(1.0, abs=1e-14)
    assert dynamics.region_probability(state, 6, 6) == pytest.approx(6 / 16, abs=1e-14)
    assert dynamics.centroid(state) == pytest.approx(6.0, abs=1e-12)
    with pytest.raises(BadRange):
        dynamics.region_probability(state, 3, 2)
    with pytest.raises(BadRange):
        dynamics.region_probability(state, 0, 12)
    with pytest.raises(BadRange):
        dynamics.centroid(dynamics.State(np.zeros((12, 2), dtype=complex)))


def test_trajectory_frame():
    config, op = build(config_dict(8, TYPE1))
    state = dynamics.packet_for_config(PacketSpec(k0=0.5, x0=4, width=2), config, op)
    frame = dynamics.evolve(op, state, 3).to_frame()
    assert list(frame.columns) == TRAJECTORY_COLUMNS
    assert len(frame) == 4 * 8
    assert list(frame["t"][:8]) == [0] * 8
    assert list(frame["x"][:8]) == list(range(8))
    assert np.allclose(frame["p_total"], frame["p_minus"] + frame["p_plus"])

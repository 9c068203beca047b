import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from kurasync.core import (
    coupling_map,
    energy,
    jacobian,
    order_parameter,
    project_mean_zero,
    rank2_parts,
    velocity_field,
)
from kurasync.errors import DimensionMismatch

angles = st.floats(-20, 20, allow_nan=False)
phases = st.integers(2, 9).flatmap(lambda n: arrays(float, n, elements=angles))


def brute_force_f(theta):
    n = len(theta)
    return np.array([sum(np.sin(theta[j] - theta[i]) for j in range(n)) for i in range(n)])


def brute_force_jacobian(theta):
    n = len(theta)
    J = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            J[i, j] = np.cos(theta[i] - theta[j]) if i != j else -sum(
                np.cos(theta[k] - theta[i]) for k in range(n) if k != i)
    return J


def test_coupling_map_at_origin():
    assert np.allclose(coupling_map(np.zeros(5)), 0.0)


def test_coupling_map_vertex_value():
    f = coupling_map([0, np.pi / 2, np.pi / 2])
    assert np.allclose(f, [2, -1, -1], atol=1e-15)


def test_coupling_map_matches_double_loop():
    rng = np.random.default_rng(11)
    for _ in range(20):
        theta = rng.uniform(-np.pi, np.pi, 4)
        assert np.allclose(coupling_map(theta), brute_force_f(theta), atol=1e-13)


def test_velocity_field():
    theta = np.zeros(4)
    assert np.allclose(velocity_field(theta, np.zeros(4), 1.0), 0)
    theta = np.array([0.1, -0.4, 0.7, 0.2])
    f = coupling_map(theta)
    assert np.allclose(velocity_field(theta, -f, 1.0), 0, atol=1e-15)
    omega = np.array([0.5, -0.5, 0.25, -0.25])
    assert np.allclose(velocity_field(theta, omega, 2.0) - omega,
                       2 * (velocity_field(theta, omega, 1.0) - omega))
    with pytest.raises(DimensionMismatch):
        velocity_field(theta, np.zeros(3))


def test_jacobian_at_origin():
    J = jacobian(np.zeros(3))
    assert np.allclose(J, [[-2, 1, 1], [1, -2, 1], [1, 1, -2]])


def test_jacobian_matches_definition():
    rng = np.random.default_rng(3)
    for _ in range(20):
        theta = rng.uniform(0, 2 * np.pi, 5)
        assert np.allclose(jacobian(theta), brute_force_jacobian(theta), atol=1e-13)


def test_jacobian_is_derivative_of_f():
    rng = np.random.default_rng(4)
    theta = rng.uniform(0, 2 * np.pi, 6)
    h = 1e-6
    fd = np.column_stack([
        (coupling_map(theta + h * e) - coupling_map(theta - h * e)) / (2 * h) for e in np.eye(6)
    ])
    assert np.allclose(jacobian(theta), fd, atol=1e-8)


@given(phases)
def test_structural_identities(theta):
    f = coupling_map(theta)
    assert abs(f.sum()) < 1e-12 * len(theta)
    J = jacobian(theta)
    assert np.allclose(J, J.T)
    assert np.allclose(J.sum(axis=1), 0, atol=1e-12)
    assert np.allclose(rank2_parts(theta).reconstruct(), J, atol=1e-12)


@given(phases, st.floats(-50, 50))
def test_rotation_invariance(theta, c):
    assert np.allclose(jacobian(theta + c), jacobian(theta), atol=1e-10)
    assert np.allclose(coupling_map(theta + c), coupling_map(theta), atol=1e-10)


def test_rank2_parts_examples():
    p = rank2_parts(np.zeros(4))
    assert np.allclose(p.d, 4) and np.allclose(p.v, 0) and np.allclose(p.w, 1)
    p = rank2_parts([0, np.pi / 2, np.pi])
    # direct cosine sums: (1 + 0 - 1, 0 + 1 + 0, -1 + 0 + 1)
    assert np.allclose(p.d, [0, 1, 0], atol=1e-15)


def test_order_parameter():
    op = order_parameter(np.zeros(6))
    assert op.r == pytest.approx(1.0) and op.psi == 0.0
    op = order_parameter(2 * np.pi * np.arange(7) / 7)
    assert op.r < 1e-14 and op.psi == 0.0
    op = order_parameter([0, np.pi / 2, np.pi / 2])
    assert op.r == pytest.approx(np.sqrt(5) / 3)
    assert op.psi == pytest.approx(np.arctan2(2, 1))


@given(phases)
def test_order_parameter_reconstructs_phasor_sum(theta):
    op = order_parameter(theta)
    n = len(theta)
    assert 0 <= op.r <= 1 + 1e-15
    assert -np.pi < op.psi <= np.pi
    assert abs(op.r * n * np.exp(1j * op.psi) - np.exp(1j * theta).sum()) < 1e-12 * n


def test_energy_at_origin():
    assert energy(np.zeros(5), np.zeros(5), 1.0) == pytest.approx(12.5)


def test_energy_gradient_is_velocity_field():
    rng = np.random.default_rng(5)
    h = 1e-5
    for _ in range(50):
        n = rng.integers(2, 9)
        theta = rng.uniform(-np.pi, np.pi, n)
        omega = project_mean_zero(rng.standard_normal(n))
        gamma = rng.uniform(0.1, 3)
        grad = np.array([(energy(theta + h * e, omega, gamma) - energy(theta - h * e, omega, gamma))
                         / (2 * h) for e in np.eye(n)])
        assert np.allclose(grad, velocity_field(theta, omega, gamma), atol=1e-6)


def test_energy_rotation_invariant_for_mean_zero_omega():
    rng = np.random.default_rng(6)
    theta = rng.uniform(0, 6, 5)
    omega = project_mean_zero(rng.standard_normal(5))
    assert energy(theta + 1.7, omega, 1.3) == pytest.approx(energy(theta, omega, 1.3), abs=1e-12)


def test_project_mean_zero():
    assert np.allclose(project_mean_zero(np.full(4, 3.2)), 0)
    assert np.allclose(project_mean_zero([1, 2, 3]), [-1, 0, 1])
    w = np.array([0.5, -1.5, 1.0])
    assert np.allclose(project_mean_zero(w), w)


@settings(max_examples=50)
@given(phases, phases)
def test_project_mean_zero_idempotent_and_linear(a, b):
    n = min(len(a), len(b))
    a, b = a[:n], b[:n]
    pa = project_mean_zero(a)
    assert np.allclose(project_mean_zero(pa), pa, atol=1e-12)
    assert np.allclose(project_mean_zero(a + 2 * b), pa + 2 * project_mean_zero(b), atol=1e-10)
    assert abs(pa.sum()) < 1e-10

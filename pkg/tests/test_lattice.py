import math

import numpy as np
import pytest

from kurasync.core import coupling_map, project_mean_zero
from kurasync.index import index_oracle
from kurasync.lattice import (
    all_vertices,
    dual_polytope_vertex,
    inscribed_radius,
    omega_max,
    omega_min,
    vertex_class,
    vertex_classes,
    vertex_generating_theta,
    voronoi_contains,
)
from kurasync.region import boundary_distance, is_synchronizable, solve_kappa


def test_vertex_class_examples():
    vc = vertex_class(3, 2)
    assert np.array_equal(vc.canonical_omega, [1, 1, -2]) and vc.norm_sq == 6
    vc = vertex_class(4, 2)
    assert np.array_equal(vc.canonical_omega, [2, 2, -2, -2]) and vc.norm_sq == 16
    vc = vertex_class(4, 3)
    assert np.array_equal(vc.canonical_omega, [1, 1, 1, -3]) and vc.norm_sq == 12
    with pytest.raises(ValueError):
        vertex_class(4, 0)
    with pytest.raises(ValueError):
        vertex_class(4, 4)


@pytest.mark.parametrize("n", range(2, 13))
def test_vertex_class_invariants(n):
    total = 0
    for vc in vertex_classes(n):
        w = vc.canonical_omega
        assert w.sum() == 0
        assert w @ w == vc.i * (n - vc.i) * n == vc.norm_sq
        total += vc.multiplicity
    assert total == 2 ** n - 2
    verts = all_vertices(n)
    assert len({tuple(r) for r in verts}) == 2 ** n - 2


@pytest.mark.parametrize("n", range(2, 9))
def test_vertex_is_image_of_cube_corner(n):
    for i in range(1, n):
        theta = vertex_generating_theta(n, i)
        assert np.allclose(-coupling_map(theta), vertex_class(n, i).canonical_omega, atol=1e-12)


def test_n3_vertices_match_hexagon():
    verts = {tuple(r) for r in all_vertices(3)}
    expected = {(1, 1, -2), (1, -2, 1), (-2, 1, 1), (-1, -1, 2), (-1, 2, -1), (2, -1, -1)}
    assert verts == expected
    for v in verts:
        assert np.linalg.norm(v) == pytest.approx(math.sqrt(6))


def test_omega_min_max():
    assert omega_min(3) @ omega_min(3) == 6
    assert omega_max(4) @ omega_max(4) == 16
    assert omega_max(5) @ omega_max(5) == 30
    for n in range(2, 13):
        assert omega_min(n) @ omega_min(n) == n * (n - 1)
        expected = n ** 3 / 4 if n % 2 == 0 else n * (n * n - 1) / 4
        assert omega_max(n) @ omega_max(n) == expected
        norms = [vc.norm_sq for vc in vertex_classes(n)]
        assert min(norms) == n * (n - 1) and max(norms) == expected


def test_voronoi_contains_examples():
    assert voronoi_contains(np.zeros(3), 3)
    assert voronoi_contains([1.0, 1.0, -2.0], 3)
    w = np.array([1.6, 0.0, -1.6])
    assert not voronoi_contains(w, 3)
    assert np.linalg.norm(w) < math.sqrt(6)
    # outside the polytope but still inside the stable region
    assert is_synchronizable(w).synchronizable


def test_voronoi_spread_test_matches_cube_projection():
    # rejection-sample the cube, project: every projection passes the spread test;
    # and a point passing the test has an explicit lift into the cube
    rng = np.random.default_rng(0)
    for n in (2, 3, 4, 5):
        side = float(n)
        cube = rng.uniform(-side / 2, side / 2, (2000, n))
        proj = project_mean_zero(cube)
        assert all(voronoi_contains(p, side) for p in proj)
        for _ in range(500):
            w = project_mean_zero(rng.uniform(-side, side, n))
            inside = voronoi_contains(w, side)
            t = -(w.max() + w.min()) / 2
            lifted_ok = np.all(np.abs(w + t) <= side / 2 + 1e-12)
            assert inside == lifted_ok


def test_voronoi_inside_stable_region():
    rng = np.random.default_rng(1)
    for _ in range(300):
        n = int(rng.integers(3, 9))
        w = project_mean_zero(rng.standard_normal(n))
        w *= rng.uniform(0, 1) * n / (w.max() - w.min())
        d = is_synchronizable(w, with_theta=False)
        assert d.synchronizable or d.marginal


def test_inscribed_radius():
    assert inscribed_radius(2) == pytest.approx(math.sqrt(2))
    assert inscribed_radius(3) == pytest.approx(3 / math.sqrt(2))
    # N = 3 hexagon: edge midpoint of (1,1,-2) and (2,-1,-1)
    mid = (np.array([1, 1, -2]) + np.array([2, -1, -1])) / 2
    assert np.linalg.norm(mid) == pytest.approx(inscribed_radius(3))


def test_boundary_distance_above_inscribed_radius():
    rng = np.random.default_rng(2)
    for n in (3, 4, 5, 6):
        for _ in range(30):
            w = project_mean_zero(rng.standard_normal(n))
            u = w / np.linalg.norm(w)
            assert boundary_distance(u, 1e-9).s_star >= inscribed_radius(n) - 1e-8


@pytest.mark.parametrize("n", range(2, 9))
def test_vertices_are_marginal(n):
    for vc in vertex_classes(n):
        kv = solve_kappa(vc.canonical_omega)
        assert kv is not None
        assert np.sum(1 / kv.kappa) == pytest.approx(2.0, abs=1e-8)
        assert is_synchronizable(vc.canonical_omega).marginal
        assert index_oracle(vertex_generating_theta(n, vc.i)).n_zero == 2


def test_dual_polytope_vertex_n3():
    omega, coef = dual_polytope_vertex(3)
    assert coef == pytest.approx(1.5 * math.sqrt(3), abs=1e-12)
    assert np.allclose(omega, [coef, 0, -coef])


def test_dual_polytope_monotone_in_n():
    coefs = [dual_polytope_vertex(n)[1] for n in range(3, 11)]
    assert all(b > a for a, b in zip(coefs, coefs[1:]))


def test_dual_polytope_containment_is_reported_not_assumed():
    # the scaled dual vertex lies outside the measured region along its own
    # direction for N = 3 (2.598 vs 2.489)
    omega, coef = dual_polytope_vertex(3)
    s_star = boundary_distance(omega / np.linalg.norm(omega), 1e-9).s_star
    assert s_star < coef
    assert not is_synchronizable(omega).synchronizable

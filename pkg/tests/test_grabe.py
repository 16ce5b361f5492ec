"""
Tests for local cohomology dimensions and the closed-form predictors.
"""

import pytest

from hvec.complexes import SimplicialComplex, boundary_simplex
from hvec.grabe import (
    ds_relation_check,
    face_sum,
    grabe_degree_maps,
    l_dim,
    l_module_slice,
    local_cohomology_hilbert,
    predict_h_alg_penultimate,
    predict_h_sigma_penultimate,
    predict_mny,
    predict_schenzel,
    predict_stanley,
    predict_suspension,
    suspension_corollary_check,
    suspension_kernel_pattern,
    symmetry_check,
)
from hvec.lsop import generate_lsop, h_alg_vector
from hvec.sigma import h_sigma

BIG = 2147483647


def _cx(catalog, name):
    return catalog.get(name).complex


def test_local_cohomology_in_degree_zero(shipped_catalog):
    torus = _cx(shipped_catalog, "torus_7")
    assert local_cohomology_hilbert(torus, 2, 0, 3) == 2
    assert local_cohomology_hilbert(torus, 3, 0, 3) == 1
    assert local_cohomology_hilbert(boundary_simplex(3), 3, 0, 2) == 1
    with pytest.raises(ValueError):
        local_cohomology_hilbert(torus, 2, -1, 3)


def test_local_cohomology_of_the_bowtie(shipped_catalog):
    """Only the pinch vertex has a disconnected link."""
    bowtie = _cx(shipped_catalog, "bowtie")
    assert local_cohomology_hilbert(bowtie, 2, 1, 5) == 1
    assert local_cohomology_hilbert(bowtie, 3, 1, 5) == 0


def test_degree_maps_of_the_bowtie(shipped_catalog):
    bowtie = _cx(shipped_catalog, "bowtie")
    maps = grabe_degree_maps(bowtie, 2, 5)
    assert len(maps) == bowtie.n_vertices
    pinch = maps[bowtie.vertex_index("c")]
    assert (pinch.source_dim, pinch.target_dim) == (1, 0)
    assert sum(m.source_dim for m in maps) == 1


def test_l_module_dimensions(shipped_catalog):
    bowtie = _cx(shipped_catalog, "bowtie")
    system = generate_lsop(bowtie, 1, BIG)
    assert [l_dim(bowtie, system, 2, j) for j in range(4)] == [1, 1, 1, 1]
    sphere = boundary_simplex(3)
    sphere_system = generate_lsop(sphere, 1, BIG)
    assert all(l_dim(sphere, sphere_system, 2, j) == 0 for j in range(4))
    with pytest.raises(ValueError):
        l_module_slice(bowtie, system, 2, 4)


@pytest.mark.parametrize("name", ["torus_7", "bowtie", "lollipop", "disjoint_edges"])
def test_l_dim_shrinks_with_depth(shipped_catalog, name):
    cx = _cx(shipped_catalog, name)
    system = generate_lsop(cx, 2, BIG)
    for i in range(1, cx.d + 1):
        dims = [l_dim(cx, system, i, j) for j in range(cx.d + 1)]
        assert dims[0] == local_cohomology_hilbert(cx, i, 1, BIG)
        assert dims == sorted(dims, reverse=True)


def test_face_sum_skips_larger_faces(shipped_catalog):
    torus = _cx(shipped_catalog, "torus_7")
    assert face_sum(torus, 2, 0, BIG) == 0
    assert face_sum(torus, 2, 0, BIG, full_sum=True) == face_sum(torus, 2, 0, BIG)


@pytest.mark.parametrize("name, expected", [
    ("boundary_simplex_3", 1),
    ("bowtie", 0),
    ("disjoint_edges", 2),
    ("torus_7", 10),
])
def test_h_alg_penultimate_prediction(shipped_catalog, name, expected):
    cx = _cx(shipped_catalog, name)
    system = generate_lsop(cx, 1, BIG)
    assert predict_h_alg_penultimate(cx, system, BIG) == expected
    assert h_alg_vector(cx, system)[cx.d - 1] == expected


def test_h_sigma_penultimate_prediction(shipped_catalog):
    rp2 = _cx(shipped_catalog, "rp2_6")
    assert predict_h_sigma_penultimate(rp2, 2) == 3
    assert predict_h_sigma_penultimate(rp2, BIG) == 6
    assert predict_h_sigma_penultimate(boundary_simplex(3), 2) == 1
    bowtie = _cx(shipped_catalog, "bowtie")
    assert predict_h_sigma_penultimate(bowtie, BIG) == 0
    assert h_sigma(bowtie, generate_lsop(bowtie, 1, BIG), 2) == 0
    with pytest.raises(ValueError, match="d >= 1"):
        predict_h_sigma_penultimate(SimplicialComplex.empty(), 2)


def test_classical_predictors(shipped_catalog):
    rp2 = _cx(shipped_catalog, "rp2_6")
    assert predict_schenzel(rp2, 3, 2) == 1
    assert predict_schenzel(rp2, 3, 3) == 0
    assert tuple(predict_schenzel(rp2, i, 2) for i in range(4)) == (1, 3, 6, 1)
    assert predict_mny(rp2, 2, 2) == 3
    torus = _cx(shipped_catalog, "torus_7")
    assert tuple(predict_mny(torus, i, BIG) for i in range(4)) == (1, 4, 4, 1)
    assert predict_stanley(boundary_simplex(3)) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        predict_schenzel(rp2, 4, 2)


def test_suspension_of_disjoint_edges(shipped_catalog):
    """Σ of two edges: h = (1, 3, 1, -1), h^a = (1, 3, 1, 0), K0(3) lives in degree 2."""
    base = _cx(shipped_catalog, "disjoint_edges")
    report = suspension_corollary_check(base, BIG, 1)
    assert report.h_alg == (1, 3, 1, 0)
    assert report.predicted == report.corollary == report.h_alg
    assert report.kernel_expected[3] == (0, 0, 1, 0, 0)
    assert report.holds
    suspended = base.suspension()
    assert tuple(predict_suspension(suspended, i, BIG) for i in range(4)) == (1, 3, 1, 0)


def test_suspension_of_a_sphere():
    report = suspension_corollary_check(boundary_simplex(3), BIG, 2)
    assert report.holds
    assert report.h_alg == (1, 2, 2, 2, 1)
    pattern = suspension_kernel_pattern(boundary_simplex(3).suspension(), BIG, 5)
    assert all(not any(dims) for dims in pattern.values())


def test_ds_relation_on_pure_catalog(shipped_catalog):
    for entry in shipped_catalog:
        if not entry.pure:
            continue
        report = ds_relation_check(entry.complex)
        assert report.holds, entry.name
        assert len(report.lhs) == entry.complex.d + 1


def test_ds_relation_of_the_bowtie(shipped_catalog):
    report = ds_relation_check(_cx(shipped_catalog, "bowtie"))
    assert report.lhs[1] == -3
    assert report.rhs[1] == -3


def test_ds_relation_needs_a_pure_complex(shipped_catalog):
    with pytest.raises(ValueError, match="pure"):
        ds_relation_check(_cx(shipped_catalog, "lollipop"))


@pytest.mark.parametrize("name", ["boundary_simplex_3", "torus_7"])
def test_symmetry(shipped_catalog, name):
    cx = _cx(shipped_catalog, name)
    report = symmetry_check(cx, generate_lsop(cx, 1, BIG), BIG)
    assert report.holds
    assert report.lhs == 0


def test_symmetry_needs_d_two(shipped_catalog):
    point = _cx(shipped_catalog, "point")
    with pytest.raises(ValueError):
        symmetry_check(point, generate_lsop(point, 1, BIG), BIG)

"""
Tests for simplicial cohomology over GF(p).
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvec.cohomology import (
    CochainComplex,
    contrastar_betti,
    inclusion_induced_map,
    is_buchsbaum,
    is_cohen_macaulay,
    link_contrastar_check,
    reduced_betti,
    reduced_euler_characteristic,
    relative_betti,
    truncated_euler,
    unreduced_betti,
)
from hvec.complexes import SimplicialComplex, boundary_simplex, cycle
from hvec.errors import NotASubcomplexError, VoidComplexError
from hvec.linalg import rank
from hvec.random_complexes import random_complex


def _complex(catalog, name):
    return catalog.get(name).complex


@pytest.mark.parametrize("name, p, expected", [
    ("empty", 2, (1,)),
    ("point", 2, (0, 0)),
    ("s0", 3, (0, 1)),
    ("boundary_simplex_3", 2, (0, 0, 0, 1)),
    ("rp2_6", 2, (0, 0, 1, 1)),
    ("rp2_6", 3, (0, 0, 0, 0)),
    ("torus_7", 3, (0, 0, 2, 1)),
    ("torus_7", 2147483647, (0, 0, 2, 1)),
    ("bowtie", 2, (0, 0, 0, 0)),
    ("disjoint_edges", 5, (0, 1, 0)),
    ("suspension_rp2_6", 2, (0, 0, 0, 1, 1)),
])
def test_reduced_betti(shipped_catalog, name, p, expected):
    """Test reduced Betti numbers of catalog complexes."""
    assert reduced_betti(_complex(shipped_catalog, name), p).as_tuple() == expected


def test_betti_sequence_indexing():
    betti = reduced_betti(boundary_simplex(2), 2)
    assert betti[-1] == 0
    assert betti[1] == 1
    assert betti[5] == 0
    assert betti[-3] == 0
    assert betti.top_degree == 1
    assert betti.total() == 1


def test_void_complex_has_no_cohomology():
    with pytest.raises(VoidComplexError):
        reduced_betti(SimplicialComplex.void(), 2)


def test_coboundary_squares_to_zero(shipped_catalog):
    """δ∘δ = 0 on every catalog complex."""
    for entry in shipped_catalog:
        cc = CochainComplex.reduced(entry.complex, 3)
        for k in range(-2, entry.complex.dimension):
            assert (cc.coboundary(k + 1) @ cc.coboundary(k)).is_zero(), entry.name


def test_contrastar_betti_of_empty_face_is_reduced(shipped_catalog):
    cx = _complex(shipped_catalog, "torus_7")
    assert contrastar_betti(cx, (), 2) == reduced_betti(cx, 2)


def test_relative_betti():
    circle = cycle(4)
    assert relative_betti(circle, SimplicialComplex.void(), 2) == reduced_betti(circle, 2)
    assert relative_betti(circle, circle, 2).total() == 0
    # the circle relative to a vertex behaves like the circle
    vertex = SimplicialComplex.from_facets([["a"]])
    assert relative_betti(circle, vertex, 2)[1] == 1
    assert relative_betti(circle, vertex, 2)[0] == 0
    with pytest.raises(NotASubcomplexError):
        relative_betti(circle, SimplicialComplex.from_facets([["a", "c"]]), 2)
    with pytest.raises(NotASubcomplexError):
        relative_betti(circle, SimplicialComplex.from_facets([["z"]]), 2)


def test_link_contrastar_on_catalog(shipped_catalog):
    """H^m(Δ, cost F) matches the shifted link cohomology for every face."""
    for entry in shipped_catalog:
        cx = entry.complex
        if cx.n_vertices > 8:
            continue
        for face in cx.nonempty_faces():
            for p in (2, 3):
                report = link_contrastar_check(cx, face, p)
                assert report.holds, (entry.name, cx.labels_of(face), p)


def test_truncated_euler():
    sphere = boundary_simplex(3)
    assert truncated_euler(sphere, -2, 2) == 0
    assert truncated_euler(sphere, 1, 2) == 0
    assert truncated_euler(sphere, 2, 2) == 1
    assert truncated_euler(SimplicialComplex.empty(), -1, 2) == -1
    with pytest.raises(ValueError):
        truncated_euler(sphere, -3, 2)


def test_unreduced_betti():
    edges = SimplicialComplex.from_facets([["a", "b"], ["c", "d"]])
    betti = unreduced_betti(edges, 2)
    assert betti[-1] == 0
    assert betti[0] == 2
    assert betti[1] == 0


@given(st.integers(3, 7), st.integers(1, 3), st.floats(0.3, 0.9), st.integers(0, 5000))
@settings(max_examples=40, deadline=None)
def test_euler_characteristic_is_field_independent(n, dim, density, seed):
    dim = min(dim, n - 1)
    try:
        cx = random_complex(n, dim, density, seed)
    except ValueError:
        return
    expected = reduced_euler_characteristic(cx)
    for p in (2, 3, 2147483647):
        assert truncated_euler(cx, cx.dimension, p) == expected


def test_inclusion_induced_map():
    circle = boundary_simplex(2)
    m = inclusion_induced_map(circle, 0, 1, 5)
    assert m.shape == (1, 1)
    assert rank(m) == 1

    bowtie = SimplicialComplex.from_facets([["a", "b", "c"], ["c", "d", "e"]])
    pinch = bowtie.vertex_index("c")
    assert inclusion_induced_map(bowtie, pinch, 1, 5).shape == (0, 1)
    assert inclusion_induced_map(bowtie, pinch, 7, 5).shape == (0, 0)
    with pytest.raises(ValueError):
        inclusion_induced_map(bowtie, 9, 1, 5)


def test_cohomology_basis_coordinates():
    cc = CochainComplex.reduced(cycle(4), 7)
    basis = cc.cohomology_basis(1)
    assert basis.dim == 1
    assert basis.coordinates(basis.representatives[0]) == [1]
    boundary = cc.coboundary(0).apply({0: 1})
    assert basis.coordinates(boundary) == [0]


@pytest.mark.parametrize("name, p, cm, buchsbaum", [
    ("boundary_simplex_3", 2, True, True),
    ("rp2_6", 2, False, True),
    ("rp2_6", 3, True, True),
    ("torus_7", 3, False, True),
    ("bowtie", 2, False, False),
    ("disjoint_edges", 2, False, True),
    ("lollipop", 2, False, False),
    ("cone_rp2_6", 2, False, False),
])
def test_depth_conditions(shipped_catalog, name, p, cm, buchsbaum):
    cx = _complex(shipped_catalog, name)
    assert is_cohen_macaulay(cx, p) is cm
    assert is_buchsbaum(cx, p) is buchsbaum

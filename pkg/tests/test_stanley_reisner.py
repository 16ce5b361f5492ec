"""
Tests for the graded pieces of the face ring.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvec.complexes import SimplicialComplex, boundary_simplex
from hvec.errors import DimensionMismatchError
from hvec.stanley_reisner import (
    LinearForm,
    hilbert_function,
    hilbert_series_check,
    ideal_slice,
    monomial_basis,
    mult_matrix,
)


@pytest.fixture
def bowtie():
    return SimplicialComplex.from_facets([["a", "b", "c"], ["c", "d", "e"]])


def test_linear_form_reduces_coefficients():
    theta = LinearForm((5, -1, 7), 5)
    assert theta.coefficients == (0, 4, 2)
    assert theta.support() == (1, 2)
    assert len(theta) == 3
    assert LinearForm.variable(3, 1, 5).coefficients == (0, 1, 0)


def test_monomial_basis_of_triangle_boundary():
    """Test 𝕜[Δ]_2 of the boundary of a triangle: three squares and three edge products."""
    circle = boundary_simplex(2)
    basis = monomial_basis(circle, 2)
    assert len(basis) == 6
    assert (2, 0, 0) in basis.index
    assert (1, 1, 0) in basis.index
    assert list(basis.monomials) == sorted(basis.monomials, reverse=True)
    assert hilbert_function(circle, 2) == 6


def test_monomial_basis_edge_cases():
    empty = SimplicialComplex.empty()
    assert len(monomial_basis(empty, 0)) == 1
    assert len(monomial_basis(empty, 3)) == 0
    assert hilbert_function(empty, 3) == 0
    assert hilbert_function(empty, -1) == 0
    with pytest.raises(ValueError):
        monomial_basis(boundary_simplex(2), -1)


def test_hilbert_function_matches_basis(shipped_catalog):
    for entry in shipped_catalog:
        cx = entry.complex
        if cx.n_vertices > 8:
            continue
        for i in range(cx.d + 2):
            assert len(monomial_basis(cx, i)) == hilbert_function(cx, i), (entry.name, i)


def test_hilbert_series_check(shipped_catalog):
    for name in ("empty", "point", "boundary_simplex_3", "bowtie", "lollipop", "rp2_6"):
        cx = shipped_catalog.get(name).complex
        report = hilbert_series_check(cx, cx.d + 2)
        assert report.holds, name
        assert report.first_failure is None
    with pytest.raises(ValueError):
        hilbert_series_check(boundary_simplex(3), 1)


def test_products_leaving_the_complex_vanish(bowtie):
    """x_a · x_d = 0 because {a, d} is not a face."""
    n = bowtie.n_vertices
    a, d = bowtie.vertex_index("a"), bowtie.vertex_index("d")
    x_a = monomial_basis(bowtie, 1).position(tuple(1 if v == a else 0 for v in range(n)))
    times_d = mult_matrix(bowtie, LinearForm.variable(n, d, 7), 1)
    assert times_d.apply({x_a: 1}) == {}
    times_a = mult_matrix(bowtie, LinearForm.variable(n, a, 7), 1)
    assert times_a.apply({x_a: 1}) != {}


def test_mult_matrix_shape_and_length_check(bowtie):
    theta = LinearForm((1, 2, 3, 4, 5), 11)
    m = mult_matrix(bowtie, theta, 1)
    assert m.shape == (len(monomial_basis(bowtie, 2)), len(monomial_basis(bowtie, 1)))
    with pytest.raises(DimensionMismatchError):
        mult_matrix(bowtie, LinearForm((1, 2), 11), 1)


@given(st.integers(0, 2**16), st.integers(0, 2))
@settings(max_examples=30, deadline=None)
def test_multiplication_commutes(seed, degree):
    cx = boundary_simplex(3)
    p = 101
    rng = np.random.default_rng(seed)
    theta, eta = (LinearForm(tuple(int(c) for c in rng.integers(0, p, size=4)), p) for _ in range(2))
    left = mult_matrix(cx, theta, degree + 1) @ mult_matrix(cx, eta, degree)
    right = mult_matrix(cx, eta, degree + 1) @ mult_matrix(cx, theta, degree)
    assert left == right


def test_ideal_slice(bowtie):
    n, p = bowtie.n_vertices, 13
    variables = [LinearForm.variable(n, v, p) for v in range(n)]
    assert ideal_slice(bowtie, variables, 2).codim == 0
    assert ideal_slice(bowtie, variables, 0).dim == 0
    assert ideal_slice(bowtie, [], 2, p).dim == 0
    one = ideal_slice(bowtie, variables[:1], 1)
    assert one.dim == 1


def test_ideal_slice_errors(bowtie):
    n = bowtie.n_vertices
    with pytest.raises(ValueError, match="field is unknown"):
        ideal_slice(bowtie, [], 2)
    with pytest.raises(DimensionMismatchError, match="different fields"):
        ideal_slice(bowtie, [LinearForm.variable(n, 0, 3), LinearForm.variable(n, 1, 5)], 1)
    with pytest.raises(DimensionMismatchError):
        ideal_slice(bowtie, [LinearForm((1,), 3)], 1)
    with pytest.raises(ValueError):
        ideal_slice(bowtie, [LinearForm.variable(n, 0, 3)], -1)

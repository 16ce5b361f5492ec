"""
Tests for the Sigma and τ submodules.
"""

import pytest

from hvec.complexes import boundary_simplex
from hvec.errors import NotAnLsopError
from hvec.lsop import generate_lsop, h_alg_vector
from hvec.sigma import (
    colon_kernel,
    h_sigma,
    h_sigma_vector,
    h_tau,
    h_tau_vector,
    saturation_kernel,
    sigma_slice,
    tau_slice,
)
from hvec.stanley_reisner import LinearForm, ideal_slice

BIG = 2147483647


@pytest.fixture(scope="module")
def torus(shipped_catalog):
    cx = shipped_catalog.get("torus_7").complex
    return cx, generate_lsop(cx, 1, BIG)


def test_sigma_equals_h_on_spheres():
    for d in (2, 3):
        cx = boundary_simplex(d)
        system = generate_lsop(cx, 4, BIG)
        assert h_sigma_vector(cx, system) == cx.h_vector()
        assert h_tau_vector(cx, system) == cx.h_vector()


def test_h_sigma_of_the_torus(torus):
    """h^s_i = h_i + (-1)^i C(3, i) χ̃_{i-1} below the top, β̃_2 = 1 on top."""
    cx, system = torus
    assert h_sigma_vector(cx, system) == (1, 4, 4, 1)
    assert h_sigma(cx, system, -1) == 0
    assert h_sigma(cx, system, 4) == 0


def test_h_tau_matches_h_sigma_in_penultimate_degree(torus, shipped_catalog):
    cx, system = torus
    assert h_tau(cx, system, cx.d - 1) == h_sigma(cx, system, cx.d - 1)
    bowtie = shipped_catalog.get("bowtie").complex
    bowtie_system = generate_lsop(bowtie, 2, BIG)
    assert h_tau(bowtie, bowtie_system, bowtie.d - 1) == h_sigma(bowtie, bowtie_system, bowtie.d - 1)


def test_sigma_contains_the_ideal(torus):
    cx, system = torus
    for i in range(cx.d + 1):
        ideal = ideal_slice(cx, system.forms, i, system.p)
        assert ideal <= sigma_slice(cx, system, i).subspace
        assert ideal <= tau_slice(cx, system, i).subspace
    assert sigma_slice(cx, system, -1).dim == 0
    assert tau_slice(cx, system, -1).dim == 0


def test_colon_kernel_contains_other_forms(torus):
    cx, system = torus
    for j in range(1, system.d + 1):
        for i in range(cx.d):
            assert ideal_slice(cx, system.without(j), i, system.p) <= colon_kernel(cx, system, j, i)
    assert colon_kernel(cx, system, 1, -1).dim == 0


def test_h_sigma_bounded_by_h_alg(shipped_catalog):
    """Σ(Θ) contains (Θ), so h^s <= h^a coordinatewise."""
    for entry in shipped_catalog:
        cx = entry.complex
        if cx.n_vertices > 7:
            continue
        system = generate_lsop(cx, 1, BIG)
        sigma = h_sigma_vector(cx, system)
        alg = h_alg_vector(cx, system)
        assert all(s <= a for s, a in zip(sigma, alg)), entry.name


def test_saturation_kernel_vanishes_for_regular_sequences():
    cx = boundary_simplex(3)
    system = generate_lsop(cx, 5, BIG)
    for i in range(cx.d + 1):
        assert saturation_kernel(cx, system.without(1), system.theta(1), i).dim == 0
    assert saturation_kernel(cx, system.without(1), system.theta(1), -1).dim == 0


def test_saturation_kernel_needs_a_system():
    cx = boundary_simplex(2)
    x = LinearForm((1, 0, 0), 5)
    with pytest.raises(NotAnLsopError):
        saturation_kernel(cx, [x], x, 1)

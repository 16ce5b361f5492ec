"""
Tests for the seeded random complex samplers.
"""

import pytest

from hvec.random_complexes import (
    DEFAULT_VERTEX_CAP,
    from_spec,
    random_complex,
    random_population,
    random_pure_complex,
    spec_name,
)
from hvec.schemas import RandomComplexSpec, RandomPopulationSpec


def test_random_complex_is_seeded():
    first = random_complex(7, 2, 0.4, 11)
    assert first == random_complex(7, 2, 0.4, 11)
    assert first.dimension <= 2
    assert first.n_vertices <= 7


def test_full_density_gives_the_skeleton():
    skeleton = random_complex(5, 2, 1.0, 3)
    assert skeleton.f_vector() == (1, 5, 10, 10)
    assert skeleton.is_pure()


def test_random_complex_errors():
    with pytest.raises(ValueError, match="capped"):
        random_complex(DEFAULT_VERTEX_CAP + 1, 2, 0.5, 1)
    with pytest.raises(ValueError, match="dim"):
        random_complex(4, 4, 0.5, 1)
    with pytest.raises(ValueError, match="empty"):
        random_complex(3, 0, 1e-12, 1)
    assert random_complex(20, 1, 0.5, 1, cap=20).n_vertices <= 20


def test_random_pure_complex():
    cx = random_pure_complex(8, 2, 6, 5)
    assert cx.is_pure()
    assert cx.dimension == 2
    assert len(cx.facets) == 6
    assert cx == random_pure_complex(8, 2, 6, 5)
    with pytest.raises(ValueError, match="count"):
        random_pure_complex(4, 2, 5, 1)
    with pytest.raises(ValueError, match="count"):
        random_pure_complex(4, 2, 0, 1)


def test_from_spec_and_names():
    pure = RandomComplexSpec(n=6, dim=1, count=4, seed=2, pure=True)
    assert from_spec(pure) == random_pure_complex(6, 1, 4, 2)
    assert spec_name(pure) == "random_pure(n=6,dim=1,count=4,seed=2)"
    mixed = RandomComplexSpec(n=6, dim=2, density=0.5, seed=9)
    assert from_spec(mixed) == random_complex(6, 2, 0.5, 9)
    assert spec_name(mixed) == "random(n=6,dim=2,density=0.5,seed=9)"


@pytest.mark.parametrize("pure", [True, False])
def test_random_population(pure):
    spec = RandomPopulationSpec(count=12, n_max=7, dim_max=3, pure=pure, density=0.4, seed=4)
    population = random_population(spec)
    assert len(population) == 12
    assert [name for name, _ in population] == [name for name, _ in random_population(spec)]
    for name, cx in population:
        assert name.startswith("random_pure(" if pure else "random(")
        assert cx.n_vertices <= 7
        assert 0 <= cx.dimension <= 3
        if pure:
            assert cx.is_pure()
    assert random_population(spec.model_copy(update={"count": 0})) == []

"""
Seeded random simplicial complexes.
"""

from itertools import combinations
from math import comb

import numpy as np
from loguru import logger

from .complexes import SimplicialComplex, default_labels
from .schemas import RandomComplexSpec, RandomPopulationSpec

DEFAULT_VERTEX_CAP = 12


def _check_size(n: int, dim: int, cap: int) -> None:
    if n > cap:
        raise ValueError(f"Random complexes are capped at {cap} vertices, got {n}")
    if not 0 <= dim <= n - 1:
        raise ValueError(f"Need 0 <= dim <= n - 1, got dim {dim} with n {n}")


def random_complex(n: int, dim: int, density: float, seed: int,
                   cap: int = DEFAULT_VERTEX_CAP) -> SimplicialComplex:
    """Downward closure of a random family of faces of dimension at most ``dim``.

    Every subset of size 1..dim+1 is kept independently with probability
    ``density``, so density 1.0 gives the full dim-skeleton.

    Raises:
        ValueError: If nothing was sampled or the size is out of range.
    """
    _check_size(n, dim, cap)
    labels = default_labels(n)
    rng = np.random.default_rng(seed)
    chosen = []
    for size in range(1, dim + 2):
        candidates = list(combinations(range(n), size))
        keep = rng.random(len(candidates)) < density
        chosen.extend(c for c, k in zip(candidates, keep) if k)
    if not chosen:
        raise ValueError(f"Random sample with density {density} and seed {seed} is empty")
    return SimplicialComplex.from_facets([labels[v] for v in face] for face in chosen)


def random_pure_complex(n: int, dim: int, count: int, seed: int,
                        cap: int = DEFAULT_VERTEX_CAP) -> SimplicialComplex:
    """``count`` distinct random facets of dimension ``dim``.

    Raises:
        ValueError: If ``count`` is not between 1 and C(n, dim+1).
    """
    _check_size(n, dim, cap)
    available = comb(n, dim + 1)
    if not 1 <= count <= available:
        raise ValueError(f"count must be in 1..{available}, got {count}")
    labels = default_labels(n)
    candidates = list(combinations(range(n), dim + 1))
    rng = np.random.default_rng(seed)
    picks = rng.choice(len(candidates), size=count, replace=False)
    return SimplicialComplex.from_facets([labels[v] for v in candidates[k]] for k in sorted(picks.tolist()))


def spec_name(spec: RandomComplexSpec) -> str:
    if spec.pure:
        return f"random_pure(n={spec.n},dim={spec.dim},count={spec.count},seed={spec.seed})"
    return f"random(n={spec.n},dim={spec.dim},density={spec.density},seed={spec.seed})"


def from_spec(spec: RandomComplexSpec, cap: int = DEFAULT_VERTEX_CAP) -> SimplicialComplex:
    if spec.pure:
        return random_pure_complex(spec.n, spec.dim, spec.count, spec.seed, cap)
    return random_complex(spec.n, spec.dim, spec.density, spec.seed, cap)


def random_population(spec: RandomPopulationSpec,
                      cap: int = DEFAULT_VERTEX_CAP) -> list[tuple[str, SimplicialComplex]]:
    """``spec.count`` named random complexes of dimension 1..dim_max on at most n_max vertices."""
    rng = np.random.default_rng(spec.seed)
    n_max = min(spec.n_max, cap)
    population = []
    while len(population) < spec.count:
        dim = int(rng.integers(1, spec.dim_max + 1))
        dim = min(dim, n_max - 2)
        n = int(rng.integers(dim + 2, n_max + 1))
        child_seed = int(rng.integers(0, 2**31 - 1))
        if spec.pure:
            count = int(rng.integers(1, min(comb(n, dim + 1), 2 * n) + 1))
            item = RandomComplexSpec(n=n, dim=dim, count=count, seed=child_seed, pure=True)
        else:
            item = RandomComplexSpec(n=n, dim=dim, density=spec.density, seed=child_seed)
        try:
            cx = from_spec(item, cap)
        except ValueError:
            continue
        population.append((spec_name(item), cx))
    logger.info(f"drew {len(population)} random {'pure ' if spec.pure else ''}complexes (seed {spec.seed})")
    return population

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from leibnizkit.catalog import FamilySpec, build
from leibnizkit.cohomology import derivation_space, inner_derivation_space
from leibnizkit.core import Algebra
from leibnizkit.linalg import Matrix, rank, zero_vec
from leibnizkit.scalars import ONE, Scalar

DATA = os.path.join(os.path.dirname(__file__), "data")

_algebras = {}
_der_cache = {}
_inn_cache = {}


def alg(family, n, **params):
    """Cached catalog construction keyed by (family, n, params)."""
    key = (family, n, tuple(sorted((k, str(Scalar(v) if isinstance(v, int) else v))
                                   for k, v in params.items())))
    if key not in _algebras:
        _algebras[key] = build(FamilySpec(family, n, params or None))
    return _algebras[key]


def cached_der(algebra):
    key = algebra.key()
    if key not in _der_cache:
        _der_cache[key] = derivation_space(algebra)
    return _der_cache[key]


def cached_inn(algebra):
    key = algebra.key()
    if key not in _inn_cache:
        _inn_cache[key] = inner_derivation_space(algebra)
    return _inn_cache[key]


def mutated_m7():
    """M(7) with the extra product [y2, y6] = y1: the negative control."""
    m7 = alg("M", 7)
    gamma = dict(m7.gamma)
    v = zero_vec(8)
    v[0] = ONE
    gamma[(1, 5)] = tuple(v)
    return Algebra(m7.labels, gamma)


def random_vector(rng, n, lo=-3, hi=3):
    return [Scalar(rng.randint(lo, hi), rng.randint(-1, 1)) for _ in range(n)]


def random_invertible(rng, n, lo=-2, hi=2):
    while True:
        m = Matrix(n, n, [[Scalar(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)])
        if rank(m) == n:
            return m


def random_structured_invertible(rng, n):
    """Permutation x diagonal x one shear: invertible, sparse columns.

    Transported structure constants stay sparse, so bulk property sampling
    stays fast; mix in a few dense random_invertible samples for coverage.
    """
    perm = list(range(n))
    rng.shuffle(perm)
    diag = [Scalar(rng.choice((1, -1, 2, -2, 3))) for _ in range(n)]
    m = Matrix.zero(n, n)
    for j in range(n):
        m.data[perm[j]][j] = diag[j]
    r, s = rng.randrange(n), rng.randrange(n)
    if r != s:
        m.data[perm[r]][s] = m.data[perm[r]][s] + Scalar(rng.randint(-2, 2)) * diag[r]
    return m


@pytest.fixture
def rng():
    return random.Random(20240811)

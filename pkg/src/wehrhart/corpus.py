"""Bundled polytope corpus.

The same fixed polytopes back the test suite, the demos, and the JSON
fixture files shipped in fixtures/.  build() memoizes lattices so point
partitions and poset polynomials are shared across callers.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .polytope import FaceLattice, build_face_lattice, facet_presentation

SEGMENT = ((0,), (1,))
SQUARE = ((0, 0), (1, 0), (0, 1), (1, 1))
CUBE = tuple(itertools.product((0, 1), repeat=3))
PYRAMID = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1))

RANDOM3_SEED = 7
RANDOM3_DRAWS = 10


def simplex(n: int):
    """Standard simplex: origin plus the n unit vectors."""
    verts = [(0,) * n]
    for i in range(n):
        verts.append(tuple(1 if j == i else 0 for j in range(n)))
    return tuple(verts)


def random3_points(seed: int = RANDOM3_SEED):
    """Seeded draws in {-3..3}^3; the hull of these is the corpus polytope."""
    rng = random.Random(seed)
    return tuple(
        tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(RANDOM3_DRAWS)
    )


CORPUS = {
    "segment": SEGMENT,
    "square": SQUARE,
    "cube": CUBE,
    "simplex1": simplex(1),
    "simplex2": simplex(2),
    "simplex3": simplex(3),
    "simplex4": simplex(4),
    "pyramid": PYRAMID,
    "random3": random3_points(),
}


@lru_cache(maxsize=None)
def build(name: str) -> FaceLattice:
    """Face lattice of a named corpus polytope (cached)."""
    return build_face_lattice(facet_presentation(CORPUS[name]))


def names():
    return list(CORPUS)

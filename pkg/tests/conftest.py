"""Shared fixtures and generators for the test suite."""

import random
from itertools import combinations, product

import pytest

from gridifs import Edge, Face, GdsSpec, outgoing


@pytest.fixture
def interval_example() -> GdsSpec:
    """Two-vertex system on [0,1] with N=4 used throughout the docs:
    vertex 1 maps into vertex 2 at offset 0 and itself at offset 1,
    vertex 2 maps into itself at offset 0 and back into vertex 1 at offset 3."""
    return GdsSpec(
        d=1, N=4, n=2,
        edges=((1, 2, (0,)), (1, 1, (1,)), (2, 2, (0,)), (2, 1, (3,))),
    )


def make_spec(d, N, n, triples) -> GdsSpec:
    return GdsSpec(d=d, N=N, n=n, edges=tuple(triples))


def random_spec(rng: random.Random, d: int, n: int, N: int, max_extra: int = 4) -> GdsSpec:
    """Valid random system: every vertex keeps at least one outgoing edge."""
    chosen = set()
    for i in range(1, n + 1):
        j = rng.randint(1, n)
        t = tuple(rng.randrange(N) for _ in range(d))
        chosen.add((i, j, t))
    for _ in range(rng.randint(0, max_extra)):
        i, j = rng.randint(1, n), rng.randint(1, n)
        t = tuple(rng.randrange(N) for _ in range(d))
        chosen.add((i, j, t))
    return GdsSpec(d=d, N=N, n=n, edges=tuple(sorted(chosen)))


def all_proper_faces(d: int):
    """Every face of the unit d-cube of dimension 0..d-1."""
    for size in range(1, d + 1):
        for axes in combinations(range(d), size):
            for values in product((0, 1), repeat=size):
                yield Face(d, axes, values)


def random_proper_face(rng: random.Random, d: int, min_dim: int = 0, max_dim: int = None) -> Face:
    if max_dim is None:
        max_dim = d - 1
    dim = rng.randint(min_dim, max_dim)
    axes = tuple(sorted(rng.sample(range(d), d - dim)))
    values = tuple(rng.randint(0, 1) for _ in axes)
    return Face(d, axes, values)


def enumerate_walks(spec: GdsSpec, start: int, length: int):
    """All edge words of the given length starting at a vertex."""
    table = outgoing(spec)

    def extend(prefix, vertex, remaining):
        if remaining == 0:
            yield tuple(prefix)
            return
        for e in table[vertex]:
            prefix.append(e)
            yield from extend(prefix, e.target, remaining - 1)
            prefix.pop()

    yield from extend([], start, length)


def edge_for(spec: GdsSpec, source: int, target: int, translation) -> Edge:
    return Edge(source, target, tuple(translation))

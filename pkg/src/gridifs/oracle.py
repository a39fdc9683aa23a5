"""Brute-force geometric iteration: level-k cube approximations, the finite
intersection criterion, and cube-union connectivity.

This module is the independent cross-check for the graph-based decisions.
Cube sets are kept as deduplicated integer corner arrays; each corner vector
is packed into a single integer with a per-axis stride wide enough that
adjacency probing cannot alias across axes.  When the packed values would not
fit in 64 bits the same code runs on arrays of Python ints, exact but slower.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import DyadicCube, Face, GdsSpec, ResourceBudgetError, outgoing

DEFAULT_BUDGET = 10_000_000


def c_constant(n: int, d: int) -> int:
    """Proven iteration depth at which approximation overlap certifies
    attractor intersection: (d-1)n^2 + (n^2+n)/2 + d - 1."""
    return (d - 1) * n * n + (n * n + n) // 2 + d - 1


def c_constant_conjectured(n: int, d: int) -> int:
    """Possibly smaller depth d(n^2-n)/2 + (d-1) + n; exposed for reference,
    never used by the decision procedures."""
    return d * (n * n - n) // 2 + (d - 1) + n


def _pack_stride(max_value: int) -> int:
    # Guard gap of 2 keeps +-1 probes on one axis from aliasing into the next.
    return max_value + 3


def _pack(corners, stride: int, d: int, as_int64: bool):
    dtype = np.int64 if as_int64 else object
    arr = np.zeros(len(corners), dtype=dtype)
    for axis in range(d):
        vals = np.array([c[axis] for c in corners], dtype=dtype)
        arr = arr * stride + vals
    return arr


def _unpack(packed, stride: int, d: int):
    cols = []
    work = packed.copy()
    for _ in range(d):
        cols.append(work % stride)
        work = work // stride
    cols.reverse()
    return np.stack(cols, axis=1)


@dataclass(eq=False)
class Approximation:
    """Deduplicated set of level-k cubes approximating one vertex's attractor."""

    system: GdsSpec
    vertex: int
    level: int
    packed: np.ndarray
    stride: int
    _corners: np.ndarray = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.packed)

    @property
    def corners(self) -> np.ndarray:
        """Corner vectors as an (m, d) array in ascending lexicographic order."""
        if self._corners is None:
            self._corners = _unpack(self.packed, self.stride, self.system.d)
        return self._corners

    def corner_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(v) for v in row) for row in self.corners}

    def cubes(self) -> list[DyadicCube]:
        return [DyadicCube(self.level, tuple(int(v) for v in row)) for row in self.corners]


def _expand_all(spec: GdsSpec, level: int, budget: int):
    """Levelwise expansion with per-level dedup for every vertex at once."""
    d, N = spec.d, spec.N
    stride = _pack_stride(N**level if level > 0 else 1)
    as_int64 = stride**d < 2**62
    dtype = np.int64 if as_int64 else object
    out = outgoing(spec)

    offsets = {}
    for i, edges in out.items():
        for e in edges:
            packed_t = 0
            for t in e.translation:
                packed_t = packed_t * stride + t
            offsets[e] = packed_t if as_int64 else int(packed_t)

    current = {i: np.zeros(1, dtype=dtype) for i in range(1, spec.n + 1)}
    for k in range(1, level + 1):
        scale = N ** (k - 1)
        new = {}
        total = 0
        for i in range(1, spec.n + 1):
            parts = [current[e.target] + offsets[e] * scale for e in out[i]]
            new[i] = np.unique(np.concatenate(parts))
            total += len(new[i])
            if total > budget:
                raise ResourceBudgetError(
                    f"cube budget {budget} exceeded at level {k} ({total} cubes)", level=k
                )
        current = new
    return current, stride


@lru_cache(maxsize=2)
def _approximate_all(spec: GdsSpec, level: int, budget: int) -> tuple[Approximation, ...]:
    packed, stride = _expand_all(spec, level, budget)
    return tuple(
        Approximation(spec, i, level, packed[i], stride) for i in range(1, spec.n + 1)
    )


def approximate(spec: GdsSpec, i: int, level: int, budget: int = DEFAULT_BUDGET) -> Approximation:
    """Exact cube set of the level-k approximation of K_i."""
    if level < 0:
        raise ValueError("level must be non-negative")
    if not 1 <= i <= spec.n:
        raise ValueError(f"vertex id must lie in 1..{spec.n}, got {i}")
    return _approximate_all(spec, level, budget)[i - 1]


def _axis_offsets(d: int, stride: int):
    deltas = [()]
    for _ in range(d):
        deltas = [prev + (e,) for prev in deltas for e in (-1, 0, 1)]
    packed = []
    for delta in deltas:
        v = 0
        for e in delta:
            v = v * stride + e
        packed.append((delta, v))
    return packed


def approx_intersects(spec: GdsSpec, i: int, j: int, level: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Do the level-k approximations of K_i and K_j share a point?

    Same-level cubes meet exactly when their corners differ by at most 1 on
    every axis, so it suffices to probe each neighbour offset against the
    sorted packed arrays.
    """
    if i == j:
        return True
    approxs = _approximate_all(spec, level, budget)
    a, b = approxs[i - 1].packed, approxs[j - 1].packed
    if len(b) < len(a):
        a, b = b, a
    stride = approxs[i - 1].stride
    for _, off in _axis_offsets(spec.d, stride):
        shifted = a + off
        idx = np.searchsorted(b, shifted)
        idx[idx >= len(b)] = len(b) - 1
        if np.any(b[idx] == shifted):
            return True
    return False


def decide_by_iteration(spec: GdsSpec, i: int, j: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Definitive intersection decision by iterating to the proven depth.

    Raises ResourceBudgetError when the cube sets outgrow the budget first;
    the graph-based decision procedure is the primary path in that case.
    """
    if i == j:
        raise ValueError("iteration criterion applies to distinct vertices only")
    return approx_intersects(spec, i, j, c_constant(spec.n, spec.d), budget)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def cubes_connected(cubes) -> bool:
    """Is the union of the given same-level closed cubes connected?

    The union is connected exactly when the graph whose vertices are the cubes
    and whose edges join intersecting cubes is connected.
    """
    if isinstance(cubes, Approximation):
        level = cubes.level
        corners = [tuple(int(v) for v in row) for row in cubes.corners]
    else:
        cube_list = list(cubes)
        if not cube_list:
            raise ValueError("cannot decide connectivity of an empty cube set")
        levels = {c.level for c in cube_list}
        if len(levels) > 1:
            raise ValueError(f"cubes must share one level, got levels {sorted(levels)}")
        level = levels.pop()
        corners = sorted({c.corner for c in cube_list})
    if not corners:
        raise ValueError("cannot decide connectivity of an empty cube set")
    d = len(corners[0])
    stride = _pack_stride(max(max(c) for c in corners))
    as_int64 = stride**d < 2**62
    packed = np.sort(_pack(corners, stride, d, as_int64))

    uf = _UnionFind(len(packed))
    for delta, off in _axis_offsets(d, stride):
        if delta <= (0,) * d:
            continue  # probe each unordered neighbour pair once
        shifted = packed + off
        idx = np.searchsorted(packed, shifted)
        idx_clip = np.minimum(idx, len(packed) - 1)
        hits = np.nonzero(packed[idx_clip] == shifted)[0]
        for a in hits:
            uf.union(int(a), int(idx_clip[a]))
    roots = {uf.find(k) for k in range(len(packed))}
    return len(roots) == 1


def _face_box(face: Face):
    box = []
    for axis in range(face.d):
        v = face.value_on(axis)
        if v is None:
            box.append((Fraction(0), Fraction(1)))
        else:
            box.append((Fraction(v), Fraction(v)))
    return tuple(box)


def _map_box(box, scale: int, translation):
    return tuple(
        ((lo + t) / scale, (hi + t) / scale)
        for (lo, hi), t in zip(box, translation)
    )


def word_commutation_check(N, a, t, t_star, b, w, w_star, P: Face, Q: Face, m: int) -> bool:
    """Exact-rational check that two face orbits coincide after m inner steps.

    Given phi(x) = (x+t)/N^a, phi*(x) = (x+t*)/N^a, f(x) = (x+w)/N^b and
    f*(x) = (x+w*)/N^b, all mapping the unit cube into itself, with
    phi(P) = phi*(Q) and phi(f(P)) = phi*(f*(Q)), verifies that
    phi(f^m(P)) = phi*(f*^m(Q)).  Hypothesis violations raise ValueError.
    """
    d = P.d
    if Q.d != d:
        raise ValueError("faces must live in the same dimension")
    if P.dim != Q.dim:
        raise ValueError("faces must have equal dimension")
    if m < 1:
        raise ValueError("m must be positive")
    for vec, exp, name in ((t, a, "t"), (t_star, a, "t*"), (w, b, "w"), (w_star, b, "w*")):
        if len(vec) != d:
            raise ValueError(f"{name} must have {d} entries")
        if any(not 0 <= v <= N**exp - 1 for v in vec):
            raise ValueError(f"{name} does not keep the unit cube inside itself")

    def orbit(box, inner_t, outer_t, steps):
        for _ in range(steps):
            box = _map_box(box, N**b, inner_t)
        return _map_box(box, N**a, outer_t)

    p0, q0 = _face_box(P), _face_box(Q)
    if orbit(p0, w, t, 0) != orbit(q0, w_star, t_star, 0):
        raise ValueError("hypothesis phi(P) == phi*(Q) fails")
    if orbit(p0, w, t, 1) != orbit(q0, w_star, t_star, 1):
        raise ValueError("hypothesis phi(f(P)) == phi*(f*(Q)) fails")
    return orbit(p0, w, t, m) == orbit(q0, w_star, t_star, m)

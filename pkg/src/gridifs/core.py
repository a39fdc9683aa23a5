"""Exact data model and grid arithmetic for graph-directed systems on the N-adic grid.

Everything here is integer arithmetic on immutable values: cube corners,
translation vectors and face descriptors are tuples of Python ints, so no
precision is ever lost no matter how deep the subdivision level gets.
"""

from dataclasses import dataclass
from functools import lru_cache


class GridError(Exception):
    """Base class for errors raised by this package."""


class MalformedWalkError(GridError):
    """An edge sequence does not chain into a walk of the system's graph."""


class GridAlignmentError(GridError):
    """A geometric object is not aligned with the grid the caller assumed."""


class ResourceBudgetError(GridError):
    """An iteration exceeded its cube budget.  ``level`` is where it stopped."""

    def __init__(self, message: str, level: int):
        super().__init__(message)
        self.level = level


@dataclass(frozen=True)
class Edge:
    """Directed edge of a graph-directed system, labelled by its translation."""

    source: int
    target: int
    translation: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "translation", tuple(int(t) for t in self.translation))


@dataclass(frozen=True)
class GdsSpec:
    """A graph-directed system whose maps are x -> (x + t) / N on [0,1]^d.

    Vertices are 1-based ids in 1..n.  Because every map is determined by its
    translation, an edge is fully identified by (source, target, translation).
    """

    d: int
    N: int
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        coerced = tuple(
            e if isinstance(e, Edge) else Edge(e[0], e[1], tuple(e[2]))
            for e in self.edges
        )
        object.__setattr__(self, "edges", coerced)
        # specs key many memo tables; precompute the hash once
        object.__setattr__(self, "_hash", hash((self.d, self.N, self.n, coerced)))

    def __hash__(self):
        return self._hash


@lru_cache(maxsize=1024)
def outgoing(spec: GdsSpec) -> dict[int, tuple[Edge, ...]]:
    """Edges grouped by source vertex, in input order."""
    table: dict[int, list[Edge]] = {i: [] for i in range(1, spec.n + 1)}
    for e in spec.edges:
        table.setdefault(e.source, []).append(e)
    return {i: tuple(es) for i, es in table.items()}


def validate(spec: GdsSpec) -> list[str]:
    """Check the system invariants, returning one message per violation."""
    problems = []
    if spec.d < 1:
        problems.append(f"dimension must be positive, got d={spec.d}")
    if spec.N < 2:
        problems.append(f"base must be at least 2, got N={spec.N}")
    if spec.n < 1:
        problems.append(f"vertex count must be positive, got n={spec.n}")
    seen = set()
    has_out = set()
    for e in spec.edges:
        if not (1 <= e.source <= spec.n and 1 <= e.target <= spec.n):
            problems.append(f"edge {e} has endpoint outside 1..{spec.n}")
            continue
        if len(e.translation) != spec.d:
            problems.append(f"edge {e} translation has length {len(e.translation)}, expected {spec.d}")
            continue
        if not all(0 <= t <= spec.N - 1 for t in e.translation):
            problems.append(f"edge {e} translation outside 0..{spec.N - 1}")
        key = (e.source, e.target, e.translation)
        if key in seen:
            problems.append(f"duplicate edge {e}")
        seen.add(key)
        has_out.add(e.source)
    for i in range(1, max(spec.n, 0) + 1):
        if i not in has_out:
            problems.append(f"vertex {i} has no outgoing edge")
    return problems


@dataclass(frozen=True)
class CellMap:
    """One contraction x -> (x + t) / N; its image is a level-1 grid cube."""

    base: int
    translation: tuple[int, ...]

    def apply(self, point):
        return tuple((x + t) / self.base for x, t in zip(point, self.translation))

    def image_cube(self) -> "DyadicCube":
        return DyadicCube(1, self.translation)


@dataclass(frozen=True)
class WordMap:
    """Composition of cell maps: x -> (x + q) / N^m.

    ``length`` 0 is allowed and denotes the identity (empty composition).
    """

    base: int
    length: int
    numerator: tuple[int, ...]

    def apply(self, point):
        scale = self.base**self.length
        return tuple((x + q) / scale for x, q in zip(point, self.numerator))


@dataclass(frozen=True)
class DyadicCube:
    """Level-k grid cube: the product of [p_l / N^k, (p_l + 1) / N^k]."""

    level: int
    corner: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "corner", tuple(int(p) for p in self.corner))

    @property
    def d(self) -> int:
        return len(self.corner)


@dataclass(frozen=True)
class Face:
    """Axis-aligned face of the unit cube: x_a = v for each constrained axis a.

    ``axes`` are 0-based and kept sorted, so equal faces hash equally.  The
    empty constraint set is the whole cube; constraining every axis gives a
    vertex.
    """

    d: int
    axes: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        axes = tuple(int(a) for a in self.axes)
        values = tuple(int(v) for v in self.values)
        if len(axes) != len(values):
            raise ValueError("axes and values must have equal length")
        if len(set(axes)) != len(axes):
            raise ValueError(f"repeated axis in {axes}")
        if any(not 0 <= a < self.d for a in axes):
            raise ValueError(f"axis outside 0..{self.d - 1} in {axes}")
        if any(v not in (0, 1) for v in values):
            raise ValueError(f"face values must be 0 or 1, got {values}")
        order = sorted(range(len(axes)), key=lambda k: axes[k])
        object.__setattr__(self, "axes", tuple(axes[k] for k in order))
        object.__setattr__(self, "values", tuple(values[k] for k in order))

    @property
    def dim(self) -> int:
        return self.d - len(self.axes)

    def value_on(self, axis: int):
        """The pinned value on ``axis``, or None if the axis is free."""
        try:
            return self.values[self.axes.index(axis)]
        except ValueError:
            return None

    def contains(self, point) -> bool:
        return all(point[a] == v for a, v in zip(self.axes, self.values))

    @staticmethod
    def full_cube(d: int) -> "Face":
        return Face(d, (), ())

    @staticmethod
    def vertex(coords) -> "Face":
        coords = tuple(coords)
        return Face(len(coords), tuple(range(len(coords))), coords)

    def __str__(self):
        if not self.axes:
            return f"[0,1]^{self.d}"
        return "{" + ", ".join(f"x{a + 1}={v}" for a, v in zip(self.axes, self.values)) + "}"


@dataclass(frozen=True)
class GridFace:
    """Common face of two adjacent same-level cubes.

    On a free axis ``anchor`` holds the cubes' shared corner coordinate; on a
    fixed axis it holds the grid coordinate of the shared boundary plane.
    ``low_side`` records, per fixed axis, which input cube sat on the low side
    (0 for the first, 1 for the second); it is informational only and ignored
    by equality.
    """

    level: int
    anchor: tuple[int, ...]
    fixed_axes: tuple[int, ...]
    low_side: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.anchor) - len(self.fixed_axes)

    def __eq__(self, other):
        if not isinstance(other, GridFace):
            return NotImplemented
        return (self.level, self.anchor, self.fixed_axes) == (other.level, other.anchor, other.fixed_axes)

    def __hash__(self):
        return hash((self.level, self.anchor, self.fixed_axes))


def compose_word(spec: GdsSpec, edge_word) -> WordMap:
    """Compose the cell maps of a walk into a single map x -> (x + q) / N^m."""
    word = tuple(edge_word)
    for prev, nxt in zip(word, word[1:]):
        if prev.target != nxt.source:
            raise MalformedWalkError(
                f"edge into {prev.target} followed by edge out of {nxt.source}"
            )
    q = [0] * spec.d
    for e in word:
        if len(e.translation) != spec.d:
            raise MalformedWalkError(f"edge translation {e.translation} is not {spec.d}-dimensional")
        q = [qi * spec.N + ti for qi, ti in zip(q, e.translation)]
    return WordMap(spec.N, len(word), tuple(q))


def cube_of_word(spec: GdsSpec, edge_word) -> DyadicCube:
    """The image of the unit cube under the walk's composed map."""
    wm = compose_word(spec, edge_word)
    return DyadicCube(wm.length, wm.numerator)


def cube_intersection(c1: DyadicCube, c2: DyadicCube):
    """Largest common face of two same-level cubes, or None if disjoint.

    Same-level grid cubes either are disjoint or meet in the face spanned by
    the axes on which their corners agree; adjacency means corner distance at
    most 1 on every axis.
    """
    if c1.level != c2.level:
        raise ValueError(f"cube levels differ: {c1.level} vs {c2.level}")
    if c1.d != c2.d:
        raise ValueError("cube dimensions differ")
    anchor = []
    fixed = []
    low = []
    for axis, (p, q) in enumerate(zip(c1.corner, c2.corner)):
        delta = p - q
        if delta == 0:
            anchor.append(p)
        elif delta in (-1, 1):
            fixed.append(axis)
            anchor.append(max(p, q))
            low.append(0 if p < q else 1)
        else:
            return None
    return GridFace(c1.level, tuple(anchor), tuple(fixed), tuple(low))


def face_meets_cube(face: Face, corner, grid: int) -> bool:
    """Does the grid cube at ``corner`` (side 1/grid) touch the unit-cube face?

    A pinned value 0 requires the cube to sit at coordinate 0, a pinned value
    1 requires it to sit at the far end; free axes impose nothing.
    """
    for axis, value in zip(face.axes, face.values):
        if value == 0 and corner[axis] != 0:
            return False
        if value == 1 and corner[axis] != grid - 1:
            return False
    return True


def face_meets_cell(face: Face, translation, N: int) -> bool:
    """Does the level-1 cell with the given translation touch the face?"""
    return face_meets_cube(face, translation, N)


def pull_back_face(shared: GridFace, translation, N: int) -> Face:
    """Invert a cell map on a level-1 face: find P with cell(P) == shared.

    The shared face must lie inside the image of the cell whose translation is
    given; otherwise the inputs are inconsistent and a GridAlignmentError is
    raised.
    """
    if shared.level != 1:
        raise GridAlignmentError(f"can only pull back level-1 faces, got level {shared.level}")
    d = len(shared.anchor)
    if len(translation) != d:
        raise GridAlignmentError("translation dimension mismatch")
    fixed = set(shared.fixed_axes)
    axes = []
    values = []
    for axis in range(d):
        offset = shared.anchor[axis] - translation[axis]
        if axis in fixed:
            if offset not in (0, 1):
                raise GridAlignmentError(
                    f"face plane {shared.anchor[axis]} not on the boundary of cell {tuple(translation)}"
                )
            axes.append(axis)
            values.append(offset)
        else:
            if offset != 0:
                raise GridAlignmentError(
                    f"face span on axis {axis} does not match cell {tuple(translation)}"
                )
    if N < 2:
        raise GridAlignmentError(f"base must be at least 2, got {N}")
    return Face(d, tuple(axes), tuple(values))

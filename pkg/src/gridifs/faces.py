"""Which attractor components touch a face of the unit cube, and the
lower-dimensional systems obtained by restricting to such faces."""

from dataclasses import dataclass
from functools import lru_cache

from .core import Edge, Face, GdsSpec, face_meets_cell, outgoing


@dataclass(eq=False)
class FaceGraph:
    """Directed graph on system vertices: i -> j when some cell of an i -> j
    edge touches the face."""

    face: Face
    n: int
    successors: dict[int, tuple[int, ...]]
    witnesses: dict[tuple[int, int], tuple[tuple[int, ...], ...]]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in sorted(self.successors) for j in self.successors[i]]

    def to_dot(self) -> str:
        lines = ["digraph face_graph {"]
        for i in range(1, self.n + 1):
            lines.append(f'  "{i}";')
        for i, j in self.edges():
            label = "; ".join(str(t) for t in self.witnesses[(i, j)])
            lines.append(f'  "{i}" -> "{j}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)


def build_face_graph(spec: GdsSpec, face: Face) -> FaceGraph:
    """Face graph of the system for a proper face (dimension < d)."""
    if face.dim >= spec.d:
        raise ValueError("face graph is defined only for proper faces of the cube")
    succ: dict[int, list[int]] = {i: [] for i in range(1, spec.n + 1)}
    wits: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for i, edges in outgoing(spec).items():
        for e in edges:
            if face_meets_cell(face, e.translation, spec.N):
                if e.target not in succ[i]:
                    succ[i].append(e.target)
                wits.setdefault((i, e.target), []).append(e.translation)
    return FaceGraph(
        face,
        spec.n,
        {i: tuple(sorted(js)) for i, js in succ.items()},
        {k: tuple(v) for k, v in wits.items()},
    )


def _surviving(graph: FaceGraph) -> frozenset[int]:
    # Repeatedly trim vertices with no outgoing edge; the survivors are exactly
    # the vertices from which arbitrarily long walks start.
    alive = set(range(1, graph.n + 1))
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if not any(j in alive for j in graph.successors.get(v, ())):
                alive.discard(v)
                changed = True
    return frozenset(alive)


def has_arbitrarily_long_walks(graph: FaceGraph, i: int) -> bool:
    """True when walks of every length start from i, i.e. i reaches a cycle."""
    return i in _surviving(graph)


def has_walk_of_length(graph: FaceGraph, i: int, length: int) -> bool:
    """True when some walk of exactly the given length starts from i."""
    frontier = {i}
    for _ in range(length):
        frontier = {j for v in frontier for j in graph.successors.get(v, ())}
        if not frontier:
            return False
    return True


@lru_cache(maxsize=4096)
def _face_graph(spec: GdsSpec, face: Face) -> FaceGraph:
    return build_face_graph(spec, face)


@lru_cache(maxsize=4096)
def face_survivors(spec: GdsSpec, face: Face) -> frozenset[int]:
    """Vertices whose attractor component meets the face."""
    return _surviving(_face_graph(spec, face))


def face_meets_attractor(spec: GdsSpec, face: Face, i: int) -> bool:
    """Does K_i touch the face?  Decided purely on the face graph."""
    return i in face_survivors(spec, face)


@lru_cache(maxsize=4096)
def _finite_members(spec: GdsSpec, alpha: Face) -> frozenset[int]:
    # one backwards DP answers the length-n walk question for every vertex
    graph = _face_graph(spec, alpha)
    alive = set(range(1, spec.n + 1))
    for _ in range(spec.n):
        alive = {v for v in range(1, spec.n + 1) if any(j in alive for j in graph.successors.get(v, ()))}
    return frozenset(alive)


def vertex_in_attractor_finite(spec: GdsSpec, alpha: Face, i: int) -> bool:
    """Cube-vertex membership via the finite criterion: a walk of length n in
    the vertex's face graph suffices.  Agrees with face_meets_attractor."""
    if alpha.dim != 0:
        raise ValueError("finite membership check requires a vertex (0-dimensional face)")
    return i in _finite_members(spec, alpha)


@dataclass(eq=False)
class ReducedSystem:
    """A system on faces: vertex (P, i) carries the slice of K_i on P,
    projected down to the face's own dimension.

    All faces share one constrained-axis set, so a single projection (dropping
    those axes in increasing order) applies throughout.
    """

    system: GdsSpec
    assignments: tuple[tuple[Face, int], ...]
    dropped_axes: tuple[int, ...]

    def reduced_id(self, face: Face, vertex: int) -> int:
        """1-based vertex id of (face, vertex) in the reduced system."""
        return self.assignments.index((face, vertex)) + 1


def project_vector(vec, dropped_axes) -> tuple[int, ...]:
    """Drop the given axes, preserving the order of the remaining entries."""
    dropped = set(dropped_axes)
    return tuple(v for axis, v in enumerate(vec) if axis not in dropped)


def reduce_to_faces(spec: GdsSpec, faces) -> ReducedSystem:
    """Restrict the system to a family of parallel proper faces.

    Only (face, vertex) pairs whose attractor slice is nonempty become
    vertices.  Edges stay within one face: an i -> j edge survives on P when
    its cell touches P and K_j also touches P, and its translation is
    projected onto the face's free axes.
    """
    face_list = []
    for f in faces:
        if f not in face_list:
            face_list.append(f)
    if not face_list:
        raise ValueError("need at least one face")
    mask = face_list[0].axes
    for f in face_list:
        if f.axes != mask:
            raise ValueError("faces must be parallel (identical constrained axes)")
    dim = face_list[0].dim
    if not 1 <= dim <= spec.d - 1:
        raise ValueError(f"face dimension must be in 1..{spec.d - 1}, got {dim}")

    assignments = []
    for P in face_list:
        for i in sorted(face_survivors(spec, P)):
            assignments.append((P, i))
    ids = {pi: k + 1 for k, pi in enumerate(assignments)}

    edges = []
    for P in face_list:
        survivors = face_survivors(spec, P)
        for i in sorted(survivors):
            for e in outgoing(spec)[i]:
                if e.target in survivors and face_meets_cell(P, e.translation, spec.N):
                    edges.append(
                        Edge(ids[(P, i)], ids[(P, e.target)], project_vector(e.translation, mask))
                    )
    reduced = GdsSpec(d=dim, N=spec.N, n=len(assignments), edges=tuple(edges))
    return ReducedSystem(reduced, tuple(assignments), mask)

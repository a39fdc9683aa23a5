"""Pairwise attractor intersection, decided exactly on an auxiliary graph.

The graph lives on ordered vertex pairs.  A solid edge records two child maps
that coincide; a dashed edge records two child cells that merely share a
lower-dimensional face.  A pair of attractors intersects exactly when, from
its pair vertex, one can reach a terminated edge through solid edges or walk
solid edges forever.  Whether a dashed edge is terminated is itself an
intersection question one dimension down, so the procedure recurses through
face restrictions until it bottoms out at cube-vertex membership.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .core import DyadicCube, Edge, Face, GdsSpec, GridFace, cube_intersection, outgoing, pull_back_face
from .faces import face_survivors, reduce_to_faces, vertex_in_attractor_finite

NONEMPTY = "NONEMPTY"
EMPTY = "EMPTY"

Pair = tuple[int, int]


@dataclass(frozen=True)
class DashedWitness:
    """Two edges whose cells share a face of dimension below d."""

    edge: Edge
    other: Edge
    shared: GridFace

    @property
    def dim(self) -> int:
        return self.shared.dim


@dataclass(frozen=True)
class SolidStep:
    source: Pair
    target: Pair
    translation: tuple[int, ...]


@dataclass(frozen=True)
class TerminalSolid:
    """A solid edge into a diagonal pair; the child intersection is K_v itself."""

    step: SolidStep


@dataclass(frozen=True)
class TerminalDashed:
    """A dashed edge whose witness was verified to yield a real intersection.

    For a 0-dimensional shared face, ``corner_faces`` holds the two unit-cube
    vertices whose membership was confirmed.  Otherwise ``reduced_faces``
    holds the two parallel faces whose restricted systems intersect.
    """

    source: Pair
    target: Pair
    witness: DashedWitness
    corner_faces: tuple[Face, Face] | None = None
    reduced_faces: tuple[Face, Face] | None = None


@dataclass(frozen=True)
class DiagonalWitness:
    vertex: int


@dataclass(frozen=True)
class TerminatedWalkWitness:
    steps: tuple[SolidStep, ...]
    terminal: TerminalSolid | TerminalDashed


@dataclass(frozen=True)
class SolidCycleWitness:
    lead_in: tuple[SolidStep, ...]
    cycle: tuple[SolidStep, ...]


@dataclass(frozen=True)
class Decision:
    outcome: str
    witness: object = None

    @property
    def nonempty(self) -> bool:
        return self.outcome == NONEMPTY


@dataclass(eq=False)
class IntersectingGraph:
    """Solid/dashed edges over ordered vertex pairs, with witness lists.

    Diagonal pairs carry no outgoing edges.  ``terminated_solid`` and
    ``terminated_dashed`` are filled in by mark_terminated; until then the
    graph is unmarked.
    """

    n: int
    solid: dict[tuple[Pair, Pair], tuple[tuple[int, ...], ...]]
    dashed: dict[tuple[Pair, Pair], tuple[DashedWitness, ...]]
    marked: bool = False
    terminated_solid: frozenset[tuple[Pair, Pair]] = frozenset()
    terminated_dashed: dict[tuple[Pair, Pair], TerminalDashed] = None

    def vertices(self) -> list[Pair]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1)]

    def solid_successors(self, pair: Pair) -> list[tuple[Pair, tuple[int, ...]]]:
        adj = getattr(self, "_solid_adj", None)
        if adj is None:
            adj = {}
            for (src, dst), translations in sorted(self.solid.items()):
                adj.setdefault(src, []).append((dst, translations[0]))
            self._solid_adj = adj
        return adj.get(pair, [])

    def dashed_successors(self, pair: Pair) -> list[tuple[Pair, tuple[DashedWitness, ...]]]:
        adj = getattr(self, "_dashed_adj", None)
        if adj is None:
            adj = {}
            for (src, dst), witnesses in sorted(self.dashed.items()):
                adj.setdefault(src, []).append((dst, witnesses))
            self._dashed_adj = adj
        return adj.get(pair, [])

    def is_terminated(self, src: Pair, dst: Pair) -> bool:
        if not self.marked:
            raise ValueError("graph has not been marked; call mark_terminated first")
        if (src, dst) in self.terminated_solid:
            return True
        return (src, dst) in (self.terminated_dashed or {})

    def to_dot(self) -> str:
        lines = ["digraph intersecting {"]
        for i, j in self.vertices():
            lines.append(f'  "({i},{j})";')
        term_d = self.terminated_dashed or {}
        for (src, dst) in sorted(self.solid):
            label = "; ".join(str(t) for t in self.solid[(src, dst)])
            attrs = f'style=solid, label="{label}"'
            if self.marked and (src, dst) in self.terminated_solid:
                attrs += ", color=red"
            lines.append(f'  "({src[0]},{src[1]})" -> "({dst[0]},{dst[1]})" [{attrs}];')
        for (src, dst) in sorted(self.dashed):
            attrs = "style=dashed"
            if self.marked and (src, dst) in term_d:
                attrs += ", color=red"
            lines.append(f'  "({src[0]},{src[1]})" -> "({dst[0]},{dst[1]})" [{attrs}];')
        lines.append("}")
        return "\n".join(lines)


def max_solid_depth_needed(n: int) -> int:
    """Depth at which a bounded solid-walk search is already conclusive."""
    return (n * n - n) // 2 + 1


def build_intersecting_graph(spec: GdsSpec) -> IntersectingGraph:
    """Compare child cells of every off-diagonal ordered pair of vertices."""
    out = outgoing(spec)
    # cell geometry depends only on the translations; compare each pair once
    translations = sorted({e.translation for e in spec.edges})
    contact = {}
    for t1 in translations:
        for t2 in translations:
            if t1 != t2:
                contact[(t1, t2)] = cube_intersection(DyadicCube(1, t1), DyadicCube(1, t2))
    solid: dict[tuple[Pair, Pair], list[tuple[int, ...]]] = {}
    dashed: dict[tuple[Pair, Pair], list[DashedWitness]] = {}
    for i in range(1, spec.n + 1):
        for j in range(1, spec.n + 1):
            if i == j:
                continue
            for e in out[i]:
                for e2 in out[j]:
                    key = ((i, j), (e.target, e2.target))
                    if e.translation == e2.translation:
                        solid.setdefault(key, []).append(e.translation)
                    else:
                        shared = contact[(e.translation, e2.translation)]
                        if shared is not None:
                            dashed.setdefault(key, []).append(DashedWitness(e, e2, shared))
    return IntersectingGraph(
        spec.n,
        {k: tuple(v) for k, v in solid.items()},
        {k: tuple(v) for k, v in dashed.items()},
    )


@lru_cache(maxsize=2048)
def _reduced_pair(spec: GdsSpec, P: Face, Q: Face):
    return reduce_to_faces(spec, (P, Q))


@lru_cache(maxsize=4096)
def _face_pair_intersects(spec: GdsSpec, P: Face, i: int, Q: Face, j: int) -> bool:
    """Do the slices of K_i on P and K_j on Q intersect, after aligning the
    parallel faces P and Q?  This is the one-dimension-down recursion."""
    if i not in face_survivors(spec, P) or j not in face_survivors(spec, Q):
        return False
    if (P, i) == (Q, j):
        return True
    reduced = _reduced_pair(spec, P, Q)
    a = reduced.reduced_id(P, i)
    b = reduced.reduced_id(Q, j)
    if a == b:
        return True
    return decide_intersection(reduced.system, a, b).outcome == NONEMPTY


@lru_cache(maxsize=8192)
def _pulled_back(shared: GridFace, translation: tuple, N: int) -> Face:
    return pull_back_face(shared, translation, N)


@lru_cache(maxsize=65536)
def _witness_evidence(spec: GdsSpec, dst: Pair, w: DashedWitness):
    """("corner"|"reduced", P, Q) when the witness's child intersection is
    verified nonempty, else None.  Source-independent, so cached per target."""
    i1, j1 = dst
    P = _pulled_back(w.shared, w.edge.translation, spec.N)
    Q = _pulled_back(w.shared, w.other.translation, spec.N)
    if w.dim == 0:
        if vertex_in_attractor_finite(spec, P, i1) and vertex_in_attractor_finite(spec, Q, j1):
            return ("corner", P, Q)
        return None
    if _face_pair_intersects(spec, P, i1, Q, j1):
        return ("reduced", P, Q)
    return None


def _check_dashed_witness(spec: GdsSpec, src: Pair, dst: Pair, w: DashedWitness):
    """Evidence that the witness's child intersection is nonempty, or None."""
    evidence = _witness_evidence(spec, dst, w)
    if evidence is None:
        return None
    kind, P, Q = evidence
    if kind == "corner":
        return TerminalDashed(src, dst, w, corner_faces=(P, Q))
    return TerminalDashed(src, dst, w, reduced_faces=(P, Q))


def mark_terminated(spec: GdsSpec, graph: IntersectingGraph) -> IntersectingGraph:
    """Classify every edge: solid edges terminate on the diagonal; dashed edges
    terminate when some witness's child intersection is verified nonempty."""
    term_solid = frozenset(
        key for key in graph.solid if key[1][0] == key[1][1]
    )
    term_dashed: dict[tuple[Pair, Pair], TerminalDashed] = {}
    for key in sorted(graph.dashed):
        src, dst = key
        for w in graph.dashed[key]:
            evidence = _check_dashed_witness(spec, src, dst, w)
            if evidence is not None:
                term_dashed[key] = evidence
                break
    return IntersectingGraph(
        graph.n,
        graph.solid,
        graph.dashed,
        marked=True,
        terminated_solid=term_solid,
        terminated_dashed=term_dashed,
    )


@lru_cache(maxsize=1024)
def _built_graph(spec: GdsSpec) -> IntersectingGraph:
    return build_intersecting_graph(spec)


def _terminal_out_edge(spec: GdsSpec, graph: IntersectingGraph, pair: Pair):
    """First terminated edge out of ``pair`` in deterministic order.

    Works on marked and unmarked graphs alike: edges out of one vertex are
    classified on demand, so deciding a single pair never pays for marking
    parts of the graph its solid walks cannot reach.
    """
    for dst, translation in graph.solid_successors(pair):
        if dst[0] == dst[1]:
            return TerminalSolid(SolidStep(pair, dst, translation))
    for dst, witnesses in graph.dashed_successors(pair):
        for w in witnesses:
            evidence = _check_dashed_witness(spec, pair, dst, w)
            if evidence is not None:
                return evidence
    return None


def _solid_cycle_witness(graph: IntersectingGraph, start: Pair):
    """Lead-in and cycle of solid steps from ``start``, or None."""
    succ: dict[Pair, list[Pair]] = {}
    reachable = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        succ[v] = [dst for dst, _ in graph.solid_successors(v)]
        for w in succ[v]:
            if w not in reachable:
                reachable.add(w)
                queue.append(w)
    alive = set(reachable)
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if not any(w in alive for w in succ.get(v, ())):
                alive.discard(v)
                changed = True
    if start not in alive:
        return None
    # Walk forward through survivors until a pair repeats; split there.
    path = [start]
    seen = {start: 0}
    while True:
        v = path[-1]
        nxt = min(w for w in succ[v] if w in alive)
        if nxt in seen:
            cut = seen[nxt]
            steps = [
                SolidStep(a, b, graph.solid[(a, b)][0])
                for a, b in zip(path, path[1:] + [nxt])
            ]
            return tuple(steps[:cut]), tuple(steps[cut:])
        seen[nxt] = len(path)
        path.append(nxt)


def decide_intersection(spec: GdsSpec, i: int, j: int) -> Decision:
    """Decide exactly whether K_i and K_j intersect, with a checkable witness.

    Only edges out of pair vertices reachable by solid walks from the query
    are ever classified, so one decision stays cheap even when the system has
    many vertices.
    """
    if not (1 <= i <= spec.n and 1 <= j <= spec.n):
        raise ValueError(f"vertex ids must lie in 1..{spec.n}, got ({i}, {j})")
    if i == j:
        return Decision(NONEMPTY, DiagonalWitness(i))
    graph = _built_graph(spec)
    start = (i, j)

    # Breadth-first over solid edges; the first vertex with a terminated
    # out-edge yields a terminated walk (shortest, ties broken by sort order).
    parents: dict[Pair, tuple[Pair, SolidStep] | None] = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        terminal = _terminal_out_edge(spec, graph, v)
        if terminal is not None:
            steps = []
            cur = v
            while parents[cur] is not None:
                prev, step = parents[cur]
                steps.append(step)
                cur = prev
            steps.reverse()
            return Decision(NONEMPTY, TerminatedWalkWitness(tuple(steps), terminal))
        for dst, translation in graph.solid_successors(v):
            if dst not in parents:
                parents[dst] = (v, SolidStep(v, dst, translation))
                queue.append(dst)

    cyc = _solid_cycle_witness(graph, start)
    if cyc is not None:
        return Decision(NONEMPTY, SolidCycleWitness(*cyc))
    return Decision(EMPTY)


def decide_intersection_bounded(spec: GdsSpec, i: int, j: int) -> bool:
    """Depth-bounded variant used for cross-checks: explore solid walks only up
    to the conclusive depth and report whether an intersection is certified."""
    if i == j:
        return True
    graph = _built_graph(spec)
    depth = max_solid_depth_needed(spec.n)
    frontier = {(i, j)}
    for _ in range(depth):
        if any(_terminal_out_edge(spec, graph, v) is not None for v in frontier):
            return True
        frontier = {dst for v in frontier for dst, _ in graph.solid_successors(v)}
        if not frontier:
            return False
    return bool(frontier)


def _walk_chains(steps) -> bool:
    return all(a.target == b.source for a, b in zip(steps, steps[1:]))


def replay_witness(spec: GdsSpec, i: int, j: int, decision: Decision) -> bool:
    """Re-verify a NONEMPTY decision's witness against the spec from scratch."""
    if decision.outcome != NONEMPTY:
        return False
    w = decision.witness
    edge_set = {(e.source, e.target, e.translation) for e in spec.edges}

    def solid_step_ok(step: SolidStep) -> bool:
        (a, b), (a1, b1) = step.source, step.target
        return (a, a1, step.translation) in edge_set and (b, b1, step.translation) in edge_set

    if isinstance(w, DiagonalWitness):
        return i == j == w.vertex
    if isinstance(w, TerminatedWalkWitness):
        if w.steps and w.steps[0].source != (i, j):
            return False
        if not all(solid_step_ok(s) for s in w.steps) or not _walk_chains(w.steps):
            return False
        last = w.steps[-1].target if w.steps else (i, j)
        if isinstance(w.terminal, TerminalSolid):
            step = w.terminal.step
            return step.source == last and step.target[0] == step.target[1] and solid_step_ok(step)
        if w.terminal.source != last:
            return False
        wit = w.terminal.witness
        e, e2 = wit.edge, wit.other
        if (e.source, e.target, e.translation) not in edge_set:
            return False
        if (e2.source, e2.target, e2.translation) not in edge_set:
            return False
        if (e.source, e2.source) != last or (e.target, e2.target) != w.terminal.target:
            return False
        shared = cube_intersection(DyadicCube(1, e.translation), DyadicCube(1, e2.translation))
        if shared != wit.shared:
            return False
        return _check_dashed_witness(spec, w.terminal.source, w.terminal.target, wit) is not None
    if isinstance(w, SolidCycleWitness):
        steps = w.lead_in + w.cycle
        if not w.cycle:
            return False
        if steps[0].source != (i, j):
            return False
        if not all(solid_step_ok(s) for s in steps) or not _walk_chains(steps):
            return False
        return w.cycle[-1].target == w.cycle[0].source
    return False

"""Sponge-like self-similar sets: cube symmetries, the translation to a
graph-directed system, Hata-graph connectedness, and fast iteration criteria.

A sponge is built from a digit set inside the N-grid of the unit cube, with an
optional cube symmetry attached to each digit.  The family of all symmetry
images of the sponge satisfies a grid-aligned graph-directed recursion, which
is what lets every pairwise-piece intersection question be decided exactly.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .core import GdsSpec
from .intersect import NONEMPTY, decide_intersection
from .oracle import DEFAULT_BUDGET, Approximation, approximate, c_constant, cubes_connected


@dataclass(frozen=True)
class Symmetry:
    """Symmetry of the unit cube: component l of the image reads source axis
    perm[l], flipped about the cube centre when signs[l] is -1."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        d = len(self.perm)
        if sorted(self.perm) != list(range(d)):
            raise ValueError(f"perm must permute 0..{d - 1}, got {self.perm}")
        if len(self.signs) != d or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1 of length {d}, got {self.signs}")

    @property
    def d(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(d: int) -> "Symmetry":
        return Symmetry(tuple(range(d)), (1,) * d)

    def is_identity(self) -> bool:
        return self == Symmetry.identity(self.d)

    def apply(self, point):
        """Exact action on a point of [0,1]^d (works on ints and Fractions)."""
        return tuple(
            point[p] if s == 1 else 1 - point[p] for p, s in zip(self.perm, self.signs)
        )

    def transform_digit(self, digit, base: int) -> tuple[int, ...]:
        """Induced action on the cells of the base^d grid (integer exact)."""
        return tuple(
            digit[p] if s == 1 else base - 1 - digit[p]
            for p, s in zip(self.perm, self.signs)
        )

    def inverse(self) -> "Symmetry":
        inv = [0] * self.d
        signs = [1] * self.d
        for l, p in enumerate(self.perm):
            inv[p] = l
        for axis in range(self.d):
            signs[axis] = self.signs[inv[axis]]
        return Symmetry(tuple(inv), tuple(signs))

    def order(self) -> int:
        power = self
        for k in range(1, factorial(self.d) * 2**self.d + 1):
            if power.is_identity():
                return k
            power = compose(power, self)
        raise AssertionError("symmetry order exceeded the group size")


def compose(a: Symmetry, b: Symmetry) -> Symmetry:
    """a after b: compose(a, b).apply(x) == a.apply(b.apply(x))."""
    perm = tuple(b.perm[a.perm[l]] for l in range(a.d))
    signs = tuple(a.signs[l] * b.signs[a.perm[l]] for l in range(a.d))
    return Symmetry(perm, signs)


def digit_action(sym: Symmetry, digit, N: int) -> tuple[int, ...]:
    """Where the symmetry sends a level-1 grid cell of the base-N grid."""
    return sym.transform_digit(tuple(digit), N)


@lru_cache(maxsize=8)
def enumerate_group(d: int) -> tuple[Symmetry, ...]:
    """All d! 2^d cube symmetries, identity first, in a fixed canonical order."""
    return tuple(
        Symmetry(perm, signs)
        for perm in permutations(range(d))
        for signs in product((1, -1), repeat=d)
    )


@lru_cache(maxsize=8)
def _group_index(d: int) -> dict[Symmetry, int]:
    return {sym: k + 1 for k, sym in enumerate(enumerate_group(d))}


@dataclass(frozen=True)
class SpongeSpec:
    """Digit set with one cube symmetry per digit; the attractor is the unique
    compact set equal to the union of its digit-placed symmetry images."""

    d: int
    N: int
    digits: tuple[tuple[int, ...], ...]
    symmetries: tuple[Symmetry, ...] = None

    def __post_init__(self):
        digits = tuple(tuple(int(v) for v in dig) for dig in self.digits)
        object.__setattr__(self, "digits", digits)
        if self.symmetries is None:
            object.__setattr__(self, "symmetries", (Symmetry.identity(self.d),) * len(digits))
        else:
            object.__setattr__(self, "symmetries", tuple(self.symmetries))

    def symmetry_of(self, digit) -> Symmetry:
        return self.symmetries[self.digits.index(tuple(digit))]


def validate_sponge(sp: SpongeSpec) -> list[str]:
    problems = []
    if sp.d < 1:
        problems.append(f"dimension must be positive, got d={sp.d}")
    if sp.N < 2:
        problems.append(f"base must be at least 2, got N={sp.N}")
    if len(set(sp.digits)) != len(sp.digits):
        problems.append("digits must be distinct")
    if not 1 < len(sp.digits) < sp.N**sp.d:
        problems.append(
            f"digit count must lie strictly between 1 and N^d={sp.N**sp.d}, got {len(sp.digits)}"
        )
    for dig in sp.digits:
        if len(dig) != sp.d or any(not 0 <= v <= sp.N - 1 for v in dig):
            problems.append(f"digit {dig} outside {{0..{sp.N - 1}}}^{sp.d}")
    if len(sp.symmetries) != len(sp.digits):
        problems.append("one symmetry required per digit")
    for sym in sp.symmetries:
        if sym.d != sp.d:
            problems.append(f"symmetry {sym} has wrong dimension")
    return problems


@lru_cache(maxsize=256)
def sponge_to_gds(sp: SpongeSpec) -> tuple[GdsSpec, int]:
    """Graph-directed system of all symmetry images of the sponge.

    Vertex k carries the image of the attractor under the k-th group element;
    the sponge itself is the identity vertex.  For each group element and each
    digit there is one edge into the composed element's vertex, translated by
    the group element's action on the digit.
    """
    group = enumerate_group(sp.d)
    index = _group_index(sp.d)
    edges = []
    for k, O_k in enumerate(group, start=1):
        for dig in sp.digits:
            O_i = sp.symmetry_of(dig)
            target = index[compose(O_k, O_i)]
            edges.append((k, target, O_k.transform_digit(dig, sp.N)))
    spec = GdsSpec(d=sp.d, N=sp.N, n=len(group), edges=tuple(edges))
    return spec, index[Symmetry.identity(sp.d)]


def iterate_sponge(sp: SpongeSpec, level: int, budget: int = DEFAULT_BUDGET) -> Approximation:
    """Level-k cube approximation of the sponge itself."""
    spec, identity_vertex = sponge_to_gds(sp)
    return approximate(spec, identity_vertex, level, budget)


def pair_system(sp: SpongeSpec, i, j) -> tuple[GdsSpec, tuple[int, int]]:
    """Augmented system whose two extra vertices carry the aligned pieces of
    two adjacent digit cells; the cells' pieces meet exactly when the extra
    vertices' attractors do.

    The relative offset of the two cells is shifted into the unit cube by a
    componentwise 0/1 correction, which translation-invariance of intersection
    allows.
    """
    i, j = tuple(i), tuple(j)
    if i == j:
        raise ValueError("digits must be distinct")
    alpha = tuple(a - b for a, b in zip(i, j))
    if any(abs(v) > 1 for v in alpha):
        raise ValueError(f"digit cells {i} and {j} are not adjacent")
    beta = tuple(1 if v == -1 else 0 for v in alpha)
    spec, _ = sponge_to_gds(sp)
    index = _group_index(sp.d)
    v1, v2 = spec.n + 1, spec.n + 2
    extra = (
        (v1, index[sp.symmetry_of(j)], beta),
        (v2, index[sp.symmetry_of(i)], tuple(a + b for a, b in zip(alpha, beta))),
    )
    return GdsSpec(sp.d, sp.N, spec.n + 2, spec.edges + extra), (v1, v2)


@dataclass(eq=False)
class HataGraph:
    """Undirected graph on the digits; digits are joined when their placed
    copies of the sponge intersect."""

    digits: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[tuple[int, ...], tuple[int, ...]]]

    def neighbours(self, digit) -> list[tuple[int, ...]]:
        digit = tuple(digit)
        out = []
        for a, b in self.edges:
            if a == digit:
                out.append(b)
            elif b == digit:
                out.append(a)
        return sorted(out)

    def is_connected(self) -> bool:
        seen = {self.digits[0]}
        stack = [self.digits[0]]
        while stack:
            for nb in self.neighbours(stack.pop()):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.digits)

    def to_dot(self) -> str:
        lines = ["graph hata {"]
        for dig in self.digits:
            lines.append(f'  "{dig}";')
        for a, b in sorted(self.edges):
            lines.append(f'  "{a}" -- "{b}";')
        lines.append("}")
        return "\n".join(lines)


def hata_graph(sp: SpongeSpec) -> HataGraph:
    """Decide every pairwise piece intersection through the augmented systems."""
    edges = set()
    digits = sp.digits
    for a in range(len(digits)):
        for b in range(a + 1, len(digits)):
            i, j = digits[a], digits[b]
            if any(abs(x - y) > 1 for x, y in zip(i, j)):
                continue  # non-adjacent cells never meet
            spec, (v1, v2) = pair_system(sp, i, j)
            if decide_intersection(spec, v1, v2).outcome == NONEMPTY:
                edges.add((i, j))
    return HataGraph(digits, frozenset(edges))


def is_connected(sp: SpongeSpec) -> tuple[bool, HataGraph]:
    """Connectedness of the sponge via connectivity of its Hata graph."""
    graph = hata_graph(sp)
    return graph.is_connected(), graph


def fast_path(sp: SpongeSpec, budget: int = DEFAULT_BUDGET):
    """Finite-iteration connectedness criterion, when one applies.

    Returns (level, verdict) or None.  With all corner digits present one
    iteration decides; with a single shared symmetry of order m, (d+1)m
    iterations decide.  Mixed symmetry assignments have no such shortcut here.
    """
    corners = set(product((0, sp.N - 1), repeat=sp.d))
    digit_set = set(sp.digits)
    if corners <= digit_set:
        level = 1
    elif len(set(sp.symmetries)) == 1:
        level = (sp.d + 1) * sp.symmetries[0].order()
    else:
        return None
    return level, cubes_connected(iterate_sponge(sp, level, budget))


def C_constant(d: int) -> int:
    """Iteration depth bound certifying sponge connectedness in dimension d."""
    return c_constant(factorial(d) * 2**d + 2, d) - 1

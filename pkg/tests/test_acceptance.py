"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every criterion both asserts its expected values and enforces its
stated runtime budget.
"""

import random
import time
from fractions import Fraction
from itertools import product

from gridifs import (
    C_constant,
    EMPTY,
    Face,
    GdsSpec,
    NONEMPTY,
    SpongeSpec,
    approximate,
    build_face_graph,
    build_intersecting_graph,
    c_constant,
    compose,
    cubes_connected,
    decide_by_iteration,
    decide_intersection,
    decide_intersection_bounded,
    digit_action,
    enumerate_group,
    face_meets_attractor,
    face_meets_cell,
    fast_path,
    is_connected,
    iterate_sponge,
    mark_terminated,
    sponge_to_gds,
    vertex_in_attractor_finite,
    word_commutation_check,
)
from conftest import all_proper_faces, make_spec, random_proper_face, random_spec

INTERVAL = GdsSpec(
    d=1, N=4, n=2, edges=((1, 2, (0,)), (1, 1, (1,)), (2, 2, (0,)), (2, 1, (3,)))
)
L_DIGITS = ((0, 0), (1, 0), (0, 1))


def test_criterion_1_worked_example():
    start = time.monotonic()
    g_low = build_face_graph(INTERVAL, Face(1, (0,), (0,)))
    assert g_low.edges() == [(1, 2), (2, 2)]
    g_high = build_face_graph(INTERVAL, Face(1, (0,), (1,)))
    assert g_high.edges() == [(2, 1)]

    graph = build_intersecting_graph(INTERVAL)
    assert sorted(graph.solid) == [((1, 2), (2, 2)), ((2, 1), (2, 2))]
    assert sorted(graph.dashed) == [((1, 2), (1, 2)), ((2, 1), (2, 1))]

    low, high = Face(1, (0,), (0,)), Face(1, (0,), (1,))
    assert face_meets_attractor(INTERVAL, low, 1)
    assert face_meets_attractor(INTERVAL, low, 2)
    assert not face_meets_attractor(INTERVAL, high, 1)
    assert not face_meets_attractor(INTERVAL, high, 2)

    assert decide_intersection(INTERVAL, 1, 2).outcome == NONEMPTY
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    print(f"\nCRITERION 1: PASS - worked example reproduced in {elapsed:.3f}s")


def test_criterion_2_oracle_equivalence():
    start = time.monotonic()
    rng = random.Random(20240201)
    pairs = 0

    for _ in range(500):
        n = rng.randint(2, 4)
        N = rng.choice((2, 3, 4))
        spec = random_spec(rng, 1, n, N, max_extra=5)
        level = c_constant(n, 1)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                graph_answer = decide_intersection(spec, i, j).outcome == NONEMPTY
                assert graph_answer == decide_by_iteration(spec, i, j), (spec, i, j)
                assert level == c_constant(spec.n, spec.d)
                pairs += 1

    assert c_constant(4, 1) == 10 and c_constant(2, 2) == 8
    for _ in range(200):
        spec = random_spec(rng, 2, 2, 2, max_extra=4)
        assert len(spec.edges) <= 6
        for i, j in ((1, 2), (2, 1)):
            graph_answer = decide_intersection(spec, i, j).outcome == NONEMPTY
            assert graph_answer == decide_by_iteration(spec, i, j), (spec, i, j)
            pairs += 1

    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    print(
        f"\nCRITERION 2: PASS - graph and iteration decisions agree on {pairs} "
        f"pairs (700 random systems) in {elapsed:.1f}s"
    )


def test_criterion_3_constant_formulas():
    assert c_constant(2, 1) == 3
    assert c_constant(2, 2) == 8
    assert c_constant(10, 2) == 156
    assert C_constant(1) == 9
    assert C_constant(2) == 155
    assert C_constant(3) == 6276
    print("\nCRITERION 3: PASS - depth constants exact")


def test_criterion_4_group_correctness():
    start = time.monotonic()
    for d, size in ((1, 2), (2, 8), (3, 48), (4, 384)):
        group = enumerate_group(d)
        assert len(group) == size
        assert len(set(group)) == size
        members = set(group)
        for sym in group:
            assert sym.inverse() in members

    rng = random.Random(20240401)
    for d in (1, 2, 3):
        group = enumerate_group(d)
        members = set(group)
        for _ in range(200):
            a, b = rng.choice(group), rng.choice(group)
            assert compose(a, b) in members

    # conjugation identity, exact, on all cube vertices, 1000 random samples
    for _ in range(1000):
        d = rng.randint(1, 3)
        N = rng.randint(2, 4)
        group = enumerate_group(d)
        O_k, O_i = rng.choice(group), rng.choice(group)
        dig = tuple(rng.randrange(N) for _ in range(d))
        t_ki = digit_action(O_k, dig, N)
        composed = compose(O_k, O_i)
        for vertex in product((0, 1), repeat=d):
            lhs = O_k.apply(tuple(Fraction(v + t, N) for v, t in zip(O_i.apply(vertex), dig)))
            rhs = tuple(Fraction(v + t, N) for v, t in zip(composed.apply(vertex), t_ki))
            assert lhs == rhs

    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    print(f"\nCRITERION 4: PASS - group sizes 2/8/48/384, closure, inverses, "
          f"conjugation identity (1000 samples) in {elapsed:.1f}s")


def _direct_sponge_cubes(sp: SpongeSpec, level: int) -> set:
    current = {(0,) * sp.d}
    for t in range(level):
        grid = sp.N**t
        nxt = set()
        for corner in current:
            for dig in sp.digits:
                sym = sp.symmetry_of(dig)
                moved = sym.transform_digit(corner, grid)
                nxt.add(tuple(m + dv * grid for m, dv in zip(moved, dig)))
        current = nxt
    return current


def test_criterion_5_approximation_equality():
    rng = random.Random(20240501)
    group = enumerate_group(2)
    comparisons = 0
    for _ in range(20):
        N = rng.choice((2, 3))
        cells = sorted(product(range(N), repeat=2))
        digits = tuple(rng.sample(cells, rng.randint(2, min(5, len(cells) - 1))))
        syms = tuple(rng.choice(group) for _ in digits)
        sp = SpongeSpec(d=2, N=N, digits=digits, symmetries=syms)
        spec, _ = sponge_to_gds(sp)
        for level in range(0, 5):
            direct = _direct_sponge_cubes(sp, level)
            grid = N**level
            for k, O_k in enumerate(group, start=1):
                image = {O_k.transform_digit(c, grid) for c in direct}
                assert approximate(spec, k, level).corner_set() == image
                comparisons += 1
    print(f"\nCRITERION 5: PASS - symmetry-image cube sets equal system "
          f"approximations ({comparisons} set comparisons, 20 sponges)")


def test_criterion_6_sponge_cross_validation():
    start = time.monotonic()
    group = enumerate_group(2)
    connected_count = 0
    fast_checked = 0
    for combo in product(range(8), repeat=3):
        syms = tuple(group[k] for k in combo)
        sp = SpongeSpec(d=2, N=2, digits=L_DIGITS, symmetries=syms)
        verdict, _ = is_connected(sp)
        connected_count += verdict

        screen_hit = False
        for k in range(1, 9):
            if not cubes_connected(iterate_sponge(sp, k)):
                screen_hit = True
                break
        assert not (verdict and screen_hit), f"connected verdict despite separated F_{k}"

        if len(set(syms)) == 1:
            shortcut = fast_path(sp)
            assert shortcut is not None
            assert shortcut[1] == verdict, (combo, shortcut, verdict)
            fast_checked += 1

    assert fast_checked == 8
    identity_sponge = SpongeSpec(d=2, N=2, digits=L_DIGITS)
    assert fast_path(identity_sponge) == (3, True)

    elapsed = time.monotonic() - start
    assert elapsed < 600.0
    print(f"\nCRITERION 6: PASS - 512 assignments ({connected_count} connected), "
          f"monotone screen consistent, {fast_checked} fast-path agreements, "
          f"identity case connected via k=3, in {elapsed:.0f}s")


def test_criterion_7_fast_path_criteria():
    corner_sponge = SpongeSpec(d=2, N=3, digits=((0, 0), (0, 2), (2, 0), (2, 2), (1, 1)))
    assert fast_path(corner_sponge) == (1, True)
    assert is_connected(corner_sponge)[0] is True

    separated = SpongeSpec(d=1, N=4, digits=((0,), (3,)))
    assert fast_path(separated) == (1, False)
    assert is_connected(separated)[0] is False
    print("\nCRITERION 7: PASS - corner-digit shortcut connects at k=1, "
          "separated digit set disconnected")


# -------------------------------------------------------------- criterion 8


def _suite_face_algebra(rng) -> int:
    cases = 0
    while cases < 220:
        d = rng.randint(1, 3)
        N = rng.randint(2, 4)
        face = random_proper_face(rng, d, 0, d - 1)
        t = [rng.randrange(N) for _ in range(d)]
        for a, v in zip(face.axes, face.values):
            t[a] = 0 if v == 0 else N - 1
        t = tuple(t)
        assert face_meets_cell(face, t, N)
        points = [tuple(Fraction(rng.randint(0, 10), 10) for _ in range(d)) for _ in range(6)]
        pinned = []
        for p in points[:3]:
            q = list(p)
            for a, v in zip(face.axes, face.values):
                q[a] = Fraction(v)
            pinned.append(tuple(q))
        sample = points + pinned
        apply = lambda p: tuple((x + ti) / N for x, ti in zip(p, t))
        lhs = {apply(p) for p in sample if face.contains(p)}
        rhs = {y for y in map(apply, sample) if face.contains(y)}
        assert lhs == rhs
        cases += 1
    return cases


def _suite_composed_face_algebra(rng) -> int:
    def box_map(box, t, N):
        return tuple(((lo + ti) / N, (hi + ti) / N) for (lo, hi), ti in zip(box, t))

    def box_meet(b1, b2):
        out = []
        for (lo1, hi1), (lo2, hi2) in zip(b1, b2):
            lo, hi = max(lo1, lo2), min(hi1, hi2)
            if lo > hi:
                return None
            out.append((lo, hi))
        return tuple(out)

    cases = 0
    while cases < 220:
        d = rng.randint(2, 3)
        N = rng.randint(2, 3)
        face = random_proper_face(rng, d, 1, d - 1)
        word = []
        for _ in range(rng.randint(1, 4)):
            t = [rng.randrange(N) for _ in range(d)]
            for a, v in zip(face.axes, face.values):
                t[a] = 0 if v == 0 else N - 1
            word.append(tuple(t))
        face_box = tuple(
            (Fraction(v), Fraction(v)) if (v := face.value_on(axis)) is not None
            else (Fraction(0), Fraction(1))
            for axis in range(d)
        )
        img_cube = tuple((Fraction(0), Fraction(1)) for _ in range(d))
        img_face = face_box
        for t in reversed(word):
            img_cube = box_map(img_cube, t, N)
            img_face = box_map(img_face, t, N)
        assert box_meet(img_cube, face_box) == box_meet(img_face, face_box)
        cases += 1
    return cases


def _suite_fixed_vertices(rng) -> int:
    cases = 0
    while cases < 220:
        d = rng.randint(1, 4)
        N = rng.randint(2, 4)
        coords = tuple(rng.randint(0, 1) for _ in range(d))
        alpha = Face.vertex(coords)
        t = tuple(0 if c == 0 else N - 1 for c in coords)
        assert face_meets_cell(alpha, t, N)
        assert tuple((Fraction(x) + ti) / N for x, ti in zip(coords, t)) == tuple(
            map(Fraction, coords)
        )
        cases += 1
    return cases


def _suite_membership_agreement(rng) -> int:
    cases = 0
    while cases < 220:
        d = rng.randint(1, 2)
        spec = random_spec(rng, d, rng.randint(1, 4), rng.randint(2, 4))
        for face in all_proper_faces(d):
            if face.dim != 0:
                continue
            for i in range(1, spec.n + 1):
                assert vertex_in_attractor_finite(spec, face, i) == face_meets_attractor(
                    spec, face, i
                )
                cases += 1
    return cases


def _suite_shared_cube_solid_walk(rng) -> int:
    cases = 0
    while cases < 220:
        d = rng.randint(1, 2)
        spec = random_spec(rng, d, rng.randint(2, 3), rng.randint(2, 3))
        graph = build_intersecting_graph(spec)
        for m in range(1, 4):
            approxs = {
                v: approximate(spec, v, m).corner_set() for v in range(1, spec.n + 1)
            }
            for i in range(1, spec.n + 1):
                for j in range(1, spec.n + 1):
                    if i == j or not (approxs[i] & approxs[j]):
                        continue
                    frontier = {(i, j)}
                    for _ in range(m):
                        frontier = {
                            dst
                            for v in frontier
                            for dst, _ in ([(v, None)] if v[0] == v[1] else graph.solid_successors(v))
                        }
                    assert frontier
                    cases += 1
    return cases


def _suite_bounded_depth(rng) -> int:
    cases = 0
    while cases < 220:
        d = rng.randint(1, 2)
        spec = random_spec(rng, d, rng.randint(2, 4), rng.randint(2, 3))
        for i in range(1, spec.n + 1):
            for j in range(1, spec.n + 1):
                if i == j:
                    continue
                assert decide_intersection_bounded(spec, i, j) == (
                    decide_intersection(spec, i, j).outcome == NONEMPTY
                )
                cases += 1
    return cases


def _suite_commutation() -> int:
    cases = 0
    for N in (2, 3):
        for d in (1, 2):
            faces = [Face.full_cube(d)] + list(all_proper_faces(d))
            for P in faces:
                for Q in faces:
                    if P.axes != Q.axes:
                        continue
                    free = [a for a in range(d) if a not in P.axes]
                    for t in product(range(N), repeat=d):
                        for t_star in product(range(N), repeat=d):
                            if any(t[a] != t_star[a] for a in free):
                                continue
                            for w in product(range(N), repeat=d):
                                for w_star in product(range(N), repeat=d):
                                    if any(w[a] != w_star[a] for a in free):
                                        continue
                                    try:
                                        assert word_commutation_check(
                                            N, 1, t, t_star, 1, w, w_star, P, Q, 1
                                        )
                                    except ValueError:
                                        continue
                                    for m in (2, 3, 4, 5):
                                        assert word_commutation_check(
                                            N, 1, t, t_star, 1, w, w_star, P, Q, m
                                        )
                                    cases += 1
    return cases


def test_criterion_8_property_suites():
    rng = random.Random(20240801)
    counts = {
        "face algebra": _suite_face_algebra(rng),
        "composed face algebra": _suite_composed_face_algebra(rng),
        "fixed vertices": _suite_fixed_vertices(rng),
        "membership agreement": _suite_membership_agreement(rng),
        "shared cube => solid walk": _suite_shared_cube_solid_walk(rng),
        "bounded depth": _suite_bounded_depth(rng),
        "commutation": _suite_commutation(),
    }
    assert all(count >= 200 for count in counts.values()), counts
    summary = ", ".join(f"{name}: {count}" for name, count in counts.items())
    print(f"\nCRITERION 8: PASS - property suites all green ({summary})")

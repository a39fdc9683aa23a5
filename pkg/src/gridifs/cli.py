"""Command-line front end: validate system files, run decisions, export
graphs, approximations and images.

Exit codes: 0 success, 1 semantic violation or negative validation,
2 I/O or parse error, 3 resource budget exceeded.
"""

import argparse
import re
import sys

from .core import Face, GdsSpec, GridError, ResourceBudgetError, validate
from .faces import build_face_graph, face_meets_attractor
from .intersect import (
    DiagonalWitness,
    SolidCycleWitness,
    TerminalSolid,
    TerminatedWalkWitness,
    build_intersecting_graph,
    decide_intersection,
    mark_terminated,
)
from .oracle import DEFAULT_BUDGET, approximate, decide_by_iteration
from .render import corners_ppm, corners_svg, corners_text
from .serialize import SpecFormatError, load_system
from .sponge import SpongeSpec, fast_path, hata_graph, is_connected, iterate_sponge, validate_sponge

OK, SEMANTIC, PARSE, RESOURCE = 0, 1, 2, 3


class _CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load(path):
    try:
        return load_system(path)
    except SpecFormatError as err:
        raise _CliError(str(err), PARSE) from err
    except OSError as err:
        raise _CliError(str(err), PARSE) from err


def _load_gds(path) -> GdsSpec:
    obj = _load(path)
    if not isinstance(obj, GdsSpec):
        raise _CliError(f"{path}: expected a graph-directed system file", SEMANTIC)
    problems = validate(obj)
    if problems:
        raise _CliError(f"{path}: invalid system: {problems[0]}", SEMANTIC)
    return obj


def _load_sponge(path) -> SpongeSpec:
    obj = _load(path)
    if not isinstance(obj, SpongeSpec):
        raise _CliError(f"{path}: expected a sponge file", SEMANTIC)
    problems = validate_sponge(obj)
    if problems:
        raise _CliError(f"{path}: invalid sponge: {problems[0]}", SEMANTIC)
    return obj


def parse_face(text: str, d: int) -> Face:
    """Parse a comma list of x<axis>=<0|1> constraints; bare 'x' means axis 1."""
    axes, values = [], []
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"x(\d*)=([01])", part)
        if not m:
            raise _CliError(f"bad face constraint {part!r}; expected e.g. x1=0", SEMANTIC)
        axis = int(m.group(1)) if m.group(1) else 1
        if not 1 <= axis <= d:
            raise _CliError(f"face axis {axis} outside 1..{d}", SEMANTIC)
        axes.append(axis - 1)
        values.append(int(m.group(2)))
    if len(set(axes)) != len(axes):
        raise _CliError(f"face constrains an axis twice: {text!r}", SEMANTIC)
    return Face(d, tuple(axes), tuple(values))


def _pair(p):
    return f"({p[0]},{p[1]})"


def format_witness(witness) -> str:
    if isinstance(witness, DiagonalWitness):
        return f"diagonal vertex ({witness.vertex},{witness.vertex})"
    if isinstance(witness, TerminatedWalkWitness):
        parts = [f"solid {_pair(s.source)}->{_pair(s.target)}" for s in witness.steps]
        term = witness.terminal
        if isinstance(term, TerminalSolid):
            s = term.step
            parts.append(f"solid {_pair(s.source)}->{_pair(s.target)} [terminated: diagonal]")
        else:
            kind = "corner membership" if term.corner_faces else "reduced intersection"
            parts.append(
                f"dashed {_pair(term.source)}->{_pair(term.target)} [terminated: {kind}]"
            )
        return "terminated walk: " + ", ".join(parts)
    if isinstance(witness, SolidCycleWitness):
        lead = [f"solid {_pair(s.source)}->{_pair(s.target)}" for s in witness.lead_in]
        cyc = [f"solid {_pair(s.source)}->{_pair(s.target)}" for s in witness.cycle]
        text = "infinite solid walk: "
        if lead:
            text += ", ".join(lead) + ", then cycle "
        else:
            text += "cycle "
        return text + ", ".join(cyc)
    return str(witness)


def _write_output(data, out_path):
    if out_path is None or out_path == "-":
        if isinstance(data, bytes):
            sys.stdout.buffer.write(data)
        else:
            sys.stdout.write(data)
        return
    mode = "wb" if isinstance(data, bytes) else "w"
    with open(out_path, mode) as fh:
        fh.write(data)


def cmd_validate(args) -> int:
    obj = _load(args.file)
    problems = validate(obj) if isinstance(obj, GdsSpec) else validate_sponge(obj)
    if problems:
        for p in problems:
            print(f"violation: {p}")
        return SEMANTIC
    print("OK")
    return OK


def cmd_intersect(args) -> int:
    spec = _load_gds(args.file)
    if not (1 <= args.i <= spec.n and 1 <= args.j <= spec.n):
        raise _CliError(f"vertex ids must lie in 1..{spec.n}", SEMANTIC)
    decision = decide_intersection(spec, args.i, args.j)
    print(decision.outcome)
    if args.witness and decision.witness is not None:
        print(f"witness: {format_witness(decision.witness)}")
    if args.oracle:
        if args.i == args.j:
            print("oracle: skipped (diagonal query)")
        else:
            try:
                by_iter = decide_by_iteration(spec, args.i, args.j, args.budget)
            except ResourceBudgetError as err:
                print(f"oracle: infeasible ({err})")
            else:
                if by_iter == decision.nonempty:
                    print("oracle: agrees")
                else:
                    print("oracle: DISAGREES")
                    return SEMANTIC
    return OK


def cmd_face(args) -> int:
    spec = _load_gds(args.file)
    face = parse_face(args.face, spec.d)
    if not 1 <= args.vertex <= spec.n:
        raise _CliError(f"vertex id must lie in 1..{spec.n}", SEMANTIC)
    if face.dim >= spec.d:
        raise _CliError("face must constrain at least one axis", SEMANTIC)
    print("true" if face_meets_attractor(spec, face, args.vertex) else "false")
    return OK


def cmd_approx(args) -> int:
    spec = _load_gds(args.file)
    if not 1 <= args.vertex <= spec.n:
        raise _CliError(f"vertex id must lie in 1..{spec.n}", SEMANTIC)
    approx = approximate(spec, args.vertex, args.level, args.budget)
    _write_output(_rendered(approx, args.out), args.out)
    return OK


def _rendered(approx, out_path):
    if out_path and out_path.endswith(".ppm"):
        return corners_ppm(approx)
    if out_path and out_path.endswith(".svg"):
        return corners_svg(approx)
    return corners_text(approx)


def cmd_graph(args) -> int:
    spec = _load_gds(args.file)
    if args.kind == "intersecting":
        graph = mark_terminated(spec, build_intersecting_graph(spec))
        print(graph.to_dot())
        return OK
    if args.face is None:
        raise _CliError("graph face requires --face", SEMANTIC)
    face = parse_face(args.face, spec.d)
    if face.dim >= spec.d:
        raise _CliError("face must constrain at least one axis", SEMANTIC)
    print(build_face_graph(spec, face).to_dot())
    return OK


def cmd_sponge(args) -> int:
    sp = _load_sponge(args.file)
    if args.mode == "connected":
        try:
            shortcut = fast_path(sp, args.budget)
        except ResourceBudgetError:
            shortcut = None  # iteration too deep for the budget; the graph route below is exact
        if shortcut is not None:
            level, verdict = shortcut
            print(("connected" if verdict else "disconnected") + f" (fast path k={level})")
        else:
            verdict, _ = is_connected(sp)
            print(("connected" if verdict else "disconnected") + " (hata graph)")
        return OK
    if args.mode == "hata":
        print(hata_graph(sp).to_dot())
        return OK
    approx = iterate_sponge(sp, args.level, args.budget)
    _write_output(_rendered(approx, args.out), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridifs",
        description="Exact intersection and connectedness decisions for grid-aligned "
        "graph-directed attractors and sponge-like sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a system or sponge file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("intersect", help="decide whether two attractors intersect")
    p.add_argument("file")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="print the certifying walk")
    p.add_argument("--oracle", action="store_true", help="cross-check by finite iteration")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("face", help="does an attractor touch a face of the cube")
    p.add_argument("file")
    p.add_argument("--face", required=True, help='e.g. "x1=0,x2=1"')
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=cmd_face)

    p = sub.add_parser("approx", help="export a level-k cube approximation")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--out", help="output path; .ppm/.svg pick the image format")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("graph", help="export auxiliary graphs as DOT")
    p.add_argument("file")
    p.add_argument("kind", choices=("intersecting", "face"))
    p.add_argument("--face", help='face constraints for kind "face"')
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("sponge", help="sponge connectedness, Hata graph, rendering")
    p.add_argument("file")
    p.add_argument("mode", choices=("connected", "hata", "render"))
    p.add_argument("--level", type=int, default=1, help="iteration level for render")
    p.add_argument("--out", help="output path; .ppm/.svg pick the image format")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_sponge)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except ResourceBudgetError as err:
        print(f"error: {err}", file=sys.stderr)
        return RESOURCE
    except SpecFormatError as err:
        print(f"error: {err}", file=sys.stderr)
        return PARSE
    except GridError as err:
        print(f"error: {err}", file=sys.stderr)
        return SEMANTIC
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return SEMANTIC


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()

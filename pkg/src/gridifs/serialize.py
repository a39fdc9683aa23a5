"""JSON encoding of system descriptions.

Field names are normative and unknown fields are rejected, so files written
by other tools cannot silently change meaning.
"""

import json

from .core import GdsSpec, GridError
from .sponge import SpongeSpec, Symmetry


class SpecFormatError(GridError):
    """Input file does not match the documented schema."""


def _require_keys(obj: dict, required, optional=(), where="object"):
    if not isinstance(obj, dict):
        raise SpecFormatError(f"{where} must be a JSON object, got {type(obj).__name__}")
    missing = [k for k in required if k not in obj]
    if missing:
        raise SpecFormatError(f"{where} missing keys {missing}")
    unknown = [k for k in obj if k not in set(required) | set(optional)]
    if unknown:
        raise SpecFormatError(f"{where} has unknown keys {unknown}")


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecFormatError(f"{where} must be an integer, got {value!r}")
    return value


def _int_vector(value, where):
    if not isinstance(value, list):
        raise SpecFormatError(f"{where} must be a list of integers, got {value!r}")
    return tuple(_int(v, where) for v in value)


def gds_to_dict(spec: GdsSpec) -> dict:
    return {
        "d": spec.d,
        "N": spec.N,
        "n": spec.n,
        "edges": [
            {"from": e.source, "to": e.target, "t": list(e.translation)} for e in spec.edges
        ],
    }


def gds_from_dict(data: dict) -> GdsSpec:
    _require_keys(data, ("d", "N", "n", "edges"), where="system")
    if not isinstance(data["edges"], list):
        raise SpecFormatError("'edges' must be a list")
    edges = []
    for k, item in enumerate(data["edges"]):
        _require_keys(item, ("from", "to", "t"), where=f"edge #{k}")
        edges.append(
            (_int(item["from"], "from"), _int(item["to"], "to"), _int_vector(item["t"], "t"))
        )
    return GdsSpec(
        d=_int(data["d"], "d"),
        N=_int(data["N"], "N"),
        n=_int(data["n"], "n"),
        edges=tuple(edges),
    )


def sponge_to_dict(sp: SpongeSpec) -> dict:
    out = {"d": sp.d, "N": sp.N, "digits": [list(dig) for dig in sp.digits]}
    if any(not sym.is_identity() for sym in sp.symmetries):
        out["symmetries"] = [
            None
            if sym.is_identity()
            else {"perm": [p + 1 for p in sym.perm], "signs": list(sym.signs)}
            for sym in sp.symmetries
        ]
    return out


def sponge_from_dict(data: dict) -> SpongeSpec:
    _require_keys(data, ("d", "N", "digits"), optional=("symmetries",), where="sponge")
    d = _int(data["d"], "d")
    if not isinstance(data["digits"], list):
        raise SpecFormatError("'digits' must be a list")
    digits = tuple(_int_vector(dig, "digit") for dig in data["digits"])
    symmetries = None
    if "symmetries" in data:
        if not isinstance(data["symmetries"], list):
            raise SpecFormatError("'symmetries' must be a list")
        if len(data["symmetries"]) != len(digits):
            raise SpecFormatError("'symmetries' must parallel 'digits'")
        symmetries = []
        for k, item in enumerate(data["symmetries"]):
            if item is None:
                symmetries.append(Symmetry.identity(d))
                continue
            _require_keys(item, ("perm", "signs"), where=f"symmetry #{k}")
            perm = _int_vector(item["perm"], "perm")
            if sorted(perm) != list(range(1, d + 1)):
                raise SpecFormatError(f"symmetry #{k} perm must permute 1..{d}")
            try:
                symmetries.append(
                    Symmetry(tuple(p - 1 for p in perm), _int_vector(item["signs"], "signs"))
                )
            except ValueError as err:
                raise SpecFormatError(f"symmetry #{k}: {err}") from err
        symmetries = tuple(symmetries)
    return SpongeSpec(d=d, N=_int(data["N"], "N"), digits=digits, symmetries=symmetries)


def load_system(path: str):
    """Read a JSON file holding either kind of system (detected by fields)."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as err:
            raise SpecFormatError(f"{path}: not valid JSON ({err})") from err
    if not isinstance(data, dict):
        raise SpecFormatError(f"{path}: top level must be a JSON object")
    if "digits" in data:
        return sponge_from_dict(data)
    return gds_from_dict(data)


def dump_system(obj, path: str):
    data = sponge_to_dict(obj) if isinstance(obj, SpongeSpec) else gds_to_dict(obj)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")

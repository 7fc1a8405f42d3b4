"""JSON link descriptions: parsing, validation and canonical emission."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .clink import (CComplexData, SeifertFamily, Surface, all_keys, h1_rank,
                    is_totally_connected, validate_family)
from .errors import ClaspError, InconsistencyError

BUILTINS = ("hopf2", "trefoil", "figure8", "torus24")


class InputError(ClaspError, ValueError):
    """Malformed or invalid link description."""


@dataclass(frozen=True)
class LinkInput:
    family: SeifertFamily
    ccomplex: CComplexData | None = None
    name: str | None = None
    allow_unverified_torsion: bool = False

    @property
    def mu(self) -> int:
        return self.family.mu

    @property
    def n(self) -> int:
        return self.family.n

    def hypothesis_status(self, override: bool = False) -> str:
        """How the presentation hypothesis of the pairing is backed.

        ``"verified"``: a totally connected C-complex is attached.
        ``"override"``: the caller vouches for it.  ``"unverified"``: neither.
        """
        if self.ccomplex is not None and is_totally_connected(self.ccomplex):
            return "verified"
        if override or self.allow_unverified_torsion:
            return "override"
        return "unverified"


def _field(obj: dict, key: str, kind, where: str, required: bool = True, default=None):
    if key not in obj:
        if required:
            raise InputError(f"{where}: missing field {key!r}")
        return default
    val = obj[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise InputError(f"{where}.{key}: expected an integer, got {val!r}")
    if kind is not int and not isinstance(val, kind):
        raise InputError(f"{where}.{key}: expected {getattr(kind, '__name__', kind)}, got {val!r}")
    return val


def _parse_ccomplex(obj, mu: int) -> CComplexData:
    if not isinstance(obj, dict):
        raise InputError("ccomplex: expected an object")
    surfaces_raw = _field(obj, "surfaces", list, "ccomplex")
    surfaces = []
    for k, s in enumerate(surfaces_raw):
        where = f"ccomplex.surfaces[{k}]"
        if not isinstance(s, dict):
            raise InputError(f"{where}: expected an object")
        try:
            surfaces.append(Surface(
                _field(s, "genus", int, where, False, 0),
                _field(s, "boundary", int, where, False, 1),
                _field(s, "connected", bool, where, False, True)))
        except ValueError as exc:
            raise InputError(f"{where}: {exc}") from None
    pairs = _field(obj, "clasps", list, "ccomplex", False, [])
    for k, pr in enumerate(pairs):
        if (not isinstance(pr, list) or len(pr) not in (2, 3)
                or any(isinstance(x, bool) or not isinstance(x, int) for x in pr)):
            raise InputError(f"ccomplex.clasps[{k}]: expected [i, j] or [i, j, label]")
    try:
        return CComplexData.build(mu, surfaces, pairs)
    except ValueError as exc:
        raise InputError(f"ccomplex: {exc}") from None


def parse_link(text: str) -> LinkInput:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise InputError("top level: expected a JSON object")
    return link_from_dict(obj)


def link_from_dict(obj: dict) -> LinkInput:
    mu = _field(obj, "mu", int, "top level")
    if mu < 1:
        raise InputError("top level.mu: must be positive")
    n = _field(obj, "n", int, "top level", required=False)
    matrices = _field(obj, "matrices", dict, "top level", required=(n != 0), default={})
    name = _field(obj, "name", str, "top level", required=False)
    allow = _field(obj, "allow_unverified_torsion", bool, "top level", False, False)
    try:
        family = validate_family(mu, matrices, n)
    except InconsistencyError:
        raise
    except (ValueError, TypeError) as exc:
        raise InputError(f"matrices: {exc}") from None
    cc = None
    if obj.get("ccomplex") is not None:
        cc = _parse_ccomplex(obj["ccomplex"], mu)
        rank = h1_rank(cc)
        if rank != family.n:
            raise InconsistencyError(
                f"C-complex has H_1 rank {rank} but the matrices have size {family.n}")
    return LinkInput(family, cc, name, allow)


def link_to_dict(link: LinkInput) -> dict:
    out: dict = {}
    if link.name is not None:
        out["name"] = link.name
    out["mu"] = link.mu
    out["n"] = link.n
    out["matrices"] = {k: [list(r) for r in link.family.matrices[k]] for k in all_keys(link.mu)}
    if link.ccomplex is not None:
        cc = link.ccomplex
        surfaces = []
        for s in cc.surfaces:
            d = {"genus": s.genus, "boundary": s.boundary}
            if not s.connected:
                d["connected"] = False
            surfaces.append(d)
        counts: dict = {}
        clasps = []
        for c in cc.clasps:
            auto = counts.get((c.i, c.j), 0) + 1
            counts[(c.i, c.j)] = max(auto, c.label)
            clasps.append([c.i, c.j] if c.label == auto else [c.i, c.j, c.label])
        out["ccomplex"] = {"surfaces": surfaces, "clasps": clasps}
    if link.allow_unverified_torsion:
        out["allow_unverified_torsion"] = True
    return out


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]")


def _compact(m: re.Match) -> str:
    body = m.group(1)
    if body is None:
        return "[]"
    return "[" + ", ".join(x.strip() for x in body.split(",")) + "]"


def emit_link(link: LinkInput) -> str:
    """Canonical JSON text: two-space indent, integer rows on one line."""
    return _INT_LIST.sub(_compact, json.dumps(link_to_dict(link), indent=2)) + "\n"


def builtin_text(name: str) -> str:
    if name not in BUILTINS:
        raise InputError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")
    return resources.files("clasp.data").joinpath(f"{name}.json").read_text()


def load_builtin(name: str) -> LinkInput:
    return parse_link(builtin_text(name))

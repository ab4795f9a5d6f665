"""JSON documents for groups, crossed modules, morphisms, 2-cells,
butterflies and cocycle data.

Composite documents ("bundles") may embed sub-documents inline or name
another JSON file by a path relative to the referring file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import graded as gr
from . import groups as gp
from .butterfly import Butterfly, verify_butterfly
from .crossed import PNT, CrossedModule, StrictMorphism, make_crossed_module, verify_strict_morphism
from .groups import FiniteGroup, GroupHom


class ParseError(Exception):
    def __init__(self, path, line: int, column: int, msg: str):
        self.path, self.line, self.column = str(path), line, column
        super().__init__(f"{path}:{line}:{column}: {msg}")


class SchemaError(Exception):
    def __init__(self, field: str, msg: str = ""):
        self.field = field
        super().__init__(f"field {field!r}: {msg}" if msg else f"missing or invalid field {field!r}")


def load_json(path) -> tuple[Any, Path]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(path, 0, 0, exc.strerror or str(exc)) from exc
    try:
        return json.loads(text), path.parent
    except json.JSONDecodeError as exc:
        raise ParseError(path, exc.lineno, exc.colno, exc.msg) from exc


def resolve(value: Any, base: Path) -> tuple[Any, Path]:
    """Follow a string reference to another JSON file."""
    if isinstance(value, str):
        return load_json(base / value)
    return value, base


def _field(doc: Any, key: str, where: str = "") -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError(f"{where}{key}")
    return doc[key]


# groups and homomorphisms
def group_to_doc(G: FiniteGroup) -> dict:
    return {"order": G.order, "table": [list(r) for r in G.table]}


def group_from_doc(doc: Any, where: str = "") -> FiniteGroup:
    table = _field(doc, "table", where)
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise SchemaError(f"{where}table", "expected a list of rows")
    if "order" in doc and doc["order"] != len(table):
        raise SchemaError(f"{where}order", "does not match the table size")
    try:
        return gp.make_group(table)
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"{where}table", str(exc)) from exc


def hom_to_doc(h: GroupHom) -> dict:
    return {"map": list(h.map)}


def _map(doc: Any, where: str) -> list[int]:
    m = _field(doc, "map", where)
    if not isinstance(m, list) or not all(isinstance(v, int) for v in m):
        raise SchemaError(f"{where}map", "expected a list of integers")
    return m


def hom_from_doc(doc: Any, src: FiniteGroup, dst: FiniteGroup, where: str = "") -> GroupHom:
    m = _map(doc, where)
    if len(m) != src.order or any(v < 0 or v >= dst.order for v in m):
        raise SchemaError(f"{where}map", f"expected {src.order} entries below {dst.order}")
    return gp.make_hom(src, dst, m)


# crossed modules
def xmod_to_doc(C: CrossedModule) -> dict:
    return {
        "N": group_to_doc(C.N),
        "M": group_to_doc(C.M),
        "h": hom_to_doc(C.h),
        "action": {"maps": [list(r) for r in C.act.maps]},
    }


def xmod_parts_from_doc(doc: Any, where: str = ""):
    N = group_from_doc(_field(doc, "N", where), f"{where}N.")
    M = group_from_doc(_field(doc, "M", where), f"{where}M.")
    h = hom_from_doc(_field(doc, "h", where), N, M, f"{where}h.")
    maps = _field(_field(doc, "action", where), "maps", f"{where}action.")
    if not isinstance(maps, list) or len(maps) != M.order or any(
        not isinstance(r, list) or sorted(r) != list(range(N.order)) for r in maps
    ):
        raise SchemaError(f"{where}action.maps", f"expected {M.order} permutations of range({N.order})")
    act = gp.make_action(M, N, maps)
    return N, M, h, act


def xmod_from_doc(doc: Any, where: str = "") -> CrossedModule:
    return make_crossed_module(*xmod_parts_from_doc(doc, where))


def morphism_to_doc(F: StrictMorphism) -> dict:
    return {"f1": hom_to_doc(F.f1), "f2": hom_to_doc(F.f2)}


def morphism_from_doc(doc: Any, C1: CrossedModule, C2: CrossedModule, where: str = "") -> StrictMorphism:
    f1 = hom_from_doc(_field(doc, "f1", where), C1.M, C2.M, f"{where}f1.")
    f2 = hom_from_doc(_field(doc, "f2", where), C1.N, C2.N, f"{where}f2.")
    return verify_strict_morphism(C1, C2, f1, f2)


def pnt_to_doc(p: PNT) -> dict:
    return {"gamma": list(p.gamma)}


def gamma_from_doc(doc: Any, C1: CrossedModule, C2: CrossedModule, where: str = "") -> list[int]:
    g = _field(doc, "gamma", where)
    if not isinstance(g, list) or len(g) != C1.M.order or any(
        not isinstance(v, int) or v < 0 or v >= C2.N.order for v in g
    ):
        raise SchemaError(f"{where}gamma", f"expected {C1.M.order} entries below {C2.N.order}")
    return g


# butterflies
def butterfly_to_doc(B: Butterfly) -> dict:
    doc = {"E": group_to_doc(B.E)}
    for name in ("t", "g", "k", "f"):
        doc[name] = hom_to_doc(getattr(B, name))
    return doc


def butterfly_from_doc(doc: Any, C1: CrossedModule, C2: CrossedModule, where: str = "") -> Butterfly:
    E = group_from_doc(_field(doc, "E", where), f"{where}E.")
    t = hom_from_doc(_field(doc, "t", where), E, C2.M, f"{where}t.")
    g = hom_from_doc(_field(doc, "g", where), E, C1.M, f"{where}g.")
    k = hom_from_doc(_field(doc, "k", where), C2.N, E, f"{where}k.")
    f = hom_from_doc(_field(doc, "f", where), C1.N, E, f"{where}f.")
    return verify_butterfly(C1, C2, E, t, g, k, f)


# graded data
def cocycle_to_doc(data: gr.AbelianThreeCocycle) -> dict:
    return {
        "factors": list(data.grading.factors),
        "phase_modulus": data.modulus,
        "f": list(data.f_flat),
        "h": list(data.h_flat),
    }


def cocycle_from_doc(doc: Any) -> gr.AbelianThreeCocycle:
    factors = _field(doc, "factors")
    m = _field(doc, "phase_modulus")
    if not isinstance(factors, list) or not all(isinstance(v, int) and v >= 2 for v in factors):
        raise SchemaError("factors", "expected integers >= 2")
    if not isinstance(m, int) or m < 1:
        raise SchemaError("phase_modulus", "expected a positive integer")
    n = 1
    for v in factors:
        n *= v
    f, h = doc.get("f"), doc.get("h")
    for key, val, size in (("f", f, n**3), ("h", h, n**2)):
        if val is not None and (not isinstance(val, list) or len(val) != size or not all(isinstance(v, int) for v in val)):
            raise SchemaError(key, f"expected a flat list of {size} integers")
    return gr.make_cocycle(factors, m, f, h)


def graded_from_doc(doc: Any, grading: gr.GradingGroup, where: str = "") -> gr.GradedObject:
    dims = _field(doc, "dims", where)
    if not isinstance(dims, dict):
        raise SchemaError(f"{where}dims", "expected a mapping from comma-joined grades to dimensions")
    try:
        return gr.graded_object(grading, dims)
    except (ValueError, KeyError) as exc:
        raise SchemaError(f"{where}dims", str(exc)) from exc


def graded_to_doc(X: gr.GradedObject) -> dict:
    return {"dims": X.to_dict()}


def dumps(doc: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(doc, indent=2)
    return json.dumps(doc, separators=(",", ":"))

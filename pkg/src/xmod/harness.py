"""Exhaustive law checks for the 2-category of crossed modules.

Objects are crossed modules, 1-cells all strict morphisms between them and
2-cells all pointed natural transformations.  Each check returns a
``Report`` listing one entry per law with a witness for the first
violation.  Composition functions are parameters so that a corrupted
composite can be injected to test the harness itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable

from .crossed import (
    PNT,
    CrossedModule,
    StrictMorphism,
    compose_pnt_horizontal,
    compose_pnt_vertical,
    compose_strict,
    enumerate_pnts,
    enumerate_strict_morphisms,
    identity_morphism,
    identity_pnt,
    invert_pnt,
    pnt_search_space,
)
from .errors import VerificationError
from .groups import DEFAULT_BUDGET
from .report import FAIL, PASS, SKIPPED, CheckEntry, Report

class _Law:
    """Accumulates one law's outcome, keeping the first witness."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.witness = None

    def record(self, ok: bool, witness: Callable[[], Any]) -> None:
        self.count += 1
        if not ok and self.witness is None:
            self.witness = witness()

    def entry(self) -> CheckEntry:
        if self.count == 0:
            return CheckEntry(self.name, SKIPPED, "no instances")
        return CheckEntry(self.name, FAIL if self.witness is not None else PASS, self.witness, self.count)


@dataclass
class TwoCellInstance:
    objects: list[CrossedModule]
    names: list[str]
    one_cells: dict[tuple[int, int], list[StrictMorphism]]
    two_cells: dict[tuple[int, int], dict[tuple[int, int], list[PNT]]]
    skipped: list[tuple[int, int, int, int]]

    def index(self, i: int, j: int, F: StrictMorphism) -> int:
        return self.one_cells[(i, j)].index(F)

    def cells(self, i: int, j: int, a: int, b: int) -> list[PNT] | None:
        return self.two_cells[(i, j)].get((a, b))


def build_instance(
    objects: list[CrossedModule] | dict[str, CrossedModule], budget: int = DEFAULT_BUDGET
) -> TwoCellInstance:
    """Enumerate all 1-cells between the objects and all 2-cells between
    parallel 1-cells; pairs whose search space exceeds ``budget`` are
    recorded as skipped."""
    if isinstance(objects, dict):
        names, objs = list(objects), list(objects.values())
    else:
        objs = list(objects)
        names = [f"C{i}" for i in range(len(objs))]
    one, two, skipped = {}, {}, []
    for i, j in itertools.product(range(len(objs)), repeat=2):
        ms = enumerate_strict_morphisms(objs[i], objs[j], budget)
        one[(i, j)] = ms
        two[(i, j)] = {}
        for a, b in itertools.product(range(len(ms)), repeat=2):
            if pnt_search_space(ms[a], ms[b]) > budget:
                skipped.append((i, j, a, b))
                continue
            two[(i, j)][(a, b)] = enumerate_pnts(ms[a], ms[b], budget)
    return TwoCellInstance(objs, names, one, two, skipped)


def _safe(fn, *args):
    try:
        return fn(*args), None
    except VerificationError as exc:
        return None, exc


def _g(p: PNT) -> list[int]:
    return list(p.gamma)


def check_hom_category(
    inst: TwoCellInstance,
    i: int,
    j: int,
    vertical: Callable[[PNT, PNT], PNT] = compose_pnt_vertical,
) -> Report:
    """Vertical composition in the hom-category (C_i, C_j): closure,
    associativity and two-sided units."""
    tag = f"({inst.names[i]},{inst.names[j]})"
    ms = inst.one_cells[(i, j)]
    closure, assoc, unit_l, unit_r = (_Law(f"{n} {tag}") for n in
                                      ("vertical closure", "vertical associativity", "left unit", "right unit"))
    skipped = _Law(f"2-cell enumeration {tag}")
    for s in inst.skipped:
        if s[:2] == (i, j):
            skipped.witness = skipped.witness or {"skipped_pair": list(s[2:])}
    n = len(ms)

    def comp(p, q):
        return _safe(vertical, p, q)

    for a, b, c in itertools.product(range(n), repeat=3):
        P, Q = inst.cells(i, j, a, b), inst.cells(i, j, b, c)
        if P is None or Q is None:
            continue
        known = inst.cells(i, j, a, c)
        for p in P:
            for q in Q:
                r, err = comp(p, q)
                closure.record(
                    err is None and (known is None or r in known),
                    lambda: {"pair": [_g(p), _g(q)], "error": type(err).__name__ if err else "not enumerated"},
                )
        for d in range(n):
            Rs = inst.cells(i, j, c, d)
            if Rs is None:
                continue
            for p, q, r in itertools.product(P, Q, Rs):
                qp = comp(p, q)[0]
                rq = comp(q, r)[0]
                lhs = comp(qp, r)[0] if qp is not None else None
                rhs = comp(p, rq)[0] if rq is not None else None
                assoc.record(lhs is not None and lhs == rhs,
                             lambda: {"triple": [_g(p), _g(q), _g(r)]})
    for a, b in itertools.product(range(n), repeat=2):
        for p in inst.cells(i, j, a, b) or []:
            lp = comp(p, identity_pnt(ms[b]))[0]
            unit_l.record(lp == p, lambda: {"pnt": _g(p), "side": "id after p"})
            rp = comp(identity_pnt(ms[a]), p)[0]
            unit_r.record(rp == p, lambda: {"pnt": _g(p), "side": "p after id"})

    rep = Report([law.entry() for law in (closure, assoc, unit_l, unit_r)])
    if skipped.witness is not None:
        rep.checks.append(CheckEntry(skipped.name, SKIPPED, skipped.witness))
    return rep


def check_interchange(
    inst: TwoCellInstance,
    i: int,
    j: int,
    l: int,
    vertical: Callable[[PNT, PNT], PNT] = compose_pnt_vertical,
    horizontal: Callable[[PNT, PNT], PNT] = compose_pnt_horizontal,
) -> Report:
    """Functoriality of horizontal composition (C_i,C_j) x (C_j,C_l) -> (C_i,C_l)."""
    tag = f"({inst.names[i]},{inst.names[j]},{inst.names[l]})"
    closure = _Law(f"horizontal closure {tag}")
    ident = _Law(f"horizontal identities {tag}")
    inter = _Law(f"interchange {tag}")
    A, B = inst.one_cells[(i, j)], inst.one_cells[(j, l)]

    for G, E in itertools.product(A, B):
        r, err = _safe(horizontal, identity_pnt(G), identity_pnt(E))
        ident.record(err is None and r == identity_pnt(compose_strict(E, G)),
                     lambda: {"G": [list(G.f1.map), list(G.f2.map)], "E": [list(E.f1.map), list(E.f2.map)]})

    for a, b in itertools.product(range(len(A)), repeat=2):
        for c, d in itertools.product(range(len(B)), repeat=2):
            P, Q = inst.cells(i, j, a, b), inst.cells(j, l, c, d)
            if P is None or Q is None:
                continue
            for p, q in itertools.product(P, Q):
                r, err = _safe(horizontal, p, q)
                closure.record(err is None, lambda: {"pair": [_g(p), _g(q)], "error": type(err).__name__})

    # (q2 . q1) * (p2 . p1) == (q2 * p2) . (q1 * p1)
    for a, b, c in itertools.product(range(len(A)), repeat=3):
        P1, P2 = inst.cells(i, j, a, b), inst.cells(i, j, b, c)
        if P1 is None or P2 is None:
            continue
        for x, y, z in itertools.product(range(len(B)), repeat=3):
            Q1, Q2 = inst.cells(j, l, x, y), inst.cells(j, l, y, z)
            if Q1 is None or Q2 is None:
                continue
            for p1, p2, q1, q2 in itertools.product(P1, P2, Q1, Q2):
                lhs = _chain(horizontal, _chain(vertical, p1, p2), _chain(vertical, q1, q2))
                rhs = _chain(vertical, _chain(horizontal, p1, q1), _chain(horizontal, p2, q2))
                inter.record(lhs is not None and lhs == rhs,
                             lambda: {"p1": _g(p1), "p2": _g(p2), "q1": _g(q1), "q2": _g(q2)})
    return Report([closure.entry(), ident.entry(), inter.entry()])


def _chain(fn, x, y):
    if x is None or y is None:
        return None
    return _safe(fn, x, y)[0]


def check_strict_laws(inst: TwoCellInstance, compose: Callable = compose_strict) -> Report:
    """1-cell composition is associative and unital on the nose, so the
    associator and unitors are identity 2-cells and pentagon/triangle hold
    trivially."""
    k = len(inst.objects)
    assoc = _Law("1-cell associativity")
    units = _Law("1-cell units")
    for i, j in itertools.product(range(k), repeat=2):
        idj, idi = identity_morphism(inst.objects[j]), identity_morphism(inst.objects[i])
        for F in inst.one_cells[(i, j)]:
            units.record(_safe(compose, idj, F)[0] == F and _safe(compose, F, idi)[0] == F,
                         lambda: {"pair": [inst.names[i], inst.names[j]], "f1": list(F.f1.map)})
    for a, b, c, d in itertools.product(range(k), repeat=4):
        for H in inst.one_cells[(a, b)]:
            for G in inst.one_cells[(b, c)]:
                GH = compose(G, H)
                for F in inst.one_cells[(c, d)]:
                    lhs = _safe(compose, compose(F, G), H)[0]
                    rhs = _safe(compose, F, GH)[0]
                    assoc.record(lhs is not None and lhs == rhs,
                                 lambda: {"objects": [inst.names[x] for x in (a, b, c, d)]})
    rep = Report([assoc.entry(), units.entry()])
    ok = assoc.witness is None and units.witness is None
    status = PASS if ok else FAIL
    rep.checks.append(CheckEntry("pentagon (associator is identity)", status, None if ok else "1-cell laws fail"))
    rep.checks.append(CheckEntry("triangle (unitors are identities)", status, None if ok else "1-cell laws fail"))
    return rep


def check_inverses(inst: TwoCellInstance) -> Report:
    """Every 2-cell has the pointwise inverse as a two-sided inverse."""
    law = _Law("2-cell inverses")
    for (i, j), table in inst.two_cells.items():
        ms = inst.one_cells[(i, j)]
        for (a, b), ps in table.items():
            for p in ps:
                q, err = _safe(invert_pnt, p)
                ok = (err is None and invert_pnt(q) == p
                      and compose_pnt_vertical(p, q) == identity_pnt(ms[a])
                      and compose_pnt_vertical(q, p) == identity_pnt(ms[b]))
                law.record(ok, lambda: {"pnt": _g(p)})
    return Report([law.entry()])


def self_cells_report(inst: TwoCellInstance) -> Report:
    """Notes listing endo-morphisms G with non-trivial 2-cells G => G.

    This is informational: such cells are valid and are not excluded.
    """
    notes = []
    for (i, j), table in inst.two_cells.items():
        for (a, b), ps in table.items():
            if a == b and any(not p.is_trivial() for p in ps):
                notes.append({"note": "non-trivial endo 2-cells", "pair": [inst.names[i], inst.names[j]],
                              "morphism": a, "count": sum(not p.is_trivial() for p in ps)})
    return Report(notes=notes)


def check_all(inst: TwoCellInstance) -> Report:
    k = len(inst.objects)
    rep = Report()
    for i, j in itertools.product(range(k), repeat=2):
        rep.extend(check_hom_category(inst, i, j))
    for i, j, l in itertools.product(range(k), repeat=3):
        rep.extend(check_interchange(inst, i, j, l))
    rep.extend(check_strict_laws(inst))
    rep.extend(check_inverses(inst))
    rep.extend(self_cells_report(inst))
    return rep

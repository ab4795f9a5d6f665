"""Batch command-line front end.

Every command reads JSON documents, runs one verification or
construction and prints a JSON report.  Exit status: 0 pass, 1 fail (the
report carries witnesses), 2 malformed input or exhausted budget.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from pathlib import Path
from typing import Any, Callable

from . import butterfly as bf
from . import crossed as cx
from . import graded as gr
from . import harness
from . import io
from .errors import BudgetExceeded, VerificationError
from .groups import DEFAULT_BUDGET

EXIT = {"pass": 0, "fail": 1, "error": 2}


class Failed(Exception):
    """A check failed with structured details (not an input error)."""

    def __init__(self, details: dict):
        self.details = details
        super().__init__("check failed")


def _load(path: str) -> tuple[Any, Path]:
    return io.load_json(path)


def _xmod(value: Any, base: Path, where: str) -> cx.CrossedModule:
    doc, b = io.resolve(value, base)
    return io.xmod_from_doc(doc, where)


def _pair(doc: Any, base: Path) -> tuple[cx.CrossedModule, cx.CrossedModule]:
    return (_xmod(io._field(doc, "src"), base, "src."), _xmod(io._field(doc, "dst"), base, "dst."))


def _morphism(doc: Any, base: Path) -> cx.StrictMorphism:
    C1, C2 = _pair(doc, base)
    body = doc
    if "morphism" in doc:
        body, _ = io.resolve(doc["morphism"], base)
    return io.morphism_from_doc(body, C1, C2)


def _pnt(doc: Any, base: Path) -> cx.PNT:
    C1, C2 = _pair(doc, base)
    G = io.morphism_from_doc(io.resolve(io._field(doc, "from"), base)[0], C1, C2, "from.")
    F = io.morphism_from_doc(io.resolve(io._field(doc, "to"), base)[0], C1, C2, "to.")
    return cx.verify_pnt(G, F, io.gamma_from_doc(doc, C1, C2))


def _butterfly(doc: Any, base: Path) -> bf.Butterfly:
    C1, C2 = _pair(doc, base)
    body = doc
    if "butterfly" in doc:
        body, _ = io.resolve(doc["butterfly"], base)
    return io.butterfly_from_doc(body, C1, C2)


def _pnt_details(p: cx.PNT) -> dict:
    return {
        "from": io.morphism_to_doc(p.source),
        "to": io.morphism_to_doc(p.target),
        "gamma": list(p.gamma),
        "trivial": p.is_trivial(),
    }


# commands: each returns details on pass, raises VerificationError/Failed on fail
def cmd_verify_group(args) -> dict:
    doc, _ = _load(args.inputs[0])
    G = io.group_from_doc(doc)
    return {"order": G.order, "abelian": G.is_abelian()}


def cmd_verify_xmod(args) -> dict:
    doc, _ = _load(args.inputs[0])
    C = io.xmod_from_doc(doc)
    return {"N_order": C.N.order, "M_order": C.M.order, "pi1_order": cx.pi1(C).order, "pi2_order": cx.pi2(C).order}


def cmd_pi(args) -> dict:
    doc, _ = _load(args.inputs[0])
    C = io.xmod_from_doc(doc)
    return {"pi1": io.group_to_doc(cx.pi1(C)), "pi2": io.group_to_doc(cx.pi2(C))}


def cmd_verify_morphism(args) -> dict:
    doc, base = _load(args.inputs[0])
    F = _morphism(doc, base)
    eq = cx.is_equivalence(F)
    return {
        "morphism": io.morphism_to_doc(F),
        "equivalence": eq.ok,
        "pi1_map": list(eq.pi1_map),
        "pi2_map": list(eq.pi2_map),
    }


def cmd_verify_pnt(args) -> dict:
    doc, base = _load(args.inputs[0])
    return _pnt_details(_pnt(doc, base))


def cmd_compose_pnt(args) -> dict:
    if len(args.inputs) != 2:
        raise io.SchemaError("inputs", "compose-pnt needs two PNT documents")
    p1 = _pnt(*_load(args.inputs[0]))
    p2 = _pnt(*_load(args.inputs[1]))
    if args.horizontal:
        p = cx.compose_pnt_horizontal(p1, p2)
    else:
        p = cx.compose_pnt_vertical(p1, p2)
    return {"mode": "horizontal" if args.horizontal else "vertical", **_pnt_details(p)}


def cmd_enumerate_pnts(args) -> dict:
    doc, base = _load(args.inputs[0])
    C1, C2 = _pair(doc, base)
    G = io.morphism_from_doc(io.resolve(io._field(doc, "from"), base)[0], C1, C2, "from.")
    F = io.morphism_from_doc(io.resolve(io._field(doc, "to"), base)[0], C1, C2, "to.")
    ps = cx.enumerate_pnts(G, F, args.budget)
    return {"count": len(ps), "gammas": [list(p.gamma) for p in ps]}


def cmd_verify_butterfly(args) -> dict:
    doc, base = _load(args.inputs[0])
    B = _butterfly(doc, base)
    rev = bf.is_reversible(B)
    secs = bf.find_sections(B, args.budget)
    return {
        "E_order": B.E.order,
        "reversible": rev.ok,
        "splittable": bool(secs),
        "sections": [list(s.map) for s in secs],
    }


def cmd_split(args) -> dict:
    doc, base = _load(args.inputs[0])
    B = bf.butterfly_from_strict(_morphism(doc, base))
    return {"butterfly": io.butterfly_to_doc(B), "section": list(B.canonical_section.map)}


def cmd_unsplit(args) -> dict:
    doc, base = _load(args.inputs[0])
    B = _butterfly(doc, base)
    if "section" in doc:
        s = io.hom_from_doc(doc["section"], B.src.M, B.E, "section.")
    else:
        secs = bf.find_sections(B, args.budget)
        if not secs:
            raise Failed({"splittable": False, "reason": "no splitting homomorphism M1 -> E"})
        s = secs[0]
    F = bf.strict_from_split(B, s)
    return {"section": list(s.map), "morphism": io.morphism_to_doc(F)}


def cmd_invert_butterfly(args) -> dict:
    doc, base = _load(args.inputs[0])
    B = _butterfly(doc, base)
    inv = bf.invert_butterfly(B)
    return {"butterfly": io.butterfly_to_doc(inv)}


def _report_status(rep) -> str:
    return "pass" if rep.ok else "fail"


def cmd_verify_cocycle(args) -> dict:
    data = io.cocycle_from_doc(_load(args.inputs[0])[0])
    rep = gr.verify_cocycle(data)
    if not rep.ok:
        raise Failed(rep.to_dict())
    return rep.to_dict()


def _objects(args, data: gr.AbelianThreeCocycle, arity: int) -> list[tuple[gr.GradedObject, ...]]:
    if args.objects:
        doc, base = _load(args.objects)
        objs = doc.get("objects") if isinstance(doc, dict) else doc
        if not isinstance(objs, list) or len(objs) != arity:
            raise io.SchemaError("objects", f"expected a list of {arity} graded objects")
        return [tuple(io.graded_from_doc(o, data.grading, f"objects[{i}].") for i, o in enumerate(objs))]
    return list(itertools.product(gr.simples(data.grading), repeat=arity))


def _labels(data, objs) -> list:
    out = []
    for X in objs:
        nz = [g for g, d in enumerate(X.dims) if d]
        if X.total == 1:
            out.append(data.grading.label(nz[0]))
        else:
            out.append(X.to_dict())
    return out


def cmd_pentagon(args) -> dict:
    data = io.cocycle_from_doc(_load(args.inputs[0])[0])
    tuples = _objects(args, data, 4)
    for objs in tuples:
        res = gr.pentagon_check(data, *objs)
        if not res:
            raise Failed({"objects": _labels(data, objs), "witness": res.witness, "checked": len(tuples)})
    return {"checked": len(tuples)}


def cmd_hexagon(args) -> dict:
    data = io.cocycle_from_doc(_load(args.inputs[0])[0])
    tuples = _objects(args, data, 3)
    fails = {}
    for objs in tuples:
        for name, res in zip(("first", "second"), gr.hexagon_check(data, *objs)):
            if not res and name not in fails:
                fails[name] = {"objects": _labels(data, objs), "witness": res.witness}
    details = {"checked": len(tuples), "first": "first" not in fails, "second": "second" not in fails}
    if fails:
        raise Failed({**details, "witnesses": fails})
    return details


def cmd_symmetric(args) -> dict:
    data = io.cocycle_from_doc(_load(args.inputs[0])[0])
    sym = gr.is_symmetric(data)
    q = gr.quadratic_form(data)
    details = {
        "symmetric": sym,
        "quadratic_form": {",".join(map(str, data.grading.elements[g])): v for g, v in enumerate(q)},
    }
    if not sym:
        h, m = data.h, data.modulus
        bad = next((x, y) for x in range(h.shape[0]) for y in range(h.shape[0]) if (h[x, y] + h[y, x]) % m)
        details["witness"] = {
            "pair": [data.grading.label(bad[0]), data.grading.label(bad[1])],
            "double_braiding_phase": int((h[bad] + h[bad[::-1]]) % m),
        }
        raise Failed(details)
    return details


def cmd_check_2cat(args) -> dict:
    doc, base = _load(args.inputs[0])
    objs = io._field(doc, "objects")
    if isinstance(objs, dict):
        named = {k: _xmod(v, base, f"objects.{k}.") for k, v in objs.items()}
    elif isinstance(objs, list):
        named = {f"C{i}": _xmod(v, base, f"objects[{i}].") for i, v in enumerate(objs)}
    else:
        raise io.SchemaError("objects")
    inst = harness.build_instance(named, args.budget)
    rep = harness.check_all(inst)
    if not rep.ok:
        raise Failed(rep.to_dict())
    return rep.to_dict()


COMMANDS: dict[str, Callable] = {
    "verify-group": cmd_verify_group,
    "verify-xmod": cmd_verify_xmod,
    "pi": cmd_pi,
    "verify-morphism": cmd_verify_morphism,
    "verify-pnt": cmd_verify_pnt,
    "compose-pnt": cmd_compose_pnt,
    "enumerate-pnts": cmd_enumerate_pnts,
    "verify-butterfly": cmd_verify_butterfly,
    "split": cmd_split,
    "unsplit": cmd_unsplit,
    "invert-butterfly": cmd_invert_butterfly,
    "verify-cocycle": cmd_verify_cocycle,
    "pentagon": cmd_pentagon,
    "hexagon": cmd_hexagon,
    "symmetric": cmd_symmetric,
    "check-2cat": cmd_check_2cat,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="xmod", description="Exact checks for crossed modules, butterflies and graded braided categories.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("inputs", nargs="+", help="input JSON documents")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on enumeration candidates")
    p.add_argument("--all-simples", action="store_true", help="coherence checks over every tuple of simple objects (default)")
    p.add_argument("--objects", help="JSON list of graded objects for pentagon/hexagon instead of all simples")
    p.add_argument("--horizontal", action="store_true", help="compose-pnt: horizontal instead of vertical")
    p.add_argument("--pretty", action="store_true", help="indented output")
    p.add_argument("--timing", action="store_true", help="include wall-clock milliseconds (makes output non-reproducible)")
    return p


def run(args: argparse.Namespace) -> dict:
    start = time.perf_counter()
    try:
        details = COMMANDS[args.command](args)
        status = "pass"
    except Failed as exc:
        status, details = "fail", exc.details
    except VerificationError as exc:
        status, details = "fail", exc.to_dict()
    except BudgetExceeded as exc:
        status, details = "error", {"error": "BudgetExceeded", "needed": exc.needed, "budget": exc.budget}
    except io.ParseError as exc:
        status, details = "error", {"error": "ParseError", "path": exc.path, "line": exc.line, "column": exc.column,
                                    "message": str(exc)}
    except io.SchemaError as exc:
        status, details = "error", {"error": "SchemaError", "field": exc.field, "message": str(exc)}
    report = {"command": args.command, "status": status, "details": details}
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return report


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    report = run(args)
    sys.stdout.write(io.dumps(report, pretty=args.pretty) + "\n")
    return EXIT[report["status"]]


if __name__ == "__main__":
    sys.exit(main())

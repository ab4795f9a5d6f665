#!/usr/bin/env python
"""Write the named instances as JSON documents into catalog/.

Also writes catalog/manifest.json: one CLI invocation per example with the
exit code it is expected to produce.
"""

import json
import sys
from pathlib import Path

from xmod import butterfly as bf
from xmod import catalog as cat
from xmod import crossed as cx
from xmod import graded as gr
from xmod import groups as gp
from xmod import io

OUT = Path(__file__).resolve().parent.parent / "catalog"


def write(name, doc):
    (OUT / name).write_text(json.dumps(doc, indent=1) + "\n")
    return name


def main():
    OUT.mkdir(exist_ok=True)
    runs = []

    def run(command, files, expect, *flags):
        runs.append({"command": command, "inputs": list(files), "flags": list(flags), "expect_exit": expect})

    write("s3.json", io.group_to_doc(cat.symmetric3()))
    run("verify-group", ["s3.json"], 0)
    bad = [list(r) for r in cat.symmetric3().table]
    bad[1][2], bad[1][3] = bad[1][3], bad[1][2]
    write("s3_swapped_entry.json", {"order": 6, "table": bad})
    run("verify-group", ["s3_swapped_entry.json"], 1)

    xmods = cat.catalog_xmods()
    for name, C in xmods.items():
        write(f"{name}.json", io.xmod_to_doc(C))
        run("verify-xmod", [f"{name}.json"], 0)
        run("pi", [f"{name}.json"], 0)

    N, M, h, act = cat.s3_trivial_action_data()
    write("s3_id_trivial_action.json", {
        "N": io.group_to_doc(N), "M": io.group_to_doc(M), "h": io.hom_to_doc(h),
        "action": {"maps": [list(r) for r in act.maps]},
    })
    run("verify-xmod", ["s3_id_trivial_action.json"], 1)

    def morphism(fname, src, dst, F):
        write(fname, {"src": f"{src}.json", "dst": f"{dst}.json", **io.morphism_to_doc(F)})
        return fname

    a3 = xmods["inclusion_a3_s3"]
    run("verify-morphism", [morphism("morphism_identity_a3_s3.json", "inclusion_a3_s3", "inclusion_a3_s3",
                                     cx.identity_morphism(a3))], 0)
    run("verify-morphism", [morphism("morphism_collapse.json", "inclusion_a3_s3", "point_z2",
                                     cat.collapse_morphism())], 0)
    run("verify-morphism", [morphism("morphism_inclusion_into_identity.json", "inclusion_a3_s3", "s3_identity",
                                     cat.inclusion_into_identity())], 0)
    z2 = xmods["z2_boundary"]
    kill = cx.verify_strict_morphism(z2, z2, gp.identity_hom(z2.M), gp.trivial_hom(z2.N, z2.N))
    run("verify-morphism", [morphism("morphism_z2_kill_n.json", "z2_boundary", "z2_boundary", kill)], 0)
    write("morphism_s3_square_fails.json", {"src": "s3_identity.json", "dst": "s3_identity.json",
                                            "f1": {"map": list(range(6))}, "f2": {"map": [0] * 6}})
    run("verify-morphism", ["morphism_s3_square_fails.json"], 1)

    idz2 = cx.identity_morphism(z2)
    ref = {"src": "z2_boundary.json", "dst": "z2_boundary.json"}
    write("pnt_z2_gamma_id.json", {**ref, "from": io.morphism_to_doc(idz2), "to": io.morphism_to_doc(idz2),
                                   "gamma": [0, 1]})
    run("verify-pnt", ["pnt_z2_gamma_id.json"], 0)
    run("compose-pnt", ["pnt_z2_gamma_id.json", "pnt_z2_gamma_id.json"], 0)
    run("compose-pnt", ["pnt_z2_gamma_id.json", "pnt_z2_gamma_id.json"], 0, "--horizontal")
    write("pnt_z2_condition_two_fails.json", {**ref, "from": io.morphism_to_doc(idz2), "to": io.morphism_to_doc(kill),
                                              "gamma": [0, 0]})
    run("verify-pnt", ["pnt_z2_condition_two_fails.json"], 1)
    write("pnts_z2_identity.json", {**ref, "from": io.morphism_to_doc(idz2), "to": io.morphism_to_doc(idz2)})
    run("enumerate-pnts", ["pnts_z2_identity.json"], 0)
    ida3 = cx.identity_morphism(a3)
    write("pnts_a3_s3_identity.json", {"src": "inclusion_a3_s3.json", "dst": "inclusion_a3_s3.json",
                                       "from": io.morphism_to_doc(ida3), "to": io.morphism_to_doc(ida3)})
    run("enumerate-pnts", ["pnts_a3_s3_identity.json"], 0)

    run("split", ["morphism_identity_a3_s3.json"], 0)
    run("split", ["morphism_collapse.json"], 0)
    B = bf.butterfly_from_strict(cx.identity_morphism(a3))
    write("butterfly_split_a3_s3.json", {"src": "inclusion_a3_s3.json", "dst": "inclusion_a3_s3.json",
                                         **io.butterfly_to_doc(B)})
    run("verify-butterfly", ["butterfly_split_a3_s3.json"], 0)
    run("unsplit", ["butterfly_split_a3_s3.json"], 0)
    run("invert-butterfly", ["butterfly_split_a3_s3.json"], 0)
    Bk = bf.butterfly_from_strict(kill)
    write("butterfly_not_reversible.json", {**ref, **io.butterfly_to_doc(Bk)})
    run("verify-butterfly", ["butterfly_not_reversible.json"], 0)
    run("invert-butterfly", ["butterfly_not_reversible.json"], 1)

    Z4 = cat.cyclic(4)
    write("nonsplit_z4.json", {
        "src": "point_z2.json", "dst": "z2_in_z4.json", "E": io.group_to_doc(Z4),
        "t": {"map": [0, 1, 2, 3]}, "g": {"map": [0, 1, 0, 1]}, "k": {"map": [0, 2]}, "f": {"map": [0]},
    })
    run("verify-butterfly", ["nonsplit_z4.json"], 0)
    run("unsplit", ["nonsplit_z4.json"], 1)
    run("invert-butterfly", ["nonsplit_z4.json"], 0)

    cocycles = {
        "cocycle_trivial_z2.json": gr.make_cocycle([2], 2),
        "super.json": gr.make_cocycle([2], 2, None, {(1, 1): 1}),
        "semion.json": gr.make_cocycle([2], 4, {(1, 1, 1): 2}, {(1, 1): 1}),
        "semion_bad_h.json": gr.make_cocycle([2], 4, {(1, 1, 1): 2}, {(1, 1): 2}),
        "f_not_cocycle.json": gr.make_cocycle([2], 4, {(1, 1, 1): 1}, None),
    }
    expect = {"cocycle_trivial_z2.json": 0, "super.json": 0, "semion.json": 0, "semion_bad_h.json": 1,
              "f_not_cocycle.json": 1}
    for fname, data in cocycles.items():
        write(fname, io.cocycle_to_doc(data))
        run("verify-cocycle", [fname], expect[fname])
        run("pentagon", [fname], 1 if fname == "f_not_cocycle.json" else 0, "--all-simples")
        run("hexagon", [fname], expect[fname], "--all-simples")
    run("symmetric", ["super.json"], 0)
    run("symmetric", ["semion.json"], 1)
    X = gr.graded_object(gr.GradingGroup((2,)), [2, 1])
    write("objects_x21_x4.json", {"objects": [io.graded_to_doc(X)] * 4})
    write("objects_x21_x3.json", {"objects": [io.graded_to_doc(X)] * 3})
    run("pentagon", ["semion.json"], 0, "--objects", "objects_x21_x4.json")
    run("hexagon", ["semion.json"], 0, "--objects", "objects_x21_x3.json")

    write("two_cat_small.json", {"objects": {k: f"{k}.json" for k in cat.small_xmods()}})
    run("check-2cat", ["two_cat_small.json"], 0)

    write("manifest.json", {"runs": runs})
    print(f"wrote {len(list(OUT.glob('*.json')))} files, {len(runs)} runs", file=sys.stderr)


if __name__ == "__main__":
    main()

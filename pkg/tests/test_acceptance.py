"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line with the measured
quantities.  Run ``pytest tests/test_acceptance.py -v -s`` or
``python tests/test_acceptance.py`` to see them.
"""

import itertools
import json
import os
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from xmod import butterfly as bf
from xmod import catalog as cat
from xmod import crossed as cx
from xmod import graded as gr
from xmod import groups as gp
from xmod import harness as hs
from xmod.errors import InternalVerificationFailure, PeifferFails, VerificationError
from xmod.report import FAIL

ROOT = Path(__file__).resolve().parent.parent
CATALOG = ROOT / "catalog"


_capture = None


@pytest.fixture(autouse=True)
def _uncaptured(request):
    global _capture
    _capture = request.config.pluginmanager.getplugin("capturemanager")
    yield
    _capture = None


def line(n, ok, detail):
    text = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    if _capture is not None:
        with _capture.global_and_fixture_disabled():
            print(f"\n{text}", flush=True)
    else:
        print(text, flush=True)
    return ok


# 1
def test_crossed_module_axiom_suite():
    parts = {
        "trivial": cat.trivial_xmod(),
        "z2_boundary": cat.z2_boundary(),
        "inclusion_a3_s3": cat.inclusion_a3_s3(),
        "z4_identity": cat.identity_xmod(cat.cyclic(4)),
        "s3_identity": cat.identity_xmod(cat.symmetric3()),
    }
    raw = {k: (C.N, C.M, C.h, C.act) for k, C in parts.items()}
    t0 = time.perf_counter()
    verified = 0
    for data in raw.values():
        cx.make_crossed_module(*data)
        verified += 1
    witness = None
    try:
        cx.make_crossed_module(*cat.s3_trivial_action_data())
    except PeifferFails as exc:
        witness = exc.witness
    elapsed = time.perf_counter() - t0
    S3 = cat.symmetric3()
    genuine = witness is not None and S3.mul(*witness) != S3.mul(*witness[::-1])
    ok = verified == 5 and genuine and elapsed < 1.0
    assert line(1, ok, f"{verified}/5 catalog instances verify, fault Peiffer witness {witness}, {elapsed:.3f}s < 1s")


# 2
def test_derived_structure_theorems():
    xm = cat.catalog_xmods()
    normal = central = 0
    for C in xm.values():
        normal += gp.image(C.h).normal
        ker = gp.kernel(C.h).members
        central += all(C.N.mul(k, n) == C.N.mul(n, k) for k in ker for n in C.N.elements())
    maps = total = 0
    for a, b in itertools.product(xm, repeat=2):
        for F in cx.enumerate_strict_morphisms(xm[a], xm[b]):
            on1, on2 = cx.induced_maps(F)
            for h in (on1, on2):
                maps += 1
                A, B = h.src, h.dst
                total += len(h.map) == A.order and all(
                    h(A.mul(x, y)) == B.mul(h(x), h(y)) for x in A.elements() for y in A.elements())
    ok = normal == central == len(xm) and total == maps and maps > 0
    assert line(2, ok, f"im h normal {normal}/{len(xm)}, ker h central {central}/{len(xm)}, "
                       f"induced pi-maps total homs {total}/{maps}")


# 3
def test_split_butterfly_round_trip():
    xm = cat.catalog_xmods()
    t0 = time.perf_counter()
    n = good = 0
    for a, b in itertools.product(xm, repeat=2):
        for F in cx.enumerate_strict_morphisms(xm[a], xm[b]):
            n += 1
            try:
                B = bf.butterfly_from_strict(F)
                s = B.canonical_section
                if s in bf.find_sections(B) and bf.strict_from_split(B, s) == F:
                    good += 1
            except VerificationError:
                pass
    elapsed = time.perf_counter() - t0
    ok = good == n and n > 0 and elapsed < 5.0
    assert line(3, ok, f"{good}/{n} strict morphisms round-trip, {elapsed:.2f}s < 5s")


# 4
@pytest.fixture(scope="module")
def small_instance():
    return hs.build_instance(cat.small_xmods())


def test_two_category_law_suite(small_instance):
    inst = small_instance
    rep = hs.check_all(inst)
    checks = sum(c.count or 0 for c in rep.checks)
    violations = len(rep.failures())

    def corrupted(p, q):
        r = cx.compose_pnt_vertical(p, q)
        if not p.is_trivial() and not q.is_trivial():
            return cx.PNT(r.source, r.target, tuple(1 for _ in r.gamma))
        return r

    z2 = list(inst.names).index("z2_boundary")
    fault = hs.check_hom_category(inst, z2, z2, vertical=corrupted)
    detected = any(c.status == FAIL for c in fault.checks)
    ok = rep.ok and violations == 0 and not inst.skipped and detected
    assert line(4, ok, f"{len(inst.objects)} objects, {checks} law instances, {violations} violations, "
                       f"{len(inst.skipped)} skipped, fault injection detected={detected}")


# 5
def test_pnt_composition_closure():
    xm = cat.catalog_xmods()
    names = list(xm)
    ones = {(a, b): cx.enumerate_strict_morphisms(xm[a], xm[b]) for a, b in itertools.product(names, repeat=2)}
    cells = {}
    for (a, b), ms in ones.items():
        for G, F in itertools.product(ms, repeat=2):
            cells[(a, b, G, F)] = cx.enumerate_pnts(G, F)
    vertical = horizontal = failures = 0
    for (a, b, G, F), ps in cells.items():
        for E in ones[(a, b)]:
            for p, q in itertools.product(ps, cells[(a, b, F, E)]):
                vertical += 1
                try:
                    cx.compose_pnt_vertical(p, q)
                except InternalVerificationFailure:
                    failures += 1
    by_source = {}
    for (a, b, G, F), ps in cells.items():
        by_source.setdefault(a, []).extend(ps)
    for (a, b, G, F), ps in cells.items():
        if not ps:
            continue
        for q in by_source.get(b, []):
            for p in ps:
                horizontal += 1
                try:
                    cx.compose_pnt_horizontal(p, q)
                except InternalVerificationFailure:
                    failures += 1
    ok = failures == 0 and vertical > 0 and horizontal > 0
    assert line(5, ok, f"{vertical} vertical + {horizontal} horizontal composites re-verified, "
                       f"{failures} InternalVerificationFailure")


# 6
def named_tables():
    """Trivial, super and semion tables per grading group.

    Z2 carries the tables themselves; Z3 uses the bicharacters h = xy and
    h = 2xy (m = 3) in their place; Z2 x Z2 pulls super and semion back along
    the first projection.
    """
    z3 = [[(x * y) % 3 for y in range(3)] for x in range(3)]
    first = lambda g: g // 2  # noqa: E731  projection Z2 x Z2 -> Z2 on element indices
    sup4 = [[first(x) * first(y) for y in range(4)] for x in range(4)]
    sem_f = np.zeros((4, 4, 4), dtype=int)
    for x, y, z in itertools.product(range(4), repeat=3):
        sem_f[x, y, z] = 2 * first(x) * first(y) * first(z)
    return {
        (2,): (4, [("trivial", None, None), ("super", None, {(1, 1): 2}),
                   ("semion", {(1, 1, 1): 2}, {(1, 1): 1})]),
        (3,): (3, [("trivial", None, None), ("bichar", None, z3),
                   ("bichar2", None, [[2 * v % 3 for v in r] for r in z3])]),
        (2, 2): (4, [("trivial", None, None), ("super", None, [[2 * v for v in r] for r in sup4]),
                     ("semion", sem_f, sup4)]),
    }


def random_tables(factors, m, named, rng, count):
    """Random normalized tables, gauge-perturbed valid ones and single-entry corruptions."""
    G = gr.GradingGroup(factors)
    n = G.order
    out = []
    for i in range(count):
        kind = i % 3
        if kind == 0:
            f = rng.integers(0, m, (n, n, n))
            f[0, :, :] = f[:, 0, :] = f[:, :, 0] = 0
            h = rng.integers(0, m, (n, n))
            if rng.random() < 0.5:
                h[0, :] = h[:, 0] = 0
            out.append(gr.make_cocycle(factors, m, f, h))
            continue
        base = named[rng.integers(len(named))]
        k = rng.integers(0, m, (n, n))
        k[0, :] = k[:, 0] = 0
        data = gr.gauge_transform(base, k)
        if kind == 2:
            f, h = data.f.copy(), data.h.copy()
            if rng.random() < 0.5:
                x, y, z = rng.integers(1, n, 3)
                f[x, y, z] = (f[x, y, z] + rng.integers(1, m)) % m
            else:
                x, y = rng.integers(0, n, 2)
                h[x, y] = (h[x, y] + rng.integers(1, m)) % m
            data = gr.make_cocycle(factors, m, f, h)
        out.append(data)
    return out


def test_cocycle_coherence_equivalence():
    rng = np.random.default_rng(20261016)
    t0 = time.perf_counter()
    agree = total = valid = 0
    per_group = []
    for factors, (m, specs) in named_tables().items():
        named = [gr.make_cocycle(factors, m, f, h) for _, f, h in specs]
        tables = named + random_tables(factors, m, named, rng, 120)
        per_group.append(f"{'x'.join(f'Z{v}' for v in factors)}:{len(tables)}")
        for data in tables:
            status = {c.name: c.status == "pass" for c in gr.verify_cocycle(data).checks}
            pent = gr.all_simple_pentagons(data).ok
            hex1, hex2 = (r.ok for r in gr.all_simple_hexagons(data))
            total += 1
            agree += (status["3-cocycle"] == pent and status["hexagon 1"] == hex1 and status["hexagon 2"] == hex2)
            valid += all(status.values())
        for data in named:
            assert gr.verify_cocycle(data).ok
    elapsed = time.perf_counter() - t0
    ok = agree == total and 0 < valid < total and elapsed < 30.0
    assert line(6, ok, f"agreement {agree}/{total} ({', '.join(per_group)}), {valid} valid tables, "
                       f"{elapsed:.2f}s < 30s")


# 7
def test_named_example_values():
    sup = gr.make_cocycle([2], 2, None, {(1, 1): 1})
    sem = gr.make_cocycle([2], 4, {(1, 1, 1): 2}, {(1, 1): 1})
    S = gr.simples(gr.GradingGroup((2,)))
    sup_sym = all(gr.double_braiding(sup, X, Y).is_identity() for X in S for Y in S)
    sem_ok = gr.verify_cocycle(sem).ok and all(gr.all_simple_hexagons(sem))
    d1 = S[1]
    phase = gr.double_braiding(sem, d1, d1).entry(0, 0)
    others = all(gr.double_braiding(sem, X, Y).is_identity() for X in S for Y in S if (X, Y) != (d1, d1))
    ok = (sup_sym and gr.is_symmetric(sup) and sem_ok and not gr.is_symmetric(sem)
          and phase == 2 and sem.modulus == 4 and others)
    assert line(7, ok, f"super symmetric={gr.is_symmetric(sup)}, semion braided={sem_ok} "
                       f"symmetric={gr.is_symmetric(sem)}, double braiding on d1(x)d1 = exp(2 pi i {phase}/4)")


# 8
DRIVER = r"""
import contextlib, io, json, sys
from xmod import cli
runs = json.load(open("manifest.json"))["runs"]
out = []
for r in runs:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        cli.main([r["command"], *r["inputs"], *r["flags"]])
    out.append(buf.getvalue())
    if r["command"] == "check-2cat":
        continue
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        cli.main([r["command"], *r["inputs"], *r["flags"], "--pretty"])
    out.append(buf.getvalue())
json.dump(out, sys.stdout)
"""


def test_cli_determinism():
    outs = []
    for seed in ("0", "4242"):
        env = {**os.environ, "PYTHONHASHSEED": seed}
        proc = subprocess.run([sys.executable, "-c", DRIVER], cwd=CATALOG, env=env,
                              capture_output=True, text=True, check=True)
        outs.append(json.loads(proc.stdout))
    runs = len(json.loads((CATALOG / "manifest.json").read_text())["runs"])
    same = sum(a == b for a, b in zip(*outs))
    ok = len(outs[0]) == 2 * runs - 1 and same == len(outs[0])
    assert line(8, ok, f"{same}/{len(outs[0])} reports byte-identical across two processes "
                       f"({runs} manifest runs, compact and pretty)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))

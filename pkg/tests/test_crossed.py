import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from xmod import catalog as cat
from xmod import crossed as cx
from xmod import groups as gp
from xmod.errors import (
    ConditionTwoFails,
    ParallelMismatch,
    PeifferFails,
    SquareFails,
    SourceTargetMismatch,
    VerificationError,
)

XM = cat.catalog_xmods()
SMALL = cat.small_xmods()


def brute_pnts(G, F):
    """Filter all |N2|^|M1| maps through the full PNT verifier."""
    M1, N2 = G.src.M, G.dst.N
    out = []
    for gamma in itertools.product(range(N2.order), repeat=M1.order):
        try:
            out.append(cx.verify_pnt(G, F, gamma))
        except VerificationError:
            pass
    return sorted(out, key=lambda p: p.gamma)


def brute_strict(C1, C2):
    out = []
    for f1 in gp.enumerate_homs(C1.M, C2.M):
        for f2 in gp.enumerate_homs(C1.N, C2.N):
            try:
                out.append(cx.verify_strict_morphism(C1, C2, f1, f2))
            except VerificationError:
                pass
    return out


@pytest.mark.parametrize("name", list(XM))
def test_catalog_axioms_by_enumeration(name):
    C = XM[name]
    N, M, h, act = C.N, C.M, C.h, C.act
    for m, n in itertools.product(M.elements(), N.elements()):
        assert h(act(m, n)) == M.conj(m, h(n))
    for n, n2 in itertools.product(N.elements(), N.elements()):
        assert act(h(n), n2) == N.conj(n, n2)


def test_fault_gives_peiffer_witness():
    with pytest.raises(PeifferFails) as exc:
        cx.make_crossed_module(*cat.s3_trivial_action_data())
    S3 = cat.symmetric3()
    n, n2 = exc.value.witness
    assert S3.mul(n, n2) != S3.mul(n2, n)


@pytest.mark.parametrize("name,pi1,pi2", [
    ("trivial", 1, 1), ("z2_boundary", 2, 2), ("point_z2", 2, 1), ("z2_identity", 1, 1),
    ("z2_in_z4", 2, 1), ("z4_identity", 1, 1), ("inclusion_a3_s3", 2, 1), ("s3_identity", 1, 1),
])
def test_homotopy_groups(name, pi1, pi2):
    C = XM[name]
    assert (cx.pi1(C).order, cx.pi2(C).order) == (pi1, pi2)
    assert cx.pi2(C).is_abelian()
    # coset count as an independent oracle for pi1
    im = set(C.h.map)
    cosets = {frozenset(C.M.mul(m, x) for x in im) for m in C.M.elements()}
    assert len(cosets) == pi1


def test_strict_morphism_examples():
    assert cat.inclusion_into_identity().f2.map == XM["inclusion_a3_s3"].h.map
    S = XM["s3_identity"]
    with pytest.raises(SquareFails):
        cx.verify_strict_morphism(S, S, gp.identity_hom(S.M), gp.trivial_hom(S.N, S.N))


def test_compose_strict():
    F = cat.inclusion_into_identity()
    assert cx.compose_strict(F, cx.identity_morphism(F.src)) == F
    assert cx.compose_strict(cx.identity_morphism(F.dst), F) == F
    with pytest.raises(SourceTargetMismatch):
        cx.compose_strict(F, F)
    Z = XM["z4_identity"]
    ends = cx.enumerate_strict_morphisms(Z, Z)
    assert len(ends) == 4
    for G, H in itertools.product(ends, repeat=2):
        K = cx.compose_strict(G, H)
        assert K.f1.map == tuple(G.f1(H.f1(x)) for x in range(4))
        assert K.f2.map == tuple(G.f2(H.f2(x)) for x in range(4))


@pytest.mark.parametrize("a,b", [("inclusion_a3_s3", "s3_identity"), ("z2_boundary", "z2_boundary"),
                                 ("z2_in_z4", "z4_identity"), ("inclusion_a3_s3", "point_z2"),
                                 ("point_z2", "z2_in_z4"), ("z4_identity", "z2_in_z4")])
def test_enumerate_strict_matches_brute_force(a, b):
    got = cx.enumerate_strict_morphisms(XM[a], XM[b])
    want = brute_strict(XM[a], XM[b])
    assert sorted((F.f1.map, F.f2.map) for F in got) == sorted((F.f1.map, F.f2.map) for F in want)


def test_equivalence_examples():
    assert cx.is_equivalence(cx.identity_morphism(XM["s3_identity"]))
    rep = cx.is_equivalence(cat.collapse_morphism())
    assert rep.ok and rep.pi1_bijective and rep.pi2_bijective
    z2, one = XM["z2_boundary"], XM["trivial"]
    F = cx.verify_strict_morphism(z2, one, gp.trivial_hom(z2.M, one.M), gp.trivial_hom(z2.N, one.N))
    rep = cx.is_equivalence(F)
    assert not rep.ok and not rep.pi2_bijective
    assert not cx.is_equivalence(cat.inclusion_into_identity())


def test_pnt_examples():
    z2 = XM["z2_boundary"]
    idm = cx.identity_morphism(z2)
    p = cx.verify_pnt(idm, idm, [0, 1])
    assert not p.is_trivial()
    kill = cx.verify_strict_morphism(z2, z2, gp.identity_hom(z2.M), gp.trivial_hom(z2.N, z2.N))
    with pytest.raises(ConditionTwoFails):
        cx.verify_pnt(idm, kill, [0, 0])
    with pytest.raises(ParallelMismatch):
        cx.verify_pnt(idm, cx.identity_morphism(XM["z2_identity"]), [0, 0])
    for name in ("z2_boundary", "inclusion_a3_s3", "s3_identity"):
        F = cx.identity_morphism(XM[name])
        assert cx.identity_pnt(F).is_trivial()


def test_pnt_compositions_examples():
    z2 = XM["z2_boundary"]
    idm = cx.identity_morphism(z2)
    p = cx.verify_pnt(idm, idm, [0, 1])
    assert cx.compose_pnt_vertical(p, p).is_trivial()
    assert cx.invert_pnt(p) == p
    assert cx.compose_pnt_horizontal(p, cx.identity_pnt(idm)) == p
    assert cx.compose_pnt_horizontal(cx.identity_pnt(idm), p) == p


def test_enumerate_pnts_counts():
    z2 = cx.identity_morphism(XM["z2_boundary"])
    assert [p.gamma for p in cx.enumerate_pnts(z2, z2)] == [(0, 0), (0, 1)]
    a3 = cx.identity_morphism(XM["inclusion_a3_s3"])
    assert len(cx.enumerate_pnts(a3, a3)) == 1
    with pytest.raises(ParallelMismatch):
        cx.enumerate_pnts(z2, a3)


PAIRS = [(a, b) for a, b in itertools.product(SMALL, repeat=2)]


@pytest.mark.parametrize("a,b", PAIRS)
def test_enumerate_pnts_matches_brute_force(a, b):
    ms = cx.enumerate_strict_morphisms(SMALL[a], SMALL[b])
    for G, F in itertools.product(ms, repeat=2):
        assert cx.enumerate_pnts(G, F) == brute_pnts(G, F)


def _random_pnt(data):
    a, b = data.draw(st.sampled_from(PAIRS))
    ms = cx.enumerate_strict_morphisms(SMALL[a], SMALL[b])
    G, F = data.draw(st.sampled_from(ms)), data.draw(st.sampled_from(ms))
    ps = cx.enumerate_pnts(G, F)
    return G, F, ps


@given(st.data())
def test_pnt_inverse_property(data):
    G, F, ps = _random_pnt(data)
    if not ps:
        return
    p = data.draw(st.sampled_from(ps))
    q = cx.invert_pnt(p)
    assert cx.invert_pnt(q) == p
    assert cx.compose_pnt_vertical(p, q) == cx.identity_pnt(G)
    assert cx.compose_pnt_vertical(q, p) == cx.identity_pnt(F)


@given(st.data())
def test_pnt_unit_property(data):
    G, F, ps = _random_pnt(data)
    for p in ps:
        assert cx.compose_pnt_vertical(cx.identity_pnt(G), p) == p
        assert cx.compose_pnt_vertical(p, cx.identity_pnt(F)) == p

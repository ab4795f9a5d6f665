"""Named small groups and crossed modules used by tests, scripts and the
shipped JSON examples."""

from __future__ import annotations

import itertools

from . import groups as gp
from .crossed import CrossedModule, StrictMorphism, identity_morphism, make_crossed_module, verify_strict_morphism
from .groups import FiniteGroup


def cyclic(n: int) -> FiniteGroup:
    return gp.make_group([[(a + b) % n for b in range(n)] for a in range(n)], name=f"Z{n}")


def trivial_group() -> FiniteGroup:
    return gp.make_group([[0]], name="1")


def klein() -> FiniteGroup:
    return gp.make_group([[a ^ b for b in range(4)] for a in range(4)], name="V4")


def from_permutations(perms: list[tuple[int, ...]], name: str = "") -> FiniteGroup:
    """Cayley table of a list of permutations closed under composition.

    ``perms[0]`` must be the identity; p*q means apply q first.
    """
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms]
    return gp.make_group(table, name=name)


S3_PERMS = sorted(itertools.permutations(range(3)))


def symmetric3() -> FiniteGroup:
    """S3 on the lexicographically sorted permutations of (0, 1, 2).

    Index 0 is the identity, 1, 2, 5 are transpositions, 3, 4 are 3-cycles.
    """
    return from_permutations(S3_PERMS, name="S3")


def sign_hom(S3: FiniteGroup, Z2: FiniteGroup) -> gp.GroupHom:
    signs = []
    for p in S3_PERMS:
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        signs.append(inv % 2)
    return gp.make_hom(S3, Z2, signs)


def a3_in_s3() -> tuple[FiniteGroup, gp.GroupHom]:
    S3 = symmetric3()
    K = gp.kernel(sign_hom(S3, cyclic(2)))
    A3 = gp.make_group(K.as_group()[0].table, name="A3")
    return A3, gp.GroupHom(A3, S3, K.members)


# crossed modules
def identity_xmod(G: FiniteGroup) -> CrossedModule:
    return make_crossed_module(G, G, gp.identity_hom(G), gp.conjugation_action(G))


def normal_subgroup_xmod(inc: gp.GroupHom) -> CrossedModule:
    N, M = inc.src, inc.dst
    act = gp.make_action(M, N, [[inc.map.index(M.conj(m, inc(n))) for n in N.elements()] for m in M.elements()])
    return make_crossed_module(N, M, inc, act)


def trivial_boundary_xmod(N: FiniteGroup, M: FiniteGroup) -> CrossedModule:
    """[N -0-> M] with trivial action; needs N abelian."""
    return make_crossed_module(N, M, gp.trivial_hom(N, M), gp.trivial_action(M, N))


def trivial_xmod() -> CrossedModule:
    one = trivial_group()
    return trivial_boundary_xmod(one, one)


def z2_boundary() -> CrossedModule:
    """[Z2 -trivial-> Z2] with trivial action."""
    return trivial_boundary_xmod(cyclic(2), cyclic(2))


def inclusion_a3_s3() -> CrossedModule:
    return normal_subgroup_xmod(a3_in_s3()[1])


def point_z2() -> CrossedModule:
    """[1 -> Z2]."""
    return trivial_boundary_xmod(trivial_group(), cyclic(2))


def z2_in_z4() -> CrossedModule:
    """[Z2 -> Z4], 1 -> 2, trivial action."""
    Z2, Z4 = cyclic(2), cyclic(4)
    return make_crossed_module(Z2, Z4, gp.make_hom(Z2, Z4, [0, 2]), gp.trivial_action(Z4, Z2))


def s3_trivial_action_data():
    """[S3 -id-> S3] with trivial action: fails the Peiffer identity."""
    S3 = symmetric3()
    return S3, S3, gp.identity_hom(S3), gp.trivial_action(S3, S3)


def catalog_xmods() -> dict[str, CrossedModule]:
    return {
        "trivial": trivial_xmod(),
        "z2_boundary": z2_boundary(),
        "point_z2": point_z2(),
        "z2_identity": identity_xmod(cyclic(2)),
        "z2_in_z4": z2_in_z4(),
        "z4_identity": identity_xmod(cyclic(4)),
        "inclusion_a3_s3": inclusion_a3_s3(),
        "s3_identity": identity_xmod(symmetric3()),
    }


def small_xmods() -> dict[str, CrossedModule]:
    """Catalog objects with |M|, |N| <= 4 (exhaustive 2-cell enumeration)."""
    return {k: v for k, v in catalog_xmods().items() if v.M.order <= 4 and v.N.order <= 4}


def collapse_morphism() -> StrictMorphism:
    """[A3 -> S3] -> [1 -> Z2] with f1 = sign, f2 trivial."""
    C1, C2 = inclusion_a3_s3(), point_z2()
    return verify_strict_morphism(C1, C2, sign_hom(C1.M, C2.M), gp.trivial_hom(C1.N, C2.N))


def inclusion_into_identity() -> StrictMorphism:
    """[A3 -> S3] -> [S3 -id-> S3] with f1 = id and f2 the inclusion."""
    C1 = inclusion_a3_s3()
    C2 = identity_xmod(C1.M)
    return verify_strict_morphism(C1, C2, gp.identity_hom(C1.M), C1.h)


"""Crossed modules, strict morphisms and pointed natural transformations.

A crossed module [N -h-> M] is stored with the action of M on N.  Strict
morphisms are pairs (f1: M1 -> M2, f2: N1 -> N2).  A pointed natural
transformation G => F between parallel strict morphisms is a map
gamma: M1 -> N2 with

    gamma(a a') = (f1(a') . gamma(a)) gamma(a')
    g1(a) = f1(a) h2(gamma(a^-1))
    g2(b) = f2(b) gamma(h1(b^-1))

All of these are checked exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import groups as gp
from .errors import (
    BudgetExceeded,
    ChainMismatch,
    CocycleFails,
    ConditionOneFails,
    ConditionTwoFails,
    EquivarianceFails,
    InternalVerificationFailure,
    MismatchedGroups,
    ParallelMismatch,
    PeifferFails,
    SourceTargetMismatch,
    SquareFails,
    VerificationError,
)
from .groups import DEFAULT_BUDGET, FiniteGroup, GroupAction, GroupHom


@dataclass(frozen=True)
class CrossedModule:
    N: FiniteGroup
    M: FiniteGroup
    h: GroupHom
    act: GroupAction

    def __repr__(self) -> str:
        return f"[{self.N!r} -> {self.M!r}]"


def make_crossed_module(N: FiniteGroup, M: FiniteGroup, h: GroupHom, act: GroupAction) -> CrossedModule:
    if h.src != N or h.dst != M:
        raise MismatchedGroups(message="boundary must map N to M")
    if act.actor != M or act.acted != N:
        raise MismatchedGroups(message="action must be of M on N")
    A, H = act.array, h.array
    # Peiffer first: the identity-boundary fault instance breaks both axioms
    # h(n).n' == n n' n^-1
    lhs = A[H]
    ninv = np.array(N.inverse)
    rhs = N.array[N.array, ninv[:, None]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        n, n2 = (int(v) for v in bad[0])
        raise PeifferFails(witness=(n, n2), message=f"h({n}).{n2} != {n} {n2} {n}^-1")
    # h(m.n) == m h(n) m^-1
    lhs = H[A]
    inv = np.array(M.inverse)
    rhs = M.array[M.array[:, H], inv[:, None]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        m, n = (int(v) for v in bad[0])
        raise EquivarianceFails(witness=(m, n), message=f"h({m}.{n}) != {m} h({n}) {m}^-1")
    return CrossedModule(N, M, h, act)


def pi1(C: CrossedModule) -> FiniteGroup:
    """Cokernel M / h(N)."""
    return gp.quotient(C.M, gp.image(C.h))[0]


def pi2(C: CrossedModule) -> FiniteGroup:
    """Kernel of the boundary."""
    return gp.kernel(C.h).as_group()[0]


@dataclass(frozen=True)
class StrictMorphism:
    src: CrossedModule
    dst: CrossedModule
    f1: GroupHom
    f2: GroupHom

    def __repr__(self) -> str:
        return f"StrictMorphism(f1={list(self.f1.map)}, f2={list(self.f2.map)})"


def _strict_failure(C1: CrossedModule, C2: CrossedModule, f1: GroupHom, f2: GroupHom):
    for n in C1.N.elements():
        if C2.h(f2(n)) != f1(C1.h(n)):
            return SquareFails(witness=(n,), message=f"h2(f2({n})) != f1(h1({n}))")
    for m in C1.M.elements():
        for n in C1.N.elements():
            if f2(C1.act(m, n)) != C2.act(f1(m), f2(n)):
                return EquivarianceFails(witness=(m, n), message=f"f2({m}.{n}) != f1({m}).f2({n})")
    return None


def verify_strict_morphism(C1: CrossedModule, C2: CrossedModule, f1: GroupHom, f2: GroupHom) -> StrictMorphism:
    if f1.src != C1.M or f1.dst != C2.M or f2.src != C1.N or f2.dst != C2.N:
        raise MismatchedGroups(message="f1 must map M1 -> M2 and f2 must map N1 -> N2")
    err = _strict_failure(C1, C2, f1, f2)
    if err is not None:
        raise err
    return StrictMorphism(C1, C2, f1, f2)


def identity_morphism(C: CrossedModule) -> StrictMorphism:
    return StrictMorphism(C, C, gp.identity_hom(C.M), gp.identity_hom(C.N))


def compose_strict(G: StrictMorphism, F: StrictMorphism) -> StrictMorphism:
    """G after F, componentwise."""
    if F.dst != G.src:
        raise SourceTargetMismatch(message="target of F is not the source of G")
    return verify_strict_morphism(F.src, G.dst, gp.compose(G.f1, F.f1), gp.compose(G.f2, F.f2))


def enumerate_strict_morphisms(C1: CrossedModule, C2: CrossedModule, budget: int = DEFAULT_BUDGET) -> list[StrictMorphism]:
    """All strict morphisms C1 -> C2, ordered by (f1, f2) maps."""
    out = []
    for f1 in gp.enumerate_homs(C1.M, C2.M, budget):
        for f2 in gp.enumerate_homs(C1.N, C2.N, budget):
            if _strict_failure(C1, C2, f1, f2) is None:
                out.append(StrictMorphism(C1, C2, f1, f2))
    return out


class EquivalenceReport(NamedTuple):
    ok: bool
    pi1_map: tuple[int, ...]
    pi2_map: tuple[int, ...]
    pi1_bijective: bool
    pi2_bijective: bool

    def __bool__(self) -> bool:
        return self.ok


def induced_maps(F: StrictMorphism) -> tuple[GroupHom, GroupHom]:
    """Homomorphisms pi1(C1) -> pi1(C2) and pi2(C1) -> pi2(C2) induced by F."""
    C1, C2 = F.src, F.dst
    Q1, p1 = gp.quotient(C1.M, gp.image(C1.h))
    Q2, p2 = gp.quotient(C2.M, gp.image(C2.h))
    reps = [p1.map.index(q) for q in Q1.elements()]
    on_pi1 = gp.make_hom(Q1, Q2, [p2(F.f1(r)) for r in reps])

    K1, K2 = gp.kernel(C1.h), gp.kernel(C2.h)
    P1, _ = K1.as_group()
    P2, _ = K2.as_group()
    pos2 = {x: i for i, x in enumerate(K2.members)}
    on_pi2 = gp.make_hom(P1, P2, [pos2[F.f2(x)] for x in K1.members])
    return on_pi1, on_pi2


def is_equivalence(F: StrictMorphism) -> EquivalenceReport:
    on_pi1, on_pi2 = induced_maps(F)
    b1 = on_pi1.is_injective() and on_pi1.is_surjective()
    b2 = on_pi2.is_injective() and on_pi2.is_surjective()
    return EquivalenceReport(b1 and b2, on_pi1.map, on_pi2.map, b1, b2)


@dataclass(frozen=True)
class PointedNaturalTransformation:
    source: StrictMorphism  # G
    target: StrictMorphism  # F
    gamma: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.gamma[a]

    def is_trivial(self) -> bool:
        return not any(self.gamma)

    def __repr__(self) -> str:
        return f"PNT(gamma={list(self.gamma)})"


PNT = PointedNaturalTransformation


def _pnt_failure(G: StrictMorphism, F: StrictMorphism, gamma: Sequence[int]):
    C1, C2 = F.src, F.dst
    M1, N2 = C1.M, C2.N
    for a in M1.elements():
        for a2 in M1.elements():
            lhs = gamma[M1.mul(a, a2)]
            rhs = N2.mul(C2.act(F.f1(a2), gamma[a]), gamma[a2])
            if lhs != rhs:
                return CocycleFails(witness=(a, a2))
    for a in M1.elements():
        if G.f1(a) != C2.M.mul(F.f1(a), C2.h(gamma[M1.inv(a)])):
            return ConditionOneFails(witness=(a,))
    for b in C1.N.elements():
        if G.f2(b) != N2.mul(F.f2(b), gamma[C1.h(C1.N.inv(b))]):
            return ConditionTwoFails(witness=(b,))
    return None


def _check_parallel(G: StrictMorphism, F: StrictMorphism) -> None:
    if G.src != F.src or G.dst != F.dst:
        raise ParallelMismatch(message="2-cells need morphisms with the same source and target")


def verify_pnt(G: StrictMorphism, F: StrictMorphism, gamma: Sequence[int]) -> PNT:
    """Check gamma is a pointed natural transformation G => F."""
    _check_parallel(G, F)
    gamma = tuple(int(x) for x in gamma)
    if len(gamma) != F.src.M.order or any(x < 0 or x >= F.dst.N.order for x in gamma):
        raise ValueError("gamma must map M1 into N2")
    err = _pnt_failure(G, F, gamma)
    if err is not None:
        raise err
    return PNT(G, F, gamma)


def _reverify(G, F, gamma, what: str) -> PNT:
    try:
        return verify_pnt(G, F, gamma)
    except VerificationError as exc:
        raise InternalVerificationFailure(
            message=f"{what} failed re-verification: {exc}", witness=exc.witness, cause=type(exc).__name__
        ) from exc


def identity_pnt(F: StrictMorphism) -> PNT:
    return PNT(F, F, (0,) * F.src.M.order)


def compose_pnt_vertical(p1: PNT, p2: PNT) -> PNT:
    """p1: G => F then p2: F => E gives G => E with gamma = gamma2 . gamma1 pointwise."""
    if p1.target != p2.source:
        raise ChainMismatch(message="target of the first 2-cell is not the source of the second")
    N2 = p1.target.dst.N
    gamma = tuple(N2.mul(x2, x1) for x1, x2 in zip(p1.gamma, p2.gamma))
    return _reverify(p1.source, p2.target, gamma, "vertical composite")


def compose_pnt_horizontal(p1: PNT, p2: PNT) -> PNT:
    """p1: G => F over C1 -> C2 and p2: E => K over C2 -> C3 give E∘G => K∘F
    with gamma3(a) = k2(gamma1(a)) . gamma2(g1(a))."""
    G, F = p1.source, p1.target
    E, K = p2.source, p2.target
    if F.dst != K.src:
        raise ChainMismatch(message="2-cells do not share the middle crossed module")
    N3 = K.dst.N
    gamma = tuple(N3.mul(K.f2(p1.gamma[a]), p2.gamma[G.f1(a)]) for a in F.src.M.elements())
    try:
        EG, KF = compose_strict(E, G), compose_strict(K, F)
    except VerificationError as exc:
        raise InternalVerificationFailure(message=f"composite 1-cell invalid: {exc}") from exc
    return _reverify(EG, KF, gamma, "horizontal composite")


def invert_pnt(p: PNT) -> PNT:
    """G => F becomes F => G with pointwise inverse gamma."""
    N2 = p.target.dst.N
    return _reverify(p.target, p.source, tuple(N2.inv(x) for x in p.gamma), "inverse")


def pnt_search_space(G: StrictMorphism, F: StrictMorphism) -> int:
    return F.dst.N.order ** len(F.src.M.generators)


def enumerate_pnts(G: StrictMorphism, F: StrictMorphism, budget: int = DEFAULT_BUDGET) -> list[PNT]:
    """All pointed natural transformations G => F in lexicographic gamma order.

    gamma is fixed by its values on generators of M1 through
    gamma(a s) = (f1(s).gamma(a)) gamma(s); each propagated candidate is then
    verified in full.
    """
    _check_parallel(G, F)
    C1, C2 = F.src, F.dst
    M1, N2 = C1.M, C2.N
    gens = M1.generators
    needed = N2.order ** len(gens)
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    out = []
    for vals in itertools.product(N2.elements(), repeat=len(gens)):
        gamma = _propagate(F, M1, N2, C2.act, gens, vals)
        if gamma is not None and _pnt_failure(G, F, gamma) is None:
            out.append(PNT(G, F, gamma))
    out.sort(key=lambda p: p.gamma)
    return out


def _propagate(F, M1, N2, act2, gens, vals):
    gamma = [-1] * M1.order
    gamma[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for s, gs in zip(gens, vals):
                y = M1.mul(a, s)
                v = N2.mul(act2(F.f1(s), gamma[a]), gs)
                if gamma[y] < 0:
                    gamma[y] = v
                    nxt.append(y)
                elif gamma[y] != v:
                    return None
        frontier = nxt
    return tuple(gamma)

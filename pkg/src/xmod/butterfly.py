"""Butterflies between crossed modules.

A butterfly C1 -> C2 is a group E with homomorphisms

    f: N1 -> E,  k: N2 -> E,  g: E -> M1,  t: E -> M2

such that g f = h1, t k = h2, both diagonals (f, t) and (k, g) are
complexes, (k, g) is short exact, and E acts compatibly through t and g:
k(t(x).n2) = x k(n2) x^-1 and f(g(x).n1) = x f(n1) x^-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import groups as gp
from .crossed import CrossedModule, StrictMorphism, verify_strict_morphism
from .errors import (
    ComplexFails,
    ConjugationFails,
    DiagramFails,
    MismatchedGroups,
    NoSolution,
    NotASection,
    NotExtension,
    NotReversible,
    NotUnique,
)
from .groups import DEFAULT_BUDGET, Check, FiniteGroup, GroupHom


@dataclass(frozen=True)
class Butterfly:
    src: CrossedModule
    dst: CrossedModule
    E: FiniteGroup
    t: GroupHom
    g: GroupHom
    k: GroupHom
    f: GroupHom
    # m -> (1, m) for butterflies built from a strict morphism
    canonical_section: GroupHom | None = field(default=None, compare=False)


def verify_butterfly(
    C1: CrossedModule,
    C2: CrossedModule,
    E: FiniteGroup,
    t: GroupHom,
    g: GroupHom,
    k: GroupHom,
    f: GroupHom,
    canonical_section: GroupHom | None = None,
) -> Butterfly:
    shapes = {
        "t": (t, E, C2.M),
        "g": (g, E, C1.M),
        "k": (k, C2.N, E),
        "f": (f, C1.N, E),
    }
    for name, (hom, s, d) in shapes.items():
        if hom.src != s or hom.dst != d:
            raise MismatchedGroups(message=f"{name} has the wrong source or target", leg=name)

    for n in C1.N.elements():
        if g(f(n)) != C1.h(n):
            raise DiagramFails(witness=(n,), leg="g.f = h1", message=f"g(f({n})) != h1({n})")
    for n in C2.N.elements():
        if t(k(n)) != C2.h(n):
            raise DiagramFails(witness=(n,), leg="t.k = h2", message=f"t(k({n})) != h2({n})")

    for n in C1.N.elements():
        if t(f(n)) != 0:
            raise ComplexFails(witness=(n,), diagonal="NW-SE", message=f"t(f({n})) is not the identity")
    for n in C2.N.elements():
        if g(k(n)) != 0:
            raise ComplexFails(witness=(n,), diagonal="NE-SW", message=f"g(k({n})) is not the identity")

    ext = gp.is_extension(k, g)
    if not ext:
        raise NotExtension(witness=ext.witness, message=f"NE-SW diagonal: {ext.reason}")

    for x in E.elements():
        for n in C2.N.elements():
            if k(C2.act(t(x), n)) != E.conj(x, k(n)):
                raise ConjugationFails(witness=(x, n), condition="k", message=f"k(t({x}).{n}) != {x} k({n}) {x}^-1")
        for n in C1.N.elements():
            if f(C1.act(g(x), n)) != E.conj(x, f(n)):
                raise ConjugationFails(witness=(x, n), condition="f", message=f"f(g({x}).{n}) != {x} f({n}) {x}^-1")
    return Butterfly(C1, C2, E, t, g, k, f, canonical_section)


def is_reversible(B: Butterfly) -> Check:
    """Is the NW-SE diagonal N1 -> E -> M2 also short exact?"""
    return gp.is_extension(B.f, B.t)


def find_sections(B: Butterfly, budget: int = DEFAULT_BUDGET) -> list[GroupHom]:
    """All homomorphisms s: M1 -> E with g s = id."""
    fibres: dict[int, list[int]] = {}
    for x in B.E.elements():
        fibres.setdefault(B.g(x), []).append(x)
    homs = gp.enumerate_homs(B.src.M, B.E, budget, candidates=lambda m: fibres.get(m, []))
    return [s for s in homs if all(B.g(s(m)) == m for m in B.src.M.elements())]


def butterfly_from_strict(F: StrictMorphism) -> Butterfly:
    """The split butterfly of a strict morphism, on E = N2 ⋊ M1.

    M1 acts on N2 through f1; k(n) = (n, 1), f(n) = (f2(n^-1), h1(n)),
    g is the projection and t(n, m) = h2(n) f1(m).
    """
    C1, C2 = F.src, F.dst
    N2, M1 = C2.N, C1.M
    act = gp.pullback_action(C2.act, F.f1)
    E, k, g = gp.semidirect_product(N2, M1, act)
    nm = M1.order
    f = GroupHom(C1.N, E, tuple(F.f2(C1.N.inv(n)) * nm + C1.h(n) for n in C1.N.elements()))
    t = GroupHom(E, C2.M, tuple(C2.M.mul(C2.h(x // nm), F.f1(x % nm)) for x in E.elements()))
    s = GroupHom(M1, E, tuple(M1.elements()))  # (0, m) has index m
    for hom in (f, t, s):
        gp.make_hom(hom.src, hom.dst, hom.map)
    return verify_butterfly(C1, C2, E, t, g, k, f, canonical_section=s)


def strict_from_split(B: Butterfly, s: GroupHom) -> StrictMorphism:
    """Recover (f1, f2) from a section s: f1 = t s and s(h1(n)) = f(n) k(f2(n))."""
    C1, C2, E = B.src, B.dst, B.E
    if s.src != C1.M or s.dst != E:
        raise MismatchedGroups(message="section must map M1 -> E")
    for m in C1.M.elements():
        if B.g(s(m)) != m:
            raise NotASection(witness=(m,), message=f"g(s({m})) != {m}")
    s = gp.make_hom(C1.M, E, s.map)
    f1 = gp.compose(B.t, s)
    preimage: dict[int, list[int]] = {}
    for n2 in C2.N.elements():
        preimage.setdefault(B.k(n2), []).append(n2)
    f2 = []
    for n in C1.N.elements():
        target = E.mul(E.inv(B.f(n)), s(C1.h(n)))
        sols = preimage.get(target, [])
        if not sols:
            raise NoSolution(witness=(n,), message=f"f({n})^-1 s(h1({n})) is not in the image of k")
        if len(sols) > 1:
            raise NotUnique(witness=(n, *sols))
        f2.append(sols[0])
    f2 = gp.make_hom(C1.N, C2.N, f2)
    return verify_strict_morphism(C1, C2, f1, f2)


def invert_butterfly(B: Butterfly) -> Butterfly:
    """Swap the wings: C2 -> C1 on the same E with (t, g, k, f) := (g, t, f, k)."""
    rev = is_reversible(B)
    if not rev:
        raise NotReversible(witness=rev.witness, message=f"NW-SE diagonal: {rev.reason}")
    return verify_butterfly(B.dst, B.src, B.E, t=B.g, g=B.t, k=B.f, f=B.k)

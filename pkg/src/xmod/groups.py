"""Finite groups as Cayley tables.

Elements are the integers ``0 .. order-1`` and the identity is always 0.
Homomorphisms and actions are plain index tuples.  Everything here is
immutable and checked exhaustively at construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    IdentityActsNontrivially,
    MismatchedGroups,
    NoIdentityAtZero,
    NotAction,
    NotAssociative,
    NotAutomorphism,
    NotHomomorphism,
    NotLatinSquare,
    NotNormal,
)

DEFAULT_BUDGET = 10**6


class Check(NamedTuple):
    """Boolean outcome with the first failing witness (``None`` on success)."""

    ok: bool
    reason: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64).reshape(self.order, self.order)

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        return tuple(int(np.flatnonzero(row == 0)[0]) for row in self.array)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def prod(self, *xs: int) -> int:
        out = 0
        for x in xs:
            out = self.table[out][x]
        return out

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.table[self.table[g][x]][self.inverse[g]]

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        return bool((self.array == self.array.T).all())

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.table[x][a]
            n += 1
        return n

    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``gens`` (closure under right multiplication)."""
        gens = list(gens)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.table[x][s]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Greedy generating set: scan elements in index order, keep those
        that enlarge the generated subgroup."""
        gens: list[int] = []
        current = frozenset({0})
        for a in range(self.order):
            if a not in current:
                gens.append(a)
                current = self.generated(gens)
            if len(current) == self.order:
                break
        return tuple(gens)

    def __repr__(self) -> str:
        label = self.name or "FiniteGroup"
        return f"<{label} order={self.order}>"


def make_group(table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Validate a Cayley table and return the group.

    Raises ``NoIdentityAtZero``, ``NotLatinSquare`` or ``NotAssociative``
    with a witness; ``ValueError`` if the table is not square or has
    entries out of range.
    """
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("Cayley table must be a non-empty square")
    T = np.array(rows, dtype=np.int64)
    if T.min() < 0 or T.max() >= n:
        raise ValueError("Cayley table entries out of range")

    idx = np.arange(n)
    bad = np.flatnonzero((T[0] != idx) | (T[:, 0] != idx))
    if bad.size:
        a = int(bad[0])
        raise NoIdentityAtZero(witness=(a,), message=f"0*{a} or {a}*0 is not {a}")

    expected = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(T[i]), expected):
            j = _first_repeat(T[i])
            raise NotLatinSquare(witness=("row", i, j), message=f"row {i} repeats an entry at column {j}")
        if not np.array_equal(np.sort(T[:, i]), expected):
            j = _first_repeat(T[:, i])
            raise NotLatinSquare(witness=("column", i, j), message=f"column {i} repeats an entry at row {j}")

    lhs = T[T]  # [a,b,c] -> (ab)c
    rhs = T[:, T]  # [a,b,c] -> a(bc)
    bad3 = np.argwhere(lhs != rhs)
    if bad3.size:
        a, b, c = (int(v) for v in bad3[0])
        raise NotAssociative(witness=(a, b, c), message=f"({a}*{b})*{c} != {a}*({b}*{c})")

    return FiniteGroup(tuple(tuple(int(v) for v in r) for r in rows), name=name)


def _first_repeat(vec: np.ndarray) -> int:
    seen = set()
    for j, v in enumerate(vec):
        if v in seen:
            return j
        seen.add(int(v))
    return 0


@dataclass(frozen=True)
class GroupHom:
    src: FiniteGroup
    dst: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.map, dtype=np.int64)

    def is_trivial(self) -> bool:
        return not any(self.map)

    def is_injective(self) -> bool:
        return len(set(self.map)) == self.src.order

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.dst.order

    def __repr__(self) -> str:
        return f"GroupHom({self.src!r} -> {self.dst!r}, {list(self.map)})"


def _hom_failure(src: FiniteGroup, dst: FiniteGroup, m: np.ndarray):
    lhs = m[src.array]  # m(ab)
    rhs = dst.array[m[:, None], m[None, :]]  # m(a) m(b)
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        return tuple(int(v) for v in bad[0])
    return None


def make_hom(src: FiniteGroup, dst: FiniteGroup, map: Sequence[int]) -> GroupHom:
    m = tuple(int(v) for v in map)
    if len(m) != src.order or any(v < 0 or v >= dst.order for v in m):
        raise ValueError(f"map must have length {src.order} with entries < {dst.order}")
    bad = _hom_failure(src, dst, np.array(m, dtype=np.int64))
    if bad is not None:
        a, b = bad
        raise NotHomomorphism(witness=(a, b), message=f"map({a}*{b}) != map({a})*map({b})")
    return GroupHom(src, dst, m)


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)))


def trivial_hom(src: FiniteGroup, dst: FiniteGroup) -> GroupHom:
    return GroupHom(src, dst, (0,) * src.order)


def compose(g: GroupHom, f: GroupHom) -> GroupHom:
    """g after f."""
    if f.dst != g.src:
        raise MismatchedGroups(message="cannot compose: target of f is not source of g")
    return GroupHom(f.src, g.dst, tuple(g.map[x] for x in f.map))


@dataclass(frozen=True)
class GroupAction:
    """Left action of ``actor`` on ``acted``; ``maps[m][n]`` is m acting on n."""

    actor: FiniteGroup
    acted: FiniteGroup
    maps: tuple[tuple[int, ...], ...]

    def __call__(self, m: int, n: int) -> int:
        return self.maps[m][n]

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.maps, dtype=np.int64).reshape(self.actor.order, self.acted.order)

    def is_trivial(self) -> bool:
        return all(row == tuple(range(self.acted.order)) for row in self.maps)


def make_action(actor: FiniteGroup, acted: FiniteGroup, maps: Sequence[Sequence[int]]) -> GroupAction:
    mp = tuple(tuple(int(v) for v in row) for row in maps)
    n = acted.order
    if len(mp) != actor.order or any(sorted(row) != list(range(n)) for row in mp):
        raise ValueError(f"need {actor.order} permutations of range({n})")
    if mp[0] != tuple(range(n)):
        bad = next(i for i in range(n) if mp[0][i] != i)
        raise IdentityActsNontrivially(witness=(bad,), message=f"identity moves {bad}")
    A = np.array(mp, dtype=np.int64)
    for m in range(actor.order):
        bad = _hom_failure(acted, acted, A[m])
        if bad is not None:
            raise NotAutomorphism(witness=(m, *bad), message=f"{m} does not act by an automorphism at {bad}")
    # maps[m m'] == maps[m] o maps[m']
    lhs = A[actor.array]  # [m, m', n] -> (m m') . n
    rhs = A[np.arange(actor.order)[:, None, None], A[None, :, :]]  # m . (m' . n)
    bad3 = np.argwhere(lhs != rhs)
    if bad3.size:
        m1, m2, x = (int(v) for v in bad3[0])
        raise NotAction(witness=(m1, m2, x), message=f"({m1}*{m2}).{x} != {m1}.({m2}.{x})")
    return GroupAction(actor, acted, mp)


def trivial_action(actor: FiniteGroup, acted: FiniteGroup) -> GroupAction:
    ident = tuple(range(acted.order))
    return GroupAction(actor, acted, (ident,) * actor.order)


def conjugation_action(G: FiniteGroup) -> GroupAction:
    return GroupAction(G, G, tuple(tuple(G.conj(g, x) for x in G.elements()) for g in G.elements()))


def pullback_action(act: GroupAction, f: GroupHom) -> GroupAction:
    """Action of ``f.src`` on ``act.acted`` through ``f``."""
    if f.dst != act.actor:
        raise MismatchedGroups(message="homomorphism target is not the acting group")
    return GroupAction(f.src, act.acted, tuple(act.maps[f.map[a]] for a in f.src.elements()))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]
    normal: bool

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._set

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.members)

    def as_group(self) -> tuple[FiniteGroup, GroupHom]:
        """The subgroup re-indexed by position in ``members`` plus its inclusion."""
        pos = {x: i for i, x in enumerate(self.members)}
        G = self.parent
        table = tuple(tuple(pos[G.mul(a, b)] for b in self.members) for a in self.members)
        H = FiniteGroup(table)
        return H, GroupHom(H, G, self.members)


def is_normal_set(G: FiniteGroup, members: Iterable[int]) -> bool:
    s = frozenset(members)
    return all(G.conj(g, x) in s for g in G.elements() for x in s)


def subgroup(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    s = sorted(set(members))
    ss = set(s)
    if 0 not in ss or any(G.mul(a, b) not in ss for a in s for b in s):
        raise ValueError("not a subgroup")
    return Subgroup(G, tuple(s), is_normal_set(G, s))


def kernel(h: GroupHom) -> Subgroup:
    return Subgroup(h.src, tuple(a for a in h.src.elements() if h.map[a] == 0), True)


def image(h: GroupHom) -> Subgroup:
    mem = sorted(set(h.map))
    return Subgroup(h.dst, tuple(mem), is_normal_set(h.dst, mem))


def quotient(G: FiniteGroup, K: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """G/K on smallest-index coset representatives, with the projection."""
    if not K.normal:
        raise NotNormal(message="quotient by a non-normal subgroup")
    rep_of = [-1] * G.order
    reps: list[int] = []
    for g in G.elements():
        if rep_of[g] < 0:
            reps.append(g)
            for k in K.members:
                rep_of[G.mul(g, k)] = g
    pos = {r: i for i, r in enumerate(reps)}
    table = tuple(tuple(pos[rep_of[G.mul(a, b)]] for b in reps) for a in reps)
    Q = FiniteGroup(table)
    return Q, GroupHom(G, Q, tuple(pos[rep_of[g]] for g in G.elements()))


def semidirect_product(N: FiniteGroup, M: FiniteGroup, act: GroupAction) -> tuple[FiniteGroup, GroupHom, GroupHom]:
    """N ⋊ M with (n1, m1)(n2, m2) = (n1 · m1.n2, m1 m2); pair (n, m) has index n*|M| + m.

    Returns the group, the inclusion n -> (n, 1) and the projection (n, m) -> m.
    """
    if act.actor != M or act.acted != N:
        raise MismatchedGroups(message="action is not of M on N")
    nm = M.order
    pairs = [(n, m) for n in N.elements() for m in M.elements()]
    table = tuple(
        tuple(N.mul(n1, act(m1, n2)) * nm + M.mul(m1, m2) for (n2, m2) in pairs) for (n1, m1) in pairs
    )
    E = FiniteGroup(table)
    k = GroupHom(N, E, tuple(n * nm for n in N.elements()))
    g = GroupHom(E, M, tuple(m for (_, m) in pairs))
    return E, k, g


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    return semidirect_product(A, B, trivial_action(B, A))[0]


def is_extension(k: GroupHom, g: GroupHom) -> Check:
    """Is ``1 -> k.src -> k.dst -> g.dst -> 1`` short exact?"""
    if k.dst != g.src:
        raise MismatchedGroups(message="k.dst must equal g.src")
    if not k.is_injective():
        a, b = _collision(k.map)
        return Check(False, "k not injective", (a, b))
    if not g.is_surjective():
        missing = next(x for x in g.dst.elements() if x not in set(g.map))
        return Check(False, "g not surjective", (missing,))
    im = set(k.map)
    for x in g.src.elements():
        if (g.map[x] == 0) != (x in im):
            return Check(False, "image(k) != kernel(g)", (x,))
    return Check(True)


def _collision(m: Sequence[int]) -> tuple[int, int]:
    seen: dict[int, int] = {}
    for a, v in enumerate(m):
        if v in seen:
            return seen[v], a
        seen[v] = a
    raise AssertionError("map is injective")


def enumerate_homs(
    src: FiniteGroup,
    dst: FiniteGroup,
    budget: int = DEFAULT_BUDGET,
    candidates: Callable[[int], Iterable[int]] | None = None,
) -> list[GroupHom]:
    """All homomorphisms src -> dst, sorted lexicographically by map.

    Images are assigned to the greedy generators of ``src`` only, pruned by
    element order; each assignment is then propagated along the Cayley
    graph and rejected on the first inconsistency.  ``candidates`` may
    further restrict the admissible images of a given generator.
    """
    gens = src.generators
    options = []
    for s in gens:
        o = src.element_order(s)
        opts = [y for y in dst.elements() if o % dst.element_order(y) == 0]
        if candidates is not None:
            allowed = set(candidates(s))
            opts = [y for y in opts if y in allowed]
        options.append(opts)
    needed = 1
    for opts in options:
        needed *= len(opts)
    if needed > budget:
        raise BudgetExceeded(needed, budget)

    out = []
    for images in itertools.product(*options):
        m = _extend(src, dst, gens, images)
        if m is not None:
            out.append(GroupHom(src, dst, m))
    out.sort(key=lambda h: h.map)
    return out


def _extend(src, dst, gens, images) -> tuple[int, ...] | None:
    # phi(x s) = phi(x) phi(s) along every Cayley-graph edge implies phi is a hom
    phi = [-1] * src.order
    phi[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            px = phi[x]
            for s, ps in zip(gens, images):
                y = src.table[x][s]
                val = dst.table[px][ps]
                if phi[y] < 0:
                    phi[y] = val
                    nxt.append(y)
                elif phi[y] != val:
                    return None
        frontier = nxt
    return tuple(phi)

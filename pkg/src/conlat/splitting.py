"""Congruence splitting and property (C) for finite lattices.

A lattice L is congruence splitting if whenever a <= b and
Theta(a, b) <= alpha0 v alpha1, there are x0, x1 in [a, b] with x0 v x1 = b
and Theta(a, xi) <= alphai.  In the finite case it suffices to check pairs
with alpha0 v alpha1 = Theta(a, b) exactly (any witness for the restriction
to Theta(a, b) works for the original pair, since Theta(a, xi) <= alphai ^
Theta(a, b)).

Property (C) is a chain condition: write a <~c b when some z has a v z = b
and a ^ z <= c; L has property (C) if for all a <= b and every c there is a
chain a = x0 <~c x1 <~c ... <~c xn = b.  Sectionally complemented lattices
and atomistic lattices have property (C), and property (C) implies
congruence splitting; :func:`splitting_from_property_C` realizes that
implication constructively by induction on a shortest chain.
"""
from __future__ import annotations

from dataclasses import dataclass

from .congruence import Congruence, congruence_join, principal_congruence
from .lattice import FiniteLattice


class NoChain(ValueError):
    """No labelled <~a chain from a to b exists."""


@dataclass(frozen=True)
class SplitInstance:
    """A congruence-splitting instance: a <= b and Theta(a, b) <= alpha0 v alpha1."""

    L: FiniteLattice
    a: int
    b: int
    alpha0: Congruence
    alpha1: Congruence

    def __post_init__(self) -> None:
        L = self.L
        if self.alpha0.host is not L or self.alpha1.host is not L:
            raise ValueError("congruences live on a different lattice")
        if not L.leq[self.a, self.b]:
            raise ValueError(f"{self.a} is not below {self.b}")
        theta = principal_congruence(L, self.a, self.b)
        if not theta.refines(congruence_join(self.alpha0, self.alpha1)):
            raise ValueError("Theta(a, b) is not below alpha0 v alpha1")


@dataclass(frozen=True)
class CChain:
    """A chain a = x0 <~c x1 <~c ... <~c xn = b with one witness z per step."""

    L: FiniteLattice
    c: int
    elements: tuple[int, ...]
    witnesses: tuple[int, ...]

    def validate(self) -> bool:
        L = self.L
        if len(self.witnesses) != len(self.elements) - 1:
            return False
        jn, mt, leq = L.join_rows, L.meet_rows, L.leq
        for x, y, z in zip(self.elements, self.elements[1:], self.witnesses):
            if jn[x][z] != y or not leq[mt[x][z], self.c]:
                return False
        return True


def rel_lessdot(L: FiniteLattice, a: int, b: int, c: int) -> int | None:
    """The first z (in element order) with a v z = b and a ^ z <= c, if any."""
    jn, mt, leq = L.join_rows, L.meet_rows, L.leq
    for z in range(L.n):
        if jn[a][z] == b and leq[mt[a][z], c]:
            return z
    return None


def property_c_chain(L: FiniteLattice, a: int, b: int, c: int) -> CChain | None:
    """A shortest <~c chain from a to b (BFS layers, ties to the smallest
    element), or None when b is unreachable."""
    if not L.leq[a, b]:
        return None
    if a == b:
        return CChain(L, c, (a,), ())
    prev: dict[int, tuple[int, int]] = {a: (-1, -1)}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for x in sorted(frontier):
            for y in range(L.n):
                if y in prev or not (L.leq[x, y] and L.leq[y, b]):
                    continue
                z = rel_lessdot(L, x, y, c)
                if z is not None:
                    prev[y] = (x, z)
                    nxt.append(y)
        frontier = nxt
    if b not in prev:
        return None
    elems = [b]
    wits = []
    x = b
    while x != a:
        p, z = prev[x]
        wits.append(z)
        elems.append(p)
        x = p
    elems.reverse()
    wits.reverse()
    return CChain(L, c, tuple(elems), tuple(wits))


@dataclass(frozen=True)
class PropertyCResult:
    holds: bool
    failing: tuple[int, int, int] | None  # (a, b, c)


def has_property_C(L: FiniteLattice) -> PropertyCResult:
    """Chains required for every a <= b and every c."""
    for c in range(L.n):
        for a in range(L.n):
            for b in range(L.n):
                if L.leq[a, b] and property_c_chain(L, a, b, c) is None:
                    return PropertyCResult(False, (a, b, c))
    return PropertyCResult(True, None)


def splitting_witness(inst: SplitInstance) -> tuple[int, int] | None:
    """Exhaustive scan for (x0, x1) in [a, b] with x0 v x1 = b and
    Theta(a, xi) <= alphai; ascending order, so the result is deterministic."""
    L, a, b = inst.L, inst.a, inst.b
    jn, leq = L.join_rows, L.leq
    box = [x for x in range(L.n) if leq[a, x] and leq[x, b]]
    ok0 = [x for x in box if principal_congruence(L, a, x).refines(inst.alpha0)]
    ok1 = set(x for x in box if principal_congruence(L, a, x).refines(inst.alpha1))
    for x0 in ok0:
        for x1 in box:
            if x1 in ok1 and jn[x0][x1] == b:
                return (x0, x1)
    return None


@dataclass(frozen=True)
class SplittingResult:
    holds: bool
    failing: tuple[int, int, int, int] | None  # (a, b, alpha0 index, alpha1 index)


def is_congruence_splitting(L: FiniteLattice) -> SplittingResult:
    """Check every instance with alpha0 v alpha1 = Theta(a, b) exactly;
    in a finite lattice every congruence is compact, so this is the full
    splitting property."""
    from .congruence import con_lattice

    con = con_lattice(L)
    jn = con.as_lattice.join_rows
    k = len(con)
    for a in range(L.n):
        for b in range(L.n):
            if not L.leq[a, b]:
                continue
            eps = con.principal[a][b]
            for i0 in range(k):
                for i1 in range(k):
                    if jn[i0][i1] != eps:
                        continue
                    inst = SplitInstance(
                        L, a, b, con.congruences[i0], con.congruences[i1]
                    )
                    if splitting_witness(inst) is None:
                        return SplittingResult(False, (a, b, i0, i1))
    return SplittingResult(True, None)


def splitting_from_property_C(inst: SplitInstance) -> tuple[int, int]:
    """Build a splitting witness from property (C) chains, by induction on a
    shortest chain a = x0 <~a ... <~a xn = b whose steps each lie in alpha0
    or alpha1.

    For the last step c <~a b with witness z and step congruence alphaj:
    recursing on (a, c) gives (y0, y1), and the witness is yj v z paired
    with the other y.  Correctness: z ^ c <= a <= yj forces
    yj v z = yj v (z ^ c) congruent to yj modulo alphaj, since
    Theta(z ^ c, z) <= Theta(c, c v z) = Theta(c, b) <= alphaj.
    """
    L, a, b = inst.L, inst.a, inst.b
    al0, al1 = inst.alpha0, inst.alpha1
    if a == b:
        return (a, a)
    # BFS over steps x <~a y that lie in alpha0 or alpha1
    prev: dict[int, tuple[int, int, int]] = {a: (-1, -1, -1)}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for x in sorted(frontier):
            for y in range(L.n):
                if y in prev or not (L.leq[x, y] and L.leq[y, b]):
                    continue
                if al0.same(x, y):
                    lab = 0
                elif al1.same(x, y):
                    lab = 1
                else:
                    continue
                z = rel_lessdot(L, x, y, a)
                if z is not None:
                    prev[y] = (x, z, lab)
                    nxt.append(y)
        frontier = nxt
    if b not in prev:
        raise NoChain(f"no labelled chain from {a} to {b} below {a}")
    c, z, lab = prev[b]
    sub = SplitInstance(L, a, c, al0, al1)
    y0, y1 = splitting_from_property_C(sub)
    jn = L.join_rows
    if lab == 0:
        return (jn[y0][z], y1)
    return (y0, jn[y1][z])

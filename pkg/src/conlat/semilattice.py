"""Finite join-semilattices, the refinement property, and weak distributivity.

A join-semilattice is stored as its full join table.  "Distributive" is used
in the refinement sense throughout this module: every equation
a0 + a1 = b0 + b1 admits a 2x2 refinement matrix.  No lattice distributivity
is assumed anywhere here, and meets are never required to exist; where a
greatest common lower bound happens to exist it is used as a search heuristic
only.

A map f between join-semilattices is weakly distributive at u if every
decomposition f(u) = y0 + y1 pulls back to a decomposition u = x0 + x1 with
f(xi) <= yi.  For surjective f this recovers the usual notion of a weakly
distributive homomorphism.  The set of elements at which a join-homomorphism
into a distributive semilattice is weakly distributive is closed under
joins; :func:`wd_join_combine` realizes that closure constructively.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .lattice import FiniteLattice, _bits


class TargetNotDistributive(ValueError):
    """The target semilattice lacks the refinement property."""


class InvalidInputWitness(ValueError):
    """A supplied witness fails its defining conditions."""


class FiniteJoinSemilattice:
    """A finite join-semilattice on elements 0..n-1, given by its join table.

    The induced order is x <= y iff x + y = y.  A top element always exists
    (the join of everything); a bottom may or may not.
    """

    def __init__(self, join, *, validate: bool = True):
        join = np.array(join, dtype=np.int64)
        if join.ndim != 2 or join.shape[0] != join.shape[1]:
            raise ValueError("join table must be square")
        n = join.shape[0]
        if n == 0:
            raise ValueError("a semilattice needs at least one element")
        if validate:
            rows = [tuple(int(v) for v in r) for r in join]
            if any(not 0 <= v < n for r in rows for v in r):
                raise ValueError("join table entries outside 0..n-1")
            if any(rows[x][x] != x for x in range(n)):
                raise ValueError("join is not idempotent")
            if any(rows[x][y] != rows[y][x] for x in range(n) for y in range(x)):
                raise ValueError("join is not commutative")
            for x in range(n):
                for y in range(n):
                    xy = rows[x][y]
                    for z in range(n):
                        if rows[xy][z] != rows[x][rows[y][z]]:
                            raise ValueError("join is not associative")
        join.setflags(write=False)
        self.n = n
        self.join = join
        self.join_rows: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(v) for v in row) for row in join
        )
        down = [0] * n
        for x in range(n):
            for y in range(n):
                if self.join_rows[x][y] == y:
                    down[y] |= 1 << x
        self.down_bits: tuple[int, ...] = tuple(down)
        self.top = self.join_all(range(n))
        self.bottom: int | None = next(
            (x for x in range(n) if all((down[y] >> x) & 1 for y in range(n))), None
        )

    @classmethod
    def from_lattice(cls, L: FiniteLattice) -> "FiniteJoinSemilattice":
        return cls(L.join, validate=False)

    @classmethod
    def from_lattice_without_bottom(cls, L: FiniteLattice) -> "FiniteJoinSemilattice":
        """L minus its least element; join-closed, so again a semilattice."""
        if L.n < 2:
            raise ValueError("need at least two elements to drop the bottom")
        keep = [x for x in range(L.n) if x != L.bottom]
        idx = {x: i for i, x in enumerate(keep)}
        table = [[idx[L.join_rows[x][y]] for y in keep] for x in keep]
        return cls(table, validate=False)

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteJoinSemilattice":
        return cls(obj["join"])

    def to_json(self) -> dict:
        return {"n": self.n, "join": [list(map(int, row)) for row in self.join]}

    def le(self, x: int, y: int) -> bool:
        return self.join_rows[x][y] == y

    def join_of(self, x: int, y: int) -> int:
        return self.join_rows[x][y]

    def join_all(self, xs) -> int:
        it = iter(xs)
        try:
            acc = next(it)
        except StopIteration:
            raise ValueError("empty join") from None
        row = self.join_rows
        for x in it:
            acc = row[acc][x]
        return acc

    def clb_mask(self, x: int, y: int) -> int:
        """Bitmask of the common lower bounds of x and y (may be empty)."""
        return self.down_bits[x] & self.down_bits[y]

    def pseudo_meet(self, x: int, y: int) -> int | None:
        """Greatest common lower bound if one exists, else None."""
        mask = self.clb_mask(x, y)
        for z in _bits(mask):
            if mask & ~self.down_bits[z] == 0:
                return z
        # no greatest element among the common lower bounds
        return None

    def decompositions(self, e: int) -> tuple[tuple[int, int], ...]:
        """All ordered pairs (y0, y1) with y0 + y1 = e, cached."""
        cache = getattr(self, "_decomp_cache", None)
        if cache is None:
            cache = {}
            self._decomp_cache = cache
        if e not in cache:
            row = self.join_rows
            de = self.down_bits[e]
            cache[e] = tuple(
                (y0, y1)
                for y0 in _bits(de)
                for y1 in _bits(de)
                if row[y0][y1] == e
            )
        return cache[e]

    def __repr__(self) -> str:
        return f"FiniteJoinSemilattice(n={self.n})"


@dataclass(frozen=True)
class SemilatticeHom:
    """A map between join-semilattices; check with :func:`check_semilattice_hom`."""

    source: FiniteJoinSemilattice
    target: FiniteJoinSemilattice
    map: tuple[int, ...]


def check_semilattice_hom(h: SemilatticeHom) -> bool:
    f, S, T = h.map, h.source, h.target
    if len(f) != S.n or any(not 0 <= v < T.n for v in f):
        return False
    return all(
        f[S.join_rows[x][y]] == T.join_rows[f[x]][f[y]]
        for x in range(S.n)
        for y in range(x, S.n)
    )


def enumerate_semilattice_homs(
    S: FiniteJoinSemilattice, T: FiniteJoinSemilattice
) -> Iterator[SemilatticeHom]:
    """All join-preserving maps S -> T, by backtracking on the order."""
    n = S.n
    f = [0] * n

    def extend(k: int) -> Iterator[SemilatticeHom]:
        if k == n:
            h = SemilatticeHom(S, T, tuple(f))
            if check_semilattice_hom(h):
                yield h
            return
        for v in range(T.n):
            ok = True
            for i in range(k):
                if S.le(i, k) and not T.le(f[i], v):
                    ok = False
                    break
                if S.le(k, i) and not T.le(v, f[i]):
                    ok = False
                    break
            if ok:
                f[k] = v
                yield from extend(k + 1)

    yield from extend(0)


# -- refinement ---------------------------------------------------------------


@dataclass(frozen=True)
class RefinementSquare:
    """A 2x2 refinement of a0 + a1 = b0 + b1:
    ai = ci0 + ci1 and bi = c0i + c1i."""

    a0: int
    a1: int
    b0: int
    b1: int
    c00: int
    c01: int
    c10: int
    c11: int

    def satisfied_in(self, S: FiniteJoinSemilattice) -> bool:
        j = S.join_rows
        return (
            j[self.c00][self.c01] == self.a0
            and j[self.c10][self.c11] == self.a1
            and j[self.c00][self.c10] == self.b0
            and j[self.c01][self.c11] == self.b1
        )


def refinement_square(
    S: FiniteJoinSemilattice, a0: int, a1: int, b0: int, b1: int
) -> RefinementSquare | None:
    """Search for a refinement square; complete, so None means none exists."""
    j = S.join_rows
    if j[a0][a1] != j[b0][b1]:
        raise ValueError("a0 + a1 and b0 + b1 differ")

    def cands(x: int, y: int) -> list[int]:
        # greatest common lower bound first when it exists, then the rest,
        # larger (by down-set size) first
        mask = S.clb_mask(x, y)
        out = sorted(_bits(mask), key=lambda z: -(S.down_bits[z].bit_count()))
        return out

    for c00 in cands(a0, b0):
        for c01 in cands(a0, b1):
            if j[c00][c01] != a0:
                continue
            for c10 in cands(a1, b0):
                if j[c00][c10] != b0:
                    continue
                for c11 in cands(a1, b1):
                    if j[c10][c11] == a1 and j[c01][c11] == b1:
                        return RefinementSquare(a0, a1, b0, b1, c00, c01, c10, c11)
    return None


@dataclass(frozen=True)
class RefinementResult:
    """Outcome of the refinement-property scan: a square per solvable
    equation, or the first failing equation."""

    holds: bool
    counterexample: tuple[int, int, int, int] | None
    squares: dict[tuple[int, int, int, int], RefinementSquare] = field(repr=False)


def has_refinement_property(S: FiniteJoinSemilattice) -> RefinementResult:
    """Check every equation a0 + a1 = b0 + b1; cached on the semilattice.

    For finite join-semilattices this property is exactly distributivity in
    the refinement sense.
    """
    cached = getattr(S, "_refinement_result", None)
    if cached is not None:
        return cached
    squares: dict[tuple[int, int, int, int], RefinementSquare] = {}
    result = None
    for e in range(S.n):
        pairs = S.decompositions(e)
        for a0, a1 in pairs:
            for b0, b1 in pairs:
                sq = refinement_square(S, a0, a1, b0, b1)
                if sq is None:
                    result = RefinementResult(False, (a0, a1, b0, b1), squares)
                    break
                squares[(a0, a1, b0, b1)] = sq
            if result:
                break
        if result:
            break
    if result is None:
        result = RefinementResult(True, None, squares)
    S._refinement_result = result
    return result


# -- weak distributivity --------------------------------------------------------


@dataclass(frozen=True)
class WdWitness:
    """A weak-distributivity witness at u: for every decomposition
    f(u) = y0 + y1 a pullback (x0, x1) with x0 + x1 = u and f(xi) <= yi."""

    hom: SemilatticeHom
    u: int
    table: dict[tuple[int, int], tuple[int, int]]


def verify_wd_witness(w: WdWitness) -> bool:
    f, S, T = w.hom.map, w.hom.source, w.hom.target
    decomps = T.decompositions(f[w.u])
    if set(w.table) != set(decomps):
        return False
    for (y0, y1), (x0, x1) in w.table.items():
        if S.join_rows[x0][x1] != w.u:
            return False
        if not (T.le(f[x0], y0) and T.le(f[x1], y1)):
            return False
    return True


@dataclass(frozen=True)
class WdAtResult:
    holds: bool
    witness: WdWitness | None
    failure: tuple[int, int] | None


def _max_pullbacks(h: SemilatticeHom) -> list[list[int | None]]:
    # M[u][y] = greatest x <= u with f(x) <= y, or None; the candidate set is
    # join-closed, so its join is its greatest element and the only candidate
    # pullback component that can work
    S, T, f = h.source, h.target, h.map
    fmask = [0] * T.n
    for x in range(S.n):
        for y in range(T.n):
            if T.le(f[x], y):
                fmask[y] |= 1 << x
    M: list[list[int | None]] = [[None] * T.n for _ in range(S.n)]
    rows = S.join_rows
    for u in range(S.n):
        du = S.down_bits[u]
        for y in range(T.n):
            mask = du & fmask[y]
            if mask:
                acc = None
                for x in _bits(mask):
                    acc = x if acc is None else rows[acc][x]
                M[u][y] = acc
    return M


def is_weakly_distributive_at(h: SemilatticeHom, u: int) -> WdAtResult:
    """Decide weak distributivity at u, producing the full witness table or
    the first failing decomposition of f(u)."""
    S, T, f = h.source, h.target, h.map
    M = _max_pullbacks(h)
    table: dict[tuple[int, int], tuple[int, int]] = {}
    for y0, y1 in T.decompositions(f[u]):
        x0, x1 = M[u][y0], M[u][y1]
        if x0 is None or x1 is None or S.join_rows[x0][x1] != u:
            return WdAtResult(False, None, (y0, y1))
        table[(y0, y1)] = (x0, x1)
    return WdAtResult(True, WdWitness(h, u, table), None)


@lru_cache(maxsize=None)
def is_weakly_distributive(h: SemilatticeHom) -> bool:
    """True iff h is weakly distributive at every element of its source.
    For surjective h this is the usual weakly distributive homomorphism."""
    S, T, f = h.source, h.target, h.map
    M = _max_pullbacks(h)
    for u in range(S.n):
        for y0, y1 in T.decompositions(f[u]):
            x0, x1 = M[u][y0], M[u][y1]
            if x0 is None or x1 is None or S.join_rows[x0][x1] != u:
                return False
    return True


def weakly_distributive_points(h: SemilatticeHom) -> list[int]:
    """The elements of the source at which h is weakly distributive."""
    return [u for u in range(h.source.n) if is_weakly_distributive_at(h, u).holds]


def wd_join_combine(
    h: SemilatticeHom, u0: int, u1: int, w0: WdWitness, w1: WdWitness
) -> WdWitness:
    """Combine weak-distributivity witnesses at u0 and u1 into one at u0 + u1.

    Requires the target to have the refinement property: a decomposition of
    f(u0 + u1) is refined against f(u0) + f(u1), each half is pulled back
    through the given witnesses, and the pullbacks are joined.
    """
    S, T, f = h.source, h.target, h.map
    if not has_refinement_property(T).holds:
        raise TargetNotDistributive("target lacks the refinement property")
    if w0.hom != h or w1.hom != h or w0.u != u0 or w1.u != u1:
        raise InvalidInputWitness("witnesses do not belong to (h, u0, u1)")
    if not (verify_wd_witness(w0) and verify_wd_witness(w1)):
        raise InvalidInputWitness("input witness fails its defining conditions")
    u = S.join_rows[u0][u1]
    jn_s, jn_t = S.join_rows, T.join_rows
    table: dict[tuple[int, int], tuple[int, int]] = {}
    for y0, y1 in T.decompositions(f[u]):
        sq = refinement_square(T, f[u0], f[u1], y0, y1)
        if sq is None:
            raise TargetNotDistributive("refinement square missing despite the check")
        x00, x01 = w0.table[(sq.c00, sq.c01)]
        x10, x11 = w1.table[(sq.c10, sq.c11)]
        table[(y0, y1)] = (jn_s[x00][x10], jn_s[x01][x11])
    out = WdWitness(h, u, table)
    if not verify_wd_witness(out):
        raise AssertionError("combined weak-distributivity witness is invalid")
    return out

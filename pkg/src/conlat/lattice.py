"""Finite bounded lattices with explicit order and operation tables.

Elements are the integers 0..n-1.  The order is an n x n boolean matrix and
join/meet are full n x n element tables, so every lattice operation is a
table lookup.  Instances are immutable after construction and safe to share.

The module also provides lattice homomorphisms, interval sublattices, the
standard structural predicates (modular, complemented, atomistic, ...),
perspectivity of elements, a canonical form for isomorphism testing, and an
exhaustive isomorph-free enumerator of all lattices up to a size bound.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

DEFAULT_ENUMERATION_BOUND = 8


class NotALattice(ValueError):
    """Some pair of elements has no least upper or greatest lower bound."""


class CyclicCovers(ValueError):
    """The cover relation contains a directed cycle."""


class IndexOutOfRange(IndexError):
    """An element index lies outside 0..n-1."""


class NotComparable(ValueError):
    """An interval [a, b] was requested with a not below b."""


class BoundExceeded(ValueError):
    """Requested enumeration size exceeds the configured bound."""


def _bits(mask: int) -> Iterator[int]:
    # iterate set bit positions, lowest first
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """A finite lattice on elements 0..n-1.

    Construct from a full order matrix (``FiniteLattice(leq)``) or from a
    cover relation (:meth:`from_covers`).  Construction validates that the
    input is a partial order in which every pair of elements has a least
    upper bound and a greatest lower bound; finiteness then gives a least
    element ``bottom`` and a greatest element ``top``.

    Attributes:
        n: number of elements.
        leq: read-only boolean matrix, ``leq[x, y]`` iff x <= y.
        join, meet: read-only n x n element tables.
        bottom, top: least and greatest element.
    """

    def __init__(self, leq) -> None:
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError("leq must be a square matrix")
        n = leq.shape[0]
        if n == 0:
            raise ValueError("a lattice needs at least one element")
        if not leq.diagonal().all():
            raise ValueError("order is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("order is not antisymmetric")
        if ((leq.astype(int) @ leq.astype(int) > 0) & ~leq).any():
            raise ValueError("order is not transitive")

        # up[x] = bitmask of {y : x <= y}, down[x] = bitmask of {y : y <= x}
        up = [0] * n
        down = [0] * n
        for x in range(n):
            for y in range(n):
                if leq[x, y]:
                    up[x] |= 1 << y
                    down[y] |= 1 << x

        join = np.zeros((n, n), dtype=np.int64)
        meet = np.zeros((n, n), dtype=np.int64)
        for x in range(n):
            for y in range(x, n):
                join[x, y] = join[y, x] = _extremum(
                    up[x] & up[y], up, "least upper", x, y
                )
                meet[x, y] = meet[y, x] = _extremum(
                    down[x] & down[y], down, "greatest lower", x, y
                )

        leq.setflags(write=False)
        join.setflags(write=False)
        meet.setflags(write=False)
        self.n = n
        self.leq = leq
        self.join = join
        self.meet = meet
        self._up_bits = tuple(up)
        self._down_bits = tuple(down)
        full = (1 << n) - 1
        self.bottom = next(x for x in range(n) if up[x] == full)
        self.top = next(x for x in range(n) if down[x] == full)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]]) -> "FiniteLattice":
        """Build the lattice whose order is the reflexive-transitive closure
        of the given acyclic relation; ``(i, j)`` means i is below j."""
        succ: list[list[int]] = [[] for _ in range(n)]
        indeg = [0] * n
        edges = list(covers)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexOutOfRange(f"cover ({i}, {j}) outside 0..{n - 1}")
            if i == j:
                raise CyclicCovers(f"self-loop at {i}")
            succ[i].append(j)
            indeg[j] += 1
        # Kahn's algorithm; leftovers mean a cycle
        order = [x for x in range(n) if indeg[x] == 0]
        head = 0
        while head < len(order):
            x = order[head]
            head += 1
            for y in succ[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    order.append(y)
        if len(order) < n:
            raise CyclicCovers("covers contain a directed cycle")
        up = [0] * n
        for x in reversed(order):
            m = 1 << x
            for y in succ[x]:
                m |= up[y]
            up[x] = m
        leq = np.zeros((n, n), dtype=bool)
        for x in range(n):
            for y in _bits(up[x]):
                leq[x, y] = True
        return cls(leq)

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteLattice":
        return cls.from_covers(obj["n"], [tuple(c) for c in obj["covers"]])

    def to_json(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers()]}

    # -- derived views -----------------------------------------------------

    @cached_property
    def join_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in row) for row in self.join)

    @cached_property
    def meet_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in row) for row in self.meet)

    @property
    def up_bits(self) -> tuple[int, ...]:
        return self._up_bits

    @property
    def down_bits(self) -> tuple[int, ...]:
        return self._down_bits

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def join_of(self, x: int, y: int) -> int:
        return int(self.join[x, y])

    def meet_of(self, x: int, y: int) -> int:
        return int(self.meet[x, y])

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        row = self.join_rows
        for x in xs:
            acc = row[acc][x]
        return acc

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        row = self.meet_rows
        for x in xs:
            acc = row[acc][x]
        return acc

    def covers(self) -> list[tuple[int, int]]:
        """The cover pairs (i, j): i < j with nothing strictly between."""
        out = []
        n, up, down = self.n, self._up_bits, self._down_bits
        for i in range(n):
            strict_up = up[i] & ~(1 << i)
            for j in _bits(strict_up):
                # j covers i iff no k with i < k < j
                between = strict_up & down[j] & ~(1 << j)
                if between == 0:
                    out.append((i, j))
        return sorted(out)

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        return tuple(j for i, j in self.covers() if i == self.bottom)

    @cached_property
    def height(self) -> int:
        """Length (number of edges) of a longest chain."""
        n, down = self.n, self._down_bits
        order = sorted(range(n), key=lambda x: down[x].bit_count())
        h = [0] * n
        for x in order:
            below = down[x] & ~(1 << x)
            h[x] = max((h[y] + 1 for y in _bits(below)), default=0)
        return h[self.top]

    def __repr__(self) -> str:
        return f"FiniteLattice(n={self.n})"


def _extremum(cand_mask: int, closure: list[int], kind: str, x: int, y: int) -> int:
    # least element of an upper-bound set (or greatest of a lower-bound set):
    # the member comparable below (above) every other member
    for z in _bits(cand_mask):
        if cand_mask & ~closure[z] == 0:
            return z
    raise NotALattice(f"elements {x} and {y} have no {kind} bound")


# -- named small lattices ---------------------------------------------------


def chain(n: int) -> FiniteLattice:
    """The n-element chain 0 < 1 < ... < n-1."""
    return FiniteLattice(np.triu(np.ones((n, n), dtype=bool)))


def boolean(k: int) -> FiniteLattice:
    """The Boolean lattice of subsets of a k-element set (2^k elements)."""
    n = 1 << k
    leq = np.fromfunction(lambda x, y: (x.astype(int) & ~y.astype(int)) == 0, (n, n))
    return FiniteLattice(leq)


def m3() -> FiniteLattice:
    """The diamond: three atoms under a common top, modular, not distributive."""
    return FiniteLattice.from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def n5() -> FiniteLattice:
    """The pentagon 0 < 1 < 2 < 4, 0 < 3 < 4: the minimal non-modular lattice."""
    return FiniteLattice.from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


# -- intervals ---------------------------------------------------------------


@dataclass(frozen=True)
class IntervalSublattice:
    """An interval [a, b] viewed as a lattice of its own.

    ``to_host[k]`` is the element of the host lattice that local element k
    stands for.
    """

    lattice: FiniteLattice
    to_host: tuple[int, ...]


def interval(L: FiniteLattice, a: int, b: int) -> IntervalSublattice:
    """The interval [a, b] as a sublattice, with its index map back into L."""
    if not (0 <= a < L.n and 0 <= b < L.n):
        raise IndexOutOfRange(f"interval endpoints ({a}, {b}) outside 0..{L.n - 1}")
    if not L.leq[a, b]:
        raise NotComparable(f"{a} is not below {b}")
    elems = [x for x in range(L.n) if L.leq[a, x] and L.leq[x, b]]
    sub = FiniteLattice(L.leq[np.ix_(elems, elems)])
    return IntervalSublattice(sub, tuple(elems))


# -- structural predicates ----------------------------------------------------


def is_modular(L: FiniteLattice) -> bool:
    """x <= z implies x v (y ^ z) = (x v y) ^ z for all y."""
    n, jn, mt, leq = L.n, L.join_rows, L.meet_rows, L.leq
    for x in range(n):
        for z in range(n):
            if not leq[x, z]:
                continue
            jx = jn[x]
            for y in range(n):
                if jx[mt[y][z]] != mt[jx[y]][z]:
                    return False
    return True


def is_distributive(L: FiniteLattice) -> bool:
    """x ^ (y v z) = (x ^ y) v (x ^ z) for all triples."""
    n, jn, mt = L.n, L.join_rows, L.meet_rows
    for x in range(n):
        mx = mt[x]
        for y in range(n):
            for z in range(n):
                if mx[jn[y][z]] != jn[mx[y]][mx[z]]:
                    return False
    return True


def is_complemented(L: FiniteLattice) -> bool:
    """Every element has a complement: x ^ y = bottom, x v y = top."""
    n, jn, mt = L.n, L.join_rows, L.meet_rows
    bot, top = L.bottom, L.top
    return all(
        any(mt[x][y] == bot and jn[x][y] == top for y in range(n)) for x in range(n)
    )


def is_sectionally_complemented(L: FiniteLattice) -> bool:
    """Every interval [bottom, b] is complemented."""
    n, jn, mt, leq = L.n, L.join_rows, L.meet_rows, L.leq
    bot = L.bottom
    for b in range(n):
        for x in range(n):
            if not leq[x, b]:
                continue
            if not any(
                leq[y, b] and mt[x][y] == bot and jn[x][y] == b for y in range(n)
            ):
                return False
    return True


def is_relatively_complemented(L: FiniteLattice) -> bool:
    """Every interval [a, b] is complemented."""
    n, jn, mt, leq = L.n, L.join_rows, L.meet_rows, L.leq
    for a in range(n):
        for b in range(n):
            if not leq[a, b]:
                continue
            for x in range(n):
                if not (leq[a, x] and leq[x, b]):
                    continue
                if not any(
                    leq[a, y] and leq[y, b] and mt[x][y] == a and jn[x][y] == b
                    for y in range(n)
                ):
                    return False
    return True


def is_atomistic(L: FiniteLattice) -> bool:
    """Every element is the join of the atoms below it."""
    return all(
        L.join_all(a for a in L.atoms if L.leq[a, x]) == x for x in range(L.n)
    )


def are_perspective(L: FiniteLattice, x: int, y: int) -> bool:
    """x ~ y iff some axis z has x ^ z = y ^ z = bottom and x v z = y v z."""
    jn, mt, bot = L.join_rows, L.meet_rows, L.bottom
    return any(
        mt[x][z] == bot and mt[y][z] == bot and jn[x][z] == jn[y][z]
        for z in range(L.n)
    )


# -- homomorphisms ------------------------------------------------------------


@dataclass(frozen=True)
class LatticeHom:
    """A map between lattices given by its value table; not assumed valid
    until checked with :func:`check_hom`."""

    source: FiniteLattice
    target: FiniteLattice
    map: tuple[int, ...]


def check_hom(h: LatticeHom) -> bool:
    """True iff h preserves binary joins and meets (0/1 not required)."""
    K, L, f = h.source, h.target, h.map
    if len(f) != K.n or any(not 0 <= v < L.n for v in f):
        return False
    jn_k, mt_k = K.join_rows, K.meet_rows
    jn_l, mt_l = L.join_rows, L.meet_rows
    for x in range(K.n):
        fx = f[x]
        for y in range(x, K.n):
            if f[jn_k[x][y]] != jn_l[fx][f[y]] or f[mt_k[x][y]] != mt_l[fx][f[y]]:
                return False
    return True


def has_convex_range(h: LatticeHom) -> bool:
    """True iff the image of h is order-convex in the target."""
    img = set(h.map)
    L = h.target
    return all(
        z in img
        for x in img
        for y in img
        for z in range(L.n)
        if L.leq[x, z] and L.leq[z, y]
    )


def enumerate_lattice_homs(K: FiniteLattice, L: FiniteLattice) -> Iterator[LatticeHom]:
    """All join- and meet-preserving maps K -> L, by backtracking."""
    n = K.n
    leq_k, leq_l = K.leq, L.leq
    f = [0] * n

    def extend(k: int) -> Iterator[LatticeHom]:
        if k == n:
            h = LatticeHom(K, L, tuple(f))
            if check_hom(h):
                yield h
            return
        for v in range(L.n):
            ok = True
            for i in range(k):
                # monotonicity is necessary; full check happens at the leaf
                if leq_k[i, k] and not leq_l[f[i], v]:
                    ok = False
                    break
                if leq_k[k, i] and not leq_l[v, f[i]]:
                    ok = False
                    break
            if ok:
                f[k] = v
                yield from extend(k + 1)

    yield from extend(0)


# -- canonical form and enumeration -------------------------------------------


def _refine_ranks(n: int, down: tuple[int, ...], up: tuple[int, ...]) -> list[int]:
    # iterated colour refinement; colours start from (|down x|, |up x|) and
    # are rebuilt from the sorted colour multisets of the sets below/above x
    keys: list[tuple] = [(down[x].bit_count(), up[x].bit_count()) for x in range(n)]
    while True:
        order = sorted(set(keys))
        rank = {k: i for i, k in enumerate(order)}
        ranks = [rank[k] for k in keys]
        new_keys = [
            (
                ranks[x],
                tuple(sorted(ranks[y] for y in _bits(down[x]))),
                tuple(sorted(ranks[y] for y in _bits(up[x]))),
            )
            for x in range(n)
        ]
        if len(set(new_keys)) == len(set(keys)):
            return ranks
        keys = new_keys


def _poset_code(n: int, down: tuple[int, ...], up: tuple[int, ...]) -> str:
    # lexicographically least bit-packed order matrix over all relabelings
    # that respect the refinement ranks
    ranks = _refine_ranks(n, down, up)
    classes: dict[int, list[int]] = {}
    for x, r in enumerate(ranks):
        classes.setdefault(r, []).append(x)
    pools = [classes[r] for r in sorted(classes)]
    best: int | None = None
    for parts in itertools.product(*(itertools.permutations(p) for p in pools)):
        perm = [x for part in parts for x in part]
        code = 0
        for p in range(n):
            dp = down[perm[p]]
            for q in range(n):
                code = (code << 1) | ((dp >> perm[q]) & 1)
        if best is None or code < best:
            best = code
    return f"{n}:{best:x}"


def canonical_form(L: FiniteLattice) -> str:
    """A string invariant: two lattices get equal codes iff isomorphic."""
    return _poset_code(L.n, L._down_bits, L._up_bits)


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    return L1.n == L2.n and canonical_form(L1) == canonical_form(L2)


def _meet_semilattice_levels(max_size: int) -> list[list[tuple[int, ...]]]:
    # levels[m] = canonical representatives of meet-semilattices on m+1
    # elements, each a tuple of down-set bitmasks in a linear extension order
    levels: list[list[tuple[int, ...]]] = [[(1,)]]
    for m in range(1, max_size):
        seen: dict[str, tuple[int, ...]] = {}
        for downs in levels[m - 1]:
            for new in _admissible_downsets(downs):
                cand = downs + (new | (1 << m),)
                ups = _ups_from_downs(cand)
                code = _poset_code(m + 1, cand, ups)
                if code not in seen:
                    seen[code] = cand
        levels.append([seen[c] for c in sorted(seen)])
    return levels


def _admissible_downsets(downs: tuple[int, ...]) -> Iterator[int]:
    # down-sets D of the current structure such that adjoining a maximal
    # element with exactly D below it keeps all binary meets: every
    # D ^ down(x) must have a greatest element
    m = len(downs)
    for d in range(1, 1 << m):
        if d & 1 == 0:
            continue
        if any(downs[x] & ~d for x in _bits(d)):
            continue
        ok = True
        for x in range(m):
            inter = d & downs[x]
            if not any(inter & ~downs[b] == 0 for b in _bits(inter)):
                ok = False
                break
        if ok:
            yield d


def _ups_from_downs(downs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(downs)
    ups = [0] * n
    for x in range(n):
        for y in _bits(downs[x]):
            ups[y] |= 1 << x
    return tuple(ups)


def enumerate_lattices(max_n: int, *, bound: int | None = None) -> Iterator[FiniteLattice]:
    """Yield one representative of every isomorphism class of lattices with
    at most ``max_n`` elements, smaller sizes first, deterministic order.

    A lattice on n >= 2 elements is a meet-semilattice on n-1 elements with
    a new top adjoined, so the generator enumerates meet-semilattices by
    repeated augmentation with isomorph rejection.
    """
    if bound is None:
        bound = DEFAULT_ENUMERATION_BOUND
    if max_n > bound:
        raise BoundExceeded(f"max_n={max_n} exceeds bound {bound}")
    if max_n < 1:
        return
    yield chain(1)
    if max_n == 1:
        return
    levels = _meet_semilattice_levels(max_n - 1)
    for m in range(1, max_n):
        batch = []
        for downs in levels[m - 1]:
            n = m + 1
            leq = np.zeros((n, n), dtype=bool)
            for x in range(m):
                for y in _bits(downs[x]):
                    leq[y, x] = True
            leq[:, m] = True
            leq[m, m] = True
            L = FiniteLattice(leq)
            batch.append((canonical_form(L), L))
        batch.sort(key=lambda t: t[0])
        for _, L in batch:
            yield L

"""Independent brute-force oracles the test suite checks the library against.

Everything here deliberately avoids the library's own algorithms: posets are
enumerated by down-set DFS rather than semilattice augmentation, congruences
by filtering all set partitions, refinement by quadruple loops, ring ideals
by additive-subgroup scans.  Slow but obviously correct.
"""
from __future__ import annotations

import itertools
from collections import defaultdict


def labeled_lattice_posets(n: int):
    """All naturally labeled lattices on 0..n-1, as leq matrices.

    Element i's strict lower set is a transitively closed subset of
    0..i-1, so every poset appears once per index-monotone labeling.
    """
    downs = [0] * n

    def closed(mask: int) -> bool:
        m = mask
        while m:
            j = (m & -m).bit_length() - 1
            if downs[j] & ~mask:
                return False
            m &= m - 1
        return True

    def rec(i: int):
        if i == n:
            le = [
                [(x == y) or bool((downs[y] >> x) & 1) for y in range(n)]
                for x in range(n)
            ]
            if _is_lattice(le):
                yield tuple(tuple(r) for r in le)
            return
        for mask in range(1 << i):
            if closed(mask):
                downs[i] = mask
                yield from rec(i + 1)
        downs[i] = 0

    yield from rec(0)


def _is_lattice(le) -> bool:
    n = len(le)
    for x in range(n):
        for y in range(x + 1, n):
            ub = [z for z in range(n) if le[x][z] and le[y][z]]
            if not any(all(le[z][w] for w in ub) for z in ub):
                return False
            lb = [z for z in range(n) if le[z][x] and le[z][y]]
            if not any(all(le[w][z] for w in lb) for z in lb):
                return False
    return True


def _canonical(le) -> tuple:
    """Lexicographically least relabeling, permuting only within classes of
    equal (lower-set size, upper-set size)."""
    n = len(le)
    key = [
        (sum(le[x][y] for x in range(n)), sum(le[y][x] for x in range(n)))
        for y in range(n)
    ]
    buckets: dict = defaultdict(list)
    for v, k in enumerate(key):
        buckets[k].append(v)
    order = sorted(buckets)
    best = None
    for perm_parts in itertools.product(
        *(itertools.permutations(buckets[k]) for k in order)
    ):
        assign = {}
        pos = 0
        for k, part in zip(order, perm_parts):
            for v in part:
                assign[v] = pos
                pos += 1
        mat = tuple(
            tuple(le[x][y] for y in sorted(range(n), key=lambda v: assign[v]))
            for x in sorted(range(n), key=lambda v: assign[v])
        )
        if best is None or mat < best:
            best = mat
    return best


def count_lattices(n: int) -> int:
    """Isomorphism classes of n-element lattices, the slow way."""
    return len({_canonical(le) for le in labeled_lattice_posets(n)})


def set_partitions(elems):
    elems = list(elems)
    if not elems:
        yield []
        return
    head, rest = elems[0], elems[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[head] + smaller[i]] + smaller[i + 1 :]
        yield [[head]] + smaller


def congruence_partitions(L) -> set[frozenset[frozenset[int]]]:
    """All congruences of L as block partitions, by filtering every set
    partition for compatibility with the tables."""
    jn, mt = L.join_rows, L.meet_rows
    out = set()
    for blocks in set_partitions(range(L.n)):
        rep = {}
        for b in blocks:
            for x in b:
                rep[x] = min(b)
        ok = True
        for b in blocks:
            for x in b:
                for y in b:
                    if any(
                        rep[jn[x][z]] != rep[jn[y][z]] or rep[mt[x][z]] != rep[mt[y][z]]
                        for z in range(L.n)
                    ):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.add(frozenset(frozenset(b) for b in blocks))
    return out


def refinement_holds(S) -> bool:
    """Quadruple-loop refinement check: every a0 + a1 = b0 + b1 admits a
    full 2x2 interpolation matrix."""
    n, j = S.n, S.join_rows
    rng = range(n)
    for a0 in rng:
        for a1 in rng:
            e = j[a0][a1]
            for b0 in rng:
                for b1 in rng:
                    if j[b0][b1] != e:
                        continue
                    if not any(
                        j[c00][c01] == a0
                        and j[c10][c11] == a1
                        and j[c00][c10] == b0
                        and j[c01][c11] == b1
                        for c00 in rng
                        for c01 in rng
                        for c10 in rng
                        for c11 in rng
                    ):
                        return False
    return True


def additive_subgroups(R) -> list[frozenset[int]]:
    """Every additive subgroup, grown one generator at a time."""
    add = R.add

    def close(gens: frozenset[int]) -> frozenset[int]:
        group = {R.zero}
        work = list(gens)
        while work:
            g = work.pop()
            if g in group:
                continue
            group.add(g)
            for h in list(group):
                s = add[g][h]
                if s not in group:
                    work.append(s)
        return frozenset(group)

    found = {frozenset({R.zero})}
    work = [frozenset({R.zero})]
    while work:
        g = work.pop()
        for x in range(R.n):
            bigger = close(g | {x})
            if bigger not in found:
                found.add(bigger)
                work.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def two_sided_ideal_sets(R) -> list[frozenset[int]]:
    """Two-sided ideals by scanning every additive subgroup."""
    mul = R.mul
    return [
        g
        for g in additive_subgroups(R)
        if all(mul[r][x] in g and mul[x][r] in g for x in g for r in range(R.n))
    ]


def all_lattice_homs(K, L) -> list[tuple[int, ...]]:
    """Join-and-meet preserving maps by scanning every function."""
    jnK, mtK = K.join_rows, K.meet_rows
    jnL, mtL = L.join_rows, L.meet_rows
    out = []
    for f in itertools.product(range(L.n), repeat=K.n):
        if all(
            f[jnK[x][y]] == jnL[f[x]][f[y]] and f[mtK[x][y]] == mtL[f[x]][f[y]]
            for x in range(K.n)
            for y in range(K.n)
        ):
            out.append(f)
    return out


def all_semilattice_homs(S, T) -> list[tuple[int, ...]]:
    jS, jT = S.join_rows, T.join_rows
    out = []
    for f in itertools.product(range(T.n), repeat=S.n):
        if all(
            f[jS[x][y]] == jT[f[x]][f[y]] for x in range(S.n) for y in range(S.n)
        ):
            out.append(f)
    return out

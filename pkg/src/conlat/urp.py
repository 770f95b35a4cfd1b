"""The uniform refinement property (URP) for finite join-semilattices.

An instance at e is a finite family of pairs (a_i, b_i) with a_i + b_i = e.
A witness consists of elements a*_i <= a_i, b*_i <= b_i and a matrix c_ij
such that

  (i)   a*_i + b*_i = e,
  (ii)  c_ij <= a*_i, c_ij <= b*_j, and a*_i <= a*_j + c_ij,
  (iii) c_ik <= c_ij + c_jk.

URP holds at e if every instance at e has a witness.  Because a witness for
the set of all pairs (a, b) with a + b = e transfers to an arbitrary family
by reindexing (pure substitution, no semilattice theory), deciding URP at e
reduces to the single canonical pair-set instance; the search itself stays
literal, with no internal deduplication, so that reduction remains testable.

The searcher first tries the greedy witness (a*, b*) = (a, b) with c_ij the
greatest common lower bound of (a_i, b_j); in a distributive lattice this
always validates.  Otherwise it backtracks exhaustively: pair choices first
with pairwise feasibility pruning of clause (ii), then matrix cells with
incremental checks of clause (iii).  A node budget bounds the search; hitting
it raises instead of reporting a false negative.

Also here: combination of URP witnesses across joins, transfer of URP along
weakly distributive maps, and the direct witness construction in Con L for a
congruence-splitting lattice L.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .congruence import con_lattice
from .lattice import FiniteLattice, _bits
from .semilattice import (
    FiniteJoinSemilattice,
    InvalidInputWitness,
    SemilatticeHom,
    has_refinement_property,
    is_weakly_distributive,
    is_weakly_distributive_at,
    refinement_square,
)

DEFAULT_SEARCH_BUDGET = 10_000_000


class IndexMismatch(ValueError):
    """Witness shape does not match the instance's index set."""


class SearchBudgetExceeded(RuntimeError):
    """The witness search ran out of nodes; existence remains undecided."""


class NotDistributive(ValueError):
    """The semilattice lacks the refinement property required here."""


class BadDecomposition(ValueError):
    """Supplied decompositions do not recompose to the stated instance."""


class NotWeaklyDistributive(ValueError):
    """The map is not weakly distributive."""


class NoSourceWitness(ValueError):
    """URP fails at the source element, so nothing can be transferred."""


class NotSplitting(ValueError):
    """A congruence-splitting instance has no splitting witness."""


class PreconditionFail(ValueError):
    """The supplied square does not satisfy its defining equations."""


@dataclass(frozen=True)
class UrpInstance:
    """A URP instance: pairs (a_i, b_i) joining to e."""

    S: FiniteJoinSemilattice
    e: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        j = self.S.join_rows
        for a, b in self.pairs:
            if j[a][b] != self.e:
                raise ValueError(f"pair ({a}, {b}) does not join to {self.e}")

    def to_json(self) -> dict:
        return {"e": self.e, "pairs": [list(p) for p in self.pairs]}


@dataclass(frozen=True)
class UrpWitness:
    astar: tuple[int, ...]
    bstar: tuple[int, ...]
    c: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "astar": list(self.astar),
            "bstar": list(self.bstar),
            "c": [list(r) for r in self.c],
        }


@dataclass(frozen=True)
class UrpVerification:
    ok: bool
    clause: str | None = None
    indices: tuple[int, ...] | None = None


def verify_urp_witness(inst: UrpInstance, w: UrpWitness) -> UrpVerification:
    """Check clauses (i)-(iii); reports the first violated clause."""
    m = len(inst.pairs)
    if len(w.astar) != m or len(w.bstar) != m or len(w.c) != m or any(
        len(row) != m for row in w.c
    ):
        raise IndexMismatch("witness arrays do not match the instance size")
    S = inst.S
    j = S.join_rows
    le = S.le
    for i, (a, b) in enumerate(inst.pairs):
        if not le(w.astar[i], a):
            return UrpVerification(False, "i-a", (i,))
        if not le(w.bstar[i], b):
            return UrpVerification(False, "i-b", (i,))
        if j[w.astar[i]][w.bstar[i]] != inst.e:
            return UrpVerification(False, "i-sum", (i,))
    astar, bstar, c = w.astar, w.bstar, w.c
    for i in range(m):
        ci, ai = c[i], astar[i]
        for k in range(m):
            v = ci[k]
            if not le(v, ai):
                return UrpVerification(False, "ii-ca", (i, k))
            if not le(v, bstar[k]):
                return UrpVerification(False, "ii-cb", (i, k))
            if not le(ai, j[astar[k]][v]):
                return UrpVerification(False, "ii-tri", (i, k))
    for i in range(m):
        ci = c[i]
        for jx in range(m):
            cij = ci[jx]
            cj = c[jx]
            for k in range(m):
                if not le(ci[k], j[cij][cj[k]]):
                    return UrpVerification(False, "iii", (i, jx, k))
    return UrpVerification(True)


def canonical_instance(S: FiniteJoinSemilattice, e: int) -> UrpInstance:
    """The pair-set instance at e: every (a, b) with a + b = e, listed once."""
    return UrpInstance(S, e, tuple(sorted(S.decompositions(e))))


def _greedy_witness(inst: UrpInstance, tick: "_Budget") -> UrpWitness | None:
    S, m = inst.S, len(inst.pairs)
    c: list[list[int]] = []
    for i in range(m):
        row = []
        for k in range(m):
            tick.spend()
            pm = S.pseudo_meet(inst.pairs[i][0], inst.pairs[k][1])
            if pm is None:
                return None
            row.append(pm)
        c.append(row)
    w = UrpWitness(
        tuple(a for a, _ in inst.pairs),
        tuple(b for _, b in inst.pairs),
        tuple(tuple(r) for r in c),
    )
    return w if verify_urp_witness(inst, w).ok else None


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget: int):
        self.left = budget

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise SearchBudgetExceeded("witness search exceeded its node budget")


def search_urp_witness(
    inst: UrpInstance, budget: int | None = None
) -> UrpWitness | None:
    """Complete backtracking search for a URP witness.

    Returns None only after exhausting the space, so a None answer is a
    proof that no witness exists.  Duplicate pairs in the instance are kept
    as distinct indices on purpose.
    """
    if budget is None:
        budget = DEFAULT_SEARCH_BUDGET
    m = len(inst.pairs)
    if m == 0:
        return UrpWitness((), (), ())
    tick = _Budget(budget)
    greedy = _greedy_witness(inst, tick)
    if greedy is not None:
        return greedy
    S = inst.S
    j = S.join_rows
    down = S.down_bits

    # candidate (a*, b*) per index: the pair itself first, then smaller ones
    pair_cands: list[list[tuple[int, int]]] = []
    for a, b in inst.pairs:
        cands = [
            (x, y)
            for x in _bits(down[a])
            for y in _bits(down[b])
            if j[x][y] == inst.e
        ]
        cands.sort(
            key=lambda p: (
                p != (a, b),
                -(down[p[0]].bit_count() + down[p[1]].bit_count()),
                p,
            )
        )
        pair_cands.append(cands)

    def cell_cands(ai: int, bk: int, ak: int, diagonal: bool) -> list[int]:
        # clause (ii) filtered candidates for c_ik given a*_i = ai, b*_k = bk,
        # a*_k = ak; small first on the diagonal, large first off it
        out = [v for v in _bits(down[ai] & down[bk]) if S.le(ai, j[ak][v])]
        out.sort(key=lambda v: down[v].bit_count() if diagonal else -down[v].bit_count())
        return out

    chosen: list[tuple[int, int]] = [(-1, -1)] * m

    def feasible_with(i: int) -> bool:
        ai, bi = chosen[i]
        for k in range(i + 1):
            ak, bk = chosen[k]
            if not cell_cands(ai, bk, ak, i == k):
                return False
            if k != i and not cell_cands(ak, bi, ai, False):
                return False
        return True

    c: list[list[int]] = [[-1] * m for _ in range(m)]

    def iii_ok(i: int, k: int) -> bool:
        v = c[i][k]
        for t in range(m):
            vit, vtk = c[i][t], c[t][k]
            if vit >= 0 and vtk >= 0 and not S.le(v, j[vit][vtk]):
                return False
            vkt = c[k][t]
            vit2 = c[i][t]
            if vkt >= 0 and vit2 >= 0 and not S.le(vit2, j[v][vkt]):
                return False
            vti = c[t][i]
            vtk2 = c[t][k]
            if vti >= 0 and vtk2 >= 0 and not S.le(vtk2, j[vti][v]):
                return False
        return True

    def fill_cells(cells: list[tuple[int, int]], pos: int) -> bool:
        if pos == len(cells):
            return True
        i, k = cells[pos]
        ai, _ = chosen[i]
        ak, bk = chosen[k]
        for v in cell_cands(ai, bk, ak, i == k):
            tick.spend()
            c[i][k] = v
            if iii_ok(i, k) and fill_cells(cells, pos + 1):
                return True
        c[i][k] = -1
        return False

    def assign_pairs(i: int) -> bool:
        if i == m:
            cells = [(x, y) for x in range(m) for y in range(m)]
            cells.sort(
                key=lambda cell: len(
                    cell_cands(
                        chosen[cell[0]][0],
                        chosen[cell[1]][1],
                        chosen[cell[1]][0],
                        cell[0] == cell[1],
                    )
                )
            )
            for row in c:
                for t in range(m):
                    row[t] = -1
            return fill_cells(cells, 0)
        for cand in pair_cands[i]:
            tick.spend()
            chosen[i] = cand
            if feasible_with(i) and assign_pairs(i + 1):
                return True
        chosen[i] = (-1, -1)
        return False

    if assign_pairs(0):
        w = UrpWitness(
            tuple(a for a, _ in chosen),
            tuple(b for _, b in chosen),
            tuple(tuple(row) for row in c),
        )
        check = verify_urp_witness(inst, w)
        if not check.ok:
            raise AssertionError(f"search produced an invalid witness: {check}")
        return w
    return None


def holds_urp_at(
    S: FiniteJoinSemilattice, e: int, budget: int | None = None
) -> bool:
    """Decide URP at e via the canonical pair-set instance."""
    return search_urp_witness(canonical_instance(S, e), budget) is not None


def satisfies_urp(S: FiniteJoinSemilattice, budget: int | None = None) -> bool:
    """URP at every element of S."""
    return all(holds_urp_at(S, e, budget) for e in range(S.n))


# -- closure under joins ---------------------------------------------------------


def refine_instance(
    combined: UrpInstance, e0: int, e1: int
) -> tuple[UrpInstance, UrpInstance]:
    """Split an instance at e = e0 + e1 into instances at e0 and at e1, via
    refinement squares of a_i + b_i = e0 + e1.  Requires the refinement
    property on the relevant equations."""
    S = combined.S
    if S.join_rows[e0][e1] != combined.e:
        raise BadDecomposition(f"{e0} + {e1} != {combined.e}")
    p0, p1 = [], []
    for a, b in combined.pairs:
        sq = refinement_square(S, a, b, e0, e1)
        if sq is None:
            raise NotDistributive(f"no refinement square for ({a}, {b}) vs ({e0}, {e1})")
        p0.append((sq.c00, sq.c10))
        p1.append((sq.c01, sq.c11))
    return UrpInstance(S, e0, tuple(p0)), UrpInstance(S, e1, tuple(p1))


def urp_join_combine(
    combined: UrpInstance,
    split0: UrpInstance,
    split1: UrpInstance,
    w0: UrpWitness,
    w1: UrpWitness,
) -> UrpWitness:
    """Combine URP witnesses at e0 and e1 into one at e0 + e1.

    The split instances must decompose the combined one pairwise:
    a_i = a0_i + a1_i and b_i = b0_i + b1_i.  The combined witness is the
    pairwise join of the split witnesses; its validity is rechecked."""
    S = combined.S
    if not has_refinement_property(S).holds:
        raise NotDistributive("semilattice lacks the refinement property")
    m = len(combined.pairs)
    if len(split0.pairs) != m or len(split1.pairs) != m:
        raise BadDecomposition("split instances have a different index set")
    j = S.join_rows
    if j[split0.e][split1.e] != combined.e:
        raise BadDecomposition("split targets do not join to the combined target")
    for i in range(m):
        if j[split0.pairs[i][0]][split1.pairs[i][0]] != combined.pairs[i][0]:
            raise BadDecomposition(f"a-components at index {i} do not recompose")
        if j[split0.pairs[i][1]][split1.pairs[i][1]] != combined.pairs[i][1]:
            raise BadDecomposition(f"b-components at index {i} do not recompose")
    if not verify_urp_witness(split0, w0).ok or not verify_urp_witness(split1, w1).ok:
        raise InvalidInputWitness("a split witness fails its defining conditions")
    out = UrpWitness(
        tuple(j[w0.astar[i]][w1.astar[i]] for i in range(m)),
        tuple(j[w0.bstar[i]][w1.bstar[i]] for i in range(m)),
        tuple(
            tuple(j[w0.c[i][k]][w1.c[i][k]] for k in range(m)) for i in range(m)
        ),
    )
    check = verify_urp_witness(combined, out)
    if not check.ok:
        raise AssertionError(f"combined URP witness is invalid: {check}")
    return out


# -- transfer along weakly distributive maps ---------------------------------------


def urp_transfer(
    h: SemilatticeHom, u: int, inst: UrpInstance, budget: int | None = None
) -> UrpWitness:
    """Transfer URP from u through a weakly distributive map to f(u).

    Each pair of the target instance is pulled back through a
    weak-distributivity witness at u, a URP witness is searched for the
    pulled-back instance, and its image is a witness for the original."""
    if inst.S is not h.target:
        raise ValueError("instance does not live in the target of h")
    if not is_weakly_distributive(h):
        raise NotWeaklyDistributive("map is not weakly distributive")
    f = h.map
    if inst.e != f[u]:
        raise ValueError(f"instance target {inst.e} differs from f(u) = {f[u]}")
    wd = is_weakly_distributive_at(h, u)
    pulled = tuple(wd.witness.table[(y, z)] for y, z in inst.pairs)
    source_inst = UrpInstance(h.source, u, pulled)
    w = search_urp_witness(source_inst, budget)
    if w is None:
        raise NoSourceWitness(f"URP fails at source element {u}")
    m = len(inst.pairs)
    out = UrpWitness(
        tuple(f[w.astar[i]] for i in range(m)),
        tuple(f[w.bstar[i]] for i in range(m)),
        tuple(tuple(f[w.c[i][k]] for k in range(m)) for i in range(m)),
    )
    check = verify_urp_witness(inst, out)
    if not check.ok:
        raise AssertionError(f"transferred URP witness is invalid: {check}")
    return out


# -- congruence lattices of congruence-splitting lattices ----------------------------


def csurp_witness(
    L: FiniteLattice, u: int, v: int, families: Sequence[tuple[int, int]]
) -> UrpWitness:
    """A URP witness in Con L at Theta(u, v) for a family of congruence
    pairs (alpha_i, beta_i) with alpha_i v beta_i = Theta(u, v), built from
    congruence-splitting witnesses rather than searched.

    Splitting (alpha_i, beta_i) yields s_i, t_i in [u, v] with s_i v t_i = v,
    Theta(u, s_i) <= alpha_i, Theta(u, t_i) <= beta_i; the witness is
    a*_i = Theta(u, s_i), b*_i = Theta(u, t_i), c_ij = Theta(s_j, s_i v s_j).
    Indices refer to con_lattice(L) order."""
    from .splitting import SplitInstance, splitting_witness

    con = con_lattice(L)
    jn = con.as_lattice.join_rows
    pc = con.principal
    if not L.leq[u, v]:
        raise ValueError(f"{u} is not below {v}")
    eps = pc[u][v]
    for ai, bi in families:
        if jn[ai][bi] != eps:
            raise ValueError("family pair does not join to Theta(u, v)")
    s, t = [], []
    for ai, bi in families:
        w = splitting_witness(
            SplitInstance(L, u, v, con.congruences[ai], con.congruences[bi])
        )
        if w is None:
            raise NotSplitting(f"no splitting witness for family pair ({ai}, {bi})")
        s.append(w[0])
        t.append(w[1])
    jn_l = L.join_rows
    m = len(families)
    out = UrpWitness(
        tuple(pc[u][si] for si in s),
        tuple(pc[u][ti] for ti in t),
        tuple(
            tuple(pc[s[k]][jn_l[s[i]][s[k]]] for k in range(m)) for i in range(m)
        ),
    )
    inst = UrpInstance(con.as_semilattice, eps, tuple(families))
    check = verify_urp_witness(inst, out)
    if not check.ok:
        raise AssertionError(f"congruence-splitting URP witness is invalid: {check}")
    return out


def check_refinement_square_consequence(sq, S: FiniteJoinSemilattice) -> bool:
    """For a valid refinement square, a0 <= b0 + c01 (and this always holds:
    a0 = c00 + c01 <= (c00 + c10) + c01 = b0 + c01)."""
    if not sq.satisfied_in(S):
        raise PreconditionFail("square does not satisfy its defining equations")
    return S.le(sq.a0, S.join_rows[sq.b0][sq.c01])

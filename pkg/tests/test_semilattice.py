"""Join-semilattices, refinement, weak distributivity, and the join combinator."""
from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conlat import (
    FiniteJoinSemilattice,
    FiniteLattice,
    InvalidInputWitness,
    SemilatticeHom,
    TargetNotDistributive,
    WdWitness,
    chain,
    check_semilattice_hom,
    con_lattice,
    enumerate_lattices,
    enumerate_semilattice_homs,
    has_refinement_property,
    is_distributive,
    is_weakly_distributive,
    is_weakly_distributive_at,
    m3,
    refinement_square,
    wd_join_combine,
    weakly_distributive_points,
)
from oracles import all_semilattice_homs, refinement_holds

SMALL = [FiniteJoinSemilattice.from_lattice(L) for L in enumerate_lattices(5)]

semilattices = st.sampled_from(SMALL)


@st.composite
def semilattice_with_elements(draw, k: int = 3):
    S = draw(semilattices)
    xs = [draw(st.integers(min_value=0, max_value=S.n - 1)) for _ in range(k)]
    return (S, *xs)


def fjs(L) -> FiniteJoinSemilattice:
    return FiniteJoinSemilattice.from_lattice(L)


# ---------------------------------------------------------------------------
# construction and table laws


def test_bad_tables_rejected():
    with pytest.raises(ValueError):
        FiniteJoinSemilattice([[0, 1], [0, 1]])  # not commutative
    with pytest.raises(ValueError):
        FiniteJoinSemilattice([[1, 1], [1, 1]])  # not idempotent


@given(semilattice_with_elements())
@settings(max_examples=100, deadline=None)
def test_join_laws(case):
    S, x, y, z = case
    assert S.join_of(x, y) == S.join_of(y, x)
    assert S.join_of(x, x) == x
    assert S.join_of(S.join_of(x, y), z) == S.join_of(x, S.join_of(y, z))


@given(semilattice_with_elements(k=2))
@settings(max_examples=60, deadline=None)
def test_leq_derived_from_join(case):
    S, x, y = case
    assert S.le(x, y) == (S.join_of(x, y) == y)


# ---------------------------------------------------------------------------
# refinement property


def test_chains_have_refinement():
    for n in range(1, 6):
        assert has_refinement_property(fjs(chain(n))).holds


def test_m3_fails_refinement():
    S = fjs(m3())
    res = has_refinement_property(S)
    assert not res.holds
    a0, a1, b0, b1 = res.counterexample
    assert S.join_of(a0, a1) == S.join_of(b0, b1)
    assert refinement_square(S, a0, a1, b0, b1) is None
    # the classic failure: two equal joins of distinct atom pairs
    assert refinement_square(S, 1, 2, 1, 3) is None


def test_distributive_lattices_refine_by_meets(corpus5):
    for L in corpus5:
        if not is_distributive(L):
            continue
        S = fjs(L)
        res = has_refinement_property(S)
        assert res.holds
        for x0, x1 in itertools.product(range(L.n), repeat=2):
            for y0 in range(L.n):
                e = L.join_of(x0, x1)
                for y1 in range(L.n):
                    if L.join_of(y0, y1) != e:
                        continue
                    # meets refine the equation directly
                    c = [[L.meet_of(a, b) for b in (y0, y1)] for a in (x0, x1)]
                    assert L.join_of(c[0][0], c[0][1]) == x0
                    assert L.join_of(c[1][0], c[1][1]) == x1
                    assert L.join_of(c[0][0], c[1][0]) == y0
                    assert L.join_of(c[0][1], c[1][1]) == y1


def test_refinement_squares_returned_are_valid(corpus5):
    for L in corpus5:
        S = fjs(L)
        res = has_refinement_property(S)
        if not res.holds:
            continue
        for (a0, a1, b0, b1), sq in res.squares.items():
            assert S.join_of(sq.c00, sq.c01) == a0
            assert S.join_of(sq.c10, sq.c11) == a1
            assert S.join_of(sq.c00, sq.c10) == b0
            assert S.join_of(sq.c01, sq.c11) == b1


def test_refinement_agrees_with_oracle(corpus6):
    for L in corpus6:
        S = fjs(L)
        assert has_refinement_property(S).holds == refinement_holds(S)


def test_con_semilattices_refine(corpus5):
    for L in corpus5:
        assert has_refinement_property(con_lattice(L).as_semilattice).holds


# ---------------------------------------------------------------------------
# homomorphisms


def test_enumerate_homs_agrees_with_oracle():
    for S, T in [(fjs(chain(2)), fjs(chain(3))), (fjs(chain(3)), fjs(m3()))]:
        got = {h.map for h in enumerate_semilattice_homs(S, T)}
        assert got == set(all_semilattice_homs(S, T))


def test_check_hom():
    S = fjs(chain(3))
    assert check_semilattice_hom(SemilatticeHom(S, S, (0, 1, 2)))
    assert not check_semilattice_hom(SemilatticeHom(S, S, (2, 1, 0)))


# ---------------------------------------------------------------------------
# weak distributivity


def test_identity_weakly_distributive():
    for S in SMALL:
        h = SemilatticeHom(S, S, tuple(range(S.n)))
        assert is_weakly_distributive(h)
        assert weakly_distributive_points(h) == list(range(S.n))


def test_identity_witness_echoes_decomposition():
    S = fjs(m3())
    res = is_weakly_distributive_at(SemilatticeHom(S, S, tuple(range(S.n))), 4)
    assert res.holds
    for (y0, y1), (x0, x1) in res.witness.table.items():
        assert S.join_of(x0, x1) == 4
        assert S.le(res.witness.hom.map[x0], y0)
        assert S.le(res.witness.hom.map[x1], y1)


def test_constant_to_bottom_weakly_distributive():
    S, T = fjs(m3()), fjs(chain(3))
    h = SemilatticeHom(S, T, (0,) * S.n)
    assert is_weakly_distributive(h)


def test_join_irreducible_image_trivial_split():
    # if every decomposition of f(u) keeps one side above f(u), splitting
    # u as u + u works
    S, T = fjs(chain(3)), fjs(chain(3))
    h = SemilatticeHom(S, T, (0, 1, 2))
    res = is_weakly_distributive_at(h, 2)
    assert res.holds


def test_non_wd_hom_detected():
    # collapse a three-chain onto {0, a, top} of the square: the decomposition
    # top = a + b in the image has no preimage split
    S = fjs(chain(3))
    T = fjs(FiniteLattice.from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)]))
    h = SemilatticeHom(S, T, (0, 1, 3))
    assert check_semilattice_hom(h)
    res = is_weakly_distributive_at(h, 2)
    assert not res.holds
    y0, y1 = res.failure
    assert T.join_of(y0, y1) == 3


def test_composition_of_wd_maps_is_wd():
    # exhaustive over small hom triples
    trip = [fjs(chain(2)), fjs(chain(3)), fjs(chain(2))]
    S, T, U = trip
    for f in enumerate_semilattice_homs(S, T):
        if not is_weakly_distributive(f):
            continue
        for g in enumerate_semilattice_homs(T, U):
            if not is_weakly_distributive(g):
                continue
            comp = SemilatticeHom(S, U, tuple(g.map[f.map[x]] for x in range(S.n)))
            assert is_weakly_distributive(comp)


# ---------------------------------------------------------------------------
# the join combinator


def test_combine_idempotent():
    S = fjs(chain(4))
    h = SemilatticeHom(S, S, (0, 1, 2, 3))
    w = is_weakly_distributive_at(h, 2).witness
    out = wd_join_combine(h, 2, 2, w, w)
    assert out.u == 2
    check = is_weakly_distributive_at(h, 2)
    for (y0, y1), (x0, x1) in out.table.items():
        assert S.join_of(x0, x1) == 2
        assert S.le(h.map[x0], y0) and S.le(h.map[x1], y1)
    assert check.holds


def test_combine_identity_hom():
    S = fjs(chain(4))
    h = SemilatticeHom(S, S, (0, 1, 2, 3))
    w1 = is_weakly_distributive_at(h, 1).witness
    w3 = is_weakly_distributive_at(h, 3).witness
    out = wd_join_combine(h, 1, 3, w1, w3)
    assert out.u == 3
    for (y0, y1), (x0, x1) in out.table.items():
        assert S.join_of(x0, x1) == 3
        assert S.le(h.map[x0], y0) and S.le(h.map[x1], y1)


def test_combine_randomized(corpus5):
    rng = random.Random(7)
    dist = [fjs(L) for L in corpus5 if is_distributive(L)]
    for _ in range(300):
        T = rng.choice(dist)
        S = rng.choice(dist)
        homs = list(enumerate_semilattice_homs(S, T))
        h = rng.choice(homs)
        if not is_weakly_distributive(h):
            continue
        u0 = rng.randrange(S.n)
        u1 = rng.randrange(S.n)
        w0 = is_weakly_distributive_at(h, u0).witness
        w1 = is_weakly_distributive_at(h, u1).witness
        out = wd_join_combine(h, u0, u1, w0, w1)
        u = S.join_of(u0, u1)
        assert out.u == u
        for (y0, y1), (x0, x1) in out.table.items():
            assert S.join_of(x0, x1) == u
            assert T.le(h.map[x0], y0) and T.le(h.map[x1], y1)
        # table must cover every decomposition of h(u)
        fu = h.map[u]
        decomps = {
            (y0, y1)
            for y0 in range(T.n)
            for y1 in range(T.n)
            if T.join_of(y0, y1) == fu
        }
        assert decomps <= set(out.table)


def test_combine_rejects_non_distributive_target():
    S = fjs(m3())
    h = SemilatticeHom(S, S, tuple(range(S.n)))
    w = is_weakly_distributive_at(h, 1).witness
    with pytest.raises(TargetNotDistributive):
        wd_join_combine(h, 1, 1, w, w)


def test_combine_rejects_invalid_witness():
    S = fjs(chain(3))
    h = SemilatticeHom(S, S, (0, 1, 2))
    w1 = is_weakly_distributive_at(h, 1).witness
    w2 = is_weakly_distributive_at(h, 2).witness
    bad = WdWitness(hom=h, u=1, table={k: (2, 2) for k in w1.table})
    with pytest.raises(InvalidInputWitness):
        wd_join_combine(h, 1, 2, bad, w2)

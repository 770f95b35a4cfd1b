"""Core lattice representation, predicates, homs, and enumeration."""
from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conlat import (
    BoundExceeded,
    CyclicCovers,
    FiniteLattice,
    IndexOutOfRange,
    LatticeHom,
    NotALattice,
    NotComparable,
    are_perspective,
    canonical_form,
    chain,
    check_hom,
    enumerate_lattices,
    has_convex_range,
    interval,
    is_atomistic,
    is_isomorphic,
    is_modular,
    is_relatively_complemented,
    is_sectionally_complemented,
    m3,
    n5,
)
from oracles import count_lattices

# Small corpus materialized at import time for hypothesis strategies.
SMALL = list(enumerate_lattices(5))

lattices = st.sampled_from(SMALL)


@st.composite
def relabelings(draw):
    L = draw(lattices)
    perm = draw(st.permutations(range(L.n)))
    return L, tuple(perm)


def b2() -> FiniteLattice:
    return FiniteLattice.from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def permuted(L: FiniteLattice, perm: tuple[int, ...]) -> FiniteLattice:
    covers = [(perm[x], perm[y]) for x, y in L.covers()]
    return FiniteLattice.from_covers(L.n, covers)


# ---------------------------------------------------------------------------
# from_covers


def test_from_covers_two_chain():
    L = FiniteLattice.from_covers(2, [(0, 1)])
    assert L.n == 2
    assert L.join_of(0, 1) == 1
    assert L.meet_of(0, 1) == 0


def test_from_covers_pentagon_is_valid():
    L = FiniteLattice.from_covers(5, [(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)])
    # every pair must have a unique least upper bound and greatest lower bound
    for x, y in itertools.product(range(5), repeat=2):
        ubs = [z for z in range(5) if L.le(x, z) and L.le(y, z)]
        least = [u for u in ubs if all(L.le(u, w) for w in ubs)]
        assert len(least) == 1 and least[0] == L.join_of(x, y)
        lbs = [z for z in range(5) if L.le(z, x) and L.le(z, y)]
        greatest = [u for u in lbs if all(L.le(w, u) for w in lbs)]
        assert len(greatest) == 1 and greatest[0] == L.meet_of(x, y)
    assert is_isomorphic(L, n5())


def test_from_covers_missing_top_rejected():
    # 1 and 2 are maximal but incomparable: no least upper bound
    with pytest.raises(NotALattice):
        FiniteLattice.from_covers(4, [(0, 1), (0, 2)])


def test_from_covers_cycle_rejected():
    with pytest.raises(CyclicCovers):
        FiniteLattice.from_covers(3, [(0, 1), (1, 2), (2, 0)])


def test_from_covers_bad_index_rejected():
    with pytest.raises(IndexOutOfRange):
        FiniteLattice.from_covers(2, [(0, 5)])


# ---------------------------------------------------------------------------
# structural predicates


def test_atomistic_examples():
    assert is_atomistic(chain(2))
    assert is_atomistic(m3())
    assert not is_atomistic(n5())


def test_complementation_and_modularity_triples():
    M = m3()
    assert is_sectionally_complemented(M)
    assert is_relatively_complemented(M)
    assert is_modular(M)
    N = n5()
    assert not is_sectionally_complemented(N)
    assert not is_relatively_complemented(N)
    assert not is_modular(N)


def test_chains_not_sectionally_complemented():
    # the middle element of [0, top] has no complement
    for n in (3, 4, 5):
        assert not is_sectionally_complemented(chain(n))


# ---------------------------------------------------------------------------
# perspectivity


def test_perspective_reflexive_and_symmetric(corpus5):
    for L in corpus5:
        for x in range(L.n):
            assert are_perspective(L, x, x)  # axis = bottom
        for x, y in itertools.combinations(range(L.n), 2):
            assert are_perspective(L, x, y) == are_perspective(L, y, x)


def test_perspective_m3_atoms():
    M = m3()
    # the third atom is a common axis for any two distinct atoms
    assert are_perspective(M, 1, 2)
    assert are_perspective(M, 1, 3)
    assert are_perspective(M, 2, 3)


def test_perspective_b2_atoms_fail():
    # in the 2x2 Boolean lattice no single axis works for the two atoms:
    # z must meet both atoms at 0 (so z in {0, other atom}) yet join them
    # equally, and no choice does both
    B = b2()
    assert not are_perspective(B, 1, 2)


# ---------------------------------------------------------------------------
# intervals


def test_interval_singleton():
    L = n5()
    for x in range(L.n):
        assert interval(L, x, x).lattice.n == 1


def test_interval_n5_lower_edge_is_three_chain():
    # [0, b] in the pentagon picks up the long side {0, a, b}
    iv = interval(n5(), 0, 2)
    assert is_isomorphic(iv.lattice, chain(3))
    assert iv.to_host == (0, 1, 2)


def test_interval_full_is_identity(corpus5):
    for L in corpus5:
        iv = interval(L, L.bottom, L.top)
        assert iv.to_host == tuple(range(L.n))
        assert is_isomorphic(iv.lattice, L)


def test_interval_incomparable_rejected():
    with pytest.raises(NotComparable):
        interval(n5(), 1, 3)


# ---------------------------------------------------------------------------
# homomorphisms


def test_identity_hom_convex(corpus5):
    for L in corpus5:
        h = LatticeHom(L, L, tuple(range(L.n)))
        assert check_hom(h)
        assert has_convex_range(h)


def test_bottom_top_embedding_not_convex():
    h = LatticeHom(chain(2), chain(3), (0, 2))
    assert check_hom(h)
    assert not has_convex_range(h)


def test_bottom_atom_embedding_convex():
    h = LatticeHom(chain(2), chain(3), (0, 1))
    assert check_hom(h)
    assert has_convex_range(h)


def test_check_hom_rejects_non_hom():
    B = b2()
    # projection onto one coordinate of the square is a hom
    h = LatticeHom(B, chain(2), (0, 1, 0, 1))
    assert check_hom(h)
    # sending both atoms up but top down is join-broken
    bad = LatticeHom(B, chain(2), (0, 1, 1, 0))
    assert not check_hom(bad)


# ---------------------------------------------------------------------------
# enumeration and canonical forms


def test_enumeration_counts_small():
    per_size = {n: 0 for n in range(1, 7)}
    for L in enumerate_lattices(6):
        per_size[L.n] += 1
    assert [per_size[n] for n in range(1, 7)] == [1, 1, 1, 2, 5, 15]


def test_enumeration_agrees_with_oracle_small():
    for n in range(1, 6):
        live = sum(1 for L in enumerate_lattices(n) if L.n == n)
        assert live == count_lattices(n)


def test_single_lattice_of_size_one():
    ls = [L for L in enumerate_lattices(1)]
    assert len(ls) == 1 and ls[0].n == 1


def test_size_five_three_atoms_height_two_is_m3(corpus5):
    found = [
        L for L in corpus5 if L.n == 5 and len(L.atoms) == 3 and L.height == 2
    ]
    assert len(found) == 1
    assert is_isomorphic(found[0], m3())


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        list(enumerate_lattices(9))


def test_canonical_codes_distinct_n5_m3():
    assert canonical_form(n5()) != canonical_form(m3())


def test_canonical_codes_size_four():
    codes = {canonical_form(L) for L in enumerate_lattices(4) if L.n == 4}
    assert len(codes) == 2


def test_no_two_yields_share_a_code(corpus6):
    codes = [canonical_form(L) for L in corpus6]
    assert len(codes) == len(set(codes))


@given(relabelings())
@settings(max_examples=60, deadline=None)
def test_canonical_form_relabeling_invariant(case):
    L, perm = case
    assert canonical_form(permuted(L, perm)) == canonical_form(L)


@given(relabelings())
@settings(max_examples=40, deadline=None)
def test_relabeled_lattice_isomorphic(case):
    L, perm = case
    assert is_isomorphic(L, permuted(L, perm))


# ---------------------------------------------------------------------------
# table invariants


def test_join_meet_are_lub_glb(corpus5):
    for L in corpus5:
        for x, y in itertools.product(range(L.n), repeat=2):
            j, m = L.join_of(x, y), L.meet_of(x, y)
            assert L.le(x, j) and L.le(y, j)
            assert L.le(m, x) and L.le(m, y)
            for z in range(L.n):
                if L.le(x, z) and L.le(y, z):
                    assert L.le(j, z)
                if L.le(z, x) and L.le(z, y):
                    assert L.le(z, m)


def test_bounds(corpus5):
    for L in corpus5:
        for x in range(L.n):
            assert L.le(L.bottom, x) and L.le(x, L.top)


@pytest.mark.slow
def test_enumeration_count_n8_matches_oracle():
    live = sum(1 for L in enumerate_lattices(8) if L.n == 8)
    assert live == 222
    assert count_lattices(8) == 222

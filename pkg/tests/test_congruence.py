"""Congruences, the congruence lattice, chains, induced maps, neutral ideals."""
from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conlat import (
    FiniteLattice,
    HostMismatch,
    HypothesesFail,
    LatticeHom,
    NotAnIdeal,
    NotJoined,
    alternating_chain,
    chain,
    con_lattice,
    con_nid_iso,
    congruence_join,
    congruence_meet,
    enumerate_lattices,
    induced_con_map,
    is_distributive,
    is_modular,
    is_neutral_ideal,
    is_sectionally_complemented,
    is_weakly_distributive,
    m3,
    monotonize_chain,
    n5,
    neutral_ideals,
    principal_congruence,
)
from oracles import congruence_partitions

SMALL = list(enumerate_lattices(5))

lattices = st.sampled_from(SMALL)

N5 = n5()
CON_N5 = con_lattice(N5)

n5_congruences = st.sampled_from(list(CON_N5.congruences))


def b2() -> FiniteLattice:
    return FiniteLattice.from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@st.composite
def lattice_with_raw_chain(draw):
    L = draw(lattices)
    m = draw(st.integers(min_value=0, max_value=4))
    raw = [draw(st.integers(min_value=0, max_value=L.n - 1)) for _ in range(m)]
    u = draw(st.integers(min_value=0, max_value=L.n - 1))
    v = L.join_of(u, draw(st.integers(min_value=0, max_value=L.n - 1)))
    return L, raw, u, v


# ---------------------------------------------------------------------------
# principal congruences


def test_principal_reflexive_is_identity(corpus5):
    for L in corpus5:
        for u in range(L.n):
            assert principal_congruence(L, u, u).num_blocks == L.n


def test_principal_n5_short_edge():
    theta = principal_congruence(N5, 1, 2)
    assert theta.blocks() == ((0,), (1, 2), (3,), (4,))


def test_principal_m3_collapses_everything():
    M = m3()
    for atom in (1, 2, 3):
        assert principal_congruence(M, 0, atom).num_blocks == 1


def test_principal_is_least_collapsing(corpus5):
    for L in corpus5:
        cl = con_lattice(L)
        for u, v in itertools.combinations(range(L.n), 2):
            theta = principal_congruence(L, u, v)
            below = [t for t in cl.congruences if t.same(u, v)]
            assert all(theta.refines(t) for t in below)
            assert theta in below


# ---------------------------------------------------------------------------
# join and meet


def test_join_meet_identity_laws():
    delta = CON_N5.congruences[CON_N5.delta_index]
    nabla = CON_N5.congruences[CON_N5.nabla_index]
    for theta in CON_N5.congruences:
        assert congruence_join(theta, delta) == theta
        assert congruence_meet(theta, nabla) == theta


def test_n5_join_example():
    a0 = principal_congruence(N5, 0, 1)
    a1 = principal_congruence(N5, 2, 4)
    assert congruence_join(a0, a1).num_blocks == 1


def test_n5_meet_example():
    a0 = principal_congruence(N5, 0, 1)
    a1 = principal_congruence(N5, 2, 4)
    assert congruence_meet(a0, a1) == principal_congruence(N5, 1, 2)


def test_host_mismatch():
    with pytest.raises(HostMismatch):
        congruence_join(
            principal_congruence(N5, 0, 1),
            principal_congruence(chain(3), 0, 1),
        )


@given(n5_congruences, n5_congruences, n5_congruences)
@settings(max_examples=60, deadline=None)
def test_join_commutative_associative(t1, t2, t3):
    assert congruence_join(t1, t2) == congruence_join(t2, t1)
    assert congruence_join(congruence_join(t1, t2), t3) == congruence_join(
        t1, congruence_join(t2, t3)
    )


@given(n5_congruences, n5_congruences)
@settings(max_examples=40, deadline=None)
def test_meet_refines_both(t1, t2):
    m = congruence_meet(t1, t2)
    assert m.refines(t1) and m.refines(t2)


# ---------------------------------------------------------------------------
# the congruence lattice


def test_con_counts():
    assert len(con_lattice(chain(2)).congruences) == 2
    assert len(con_lattice(m3()).congruences) == 2
    assert len(CON_N5.congruences) == 5
    assert len(con_lattice(chain(4)).congruences) == 8
    assert len(con_lattice(b2()).congruences) == 4


def test_con_agrees_with_partition_oracle(corpus5):
    for L in corpus5:
        got = {
            frozenset(frozenset(b) for b in t.blocks())
            for t in con_lattice(L).congruences
        }
        assert got == congruence_partitions(L)


def test_con_contains_bounds_and_is_closed(corpus5):
    for L in corpus5:
        cl = con_lattice(L)
        reps = set(cl.congruences)
        assert cl.congruences[cl.delta_index].num_blocks == L.n
        assert cl.congruences[cl.nabla_index].num_blocks == 1
        for t1, t2 in itertools.combinations(cl.congruences, 2):
            assert congruence_join(t1, t2) in reps
            assert congruence_meet(t1, t2) in reps


def test_con_as_lattice_is_distributive(corpus5):
    for L in corpus5:
        assert is_distributive(con_lattice(L).as_lattice)


# ---------------------------------------------------------------------------
# alternating chains


def validate_chain(L, ch, u, v):
    elems = ch.elements
    assert elems[0] == u and elems[-1] == v
    for w1, w2 in zip(elems, elems[1:]):
        assert L.le(w1, w2)
    for (w1, w2), label in zip(zip(elems, elems[1:]), ch.labels):
        assert label is None or label.same(w1, w2)


def test_alternating_chain_direct_step():
    for L in (N5, b2()):
        cl = con_lattice(L)
        for u in range(L.n):
            for v in range(L.n):
                if not L.le(u, v):
                    continue
                alpha = principal_congruence(L, u, v)
                for beta in cl.congruences:
                    ch = alternating_chain(L, u, v, alpha, beta)
                    validate_chain(L, ch, u, v)


def test_alternating_chain_n5_example():
    alpha = principal_congruence(N5, 0, 1)
    beta = principal_congruence(N5, 2, 4)
    ch = alternating_chain(N5, 0, 4, alpha, beta)
    validate_chain(N5, ch, 0, 4)
    # each step must lie in alpha or beta alone
    for (w1, w2), label in zip(zip(ch.elements, ch.elements[1:]), ch.labels):
        assert label.same(w1, w2)


def test_alternating_chain_trivial_endpoints():
    delta = CON_N5.congruences[CON_N5.delta_index]
    ch = alternating_chain(N5, 2, 2, delta, delta)
    assert ch.elements == (2,)


def test_alternating_chain_not_joined():
    delta_idx = CON_N5.delta_index
    delta = CON_N5.congruences[delta_idx]
    with pytest.raises(NotJoined):
        alternating_chain(N5, 0, 4, delta, delta)


def test_alternating_chain_exhaustive(corpus5):
    for L in corpus5:
        cl = con_lattice(L)
        for u in range(L.n):
            for v in range(L.n):
                if not L.le(u, v):
                    continue
                theta = principal_congruence(L, u, v)
                for alpha, beta in itertools.product(cl.congruences, repeat=2):
                    if not theta.refines(congruence_join(alpha, beta)):
                        continue
                    ch = alternating_chain(L, u, v, alpha, beta)
                    validate_chain(L, ch, u, v)


# ---------------------------------------------------------------------------
# monotonization


def test_monotonize_identity_on_monotone():
    ch = monotonize_chain(N5, [0, 1, 2, 4], 0, 4)
    assert ch.elements == (0, 1, 2, 4)


def test_monotonize_incomparable_middle():
    # raw [u, t, v] with t incomparable to u lands on (u or t) meet v
    L = b2()
    ch = monotonize_chain(L, [1, 2, 3], 1, 3)
    assert ch.elements == (1, L.meet_of(L.join_of(1, 2), 3), 3)


@given(lattice_with_raw_chain())
@settings(max_examples=80, deadline=None)
def test_monotonize_output_monotone(case):
    L, raw, u, v = case
    ch = monotonize_chain(L, raw, u, v)
    assert ch.elements[0] == u and ch.elements[-1] == v
    for w1, w2 in zip(ch.elements, ch.elements[1:]):
        assert L.le(w1, w2)


@given(lattice_with_raw_chain())
@settings(max_examples=60, deadline=None)
def test_monotonize_preserves_step_labels(case):
    L, raw, u, v = case
    full = [u, *raw, v]
    labels = [
        principal_congruence(L, w1, w2) for w1, w2 in zip(full, full[1:])
    ]
    ch = monotonize_chain(L, full, u, v, labels)
    assert len(ch.labels) == len(ch.elements) - 1
    for (w1, w2), label in zip(zip(ch.elements, ch.elements[1:]), ch.labels):
        assert label.same(w1, w2)


# ---------------------------------------------------------------------------
# induced maps on congruence lattices


def test_induced_map_of_identity():
    f = induced_con_map(LatticeHom(N5, N5, tuple(range(5))))
    assert f.map == tuple(range(len(CON_N5.congruences)))


def test_induced_map_of_constant():
    f = induced_con_map(LatticeHom(N5, N5, (0, 0, 0, 0, 0)))
    assert set(f.map) == {CON_N5.delta_index}


def test_induced_map_of_interval_inclusion():
    # include the three-chain [0, b] into the pentagon
    h = LatticeHom(chain(3), N5, (0, 1, 2))
    f = induced_con_map(h)
    assert f.source.n == len(con_lattice(chain(3)).congruences) == 4
    assert is_weakly_distributive(f)


# ---------------------------------------------------------------------------
# neutral ideals


def test_trivial_ideals_neutral(corpus5):
    for L in corpus5:
        assert is_neutral_ideal(L, {L.bottom})
        assert is_neutral_ideal(L, set(range(L.n)))


def test_non_ideal_rejected():
    with pytest.raises(NotAnIdeal):
        is_neutral_ideal(N5, {1})  # not downward closed


def test_neutral_ideal_counts():
    assert len(neutral_ideals(m3())) == 2
    B = b2()
    assert len(neutral_ideals(B)) == 4
    assert len(neutral_ideals(B)) == len(con_lattice(B).congruences)


def test_con_nid_iso_round_trip(corpus5):
    for L in corpus5:
        if not (is_sectionally_complemented(L) and is_modular(L)):
            continue
        corr = con_nid_iso(L)
        cl = con_lattice(L)
        nids = set(neutral_ideals(L))
        seen = set()
        for i in range(len(cl.congruences)):
            ideal = corr.to_ideal[i]
            assert ideal in nids
            assert corr.from_ideal[ideal] == i
            seen.add(ideal)
        assert seen == nids


def test_con_nid_iso_order_preserving():
    L = b2()
    corr = con_nid_iso(L)
    cl = con_lattice(L)
    for i, j in itertools.product(range(len(cl.congruences)), repeat=2):
        t1, t2 = cl.congruences[i], cl.congruences[j]
        assert t1.refines(t2) == (corr.to_ideal[i] <= corr.to_ideal[j])


def test_con_nid_iso_needs_hypotheses():
    with pytest.raises(HypothesesFail):
        con_nid_iso(N5)

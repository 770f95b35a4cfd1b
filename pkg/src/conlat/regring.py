"""Small von Neumann regular rings and their ideal lattices.

A ring is regular when every x has a quasi-inverse y with xyx = x.  Rings
here are finite and table-driven: structured rings are finite products of
full matrix rings over prime fields, built from a spec string like
"M(1,2)xM(2,3)" (elements are tuples of matrices, tables are computed once);
tabular rings are given by explicit addition/multiplication tables.

From a regular ring R the module computes:

* L(R), the lattice of principal right ideals (complemented and modular),
  each node labelled by an idempotent generator;
* isomorphism of principal right ideals, with certificates x in aRb,
  y in bRa such that xy = a and yx = b;
* Id R, the lattice of two-sided ideals;
* the inverse bijections between neutral ideals of L(R) and Id R;
* V(R), the monoid of isomorphism classes of principal right ideals, which
  for a finite (hence semisimple) regular ring is free commutative on the
  classes of indecomposables: elements are multiplicity vectors in N^k;
* the map pi from V(R) onto Id R and the maximal semilattice quotient of
  V(R), which is the Boolean semilattice of supports.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .congruence import con_lattice, con_nid_iso, is_neutral_ideal, neutral_ideals
from .lattice import FiniteLattice, are_perspective, is_modular, is_complemented

RING_SIZE_BOUND = 1 << 14


class NotRegular(ValueError):
    """The ring has an element with no quasi-inverse."""


class NotIdempotent(ValueError):
    """A principal-right-ideal label must be an idempotent."""


class NotNeutral(ValueError):
    """The node set is not a neutral ideal of L(R)."""


class NotTwoSided(ValueError):
    """The element set is not a two-sided ideal."""


class DecompositionFail(ValueError):
    """No complement found while decomposing into indecomposables."""


class BoundExceeded(ValueError):
    """See RING_SIZE_BOUND."""


class SpecParse(ValueError):
    """Malformed ring spec string."""


class RingTooLarge(ValueError):
    """The structured ring would exceed the element bound."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def parse_ring_spec(spec: str) -> list[tuple[int, int]]:
    """Parse "M(n1,p1)xM(n2,p2)x..." into component (size, prime) pairs."""
    parts = spec.replace(" ", "").split("x")
    out = []
    for part in parts:
        m = re.fullmatch(r"M\((\d+),(\d+)\)", part)
        if not m:
            raise SpecParse(f"bad component {part!r}; expected M(n,p)")
        n, p = int(m.group(1)), int(m.group(2))
        if n < 1:
            raise SpecParse(f"matrix size {n} must be at least 1")
        if not _is_prime(p):
            raise SpecParse(f"{p} is not prime")
        out.append((n, p))
    if not out:
        raise SpecParse("empty spec")
    return out


class FiniteRing:
    """A finite ring with identity, as full addition/multiplication tables."""

    def __init__(
        self,
        add: Sequence[Sequence[int]],
        mul: Sequence[Sequence[int]],
        one: int,
        *,
        labels: tuple[str, ...] | None = None,
        validate: bool = True,
    ):
        self.add = tuple(tuple(int(v) for v in row) for row in add)
        self.mul = tuple(tuple(int(v) for v in row) for row in mul)
        n = len(self.add)
        self.n = n
        self.one = one
        self.labels = labels
        zero = next(
            (z for z in range(n) if all(self.add[z][x] == x for x in range(n))), None
        )
        if zero is None:
            raise ValueError("no additive identity")
        self.zero = zero
        if validate:
            self._validate()

    def _validate(self) -> None:
        n, add, mul, one, zero = self.n, self.add, self.mul, self.one, self.zero
        rng = range(n)
        if any(add[x][y] != add[y][x] for x in rng for y in rng):
            raise ValueError("addition is not commutative")
        for x in rng:
            if not any(add[x][y] == zero for y in rng):
                raise ValueError("an element has no additive inverse")
            if mul[one][x] != x or mul[x][one] != x:
                raise ValueError("one is not a multiplicative identity")
        for x in rng:
            for y in rng:
                axy, mxy = add[x][y], mul[x][y]
                for z in rng:
                    if add[axy][z] != add[x][add[y][z]]:
                        raise ValueError("addition is not associative")
                    if mul[mxy][z] != mul[x][mul[y][z]]:
                        raise ValueError("multiplication is not associative")
                    if mul[x][add[y][z]] != add[mxy][mul[x][z]]:
                        raise ValueError("left distributivity fails")
                    if mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]:
                        raise ValueError("right distributivity fails")

    @classmethod
    def from_tables(cls, obj: dict) -> "FiniteRing":
        return cls(obj["add"], obj["mul"], obj["one"])

    @classmethod
    def from_matrix_spec(cls, spec: str | list[tuple[int, int]]) -> "FiniteRing":
        """Product of full matrix rings over prime fields; axioms hold by
        construction, so no table validation."""
        comps = parse_ring_spec(spec) if isinstance(spec, str) else list(spec)
        size = 1
        for n, p in comps:
            size *= p ** (n * n)
            if size > RING_SIZE_BOUND:
                raise RingTooLarge(f"ring would have more than {RING_SIZE_BOUND} elements")
        matrices_per_comp = []
        for n, p in comps:
            entries = list(itertools.product(range(p), repeat=n * n))
            matrices_per_comp.append(
                [tuple(tuple(e[i * n + j] for j in range(n)) for i in range(n)) for e in entries]
            )
        elements = list(itertools.product(*matrices_per_comp))
        index = {e: i for i, e in enumerate(elements)}

        def mat_add(a, b, p):
            return tuple(
                tuple((x + y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
            )

        def mat_mul(a, b, p):
            n = len(a)
            return tuple(
                tuple(sum(a[i][t] * b[t][j] for t in range(n)) % p for j in range(n))
                for i in range(n)
            )

        N = len(elements)
        add = [[0] * N for _ in range(N)]
        mul = [[0] * N for _ in range(N)]
        for i, e in enumerate(elements):
            for j, f in enumerate(elements):
                add[i][j] = index[
                    tuple(mat_add(a, b, p) for (a, b, (_, p)) in zip(e, f, comps))
                ]
                mul[i][j] = index[
                    tuple(mat_mul(a, b, p) for (a, b, (_, p)) in zip(e, f, comps))
                ]
        one = index[
            tuple(
                tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
                for n, p in comps
            )
        ]
        ring = cls(add, mul, one, labels=tuple(map(str, elements)), validate=False)
        ring.spec = list(comps)
        return ring

    def idempotents(self) -> list[int]:
        return [e for e in range(self.n) if self.mul[e][e] == e]

    def __repr__(self) -> str:
        return f"FiniteRing(n={self.n})"


@dataclass(frozen=True)
class RegularityResult:
    holds: bool
    failing: int | None


def is_regular(R: FiniteRing) -> RegularityResult:
    """Every x needs some y with xyx = x."""
    mul = R.mul
    for x in range(R.n):
        if not any(mul[mul[x][y]][x] == x for y in range(R.n)):
            return RegularityResult(False, x)
    return RegularityResult(True, None)


@dataclass(frozen=True)
class RightIdealLattice:
    """L(R): principal right ideals ordered by inclusion.

    ``ideals[k]`` is the element set of node k, ``generators[k]`` an
    idempotent generating it.  The lattice indexing matches both tuples.
    """

    ring: FiniteRing
    lattice: FiniteLattice
    ideals: tuple[frozenset[int], ...]
    generators: tuple[int, ...]

    def node_of(self, x: int) -> int:
        """The node holding xR."""
        return self.ideals.index(frozenset(self.ring.mul[x]))


def principal_right_ideals(R: FiniteRing) -> RightIdealLattice:
    """Compute L(R); requires regularity so that idempotent generators exist
    and the inclusion order is a (complemented, modular) lattice."""
    reg = is_regular(R)
    if not reg.holds:
        raise NotRegular(f"element {reg.failing} has no quasi-inverse")
    mul = R.mul
    seen: dict[frozenset[int], int] = {}
    for x in range(R.n):
        seen.setdefault(frozenset(mul[x]), x)
    ideals = sorted(seen, key=lambda s: (len(s), sorted(s)))
    k = len(ideals)
    leq = [[s <= t for t in ideals] for s in ideals]
    lattice = FiniteLattice(leq)
    gens = []
    for s in ideals:
        e = next(e for e in s if mul[e][e] == e and frozenset(mul[e]) == s)
        gens.append(e)
    return RightIdealLattice(R, lattice, tuple(ideals), tuple(gens))


@dataclass(frozen=True)
class IsoCertificate:
    x: int
    y: int


def ideals_isomorphic(R: FiniteRing, a: int, b: int) -> IsoCertificate | None:
    """Are aR and bR isomorphic as right modules, for idempotents a and b?

    A certificate is x in aRb, y in bRa with xy = a and yx = b; then
    left multiplication by y and by x are mutually inverse module maps."""
    mul = R.mul
    if mul[a][a] != a:
        raise NotIdempotent(f"{a} is not idempotent")
    if mul[b][b] != b:
        raise NotIdempotent(f"{b} is not idempotent")
    aRb = sorted({mul[mul[a][r]][b] for r in range(R.n)})
    bRa = sorted({mul[mul[b][r]][a] for r in range(R.n)})
    for x in aRb:
        for y in bRa:
            if mul[x][y] == a and mul[y][x] == b:
                return IsoCertificate(x, y)
    return None


def _additive_closure(R: FiniteRing, gens: Iterable[int]) -> frozenset[int]:
    add = R.add
    group = {R.zero}
    work = []
    for g in gens:
        if g not in group:
            group.add(g)
            work.append(g)
    while work:
        g = work.pop()
        for h in list(group):
            s = add[g][h]
            if s not in group:
                group.add(s)
                work.append(s)
    return frozenset(group)


@dataclass(frozen=True)
class TwoSidedIdealLattice:
    ring: FiniteRing
    lattice: FiniteLattice
    ideals: tuple[frozenset[int], ...]

    def index_of(self, I: frozenset[int]) -> int:
        return self.ideals.index(I)


def two_sided_ideals(R: FiniteRing) -> TwoSidedIdealLattice:
    """Id R: all two-sided ideals, as the join-closure of the principal
    two-sided ideals RxR (every ideal is a finite sum of principal ones)."""
    mul = R.mul
    found: set[frozenset[int]] = {frozenset({R.zero})}
    for x in range(R.n):
        rx = {mul[r][x] for r in range(R.n)}
        gens = {mul[y][s] for y in rx for s in range(R.n)}
        found.add(_additive_closure(R, gens))
    work = list(found)
    while work:
        I = work.pop()
        for J in list(found):
            s = _additive_closure(R, I | J)
            if s not in found:
                found.add(s)
                work.append(s)
    ideals = sorted(found, key=lambda s: (len(s), sorted(s)))
    leq = [[s <= t for t in ideals] for s in ideals]
    return TwoSidedIdealLattice(R, FiniteLattice(leq), tuple(ideals))


def is_two_sided(R: FiniteRing, I: frozenset[int]) -> bool:
    mul, add = R.mul, R.add
    if R.zero not in I:
        return False
    return all(
        add[x][y] in I and mul[r][x] in I and mul[x][r] in I
        for x in I
        for y in I
        for r in range(R.n)
    )


# -- neutral ideals of L(R) vs two-sided ideals of R -----------------------------


def phi(lr: RightIdealLattice, node_set: Iterable[int]) -> frozenset[int]:
    """phi(a) = { x in R : xR in a }, for a neutral ideal a of L(R)."""
    nodes = frozenset(node_set)
    down = frozenset(
        x for k in nodes for x in range(lr.ring.n) if lr.node_of(x) == k
    )
    if not is_neutral_ideal(lr.lattice, nodes):
        raise NotNeutral("node set is not a neutral ideal of L(R)")
    return down


def psi(lr: RightIdealLattice, tsl: TwoSidedIdealLattice, I: frozenset[int]) -> frozenset[int]:
    """psi(I) = { J in L(R) : J <= I }, for a two-sided ideal I."""
    if I not in tsl.ideals and not is_two_sided(lr.ring, I):
        raise NotTwoSided("element set is not a two-sided ideal")
    return frozenset(k for k, s in enumerate(lr.ideals) if s <= I)


def verify_nid_id_iso(R: FiniteRing) -> bool:
    """phi and psi are mutually inverse order isomorphisms between the
    neutral ideals of L(R) and the two-sided ideals of R."""
    lr = principal_right_ideals(R)
    tsl = two_sided_ideals(R)
    nid = neutral_ideals(lr.lattice)
    images = []
    for a in nid:
        I = phi(lr, a)
        if I not in tsl.ideals:
            return False
        if psi(lr, tsl, I) != a:
            return False
        images.append(I)
    if sorted(map(sorted, images)) != sorted(map(sorted, tsl.ideals)):
        return False
    # order preservation both ways
    for a, I in zip(nid, images):
        for b, J in zip(nid, images):
            if (a <= b) != (I <= J):
                return False
    return True


def neutral_iff_iso_closed(R: FiniteRing) -> bool:
    """For every ideal of L(R): neutral iff closed under isomorphism of
    principal right ideals."""
    lr = principal_right_ideals(R)
    L = lr.lattice
    iso: dict[tuple[int, int], bool] = {}
    k = L.n
    for i in range(k):
        for j in range(k):
            iso[(i, j)] = (
                ideals_isomorphic(R, lr.generators[i], lr.generators[j]) is not None
            )
    for m in range(k):
        nodes = frozenset(x for x in range(k) if L.leq[x, m])
        neutral = is_neutral_ideal(L, nodes)
        closed = all(
            j in nodes for i in nodes for j in range(k) if iso[(i, j)]
        )
        if neutral != closed:
            return False
    return True


def conc_idc_iso(R: FiniteRing) -> bool:
    """Con L(R) and Id R are isomorphic semilattices, via the zero-block
    neutral ideal and then phi.  (Everything is finite, so all congruences
    and all ideals are compact; no restriction to compact elements needed.)"""
    lr = principal_right_ideals(R)
    tsl = two_sided_ideals(R)
    corr = con_nid_iso(lr.lattice)
    con = con_lattice(lr.lattice)
    mapping = [tsl.index_of(phi(lr, a)) for a in corr.to_ideal]
    if sorted(mapping) != list(range(len(tsl.ideals))):
        return False
    jn_c = con.as_lattice.join_rows
    jn_i = tsl.lattice.join_rows
    k = len(mapping)
    return all(
        mapping[jn_c[i][j]] == jn_i[mapping[i]][mapping[j]]
        for i in range(k)
        for j in range(k)
    )


# -- V(R) and the maximal semilattice quotient ------------------------------------


@dataclass(frozen=True)
class VMonoid:
    """V(R) = N^k: multiplicity vectors over the isomorphism classes of
    indecomposable principal right ideals (atoms of L(R))."""

    lr: RightIdealLattice
    k: int
    atom_classes: tuple[tuple[int, ...], ...]  # atoms grouped by iso class
    class_of_node: tuple[tuple[int, ...], ...]  # node -> vector in N^k

    def class_of(self, node: int) -> tuple[int, ...]:
        return self.class_of_node[node]


def v_monoid(R: FiniteRing) -> VMonoid:
    """Decompose every principal right ideal into indecomposables.

    Repeatedly split off an atom A <= J with a complement C of A in [0, J]
    (exists: L(R) is complemented and modular, hence relatively
    complemented); the multiplicity vector is independent of choices, which
    the caller can confirm via iso-invariance checks."""
    lr = principal_right_ideals(R)
    L = lr.lattice
    atoms = list(L.atoms)
    classes: list[list[int]] = []
    for a in atoms:
        for cls in classes:
            if ideals_isomorphic(R, lr.generators[cls[0]], lr.generators[a]):
                cls.append(a)
                break
        else:
            classes.append([a])
    classes.sort(key=lambda c: c[0])
    k = len(classes)
    atom_class = {a: ci for ci, cls in enumerate(classes) for a in cls}
    jn, mt, leq = L.join_rows, L.meet_rows, L.leq
    bot = L.bottom
    vec: dict[int, tuple[int, ...]] = {bot: (0,) * k}

    def decompose(node: int) -> tuple[int, ...]:
        if node in vec:
            return vec[node]
        atom = next(a for a in atoms if leq[a, node])
        comp = next(
            (
                z
                for z in range(L.n)
                if leq[z, node] and mt[atom][z] == bot and jn[atom][z] == node
            ),
            None,
        )
        if comp is None:
            raise DecompositionFail(f"atom {atom} has no complement under node {node}")
        rest = decompose(comp)
        v = list(rest)
        v[atom_class[atom]] += 1
        vec[node] = tuple(v)
        return vec[node]

    for node in range(L.n):
        decompose(node)
    # refinement in N^k, asserted over all equal-sum quadruples of node classes
    vals = sorted(set(vec.values()))
    for a0, a1, b0, b1 in itertools.product(vals, repeat=4):
        s = tuple(x + y for x, y in zip(a0, a1))
        if s != tuple(x + y for x, y in zip(b0, b1)):
            continue
        c00, c01, c10, c11 = refine_nonneg_vectors(a0, a1, b0, b1)
        rows = tuple(x + y for x, y in zip(c00, c01)) == a0 and tuple(
            x + y for x, y in zip(c10, c11)
        ) == a1
        cols = tuple(x + y for x, y in zip(c00, c10)) == b0 and tuple(
            x + y for x, y in zip(c01, c11)
        ) == b1
        if not (rows and cols and all(v >= 0 for c in (c00, c01, c10, c11) for v in c)):
            raise AssertionError("refinement failed in N^k")
    return VMonoid(
        lr,
        k,
        tuple(tuple(c) for c in classes),
        tuple(vec[node] for node in range(L.n)),
    )


def refine_nonneg_vectors(
    a0: Sequence[int], a1: Sequence[int], b0: Sequence[int], b1: Sequence[int]
) -> tuple[tuple[int, ...], ...]:
    """Refinement in N^k: componentwise c00 = min(a0, b0) works."""
    if [x + y for x, y in zip(a0, a1)] != [x + y for x, y in zip(b0, b1)]:
        raise ValueError("sums differ")
    c00 = tuple(min(x, y) for x, y in zip(a0, b0))
    c01 = tuple(x - m for x, m in zip(a0, c00))
    c10 = tuple(y - m for y, m in zip(b0, c00))
    c11 = tuple(x - m for x, m in zip(a1, c10))
    return (c00, c01, c10, c11)


def algebraic_below(v: Sequence[int], alpha: Sequence[int]) -> bool:
    """Does v <= n * alpha hold in N^k for some integer n >= 1?

    Componentwise this asks v_i <= n * alpha_i, so it fails exactly when
    some v_i > 0 meets alpha_i = 0; any n >= max(v) works otherwise.  The
    condition is therefore support inclusion."""
    return all(a > 0 for x, a in zip(v, alpha) if x > 0)


@dataclass(frozen=True)
class PiMap:
    """pi: V(R) -> Id R, pi(alpha) = { x in R : [xR] <= n alpha, some n >= 1 }
    with the algebraic preorder of N^k on the right."""

    vm: VMonoid
    tsl: TwoSidedIdealLattice
    elem_class: tuple[tuple[int, ...], ...]  # ring element -> class of xR

    def __call__(self, alpha: Sequence[int]) -> frozenset[int]:
        return frozenset(
            x
            for x, v in enumerate(self.elem_class)
            if algebraic_below(v, alpha)
        )


def pi_map(R: FiniteRing) -> PiMap:
    vm = v_monoid(R)
    tsl = two_sided_ideals(R)
    lr = vm.lr
    node_by_set = {s: i for i, s in enumerate(lr.ideals)}
    elem_class = tuple(
        vm.class_of_node[node_by_set[frozenset(R.mul[x])]] for x in range(R.n)
    )
    return PiMap(vm, tsl, elem_class)


def verify_pi_map(R: FiniteRing) -> dict[str, bool]:
    """The defining checks for pi:

    * hom: pi(alpha + beta) = pi(alpha) + pi(beta) (ideal sum);
    * principal: pi([xR]) = R x R for every x;
    * order: pi(alpha) <= pi(beta) iff alpha <= n beta for some n >= 1;
    * onto: every two-sided ideal is hit;
    * quotient: pi factors through supports as a semilattice isomorphism
      from the Boolean semilattice 2^k onto Id R.
    """
    pm = pi_map(R)
    vm, tsl = pm.vm, pm.tsl
    R_ = vm.lr.ring
    k = vm.k
    vectors = list(itertools.product(range(3), repeat=k)) if k else [()]
    out: dict[str, bool] = {}
    out["hom"] = all(
        pm([x + y for x, y in zip(al, be)])
        == _additive_closure(R_, pm(al) | pm(be))
        for al in vectors
        for be in vectors
    )
    ok = True
    mul = R_.mul
    for x in range(R_.n):
        rx = {mul[r][x] for r in range(R_.n)}
        rxr = _additive_closure(R_, {mul[y][s] for y in rx for s in range(R_.n)})
        if pm(pm.elem_class[x]) != rxr:
            ok = False
            break
    out["principal"] = ok
    out["order"] = all(
        (pm(al) <= pm(be)) == algebraic_below(al, be)
        for al in vectors
        for be in vectors
    )
    indicators = list(itertools.product(range(2), repeat=k)) if k else [()]
    image = {pm(v) for v in indicators}
    out["onto"] = image == set(tsl.ideals)
    out["quotient"] = len(image) == len(indicators) and all(
        out[key] for key in ("hom", "order", "onto")
    )
    return out


@dataclass(frozen=True)
class SupportQuotient:
    """The maximal semilattice quotient of N^k: the support map onto the
    Boolean semilattice of subsets of the k classes."""

    k: int

    def map(self, alpha: Sequence[int]) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(alpha) if v > 0)

    def verify_universal_property(self, max_target_size: int = 4) -> bool:
        """Every monoid hom from N^k to a bounded join-semilattice factors
        uniquely through the support map.

        Targets range over all lattices with at most max_target_size
        elements viewed as join-semilattices with bottom; every finite
        join-semilattice with bottom arises this way (common lower bounds
        form a nonempty join-closed set, so meets exist).  A hom h is
        determined by the generator images g_i = h(e_i); since targets are
        idempotent, h(alpha) = join of g_i over the support of alpha, so the
        factoring map A |-> join_{i in A} g_i is checked to be a semilattice
        hom agreeing with h.  Uniqueness is automatic: the support map is
        onto 2^k, so no second factoring can differ anywhere."""
        from .lattice import enumerate_lattices

        k = self.k
        test_vectors = list(itertools.product(range(3), repeat=k)) if k else [()]
        for L in enumerate_lattices(max_target_size):
            jn = L.join_rows
            bot = L.bottom
            for gens in itertools.product(range(L.n), repeat=k):
                def hbar(A: frozenset[int]) -> int:
                    acc = bot
                    for i in A:
                        acc = jn[acc][gens[i]]
                    return acc
                # h on N^k by iterated addition (idempotent target)
                def h(alpha) -> int:
                    acc = bot
                    for i, v in enumerate(alpha):
                        if v > 0:
                            acc = jn[acc][gens[i]]
                    return acc
                for al in test_vectors:
                    if h(al) != hbar(self.map(al)):
                        return False
                subsets = [
                    frozenset(s)
                    for r in range(k + 1)
                    for s in itertools.combinations(range(k), r)
                ]
                for A in subsets:
                    for B in subsets:
                        if hbar(A | B) != jn[hbar(A)][hbar(B)]:
                            return False
        return True


def max_semilattice_quotient(k: int) -> SupportQuotient:
    return SupportQuotient(k)

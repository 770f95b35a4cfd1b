"""Command-line front end: corpus generation, property checks, theorem
campaigns, ring pipelines, and machine-readable reports.

Commands
--------
* ``gen-corpus --max-size N --out corpus.jsonl``: enumerate all lattices up
  to N elements (one JSON object per line, canonically keyed).
* ``check PROPERTY --in corpus.jsonl``: run a per-lattice check; PROPERTY is
  one of property-c, cong-splitting, urp, con-distributive ("urp" and
  "con-distributive" examine the congruence lattice of each item).
* ``verify-theorem THEOREM``: run a verification campaign; lattice campaigns
  read a corpus (``--in`` or ``--max-size``), ring campaigns take ``--ring``
  or default to the shipped test rings.
* ``ring SPEC``: the full pipeline on one ring.

Reports are JSON on stdout (or ``--out``), deterministic for a fixed
(corpus, seed, budget): rerunning a command yields byte-identical output.
Wall-clock time goes to stderr only.  Exit codes: 0 every row holds, 1 some
row fails, 2 budget exhausted somewhere with no failure, 3 operational error
(bad arguments, unreadable input, oversized ring).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TextIO

from . import __version__
from .congruence import alternating_chain, con_lattice, induced_con_map
from .lattice import (
    BoundExceeded,
    FiniteLattice,
    LatticeHom,
    canonical_form,
    boolean,
    chain,
    enumerate_lattice_homs,
    enumerate_lattices,
    has_convex_range,
    is_atomistic,
    is_relatively_complemented,
    is_sectionally_complemented,
    m3,
    n5,
)
from .semilattice import (
    FiniteJoinSemilattice,
    SemilatticeHom,
    enumerate_semilattice_homs,
    has_refinement_property,
    is_weakly_distributive,
    is_weakly_distributive_at,
    wd_join_combine,
)
from .splitting import (
    SplitInstance,
    has_property_C,
    is_congruence_splitting,
    splitting_from_property_C,
)
from .urp import (
    DEFAULT_SEARCH_BUDGET,
    SearchBudgetExceeded,
    UrpInstance,
    canonical_instance,
    csurp_witness,
    holds_urp_at,
    refine_instance,
    search_urp_witness,
    urp_join_combine,
    urp_transfer,
    verify_urp_witness,
)
from . import regring
from .regring import FiniteRing, parse_ring_spec

DEFAULT_TRIALS = 10_000

TEST_RINGS: tuple[str, ...] = (
    "M(1,2)",
    "M(1,3)",
    "M(1,2)xM(1,2)",
    "M(2,2)",
    "M(2,3)",
    "M(1,2)xM(2,2)",
    "M(1,2)xM(2,3)",
)

PROPERTY_IDS = ("property-c", "cong-splitting", "urp", "con-distributive")
THEOREM_IDS = (
    "prop-a",
    "prop-b",
    "prop-d",
    "thm-csurp",
    "prop-convhom",
    "lem-wdadd",
    "prop-urpadd",
    "prop-urpclwd",
    "ring-nid-id",
    "ring-conc-idc",
    "ring-pi",
)
RING_THEOREMS = ("ring-nid-id", "ring-conc-idc", "ring-pi")

NO_FINITE_COUNTEREXAMPLE = (
    "No finite counterexample to the uniform refinement property was found in "
    "this corpus: every congruence lattice examined satisfies it at every "
    "element.  This is the expected outcome at finite scale; the smallest "
    "known congruence semilattices that fail the property have size at least "
    "aleph-two, so no finite search can exhibit a failure."
)


class UnknownProperty(ValueError):
    pass


class UnknownTheorem(ValueError):
    pass


class ParseError(ValueError):
    """Malformed corpus line."""


@dataclass
class CampaignReport:
    """Machine-readable outcome of one CLI command.

    ``rows`` carry one entry per corpus item (or per ring / pipeline stage);
    verdicts are "holds", "fails", or "budget-exceeded".
    """

    command: str
    params: dict
    rows: list[dict] = field(default_factory=list)
    annotations: list[str] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {"holds": 0, "fails": 0, "budget-exceeded": 0}
        for row in self.rows:
            counts[row["verdict"]] += 1
        return counts

    @property
    def exit_code(self) -> int:
        s = self.summary
        if s["fails"]:
            return 1
        if s["budget-exceeded"]:
            return 2
        return 0

    def to_json(self) -> dict:
        return {
            "tool": "conlat",
            "version": __version__,
            "command": self.command,
            "params": self.params,
            "rows": self.rows,
            "summary": self.summary,
            "annotations": self.annotations,
        }

    def serialize(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


# -- corpus I/O ------------------------------------------------------------------


def write_corpus(lattices: Iterable[FiniteLattice], out: TextIO) -> int:
    count = 0
    for L in lattices:
        obj = L.to_json()
        obj["id"] = canonical_form(L)
        out.write(json.dumps(obj, sort_keys=True) + "\n")
        count += 1
    return count


def read_corpus(path: str) -> list[tuple[str, FiniteLattice]]:
    items = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                L = FiniteLattice.from_json(obj)
                items.append((obj.get("id", canonical_form(L)), L))
            except (ValueError, KeyError, TypeError) as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
    return items


def default_corpus(max_size: int) -> list[tuple[str, FiniteLattice]]:
    return [(canonical_form(L), L) for L in enumerate_lattices(max_size)]


# -- property checks -------------------------------------------------------------


def _check_property_c(item_id: str, L: FiniteLattice, budget: int) -> dict:
    res = has_property_C(L)
    row = {"item": item_id, "property": "property-c", "verdict": "holds" if res.holds else "fails"}
    if not res.holds:
        a, b, c = res.failing
        row["counterexample"] = {"a": a, "b": b, "c": c}
    return row

def _check_cong_splitting(item_id: str, L: FiniteLattice, budget: int) -> dict:
    res = is_congruence_splitting(L)
    row = {"item": item_id, "property": "cong-splitting", "verdict": "holds" if res.holds else "fails"}
    if not res.holds:
        a, b, i0, i1 = res.failing
        row["counterexample"] = {"a": a, "b": b, "alpha0": i0, "alpha1": i1}
    return row

def _check_urp(item_id: str, L: FiniteLattice, budget: int) -> dict:
    S = con_lattice(L).as_semilattice
    row = {"item": item_id, "property": "urp"}
    try:
        for e in range(S.n):
            if not holds_urp_at(S, e, budget):
                row["verdict"] = "fails"
                row["counterexample"] = {"element": e}
                return row
        row["verdict"] = "holds"
    except SearchBudgetExceeded:
        row["verdict"] = "budget-exceeded"
    return row

def _check_con_distributive(item_id: str, L: FiniteLattice, budget: int) -> dict:
    res = has_refinement_property(con_lattice(L).as_semilattice)
    row = {
        "item": item_id,
        "property": "con-distributive",
        "verdict": "holds" if res.holds else "fails",
    }
    if not res.holds:
        row["counterexample"] = dict(
            zip(("a0", "a1", "b0", "b1"), res.counterexample)
        )
    return row

_CHECKS: dict[str, Callable[[str, FiniteLattice, int], dict]] = {
    "property-c": _check_property_c,
    "cong-splitting": _check_cong_splitting,
    "urp": _check_urp,
    "con-distributive": _check_con_distributive,
}


def campaign_check(
    property_id: str,
    items: Sequence[tuple[str, FiniteLattice]],
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> CampaignReport:
    if property_id not in _CHECKS:
        raise UnknownProperty(property_id)
    fn = _CHECKS[property_id]
    report = CampaignReport(
        "check", {"property": property_id, "items": len(items), "budget": budget}
    )
    for item_id, L in items:
        report.rows.append(fn(item_id, L, budget))
    if property_id == "urp" and not report.summary["fails"]:
        report.annotations.append(NO_FINITE_COUNTEREXAMPLE)
    return report


# -- theorem campaigns -----------------------------------------------------------


def _vacuous(item_id: str, theorem: str, note: str) -> dict:
    return {"item": item_id, "property": theorem, "verdict": "holds", "detail": note}


def _campaign_prop_a(items, budget, seed, trials) -> tuple[list[dict], list[str]]:
    """Sectionally or relatively complemented lattices have property (C)."""
    rows = []
    for item_id, L in items:
        if not (is_sectionally_complemented(L) or is_relatively_complemented(L)):
            rows.append(_vacuous(item_id, "prop-a", "premise does not apply"))
            continue
        res = has_property_C(L)
        row = {"item": item_id, "property": "prop-a", "verdict": "holds" if res.holds else "fails"}
        if not res.holds:
            row["counterexample"] = {"triple": list(res.failing)}
        rows.append(row)
    return rows, []


def _campaign_prop_b(items, budget, seed, trials) -> tuple[list[dict], list[str]]:
    """Atomistic lattices have property (C)."""
    rows = []
    for item_id, L in items:
        if not is_atomistic(L):
            rows.append(_vacuous(item_id, "prop-b", "premise does not apply"))
            continue
        res = has_property_C(L)
        row = {"item": item_id, "property": "prop-b", "verdict": "holds" if res.holds else "fails"}
        if not res.holds:
            row["counterexample"] = {"triple": list(res.failing)}
        rows.append(row)
    return rows, []


def _exact_join_instances(L: FiniteLattice):
    """All (a, b, alpha0, alpha1) with a <= b and alpha0 v alpha1 = Theta(a,b)."""
    con = con_lattice(L)
    jn = con.as_lattice.join_rows
    k = len(con)
    for a in range(L.n):
        for b in range(L.n):
            if not L.leq[a, b]:
                continue
            tgt = con.principal[a][b]
            for i0 in range(k):
                for i1 in range(k):
                    if jn[i0][i1] == tgt:
                        yield a, b, con.congruences[i0], con.congruences[i1]


def _campaign_prop_d(items, budget, seed, trials) -> tuple[list[dict], list[str]]:
    """Property (C) implies congruence splitting, constructively."""
    rows = []
    for item_id, L in items:
        if not has_property_C(L).holds:
            rows.append(_vacuous(item_id, "prop-d", "premise does not apply"))
            continue
        row = {"item": item_id, "property": "prop-d"}
        split = is_congruence_splitting(L)
        checked = 0
        bad = None
        con = con_lattice(L)
        for a, b, al0, al1 in _exact_join_instances(L):
            inst = SplitInstance(L, a, b, al0, al1)
            x0, x1 = splitting_from_property_C(inst)
            jn = L.join_rows
            ok = (
                L.le(a, x0)
                and L.le(x0, b)
                and L.le(a, x1)
                and L.le(x1, b)
                and jn[x0][x1] == b
                and con.congruences[con.principal[a][x0]].refines(al0)
                and con.congruences[con.principal[a][x1]].refines(al1)
            )
            checked += 1
            if not ok:
                bad = {"a": a, "b": b, "x0": x0, "x1": x1}
                break
        if split.holds and bad is None:
            row["verdict"] = "holds"
            row["detail"] = {"instances": checked}
        else:
            row["verdict"] = "fails"
            row["counterexample"] = bad or {"splitting": list(split.failing)}
        rows.append(row)
    return rows, []


def _campaign_thm_csurp(items, budget, seed, trials) -> tuple[list[dict], list[str]]:
    """Congruence lattices of congruence-splitting lattices satisfy the
    uniform refinement property, via the constructed witness."""
    rows = []
    for item_id, L in items:
        if not is_congruence_splitting(L).holds:
            rows.append(_vacuous(item_id, "thm-csurp", "premise does not apply"))
            continue
        con = con_lattice(L)
        jn = con.as_lattice.join_rows
        k = len(con)
        row = {"item": item_id, "property": "thm-csurp"}
        checked = 0
        bad = None
        for u in range(L.n):
            for v in range(L.n):
                if not L.leq[u, v]:
                    continue
                eps = con.principal[u][v]
                fams = tuple(
                    (i0, i1)
                    for i0 in range(k)
                    for i1 in range(k)
                    if jn[i0][i1] == eps
                )
                w = csurp_witness(L, u, v, fams)
                inst = UrpInstance(con.as_semilattice, eps, fams)
                check = verify_urp_witness(inst, w)
                checked += 1
                if not check.ok:
                    bad = {"u": u, "v": v, "clause": check.clause}
                    break
            if bad:
                break
        if bad is None:
            row["verdict"] = "holds"
            row["detail"] = {"instances": checked}
        else:
            row["verdict"] = "fails"
            row["counterexample"] = bad
        rows.append(row)
    annotations = [NO_FINITE_COUNTEREXAMPLE] if not any(
        r["verdict"] == "fails" for r in rows
    ) else []
    return rows, annotations


def _convex_hom_population(
    items: Sequence[tuple[str, FiniteLattice]]
) -> list[tuple[str, LatticeHom]]:
    pop = []
    for src_id, K in items:
        for _, L in items:
            for h in enumerate_lattice_homs(K, L):
                if has_convex_range(h):
                    pop.append((src_id, h))
    return pop


def _sample(population: list, trials: int, rng: random.Random) -> list:
    if not population:
        return []
    if len(population) >= trials:
        return rng.sample(population, trials)
    return list(population) + rng.choices(population, k=trials - len(population))


def _campaign_prop_convhom(items, budget, seed, trials) -> tuple[list[dict], list[str]]:
    """Lattice homomorphisms with convex range induce weakly distributive
    maps on congruence lattices; chain monotonization stays label-faithful."""
    rng = random.Random(seed)
    pop = _convex_hom_population(items)
    sampled = _sample(pop, trials, rng)
    per_item: dict[str, dict] = {
        item_id: {"homs_checked": 0, "wd_failures": 0} for item_id, _ in items
    }
    for src_id, h in sampled:
        stats = per_item[src_id]
        stats["homs_checked"] += 1
        ch = induced_con_map(h)
        if not is_weakly_distributive(ch):
            stats["wd_failures"] += 1
    # chain monotonization on each item: every principal pair, every
    # congruence pair covering it
    for item_id, L in items:
        con = con_lattice(L)
        jn = con.as_lattice.join_rows
        k = len(con)
        checked = 0
        failures = 0
        for u in range(L.n):
            for v in range(L.n):
                if not L.leq[u, v]:
                    continue
                tgt = con.principal[u][v]
                for i0 in range(k):
                    for i1 in range(k):
                        if jn[i0][i1] != tgt:
                            continue
                        chain_ = alternating_chain(
                            L, u, v, con.congruences[i0], con.congruences[i1]
                        )
                        checked += 1
                        if not chain_.validate():
                            failures += 1
        per_item[item_id]["chains_checked"] = checked
        per_item[item_id]["chain_failures"] = failures
    rows = []
    for item_id, _ in items:
        stats = per_item[item_id]
        verdict = (
            "fails"
            if stats["wd_failures"] or stats.get("chain_failures")
            else "holds"
        )
        rows.append(
            {"item": item_id, "property": "prop-convhom", "verdict": verdict, "detail": stats}
        )
    return rows, []


def _semilattice_hom_population(
    items: Sequence[tuple[str, FiniteLattice]]
) -> list[tuple[str, SemilatticeHom]]:
    sls = [(item_id, FiniteJoinSemilattice.from_lattice(L)) for item_id, L in items]
    pop = []
    for src_id, S in sls:
        for _, T in sls:
            pop.extend((src_id, h) for h in enumerate_semilattice_homs(S, T))
    return pop


def _campaign_lem_wdadd(items, budget, seed, trials) -> tuple[list[dict], list[str]]:
    """Weak distributivity is closed under join: combine witnesses at u0 and
    u1 into one at u0 + u1 and validate it."""
    rng = random.Random(seed)
    population = []
    for src_id, h in _semilattice_hom_population(items):
        if not has_refinement_property(h.target).holds:
            continue
        wd_at = [u for u in range(h.source.n) if is_weakly_distributive_at(h, u).holds]
        population.extend(
            (src_id, h, u0, u1) for u0 in wd_at for u1 in wd_at
        )
    sampled = _sample(population, trials, rng)
    per_item = {item_id: {"combined": 0, "failures": 0} for item_id, _ in items}
    for src_id, h, u0, u1 in sampled:
        stats = per_item[src_id]
        stats["combined"] += 1
        w0 = is_weakly_distributive_at(h, u0).witness
        w1 = is_weakly_distributive_at(h, u1).witness
        try:
            wd_join_combine(h, u0, u1, w0, w1)
        except AssertionError:
            stats["failures"] += 1
    rows = [
        {
            "item": item_id,
            "property": "lem-wdadd",
            "verdict": "fails" if per_item[item_id]["failures"] else "holds",
            "detail": per_item[item_id],
        }
        for item_id, _ in items
    ]
    return rows, []


def _campaign_prop_urpadd(items, budget, seed, trials) -> tuple[list[dict], list[str]]:
    """The uniform refinement property is closed under join: split the
    canonical instance at e0 + e1, solve both halves, recombine, validate."""
    rng = random.Random(seed)
    population = []
    for item_id, L in items:
        S = FiniteJoinSemilattice.from_lattice(L)
        if not has_refinement_property(S).holds:
            continue
        population.extend(
            (item_id, S, e0, e1) for e0 in range(S.n) for e1 in range(S.n)
        )
    sampled = _sample(population, trials, rng)
    per_item = {item_id: {"combined": 0, "failures": 0, "budget_exceeded": 0} for item_id, _ in items}
    for item_id, S, e0, e1 in sampled:
        stats = per_item[item_id]
        stats["combined"] += 1
        try:
            combined = canonical_instance(S, S.join_rows[e0][e1])
            i0, i1 = refine_instance(combined, e0, e1)
            w0 = search_urp_witness(i0, budget)
            w1 = search_urp_witness(i1, budget)
            if w0 is None or w1 is None:
                stats["failures"] += 1
                continue
            urp_join_combine(combined, i0, i1, w0, w1)
        except SearchBudgetExceeded:
            stats["budget_exceeded"] += 1
        except AssertionError:
            stats["failures"] += 1
    rows = []
    for item_id, _ in items:
        stats = per_item[item_id]
        verdict = "fails" if stats["failures"] else (
            "budget-exceeded" if stats["budget_exceeded"] else "holds"
        )
        rows.append(
            {"item": item_id, "property": "prop-urpadd", "verdict": verdict, "detail": stats}
        )
    return rows, []


def _campaign_prop_urpclwd(items, budget, seed, trials) -> tuple[list[dict], list[str]]:
    """The uniform refinement property transfers along weakly distributive
    maps: pull the instance back, solve at the source, push forward."""
    rng = random.Random(seed)
    population = []
    for src_id, h in _semilattice_hom_population(items):
        if not is_weakly_distributive(h):
            continue
        population.extend((src_id, h, u) for u in range(h.source.n))
    sampled = _sample(population, trials, rng)
    per_item = {item_id: {"transfers": 0, "failures": 0, "budget_exceeded": 0, "no_source_witness": 0} for item_id, _ in items}
    from .urp import NoSourceWitness

    for src_id, h, u in sampled:
        stats = per_item[src_id]
        stats["transfers"] += 1
        try:
            inst = canonical_instance(h.target, h.map[u])
            urp_transfer(h, u, inst, budget)
        except SearchBudgetExceeded:
            stats["budget_exceeded"] += 1
        except NoSourceWitness:
            # URP fails at u in the source; the premise does not apply
            stats["no_source_witness"] += 1
        except AssertionError:
            stats["failures"] += 1
    rows = []
    for item_id, _ in items:
        stats = per_item[item_id]
        verdict = "fails" if stats["failures"] else (
            "budget-exceeded" if stats["budget_exceeded"] else "holds"
        )
        rows.append(
            {"item": item_id, "property": "prop-urpclwd", "verdict": verdict, "detail": stats}
        )
    return rows, []


def _campaign_ring_nid_id(rings, budget, seed, trials) -> tuple[list[dict], list[str]]:
    rows = []
    for spec in rings:
        R = FiniteRing.from_matrix_spec(spec)
        ok = regring.verify_nid_id_iso(R) and regring.neutral_iff_iso_closed(R)
        rows.append(
            {"item": spec, "property": "ring-nid-id", "verdict": "holds" if ok else "fails"}
        )
    return rows, []


def _campaign_ring_conc_idc(rings, budget, seed, trials) -> tuple[list[dict], list[str]]:
    rows = []
    for spec in rings:
        R = FiniteRing.from_matrix_spec(spec)
        ok = regring.conc_idc_iso(R)
        rows.append(
            {"item": spec, "property": "ring-conc-idc", "verdict": "holds" if ok else "fails"}
        )
    return rows, []


def _campaign_ring_pi(rings, budget, seed, trials) -> tuple[list[dict], list[str]]:
    rows = []
    for spec in rings:
        R = FiniteRing.from_matrix_spec(spec)
        checks = regring.verify_pi_map(R)
        k = regring.v_monoid(R).k
        universal = regring.max_semilattice_quotient(k).verify_universal_property()
        ok = all(checks.values()) and universal
        row = {
            "item": spec,
            "property": "ring-pi",
            "verdict": "holds" if ok else "fails",
            "detail": {**checks, "k": k, "universal-property": universal},
        }
        rows.append(row)
    return rows, []


_THEOREMS: dict[str, Callable] = {
    "prop-a": _campaign_prop_a,
    "prop-b": _campaign_prop_b,
    "prop-d": _campaign_prop_d,
    "thm-csurp": _campaign_thm_csurp,
    "prop-convhom": _campaign_prop_convhom,
    "lem-wdadd": _campaign_lem_wdadd,
    "prop-urpadd": _campaign_prop_urpadd,
    "prop-urpclwd": _campaign_prop_urpclwd,
    "ring-nid-id": _campaign_ring_nid_id,
    "ring-conc-idc": _campaign_ring_conc_idc,
    "ring-pi": _campaign_ring_pi,
}


def campaign_theorem(
    theorem_id: str,
    items: Sequence[tuple[str, FiniteLattice]] | None = None,
    rings: Sequence[str] | None = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
) -> CampaignReport:
    if theorem_id not in _THEOREMS:
        raise UnknownTheorem(theorem_id)
    params: dict = {"theorem": theorem_id, "budget": budget, "seed": seed}
    if theorem_id in RING_THEOREMS:
        universe: Sequence = tuple(rings) if rings else TEST_RINGS
        params["rings"] = list(universe)
    else:
        universe = items if items is not None else default_corpus(5)
        params["items"] = len(universe)
        params["trials"] = trials
    rows, annotations = _THEOREMS[theorem_id](universe, budget, seed, trials)
    report = CampaignReport("verify-theorem", params, rows, annotations)
    return report


# -- single-ring pipeline --------------------------------------------------------


def _known_lattice_names() -> dict[str, str]:
    names = {canonical_form(m3()): "M3", canonical_form(n5()): "N5"}
    for k in range(1, 9):
        names[canonical_form(chain(k))] = f"{k}-chain"
    for k in range(1, 4):
        names[canonical_form(boolean(k))] = f"2^{k} Boolean"
    return names


def campaign_ring(spec: str) -> CampaignReport:
    comps = parse_ring_spec(spec)
    R = FiniteRing.from_matrix_spec(comps)
    report = CampaignReport("ring", {"spec": spec, "size": R.n})
    names = _known_lattice_names()

    reg = regring.is_regular(R)
    report.rows.append(
        {"item": spec, "property": "regular", "verdict": "holds" if reg.holds else "fails"}
    )
    if not reg.holds:
        return report
    lr = regring.principal_right_ideals(R)
    code = canonical_form(lr.lattice)
    from .lattice import is_complemented, is_modular

    report.rows.append(
        {
            "item": spec,
            "property": "principal-right-ideals",
            "verdict": "holds"
            if is_modular(lr.lattice) and is_complemented(lr.lattice)
            else "fails",
            "detail": {
                "size": lr.lattice.n,
                "canonical": code,
                "known-as": names.get(code, "(unnamed)"),
            },
        }
    )
    tsl = regring.two_sided_ideals(R)
    report.rows.append(
        {
            "item": spec,
            "property": "two-sided-ideals",
            "verdict": "holds",
            "detail": {"size": tsl.lattice.n},
        }
    )
    vm = regring.v_monoid(R)
    report.rows.append(
        {
            "item": spec,
            "property": "v-monoid",
            "verdict": "holds",
            "detail": {"k": vm.k},
        }
    )
    for prop, ok in (
        ("nid-id-iso", regring.verify_nid_id_iso(R)),
        ("neutral-iff-iso-closed", regring.neutral_iff_iso_closed(R)),
        ("conc-idc-iso", regring.conc_idc_iso(R)),
    ):
        report.rows.append(
            {"item": spec, "property": prop, "verdict": "holds" if ok else "fails"}
        )
    checks = regring.verify_pi_map(R)
    report.rows.append(
        {
            "item": spec,
            "property": "pi-map",
            "verdict": "holds" if all(checks.values()) else "fails",
            "detail": checks,
        }
    )
    universal = regring.max_semilattice_quotient(vm.k).verify_universal_property()
    report.rows.append(
        {
            "item": spec,
            "property": "max-semilattice-quotient",
            "verdict": "holds" if universal else "fails",
        }
    )
    return report


# -- argument parsing ------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage, which collides with the
    budget-exceeded code; route usage errors to 3 instead."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise SystemExit(self._operational_exit(message))

    def _operational_exit(self, message: str) -> int:
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return 3


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conlat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"conlat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen-corpus", help="enumerate lattices to a JSONL corpus")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--out", default="-", help="output path (default stdout)")

    p = sub.add_parser("check", help="run a per-lattice property check")
    p.add_argument("property", choices=PROPERTY_IDS)
    p.add_argument("--in", dest="in_path", help="JSONL corpus path")
    p.add_argument("--max-size", type=int, help="generate the corpus in memory")
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    p.add_argument("--out", default="-")

    p = sub.add_parser("verify-theorem", help="run a verification campaign")
    p.add_argument("theorem", choices=THEOREM_IDS)
    p.add_argument("--in", dest="in_path")
    p.add_argument("--max-size", type=int)
    p.add_argument("--ring", action="append", help="ring spec (repeatable)")
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")

    p = sub.add_parser("ring", help="full pipeline on one ring")
    p.add_argument("spec")
    p.add_argument("--out", default="-")
    return parser


def _emit(report: CampaignReport, out_path: str, started: float) -> int:
    text = report.serialize()
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)
    print(f"elapsed: {time.time() - started:.2f}s", file=sys.stderr)
    return report.exit_code


def _load_items(args) -> list[tuple[str, FiniteLattice]]:
    if args.in_path:
        return read_corpus(args.in_path)
    if args.max_size is not None:
        return default_corpus(args.max_size)
    return default_corpus(5)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    started = time.time()
    try:
        if args.command == "gen-corpus":
            lattices = enumerate_lattices(args.max_size)
            if args.out == "-":
                count = write_corpus(lattices, sys.stdout)
            else:
                with open(args.out, "w") as fh:
                    count = write_corpus(lattices, fh)
            print(f"wrote {count} lattices", file=sys.stderr)
            print(f"elapsed: {time.time() - started:.2f}s", file=sys.stderr)
            return 0
        if args.command == "check":
            report = campaign_check(args.property, _load_items(args), args.budget)
            return _emit(report, args.out, started)
        if args.command == "verify-theorem":
            items = None
            if args.theorem not in RING_THEOREMS:
                items = _load_items(args)
            report = campaign_theorem(
                args.theorem,
                items=items,
                rings=args.ring,
                budget=args.budget,
                seed=args.seed,
            )
            return _emit(report, args.out, started)
        if args.command == "ring":
            report = campaign_ring(args.spec)
            return _emit(report, args.out, started)
        raise AssertionError(f"unhandled command {args.command}")
    except (
        OSError,
        ParseError,
        UnknownProperty,
        UnknownTheorem,
        BoundExceeded,
        regring.SpecParse,
        regring.RingTooLarge,
    ) as exc:
        print(f"conlat: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())

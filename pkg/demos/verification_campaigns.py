"""
Verification campaigns and machine-readable reports
===================================================

The command line front end batches the library's checks over corpora of
small lattices and emits deterministic JSON reports.  The same campaign
functions are importable, which is how this demo drives them; shell usage
is shown alongside.
"""

# %%
# Corpora
# -------
# A corpus is one lattice per isomorphism class up to a size bound, with
# canonical codes as stable item identifiers.  On the shell:
#
#   conlat gen-corpus --max-size 5 --out corpus.jsonl
from conlat.cli import default_corpus

items = default_corpus(5)
print("corpus size:", len(items))
print("first items:", [item_id for item_id, _ in items[:4]])

# %%
# Property checks
# ---------------
# campaign_check runs one decision procedure per corpus item.  Exit code
# conventions: 0 all hold, 1 a violation, 2 a budget ran out, 3 an
# operational error.  Shell equivalent:
#
#   conlat check property-c --in corpus.jsonl
from conlat.cli import campaign_check

rep = campaign_check("property-c", items)
print("summary:", rep.summary, " exit code:", rep.exit_code)
violations = [r["item"] for r in rep.rows if r["verdict"] == "fails"]
print("lattices without property (C):", len(violations))

# %%
# Distributivity of congruence lattices holds throughout, so that check
# exits 0.
rep = campaign_check("con-distributive", items)
print("con-distributive:", rep.summary, " exit:", rep.exit_code)

# %%
# Theorem campaigns
# -----------------
# verify-theorem campaigns validate constructive claims, sampling inputs
# when the population is large.  Randomized campaigns take a seed and are
# reproducible: the same (corpus, seed, budget) gives a byte-identical
# report.  Shell equivalent:
#
#   conlat verify-theorem prop-d --max-size 5 --seed 0
from conlat.cli import campaign_theorem

rep = campaign_theorem("prop-d", items)
print("prop-d:", rep.summary)
rep = campaign_theorem("lem-wdadd", items, trials=2000, seed=0)
print("lem-wdadd combined inputs:",
      sum(r["detail"]["combined"] for r in rep.rows), " fails:",
      rep.summary["fails"])

# %%
# Negative-result bookkeeping
# ---------------------------
# URP campaigns that find no failure annotate the report: failures are
# expected to be absent at finite scale, since the smallest known
# congruence semilattices violating the property have size at least
# aleph-two.
from conlat.cli import NO_FINITE_COUNTEREXAMPLE

rep = campaign_theorem("thm-csurp", items)
print("thm-csurp fails:", rep.summary["fails"])
print("annotated:", NO_FINITE_COUNTEREXAMPLE in rep.annotations)

# %%
# Ring pipelines
# --------------
# The ring command chains every check for one ring into a single report.
# Shell equivalent:
#
#   conlat ring "M(2,2)"
from conlat.cli import campaign_ring

rep = campaign_ring("M(2,2)")
for row in rep.rows:
    detail = row.get("detail", "")
    print(f"  {row['property']:<28} {row['verdict']}  {detail}")

# %%
# Serialized reports
# ------------------
# Reports serialize with sorted keys; wall-clock timing goes to stderr
# only, keeping stdout reproducible.
print(rep.serialize()[:400], "...")

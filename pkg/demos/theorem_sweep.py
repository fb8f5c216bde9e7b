#!/usr/bin/env python3
# Sweep a whole corpus against one spectral bound and inspect the outcome.
from fracext import emit_graph6, parse_graph6
from fracext.corpus import connected_graphs, complement_corpus
from fracext.theorems import theorem_spec, check_theorem, sweep

spec = theorem_spec("q_1", k=1)

# one graph at a time: check_theorem classifies into five statuses
from fracext import complete, cycle, extremal_graph, ExtremalParams
for g in (complete(8), cycle(8), extremal_graph(ExtremalParams(8, 1, 2))):
    r = check_theorem(g, spec)
    print(f"{r.graph6:10s} e={r.e:2d}  value={r.value:.6f}  "
          f"threshold={r.threshold:.6f}  {r.status}")

# the full order-8 sweep: every connected graph, no exceptions
rep = sweep(connected_graphs(8), spec, corpus_name="connected:8")
print(f"\nscanned {rep.scanned}, hypotheses met {rep.hypothesis_met}, "
      f"bound met {rep.bound_met}")
print(f"confirmed extendable {rep.confirmed}, equality cases "
      f"{len(rep.equality_cases)}, counterexamples {len(rep.counterexamples)}")

eq = rep.equality_cases[0]
print(f"the unique equality case is {eq.graph6} with q = {eq.value:.10f}")

# an edge-count bound prefers a complement-enumerated dense corpus
edge_spec = theorem_spec("edge_1", k=1)
dense = sweep(complement_corpus(11, 8), edge_spec, corpus_name="complement:11:8")
print(f"\ndense corpus: scanned {dense.scanned}, equality "
      f"{len(dense.equality_cases)}, counterexamples {len(dense.counterexamples)}")
assert dense.ok and rep.ok

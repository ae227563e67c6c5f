"""The forcing-number trichotomy across the named families.

A vertex set X forces Hamiltonicity when every cycle through all of X
spans the graph; h is the smallest size of such a set.  For graphs
satisfying Ore's condition, h is always n-2, n/2, or n, and classify()
reads which one off the weak closure.
"""

from hamforce import (
    classify,
    complete_graph,
    gen_complete_bipartite,
    gen_g21,
    gen_phi1,
    gen_phi3_regular,
)

samples = [
    ("K_7 (complete)", complete_graph(7)),
    ("K_2 v (K_2 + K_3)", gen_phi1(7, 2)),
    ("K_2 v (K_3 + K_3)", gen_phi1(8, 3)),
    ("independent 3 under K_3", gen_g21(2)),
    ("K_{4,4}", gen_complete_bipartite(4)),
    ("C_6 v K_2", gen_phi3_regular(8, 2, [(i, (i + 1) % 6) for i in range(6)])),
]

print(f"{'graph':26} {'n':>3} {'h':>3} {'class':6} minimum forcing set")
for label, g in samples:
    r = classify(g)
    members = ",".join(str(v) for v in sorted(r.hforce_set))
    print(f"{label:26} {g.n:>3} {r.h:>3} {r.phi_class:6} {{{members}}}")

# The two dominating vertices of the n-2 shapes are exactly the ones
# left out of the forcing set: any cycle through the rest must pass
# through both, and only a spanning cycle can afford that.
r = classify(gen_phi1(8, 3))
left_out = sorted(set(range(8)) - r.hforce_set)
print("\nleft out of the K_2 v (K_3 + K_3) set:", left_out,
      "degrees:", [classify(gen_phi1(8, 3)).closure.result.degree(v) for v in left_out])

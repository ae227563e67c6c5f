"""Certify the O(n^3) classifier against exhaustive enumeration.

The oracle enumerates every cycle, so it is exponential and capped at
n = 12, but within that range it is ground truth: a set forces iff it
hits the complement of every non-spanning cycle.
"""

from hamforce import classify, enumerate_cycles, gen_random_otg, is_hforce, min_hforce

# All cycles of a small graph, canonical and deduplicated.
g = gen_random_otg(7, 5)
cycles = enumerate_cycles(g)
short = [c for c in cycles if len(c) < g.n]
print(g, "->", len(cycles), "cycles,", len(short), "of them non-spanning")

# The oracle's minimum versus the classifier's answer.
report = min_hforce(g)
result = classify(g)
print("oracle min_h:", report.min_h, "set:", sorted(report.min_set))
print("classifier h:", result.h, "set:", sorted(result.hforce_set), result.phi_class)
assert report.min_h == result.h

# Both answers are genuine forcing sets...
assert is_hforce(g, report.min_set) and is_hforce(g, result.hforce_set)

# ...and every non-spanning cycle misses at least one chosen vertex,
# which is exactly what makes the set forcing.
for c in short:
    assert result.hforce_set - set(c)
print("every non-spanning cycle avoids part of the returned set")

# Sweep a batch of random Ore graphs for agreement.
mismatches = 0
for seed in range(60):
    g = gen_random_otg(5 + seed % 6, 400 + seed)
    if classify(g).h != min_hforce(g).min_h:
        mismatches += 1
print("mismatches over 60 random Ore graphs:", mismatches)

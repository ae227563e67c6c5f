"""Build graphs, read degrees, and test the classical degree conditions."""

from hamforce import (
    Graph,
    check_dirac,
    check_otg,
    complement_components,
    format_edgelist,
    gen_complete_bipartite,
    parse_edgelist,
)

# A graph is a vertex count plus an edge list; labels run 0..n-1.
pentagon = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
print(pentagon, "degrees:", pentagon.degrees().tolist())

# The same graph through the text interchange format.
text = format_edgelist(pentagon, comment="five-cycle")
print(text)
assert parse_edgelist(text) == pentagon

# Ore's condition asks every nonadjacent pair for degree sum >= n.
# The pentagon misses it, and the report names a violating pair.
report = check_otg(pentagon)
print("pentagon satisfies Ore:", report.is_otg, "witness:", report.witness)

# K_{3,3} sits exactly at the threshold: nonadjacent pairs sum to 6 = n.
k33 = gen_complete_bipartite(3)
print("K_{3,3} satisfies Ore:", check_otg(k33).is_otg)
print("K_{3,3} satisfies Dirac (min degree >= n/2):", check_dirac(k33))

# The complement of a balanced complete bipartite graph falls apart
# into the two parts; this structural probe is reused by the classifier.
print("complement components of K_{3,3}:", complement_components(k33))

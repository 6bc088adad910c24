"""Counting Latin-generating rules three ways.

The closed form (q-1)^(k-2) q^((k-1)(b-1)) is checked against walk
counting on the window graph and, where the rule space is small, an
exhaustive sweep of every linear rule.
"""

from lhca import (
    GF,
    build_graph,
    count_latin_rules,
    count_paths,
    latin_hypercube_count,
)

print(f"{'q':>2} {'b':>2} {'k':>2} {'formula':>10} {'walks':>10} {'sweep':>10}")
for q, b, k in [(2, 2, 3), (2, 2, 4), (2, 2, 5), (3, 2, 3), (3, 2, 4),
                (2, 3, 3), (2, 3, 4), (4, 2, 3)]:
    fld = GF(q)
    formula = latin_hypercube_count(fld, b, k)
    walks = count_paths(build_graph(fld, b), k - 3)
    swept = count_latin_rules(fld, b, k)
    print(f"{q:>2} {b:>2} {k:>2} {formula:>10} {walks:>10} {swept:>10}")

# the count is exact for cubes far beyond anything enumerable
big = latin_hypercube_count(GF(5), b=4, k=12)
print("\nL for q=5, b=4, k=12 has", big.bit_length(), "bits:")
print(big)

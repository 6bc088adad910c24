# Synthesize a 5-dimensional Latin hypercube rule from a walk, then
# recover a hidden coordinate block from the cube entry it produced.

import itertools
import random

from lhca import (
    GF,
    apply_ca,
    build_graph,
    enumerate_paths,
    is_latin,
    rule_from_path,
    solve_middle_block,
)

fld = GF(2)
g = build_graph(fld, 2)

walk = ((0, 1, 0), (0, 1, 1), (1, 0, 1))
rule = rule_from_path(fld, walk)
print("walk:", " -> ".join("".join(map(str, v)) for v in walk))
print("rule coefficients:", rule.full_coeffs)
print("taps:", [f"x{i + 1}" for i, c in enumerate(rule.full_coeffs) if c])
print("latin at k=5:", bool(is_latin(rule)))

# every length-2 walk gives a distinct Latin rule; there are 16
rules = [rule_from_path(fld, w) for w in enumerate_paths(g, 2)]
print("rules from all walks:", len(rules),
      "| all latin:", all(bool(is_latin(r)) for r in rules))

# invert the middle block: fix the other four blocks and ask which block
# values produce a given output
rng = random.Random(7)
blocks = [tuple(rng.randrange(2) for _ in range(2)) for _ in range(5)]
y = apply_ca(rule, tuple(itertools.chain.from_iterable(blocks)))
for i in (1, 2, 3):
    fixed = blocks[:i] + blocks[i + 1:]
    solved = solve_middle_block(rule, i, fixed, y)
    print(f"block {i} recovered:", solved, "| expected:", blocks[i])

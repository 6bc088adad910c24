# Build the order-4 Latin cube generated by the rule
# f(x1..x5) = x1 + x3 + x5 over GF(2), with blocks of b=2 cells.

from lhca import GF, LinearRule, dump_text, entry, is_latin

rule = LinearRule(GF(2), b=2, k=3, coeffs=(0, 1, 0))
print("rule coefficients (border fixed to 1):", rule.full_coeffs)
print("diameter:", rule.d, "cube order:", 2 ** rule.b)
print()

print(dump_text(rule))

check = is_latin(rule)
print("latin:", bool(check))
print("entry at (1,3,2):", entry(rule, (1, 3, 2)))

# a rule with a singular window fails along a specific axis
bad = LinearRule(GF(2), b=2, k=3, coeffs=(0, 0, 0))
check = is_latin(bad)
print("flat rule latin:", bool(check),
      "| first violation: axis", check.axis,
      "fixed", check.fixed, "value", check.value)

"""Small tour of the field arithmetic layer."""

from lhca import GF, default_irreducible_poly

for q in (2, 3, 4, 5, 8, 9):
    fld = GF(q)
    print(fld)
    print("  add row for 1:", [fld.add(1, x) for x in fld.elements()])
    print("  mul row for 2:", [fld.mul(2, x) for x in fld.elements()] if q > 2
          else "n/a")
    print("  inverses:     ", [fld.inv(x) for x in fld.elements() if x])

# extension fields carry their modulus; the default is the smallest
# irreducible polynomial in the integer encoding
for p, m in ((2, 2), (2, 3), (3, 2)):
    print(f"GF({p}^{m}) default poly encoding:",
          default_irreducible_poly(p, m))

# in GF(4) the nonzero elements form a cycle of length 3
f4 = GF(4)
x = 2
orbit = [x]
while True:
    x = f4.mul(x, 2)
    if x == orbit[0]:
        break
    orbit.append(x)
print("powers of 2 in GF(4):", orbit)

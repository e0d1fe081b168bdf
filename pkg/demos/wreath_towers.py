"""The F_l construction on additive bases and the towers it builds.

    python3 demos/wreath_towers.py
"""
from chowcalc.wreath import (
    Atom,
    BasedElement,
    WreathBasis,
    cyclic_group_basis,
    f_l,
    f_l_cardinality,
    iterate_tower,
    kunneth_tensor,
    stable_f_l,
)

# Z[t]/(2t) truncated below codimension 4
B = cyclic_group_basis(2, 4)
out = stable_f_l(B, 2)
for e in sorted(out, key=lambda e: (e.degree, str(e.label))):
    print(f"  codim {e.degree}: {e.label}  order {e.order}")
print("table:", [str(A) for A in out.to_table()])

# nothing depends on the auxiliary dimension once it is large enough
print("N-independent:", all(set(stable_f_l(B, 2, N)) == set(out) for N in (4, 5, 9)))

# graded version on Z[x]/(3x) in degrees 0..2: basis size matches the orbit count formula
G = WreathBasis(tuple(BasedElement(Atom(f"x^{d}"), d, 3 if d else 0) for d in range(3)))
for e in f_l(G, 3):
    print(f"  degree {e.degree}: {e.label}  order {e.order}")
print("cardinality:", len(f_l(G, 3)), f_l_cardinality(G, 3))

# Z/3 wr Z/3 and Z/3 wr Z/3 wr Z/3
print("height 1:", [str(A) for A in iterate_tower(3, 1, 1, 4)])
print("height 2, summands per degree:", [len(A.factors) for A in iterate_tower(3, 1, 2, 6)])

# products of groups: Künneth, no Tor corrections here
Z2 = iterate_tower(2, 1, 0, 4)
print("Z/2 x Z/2:", [str(A) for A in kunneth_tensor(Z2, Z2, 4)])

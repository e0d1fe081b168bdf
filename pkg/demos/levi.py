"""Twisted coinvariants for block Levi subgroups of GL_n.

    python3 demos/levi.py
"""
from chowcalc import twisted_coinvariants, twisted_coinvariants_levi
from chowcalc.invariants import GL, levi_elementary_expansion

# the torus of GL_2: two degree-one block invariants x, y
print("e_2 in block invariants:", levi_elementary_expansion(2, [1, 1]))

T = twisted_coinvariants_levi([1, 1], 3, 4)
for d, A in T.items():
    print(f"  T in GL_2(F_3), degree {d}: {A}")

# one block is the whole group, so we get the ordinary table back
same = twisted_coinvariants_levi([3], 2, 5) == twisted_coinvariants(GL(3), 2, 5)[1]
print("blocks (3) match GL_3:", same)

# a genuinely mixed Levi
print([str(A) for A in twisted_coinvariants_levi([2, 1], 2, 4)])

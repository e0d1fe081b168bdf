"""Chow rings of BG(F_q) for the classical families, degree by degree.

    python3 demos/presentations.py
"""
from chowcalc import ChevalleyQuery, chow_BG, theorem_a
from chowcalc.invariants import GL, SL, Sp
from chowcalc.presentations import component_oracle

# GL_2(F_3): Chern classes c1, c2 killed by 3 - 1 and 9 - 1
P, T = chow_BG(ChevalleyQuery(GL(2), 3, 6))
print(P)
for d, A in T.items():
    print(f"  A^{d} = {A}")

# the closed form never needs a Smith form, but we can compare anyway
rels = P.ideal_generators()
print("oracle agrees:", all(component_oracle(P.grading, rels, d) == T[d] for d in range(7)))

# SL drops c1, Sp keeps only even degrees
for kind, q in ((SL(3), 2), (Sp(4), 2)):
    P, T = chow_BG(ChevalleyQuery(kind, q, 4))
    print(f"{kind} over F_{q}: {P}")
    print("  ", [str(A) for A in T])

# over C we have to invert 2 and p (just p when q = 1 mod 4)
P, T = theorem_a(ChevalleyQuery(Sp(4), 3, 4, frozenset({2, 3})))
print("Sp_4(F_3) over C, 6 inverted:", P, "->", T[4])

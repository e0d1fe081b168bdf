"""l-local checks for GL_n(F_q): Sylow shape, orders, mod-l ring, embedding.

    python3 demos/sylow_consistency.py
"""
from chowcalc import (
    check_restriction_embedding,
    glq_l_part_order,
    guillot_check,
    sylow_chow_model,
    sylow_shape,
)
from chowcalc.abelian import primary_part
from chowcalc.presentations import R1, component_closed_form

n, q, l = 6, 2, 3
shape = sylow_shape(n, q, l)
print(f"{l}-Sylow of GL_{n}(F_{q}): {shape}")
print("order exponents:", shape.order_exponent, glq_l_part_order(n, q, l))

model = sylow_chow_model(shape, 5)
P = R1(n, q)
for d in range(5):
    print(f"  d={d}: {primary_part(component_closed_form(P, d), l)}  ->  {model[d]}")
print("embeds:", check_restriction_embedding(n, q, l, 4))

# mod l only the classes c_r, c_2r, .. survive
for args in ((3, 2, 3), (4, 2, 3), (2, 4, 3), (5, 3, 13)):
    print(args, guillot_check(*args, 10))

"""Chow rings of classifying spaces of finite Chevalley groups.

Exact integer computations: graded presentations of ``A^* B G(F_q)`` for
GL_n, Sp_2m and SL_n, Frobenius-twisted coinvariants, Totaro's wreath
functor ``F_l`` and Sylow models, each cross-checked against brute-force
Smith normal form computations.
"""

from .abelian import (
    AbelianGroupType,
    IntMatrix,
    cokernel,
    direct_sum,
    embeds,
    hermite_slice_equal,
    localize,
    smith_normal_form,
    tensor,
    tor,
)
from .chevalley import (
    ChevalleyQuery,
    SylowShape,
    check_restriction_embedding,
    chow_BG,
    glq_l_part_order,
    guillot_check,
    sylow_chow_model,
    sylow_shape,
    theorem_a,
)
from .invariants import GL, SL, GroupKind, Sp
from .polyring import IntPolynomial
from .presentations import (
    DiagonalPresentation,
    GradedTable,
    R1,
    R2,
    R3,
    component_closed_form,
    component_oracle,
)
from .twisted import twisted_coinvariants, twisted_coinvariants_levi, verify_ideal_reduction
from .wreath import WreathBasis, f_l, iterate_tower, kunneth_tensor, stable_f_l

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupType",
    "IntMatrix",
    "cokernel",
    "direct_sum",
    "embeds",
    "hermite_slice_equal",
    "localize",
    "smith_normal_form",
    "tensor",
    "tor",
    "ChevalleyQuery",
    "SylowShape",
    "check_restriction_embedding",
    "chow_BG",
    "glq_l_part_order",
    "guillot_check",
    "sylow_chow_model",
    "sylow_shape",
    "theorem_a",
    "GL",
    "SL",
    "GroupKind",
    "Sp",
    "IntPolynomial",
    "DiagonalPresentation",
    "GradedTable",
    "R1",
    "R2",
    "R3",
    "component_closed_form",
    "component_oracle",
    "twisted_coinvariants",
    "twisted_coinvariants_levi",
    "verify_ideal_reduction",
    "WreathBasis",
    "f_l",
    "iterate_tower",
    "kunneth_tensor",
    "stable_f_l",
    "__version__",
]

"""Exact decomposition of internal tensor products of polynomial functors.

Everything is computed in exact integer arithmetic: contingency-matrix
decompositions of exponential-functor products, Weyl-filtration
multiplicities, symmetric-group Kronecker coefficients (general, two-row,
one-box, and hook procedures), and an independent character-theoretic oracle
used to verify all of it.
"""

from .errors import (
    ConsistencyError,
    DegreeMismatchError,
    SizeBoundError,
    UndefinedProductError,
)
from .partitions import (
    Composition,
    ContingencyMatrix,
    Partition,
    SkewShape,
    enumerate_contingency,
    enumerate_partitions,
    iter_contingency,
    partitions_of,
)
from .schur import (
    SchurExpansion,
    conjugate_expansion,
    kostka,
    lr_coeff,
    schur_outer_product,
    skew_schur_expansion,
)
from .characters import (
    ClassFunction,
    centralizer_order,
    class_size,
    dimension,
    internal_h_oracle,
    kronecker_oracle,
    kronecker_oracle_expansion,
    lr_oracle,
    mn_character,
    perm_character,
)
from .internal_product import (
    GAMMA,
    SYM,
    WEDGE,
    CharTwoMode,
    ExpDecomposition,
    ExpFunctor,
    exponential_tensor,
    gamma_tensor_gamma,
    hook_mixed,
    jacobi_trudi,
    kronecker,
    kronecker_general,
    kronecker_hook,
    kronecker_one_box,
    kronecker_two_row,
    weyl_tensor_gamma,
    weyl_tensor_wedge,
)

__all__ = [
    "ConsistencyError",
    "DegreeMismatchError",
    "SizeBoundError",
    "UndefinedProductError",
    "Composition",
    "ContingencyMatrix",
    "Partition",
    "SkewShape",
    "enumerate_contingency",
    "enumerate_partitions",
    "iter_contingency",
    "partitions_of",
    "SchurExpansion",
    "conjugate_expansion",
    "kostka",
    "lr_coeff",
    "schur_outer_product",
    "skew_schur_expansion",
    "ClassFunction",
    "centralizer_order",
    "class_size",
    "dimension",
    "internal_h_oracle",
    "kronecker_oracle",
    "kronecker_oracle_expansion",
    "lr_oracle",
    "mn_character",
    "perm_character",
    "GAMMA",
    "SYM",
    "WEDGE",
    "CharTwoMode",
    "ExpDecomposition",
    "ExpFunctor",
    "exponential_tensor",
    "gamma_tensor_gamma",
    "hook_mixed",
    "jacobi_trudi",
    "kronecker",
    "kronecker_general",
    "kronecker_hook",
    "kronecker_one_box",
    "kronecker_two_row",
    "weyl_tensor_gamma",
    "weyl_tensor_wedge",
]

__version__ = "0.1.0"

"""Exact engine for Clifford systems, octonionic invariant forms, and
Hurwitz-Radon vector fields on spheres.  All arithmetic is exact
integer/rational; no floating point anywhere."""

from .exactmat import RationalMatrix, SignedPermMatrix, block2, block_diag
from .algebras import (
    AlgebraTable,
    algebra_table,
    block_extension,
    left_mult,
    right_mult,
    spin9_symmetric,
)
from .clifford import (
    CliffordRepresentation,
    CliffordSystem,
    build,
    class_trace,
    classify_essential,
    delta,
    double,
    from_representation,
    tilde,
    to_representation,
    verify,
)
from .forms import (
    FormMatrix,
    KForm,
    canonical_form,
    hodge_star,
    kaehler_form,
    kaehler_matrix,
    lie_action,
    psi_matrix,
    tau,
    wedge,
)
from .liealg import MatrixSpan, bracket_closed, span_dim, triple_span_decomposition
from .kernel import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "AlgebraTable",
    "CliffordRepresentation",
    "CliffordSystem",
    "FormMatrix",
    "KForm",
    "KERNEL_BACKEND",
    "MatrixSpan",
    "RationalMatrix",
    "SignedPermMatrix",
    "algebra_table",
    "block2",
    "block_diag",
    "block_extension",
    "bracket_closed",
    "build",
    "canonical_form",
    "class_trace",
    "classify_essential",
    "delta",
    "double",
    "from_representation",
    "hodge_star",
    "kaehler_form",
    "kaehler_matrix",
    "left_mult",
    "lie_action",
    "psi_matrix",
    "right_mult",
    "span_dim",
    "spin9_symmetric",
    "tau",
    "tilde",
    "triple_span_decomposition",
    "to_representation",
    "verify",
    "wedge",
]

"""Exact generalized inverses and operator orders for finite potent operators."""
from .finite_potent import (
    COUNTABLE,
    FINITE,
    AmbientMismatch,
    ASTDecomposition,
    CNDecomposition,
    FinitePotentOperator,
    ast_decomposition,
    cn_decomposition,
    core_part,
    index,
    pad,
    rank_profile,
)
from .gen_inverse import (
    IndexTooLarge,
    InverseClass,
    InverseKind,
    NoCoreInverse,
    NoGroupInverse,
    check_inverse_class,
    core_dagger,
    core_inverse,
    core_of_mp,
    drazin,
    group_inverse,
    inverse,
    is_ep,
    moore_penrose,
)
from .matrix import (
    DependentBasis,
    Matrix,
    NotSquare,
    ShapeMismatch,
    SingularMatrix,
    Subspace,
)
from .orders import (
    GenerationFailed,
    OrderReport,
    Relation,
    core_leq,
    covering_relation,
    gamma,
    general_core_leq,
    generate_above,
    hasse,
    leq,
    space_leq,
    verify_order_axioms,
)
from .probe import TruncationReport, preimage_growth, truncated_weighted_shift
from .scalars import COMPLEX, REAL, FieldMismatch, Gaussian, I

__version__ = "0.1.0"

"""Hurwitz numbers and brane field theories on colored CW-complexes of dimension <= 2."""
from .complex import (
    ColoredComplex,
    ColorClash,
    ComplexError,
    DanglingCell,
    Edge,
    Face,
    LoopEdge,
    NonSimpleFaceBoundary,
    UnknownVertex,
    Vertex,
    canonical_form,
    complex_key,
    disjoint_union,
    is_isomorphic,
    link,
    star_involution,
    validate_complex,
)
from .coverings import (
    ConstraintMismatch,
    Covering,
    CoveringClass,
    HurwitzValue,
    SearchBounds,
    SearchBoundsExceeded,
    automorphism_order,
    classify,
    covering_classes,
    enumerate_coverings,
    hurwitz,
    hurwitz_d,
    local_invariant,
    restrict_to_cut,
    glue_along_cut,
)
from .frobenius import (
    AlgebraElement,
    FrobeniusAlgebra,
    assemble_algebra,
    copairing,
    evaluate_phi,
    product,
    verify_algebra_axioms,
)
from .gcoverings import g_covering_classes, hurwitz_g, sd_correspondence
from .groups import FiniteGroup, cyclic, klein4, make_group, symmetric
from .kernels import BACKEND
from .lab import (
    TheoryConfig,
    build_hurwitz_algebra,
    character_oracle,
    cross_check_evaluator,
    verify_gluing_identity,
    verify_tft_axioms,
)
from .surgery import (
    BraneComplex,
    Cut,
    compatible_complex,
    contract_along_cut,
    find_cuts,
    foam_complex,
    is_brane,
    sphere_complex,
    suspension,
)
from .textformat import parse_complex_file, serialize_complex

__version__ = "0.1.0"

"""Exact computations with quantum tori, the octonion torus and type-A Lie tori.

The main entry points are re-exported here; see the submodules for the rest.
"""

from .errors import (
    ConstraintViolation,
    LieToriError,
    NotA2Pair,
    NotElementary,
    NotHomogeneous,
    NoWitness,
    OctonionRankBelow3,
)
from .involutions import (
    AntiInvolutionTable,
    ChevalleyInvolutionDescriptor,
    apply_chevalley,
    decide_chevalley_existence,
    extract_anti_involution,
    oracle_search_pre_chevalley,
    synthesize_chevalley,
    synthesize_pre_chevalley_qt,
    verify_chevalley,
)
from .lie_torus import (
    GradedComponentKey,
    LieElement,
    MatrixLieTorus,
    ad_eta,
    ad_exp,
    bracket,
    component,
    theta,
)
from .octonion_torus import (
    OctElement,
    OctonionTorus,
    oct_associator,
    oct_check_alternative,
    oct_conjugation,
    oct_degree_inversion,
    oct_mul,
    oct_pre_chevalley,
)
from .quantum_torus import (
    QTElement,
    QuantumTorus,
    qt_commutator,
    qt_commutator_component_full,
    qt_invert_monomial,
    qt_mul,
    qt_opposite,
)
from .roots import Root, RootSystemA, WeylElement, cartan_integer, chevalley_basis
from .scalars import QuantumMatrix, is_elementary, make_quantum_matrix, twist
from .verify import verify_division, verify_root_grading, verify_torus_axioms

__version__ = "0.1.0"

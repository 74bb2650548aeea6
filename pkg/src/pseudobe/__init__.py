"""Verification and enumeration workbench for finite two-implication
algebras: axiom systems, deductive systems, states and measures, internal
states and state-morphism operators, pseudo-valuations, homomorphisms, and
exhaustive small-model search."""

from .algebra import (
    AXIOM_SYSTEMS,
    AlgebraError,
    AxiomReport,
    ClassificationReport,
    FiniteAlgebra,
    InconsistentOrderError,
    UnboundedAlgebraError,
    check_axioms,
    classify,
    leq,
    negations,
    parse_algebra,
    serialize_algebra,
    vee1,
    vee2,
)
from .dsystems import (
    ConsistencyAlarmError,
    DSFamily,
    NotADeductiveSystemError,
    enumerate_ds,
    format_subset,
    is_deductive_system,
    is_fantastic,
    is_involutive_ds,
    is_maximal,
    is_normal,
    is_prime,
    parse_subset,
    quotient,
)
from .finder import (
    MetaTheoremReport,
    SearchConstraints,
    enumerate_models,
    verify_meta_theorems,
)
from .homs import (
    Homomorphism,
    enumerate_homomorphisms,
    is_homomorphism,
    kernel,
)
from .operators import (
    enumerate_internal_states,
    enumerate_smo,
    is_internal_state,
    is_smo,
)
from .states import (
    is_bosbach_state,
    is_measure,
    is_measure_morphism,
    is_state_morphism,
    measure_cone,
    state_space,
)
from .valuations import (
    is_commutative_pv,
    is_pseudo_valuation,
    is_valuation,
    is_weak_pseudo_valuation,
    valuation_cone,
)

__version__ = "0.1.0"

"""Ideals, primitive ideals, and structure spaces of finite semigroups."""

from .core import (
    FiniteSemigroup,
    SemigroupHom,
    canonical_form,
    check_homomorphism,
    direct_product,
    elements_of,
    enumerate_semigroups,
    full_mask,
    mask_of,
    set_product,
    validate_table,
)
from .ideals import (
    IdealSet,
    enumerate_ideals,
    generated_ideal,
    is_ideal,
    is_prime,
    is_prime_by_ideal_pairs,
    maximal_ideals,
    prime_ideals,
    product_containment_check,
    sxs_union_form,
    xsx_union_form,
)
from .modact import (
    ActionWitness,
    ModuleSpace,
    acted_span,
    annihilator,
    check_action,
    enumerate_actions,
    is_simple,
)
from .primitive import (
    PrimitiveWitness,
    PrimSearchReport,
    PullbackResult,
    default_catalog,
    pullback,
    search_primitives,
    verify_primitive_witness,
)
from .topology import (
    StructureSpace,
    closed_sets,
    closure,
    d_kernel,
    hull,
    irreducibility_report,
    pullback_continuity_check,
    verify_axioms,
)

__version__ = "0.1.0"

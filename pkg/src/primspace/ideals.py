"""Ideals of a finite semigroup: predicates, generation, primes, maximals.

Ideals are nonempty by convention throughout; "proper" excludes the
whole semigroup.  All subset arguments and results are bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteSemigroup, elements_of, full_mask, set_product
from .errors import EmptyGeneratorError, NotAnIdealError, NotProperError

FLAVOR_LEFT = "left"
FLAVOR_RIGHT = "right"
FLAVOR_TWO_SIDED = "two_sided"
FLAVORS = (FLAVOR_LEFT, FLAVOR_RIGHT, FLAVOR_TWO_SIDED)

VARIANT_SET_PRODUCT = "set_product"
VARIANT_GENERATED = "generated_product"


@dataclass(frozen=True)
class IdealSet:
    """A subset known to be an ideal of some ambient semigroup."""

    carrier: int
    flavor: str = FLAVOR_TWO_SIDED


def carrier_of(q) -> int:
    return q.carrier if isinstance(q, IdealSet) else q


def is_ideal(sg: FiniteSemigroup, mask: int, flavor: str = FLAVOR_TWO_SIDED) -> bool:
    """True iff mask is nonempty and closed under the required translations."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if mask == 0 or mask & ~full_mask(sg.order):
        return False
    t = sg.table
    n = sg.order
    want_left = flavor in (FLAVOR_LEFT, FLAVOR_TWO_SIDED)
    want_right = flavor in (FLAVOR_RIGHT, FLAVOR_TWO_SIDED)
    for a in elements_of(mask):
        if want_right:
            row = t[a]
            for s in range(n):
                if not (mask >> row[s]) & 1:
                    return False
        if want_left:
            for s in range(n):
                if not (mask >> t[s][a]) & 1:
                    return False
    return True


def generated_ideal(sg: FiniteSemigroup, x_mask: int) -> IdealSet:
    """Least two-sided ideal containing X, by iterating U -> U | SU | US.

    The iteration is the definition of "least": it adds exactly the
    translates forced by closure and stops at the first fixpoint.
    """
    if x_mask == 0:
        raise EmptyGeneratorError("generated_ideal needs a nonempty generator")
    full = full_mask(sg.order)
    if x_mask & ~full:
        raise NotAnIdealError(f"generator mask {x_mask:#x} out of range")
    u = x_mask
    while True:
        nxt = u | set_product(sg, full, u) | set_product(sg, u, full)
        if nxt == u:
            return IdealSet(u, FLAVOR_TWO_SIDED)
        u = nxt


def xsx_union_form(sg: FiniteSemigroup, x_mask: int) -> int:
    """The one-step union X | XS | SX | XSX.

    Not always an ideal: elements of the form s*x*t with s,t outside the
    generated part can be missed (the registry's R15 example witnesses
    this with X = {x}, where s*x*s is absent).  Kept for comparison
    against `generated_ideal`.
    """
    if x_mask == 0:
        raise EmptyGeneratorError("union form needs a nonempty generator")
    full = full_mask(sg.order)
    xs = set_product(sg, x_mask, full)
    sx = set_product(sg, full, x_mask)
    return x_mask | xs | sx | set_product(sg, xs, x_mask)


def sxs_union_form(sg: FiniteSemigroup, x_mask: int) -> int:
    """The closed form X | SX | XS | SXS; always equals the generated ideal."""
    if x_mask == 0:
        raise EmptyGeneratorError("union form needs a nonempty generator")
    full = full_mask(sg.order)
    sx = set_product(sg, full, x_mask)
    return x_mask | sx | set_product(sg, x_mask, full) | set_product(sg, sx, full)


@lru_cache(maxsize=4096)
def _ideal_masks(sg: FiniteSemigroup) -> tuple[int, ...]:
    full = full_mask(sg.order)
    return tuple(m for m in range(1, full) if is_ideal(sg, m))


def enumerate_ideals(sg: FiniteSemigroup) -> list[IdealSet]:
    """All proper nonempty two-sided ideals, ascending by mask value."""
    return [IdealSet(m, FLAVOR_TWO_SIDED) for m in _ideal_masks(sg)]


def _proper_ideal_mask(sg: FiniteSemigroup, q) -> int:
    mask = carrier_of(q)
    if mask == full_mask(sg.order):
        raise NotProperError("expected a proper ideal, got the whole semigroup")
    if not is_ideal(sg, mask):
        raise NotAnIdealError(f"mask {mask:#x} is not a nonempty two-sided ideal")
    return mask


def is_prime(sg: FiniteSemigroup, q) -> bool:
    """Elementwise primality: for all a,b outside q some a*s*b stays outside.

    q must be a proper nonempty two-sided ideal.
    """
    qm = _proper_ideal_mask(sg, q)
    t = sg.table
    n = sg.order
    outside = [a for a in range(n) if not (qm >> a) & 1]
    for a in outside:
        ta = t[a]
        for b in outside:
            for s in range(n):
                if not (qm >> t[ta[s]][b]) & 1:
                    break
            else:
                return False
    return True


def is_prime_by_ideal_pairs(
    sg: FiniteSemigroup, q, variant: str = VARIANT_SET_PRODUCT
) -> bool:
    """Ideal-pair primality: AB inside q forces A or B inside q.

    A, B range over all nonempty two-sided ideals including S itself.
    S must be included: it can refute primality as a factor (for the
    right-constant semigroup on {0,1,2} with every product f(y), f =
    (1,1,2), the ideal q = {1,2} has S*S inside q, and no proper pair
    shows this).  With variant="set_product" the product is the raw set
    {a*b}; with "generated_product" it is the ideal that set generates.
    Both give the same verdict (an ideal contains a set iff it contains
    the ideal the set generates), and both agree with `is_prime`.
    """
    if variant not in (VARIANT_SET_PRODUCT, VARIANT_GENERATED):
        raise ValueError(f"unknown variant {variant!r}")
    qm = _proper_ideal_mask(sg, q)
    # pairs with A inside q satisfy the condition for every B, and
    # symmetrically, so only pairs of non-contained ideals can refute;
    # q is proper, so S itself is always such an ideal
    outside = [m for m in _ideal_masks(sg) if m | qm != qm]
    outside.append(full_mask(sg.order))
    for am in outside:
        for bm in outside:
            prod = set_product(sg, am, bm)
            if variant == VARIANT_GENERATED:
                prod = generated_ideal(sg, prod).carrier
            if prod | qm == qm:
                return False
    return True


def prime_ideals(sg: FiniteSemigroup) -> list[IdealSet]:
    """Proper nonempty two-sided ideals passing `is_prime`, ascending by mask."""
    return [q for q in enumerate_ideals(sg) if is_prime(sg, q)]


def maximal_ideals(sg: FiniteSemigroup) -> list[IdealSet]:
    """Proper ideals not strictly contained in another proper ideal."""
    masks = _ideal_masks(sg)
    return [
        IdealSet(qm, FLAVOR_TWO_SIDED)
        for qm in masks
        if not any(m != qm and m | qm == m for m in masks)
    ]


def product_containment_check(sg: FiniteSemigroup) -> bool:
    """AB is contained in A intersect B for every pair of proper ideals."""
    masks = _ideal_masks(sg)
    for am in masks:
        for bm in masks:
            if set_product(sg, am, bm) & ~(am & bm):
                return False
    return True

"""Primitive ideals: annihilators of simple modules found by bounded search.

A primitive ideal is exhibited by a witness, a simple action whose
annihilator it is.  Annihilators equal to the empty set or the whole
semigroup are discarded: ideals are nonempty and proper here, so such
annihilators exhibit no ideal.  Every search result is reported with
explicit bounds; primes that no witness covered within the bounds are
listed, never silently dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSemigroup, SemigroupHom, full_mask
from .errors import SemigroupMismatchError
from .ideals import IdealSet, is_ideal, is_prime, prime_ideals
from .modact import (
    DEFAULT_BUDGET,
    ActionWitness,
    ModuleSpace,
    _enumerate_action_indices,
    _space,
    _witness_from_indices,
    annihilator,
    check_action,
    is_simple,
)

STATUS_VERIFIED = "primitive_verified"
STATUS_IMPROPER = "improper"
STATUS_SIMPLICITY_LOST = "simplicity_lost"

DEFAULT_PRIMES = (2, 3, 5)
DEFAULT_MAXDIM = 2


def default_catalog(
    primes=DEFAULT_PRIMES, maxdim: int = DEFAULT_MAXDIM
) -> tuple[ModuleSpace, ...]:
    """Module spaces to search, small dimensions first: (2,1), (3,1), ... (5,2)."""
    return tuple(
        ModuleSpace(p, k) for k in range(1, maxdim + 1) for p in sorted(primes)
    )


@dataclass(frozen=True)
class PrimitiveWitness:
    """An ideal together with a simple action annihilating exactly it."""

    ideal: IdealSet
    witness: ActionWitness


@dataclass(frozen=True)
class PrimSearchReport:
    """Outcome of a bounded primitive-ideal search.

    `points` is deduplicated by ideal (first witness found wins) and
    sorted ascending by ideal mask.  `unwitnessed_primes` lists prime
    ideals that no simple action within the bounds annihilated.
    """

    points: tuple[PrimitiveWitness, ...]
    bounds: tuple[ModuleSpace, ...]
    budget: int
    unwitnessed_primes: tuple[IdealSet, ...]


def search_primitives(
    sg: FiniteSemigroup, bounds=None, budget: int | None = None
) -> PrimSearchReport:
    """Enumerate simple actions over the bounds; collect their annihilators."""
    if bounds is None:
        bounds = default_catalog()
    bounds = tuple(bounds)
    if budget is None:
        budget = DEFAULT_BUDGET
    full = full_mask(sg.order)
    found: dict[int, PrimitiveWitness] = {}
    for space in bounds:
        data = _space(space.p, space.k)
        inv = data.inv_masks
        for idx in _enumerate_action_indices(sg, space, budget):
            common = -1
            ann = 0
            nonzero = False
            for s, i in enumerate(idx):
                if i:
                    nonzero = True
                else:
                    ann |= 1 << s
                common &= inv[i]
            if ann != 0 and ann != full and not is_ideal(sg, ann):
                # the annihilator of any module is empty, everything, or
                # a two-sided ideal; reaching this line means the cached
                # multiplication tables are corrupt
                raise AssertionError("annihilator failed the ideal check")
            if not nonzero or common:
                continue  # zero span or an invariant subspace: not simple
            if ann == 0 or ann == full or ann in found:
                continue
            found[ann] = PrimitiveWitness(
                IdealSet(ann), _witness_from_indices(data, space, idx)
            )
    points = tuple(found[m] for m in sorted(found))
    unwitnessed = tuple(
        q for q in prime_ideals(sg) if q.carrier not in found
    )
    return PrimSearchReport(points, bounds, budget, unwitnessed)


def witness_violation(sg: FiniteSemigroup, pw: PrimitiveWitness) -> str | None:
    """First violated witness invariant, or None if all hold."""
    mask = pw.ideal.carrier
    if mask == 0:
        return "ideal is empty"
    if mask == full_mask(sg.order):
        return "ideal is the whole semigroup"
    if not is_ideal(sg, mask):
        return "ideal mask is not a two-sided ideal"
    if not check_action(sg, pw.witness):
        return "action is not multiplicative"
    if not is_simple(sg, pw.witness):
        return "module is not simple"
    if annihilator(sg, pw.witness) != mask:
        return "annihilator differs from the claimed ideal"
    return None


def verify_primitive_witness(sg: FiniteSemigroup, pw: PrimitiveWitness) -> bool:
    """Re-run every invariant of a primitive-ideal witness."""
    return witness_violation(sg, pw) is None


def primitive_implies_prime_check(
    sg: FiniteSemigroup, report: PrimSearchReport
) -> bool:
    """Every witnessed primitive ideal passes the prime test."""
    return all(is_prime(sg, pw.ideal) for pw in report.points)


@dataclass(frozen=True)
class PullbackResult:
    """Transport of a primitive witness along a homomorphism.

    `ideal` is the preimage mask (possibly empty or everything, hence an
    int rather than an IdealSet).  `status` is primitive_verified when
    the preimage is a proper nonempty ideal and the transported action
    is still simple with that annihilator; improper when the preimage is
    empty or everything; simplicity_lost otherwise.
    """

    ideal: int
    transported: ActionWitness
    status: str


def pullback(hom: SemigroupHom, pw: PrimitiveWitness) -> PullbackResult:
    """Pull a primitive witness on the target back along the homomorphism.

    The transported action is rho'[s] = rho[phi(s)]; it is automatically
    multiplicative, and its annihilator is automatically the preimage of
    the original annihilator.  What can fail, and is therefore checked,
    is the preimage being a proper nonempty ideal and the transported
    module staying simple.
    """
    src = hom.source
    if len(pw.witness.rho) != hom.target.order:
        raise SemigroupMismatchError(
            "witness does not match the homomorphism target"
        )
    if witness_violation(hom.target, pw) is not None:
        raise SemigroupMismatchError(
            "witness is not a valid primitive witness over the target"
        )
    tgt_mask = pw.ideal.carrier
    ideal = 0
    for s in range(src.order):
        if (tgt_mask >> hom.map[s]) & 1:
            ideal |= 1 << s
    transported = ActionWitness(
        pw.witness.space, tuple(pw.witness.rho[hom.map[s]] for s in range(src.order))
    )
    if ideal == 0 or ideal == full_mask(src.order):
        return PullbackResult(ideal, transported, STATUS_IMPROPER)
    if not is_simple(src, transported):
        return PullbackResult(ideal, transported, STATUS_SIMPLICITY_LOST)
    check = PrimitiveWitness(IdealSet(ideal), transported)
    if witness_violation(src, check) is not None:
        return PullbackResult(ideal, transported, STATUS_SIMPLICITY_LOST)
    return PullbackResult(ideal, transported, STATUS_VERIFIED)

"""Primitive-ideal search, witness verification, and pullbacks."""

import pytest

from conftest import corpus_up_to
from primspace.core import (
    check_homomorphism,
    elements_of,
    full_mask,
    mask_of,
    validate_table,
)
from primspace.errors import SemigroupMismatchError
from primspace.ideals import IdealSet, is_prime, prime_ideals
from primspace.modact import ActionWitness, ModuleSpace, annihilator
from primspace.primitive import (
    STATUS_IMPROPER,
    STATUS_SIMPLICITY_LOST,
    STATUS_VERIFIED,
    PrimitiveWitness,
    default_catalog,
    primitive_implies_prime_check,
    pullback,
    search_primitives,
    verify_primitive_witness,
    witness_violation,
)
from primspace.registry import REGISTRY

TRIVIAL = validate_table(1, [[0]])

# cyclic group of order 3 with a zero element adjoined
C3_ZERO = validate_table(
    4, [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
)

# the companion matrix of x^2 + x + 1 over F_2 has no eigenvector, so
# powers of it act simply on the plane; the zero element witnesses {z}
C = ((0, 1), (1, 1))
C2 = ((1, 1), (1, 0))
EYE2 = ((1, 0), (0, 1))
ZERO2 = ((0, 0), (0, 0))
C3_ZERO_WITNESS = PrimitiveWitness(
    IdealSet(1), ActionWitness(ModuleSpace(2, 2), (ZERO2, EYE2, C, C2))
)


def test_default_catalog_order():
    cat = default_catalog()
    assert [(s.p, s.k) for s in cat] == [
        (2, 1),
        (3, 1),
        (5, 1),
        (2, 2),
        (3, 2),
        (5, 2),
    ]
    assert [(s.p, s.k) for s in default_catalog((3,), 1)] == [(3, 1)]


def test_search_goldens():
    rep = search_primitives(REGISTRY["B2M"])
    assert [pw.ideal.carrier for pw in rep.points] == [1]
    assert rep.points[0].witness.rho == (((0,),), ((1,),))
    assert rep.unwitnessed_primes == ()

    rep = search_primitives(REGISTRY["T3"])
    assert [pw.ideal.carrier for pw in rep.points] == [0b110]
    assert rep.points[0].witness.rho == (((1,),), ((0,),), ((0,),))

    for name in ("NULL2", "LZ2"):
        rep = search_primitives(REGISTRY[name])
        assert rep.points == () and rep.unwitnessed_primes == ()


def test_b2xb2_three_points_with_k1_witnesses():
    rep = search_primitives(REGISTRY["B2xB2"])
    assert [pw.ideal.carrier for pw in rep.points] == [3, 5, 7]
    flat = [tuple(m[0][0] for m in pw.witness.rho) for pw in rep.points]
    assert flat == [(0, 0, 1, 1), (0, 1, 0, 1), (0, 0, 0, 1)]
    assert all(pw.witness.space == ModuleSpace(2, 1) for pw in rep.points)
    assert rep.unwitnessed_primes == ()


def test_empty_bounds_leave_all_primes_unwitnessed():
    rep = search_primitives(REGISTRY["B2xB2"], bounds=())
    assert rep.points == ()
    assert [q.carrier for q in rep.unwitnessed_primes] == [3, 5, 7]


def test_points_grow_with_bounds():
    small = (ModuleSpace(2, 1),)
    large = small + (ModuleSpace(2, 2),)
    for sg in corpus_up_to(3):
        a = {pw.ideal.carrier for pw in search_primitives(sg, small).points}
        b = {pw.ideal.carrier for pw in search_primitives(sg, large).points}
        assert a <= b


def test_every_search_point_verifies():
    for sg in corpus_up_to(3):
        rep = search_primitives(sg)
        for pw in rep.points:
            assert verify_primitive_witness(sg, pw)
        assert primitive_implies_prime_check(sg, rep)
        witnessed = {pw.ideal.carrier for pw in rep.points}
        primes = {q.carrier for q in prime_ideals(sg)}
        assert witnessed <= primes
        assert {q.carrier for q in rep.unwitnessed_primes} == primes - witnessed


def test_witness_violation_messages():
    b2m = REGISTRY["B2M"]
    ok = ActionWitness(ModuleSpace(2, 1), (((0,),), ((1,),)))
    assert witness_violation(b2m, PrimitiveWitness(IdealSet(1), ok)) is None
    assert "empty" in witness_violation(b2m, PrimitiveWitness(IdealSet(0), ok))
    assert "whole" in witness_violation(b2m, PrimitiveWitness(IdealSet(3), ok))
    assert "not a two-sided ideal" in witness_violation(
        b2m, PrimitiveWitness(IdealSet(2), ok)
    )
    swapped = ActionWitness(ModuleSpace(2, 1), (((1,),), ((0,),)))
    assert "not multiplicative" in witness_violation(
        b2m, PrimitiveWitness(IdealSet(1), swapped)
    )
    b4 = REGISTRY["B2xB2"]
    diag = ActionWitness(
        ModuleSpace(2, 2),
        (
            ((0, 0), (0, 0)),
            ((0, 0), (0, 1)),
            ((1, 0), (0, 0)),
            ((1, 0), (0, 1)),
        ),
    )
    assert "not simple" in witness_violation(
        b4, PrimitiveWitness(IdealSet(1), diag)
    )
    prod = ActionWitness(
        ModuleSpace(2, 1), (((0,),), ((0,),), ((0,),), ((1,),))
    )
    assert "annihilator differs" in witness_violation(
        b4, PrimitiveWitness(IdealSet(3), prod)
    )


def test_handcrafted_two_dimensional_witness():
    assert verify_primitive_witness(C3_ZERO, C3_ZERO_WITNESS)
    assert is_prime(C3_ZERO, IdealSet(1))
    rep = search_primitives(C3_ZERO)
    assert 1 in {pw.ideal.carrier for pw in rep.points}


def test_pullback_verified_along_diagonal():
    b2m, b4 = REGISTRY["B2M"], REGISTRY["B2xB2"]
    hom = check_homomorphism(b2m, b4, [0, 3])
    rep = search_primitives(b4)
    for pw in rep.points:
        res = pullback(hom, pw)
        assert res.status == STATUS_VERIFIED
        assert res.ideal == 1
        assert verify_primitive_witness(
            b2m, PrimitiveWitness(IdealSet(res.ideal), res.transported)
        )


def test_pullback_along_automorphism_permutes_points():
    b4 = REGISTRY["B2xB2"]
    swap = check_homomorphism(b4, b4, [0, 2, 1, 3])
    rep = search_primitives(b4)
    got = {}
    for pw in rep.points:
        res = pullback(swap, pw)
        assert res.status == STATUS_VERIFIED
        got[pw.ideal.carrier] = res.ideal
    assert got == {3: 5, 5: 3, 7: 7}


def test_pullback_improper_statuses():
    b2m = REGISTRY["B2M"]
    wit = search_primitives(b2m).points[0]
    # preimage empty: the one-point semigroup maps onto the identity
    to_identity = check_homomorphism(TRIVIAL, b2m, [1])
    res = pullback(to_identity, wit)
    assert res.status == STATUS_IMPROPER and res.ideal == 0
    # preimage everything: map onto the annihilated element instead
    to_zero = check_homomorphism(TRIVIAL, b2m, [0])
    res = pullback(to_zero, wit)
    assert res.status == STATUS_IMPROPER
    assert res.ideal == full_mask(1)


def test_pullback_can_lose_simplicity():
    """Mapping B2M onto {z, e} inside the zero-adjoined C3 pulls the
    plane witness back to an action fixing every line."""
    hom = check_homomorphism(REGISTRY["B2M"], C3_ZERO, [0, 1])
    res = pullback(hom, C3_ZERO_WITNESS)
    assert res.status == STATUS_SIMPLICITY_LOST
    assert res.ideal == 1
    assert res.transported.rho == (ZERO2, EYE2)
    # the ideal itself is still primitive, only this transport fails
    assert 1 in {
        pw.ideal.carrier for pw in search_primitives(REGISTRY["B2M"]).points
    }


def test_pullback_transports_annihilators():
    """ann(rho after phi) is the preimage of ann(rho), mechanically."""
    b2m, b4 = REGISTRY["B2M"], REGISTRY["B2xB2"]
    homs = [
        check_homomorphism(b2m, b4, [0, 3]),
        check_homomorphism(b4, b4, [0, 2, 1, 3]),
        check_homomorphism(b2m, C3_ZERO, [0, 1]),
    ]
    for hom in homs:
        for pw in search_primitives(hom.target).points:
            res = pullback(hom, pw)
            want = mask_of(
                s
                for s in range(hom.source.order)
                if (annihilator(hom.target, pw.witness) >> hom.map[s]) & 1
            )
            assert annihilator(hom.source, res.transported) == want
            assert res.ideal == want


def test_pullback_input_validation():
    b2m = REGISTRY["B2M"]
    hom = check_homomorphism(b2m, b2m, [0, 1])
    wrong_order = PrimitiveWitness(
        IdealSet(1), ActionWitness(ModuleSpace(2, 1), (((0,),),))
    )
    with pytest.raises(SemigroupMismatchError):
        pullback(hom, wrong_order)
    invalid = PrimitiveWitness(
        IdealSet(1), ActionWitness(ModuleSpace(2, 1), (((1,),), ((0,),)))
    )
    with pytest.raises(SemigroupMismatchError):
        pullback(hom, invalid)


def test_report_point_order_is_ascending():
    for sg in corpus_up_to(3):
        masks = [pw.ideal.carrier for pw in search_primitives(sg).points]
        assert masks == sorted(masks)
        assert len(set(masks)) == len(masks)


def test_point_elements_of_view():
    rep = search_primitives(REGISTRY["B2xB2"])
    assert [elements_of(pw.ideal.carrier) for pw in rep.points] == [
        [0, 1],
        [0, 2],
        [0, 1, 2],
    ]

"""Curve model: point enumeration, sign action, the two lift cases."""

import itertools
import random
from fractions import Fraction

import pytest

import helpers
from fermatcover import curve
from fermatcover.errors import (
    BadLambdaError,
    ConstraintInfeasibleError,
    EnumerationBudgetError,
    FieldInsufficientError,
    GenusTooSmallError,
    InputError,
)
from fermatcover.fields import PrimeField


def make_curve(g, q, lambdas):
    return curve.FermatCurve(g, PrimeField(q), tuple(lambdas))


def test_curve_validation():
    with pytest.raises(BadLambdaError):
        make_curve(2, 13, (0, 2, 3))
    with pytest.raises(BadLambdaError):
        make_curve(2, 13, (1, 2, 3))
    with pytest.raises(BadLambdaError):
        make_curve(2, 13, (2, 2, 3))
    with pytest.raises(BadLambdaError):
        make_curve(2, 13, (2, 3))  # wrong count
    with pytest.raises(BadLambdaError):
        make_curve(2, 13, (2, 3, 16))  # 16 = 3 mod 13, collision
    with pytest.raises(GenusTooSmallError):
        make_curve(1, 13, (2,))


def test_enumeration_matches_projective_brute_force():
    # q = 5 keeps the raw 5^6 scan cheap; lambdas distinct, not 0 or 1
    model = make_curve(2, 5, (2, 3, 4))
    points = curve.enumerate_points(model)
    assert points == helpers.brute_projective_points(2, 5, (2, 3, 4))


def test_enumeration_normalization_and_zero_count():
    model = make_curve(2, 13, (2, 4, 5))
    points = curve.enumerate_points(model)
    assert points == sorted(points)
    assert len(points) == len(set(points))
    for p in points:
        lead = next(x for x in p if x)
        assert lead == 1
        assert sum(1 for x in p if x == 0) <= 1
        assert model.contains(p)


def test_enumeration_budget():
    model = make_curve(2, 13, (2, 4, 5))
    with pytest.raises(EnumerationBudgetError):
        curve.enumerate_points(model, budget=7)


def test_sample_points_deterministic_and_on_curve():
    model = make_curve(2, 17, (2, 3, 10))
    first = curve.sample_points(model, count=6, seed=4)
    second = curve.sample_points(model, count=6, seed=4)
    assert first == second
    assert all(model.contains(p) for p in first)
    assert curve.sample_points(model, count=6, seed=5) != first


def test_diagonal_class_group_laws():
    rng = random.Random(41)
    n = 6
    classes = curve.all_diagonal_classes(n)
    assert len(classes) == 2 ** (n - 1)
    ident = curve.DiagonalClass.identity(n)
    for _ in range(30):
        a, b, c = (rng.choice(classes) for _ in range(3))
        assert a.compose(a) == ident
        assert a.compose(b) == b.compose(a)
        assert a.compose(b).compose(c) == a.compose(b.compose(c))
        assert a.compose(ident) == a


def test_diagonal_class_canonical_representative():
    n = 6
    # flipping {1} is projectively the same as flipping {2,...,6}
    a1 = curve.DiagonalClass.from_indices((1,), n)
    assert a1.flips == (2, 3, 4, 5, 6)
    assert a1.label() == "a1"
    a2 = curve.DiagonalClass.sign_flip(2, n)
    assert a2.flips == (2,)
    assert a2.label() == "a2"
    both = a1.compose(a2)
    assert both.flips == (3, 4, 5, 6)
    assert both.label() == "a1*a2"
    with pytest.raises(InputError):
        curve.DiagonalClass.from_indices((7,), n)


def test_diagonal_class_action_is_projective():
    field = PrimeField(13)
    model = make_curve(2, 13, (2, 4, 5))
    points = curve.enumerate_points(model)
    n = model.coords
    a1_direct = curve.DiagonalClass.from_indices((1,), n)
    for p in points[:8]:
        flipped = tuple((-x) % 13 for x in p)
        assert curve.normalize_point(flipped, field) == a1_direct.apply(p, field)
        assert model.contains(a1_direct.apply(p, field))


def test_fixed_point_classes_fully_witnessed():
    model = make_curve(2, 41, (2, 10, 33))
    report = curve.fixed_point_classes(model)
    assert report.conclusion == "fixed-classes-verified"
    assert report.only_sign_flips
    assert report.slices_match
    assert report.unwitnessed == ()
    assert report.point_count == 96
    assert set(report.fixed_counts.values()) == {16}
    labels = {c.label() for c in report.classes_with_fixed_points}
    assert labels <= {f"a{j}" for j in range(1, 7)}


def test_fixed_point_classes_partial_witness_is_flagged():
    model = make_curve(2, 13, (2, 3, 5))
    report = curve.fixed_point_classes(model)
    assert report.conclusion == "insufficient-rational-points"
    assert report.only_sign_flips
    assert report.unwitnessed != ()


def test_free_index_two_subgroup():
    for q, lams in ((13, (2, 4, 5)), (17, (2, 3, 10)), (41, (2, 10, 33))):
        model = make_curve(2, q, lams)
        report = curve.free_index_two_subgroup(model)
        assert report.conclusion == "unique-free-index-two"
        assert report.subgroup.order == 2 ** 4
        assert report.index == 2
        assert report.hyperplanes_avoiding_flips == 1
        assert report.hyperplanes_scanned == 2 ** 5 - 1
        assert not report.contains_sign_flip
        assert report.kernel_matches
        assert report.free_on_points


def test_swap_involution_apply_and_square():
    field = PrimeField(13)
    alpha = curve.SwapInvolution("A", (1, 3, 1, 3, 1, 3), field)
    assert alpha.permutation() == (2, 1, 4, 3, 6, 5)
    image = alpha.apply((1, 2, 3, 4, 5, 6))
    # y = (1*2, 3*1, 1*4, 3*3, 1*6, 3*5) normalized by 1/2
    expected = curve.normalize_point((2, 3, 4, 9, 6, 15), field)
    assert image == expected
    # square diagonal is c_i * c_sigma(i) = 3 everywhere -> identity class
    assert alpha.square_class().is_identity
    beta = curve.SwapInvolution("B", (1, 5, 5, 8, 5, 8), field)
    assert beta.permutation() == (1, 2, 4, 3, 6, 5)
    assert beta.square_class() == curve.DiagonalClass.sign_flip(2, 6)


def test_case_a_requires_pairing():
    with pytest.raises(ConstraintInfeasibleError):
        curve.case_a_involution(2, (6, 2, 4))
    with pytest.raises(BadLambdaError):
        curve.case_a_involution(2, (6, 2, 3, 4))
    with pytest.raises(BadLambdaError):
        curve.case_a_involution(2, (1, 2, Fraction(1, 2)))
    with pytest.raises(InputError):
        curve.case_a_involution(2, (6, 2, 3), sign_choices={"bogus": 1})
    with pytest.raises(InputError):
        curve.case_a_involution(2, (6, 2, 3), sign_choices={"A2": 2})


def test_case_a_fixed_point_certified_at_three_primes():
    report = curve.case_a_involution(2, (6, 2, 3))
    assert report.conclusion == "fixed-point-exists"
    assert report.primes == (431, 503, 599)
    assert len(report.evidence) == 3
    for ev in report.evidence:
        assert ev["on_curve"] and ev["alpha_fixed"]
        assert ev["alpha_preserves_curve"] and ev["alpha_involution_on_samples"]
        assert ev["fixed_point"][0] == 1


def test_case_a_respects_sign_choices_and_fractions():
    # the chain radicands depend on the chosen signs, so the admitted primes
    # may differ; what must hold is that A_2 is the requested root of lambda_1
    plus = curve.case_a_involution(2, (6, 2, 3), num_primes=1)
    qp = plus.primes[0]
    a2p = plus.evidence[0]["coefficients"]["A2"]
    assert a2p * a2p % qp == 6 % qp
    assert a2p <= qp - a2p  # canonical smaller root
    minus = curve.case_a_involution(2, (6, 2, 3), sign_choices={"A2": -1}, num_primes=1)
    qm = minus.primes[0]
    a2m = minus.evidence[0]["coefficients"]["A2"]
    assert a2m * a2m % qm == 6 % qm
    assert a2m > qm - a2m  # the other root
    assert minus.conclusion == "fixed-point-exists"
    frac = curve.case_a_involution(
        2, (Fraction(1, 2), Fraction(1, 4), 2), num_primes=1
    )
    assert frac.conclusion == "fixed-point-exists"


def test_case_a_genus_three():
    report = curve.case_a_involution(3, (6, 2, 3, 4, Fraction(3, 2)), num_primes=2)
    assert report.conclusion == "fixed-point-exists"
    for ev in report.evidence:
        assert len(ev["coefficients"]) == 7  # A_2 .. A_8
        assert len(ev["fixed_point"]) == 8


def test_case_b_obstruction():
    report = curve.case_b_involution(2, (12, 3, 10), 13)
    data = report.to_dict()
    assert data["conclusion"] == "no-involutive-lift"
    assert data["square_label"] == "a2"
    assert data["square_is_identity"] is False
    assert data["fourth_power_identity"] is True
    assert report.sqrt_minus_one == 5
    assert report.samples_checked > 0


def test_case_b_never_involutive_for_any_sign_choice():
    # with every coefficient squaring to -1 the square diagonal starts (1, -1, ...)
    field = PrimeField(13)
    i = field.sqrt(12)
    for signs in itertools.product((1, -1), repeat=5):
        coeffs = (1,) + tuple((s * i) % 13 for s in signs)
        alpha = curve.SwapInvolution("B", coeffs, field)
        square = alpha.square_class()
        assert not square.is_identity
        assert 2 in set(square.flips) or square.flips == ()


def test_case_b_requires_matching_lambdas_and_field():
    with pytest.raises(BadLambdaError):
        curve.case_b_involution(2, (2, 3, 10), 13)  # lambda_1 != -1
    with pytest.raises(BadLambdaError):
        curve.case_b_involution(2, (12, 3, 9), 13)  # lambda_3 != -lambda_2
    with pytest.raises(FieldInsufficientError):
        curve.case_b_involution(2, (6, 3, 4), 7)  # -1 not a square mod 7


def test_verify_curve_report():
    model = make_curve(2, 13, (2, 4, 5))
    report = curve.verify_curve(model)
    assert report.conclusion == "verified"
    assert report.action_preserves_membership
    assert report.at_most_one_zero
    assert report.point_count == 32
    assert report.classes_checked == 32

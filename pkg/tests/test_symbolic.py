import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foursq import conic_point, prove_identities
from foursq import forms
from foursq.symbolic import BiPoly, reduce

X = BiPoly.x()
Y = BiPoly.y()
ONE = BiPoly.const(1)
HOM = BiPoly.from_table(forms.CONIC_FORM)
RELATION = HOM - ONE


def test_mul_difference_of_squares():
    assert (X + Y) * (X - Y) == X * X - Y * Y


def test_pow_zero_is_one():
    assert HOM ** 0 == ONE
    assert BiPoly() ** 0 == ONE


def test_zero_polynomial_is_canonical():
    assert (X - X).is_zero()
    assert BiPoly({(1, 1): 0}).is_zero()
    assert X * BiPoly() == BiPoly()


def test_scale_and_rational_coefficients():
    half = X.scale(Fraction(1, 2))
    assert half + half == X
    assert (Fraction(3, 2) * Y).evaluate(0, 2) == 3


def _multinomial_expand(power):
    """Independent expansion of (x^2 - 4xy + y^2)^power by multinomials."""
    out = {}
    for i in range(power + 1):
        for j in range(power + 1 - i):
            k = power - i - j
            coef = (math.factorial(power)
                    // (math.factorial(i) * math.factorial(j) * math.factorial(k))
                    * (-4) ** j)
            mono = (2 * i + j, j + 2 * k)
            out[mono] = out.get(mono, 0) + coef
    return BiPoly({m: Fraction(c) for m, c in out.items() if c})


def test_pow_hom_5_against_multinomial_oracle():
    h5 = HOM ** 5
    assert h5 == _multinomial_expand(5)
    assert h5.total_degree() == 10
    assert h5.terms[(10, 0)] == 1
    # every degree-10 monomial survives: no cross-cancellation occurs
    assert len(h5.terms) == 11


def test_reduce_relation_to_zero():
    assert reduce(RELATION).is_zero()


def test_reduce_x_squared():
    nf = reduce(X * X)
    assert dict(nf.c0) == {0: 1, 2: -1}  # 1 - y^2
    assert dict(nf.c1) == {1: 4}         # 4y
    assert nf.lift().evaluate(4, 1) == 16


def test_reduce_a_minus_A_squared_plus_four():
    a = BiPoly.from_table(forms.ELEM_A)
    A = BiPoly.from_table(forms.A_FORM)
    assert reduce(a - A * A - BiPoly.const(4)).is_zero()


def _random_poly(rng, max_deg=4, max_terms=6):
    terms = {}
    for _ in range(rng.randrange(0, max_terms + 1)):
        mono = (rng.randrange(0, max_deg + 1), rng.randrange(0, max_deg + 1))
        terms[mono] = Fraction(rng.randrange(-9, 10))
    return BiPoly(terms)


def test_ring_axioms_randomized():
    rng = random.Random(1234)
    for _ in range(1_000):
        p = _random_poly(rng)
        q = _random_poly(rng)
        r = _random_poly(rng)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + q == q + p
        assert p * q == q * p


def test_reduce_is_idempotent_randomized():
    rng = random.Random(77)
    for _ in range(200):
        p = _random_poly(rng, max_deg=5)
        nf = reduce(p)
        assert reduce(nf.lift()) == nf


def test_reduce_is_ring_homomorphism_randomized():
    rng = random.Random(78)
    for _ in range(200):
        p = _random_poly(rng)
        q = _random_poly(rng)
        assert reduce(p * q) == reduce(reduce(p).lift() * reduce(q).lift())
        assert reduce(p + q) == reduce(reduce(p).lift() + reduce(q).lift())


@given(st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.integers(-9, 9), max_size=6))
@settings(max_examples=200, deadline=None)
def test_reduce_agrees_on_conic_points(terms):
    p = BiPoly({m: Fraction(c) for m, c in terms.items()})
    nf = reduce(p)
    for n in range(-6, 7):
        pt = conic_point(n)
        assert p.evaluate(pt.x, pt.y) == nf.evaluate(pt.x, pt.y)


def test_transcribed_forms_reduce_consistently_on_conic_points():
    for table in (forms.ELEM_A, forms.ROOT_R, forms.ELEM_B, forms.ELEM_C,
                  forms.ROOT_S):
        p = BiPoly.from_table(table)
        nf = reduce(p)
        for n in range(-6, 7):
            pt = conic_point(n)
            assert p.evaluate(pt.x, pt.y) == nf.evaluate(pt.x, pt.y)


def test_prove_identities_all_pass():
    report = prove_identities()
    assert report.core_ok
    for name in [f"I{k}" for k in range(1, 9)]:
        item = report[name]
        assert item.passed, f"{name} failed with residual {item.residual}"
        assert item.residual is None


def test_identity_probe_holds_before_reduction():
    # the homogenized abc+1 = s^2 combination vanishes as a raw polynomial
    report = prove_identities()
    i9 = report["I9"]
    assert i9.passed
    assert i9.note == "holds as an exact polynomial identity"


def test_companion_root_numeric_identity():
    assert prove_identities()["I10"].passed


def _perturb(table, mono, delta):
    new = dict(table)
    new[mono] = new.get(mono, Fraction(0)) + delta
    return new


@pytest.mark.parametrize("key,base,mono", [
    ("r", forms.ROOT_R, (3, 0)),   # cubic coefficient of the ab-root form
    ("b", forms.ELEM_B, (0, 4)),   # quartic tail of b
    ("s", forms.ROOT_S, (5, 0)),   # leading coefficient of the abc-root form
])
def test_single_coefficient_mutations_are_caught(key, base, mono):
    mutated = prove_identities({key: _perturb(base, mono, Fraction(1))})
    assert not mutated.core_ok
    failed = [it for it in mutated.items
              if not it.passed and it.name in {f"I{k}" for k in range(1, 9)}]
    assert failed
    assert all(it.residual is not None and not it.residual.is_zero()
               for it in failed)


def test_mutation_off_by_one_in_r_cubic_fails_I1():
    mutated = prove_identities({"r": _perturb(forms.ROOT_R, (3, 0), 1)})
    assert not mutated["I1"].passed
    assert mutated["I1"].residual is not None

"""Field arithmetic in the cyclotomic coefficient rings."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hni.cyclotomic import CyclotomicNumber, cyclotomic_polynomial, euler_phi, field_order

rationals = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12)


def numbers(order=4):
    dim = euler_phi(order)
    return st.lists(rationals, min_size=dim, max_size=dim).map(
        lambda cs: CyclotomicNumber(order, cs))


def test_field_orders():
    assert field_order(1) == 4
    assert field_order(2) == 4
    assert field_order(3) == 12
    assert field_order(4) == 8
    assert field_order(5) == 20


def test_cyclotomic_polynomials():
    assert [int(c) for c in cyclotomic_polynomial(4)] == [1, 0, 1]
    assert [int(c) for c in cyclotomic_polynomial(1)] == [-1, 1]
    assert [int(c) for c in cyclotomic_polynomial(12)] == [1, 0, -1, 0, 1]


def test_i_squares_to_minus_one():
    i = CyclotomicNumber.i(4)
    assert i * i == CyclotomicNumber.from_rational(Fraction(-1), 4)
    i12 = CyclotomicNumber.i(12)
    assert i12 * i12 == CyclotomicNumber.from_rational(Fraction(-1), 12)


def test_root_of_unity_order():
    for m in (4, 8, 12):
        z = CyclotomicNumber.root(m, 1)
        acc = CyclotomicNumber.one(m)
        for _ in range(m):
            acc = acc * z
        assert acc == CyclotomicNumber.one(m)


@given(numbers(), numbers())
@settings(max_examples=60, deadline=None)
def test_ring_commutativity(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(numbers(), numbers(), numbers())
@settings(max_examples=40, deadline=None)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(numbers())
@settings(max_examples=60, deadline=None)
def test_conjugation_is_involutive(a):
    assert a.conj().conj() == a


@given(numbers(8))
@settings(max_examples=40, deadline=None)
def test_inverse_in_larger_field(a):
    if a.is_zero():
        return
    assert a * a.inv() == CyclotomicNumber.one(8)


@given(numbers())
@settings(max_examples=60, deadline=None)
def test_norm_is_real_and_nonnegative(a):
    norm = a * a.conj()
    assert norm.is_real()
    assert norm.sign() >= 0
    assert (norm.sign() == 0) == a.is_zero()


@given(numbers(12))
@settings(max_examples=40, deadline=None)
def test_json_roundtrip(a):
    assert CyclotomicNumber.from_json(a.to_json()) == a


def test_promotion_consistency():
    x = CyclotomicNumber.i(4)
    y = x.promote(12)
    assert y.order == 12
    assert y * y == CyclotomicNumber.from_rational(Fraction(-1), 12)
    # mixed-order arithmetic coerces to a common field
    assert (x + y).is_zero() is False
    assert (x - y).is_zero()


def test_exact_sign_of_irrational_real():
    # 2 cos(2 pi / 12) = zeta + zeta^{-1} = sqrt(3) > 0
    z = CyclotomicNumber.root(12, 1)
    val = z + z.conj()
    assert val.is_real()
    assert not val.is_rational()
    assert val.sign() == 1
    assert (-val).sign() == -1

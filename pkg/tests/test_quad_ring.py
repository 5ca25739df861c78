import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import DomainError, RingMismatchError
from models.quad_ring import (
    Ordering,
    QuadInt,
    QuadRing,
    is_perfect_square,
    qi_add,
    qi_compare,
    qi_floor,
    qi_mul,
    qi_neg,
    qi_pow,
    qi_sign,
    qi_sub,
    qi_to_mpf,
)

NONSQUARE_TAUS = [2, 3, 5, 6, 7, 8, 10, 11, 13, 61, 109]

coefficients = st.integers(-10 ** 6, 10 ** 6)


def q(a: int, b: int, tau: int) -> QuadInt:
    return QuadInt(rational_part=a, surd_part=b, tau=tau)


@st.composite
def same_ring_triples(draw):
    tau = draw(st.sampled_from(NONSQUARE_TAUS))
    return tuple(q(draw(coefficients), draw(coefficients), tau) for _ in range(3))


def test_addition():
    assert qi_add(q(1, 1, 2), q(0, 0, 2)) == q(1, 1, 2)
    assert qi_add(q(3, 2, 2), q(3, -2, 2)) == q(6, 0, 2)
    assert qi_add(q(2, 1, 3), q(-2, 1, 3)) == q(0, 2, 3)


def test_multiplication():
    assert qi_mul(q(1, 1, 2), q(1, -1, 2)) == q(-1, 0, 2)
    assert qi_mul(q(3, 2, 2), q(3, 2, 2)) == q(17, 12, 2)
    assert qi_mul(q(1, 1, 2), q(17, 12, 2)) == q(41, 29, 2)


def test_powers():
    assert qi_pow(q(3, 2, 2), 0) == q(1, 0, 2)
    assert qi_pow(q(3, 2, 2), 2) == q(17, 12, 2)
    assert qi_pow(q(2, 1, 3), 3) == q(26, 15, 3)


def test_negative_power_rejected():
    with pytest.raises(DomainError):
        q(3, 2, 2) ** -1


def test_sign_known_values():
    assert qi_sign(q(0, 0, 2)) == 0
    assert qi_sign(q(41, -29, 2)) == -1
    # 26^2 = 676 > 675 = 15^2 * 3, so the negative rational part dominates
    assert qi_sign(q(-26, 15, 3)) == -1
    assert qi_sign(q(-41, 29, 2)) == 1


def test_compare_known_values():
    assert qi_compare(q(1, 1, 2), q(1, 1, 2)) is Ordering.EQUAL
    assert qi_compare(q(41, 29, 2), q(0, 58, 2)) is Ordering.LESS
    assert qi_compare(q(26, 15, 3), q(0, 32, 3)) is Ordering.LESS
    assert q(41, 29, 2) <= q(0, 58, 2)
    assert q(0, 58, 2) > q(41, 29, 2)


def test_exact_decision_at_tiny_margin():
    """(1+sqrt2)(3+2sqrt2)^2 vs 58 sqrt2 differ by about 0.012"""
    lhs = q(1, 1, 2) * q(3, 2, 2) ** 2
    assert lhs == q(41, 29, 2)
    assert lhs < q(0, 58, 2)
    assert (41 ** 2, 29 ** 2 * 2) == (1681, 1682)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        q(1, 1, 2) + q(1, 1, 3)
    with pytest.raises(RingMismatchError):
        qi_compare(q(1, 1, 2), q(1, 1, 3))


def test_integer_operands_lift():
    assert 1 + q(0, 1, 2) == q(1, 1, 2)
    assert 1 - q(0, 1, 2) == q(1, -1, 2)
    assert 2 * q(1, 1, 2) == q(2, 2, 2)
    assert q(3, 2, 2) > 5


@pytest.mark.parametrize("tau", [0, -3, 1, 4, 9, 144])
def test_ring_rejects_square_or_nonpositive(tau):
    with pytest.raises(DomainError):
        QuadRing.of(tau)


def test_ring_context():
    ring = QuadRing.of(7)
    assert ring(2, 1) == q(2, 1, 7)
    assert ring.one * ring.sqrt_tau == ring.sqrt_tau
    assert ring.zero + ring.one == ring.one
    assert ring.sqrt_tau * ring.sqrt_tau == ring(7)


def test_norm_and_conjugate():
    x = q(3, 2, 2)
    assert x.conjugate() == q(3, -2, 2)
    assert x.norm() == 1
    assert x * x.conjugate() == q(1, 0, 2)


@pytest.mark.parametrize(
    "a, b, tau, expected",
    [(0, 1, 2, 1), (0, -1, 2, -2), (3, 2, 2, 5), (3, -2, 2, 0), (-26, 15, 3, -1), (7, 0, 5, 7)],
)
def test_floor(a, b, tau, expected):
    assert qi_floor(q(a, b, tau)) == expected


def test_perfect_square():
    assert is_perfect_square(0) and is_perfect_square(144) and is_perfect_square(10 ** 40)
    assert not is_perfect_square(2) and not is_perfect_square(-4) and not is_perfect_square(10 ** 40 + 1)


def test_str():
    assert str(q(1, 1, 2)) == "1 + √2"
    assert str(q(41, -29, 2)) == "41 - 29√2"
    assert str(q(0, -1, 3)) == "-√3"
    assert str(q(5, 0, 3)) == "5"


@pytest.mark.property_based
@given(same_ring_triples())
@settings(max_examples=200)
def test_ring_axioms(triple):
    x, y, z = triple
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@pytest.mark.property_based
@given(same_ring_triples())
@settings(max_examples=200)
def test_norm_is_multiplicative(triple):
    x, y, _ = triple
    assert (x * y).norm() == x.norm() * y.norm()


@pytest.mark.property_based
@given(same_ring_triples())
@settings(max_examples=200)
def test_adding_a_positive_element_increases(triple):
    x, y, _ = triple
    if x.sign() == 1:
        assert qi_compare(y + x, y) is Ordering.GREATER


@pytest.mark.property_based
@given(same_ring_triples())
@settings(max_examples=300)
def test_sign_agrees_with_high_precision(triple):
    x, _, _ = triple
    with mpmath.workprec(256):
        value = mpmath.mpf(x.rational_part) + mpmath.mpf(x.surd_part) * mpmath.sqrt(x.tau)
        expected = 0 if value == 0 else (1 if value > 0 else -1)
    assert x.sign() == expected


@pytest.mark.property_based
@given(same_ring_triples())
@settings(max_examples=200)
def test_floor_agrees_with_high_precision(triple):
    x, _, _ = triple
    with mpmath.workprec(256):
        assert qi_floor(x) == int(mpmath.floor(x.to_mpf(256)))


def test_negation_and_subtraction():
    assert qi_neg(q(3, -2, 2)) == q(-3, 2, 2)
    assert qi_sub(q(3, 2, 2), q(1, 1, 2)) == q(2, 1, 2)
    assert qi_sub(q(1, 1, 2), q(1, 1, 2)).sign() == 0


def test_to_mpf():
    with mpmath.workprec(128):
        assert mpmath.almosteq(qi_to_mpf(q(1, 1, 2), 128), 1 + mpmath.sqrt(2))


def test_sign_refuses_square_tau_built_directly():
    # the model alone does not check tau; 2 - sqrt(4) is zero
    with pytest.raises(DomainError):
        QuadInt(rational_part=2, surd_part=-1, tau=4).sign()

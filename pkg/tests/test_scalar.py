import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given

from bispinor_qc.scalar import (
    I,
    INV_SQRT2,
    ONE,
    QUARTER_PI,
    SQRT2,
    ZERO,
    ZETA,
    ExactScalar,
    PiFraction,
    exact_cos_sin,
    to_float,
)
from strategies import nonzero_scalars, scalars

Z = cmath.exp(1j * math.pi / 4)


def reference_complex(a: ExactScalar) -> complex:
    return sum(float(c) * Z**k for k, c in enumerate(a.coefficients()))


def test_root_of_unity_powers():
    assert ZETA**8 == ONE
    assert ZETA**4 == -ONE
    assert ZETA**2 == I
    assert I * I == -1


def test_sqrt2_constants():
    assert SQRT2 * SQRT2 == 2
    assert SQRT2 * INV_SQRT2 == ONE
    assert SQRT2.conj() == SQRT2
    assert abs(complex(INV_SQRT2) - 1 / math.sqrt(2)) < 1e-15


def test_canonical_form_is_structural():
    a = ExactScalar(Fraction(2, 4), "1/3")
    b = ExactScalar(Fraction(1, 2), Fraction(2, 6))
    assert a == b and hash(a) == hash(b)
    assert a.denominator == 6 and a.numerators == (3, 2, 0, 0)


def test_coerce_rejects_floats():
    with pytest.raises(TypeError):
        ExactScalar.coerce(0.5)
    with pytest.raises(TypeError):
        ONE + 0.5


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_galois_requires_odd_power():
    with pytest.raises(ValueError):
        ZETA.galois(2)


def test_string_rendering():
    assert str(ZERO) == "0"
    assert str(-I) == "-i"
    assert str(INV_SQRT2) == "(1/2)√2"
    assert str(ONE + SQRT2) == "1 + √2"


def test_json_uses_fraction_strings():
    assert ExactScalar(1, 0, "-1/2").to_json() == {"c0": "1/1", "c1": "0/1", "c2": "-1/2", "c3": "0/1"}


@pytest.mark.parametrize("k", range(-8, 9))
def test_exact_trig_on_quarter_turns(k):
    c, s = exact_cos_sin(PiFraction(Fraction(k, 4)))
    assert abs(complex(c) - math.cos(k * math.pi / 4)) < 1e-15
    assert abs(complex(s) - math.sin(k * math.pi / 4)) < 1e-15


def test_exact_trig_outside_field():
    assert exact_cos_sin(PiFraction(Fraction(1, 3))) is None
    assert float(QUARTER_PI) == math.pi / 4
    assert -QUARTER_PI == PiFraction(Fraction(-1, 4))
    assert 2 * QUARTER_PI == PiFraction(Fraction(1, 2))


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO and a * ONE == a


@given(nonzero_scalars, scalars)
def test_inverse_and_division(a, b):
    assert a * a.inverse() == ONE
    assert (b / a) * a == b


@given(scalars, scalars)
def test_conjugation_is_an_involutive_automorphism(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert abs(complex(a.conj()) - complex(a).conjugate()) < 1e-9 * (1 + abs(complex(a)))


@given(scalars, scalars)
def test_galois_maps_are_homomorphisms(a, b):
    for k in (1, 3, 5, 7):
        assert (a * b).galois(k) == a.galois(k) * b.galois(k)
        assert (a + b).galois(k) == a.galois(k) + b.galois(k)
    assert a.galois(7) == a.conj()


@given(scalars)
def test_norm_is_product_of_embeddings(a):
    expected = math.prod(abs(complex(a.galois(k))) for k in (1, 3, 5, 7))
    assert abs(float(a.norm()) - expected) <= 1e-9 * (1 + expected)
    assert a.norm() >= 0


@given(scalars)
def test_float_conversion_matches_reference(a):
    assert abs(to_float(a) - reference_complex(a)) <= 1e-12 * (1 + abs(reference_complex(a)))


@given(scalars)
def test_real_imag_abs2(a):
    assert a.real().conj() == a.real()
    assert a.real() + I * a.imag() == a
    assert a.abs2() == a.real() ** 2 + a.imag() ** 2


@given(scalars)
def test_json_round_trip(a):
    assert ExactScalar.from_json(a.to_json()) == a

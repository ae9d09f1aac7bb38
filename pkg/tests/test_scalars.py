import pickle
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from octoclif.scalars import (
    GR, I, ONE, THETA, ZERO, DualTheta, LinearForm, QuadraticForm, dual_mul, format_gr,
    format_rational, gr_conj, linform_coeff, normalize, parse_rational, scalar_from_json,
    scalar_to_json,
)

f = [None] + [LinearForm.symbol(a) for a in range(1, 8)]

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
gaussians = st.builds(GR, rationals, rationals)
linforms = st.builds(LinearForm, gaussians, st.lists(gaussians, min_size=7, max_size=7))
const_forms = st.builds(LinearForm, gaussians)
duals = st.builds(DualTheta, gaussians, gaussians)


# ---- rationals -----------------------------------------------------------

@pytest.mark.parametrize("num,den,expect", [(2, 4, "1/2"), (-3, -6, "1/2"), (0, 7, "0/1")])
def test_normalize_examples(num, den, expect):
    assert format_rational(normalize(num, den)) == expect


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        normalize(1, 0)


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_normalize_idempotent_and_canonical(p, q):
    r = normalize(p, q)
    assert normalize(r) == r
    assert Fraction(int(r.numerator), int(r.denominator)) == Fraction(p, q)
    assert r.denominator > 0


def test_rational_string_round_trip():
    assert parse_rational("-6/4") == normalize(-3, 2)
    assert format_rational(parse_rational("5")) == "5/1"


def test_big_integers_do_not_overflow():
    x = GR(10**40, 3)
    y = x * x * x
    assert int(y.re).bit_length() > 128
    assert y / x / x == x


# ---- Gaussian rationals --------------------------------------------------

@pytest.mark.parametrize("z,expect", [
    (I, -I), (ONE, ONE), (GR(Fraction(1, 2), Fraction(1, 2)), GR(Fraction(1, 2), Fraction(-1, 2))),
])
def test_gr_conj_examples(z, expect):
    assert gr_conj(z) == expect


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO
    if not a.is_zero():
        assert a * a.inverse() == ONE
        assert (b / a) * a == b


@given(gaussians, gaussians)
def test_gaussian_conjugation_involution(a, b):
    assert gr_conj(gr_conj(a)) == a
    assert gr_conj(a * b) == gr_conj(a) * gr_conj(b)
    assert gr_conj(a + b) == gr_conj(a) + gr_conj(b)
    n = a.norm2()
    assert n >= 0 and n == a.re ** 2 + a.im ** 2


@given(gaussians)
def test_gaussian_matches_python_complex_oracle(a):
    z = complex(float(a.re), float(a.im))
    w = a * a
    assert abs(complex(float(w.re), float(w.im)) - z * z) < 1e-6 * (1 + abs(z) ** 2)


def test_gaussian_formatting():
    assert format_gr(GR(Fraction(1, 2), Fraction(1, 2))) == "1/2+1/2i"
    assert format_gr(-I) == "-i"


def test_gaussian_rejects_float_complex():
    with pytest.raises(TypeError):
        GR(1) + 1j


@given(gaussians)
def test_gaussian_json_and_pickle(a):
    assert GR.from_json(a.to_json()) == a
    assert scalar_from_json(scalar_to_json(a)) == a
    assert pickle.loads(pickle.dumps(a)) == a
    assert set(a.to_json()) == {"re", "im"}


def test_gaussian_hash_consistent_with_rationals():
    assert hash(GR(3)) == hash(3)
    assert GR(Fraction(1, 2)) == Fraction(1, 2)


# ---- linear forms --------------------------------------------------------

def test_linform_coeff_examples():
    x = I * f[1] - f[5]
    assert linform_coeff(x, 1) == I
    assert linform_coeff(f[4], 3) == 0
    assert linform_coeff(x, 5) == -1
    assert str(x) == "if1 - f5"


@pytest.mark.parametrize("a", [0, 8])
def test_linform_coeff_out_of_range(a):
    with pytest.raises(IndexError):
        linform_coeff(f[1], a)


def test_linform_rejects_nonlinear_product():
    with pytest.raises(ValueError):
        f[1] * f[2]
    assert (f[1] * 3).coeff(1) == 3


@given(linforms, linforms, const_forms, const_forms)
def test_linform_module_axioms(x, y, c, d):
    assert x + y == y + x
    assert (x + y) * c == x * c + y * c
    assert x * (c * d) == (x * c) * d
    assert x * LinearForm(1) == x
    assert x - x == LinearForm(0)


@given(linforms, linforms)
def test_linform_conjugation_involution(x, y):
    assert x.conj().conj() == x
    assert (x + y).conj() == x.conj() + y.conj()
    # the symbols are real
    assert f[3].conj() == f[3]


@given(linforms)
def test_linform_json_and_pickle(x):
    obj = x.to_json()
    assert set(obj) == {"const", "f"} and len(obj["f"]) == 7
    assert LinearForm.from_json(obj) == x
    assert pickle.loads(pickle.dumps(x)) == x


def test_constant_forms_equal_gaussians():
    assert LinearForm(I) == I
    assert LinearForm(0).is_zero()


# ---- duals ---------------------------------------------------------------

@pytest.mark.parametrize("x,y,expect", [
    (DualTheta(1, 1), DualTheta(1, -1), DualTheta(1, 0)),
    (THETA, THETA, DualTheta(0, 0)),
    (DualTheta(2, 3), DualTheta(1, 1), DualTheta(2, 5)),
])
def test_dual_mul_examples(x, y, expect):
    assert dual_mul(x, y) == expect


@given(duals, duals, duals)
def test_dual_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a * DualTheta(1, 0) == a


@given(gaussians)
def test_dual_first_order_inverse(m):
    assert (1 + m * THETA) * (1 - m * THETA) == 1
    assert (1 - m * THETA) * (1 + m * THETA) == 1


@given(linforms, linforms)
def test_dual_over_linear_forms(x, y):
    d = DualTheta(x, y)
    e = DualTheta(LinearForm(1), LinearForm(I))
    prod = d * e
    assert prod.c0 == x
    assert prod.c1 == x * I + y
    assert DualTheta.from_json(d.to_json()) == d
    assert d.conj().conj() == d


def test_dual_nesting_rejected():
    with pytest.raises(TypeError):
        DualTheta(THETA, 0)


# ---- quadratic accumulator ----------------------------------------------

def test_quadratic_product_matches_sympy():
    sympy = pytest.importorskip("sympy")
    s = sympy.symbols("f1:8")
    x = 2 * f[1] + I * f[3] - 5
    y = f[1] - f[7] + GR(0, 2)
    q = QuadraticForm.product(x, y)
    sx = 2 * s[0] + sympy.I * s[2] - 5
    sy = s[0] - s[6] + 2 * sympy.I
    poly = sympy.Poly(sympy.expand(sx * sy), *s)
    expect = {}
    for monom, coeff in poly.terms():
        key = tuple(a + 1 for a, k in enumerate(monom) for _ in range(k))
        cre, cim = sympy.re(coeff), sympy.im(coeff)
        expect[key] = GR(Fraction(int(cre.p), int(cre.q)), Fraction(int(cim.p), int(cim.q)))
    assert q == QuadraticForm(expect)


def test_quadratic_symmetry_and_cancellation():
    q = QuadraticForm.product(f[1], f[2]) - QuadraticForm.product(f[2], f[1])
    assert q.is_zero()
    assert str(QuadraticForm.product(f[2], f[2])) == "f2^2"

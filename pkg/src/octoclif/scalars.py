"""Exact scalar rings.

Four rings are provided and every matrix in the package is generic over them:

* ``gmpy2.mpq`` for rationals (canonical ``p/q``, arbitrary precision),
* :class:`GaussianRational` for ``a + bi`` with rational parts,
* :class:`LinearForm` for ``c0 + sum_A c_A f_A`` over the seven real symbols,
* :class:`DualTheta` for ``c0 + c1*theta`` with ``theta**2 == 0``.

Promotion goes ``int/Fraction -> GaussianRational -> LinearForm -> DualTheta``;
mixed arithmetic returns the wider type. Equality is structural on canonical
values, and cross-type equality compares after promotion.

:class:`QuadraticForm` is a separate accumulator used only where squares of
symbols are unavoidable (trace of a square, sum of squared components).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

import gmpy2

NSYM = 7
Q = gmpy2.mpq
_QTYPE = type(Q(0))


def normalize(numerator, denominator=1):
    """Return the canonical rational ``numerator/denominator``.

    >>> normalize(-3, -6)
    mpq(1,2)
    """
    if denominator == 0:
        raise ZeroDivisionError("zero denominator")
    return Q(numerator, denominator)


def parse_rational(text):
    """Parse ``"p/q"`` or ``"p"``."""
    return Q(text.strip())


def format_rational(q):
    """Always emit ``p/q`` so the JSON encoding is uniform."""
    q = Q(q)
    return f"{q.numerator}/{q.denominator}"


def _is_rational(x):
    t = type(x)
    if t is int or t is _QTYPE or t is Fraction:
        return True
    return isinstance(x, _RationalABC) and t is not bool


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if type(re) is not _QTYPE:
            re = Q(re)
        if type(im) is not _QTYPE:
            im = Q(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussianRational):
            return x
        if _is_rational(x):
            return cls(x)
        if isinstance(x, complex):
            raise TypeError("floating point complex values are not exact")
        return None

    @classmethod
    def _make(cls, re, im):
        # Trusted constructor: both parts are already mpq.
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    # ring structure
    def __add__(self, other):
        if type(other) is GaussianRational:
            return GaussianRational._make(self.re + other.re, self.im + other.im)
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if type(other) is GaussianRational:
            return GaussianRational._make(self.re - other.re, self.im - other.im)
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = other if type(other) is GaussianRational else GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._make(self.re * o.re - self.im * o.im,
                                      self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self):
        """``|z|**2`` as a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self):
        return not self.re and not self.im

    def is_real(self):
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        o = GaussianRational.coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gr(self)

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    def to_json(self):
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, obj):
        return cls(parse_rational(obj["re"]), parse_rational(obj["im"]))


GR = GaussianRational
ZERO = GR(0)
ONE = GR(1)
I = GR(0, 1)


def gr_conj(z):
    return GR.coerce(z).conj()


def _fmt_frac(q):
    q = Q(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gr(z):
    """Short human form: ``1``, ``-i``, ``1/2+1/2i``."""
    re, im = z.re, z.im
    if im == 0:
        return _fmt_frac(re)
    if im == 1:
        ims = "i"
    elif im == -1:
        ims = "-i"
    else:
        ims = _fmt_frac(im) + "i"
    if re == 0:
        return ims
    sign = "" if ims.startswith("-") else "+"
    return f"{_fmt_frac(re)}{sign}{ims}"


def _coef_term(c, name):
    """Render ``c*name`` as (sign, body) for joining into a sum."""
    if c.im == 0:
        mag = abs(c.re)
        sign = "-" if c.re < 0 else "+"
        body = name if mag == 1 else f"{_fmt_frac(mag)}{name}"
        return sign, body
    if c.re == 0:
        mag = abs(c.im)
        sign = "-" if c.im < 0 else "+"
        body = f"i{name}" if mag == 1 else f"{_fmt_frac(mag)}i{name}"
        return sign, body
    return "+", f"({format_gr(c)}){name}"


def _join_terms(terms):
    if not terms:
        return "0"
    out = ""
    for k, (sign, body) in enumerate(terms):
        if k == 0:
            out = body if sign == "+" else "-" + body
        else:
            out += f" {sign} {body}"
    return out


class LinearForm:
    """``const + sum_A f[A-1] * f_A`` with Gaussian-rational coefficients.

    The symbols are real, so :meth:`conj` only conjugates coefficients.
    A product of two forms that both carry symbols is rejected; use
    :meth:`QuadraticForm.product` for that.
    """

    __slots__ = ("const", "f", "_linear")

    def __init__(self, const=0, f=None):
        c = GR.coerce(const)
        if c is None:
            raise TypeError(f"bad constant {const!r}")
        if f is None:
            coeffs = (ZERO,) * NSYM
        else:
            coeffs = tuple(GR.coerce(x) for x in f)
            if len(coeffs) != NSYM or any(x is None for x in coeffs):
                raise ValueError("a linear form needs exactly 7 exact coefficients")
        object.__setattr__(self, "const", c)
        object.__setattr__(self, "f", coeffs)
        object.__setattr__(self, "_linear", any(x.re or x.im for x in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    @classmethod
    def _make(cls, const, coeffs):
        # Trusted constructor for results of arithmetic on canonical values.
        obj = object.__new__(cls)
        object.__setattr__(obj, "const", const)
        object.__setattr__(obj, "f", coeffs)
        object.__setattr__(obj, "_linear", any(x.re or x.im for x in coeffs))
        return obj

    @classmethod
    def symbol(cls, a, coeff=1):
        """The form ``coeff * f_a`` (``a`` in 1..7)."""
        if not 1 <= a <= NSYM:
            raise IndexError(f"symbol index {a} outside 1..7")
        f = [ZERO] * NSYM
        f[a - 1] = GR.coerce(coeff)
        return cls(0, f)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LinearForm):
            return x
        g = GR.coerce(x)
        if g is None:
            return None
        return cls(g)

    def coeff(self, a):
        if not 1 <= a <= NSYM:
            raise IndexError(f"symbol index {a} outside 1..7")
        return self.f[a - 1]

    def is_constant(self):
        return not self._linear

    def is_zero(self):
        return not self._linear and self.const.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = LinearForm.coerce(other)
        if o is None:
            return NotImplemented
        return LinearForm._make(self.const + o.const, tuple(a + b for a, b in zip(self.f, o.f)))

    __radd__ = __add__

    def __neg__(self):
        return LinearForm._make(-self.const, tuple(-a for a in self.f))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = LinearForm.coerce(other)
        if o is None:
            return NotImplemented
        return LinearForm._make(self.const - o.const, tuple(a - b for a, b in zip(self.f, o.f)))

    def __rsub__(self, other):
        o = LinearForm.coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c):
        c = GR.coerce(c)
        if c is None:
            raise TypeError("linear forms scale by exact scalars only")
        return LinearForm._make(self.const * c, tuple(a * c for a in self.f))

    def __mul__(self, other):
        o = LinearForm.coerce(other)
        if o is None:
            return NotImplemented
        if o.is_constant():
            return self.scale(o.const)
        if self.is_constant():
            return o.scale(self.const)
        raise ValueError("product of two non-constant linear forms is not linear")

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = GR.coerce(other)
        if g is None:
            o = LinearForm.coerce(other)
            if o is None or not o.is_constant():
                return NotImplemented
            g = o.const
        return self.scale(g.inverse())

    def conj(self):
        return LinearForm._make(self.const.conj(), tuple(a.conj() for a in self.f))

    def __eq__(self, other):
        o = LinearForm.coerce(other)
        if o is None:
            return NotImplemented
        return self.const == o.const and self.f == o.f

    def __hash__(self):
        if self.is_constant():
            return hash(self.const)
        return hash((self.const, self.f))

    def __repr__(self):
        return f"LinearForm({self})"

    def __reduce__(self):
        return (LinearForm, (self.const, self.f))

    def __str__(self):
        terms = []
        if not self.const.is_zero():
            terms.append(_coef_term(self.const, ""))
            if terms[-1][1] == "":
                terms[-1] = (terms[-1][0], "1")
        for a, c in enumerate(self.f, start=1):
            if not c.is_zero():
                terms.append(_coef_term(c, f"f{a}"))
        return _join_terms(terms)

    def to_json(self):
        return {"const": self.const.to_json(), "f": [c.to_json() for c in self.f]}

    @classmethod
    def from_json(cls, obj):
        return cls(GR.from_json(obj["const"]), [GR.from_json(c) for c in obj["f"]])


def linform_coeff(x, a):
    return LinearForm.coerce(x).coeff(a)


def symbols():
    """The pure symbols ``f1 .. f7``."""
    return tuple(LinearForm.symbol(a) for a in range(1, NSYM + 1))


def _rank(x):
    if isinstance(x, DualTheta):
        return 3
    if isinstance(x, LinearForm):
        return 2
    if isinstance(x, GaussianRational) or _is_rational(x):
        return 1
    return 0


def promote(x):
    """Lift ints and Fractions to GaussianRational; leave ring elements alone."""
    if isinstance(x, (GaussianRational, LinearForm, DualTheta)):
        return x
    g = GR.coerce(x)
    if g is None:
        raise TypeError(f"not an exact scalar: {x!r}")
    return g


class DualTheta:
    """``c0 + c1*theta`` truncated at first order (``theta**2 == 0``).

    The coefficients may be Gaussian rationals or linear forms.
    """

    __slots__ = ("c0", "c1")

    def __init__(self, c0=0, c1=0):
        c0, c1 = promote(c0), promote(c1)
        if isinstance(c0, DualTheta) or isinstance(c1, DualTheta):
            raise TypeError("nested DualTheta values are not supported")
        object.__setattr__(self, "c0", c0)
        object.__setattr__(self, "c1", c1)

    def __setattr__(self, name, value):
        raise AttributeError("DualTheta is immutable")

    @classmethod
    def coerce(cls, x):
        if isinstance(x, DualTheta):
            return x
        if _rank(x) in (1, 2):
            return cls(x, 0)
        return None

    def __add__(self, other):
        o = DualTheta.coerce(other)
        if o is None:
            return NotImplemented
        return DualTheta(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return DualTheta(-self.c0, -self.c1)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = DualTheta.coerce(other)
        if o is None:
            return NotImplemented
        return DualTheta(self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        o = DualTheta.coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = DualTheta.coerce(other)
        if o is None:
            return NotImplemented
        # theta**2 term dropped
        return DualTheta(self.c0 * o.c0, self.c0 * o.c1 + self.c1 * o.c0)

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = GR.coerce(other)
        if g is None:
            return NotImplemented
        return DualTheta(self.c0 / g, self.c1 / g)

    def conj(self):
        # theta is a real parameter
        return DualTheta(self.c0.conj(), self.c1.conj())

    def is_zero(self):
        return self.c0.is_zero() and self.c1.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = DualTheta.coerce(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        if self.c1 == 0:
            return hash(self.c0)
        return hash((self.c0, self.c1))

    def __repr__(self):
        return f"DualTheta({self})"

    def __reduce__(self):
        return (DualTheta, (self.c0, self.c1))

    def __str__(self):
        return format_dual(self)

    def to_json(self):
        return {"c0": scalar_to_json(self.c0), "c1": scalar_to_json(self.c1)}

    @classmethod
    def from_json(cls, obj):
        return cls(scalar_from_json(obj["c0"]), scalar_from_json(obj["c1"]))


THETA = DualTheta(0, 1)


def dual_mul(x, y):
    return DualTheta.coerce(x) * DualTheta.coerce(y)


def _wrap(s):
    return f"({s})" if (" " in s or "+" in s[1:] or "-" in s[1:]) else s


def format_dual(d, theta="theta"):
    c0, c1 = str(d.c0), str(d.c1)
    if d.c1 == 0:
        return c0
    t = theta if c1 == "1" else f"-{theta}" if c1 == "-1" else f"{_wrap(c1)}*{theta}"
    if d.c0 == 0:
        return t
    if t.startswith("-"):
        return f"{c0} - {t[1:]}"
    return f"{c0} + {t}"


def scalar_to_json(x):
    """Encode any exact scalar per its ring's JSON shape."""
    if isinstance(x, (GaussianRational, LinearForm, DualTheta)):
        return x.to_json()
    if _is_rational(x):
        return format_rational(x)
    raise TypeError(f"cannot encode {x!r}")


def scalar_from_json(obj):
    if isinstance(obj, str):
        return parse_rational(obj)
    if "re" in obj:
        return GR.from_json(obj)
    if "const" in obj:
        return LinearForm.from_json(obj)
    if "c0" in obj:
        return DualTheta.from_json(obj)
    raise ValueError(f"unrecognised scalar encoding: {obj!r}")


def format_scalar(x):
    if _is_rational(x):
        return _fmt_frac(x)
    return str(x)


class QuadraticForm:
    """Accumulator for degree-<=2 polynomials in the real symbols ``f1..f7``.

    Keys are ``()`` for the constant, ``(A,)`` for linear terms and
    ``(A, B)`` with ``A <= B`` for quadratic terms. Zero terms are dropped,
    so equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, v in (terms or {}).items():
            v = GR.coerce(v)
            if not v.is_zero():
                clean[tuple(sorted(k))] = v
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticForm is immutable")

    @classmethod
    def from_linear(cls, x):
        x = LinearForm.coerce(x)
        t = {(): x.const}
        for a, c in enumerate(x.f, start=1):
            t[(a,)] = c
        return cls(t)

    @classmethod
    def product(cls, x, y):
        """Exact product of two linear forms."""
        x, y = LinearForm.coerce(x), LinearForm.coerce(y)
        xs = [((), x.const)] + [((a,), c) for a, c in enumerate(x.f, start=1)]
        ys = [((), y.const)] + [((a,), c) for a, c in enumerate(y.f, start=1)]
        acc = {}
        for kx, cx in xs:
            if cx.is_zero():
                continue
            for ky, cy in ys:
                if cy.is_zero():
                    continue
                key = tuple(sorted(kx + ky))
                acc[key] = acc.get(key, ZERO) + cx * cy
        return cls(acc)

    def __add__(self, other):
        if not isinstance(other, QuadraticForm):
            if _rank(other) in (1, 2):
                other = QuadraticForm.from_linear(other)
            else:
                return NotImplemented
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, ZERO) + v
        return QuadraticForm(acc)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticForm({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = GR.coerce(c)
        return QuadraticForm({k: v * c for k, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, QuadraticForm):
            if _rank(other) in (1, 2):
                other = QuadraticForm.from_linear(other)
            else:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda kv: kv[0])))

    def __str__(self):
        def name(k):
            if not k:
                return ""
            if len(k) == 2 and k[0] == k[1]:
                return f"f{k[0]}^2"
            return "*".join(f"f{a}" for a in k)

        terms = []
        for k in sorted(self.terms, key=lambda k: (len(k), k)):
            s, b = _coef_term(self.terms[k], name(k))
            terms.append((s, b or "1"))
        return _join_terms(terms)

    def __repr__(self):
        return f"QuadraticForm({self})"

    def __reduce__(self):
        return (QuadraticForm, (self.terms,))


def quad_mul(x, y):
    """Product of two scalars that may be quadratic in the symbols.

    Handles DualTheta operands component-wise; returns a QuadraticForm or a
    ``(c0, c1)`` pair of QuadraticForms for the theta-truncated case.
    """
    if isinstance(x, DualTheta) or isinstance(y, DualTheta):
        x, y = DualTheta.coerce(x), DualTheta.coerce(y)
        c0 = QuadraticForm.product(x.c0, y.c0)
        c1 = QuadraticForm.product(x.c0, y.c1) + QuadraticForm.product(x.c1, y.c0)
        return c0, c1
    return QuadraticForm.product(x, y)

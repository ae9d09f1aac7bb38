"""Split-octonion algebra in the idempotent basis.

The product table is transcribed verbatim and is the single source of truth;
the structural identities (epsilon/delta rules, idempotents, annihilations)
are checked against it by :func:`validate_table`.

Basis order, used for every matrix index in the package::

    u0, u1, u2, u3, u0*, u1*, u2*, u3*
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import product

from .clifford import GeneratorSet
from .matrix import from_blocks, from_terms, parse_unit_terms, zero
from .scalars import GR, I, ONE, ZERO


class SplitBasis(IntEnum):
    U0 = 0
    U1 = 1
    U2 = 2
    U3 = 3
    U0S = 4
    U1S = 5
    U2S = 6
    U3S = 7

    @property
    def label(self):
        k = self.value % 4
        return f"u{k}*" if self.value >= 4 else f"u{k}"

    @property
    def starred(self):
        return self.value >= 4

    @property
    def index(self):
        """The subscript 0..3."""
        return self.value % 4

    @classmethod
    def parse(cls, text):
        t = text.strip().replace("_", "").replace("^", "")
        for b in cls:
            if b.label == t:
                return b
        raise ValueError(f"unknown basis symbol {text!r}")


def u(k):
    return SplitBasis(k)


def ustar(k):
    return SplitBasis(k + 4)


# Rows and columns in the order the table is printed.
TABLE_ORDER = ("u0*", "u1*", "u2*", "u3*", "u0", "u1", "u2", "u3")
TABLE_PRINTED = (
    ("u0*", "u1*", "u2*", "u3*", "0", "0", "0", "0"),
    ("0", "0", "u3", "-u2", "u1*", "-u0*", "0", "0"),
    ("0", "-u3", "0", "u1", "u2*", "0", "-u0*", "0"),
    ("0", "u2", "-u1", "0", "u3*", "0", "0", "-u0*"),
    ("0", "0", "0", "0", "u0", "u1", "u2", "u3"),
    ("u1", "-u0", "0", "0", "0", "0", "u3*", "-u2*"),
    ("u2", "0", "-u0", "0", "0", "-u3*", "0", "u1*"),
    ("u3", "0", "0", "-u0", "0", "u2*", "-u1*", "0"),
)


def _parse_cell(cell):
    if cell == "0":
        return None
    if cell.startswith("-"):
        return (-1, SplitBasis.parse(cell[1:]))
    return (1, SplitBasis.parse(cell))


def _build_structure():
    table = {}
    for rlabel, row in zip(TABLE_ORDER, TABLE_PRINTED):
        for clabel, cell in zip(TABLE_ORDER, row):
            table[(SplitBasis.parse(rlabel), SplitBasis.parse(clabel))] = _parse_cell(cell)
    return table


STRUCTURE = _build_structure()


def mul_basis(x, y):
    """``x * y`` for basis symbols: ``(sign, basis)`` or ``None`` for zero."""
    return STRUCTURE[(SplitBasis(x), SplitBasis(y))]


def format_signed(entry):
    if entry is None:
        return "0"
    s, b = entry
    return ("-" if s < 0 else "") + b.label


def levi_civita(i, j, k):
    if len({i, j, k}) < 3:
        return 0
    perm = (i, j, k)
    return 1 if perm in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


class SplitOctonion:
    """Element ``sum c_k b_k`` over :class:`SplitBasis` with Gaussian-rational ``c_k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = (ZERO,) * 8
        coeffs = tuple(GR.coerce(c) for c in coeffs)
        if len(coeffs) != 8 or any(c is None for c in coeffs):
            raise ValueError("a split octonion has 8 exact coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("SplitOctonion is immutable")

    @classmethod
    def basis(cls, b, coeff=1):
        c = [ZERO] * 8
        c[int(b)] = GR.coerce(coeff)
        return cls(c)

    @classmethod
    def from_signed(cls, entry):
        if entry is None:
            return cls()
        s, b = entry
        return cls.basis(b, s)

    def __add__(self, other):
        return SplitOctonion([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return SplitOctonion([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return SplitOctonion([-a for a in self.coeffs])

    def scale(self, c):
        c = GR.coerce(c)
        return SplitOctonion([a * c for a in self.coeffs])

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, SplitOctonion):
            return self.scale(other)
        return mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, SplitOctonion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __str__(self):
        parts = []
        for b, c in zip(SplitBasis, self.coeffs):
            if c.is_zero():
                continue
            if c == 1:
                parts.append(b.label)
            elif c == -1:
                parts.append("-" + b.label)
            else:
                parts.append(f"({c}){b.label}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self):
        return f"SplitOctonion({self})"


def mul(x, y):
    out = [ZERO] * 8
    for i, a in enumerate(x.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(y.coeffs):
            if b.is_zero():
                continue
            e = STRUCTURE[(SplitBasis(i), SplitBasis(j))]
            if e is not None:
                s, k = e
                out[k] = out[k] + a * b * s
    return SplitOctonion(out)


# ---- table checks --------------------------------------------------------


def table_closure():
    """Re-render every product computed by :func:`mul_basis` and compare it
    with the printed cell text. Returns ``(checked, mismatching cells)``.
    """
    bad = []
    checked = 0
    for rlabel, row in zip(TABLE_ORDER, TABLE_PRINTED):
        for clabel, cell in zip(TABLE_ORDER, row):
            got = mul_basis(SplitBasis.parse(rlabel), SplitBasis.parse(clabel))
            checked += 1
            if format_signed(got) != cell:
                bad.append((rlabel, clabel, cell, format_signed(got)))
    return checked, bad


@dataclass(frozen=True)
class IdentityCheck:
    rule: str
    product: str
    expected: SplitOctonion
    actual: SplitOctonion

    @property
    def ok(self):
        return self.expected == self.actual


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def violations(self):
        return [c for c in self.checks if not c.ok]

    @property
    def passed(self):
        return not self.violations

    def to_json(self):
        return {
            "checks": len(self.checks),
            "violations": [
                {"rule": c.rule, "product": c.product,
                 "expected": str(c.expected), "actual": str(c.actual)}
                for c in self.violations
            ],
        }


def validate_table():
    """Check the algebra rules of the split basis against the table."""
    B = SplitOctonion.basis
    zero_el = SplitOctonion()
    checks = []

    def add(rule, x, y, expected):
        actual = SplitOctonion.from_signed(mul_basis(x, y))
        checks.append(IdentityCheck(rule, f"{x.label}{y.label}", expected, actual))

    def eps_sum(i, j, target):
        out = zero_el
        for k in range(1, 4):
            e = levi_civita(i, j, k)
            if e:
                out = out + B(target(k), e)
        return out

    idx = range(1, 4)
    for i, j in product(idx, idx):
        add("u_i u_j = eps_ijk u_k*", u(i), u(j), eps_sum(i, j, ustar))
        add("u_i u_j = -u_j u_i", u(i), u(j),
            -SplitOctonion.from_signed(mul_basis(u(j), u(i))))
        add("u_i* u_j* = eps_ijk u_k", ustar(i), ustar(j), eps_sum(i, j, u))
        add("u_i* u_j* = -u_j* u_i*", ustar(i), ustar(j),
            -SplitOctonion.from_signed(mul_basis(ustar(j), ustar(i))))
        d = 1 if i == j else 0
        add("u_i u_j* = -delta_ij u0", u(i), ustar(j), B(u(0), -d))
        add("u_i* u_j = -delta_ij u0*", ustar(i), u(j), B(ustar(0), -d))
    for i in idx:
        add("u0 u_i = u_i", u(0), u(i), B(u(i)))
        add("u_i u0* = u_i", u(i), ustar(0), B(u(i)))
        add("u0* u_i* = u_i*", ustar(0), ustar(i), B(ustar(i)))
        add("u_i* u0 = u_i*", ustar(i), u(0), B(ustar(i)))
        add("u_i u0 = 0", u(i), u(0), zero_el)
        add("u0 u_i* = 0", u(0), ustar(i), zero_el)
        add("u_i* u0* = 0", ustar(i), ustar(0), zero_el)
        add("u0* u_i = 0", ustar(0), u(i), zero_el)
    add("u0 u0* = 0", u(0), ustar(0), zero_el)
    add("u0* u0 = 0", ustar(0), u(0), zero_el)
    add("u0^2 = u0", u(0), u(0), B(u(0)))
    add("u0*^2 = u0*", ustar(0), ustar(0), B(ustar(0)))
    return ValidationReport(tuple(checks))


# ---- e-basis bridge ------------------------------------------------------

HALF = GR(1, 0) / 2


def _e_image_of_u():
    """Rows: e-coefficients of each split basis vector."""
    rows = []
    for b in SplitBasis:
        c = [ZERO] * 8
        k = b.index
        partner = 7 if k == 0 else k + 3
        sign = -1 if b.starred else 1
        c[k] = HALF
        c[partner] = HALF * I * sign
        rows.append(tuple(c))
    return tuple(rows)


def _u_image_of_e():
    rows = [None] * 8
    for k in range(4):
        partner = 7 if k == 0 else k + 3
        plus = [ZERO] * 8
        plus[k] = ONE
        plus[k + 4] = ONE
        rows[k] = tuple(plus)  # e_k = u_k + u_k*
        minus = [ZERO] * 8
        minus[k] = -I
        minus[k + 4] = I
        rows[partner] = tuple(minus)  # e_partner = -i (u_k - u_k*)
    return tuple(rows)


U_TO_E = _e_image_of_u()
E_TO_U = _u_image_of_e()


def _apply(rows, coeffs):
    out = [ZERO] * 8
    for c, row in zip(coeffs, rows):
        if c.is_zero():
            continue
        for k, r in enumerate(row):
            out[k] = out[k] + c * r
    return tuple(out)


def to_e_basis(z):
    """e-basis coefficients ``(e0..e7)`` of a split octonion."""
    return _apply(U_TO_E, z.coeffs)


def from_e_basis(coeffs):
    coeffs = tuple(GR.coerce(c) for c in coeffs)
    return SplitOctonion(_apply(E_TO_U, coeffs))


def e_basis_bridge(direction, element):
    """``direction`` is ``"u->e"`` (element a SplitOctonion) or ``"e->u"``
    (element a length-8 coefficient sequence)."""
    if direction == "u->e":
        return to_e_basis(element)
    if direction == "e->u":
        return from_e_basis(element)
    raise ValueError(f"unknown direction {direction!r}")


def e_vector(a, coeff=1):
    c = [ZERO] * 8
    c[a] = GR.coerce(coeff)
    return tuple(c)


def e_mul(x, y):
    return to_e_basis(mul(from_e_basis(x), from_e_basis(y)))


def derive_e_table():
    """8x8 table of e-coefficient tuples, ``table[a][b] = e_a e_b``."""
    return tuple(tuple(e_mul(e_vector(a), e_vector(b)) for b in range(8)) for a in range(8))


def format_e(coeffs):
    parts = []
    for k, c in enumerate(coeffs):
        if c.is_zero():
            continue
        if c == 1:
            parts.append(f"e{k}")
        elif c == -1:
            parts.append(f"-e{k}")
        else:
            parts.append(f"({c})e{k}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def e_table_properties(table=None):
    """Return a dict of failure lists for the imaginary-unit rules."""
    t = table or derive_e_table()
    neutral = [a for a in range(8)
               if t[0][a] != e_vector(a) or t[a][0] != e_vector(a)]
    squares = [a for a in range(1, 8) if t[a][a] != e_vector(0, -1)]
    anti = [(a, b) for a in range(1, 8) for b in range(a + 1, 8)
            if t[a][b] != tuple(-c for c in t[b][a])]
    return {"neutral": neutral, "squares": squares, "anticommute": anti}


def associator_witnesses(limit=None):
    """Basis triples ``(x, y, z)`` with ``(xy)z != x(yz)`` by exhaustive search."""
    found = []
    for x, y, z in product(SplitBasis, repeat=3):
        X, Y, Z = (SplitOctonion.basis(b) for b in (x, y, z))
        if mul(mul(X, Y), Z) != mul(X, mul(Y, Z)):
            found.append((x, y, z))
            if limit and len(found) >= limit:
                break
    return found


# ---- left multiplication -------------------------------------------------


def left_mul_matrix(k):
    """``M[i][j]`` is the coefficient of basis ``j`` in ``k * basis_i``.

    Row ``i`` of the matrix therefore lists the expansion of ``k`` times the
    i-th spinor component, which is the layout of the printed operators.
    The action on a coefficient vector ``z`` is ``transpose(M) @ z``.
    """
    k = SplitBasis(k)
    terms = []
    for i in SplitBasis:
        e = mul_basis(k, i)
        if e is not None:
            s, j = e
            terms.append((s, int(i) + 1, int(j) + 1))
    return from_terms(terms)


def apply_left(M, z):
    """Coefficients of ``k * z`` from ``k``'s left-multiplication matrix."""
    out = [ZERO] * 8
    for i, row in enumerate(M.rows):
        c = z.coeffs[i]
        if c.is_zero():
            continue
        for j, v in enumerate(row):
            if v != 0:
                out[j] = out[j] + c * v
    return SplitOctonion(out)


LEFT_MUL_PRINTED = {
    SplitBasis.U0: "a11 + a22 + a33 + a44",
    SplitBasis.U1: "a38 - a47 + a52 - a61",
    SplitBasis.U2: "-a28 + a46 + a53 - a71",
    SplitBasis.U3: "a27 - a36 + a54 - a81",
    SplitBasis.U0S: "a44 + a55 + a66 + a77",
    SplitBasis.U1S: "a16 - a25 + a64 - a74",
    SplitBasis.U2S: "a17 - a35 - a64 + a82",
    SplitBasis.U3S: "a18 - a45 + a63 - a72",
}


def left_mul_fixture(k):
    return from_terms(parse_unit_terms(LEFT_MUL_PRINTED[SplitBasis(k)]))


def left_mul_diff(k):
    """Cells where the printed operator differs from the table-derived one.

    Each entry carries the table products of the affected rows.
    """
    k = SplitBasis(k)
    derived, printed = left_mul_matrix(k), left_mul_fixture(k)
    cells = []
    for i, j, v in derived.entries():
        p = printed[i, j]
        if v != p:
            b = SplitBasis(i)
            cells.append({
                "row": i + 1, "col": j + 1,
                "derived": str(v), "printed": str(p),
                "justification": f"{k.label}*{b.label} = {format_signed(mul_basis(k, b))}",
            })
    return cells


# ---- combined generators -------------------------------------------------

# A -> (basis index k, sign of the starred operator)
U_COMBINATIONS = {
    0: (0, 1), 1: (1, 1), 2: (2, 1), 3: (3, 1),
    4: (0, -1), 5: (1, -1), 6: (2, -1), 7: (3, -1),
}


def u_matrix(A):
    """``U_A = L(u_k) +/- L(u_k*)`` built from the table."""
    if A not in U_COMBINATIONS:
        raise IndexError(f"generator index {A} outside 0..7")
    k, s = U_COMBINATIONS[A]
    return left_mul_matrix(u(k)) + left_mul_matrix(ustar(k)).scale(s)


def _u_printed():
    from .clifford import pauli

    s0, s1, s2, s3 = (pauli(k) for k in range(4))
    z = zero(2)

    def B(grid, c=ONE):
        return from_blocks(grid).scale(c)

    return {
        0: B([[s0, z, z, z], [z, s0, z, z], [z, z, s0, z], [z, z, z, s0]]),
        1: B([[z, z, s2, z], [z, z, z, s2], [s2, z, z, z], [z, s2, z, z]], I),
        2: B([[z, z, z, s3], [z, z, -s3, z], [z, s3, z, z], [-s3, z, z, z]]),
        3: B([[z, z, z, s1], [z, z, -s1, z], [z, s1, z, z], [-s1, z, z, z]]),
        4: B([[s0, z, z, z], [z, s0, z, z], [z, z, -s0, z], [z, z, z, -s0]]),
        5: B([[z, z, s2, z], [z, z, z, -s2], [s2, z, z, z], [z, -s2, z, z]], I),
        6: B([[z, z, z, -s0], [z, z, s0, z], [z, s0, z, z], [-s0, z, z, z]]),
        7: B([[z, z, z, s2], [z, z, s2, z], [z, -s2, z, z], [-s2, z, z, z]], I),
    }


_U_PRINTED = None


def u_fixture(A):
    """The printed block matrix for ``U_A``."""
    global _U_PRINTED
    if _U_PRINTED is None:
        _U_PRINTED = _u_printed()
    if A not in _U_PRINTED:
        raise IndexError(f"generator index {A} outside 0..7")
    return _U_PRINTED[A]


@lru_cache(maxsize=None)
def split_generator_set():
    return GeneratorSet("U (split octonion)", [u_matrix(A) for A in range(1, 8)],
                        "split_octonion")


def printed_u_set():
    return GeneratorSet("U (printed blocks)", [u_fixture(A) for A in range(1, 8)],
                        "fixture", {"fixture": "printed:u_blocks"})


def left_mul_faithful(z, k):
    """True when the matrix action of ``k`` on ``z`` equals ``k * z``."""
    return apply_left(left_mul_matrix(k), z) == mul(SplitOctonion.basis(k), z)


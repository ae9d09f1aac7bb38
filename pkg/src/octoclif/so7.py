"""First-order SO(7) rotations of ``X = sum_A f_A U_A``.

``theta`` is a formal nilpotent, so ``R = 1 + theta*G`` has the exact inverse
``1 - theta*G`` and every conjugation ``R X R^-1`` is exact to first order.

Two generator conventions are supported:

``A``  ``G = U_k U_l``
``B``  ``G = (1/2i)[U_k, U_l]``
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .clifford import HALF_OVER_I, signature_check
from .matrix import ExactMatrix, commutator, hs_inner, identity, zero
from .scalars import (
    GR,
    NSYM,
    THETA,
    DualTheta,
    LinearForm,
    QuadraticForm,
    quad_mul,
    scalar_to_json,
    symbols,
)

CONVENTIONS = ("A", "B")
PAIRS = tuple(combinations(range(1, 8), 2))


def default_basis():
    from .split_octonion import split_generator_set
    return split_generator_set()


# ---- parsing printed symbolic entries ------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*(i?)\s*(f[1-7])?")


def parse_linear(text):
    """Parse a printed entry such as ``"if1 - f5"``, ``"-f4"``, ``"0"``."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return LinearForm()
    out = LinearForm()
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
        sign, num, imag, sym = m.groups()
        if not (num or imag or sym):
            raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
        c = GR(num or 1) * (-1 if sign == "-" else 1)
        if imag:
            c = c * GR(0, 1)
        out = out + (LinearForm.symbol(int(sym[1]), c) if sym else LinearForm(c))
        pos = m.end()
    return out


def _grid(rows):
    return ExactMatrix([[parse_linear(c) for c in r] for r in rows])


# ---- printed objects ------------------------------------------------------

X_PRINTED = (
    ("f4", "0", "0", "0", "0", "if1 - f5", "if2 - f6", "if3 - f7"),
    ("0", "f4", "0", "0", "f5 - if1", "0", "if3 + f7", "-if2 - f6"),
    ("0", "0", "f4", "0", "f6 - if2", "-if3 - f7", "0", "if1 + f5"),
    ("0", "0", "0", "f4", "f7 - if3", "if2 + f6", "-if1 - f5", "0"),
    ("0", "if1 + f5", "if2 + f6", "if3 - f7", "-f4", "0", "0", "0"),
    ("-if1 - f5", "0", "-if3 - f7", "f6 - if2", "0", "-f4", "0", "0"),
    ("if2 - f6", "f7 - if3", "0", "if1 - f5", "0", "0", "-f4", "0"),
    ("if3 - f7", "if2 - f6", "f5 - if1", "0", "0", "0", "0", "-f4"),
)

B_PRINTED = (
    ("0", "if1 - f5", "if2 - f6", "if3 - f7"),
    ("f5 - if1", "0", "if3 + f7", "-if2 - f6"),
    ("f6 - if2", "-if3 - f7", "0", "if1 + f5"),
    ("f7 - if3", "if2 + f6", "-if1 - f5", "0"),
)

# theta-part of the printed R12 operator, as multiples of i
R12_PRINTED_THETA = {(1, 4): 1, (2, 3): 1, (3, 2): -1, (4, 1): -1,
                     (5, 8): 1, (6, 7): 1, (7, 6): -1, (8, 5): -1}

# printed change of X under R12, without its overall 2*theta factor
DX_R12_PRINTED = (
    ("0", "0", "0", "0", "0", "if2", "-if1", "0"),
    ("0", "0", "0", "0", "-if2", "0", "0", "if1"),
    ("0", "0", "0", "0", "if1", "0", "0", "if2"),
    ("0", "0", "0", "0", "0", "-if1", "-if2", "0"),
    ("0", "if2", "-if1", "0", "0", "0", "0", "0"),
    ("-if2", "0", "0", "if1", "0", "0", "0", "0"),
    ("if1", "0", "0", "if2", "0", "0", "0", "0"),
    ("0", "-if1", "-if2", "0", "0", "0", "0", "0"),
)

# Component table: cell text is the bracket in f_A -> f_A + 2 theta [cell];
# missing components are unchanged.
TABLE2_PRINTED = {
    (1, 2): {1: "f2 - if5", 2: "-f1 - if6"},
    (1, 3): {1: "f3 - if5", 3: "-f1 - if7"},
    (1, 4): {1: "f4 - if5", 4: "-f1"},
    (1, 5): {1: "-if1", 5: "-if5"},
    (1, 6): {1: "f6 - if5", 6: "-f1 + if2"},
    (1, 7): {1: "f7 - if5", 7: "-f1 + if3"},
    (2, 3): {2: "f3 - if6", 3: "-f2 - if7"},
    (2, 4): {2: "f4 - if6", 4: "-f2"},
    (2, 5): {2: "f5 - if6", 5: "-f2 + if1"},
    (2, 6): {2: "-if2", 6: "-if6"},
    (2, 7): {2: "f7 - if6", 7: "-f2 + if3"},
    (3, 4): {3: "f4 - if7", 4: "-f3"},
    (3, 5): {3: "f5 - if7", 5: "-f3 + if1"},
    (3, 6): {3: "f6 - if7", 6: "-f3 + if2"},
    (3, 7): {3: "-if3", 7: "-if7"},
    (4, 5): {4: "f5", 5: "-f4 + if1"},
    (4, 6): {4: "f6", 6: "-f4 + if2"},
    (4, 7): {4: "f7", 7: "-f4 + if3"},
    (5, 6): {5: "f6 + if1", 6: "-f5 + if2"},
    (5, 7): {5: "f7 + if1", 7: "-f5 + if3"},
    (6, 7): {6: "f7 + if2", 7: "-f6 + if3"},
}

FIXTURE_LABELS = {
    "mult_table": "printed:mult_table",
    "beta_expansion": "printed:beta_expansion",
    "left_mul": "printed:left_mul",
    "u_blocks": "printed:u_blocks",
    "x_matrix": "printed:X_matrix",
    "b_block": "printed:B_block",
    "r12": "printed:R12",
    "dx_r12": "printed:dX_R12",
    "component_table": "printed:component_table",
}


def x_fixture():
    return _grid(X_PRINTED)


def b_fixture():
    return _grid(B_PRINTED)


def r12_fixture():
    rows = [[DualTheta(1 if i == j else 0, 0) for j in range(8)] for i in range(8)]
    for (i, j), s in R12_PRINTED_THETA.items():
        rows[i - 1][j - 1] = DualTheta(0, GR(0, s))
    return ExactMatrix(rows)


def dx_r12_fixture():
    return _grid(DX_R12_PRINTED).scale(DualTheta(0, 2))


def table2_fixture():
    """``{pair: {component: LinearForm cell}}`` with blank cells omitted."""
    return {p: {a: parse_linear(t) for a, t in cells.items()}
            for p, cells in TABLE2_PRINTED.items()}


def fixture_image(pair, a, fixture=None):
    cells = (fixture or table2_fixture())[pair]
    f = LinearForm.symbol(a)
    if a not in cells:
        return DualTheta(f, 0)
    return DualTheta(f, cells[a].scale(2))


# ---- assembly and blocks -------------------------------------------------


def assemble_X(f, basis=None):
    """``sum_A f[A-1] * U_A`` with linear-form entries."""
    basis = basis or default_basis()
    if len(f) != NSYM:
        raise ValueError("a component vector has 7 entries")
    out = zero(8)
    for fa, U in zip(f, basis.mats):
        fa = LinearForm.coerce(fa)
        if fa.is_zero():
            continue
        out = out + U.map(lambda v, fa=fa: fa * v)
    return out


@dataclass(frozen=True)
class BlockForm:
    A: ExactMatrix
    B: ExactMatrix
    Bdag: ExactMatrix
    D: ExactMatrix

    @property
    def consistent(self):
        return self.A == -self.D and self.B == self.Bdag.dagger()


def block_decompose(x):
    """Split ``x`` into 4x4 blocks ``[[A, B], [Bdag, D]]``.

    ``B`` is the upper-right block, which is where the printed ``B`` sits
    inside the printed ``X``. ``consistent`` means ``D == -A`` and
    ``B == dagger(Bdag)``.
    """
    return BlockForm(x.block(0, 0, 4), x.block(0, 1, 4), x.block(1, 0, 4), x.block(1, 1, 4))


def hermitian_violations(x):
    """One-based cells where ``x != dagger(x)`` (upper triangle and diagonal)."""
    d = x.dagger()
    return [(i + 1, j + 1) for i, j, v in x.entries() if j >= i and v != d[i, j]]


# ---- rotation operators --------------------------------------------------


@dataclass(frozen=True)
class RotationOperator:
    k: int
    l: int
    convention: str
    generator: ExactMatrix

    @property
    def matrix(self):
        return identity(8) + self.generator.scale(THETA)

    @property
    def inverse(self):
        return identity(8) - self.generator.scale(THETA)

    def inverse_holds(self):
        m, inv = self.matrix, self.inverse
        return m @ inv == identity(8) and inv @ m == identity(8)


def rotation_generator(k, l, convention="A", basis=None):
    basis = basis or default_basis()
    if k == l:
        raise ValueError("rotation plane needs two distinct indices")
    if convention == "A":
        return basis[k] @ basis[l]
    if convention == "B":
        return commutator(basis[k], basis[l]).scale(HALF_OVER_I)
    raise ValueError(f"unknown convention {convention!r}")


def rotation_operator(k, l, convention="A", basis=None):
    return RotationOperator(k, l, convention, rotation_generator(k, l, convention, basis))


# ---- projection ----------------------------------------------------------


def project_components(x, basis=None):
    """Hilbert-Schmidt projection onto the generators.

    Returns ``(components, residual)`` with ``residual = x - sum f_A U_A``.
    """
    basis = basis or default_basis()
    comps = []
    for U in basis.mats:
        norm = hs_inner(U, U)
        if norm == 0:
            raise ValueError("degenerate basis: zero self inner product")
        comps.append(hs_inner(U, x) / norm)
    recon = zero(8)
    for c, U in zip(comps, basis.mats):
        recon = recon + U.map(lambda v, c=c: c * v)
    return tuple(comps), x - recon


@dataclass(frozen=True)
class RotationOutcome:
    operator: RotationOperator
    x_in: ExactMatrix
    x_out: ExactMatrix
    projected: tuple
    residual: ExactMatrix

    @property
    def residual_zero(self):
        return self.residual.is_zero()

    def first_order_exact(self):
        G = self.operator.generator
        expected = self.x_in + (G @ self.x_in - self.x_in @ G).scale(THETA)
        return self.x_out == expected


def rotate(x, r, basis=None):
    x_out = r.matrix @ x @ r.inverse
    comps, residual = project_components(x_out, basis)
    return RotationOutcome(r, x, x_out, comps, residual)


# ---- invariants ----------------------------------------------------------


def trace_square(x):
    """``trace(x @ x)`` for linear-form or dual entries.

    Returns a QuadraticForm, or a ``(c0, c1)`` pair of them for dual entries.
    """
    dual = any(isinstance(v, DualTheta) for _, _, v in x.entries())
    c0, c1 = QuadraticForm(), QuadraticForm()
    for i, j, v in x.entries():
        w = x[j, i]
        if v == 0 or w == 0:
            continue
        p = quad_mul(DualTheta.coerce(v), DualTheta.coerce(w))
        c0, c1 = c0 + p[0], c1 + p[1]
    return (c0, c1) if dual else c0


def sum_of_squares(components, weights=None):
    """``sum_A w_A (f'_A)**2`` as a ``(c0, c1)`` pair of QuadraticForms."""
    c0, c1 = QuadraticForm(), QuadraticForm()
    for a, fa in enumerate(components):
        w = GR(1) if weights is None else GR.coerce(weights[a])
        p = quad_mul(DualTheta.coerce(fa), DualTheta.coerce(fa))
        c0, c1 = c0 + p[0].scale(w), c1 + p[1].scale(w)
    return c0, c1


@dataclass(frozen=True)
class PairInvariants:
    pair: tuple
    convention: str
    inverse_holds: bool
    first_order_exact: bool
    trace_zero: bool
    trace_square_preserved: bool
    residual_zero: bool
    norm_first_order_zero: bool
    signature_norm_first_order_zero: bool


@lru_cache(maxsize=256)
def _rotated_symbols(k, l, convention, basis):
    # Rotations are pure functions of immutable inputs, so one sweep serves
    # the invariant checks, the component table and the reports.
    x = assemble_X(symbols(), basis)
    return rotate(x, rotation_operator(k, l, convention, basis), basis)


def rotate_symbols(k, l, convention="A", basis=None):
    """Rotate ``assemble_X(f1..f7)`` in the (k, l) plane."""
    return _rotated_symbols(k, l, convention, basis or default_basis())


def pair_invariants(k, l, convention="A", basis=None):
    basis = basis or default_basis()
    out = rotate_symbols(k, l, convention, basis)
    x, r = out.x_in, out.operator
    t0 = trace_square(x)
    t1 = trace_square(out.x_out)
    eta = signature_check(basis).diagonal_signs
    return PairInvariants(
        pair=(k, l),
        convention=convention,
        inverse_holds=r.inverse_holds(),
        first_order_exact=out.first_order_exact(),
        trace_zero=out.x_out.trace() == 0,
        trace_square_preserved=t1[0] == t0 and t1[1].is_zero(),
        residual_zero=out.residual_zero,
        norm_first_order_zero=sum_of_squares(out.projected)[1].is_zero(),
        signature_norm_first_order_zero=(
            None not in eta and sum_of_squares(out.projected, eta)[1].is_zero()),
    )


# ---- component table -----------------------------------------------------


@dataclass(frozen=True)
class TransformRow:
    pair: tuple
    convention: str
    images: tuple  # DualTheta over LinearForm, components 1..7
    residual_zero: bool

    def to_json(self):
        return {
            "pair": list(self.pair),
            "convention": self.convention,
            "maps": [{"component": a, "image": scalar_to_json(DualTheta.coerce(img))}
                     for a, img in enumerate(self.images, start=1)],
            "residual_zero": self.residual_zero,
        }

    def cell(self, a):
        """``(image - f_a) / (2 theta)`` or ``None`` when unchanged."""
        img = DualTheta.coerce(self.images[a - 1])
        if LinearForm.coerce(img.c1).is_zero():
            return None
        return LinearForm.coerce(img.c1) / 2


def transform_row(k, l, convention="A", basis=None):
    out = rotate_symbols(k, l, convention, basis)
    return TransformRow((k, l), convention, out.projected, out.residual_zero)


def transform_table(convention="A", basis=None):
    basis = basis or default_basis()
    return [transform_row(k, l, convention, basis) for k, l in PAIRS]


def fixture_rows():
    fx = table2_fixture()
    return [TransformRow(p, "printed",
                         tuple(fixture_image(p, a, fx) for a in range(1, 8)), True)
            for p in PAIRS]


@dataclass(frozen=True)
class CellComparison:
    pair: tuple
    component: int
    derived: object
    printed: object
    status: str  # "match", "mismatch", "blank_agree"


@dataclass(frozen=True)
class Table2DiffReport:
    cells: tuple

    def counts(self, pair=None):
        out = {"match": 0, "mismatch": 0, "blank_agree": 0}
        for c in self.cells:
            if pair is None or c.pair == pair:
                out[c.status] += 1
        return out

    def rows(self):
        seen = []
        for c in self.cells:
            if c.pair not in seen:
                seen.append(c.pair)
        return seen

    def to_json(self):
        def enc(v):
            return None if v is None else str(v)
        return {
            "totals": self.counts(),
            "rows": [{"pair": list(p), "counts": self.counts(p),
                      "cells": [{"component": c.component, "status": c.status,
                                 "derived": enc(c.derived), "printed": enc(c.printed)}
                                for c in self.cells if c.pair == p]}
                     for p in self.rows()],
        }


def compare_table2(derived, fixture):
    """Cell-by-cell comparison of two lists of :class:`TransformRow`."""
    by_pair = {r.pair: r for r in fixture}
    cells = []
    for row in derived:
        other = by_pair[row.pair]
        for a in range(1, 8):
            d, p = row.cell(a), other.cell(a)
            if d is None and p is None:
                status = "blank_agree"
            elif d is not None and p is not None and d == p:
                status = "match"
            else:
                status = "mismatch"
            cells.append(CellComparison(row.pair, a, d, p, status))
    return Table2DiffReport(tuple(cells))


# ---- printed-matrix comparisons ------------------------------------------


def r12_convention_report(basis=None):
    """Which convention reproduces the printed R12, with per-entry deltas."""
    printed = r12_fixture()
    out = {}
    for conv in CONVENTIONS:
        m = rotation_operator(1, 2, conv, basis).matrix
        out[conv] = [{"row": i + 1, "col": j + 1, "derived": str(v), "printed": str(printed[i, j])}
                     for i, j, v in m.entries() if v != printed[i, j]]
    matching = [c for c in CONVENTIONS if not out[c]]
    return {"matching": matching, "deltas": out}


def substitute(x, images):
    """Replace each symbol ``f_A`` in the entries of ``x`` by ``images[A-1]``."""
    def sub(v):
        v = LinearForm.coerce(v)
        acc = DualTheta(v.const, 0)
        for c, img in zip(v.f, images):
            if not c.is_zero():
                acc = acc + DualTheta.coerce(img) * c
        return acc
    return x.map(sub)


def printed_delta_consistency():
    """Apply the printed R12 component maps to the printed X and diff the
    resulting change against the printed change matrix."""
    images = [fixture_image((1, 2), a) for a in range(1, 8)]
    x = x_fixture()
    implied = substitute(x, images) - x
    printed = dx_r12_fixture()
    return [{"row": i + 1, "col": j + 1, "implied": str(v), "printed": str(printed[i, j])}
            for i, j, v in implied.entries() if v != printed[i, j]]


def x_fixture_vs_assembled(basis=None):
    x = assemble_X(symbols(), basis)
    fx = x_fixture()
    return [{"row": i + 1, "col": j + 1, "assembled": str(v), "printed": str(fx[i, j])}
            for i, j, v in x.entries() if v != fx[i, j]]


__all__ = [
    "CONVENTIONS", "PAIRS", "parse_linear", "x_fixture", "b_fixture", "r12_fixture",
    "dx_r12_fixture", "table2_fixture", "fixture_image", "assemble_X", "BlockForm",
    "block_decompose", "hermitian_violations", "RotationOperator", "rotation_generator",
    "rotation_operator", "project_components", "RotationOutcome", "rotate", "trace_square",
    "sum_of_squares", "PairInvariants", "pair_invariants", "TransformRow", "transform_row",
    "transform_table", "fixture_rows", "compare_table2", "Table2DiffReport",
    "r12_convention_report", "substitute", "printed_delta_consistency",
    "x_fixture_vs_assembled",
]

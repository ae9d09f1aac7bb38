"""Pauli and Dirac matrices, the seven Kronecker-product generators, their
brackets, and reports comparing generator sets against each other.

Generator sets come from four sources and are never merged:

``kronecker``       the gamma (x) Pauli formulas evaluated literally,
``fixture``         matrices transcribed verbatim from printed unit-matrix lists,
``split_octonion``  left-multiplication matrices rebuilt from the product table,
``corrected``       the Kronecker formulas times a documented scalar prefactor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .matrix import (
    ExactMatrix,
    anticommutator,
    commutator,
    from_terms,
    identity,
    identity_multiple,
    kron,
    matrix_rank,
    parse_unit_terms,
    scalar_multiple_of,
    zero,
)
from .scalars import GR, I, ONE, ZERO

SOURCES = ("kronecker", "fixture", "split_octonion", "corrected")


def pauli(k):
    if k == 0:
        return ExactMatrix([[1, 0], [0, 1]])
    if k == 1:
        return ExactMatrix([[0, 1], [1, 0]])
    if k == 2:
        return ExactMatrix([[0, -I], [I, 0]])
    if k == 3:
        return ExactMatrix([[1, 0], [0, -1]])
    raise IndexError(f"Pauli index {k} outside 0..3")


def _block2(a, b, c, d):
    rows = [list(a.rows[r]) + list(b.rows[r]) for r in range(2)]
    rows += [list(c.rows[r]) + list(d.rows[r]) for r in range(2)]
    return ExactMatrix(rows)


GAMMA4_PRINTED = ExactMatrix([
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
])


def gamma(mu):
    """Dirac matrices in the block form ``[[s0, 0], [0, -s0]]``,
    ``[[0, sj], [-sj, 0]]``; ``gamma(4)`` is ``i g0 g1 g2 g3`` by multiplication.
    """
    z = zero(2)
    if mu == 0:
        s0 = pauli(0)
        return _block2(s0, z, z, -s0)
    if mu in (1, 2, 3):
        s = pauli(mu)
        return _block2(z, s, -s, z)
    if mu == 4:
        return (gamma(0) @ gamma(1) @ gamma(2) @ gamma(3)).scale(I)
    raise IndexError(f"gamma index {mu} outside 0..4")


# (prefactor, left factor, right factor) for each generator; factors are
# ("g", mu) for a gamma matrix or ("s", k) for a Pauli matrix.
BETA_FORMULAS = {
    1: (-I, ("g", 4), ("s", 2)),
    2: (ONE, ("s", 1), ("g", 3)),
    3: (ONE, ("s", 1), ("g", 1)),
    4: (ONE, ("g", 4), ("s", 0)),
    5: (-I, ("g", 3), ("s", 2)),
    6: (-I, ("g", 2), ("s", 0)),
    7: (-I, ("g", 1), ("s", 2)),
}


def _factor(spec):
    kind, idx = spec
    return gamma(idx) if kind == "g" else pauli(idx)


def beta_kron(a):
    if a not in BETA_FORMULAS:
        raise IndexError(f"generator index {a} outside 1..7")
    c, left, right = BETA_FORMULAS[a]
    return kron(_factor(left), _factor(right)).scale(c)


# Printed unit-matrix expansions, verbatim (including the suspected index
# typos such as the trailing b72 in generator 2).
BETA_PRINTED = {
    1: "b16 - b25 + b38 - b47 + b52 - b61 + b74 - b83",
    2: "b17 - b28 - b35 + b46 + b53 - b64 - b71 + b72",
    3: "b18 + b27 - b36 - b45 + b54 + b63 - b72 - b81",
    4: "b11 + b22 + b33 + b44 - b55 - b66 - b77 - b88",
    5: "b16 - b25 - b37 + b46 + b52 - b61 - b74 + b83",
    6: "-b17 - b28 + b35 + b46 + b53 + b64 - b71 - b82",
    7: "b18 - b27 + b36 - b45 - b54 + b63 - b72 + b81",
}


def beta_fixture(a):
    if a not in BETA_PRINTED:
        raise IndexError(f"generator index {a} outside 1..7")
    return from_terms(parse_unit_terms(BETA_PRINTED[a]))


@dataclass(frozen=True)
class GeneratorSet:
    label: str
    mats: tuple
    source: str
    notes: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        mats = tuple(self.mats)
        object.__setattr__(self, "mats", mats)
        if len(mats) != 7:
            raise ValueError(f"a generator set has exactly 7 matrices, got {len(mats)}")
        if any(m.n != 8 for m in mats):
            raise ValueError("generators must be 8x8")
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")

    def __getitem__(self, a):
        """One-based access, ``g[1]`` .. ``g[7]``."""
        if not 1 <= a <= 7:
            raise IndexError(f"generator index {a} outside 1..7")
        return self.mats[a - 1]

    def __len__(self):
        return 7

    def __iter__(self):
        return iter(self.mats)


def kronecker_set():
    return GeneratorSet("beta (Kronecker)", [beta_kron(a) for a in range(1, 8)], "kronecker")


def fixture_set():
    return GeneratorSet("beta (printed expansion)", [beta_fixture(a) for a in range(1, 8)],
                        "fixture", {"fixture": "printed:beta_expansion"})


HALF_OVER_I = GR(0, -1) / 2  # 1/(2i) = -i/2


def bracket_generators(g):
    """The 21 matrices ``(1/2i)[G_a, G_b]`` for ``a < b`` in lexicographic order."""
    return [commutator(g[a], g[b]).scale(HALF_OVER_I)
            for a, b in combinations(range(1, 8), 2)]


def bracket_pairs():
    return list(combinations(range(1, 8), 2))


@dataclass(frozen=True)
class SignatureReport:
    eta: tuple  # 7x7, entries GaussianRational or None where non-scalar
    is_diagonal: bool
    diagonal_signs: tuple
    mismatches_vs_delta: tuple  # one-based (a, b) pairs where eta != delta
    non_scalar: tuple

    def to_json(self):
        def enc(v):
            return None if v is None else v.to_json()
        return {
            "eta": [[enc(v) for v in row] for row in self.eta],
            "is_diagonal": self.is_diagonal,
            "diagonal_signs": [enc(v) for v in self.diagonal_signs],
            "mismatches_vs_delta": [list(p) for p in self.mismatches_vs_delta],
            "non_scalar": [list(p) for p in self.non_scalar],
        }


def signature_check(g):
    """Classify every anticommutator ``{G_a, G_b}`` as ``2 eta_ab * 1`` or non-scalar."""
    eta = [[None] * 7 for _ in range(7)]
    non_scalar = []
    for a in range(1, 8):
        for b in range(a, 8):
            c = identity_multiple(anticommutator(g[a], g[b]))
            if c is None:
                non_scalar.append((a, b))
                continue
            eta[a - 1][b - 1] = eta[b - 1][a - 1] = c / 2
    mismatches = []
    for a in range(1, 8):
        for b in range(a, 8):
            want = ONE if a == b else ZERO
            if eta[a - 1][b - 1] != want:
                mismatches.append((a, b))
    diagonal = not non_scalar and all(
        eta[a][b] == 0 for a in range(7) for b in range(7) if a != b)
    return SignatureReport(
        eta=tuple(tuple(r) for r in eta),
        is_diagonal=diagonal,
        diagonal_signs=tuple(eta[a][a] for a in range(7)),
        mismatches_vs_delta=tuple(mismatches),
        non_scalar=tuple(non_scalar),
    )


def is_unit_signature(report):
    return report.is_diagonal and all(s in (ONE, -ONE) for s in report.diagonal_signs)


def generator_rank(g):
    """Rank of the 7 generators together with their 21 brackets."""
    return matrix_rank(list(g.mats) + bracket_generators(g))


@dataclass(frozen=True)
class CellDiff:
    row: int
    col: int
    left: object
    right: object

    def to_json(self):
        return {"row": self.row, "col": self.col,
                "left": self.left.to_json(), "right": self.right.to_json()}


@dataclass(frozen=True)
class DiffReport:
    generator: int
    cells: tuple

    @property
    def match(self):
        return not self.cells

    def to_json(self):
        return {"generator": self.generator, "match": self.match,
                "cells": [c.to_json() for c in self.cells]}


def diff_matrices(x, y, generator=0):
    cells = tuple(CellDiff(i + 1, j + 1, v, y[i, j])
                  for i, j, v in x.entries() if v != y[i, j])
    return DiffReport(generator, cells)


def compare_constructions(x, y):
    """Per-generator entry diffs, one :class:`DiffReport` for each of 1..7."""
    if len(x) != 7 or len(y) != 7:
        raise ValueError("both sets must hold 7 generators")
    return [diff_matrices(x[a], y[a], a) for a in range(1, 8)]


def comparison_summary(x, y):
    reports = compare_constructions(x, y)
    return {
        "left": x.label,
        "right": y.label,
        "holds": [r.generator for r in reports if r.match],
        "fails": [r.generator for r in reports if not r.match],
        "diffs": [r.to_json() for r in reports],
    }


# Scalar c with c * beta_kron(a) == split-octonion U_a, or None when no scalar
# suffices. Checked against scalar_multiple_of in the test suite.
CORRECTION_FACTORS = {1: -ONE, 2: ONE, 3: ONE, 4: None, 5: ONE, 6: ONE, 7: ONE}


def correction_factors(target=None):
    """Compute the per-generator scalar relating the Kronecker set to ``target``."""
    if target is None:
        from .split_octonion import split_generator_set
        target = split_generator_set()
    return {a: scalar_multiple_of(target[a], beta_kron(a)) for a in range(1, 8)}


def corrected_set():
    """Kronecker generators rescaled by :data:`CORRECTION_FACTORS`.

    Generators whose factor is ``None`` keep the literal Kronecker matrix and
    are listed under ``notes["uncorrectable_by_scalar"]``.
    """
    mats, flagged = [], []
    for a in range(1, 8):
        c = CORRECTION_FACTORS[a]
        if c is None:
            flagged.append(a)
            mats.append(beta_kron(a))
        else:
            mats.append(beta_kron(a).scale(c))
    return GeneratorSet("beta (corrected Kronecker)", mats, "corrected",
                        {"factors": dict(CORRECTION_FACTORS),
                         "uncorrectable_by_scalar": flagged})


def pauli_product_table():
    """Check ``s_a s_b = delta_ab s0 + i eps_abc s_c`` for all a, b in 1..3.

    Returns the list of failing ``(a, b)`` pairs.
    """
    from .split_octonion import levi_civita

    bad = []
    for a in range(1, 4):
        for b in range(1, 4):
            want = identity(2) if a == b else zero(2)
            for c in range(1, 4):
                e = levi_civita(a, b, c)
                if e:
                    want = want + pauli(c).scale(I * e)
            if pauli(a) @ pauli(b) != want:
                bad.append((a, b))
    return bad

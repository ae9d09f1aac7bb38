"""Verification suites shared by the CLI and the test suite.

Every check has one of two categories:

``internal``       a mathematically forced identity; a failure is a bug.
``printed-fixture``  a comparison against a printed object; failures are
                   findings and never affect the exit status.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import clifford as cl
from . import so7
from . import split_octonion as so
from .scalars import GR

INTERNAL = "internal"
FIXTURE = "printed-fixture"

SUITES = ("table1", "eq8", "bridge", "clifford", "eq16", "rotation")


@dataclass(frozen=True)
class Check:
    name: str
    category: str
    passed: bool
    label: str = ""
    detail: object = None

    def to_json(self):
        out = {"name": self.name, "category": self.category, "passed": self.passed}
        if self.label:
            out["label"] = self.label
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationSummary:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, name, category, passed, label="", detail=None):
        self.checks.append(Check(name, category, bool(passed), label, detail))

    @property
    def run(self):
        return len(self.checks)

    @property
    def passed(self):
        return sum(c.passed for c in self.checks)

    @property
    def discrepancies(self):
        return [c for c in self.checks if not c.passed]

    @property
    def internal_ok(self):
        return all(c.passed for c in self.checks if c.category == INTERNAL)

    def labels(self):
        return sorted({c.label for c in self.checks if c.label})

    def to_json(self):
        return {
            "suite": self.suite,
            "checks_run": self.run,
            "checks_passed": self.passed,
            "internal_ok": self.internal_ok,
            "discrepancies": [c.to_json() for c in self.discrepancies],
            "checks": [c.to_json() for c in self.checks],
        }


def random_split_octonion(rng, bound=5):
    def q():
        return GR(rng.randint(-bound, bound), rng.randint(-bound, bound)) / rng.randint(1, 4)
    return so.SplitOctonion([q() for _ in range(8)])


# ---- suites --------------------------------------------------------------


def suite_table1(s):
    label = so7.FIXTURE_LABELS["mult_table"]
    for rlabel, row in zip(so.TABLE_ORDER, so.TABLE_PRINTED):
        for clabel, cell in zip(so.TABLE_ORDER, row):
            got = so.format_signed(so.mul_basis(so.SplitBasis.parse(rlabel),
                                                so.SplitBasis.parse(clabel)))
            s.add(f"{rlabel}.{clabel}", INTERNAL, got == cell, label,
                  None if got == cell else {"printed": cell, "computed": got})


def suite_eq8(s):
    for c in so.validate_table().checks:
        s.add(f"{c.rule} [{c.product}]", INTERNAL, c.ok)


def suite_bridge(s, n_random=100, seed=0):
    for b in so.SplitBasis:
        z = so.SplitOctonion.basis(b)
        s.add(f"u->e->u {b.label}", INTERNAL, so.from_e_basis(so.to_e_basis(z)) == z)
    for a in range(8):
        e = so.e_vector(a)
        s.add(f"e->u->e e{a}", INTERNAL, so.to_e_basis(so.from_e_basis(e)) == e)
    props = so.e_table_properties()
    s.add("e0 two-sided identity", INTERNAL, not props["neutral"])
    s.add("e_a^2 = -e0", INTERNAL, not props["squares"])
    s.add("e_a e_b = -e_b e_a", INTERNAL, not props["anticommute"])
    w = so.associator_witnesses(limit=1)
    s.add("non-associative triple exists", INTERNAL, bool(w),
          detail=[b.label for b in w[0]] if w else None)
    rng = random.Random(seed)
    zs = [random_split_octonion(rng) for _ in range(n_random)]
    for k in so.SplitBasis:
        ok = all(so.left_mul_faithful(z, k) for z in zs)
        s.add(f"left multiplication faithful {k.label}", INTERNAL, ok)
    label = so7.FIXTURE_LABELS["left_mul"]
    for k in so.SplitBasis:
        cells = so.left_mul_diff(k)
        s.add(f"left multiplication {k.label} vs printed", FIXTURE, not cells,
              f"{label}/L({k.label})", cells or None)


def suite_clifford(s):
    s.add("gamma4 = i g0 g1 g2 g3 matches printed", FIXTURE,
          cl.gamma(4) == cl.GAMMA4_PRINTED, "printed:gamma4")
    s.add("Pauli product rule", INTERNAL, not cl.pauli_product_table())
    g = so.split_generator_set()
    sig = cl.signature_check(g)
    s.add("U anticommutators scalar and diagonal", INTERNAL, sig.is_diagonal)
    s.add("U squares are +/- identity", INTERNAL, cl.is_unit_signature(sig),
          detail=[str(x) for x in sig.diagonal_signs])
    s.add("U signature equals delta", FIXTURE, not sig.mismatches_vs_delta,
          "claim:anticommutation_delta",
          [list(p) for p in sig.mismatches_vs_delta] or None)
    br = cl.bracket_generators(g)
    s.add("21 brackets computed", INTERNAL, len(br) == 21)
    s.add("brackets traceless", INTERNAL, all(b.trace() == 0 for b in br))
    r = cl.generator_rank(g)
    s.add("7 + 21 generators independent", INTERNAL, r == 28, detail={"rank": r})
    label = so7.FIXTURE_LABELS["u_blocks"]
    for A in range(0, 8):
        d = cl.diff_matrices(so.u_matrix(A), so.u_fixture(A), A)
        s.add(f"U{A} derived vs printed", FIXTURE, d.match, f"{label}/U{A}",
              d.to_json()["cells"] or None)
    fx = cl.fixture_set()
    fx_sig = cl.signature_check(fx)
    s.add("printed beta expansions anticommute", FIXTURE, fx_sig.is_diagonal,
          so7.FIXTURE_LABELS["beta_expansion"],
          [list(p) for p in fx_sig.non_scalar] or None)


def generator_sets():
    return {
        "kronecker": cl.kronecker_set(),
        "fixture": cl.fixture_set(),
        "split": so.split_generator_set(),
        "corrected": cl.corrected_set(),
    }


def suite_eq16(s):
    sets = generator_sets()
    for x, y in combinations(sorted(sets), 2):
        for rep in cl.compare_constructions(sets[x], sets[y]):
            s.add(f"{x} vs {y} generator {rep.generator}", FIXTURE, rep.match,
                  "claim:beta_equals_U",
                  {"cells": len(rep.cells)} if rep.cells else None)
    computed = cl.correction_factors()
    s.add("documented correction factors match computed", INTERNAL,
          computed == cl.CORRECTION_FACTORS)
    corr, split = sets["corrected"], sets["split"]
    for a in range(1, 8):
        if cl.CORRECTION_FACTORS[a] is None:
            s.add(f"corrected generator {a} uncorrectable by scalar", FIXTURE, False,
                  "claim:beta_equals_U")
        else:
            s.add(f"corrected generator {a} equals split", INTERNAL, corr[a] == split[a])


def suite_rotation(s, convention="A", basis=None):
    basis = basis or so.split_generator_set()
    for k, l in so7.PAIRS:
        inv = so7.pair_invariants(k, l, convention, basis)
        tag = f"R{k}{l}/{convention}"
        s.add(f"{tag} truncated inverse", INTERNAL, inv.inverse_holds)
        s.add(f"{tag} first order exact", INTERNAL, inv.first_order_exact)
        s.add(f"{tag} trace zero", INTERNAL, inv.trace_zero)
        s.add(f"{tag} trace of square preserved", INTERNAL, inv.trace_square_preserved)
        s.add(f"{tag} projection residual zero", INTERNAL, inv.residual_zero)
        s.add(f"{tag} signature norm preserved", INTERNAL, inv.signature_norm_first_order_zero)
        s.add(f"{tag} euclidean norm preserved", FIXTURE, inv.norm_first_order_zero,
              "claim:euclidean_norm")
    rep = so7.r12_convention_report(basis)
    s.add("printed R12 reproduced by some convention", FIXTURE, bool(rep["matching"]),
          so7.FIXTURE_LABELS["r12"], rep)
    diff = so7.compare_table2(so7.transform_table(convention, basis), so7.fixture_rows())
    s.add("component table matches printed", FIXTURE, diff.counts()["mismatch"] == 0,
          so7.FIXTURE_LABELS["component_table"], diff.counts())
    x = so7.x_fixture()
    herm = so7.hermitian_violations(x)
    s.add("printed X hermitian", FIXTURE, not herm, so7.FIXTURE_LABELS["x_matrix"],
          [list(c) for c in herm] or None)
    s.add("printed X traceless", FIXTURE, x.trace() == 0, so7.FIXTURE_LABELS["x_matrix"])
    mism = so7.x_fixture_vs_assembled(basis)
    s.add("printed X equals sum f_A U_A", FIXTURE, not mism, so7.FIXTURE_LABELS["x_matrix"],
          {"cells": len(mism)} if mism else None)
    blocks = so7.block_decompose(x)
    s.add("printed B block sits in printed X", FIXTURE, blocks.B == so7.b_fixture(),
          so7.FIXTURE_LABELS["b_block"])
    s.add("printed X block structure consistent", FIXTURE, blocks.consistent,
          so7.FIXTURE_LABELS["x_matrix"])
    dx = so7.printed_delta_consistency()
    s.add("printed dX consistent with printed R12 maps", FIXTURE, not dx,
          so7.FIXTURE_LABELS["dx_r12"], {"cells": len(dx)} if dx else None)


RUNNERS = {
    "table1": suite_table1,
    "eq8": suite_eq8,
    "bridge": suite_bridge,
    "clifford": suite_clifford,
    "eq16": suite_eq16,
    "rotation": suite_rotation,
}


def run_suite(name, convention="A", basis=None):
    """Run one suite (or ``"all"``) and return a :class:`VerificationSummary`."""
    names = SUITES if name == "all" else (name,)
    if any(n not in RUNNERS for n in names):
        raise ValueError(f"unknown suite {name!r}")
    s = VerificationSummary(name)
    for n in names:
        if n == "rotation":
            suite_rotation(s, convention, basis)
        else:
            RUNNERS[n](s)
    return s


"""Acceptance criteria, one test per criterion.

Each criterion returns ``(ok, detail)``; the pytest hook in ``conftest.py``
prints one PASS/FAIL line per criterion at the end of the run, and running
this file directly prints the same lines.
"""

import json
import random
import re
import sys
from pathlib import Path

import pytest

from octoclif import clifford as cl
from octoclif import so7
from octoclif import split_octonion as so
from octoclif.checks import random_split_octonion, run_suite
from octoclif.scalars import ONE
from octoclif.split_octonion import SplitBasis, SplitOctonion, mul

SOURCE_TEXT = Path(__file__).resolve().parents[1] / "paper.md"

RESULTS = {}


def _tex_cell(cell):
    """``$-u_0^*$`` -> ``-u0*``; ``$-f_1 + if_2$`` -> ``-f1 + if2``."""
    c = cell.strip().strip("$").replace("^*", "*")
    return re.sub(r"([uf])_(\d)", r"\1\2", c).strip()


def _source_table(header_token):
    """The block of tab-separated rows starting at the header line that
    begins with ``header_token``, read straight from the source text."""
    if not SOURCE_TEXT.exists():
        return None
    lines = SOURCE_TEXT.read_text(encoding="utf-8").splitlines()
    start = next((i for i, ln in enumerate(lines) if ln.startswith(header_token)), None)
    if start is None:
        return None
    rows = []
    for ln in lines[start:]:
        if "\t" not in ln:
            break
        rows.append(ln.split("\t"))
    return rows


# ---- criteria ------------------------------------------------------------


def criterion_1():
    rows = _source_table(".\t")
    source = "source text" if rows else "stored fixture"
    if rows:
        header = [_tex_cell(c) for c in rows[0][1:]]
        body = [[_tex_cell(c) for c in r] for r in rows[1:]]
    else:
        header = list(so.TABLE_ORDER)
        body = [[h] + list(r) for h, r in zip(so.TABLE_ORDER, so.TABLE_PRINTED)]
    bad = []
    for r in body:
        x = SplitBasis.parse(r[0])
        for col, cell in zip(header, r[1:]):
            got = so.format_signed(so.mul_basis(x, SplitBasis.parse(col)))
            if got != cell:
                bad.append((r[0], col, cell, got))
    cells = len(body) * len(header)
    return cells == 64 and not bad, f"{cells - len(bad)}/64 cells match ({source}); bad={bad}"


def criterion_2():
    rep = so.validate_table()
    return rep.passed, f"{len(rep.checks)} identity lines, {len(rep.violations)} violations"


def criterion_3():
    trips = all(so.from_e_basis(so.to_e_basis(SplitOctonion.basis(b))) == SplitOctonion.basis(b)
                for b in SplitBasis)
    trips = trips and all(so.to_e_basis(so.from_e_basis(so.e_vector(a))) == so.e_vector(a)
                          for a in range(8))
    props = so.e_table_properties()
    witness = so.associator_witnesses(limit=1)
    ok = trips and not any(props.values()) and bool(witness)
    w = [b.label for b in witness[0]] if witness else None
    return ok, f"round trips={trips}, table failures={props}, witness={w}"


def criterion_4():
    rng = random.Random(2024)
    zs = [random_split_octonion(rng) for _ in range(100)]
    bad = [(k.label, n) for k in SplitBasis for n, z in enumerate(zs)
           if so.apply_left(so.left_mul_matrix(k), z) != mul(SplitOctonion.basis(k), z)]
    return not bad, f"{800 - len(bad)}/800 actions exact"


def criterion_5():
    matched = [A for A in range(1, 8) if so.u_matrix(A) == so.u_fixture(A)]
    failed = [A for A in range(1, 8) if A not in matched]
    u0 = "matches printed identity" if so.u_matrix(0) == so.u_fixture(0) else "differs"
    cells = {A: len(cl.diff_matrices(so.u_matrix(A), so.u_fixture(A)).cells) for A in failed}
    return not failed, (f"{len(matched)}/7 printed block matrices reproduced; "
                        f"mismatched U{failed} cells={cells}; U0 {u0}")


def criterion_6():
    rep = cl.signature_check(so.split_generator_set())
    off = all(rep.eta[a][b] == 0 for a in range(7) for b in range(7) if a != b)
    squares = all(s in (ONE, -ONE) for s in rep.diagonal_signs)
    eta = [str(s) for s in rep.diagonal_signs]
    return (rep.is_diagonal and off and squares,
            f"eta diag={eta}; mismatches vs delta={list(rep.mismatches_vs_delta)} (reported)")


def criterion_7():
    g = so.split_generator_set()
    br = cl.bracket_generators(g)
    traceless = all(b.trace() == 0 for b in br)
    r = cl.generator_rank(g)
    return len(br) == 21 and traceless and r == 28, f"{len(br)} brackets, traceless={traceless}, rank={r}"


def criterion_8():
    invs = [so7.pair_invariants(k, l, "A") for k, l in so7.PAIRS]
    fields = ("inverse_holds", "trace_zero", "trace_square_preserved", "residual_zero",
              "norm_first_order_zero")
    failing = {f: [i.pair for i in invs if not getattr(i, f)] for f in fields}
    failing = {f: v for f, v in failing.items() if v}
    weighted = all(i.signature_norm_first_order_zero for i in invs)
    return not failing, (f"failing clauses={failing}; "
                         f"signature-weighted norm preserved on all pairs={weighted}")


def criterion_9():
    first = so7.r12_convention_report()
    second = so7.r12_convention_report()
    stable = json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
    others = [c for c in so7.CONVENTIONS if c not in first["matching"]]
    deltas = {c: len(first["deltas"][c]) for c in others}
    ok = stable and bool(first["matching"]) and all(deltas.values())
    return ok, f"matching={first['matching']}, delta entries for others={deltas}, stable={stable}"


def criterion_10():
    rows = _source_table("\tf_1")
    fx = so7.table2_fixture()
    bad = []
    if rows:
        source = "source text"
        for r in rows[1:]:
            pair = (int(r[0][3]), int(r[0][4]))
            cells = {a: so7.parse_linear(_tex_cell(c))
                     for a, c in enumerate(r[1:8], start=1) if c.strip()}
            if fx.get(pair) != cells:
                bad.append(pair)
        n_rows = len(rows) - 1
    else:
        source = "stored fixture"
        n_rows = len(fx)
    fixture = so7.fixture_rows()
    d1 = so7.compare_table2(so7.transform_table("A"), fixture).to_json()
    d2 = so7.compare_table2(so7.transform_table("A"), so7.fixture_rows()).to_json()
    stable = json.dumps(d1) == json.dumps(d2)
    statuses = {c["status"] for r in d1["rows"] for c in r["cells"]}
    ok = n_rows == 21 and not bad and len(d1["rows"]) == 21 and stable
    ok = ok and statuses <= {"match", "mismatch", "blank_agree"}
    return ok, f"{n_rows} rows verbatim ({source}), bad={bad}; diff totals={d1['totals']}, stable={stable}"


def criterion_11():
    sets = {"kronecker": cl.kronecker_set(), "fixture": cl.fixture_set(),
            "split": so.split_generator_set(), "corrected": cl.corrected_set()}
    names = sorted(sets)
    ledger = {(x, y): cl.comparison_summary(sets[x], sets[y])
              for i, x in enumerate(names) for y in names[i + 1:]}
    complete = len(ledger) == 6 and all(len(v["diffs"]) == 7 for v in ledger.values())
    corr, split = sets["corrected"], sets["split"]
    scalar_ok = [a for a in range(1, 8) if cl.CORRECTION_FACTORS[a] is not None]
    exact = all(corr[a] == split[a] for a in scalar_ok)
    flagged = corr.notes.get("uncorrectable_by_scalar", [])
    consistent = flagged == [a for a in range(1, 8) if cl.CORRECTION_FACTORS[a] is None]
    computed = cl.correction_factors() == cl.CORRECTION_FACTORS
    ok = complete and exact and consistent and computed
    return ok, (f"{len(ledger)} pairwise reports; corrected == split on {scalar_ok}; "
                f"flagged uncorrectable={flagged}")


CRITERIA = {
    1: ("product table closure", criterion_1),
    2: ("algebra-rule validation", criterion_2),
    3: ("e-basis bridge", criterion_3),
    4: ("left-multiplication faithfulness", criterion_4),
    5: ("printed U_A reproduction", criterion_5),
    6: ("generalized Clifford check", criterion_6),
    7: ("generator completeness", criterion_7),
    8: ("rotation invariants (convention A)", criterion_8),
    9: ("convention diff for printed R12", criterion_9),
    10: ("component table report", criterion_10),
    11: ("cross-construction report", criterion_11),
}


def evaluate(n):
    name, fn = CRITERIA[n]
    ok, detail = fn()
    line = f"criterion {n:2d} [{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    RESULTS[n] = line
    print(line)
    return ok, detail


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = evaluate(n)
    assert ok, detail


# Clauses of criteria 5 and 8 that hold even though the criterion as a whole
# does not; kept separate so the honest failures above stay isolated.

def test_criterion_5_passing_generators():
    assert [A for A in range(8) if so.u_matrix(A) == so.u_fixture(A)] == [0, 1, 2, 3, 4, 6]
    # the mismatched printed blocks are also contradicted by the Kronecker formulas
    for A in (5, 7):
        assert cl.beta_kron(A) == so.u_matrix(A) != so.u_fixture(A)


def test_criterion_8_other_clauses():
    for k, l in so7.PAIRS:
        inv = so7.pair_invariants(k, l, "A")
        assert inv.inverse_holds and inv.trace_zero and inv.trace_square_preserved
        assert inv.residual_zero and inv.first_order_exact
        assert inv.signature_norm_first_order_zero


def test_internal_checks_all_pass():
    s = run_suite("all")
    assert s.internal_ok, [c.name for c in s.discrepancies if c.category == "internal"]


if __name__ == "__main__":
    failures = sum(not evaluate(n)[0] for n in sorted(CRITERIA))
    sys.exit(1 if failures else 0)

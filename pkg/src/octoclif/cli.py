"""Command-line front end.

Exit codes: 0 success, 1 internal-consistency failure or unwritable output,
2 usage error. Reports go to stdout unless ``--out`` (or ``OCTOCLIF_OUT``) is
given; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import __version__
from . import clifford as cl
from . import so7
from . import split_octonion as so
from .checks import SUITES, generator_sets, run_suite
from .matrix import to_csv_rows, to_latex, to_text
from .scalars import format_scalar

SCHEMA = "octoclif.report/1"
COMMANDS = ("generators", "tables", "verify", "rotate", "table2", "report")
FORMATS = ("text", "json", "csv", "latex")
BASIS_SOURCES = ("kronecker", "fixture", "split", "corrected")


@dataclass(frozen=True)
class RunConfig:
    command: str
    basis_source: str = "split"
    convention: str = "A"
    format: str = "text"
    output_path: str | None = None
    pair: tuple | None = None
    suite: str = "all"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if (self.pair is not None) != (self.command == "rotate"):
            raise ValueError("--pair is required for rotate and only for rotate")


class Document:
    """Format-neutral report: a JSON payload plus renderable sections."""

    def __init__(self, config, fixtures=()):
        self.config = config
        self.payload = {
            "schema": SCHEMA,
            "tool_version": __version__,
            "command": config.command,
            "basis_source": config.basis_source,
            "convention": config.convention,
            "fixtures": sorted(set(fixtures)),
        }
        self.sections = []

    def heading(self, title):
        self.sections.append(("heading", title))

    def grid(self, title, header, rows):
        self.sections.append(("grid", title, list(header), [list(r) for r in rows]))

    def matrix(self, name, m):
        self.sections.append(("matrix", name, m))

    def lines(self, *lines):
        self.sections.append(("lines", list(lines)))

    def render(self, fmt):
        return {"text": self._text, "json": self._json,
                "csv": self._csv, "latex": self._latex}[fmt]()

    def _preamble(self):
        p = self.payload
        return [f"octoclif {p['tool_version']} | {p['command']} | basis={p['basis_source']}"
                f" | convention={p['convention']}",
                "fixtures: " + (", ".join(p["fixtures"]) or "none")]

    def _json(self):
        return json.dumps(self.payload, indent=2, sort_keys=False) + "\n"

    def _text(self):
        out = self._preamble()
        for sec in self.sections:
            kind = sec[0]
            if kind == "heading":
                out += ["", f"== {sec[1]} =="]
            elif kind == "grid":
                _, title, header, rows = sec
                if title:
                    out.append(f"-- {title}")
                cells = [header] + rows
                widths = [max(len(str(r[c])) for r in cells) for c in range(len(header))]
                for r in cells:
                    out.append("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip())
            elif kind == "matrix":
                out += [f"{sec[1]} =", to_text(sec[2])]
            else:
                out += sec[1]
        return "\n".join(out) + "\n"

    def _csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for line in self._preamble():
            w.writerow([f"# {line}"])
        for sec in self.sections:
            kind = sec[0]
            if kind == "heading":
                w.writerow([f"# {sec[1]}"])
            elif kind == "grid":
                _, title, header, rows = sec
                if title:
                    w.writerow([f"# {title}"])
                w.writerow(header)
                w.writerows(rows)
            elif kind == "matrix":
                w.writerow([f"# {sec[1]}"])
                w.writerows(to_csv_rows(sec[2]))
            else:
                for line in sec[1]:
                    w.writerow([line])
        return buf.getvalue()

    def _latex(self):
        out = [f"% {line}" for line in self._preamble()]
        for sec in self.sections:
            kind = sec[0]
            if kind == "heading":
                out.append(f"% == {sec[1]} ==")
            elif kind == "grid":
                _, title, header, rows = sec
                if title:
                    out.append(f"% {title}")
                out.append("\\begin{tabular}{" + "l" * len(header) + "}")
                out.append(" & ".join(_tex(h) for h in header) + " \\\\ \\hline")
                out += [" & ".join(_tex(v) for v in r) + " \\\\" for r in rows]
                out.append("\\end{tabular}")
            elif kind == "matrix":
                out += [f"{_tex_name(sec[1])} = ", to_latex(sec[2])]
            else:
                out += [f"% {line}" for line in sec[1]]
        return "\n".join(out) + "\n"


def _tex(v):
    s = str(v)
    return s.replace("_", r"\_").replace("theta", r"\theta").replace("*", "^*")


def _tex_name(name):
    return name.replace("*", "^*")


# ---- commands ------------------------------------------------------------


def _basis(config):
    return generator_sets()[config.basis_source]


def _basis_fixtures(config):
    if config.basis_source == "fixture":
        return [so7.FIXTURE_LABELS["beta_expansion"]]
    return []


def cmd_generators(config):
    g = _basis(config)
    doc = Document(config, _basis_fixtures(config))
    doc.payload["label"] = g.label
    doc.payload["generators"] = [{"index": a, "matrix": g[a].to_json()} for a in range(1, 8)]
    if g.notes.get("uncorrectable_by_scalar"):
        doc.payload["uncorrectable_by_scalar"] = g.notes["uncorrectable_by_scalar"]
    doc.heading(g.label)
    name = "U" if config.basis_source == "split" else "beta"
    for a in range(1, 8):
        doc.matrix(f"{name}_{a}", g[a])
    return doc, 0


def cmd_tables(config):
    doc = Document(config, [so7.FIXTURE_LABELS["mult_table"]])
    header = ["."] + list(so.TABLE_ORDER)
    u_rows = []
    for r in so.TABLE_ORDER:
        u_rows.append([r] + [so.format_signed(so.mul_basis(so.SplitBasis.parse(r),
                                                           so.SplitBasis.parse(c)))
                             for c in so.TABLE_ORDER])
    e_table = so.derive_e_table()
    e_rows = [[f"e{a}"] + [so.format_e(e_table[a][b]) for b in range(8)] for a in range(8)]
    doc.payload["u_table"] = {"order": list(so.TABLE_ORDER), "cells": [r[1:] for r in u_rows]}
    doc.payload["e_table"] = [r[1:] for r in e_rows]
    doc.payload["left_multiplication"] = {
        k.label: so.left_mul_matrix(k).to_json() for k in so.SplitBasis}
    doc.heading("split basis product table (row * column)")
    doc.grid("", header, u_rows)
    doc.heading("derived e-basis product table")
    doc.grid("", ["."] + [f"e{b}" for b in range(8)], e_rows)
    doc.heading("left-multiplication matrices")
    for k in so.SplitBasis:
        doc.matrix(f"L({k.label})", so.left_mul_matrix(k))
    return doc, 0


def cmd_verify(config):
    s = run_suite(config.suite, config.convention, _basis(config))
    doc = Document(config, s.labels())
    doc.payload["verification"] = s.to_json()
    doc.heading(f"suite {config.suite}: {s.passed}/{s.run} checks passed")
    doc.grid("", ["check", "category", "result", "label"],
             [[c.name, c.category, "pass" if c.passed else "FAIL", c.label] for c in s.checks])
    if s.discrepancies:
        doc.heading("discrepancies")
        doc.lines(*(f"{c.label or c.category}: {c.name}"
                    + (f" {json.dumps(c.detail, sort_keys=True)}" if c.detail is not None else "")
                    for c in s.discrepancies))
    return doc, 0 if s.internal_ok else 1


def cmd_rotate(config):
    k, l = config.pair
    g = _basis(config)
    row = so7.transform_row(k, l, config.convention, g)
    doc = Document(config)
    doc.payload["rows"] = [row.to_json()]
    doc.heading(f"R{k}{l} convention {config.convention}")
    doc.grid("", ["component", "image"],
             [[f"f{a}", format_scalar(img)] for a, img in enumerate(row.images, start=1)])
    doc.lines(f"residual_zero: {str(row.residual_zero).lower()}")
    return doc, 0


def cmd_table2(config):
    g = _basis(config)
    derived = so7.transform_table(config.convention, g)
    diff = so7.compare_table2(derived, so7.fixture_rows())
    doc = Document(config, [so7.FIXTURE_LABELS["component_table"]])
    doc.payload["rows"] = [r.to_json() for r in derived]
    doc.payload["diff"] = diff.to_json()
    header = ["pair"] + [f"f{a}" for a in range(1, 8)]
    doc.heading(f"derived component maps (f_A -> f_A + 2 theta [cell]), convention {config.convention}")
    doc.grid("", header, [[f"R{r.pair[0]}{r.pair[1]}"]
                          + [str(r.cell(a)) if r.cell(a) is not None else "" for a in range(1, 8)]
                          for r in derived])
    doc.heading("printed component maps")
    doc.grid("", header, [[f"R{r.pair[0]}{r.pair[1]}"]
                          + [str(r.cell(a)) if r.cell(a) is not None else "" for a in range(1, 8)]
                          for r in so7.fixture_rows()])
    doc.heading("diff per row")
    doc.grid("", ["pair", "match", "mismatch", "blank_agree"],
             [[f"R{p[0]}{p[1]}"] + [diff.counts(p)[k] for k in ("match", "mismatch", "blank_agree")]
              for p in diff.rows()])
    t = diff.counts()
    doc.lines(f"totals: match={t['match']} mismatch={t['mismatch']} blank_agree={t['blank_agree']}")
    return doc, 0


def cmd_report(config):
    s = run_suite("all", config.convention, _basis(config))
    sets = generator_sets()
    doc = Document(config, s.labels() + [so7.FIXTURE_LABELS["component_table"]])
    sig = cl.signature_check(_basis(config))
    doc.payload["verification"] = s.to_json()
    doc.payload["signature"] = sig.to_json()
    doc.payload["constructions"] = [
        cl.comparison_summary(sets[x], sets[y])
        for x, y in (("kronecker", "split"), ("fixture", "split"),
                     ("kronecker", "fixture"), ("corrected", "split"))]
    doc.payload["printed_u_blocks"] = [
        cl.diff_matrices(so.u_matrix(A), so.u_fixture(A), A).to_json() for A in range(8)]
    doc.payload["left_multiplication"] = {k.label: so.left_mul_diff(k) for k in so.SplitBasis}
    doc.payload["r12"] = so7.r12_convention_report(_basis(config))
    diff = so7.compare_table2(so7.transform_table(config.convention, _basis(config)),
                              so7.fixture_rows())
    doc.payload["table2"] = diff.to_json()
    doc.heading(f"verification: {s.passed}/{s.run} checks passed, internal_ok={s.internal_ok}")
    doc.heading("signature eta (anticommutator / 2)")
    doc.grid("", [""] + [str(b) for b in range(1, 8)],
             [[str(a + 1)] + ["?" if v is None else str(v) for v in row]
              for a, row in enumerate(sig.eta)])
    doc.heading("construction comparisons")
    doc.grid("", ["left", "right", "holds", "fails"],
             [[c["left"], c["right"], " ".join(map(str, c["holds"])),
               " ".join(map(str, c["fails"]))] for c in doc.payload["constructions"]])
    doc.heading("printed R12")
    doc.lines("matching convention: " + (" ".join(doc.payload["r12"]["matching"]) or "none"))
    doc.heading("component table diff")
    t = diff.counts()
    doc.lines(f"totals: match={t['match']} mismatch={t['mismatch']} blank_agree={t['blank_agree']}")
    doc.heading("discrepancies")
    doc.lines(*(f"{c.label or c.category}: {c.name}" for c in s.discrepancies))
    return doc, 0 if s.internal_ok else 1


HANDLERS = {
    "generators": cmd_generators,
    "tables": cmd_tables,
    "verify": cmd_verify,
    "rotate": cmd_rotate,
    "table2": cmd_table2,
    "report": cmd_report,
}


def run(config):
    """Execute ``config``; returns ``(exit status, rendered document)``."""
    doc, status = HANDLERS[config.command](config)
    return status, doc.render(config.format)


def emit_report(summary, fmt, config=None):
    """Serialize a :class:`~octoclif.checks.VerificationSummary` on its own."""
    config = config or RunConfig("verify")
    doc = Document(config, summary.labels())
    doc.payload["verification"] = summary.to_json()
    doc.heading(f"suite {summary.suite}: {summary.passed}/{summary.run} checks passed")
    doc.grid("", ["check", "category", "result"],
             [[c.name, c.category, "pass" if c.passed else "FAIL"] for c in summary.checks])
    return doc.render(fmt)


# ---- argument parsing ----------------------------------------------------


def build_parser():
    env_format = os.environ.get("OCTOCLIF_FORMAT") or "text"
    env_out = os.environ.get("OCTOCLIF_OUT") or None

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--basis-source", choices=BASIS_SOURCES, default="split")
    common.add_argument("--convention", choices=("A", "B"), default="A")
    common.add_argument("--format", choices=FORMATS, default=env_format)
    common.add_argument("--out", metavar="PATH", default=env_out)

    p = argparse.ArgumentParser(prog="octoclif",
                                description="Exact split-octonion / SO(7) generator checks.")
    p.add_argument("--version", action="version", version=f"octoclif {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("generators", parents=[common], help="emit the seven generators")
    sub.add_parser("tables", parents=[common], help="product tables and left multiplication")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    r = sub.add_parser("rotate", parents=[common], help="one infinitesimal rotation")
    r.add_argument("--pair", nargs=2, type=int, metavar=("K", "L"), required=True)
    sub.add_parser("table2", parents=[common], help="component-map table and diff")
    sub.add_parser("report", parents=[common], help="full discrepancy report")
    return p


def parse_config(argv):
    p = build_parser()
    ns = p.parse_args(argv)
    if env_fmt := os.environ.get("OCTOCLIF_FORMAT"):
        if env_fmt not in FORMATS:
            p.error(f"OCTOCLIF_FORMAT must be one of {', '.join(FORMATS)}")
    pair = None
    if ns.command == "rotate":
        k, l = ns.pair
        if not (1 <= k <= 7 and 1 <= l <= 7) or k == l:
            p.error("--pair needs two distinct indices in 1..7")
        pair = (k, l)
    return RunConfig(
        command=ns.command,
        basis_source=ns.basis_source,
        convention=ns.convention,
        format=ns.format,
        output_path=ns.out,
        pair=pair,
        suite=getattr(ns, "suite", "all"),
    )


def main(argv=None):
    try:
        config = parse_config(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    status, text = run(config)
    if config.output_path:
        try:
            with open(config.output_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as e:
            print(f"octoclif: cannot write {config.output_path}: {e}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

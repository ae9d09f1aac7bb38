"""Dense exact square matrices over the rings in :mod:`octoclif.scalars`.

Entries are stored as a tuple of row tuples. Indexing through ``m[i, j]`` is
zero-based; constructors that mirror the printed unit-matrix notation
(:func:`unit_matrix`, :func:`from_terms`) take one-based indices.
"""

from __future__ import annotations

from .scalars import (
    GR,
    ONE,
    ZERO,
    format_scalar,
    promote,
    scalar_from_json,
    scalar_to_json,
)


class DimensionError(ValueError):
    pass


class ExactMatrix:
    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(promote(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("matrix must be square and non-empty")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        """Yield ``(i, j, value)`` with zero-based indices."""
        for i, r in enumerate(self.rows):
            for j, v in enumerate(r):
                yield i, j, v

    def _check(self, other):
        if not isinstance(other, ExactMatrix):
            raise TypeError(f"expected ExactMatrix, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check(other)
        return ExactMatrix([[a + b for a, b in zip(r, s)]
                            for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check(other)
        return ExactMatrix([[a - b for a, b in zip(r, s)]
                            for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c):
        c = promote(c)
        return ExactMatrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    def __rmul__(self, c):
        return self.scale(c)

    def __truediv__(self, c):
        return ExactMatrix([[a / c for a in r] for r in self.rows])

    def __matmul__(self, other):
        return mat_mul(self, other)

    def transpose(self):
        return ExactMatrix(list(zip(*self.rows)))

    def conj(self):
        return ExactMatrix([[a.conj() for a in r] for r in self.rows])

    def dagger(self):
        return self.transpose().conj()

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.n)), ZERO)

    def is_zero(self):
        return all(v.is_zero() for r in self.rows for v in r)

    def nonzero(self):
        """One-based ``(row, col, value)`` triples of the nonzero entries."""
        return [(i + 1, j + 1, v) for i, j, v in self.entries() if not v.is_zero()]

    def map(self, fn):
        return ExactMatrix([[fn(a) for a in r] for r in self.rows])

    def block(self, bi, bj, size):
        """The ``size x size`` sub-block at zero-based block position (bi, bj)."""
        return ExactMatrix([r[bj * size:(bj + 1) * size]
                            for r in self.rows[bi * size:(bi + 1) * size]])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix(n={self.n}, nonzero={len(self.nonzero())})"

    def __str__(self):
        return to_text(self)

    def to_json(self):
        return {"n": self.n,
                "entries": [[scalar_to_json(v) for v in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj):
        m = cls([[scalar_from_json(v) for v in r] for r in obj["entries"]])
        if m.n != obj["n"]:
            raise DimensionError("declared n does not match entries")
        return m


def zero(n):
    return ExactMatrix([[ZERO] * n for _ in range(n)])


def identity(n):
    return ExactMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


def unit_matrix(i, j, n=8):
    """Matrix with a single 1 at one-based position (i, j)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"unit matrix index ({i},{j}) outside 1..{n}")
    return ExactMatrix([[ONE if (r, c) == (i - 1, j - 1) else ZERO for c in range(n)]
                        for r in range(n)])


def from_terms(terms, n=8):
    """Build ``sum c * unit(i, j)`` from ``(c, i, j)`` triples (one-based).

    Repeated positions accumulate, matching the notation ``[a11 + a22 ...]``.
    """
    rows = [[ZERO] * n for _ in range(n)]
    for c, i, j in terms:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"index ({i},{j}) outside 1..{n}")
        rows[i - 1][j - 1] = rows[i - 1][j - 1] + promote(c)
    return ExactMatrix(rows)


def parse_unit_terms(text, n=8):
    """Parse a signed two-digit index list like ``"b16 - b25 + b38"``.

    The letter prefix is ignored; each term is a sign followed by a one-based
    row digit and column digit.
    """
    terms = []
    sign = 1
    for tok in text.replace("+", " + ").replace("-", " - ").split():
        if tok == "+":
            sign = 1
        elif tok == "-":
            sign = -1
        else:
            digits = tok.lstrip("abcdefghijklmnopqrstuvwxyz_")
            if len(digits) != 2 or not digits.isdigit():
                raise ValueError(f"cannot parse unit term {tok!r}")
            terms.append((sign, int(digits[0]), int(digits[1])))
            sign = 1
    return terms


def from_blocks(blocks):
    """Assemble a matrix from a square grid of equal-size blocks."""
    k = len(blocks)
    size = blocks[0][0].n
    rows = []
    for bi in range(k):
        for r in range(size):
            row = []
            for bj in range(k):
                b = blocks[bi][bj]
                if b.n != size:
                    raise DimensionError("blocks must share one size")
                row.extend(b.rows[r])
            rows.append(row)
    return ExactMatrix(rows)


def mat_mul(x, y):
    x._check(y)
    cols = list(zip(*y.rows))
    out = []
    for r in x.rows:
        row = []
        for c in cols:
            acc = ZERO
            for a, b in zip(r, c):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return ExactMatrix(out)


def kron(x, y):
    m, n = x.n, y.n
    rows = [[ZERO] * (m * n) for _ in range(m * n)]
    for i, j, a in x.entries():
        for k, l, b in y.entries():
            rows[i * n + k][j * n + l] = a * b
    return ExactMatrix(rows)


def commutator(x, y):
    return x @ y - y @ x


def anticommutator(x, y):
    return x @ y + y @ x


def dagger(x):
    return x.dagger()


def trace(x):
    return x.trace()


def hs_inner(x, y):
    """Hilbert-Schmidt inner product ``trace(dagger(x) @ y)``."""
    x._check(y)
    acc = ZERO
    for i, j, a in x.entries():
        b = y.rows[i][j]
        if not a.is_zero() and not b.is_zero():
            acc = acc + a.conj() * b
    return acc


def scalar_multiple_of(x, y):
    """Return ``c`` with ``x == c * y`` if such a scalar exists, else ``None``.

    Both matrices must have Gaussian-rational entries. ``y`` must be nonzero.
    """
    x._check(y)
    c = None
    for i, j, b in y.entries():
        a = x.rows[i][j]
        if b == 0:
            if a != 0:
                return None
            continue
        r = GR.coerce(a) / b
        if c is None:
            c = r
        elif r != c:
            return None
    return c


def identity_multiple(x):
    """Return ``c`` if ``x == c * identity``, else ``None``."""
    c = x.rows[0][0]
    for i, j, v in x.entries():
        if v != (c if i == j else 0):
            return None
    return c


def vectorize(x):
    return [v for r in x.rows for v in r]


def rank(rows):
    """Exact rank of a list of Gaussian-rational row vectors.

    Rows are first scaled to Gaussian-integer entries; elimination then uses
    the Bareiss fraction-free update, whose divisions are exact in Z[i].
    """
    work = [_clear_denominators([GR.coerce(v) for v in r]) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    prev = ONE
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(work)) if work[k][col] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][col]
        for k in range(r + 1, len(work)):
            a = work[k][col]
            work[k] = [_exact_div(p * work[k][c] - a * work[r][c], prev)
                       if c > col else ZERO for c in range(ncols)]
        prev = p
        r += 1
        if r == len(work):
            break
    return r


def _clear_denominators(vec):
    from math import lcm

    d = 1
    for v in vec:
        d = lcm(d, v.re.denominator, v.im.denominator)
    return [v * d for v in vec]


def _exact_div(a, b):
    q = a / b
    if q.re.denominator != 1 or q.im.denominator != 1:
        raise ArithmeticError("fraction-free elimination produced a non-integral quotient")
    return q


def matrix_rank(mats):
    """Rank of a family of matrices viewed as vectors."""
    return rank([vectorize(m) for m in mats])


# ---- renderers -----------------------------------------------------------


def to_text(x, fmt=format_scalar):
    cells = [[fmt(v) for v in r] for r in x.rows]
    width = max(len(c) for r in cells for c in r)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def _latex_scalar(v):
    s = format_scalar(v)
    return s.replace("theta", r"\theta").replace("*", " ")


def to_latex(x, fmt=_latex_scalar):
    body = " \\\\\n".join(" & ".join(fmt(v) for v in r) for r in x.rows)
    return "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}"


def to_csv_rows(x, fmt=format_scalar):
    return [[fmt(v) for v in r] for r in x.rows]


__all__ = [
    "DimensionError", "ExactMatrix", "zero", "identity", "unit_matrix", "from_terms",
    "parse_unit_terms", "from_blocks", "mat_mul", "kron", "commutator", "anticommutator",
    "dagger", "trace", "hs_inner", "scalar_multiple_of", "identity_multiple", "vectorize",
    "rank", "matrix_rank", "to_text", "to_latex", "to_csv_rows",
]

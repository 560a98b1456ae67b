"""Small exact dense linear algebra over the rationals.

Matrices hold int or Fraction entries; nothing is ever rounded.  The sizes in
this package are modest (at most a few hundred rows), so plain Gaussian
elimination with exact arithmetic is all that is needed.  Multiplication skips
zero entries of the left factor, which makes products with sparse operators
(adjacency maps, idempotent numerators) cheap.
"""

from fractions import Fraction


class Mat:
    """Dense matrix with exact entries.  Treated as immutable by convention."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values):
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        raise TypeError("Mat is unhashable")

    def __add__(self, other):
        return Mat([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Mat([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat([[-a for a in r] for r in self.rows])

    def scale(self, c):
        return Mat([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        n = other.ncols
        brows = other.rows
        out = []
        for arow in self.rows:
            acc = [0] * n
            for k, a in enumerate(arow):
                if a:
                    brow = brows[k]
                    acc = [x + a * y for x, y in zip(acc, brow)]
            out.append(acc)
        return Mat(out)

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        return [sum(a * v for a, v in zip(row, vec) if a) for row in self.rows]

    def transpose(self):
        return Mat([list(col) for col in zip(*self.rows)])

    def trace(self):
        return sum(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def is_zero(self):
        return all(not a for r in self.rows for a in r)

    def flatten(self):
        return [a for r in self.rows for a in r]

    def rank(self):
        return rank(self.rows)

    def __repr__(self):
        return f"Mat({self.rows!r})"


def _rank_bareiss(rows):
    """Fraction-free elimination for integer matrices; divisions are exact."""
    work = [list(r) for r in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    r = 0
    prev = 1
    for c in range(n):
        piv = None
        for i in range(r, m):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        p = prow[c]
        for i in range(r + 1, m):
            row = work[i]
            f = row[c]
            work[i] = [(p * a - f * b) // prev for a, b in zip(row, prow)]
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank(rows):
    """Rank of a list-of-lists matrix by exact elimination.

    Integer input uses fraction-free elimination; anything else falls back to
    plain Gaussian elimination over Fraction.
    """
    if rows and all(isinstance(a, int) for r in rows for a in r):
        return _rank_bareiss(rows)
    work = [[Fraction(a) for a in r] for r in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        inv = 1 / prow[c]
        work[r] = prow = [a * inv for a in prow]
        for i in range(r + 1, m):
            f = work[i][c]
            if f:
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        r += 1
        if r == m:
            break
    return r


def kernel_dim(rows):
    ncols = len(rows[0]) if rows else 0
    return ncols - rank(rows)


def independent_rows(rows):
    """Indices of a maximal linearly independent subset, greedily from the front."""
    if not rows:
        return []
    n = len(rows[0])
    echelon = []  # (pivot column, normalized row)
    keep = []
    for idx, raw in enumerate(rows):
        row = [Fraction(a) for a in raw]
        for col, erow in echelon:
            f = row[col]
            if f:
                row = [a - f * b for a, b in zip(row, erow)]
        piv = next((c for c in range(n) if row[c]), None)
        if piv is None:
            continue
        inv = 1 / row[piv]
        echelon.append((piv, [a * inv for a in row]))
        keep.append(idx)
    return keep


def spans_match(rows_a, rows_b):
    """True when the row spans of the two lists coincide (exact, both inclusions)."""
    ra = rank(rows_a)
    rb = rank(rows_b)
    if ra != rb:
        return False
    return rank(rows_a + rows_b) == ra

"""Exact dense linear algebra over any field with Python arithmetic.

Works for ``Fraction``, ``Cyc`` and the rational function field in
``poly``; zero testing is truthiness.  Matrices are lists of lists,
vectors are lists.
"""

from __future__ import annotations


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = None
            for t in range(k):
                if ai[t]:
                    term = ai[t] * b[t][j]
                    acc = term if acc is None else acc + term
            if acc is None:
                acc = ai[0] * 0
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    return [r[0] for r in mat_mul(a, [[x] for x in v])]


def identity(n, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_eq(a, b) -> bool:
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        return False
    return all(not (x - y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def rref(matrix):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix) -> int:
    return len(rref(matrix)[0])


def nullspace(matrix, one, zero):
    """Basis of the right kernel (column vectors as lists)."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def solve(matrix, rhs):
    """One solution of matrix @ x = rhs, or None if inconsistent."""
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    ncols = len(matrix[0])
    for row in rows:
        if not any(row[:ncols]) and row[ncols]:
            return None
    zero = rhs[0] - rhs[0] if rhs else None
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        if pc < ncols:
            x[pc] = rows[r][ncols]
    return x


def det(matrix):
    n = len(matrix)
    rows = [list(r) for r in matrix]
    sign = 1
    result = None
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return matrix[0][0] * 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / rows[c][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    result = rows[0][0]
    for i in range(1, n):
        result = result * rows[i][i]
    return result if sign > 0 else -result


def inverse(matrix):
    n = len(matrix)
    one = None
    for row in matrix:
        for x in row:
            if x:
                one = x / x
                break
        if one is not None:
            break
    if one is None:
        raise ZeroDivisionError("singular matrix")
    zero = one - one
    aug = [list(matrix[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rows[:n]]


class SparseSpan:
    """Incremental row space over a field, rows as {column_key: scalar} dicts.

    Rows are reduced against the stored echelon basis on insertion; pivots
    are chosen as the minimum column key of the reduced row.
    """

    def __init__(self):
        self.pivots: dict = {}

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        touched = True
        while touched:
            touched = False
            for col in sorted(row):
                piv = self.pivots.get(col)
                if piv is not None:
                    c = row[col]
                    for k, v in piv.items():
                        nv = row.get(k)
                        nv = -c * v if nv is None else nv - c * v
                        if nv:
                            row[k] = nv
                        elif k in row:
                            del row[k]
                    touched = True
                    break
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        row = self.reduce(row)
        if not row:
            return False
        col = min(row)
        inv = 1 / row[col] if not hasattr(row[col], "inverse") else row[col].inverse()
        row = {k: v * inv for k, v in row.items()}
        # back-substitute into existing pivots
        for pcol, prow in self.pivots.items():
            c = prow.get(col)
            if c:
                for k, v in row.items():
                    nv = prow.get(k)
                    nv = -c * v if nv is None else nv - c * v
                    if nv:
                        prow[k] = nv
                    elif k in prow:
                        del prow[k]
        self.pivots[col] = row
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def row_space_contains(basis_rows, vector) -> bool:
    if not basis_rows:
        return not any(vector)
    return rank(basis_rows) == rank(basis_rows + [list(vector)])


def same_row_space(rows_a, rows_b) -> bool:
    ra = rank(rows_a) if rows_a else 0
    rb = rank(rows_b) if rows_b else 0
    if ra != rb:
        return False
    return rank(rows_a + rows_b) == ra if rows_a else rb == 0

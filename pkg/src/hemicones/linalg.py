"""Exact linear algebra over the integers and rationals.

Everything here is fraction-free or Fraction-based; floats are rejected.
Vectors are plain sequences of ints (or Fractions, transiently).
"""

from fractions import Fraction
from math import gcd

from .errors import ExactnessError, ZeroVector


def check_exact(value):
    """Reject floats and anything else that is not an int or Fraction."""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise ExactnessError(f"{value!r} ({type(value).__name__}) is not exact")
    return value


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def primitive_int_vector(v):
    """Scale a rational vector to a primitive integer vector (gcd 1).

    Keeps the sign; rejects the zero vector.
    """
    vv = [check_exact(x) for x in v]
    if all(x == 0 for x in vv):
        raise ZeroVector("cannot normalize the zero vector")
    if any(isinstance(x, Fraction) for x in vv):
        mult = 1
        for x in vv:
            if isinstance(x, Fraction):
                d = x.denominator
                mult = mult // gcd(mult, d) * d
        vv = [int(x * mult) for x in vv]
    g = vec_gcd(vv)
    return tuple(x // g for x in vv)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b, strict=True))


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
        p = m[row][col]
        top = m[row]
        for r in range(row + 1, nrows):
            mr = m[r]
            mrc = mr[col]
            # Bareiss guarantees this division is exact
            for c in range(col, ncols):
                mr[c] = (p * mr[c] - mrc * top[c]) // prev
        prev = p
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


class RationalRowBasis:
    """Incrementally maintained reduced row space over Q.

    Supports rank queries and independence tests while rows stream in.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []      # reduced rows, Fractions
        self.pivots = []    # pivot column of each reduced row

    def _reduce(self, vec):
        v = [Fraction(check_exact(x)) for x in vec]
        for prow, pcol in zip(self.rows, self.pivots):
            f = v[pcol]
            if f:
                for c in range(pcol, self.ncols):
                    v[c] -= f * prow[c]
        return v

    def would_increase_rank(self, vec):
        v = self._reduce(vec)
        return any(x != 0 for x in v)

    def add(self, vec):
        """Add a row; returns True if it increased the rank."""
        v = self._reduce(vec)
        for c in range(self.ncols):
            if v[c]:
                inv = Fraction(1) / v[c]
                v = [x * inv for x in v]
                for prow, pcol in zip(self.rows, self.pivots):
                    f = prow[c]
                    if f:
                        for cc in range(self.ncols):
                            prow[cc] -= f * v[cc]
                self.rows.append(v)
                self.pivots.append(c)
                return True
        return False

    @property
    def rank(self):
        return len(self.rows)


def kernel_basis(rows, ncols):
    """Primitive integer basis of {x : rows @ x = 0}."""
    basis = RationalRowBasis(ncols)
    for r in rows:
        basis.add(r)
    pivots = set(basis.pivots)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        # back-substitute pivot coordinates
        for prow, pcol in zip(basis.rows, basis.pivots):
            v[pcol] = -prow[fc]
        out.append(primitive_int_vector(v))
    return out


def invert_columns(rows):
    """Columns of A^{-1} for a square integer matrix A, as Fraction lists.

    Column j solves A x = e_j.  Raises ZeroVector if A is singular.
    """
    d = len(rows)
    aug = [[Fraction(check_exact(x)) for x in r] + [Fraction(int(i == j)) for j in range(d)]
           for i, r in enumerate(rows)]
    for col in range(d):
        piv = None
        for r in range(col, d):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            raise ZeroVector("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [[aug[i][d + j] for i in range(d)] for j in range(d)]

"""Unimodular integer matrices acting on polynomials by substitution.

Matrices are tuples of row tuples with integer entries.  The action used
throughout is on row vectors: (f|_g)(x) = f(x g^{-1}), so the action is
contravariant, f|_{gh} = (f|_g)|_h.  Only matrices invertible over the
integers (determinant +-1) act; anything else is rejected.

The special matrices built here generate an embedded copy of the symmetric
group on n+1 letters inside GL_n(Z):

  perm_matrix(sigma)   entries delta_{i, sigma(j)}, so w_sigma e_j = e_sigma(j)
  upper_ones(n)        unit upper triangular all-ones matrix P
  antidiagonal(n)      reversal matrix w_0
  neg_identity(n)      -1
  cyclic_action_matrix(n)   first row all -1, ones on the subdiagonal

build_iota(n) extends sigma -> w_sigma from the n-letter subgroup to the
full (n+1)-letter group: letters 1..n map to the basis vectors and letter
n+1 to the vector whose coordinates sum to the negated total, so the
matrix of sigma has columns vec(sigma(j)) - vec(sigma(n+1)).
"""

from fractions import Fraction
from itertools import permutations

from .polynomials import MultiPoly

__all__ = [
    "mat_identity",
    "mat_mul",
    "mat_det",
    "mat_inverse_unimodular",
    "perm_matrix",
    "upper_ones",
    "antidiagonal",
    "neg_identity",
    "cyclic_action_matrix",
    "iota_matrix",
    "build_iota",
    "act_matrix",
]


def _check_matrix(m):
    if not isinstance(m, tuple) or not m:
        raise ValueError("matrix must be a nonempty tuple of row tuples")
    n = len(m)
    for row in m:
        if not isinstance(row, tuple) or len(row) != n:
            raise ValueError("matrix must be square")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError("matrix entries must be integers")
    return n


def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n = _check_matrix(a)
    if _check_matrix(b) != n:
        raise ValueError("size mismatch")
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def mat_det(m):
    """Exact determinant via fraction-free row reduction."""
    n = _check_matrix(m)
    rows = [list(map(Fraction, row)) for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    assert det.denominator == 1
    return det.numerator


def mat_inverse_unimodular(m):
    """Inverse of an integer matrix with determinant +-1.

    Raises ValueError for any other determinant: those matrices do not act
    on polynomial rings with integer substitutions.
    """
    n = _check_matrix(m)
    det = mat_det(m)
    if det not in (1, -1):
        raise ValueError("matrix is not invertible over the integers (det=%d)" % det)
    # Gauss-Jordan on [m | I] over Fraction; entries of the result are
    # integers because the determinant is a unit.
    aug = [list(map(Fraction, m[i])) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = 1 / aug[col][col]
        aug[col] = [x * scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    inv = tuple(tuple(int(aug[i][n + j]) for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            assert aug[i][n + j].denominator == 1
    return inv


def _check_perm(sigma, n=None):
    sigma = tuple(sigma)
    if n is None:
        n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..%d: %r" % (n, sigma))
    return sigma


def perm_matrix(sigma):
    """Permutation matrix w_sigma with entries delta_{i, sigma(j)}."""
    sigma = _check_perm(sigma)
    n = len(sigma)
    return tuple(tuple(1 if i + 1 == sigma[j] else 0 for j in range(n))
                 for i in range(n))


def upper_ones(n):
    return tuple(tuple(1 if j >= i else 0 for j in range(n)) for i in range(n))


def antidiagonal(n):
    return tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))


def neg_identity(n):
    return tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n))


def cyclic_action_matrix(n):
    """First row all -1, ones on the subdiagonal; the image of the full cycle."""
    rows = [tuple(-1 for _ in range(n))]
    for i in range(1, n):
        rows.append(tuple(1 if j == i - 1 else 0 for j in range(n)))
    return tuple(rows)


def iota_matrix(sigma, n=None):
    """Matrix of a permutation of 1..n+1 acting on the sum-zero lattice.

    Column j is vec(sigma(j)) - vec(sigma(n+1)) where vec(i) = e_i for
    i <= n and vec(n+1) = 0.  Restricted to permutations fixing n+1 this
    reproduces perm_matrix.
    """
    sigma = tuple(sigma)
    if n is None:
        n = len(sigma) - 1
    _check_perm(sigma, n + 1)

    def vec(i):
        return tuple(1 if r + 1 == i else 0 for r in range(n))

    last = vec(sigma[n])
    cols = [tuple(a - b for a, b in zip(vec(sigma[j]), last)) for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def build_iota(n):
    """The embedding of all permutations of 1..n+1 into GL_n(Z), as a dict."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return {sigma: iota_matrix(sigma, n)
            for sigma in permutations(range(1, n + 2))}


def act_matrix(f, gamma):
    """Row-vector substitution action (f|_gamma)(x) = f(x gamma^{-1}).

    Accepts a MultiPoly (exact) or a weight-truncated coefficient series;
    the latter dispatches to its own implementation.  Contravariant:
    acting by a product equals acting by the factors left to right.
    """
    if hasattr(f, "act_matrix") and not isinstance(f, MultiPoly):
        return f.act_matrix(gamma)
    if not isinstance(f, MultiPoly):
        raise TypeError("expected MultiPoly or SeriesTrunc")
    n = _check_matrix(gamma)
    if f.nvars != n:
        raise ValueError("matrix size %d does not match variable count %d" % (n, f.nvars))
    delta = mat_inverse_unimodular(gamma)
    # y_j = sum_i x_i * delta[i][j]: variable j is replaced by column j of delta
    replacements = []
    for j in range(n):
        lin = MultiPoly.zero(n)
        for i in range(n):
            if delta[i][j]:
                lin = lin + MultiPoly.variable(i + 1, n).scaled(delta[i][j])
        replacements.append(lin)
    return f.substitute(replacements)

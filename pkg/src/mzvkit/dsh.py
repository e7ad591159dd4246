"""Linearized double shuffle spaces and the cyclic-invariance kernel.

For n >= 1 and d >= 0 let V be the homogeneous polynomials of degree d in
x_1..x_n.  The double shuffle space collects the f in V killed both by the
shuffle sums (acting through permutation matrices) and by the same sums
composed with the inverse all-ones triangular substitution:

    f|_{sh_{n,i}} = 0   and   (f|_{P^{-1}})|_{sh_{n,i}} = 0,   1 <= i <= n-1.

All conditions are exact linear constraints on the monomial coefficients;
bases come from the fraction-free nullspace in linalg, and every public
routine accepts a pivot_order so independent elimination paths can be
compared.

The cyclic-invariance kernel adds one more constraint family: form

    g(x_1,...,x_{n+1}) = (f(x_2-x_1,...,x_{n+1}-x_1) - f(x_2,...,x_{n+1})) / x_1

(the division is always exact) and require g to be invariant under the
cyclic shift of its n+1 variables.  For even degree d >= 2 this cuts the
space to zero; degree 0 keeps the constants.
"""

from fractions import Fraction

from .groupring import GroupRingElem, cycle_perm, shuffle_operator
from .linalg import PIVOT_ORDERS, nullspace
from .matrices import act_matrix, mat_inverse_unimodular, upper_ones
from .polynomials import MultiPoly, diagonal_translation_invariant, monomial_exponents

__all__ = [
    "act_groupring",
    "vector_space_dimension",
    "double_shuffle_space",
    "dsh_dimension",
    "dimension_table",
    "divided_difference",
    "cyclic_invariance_kernel",
    "symmetric_slice_basis",
    "symmetric_dti_solutions",
    "functional_equation_space",
    "second_order_divergence",
    "diagonal_translation_invariant",
]


def act_groupring(f, elem):
    """f|_x for a group-ring element x: coefficient-weighted sum of f|_{w_sigma}."""
    if not isinstance(elem, GroupRingElem):
        raise TypeError("expected GroupRingElem")
    if elem.m != f.nvars:
        raise ValueError("group on %d letters cannot act on %d variables" % (elem.m, f.nvars))
    out = MultiPoly.zero(f.nvars)
    for sigma, c in elem.coeffs.items():
        out = out + f.permute_variables(sigma).scaled(c)
    return out


def vector_space_dimension(n, d):
    return len(monomial_exponents(n, d))


def _rows_from_images(images, basis_size):
    """Linear conditions 'image == 0': one row per target monomial.

    images[j] is the image polynomial of the j-th basis monomial; the
    condition matrix columns follow the basis ordering.
    """
    targets = sorted({e for img in images for e in img.terms})
    rows = []
    for e in targets:
        rows.append([images[j].terms.get(e, Fraction(0)) for j in range(basis_size)])
    return rows


def _dsh_condition_rows(n, d):
    monos = monomial_exponents(n, d)
    basis = [MultiPoly.monomial(e) for e in monos]
    p_inv = mat_inverse_unimodular(upper_ones(n))
    twisted = [act_matrix(f, p_inv) for f in basis]
    rows = []
    for i in range(1, n):
        sh = shuffle_operator(n, i)
        rows.extend(_rows_from_images([act_groupring(f, sh) for f in basis], len(basis)))
        rows.extend(_rows_from_images([act_groupring(f, sh) for f in twisted], len(basis)))
    return monos, rows


def _polys_from_nullspace(monos, vectors, n):
    out = []
    for vec in vectors:
        out.append(MultiPoly(n, {e: c for e, c in zip(monos, vec) if c}))
    return out


def double_shuffle_space(n, d, pivot_order="left"):
    """Basis of the double shuffle space in n variables, degree d."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    monos, rows = _dsh_condition_rows(n, d)
    vectors = nullspace(rows, len(monos), pivot_order=pivot_order)
    return _polys_from_nullspace(monos, vectors, n)


def dsh_dimension(n, d, cross_check=True):
    """dim of the double shuffle space; optionally verified by both pivot orders."""
    dims = []
    for order in PIVOT_ORDERS if cross_check else PIVOT_ORDERS[:1]:
        dims.append(len(double_shuffle_space(n, d, pivot_order=order)))
    if len(set(dims)) != 1:
        raise ArithmeticError("elimination paths disagree for n=%d d=%d: %r" % (n, d, dims))
    return dims[0]


def dimension_table(n, degrees, cross_check=True):
    return {d: dsh_dimension(n, d, cross_check=cross_check) for d in degrees}


def _shift_vars(n):
    """Replacement lists sending f(x_1..x_n) into n+1 variables."""
    m = n + 1
    x = [MultiPoly.variable(i, m) for i in range(1, m + 1)]
    shifted = [x[i + 1] - x[0] for i in range(n)]      # x_{i+1} - x_1
    dropped_first = [x[i + 1] for i in range(n)]       # x_2 .. x_{n+1}
    leading = [x[i] for i in range(n)]                 # x_1 .. x_n
    return shifted, dropped_first, leading


def divided_difference(f):
    """(f(x_2-x_1,...,x_{n+1}-x_1) - f(x_2,...,x_{n+1})) / x_1, exactly.

    The numerator vanishes at x_1 = 0, so the division never fails.
    """
    if not isinstance(f, MultiPoly):
        raise TypeError("expected MultiPoly")
    shifted, dropped_first, _ = _shift_vars(f.nvars)
    num = f.substitute(shifted) - f.substitute(dropped_first)
    if num.is_zero():
        return MultiPoly.zero(f.nvars + 1)
    return num.divide_by_variable(1)


def cyclic_invariance_kernel(n, d, pivot_order="left"):
    """Members of the double shuffle space whose divided difference is cyclic.

    Requires even d (the odd case is outside the statement being checked).
    Expected: empty basis for even d >= 2; for d = 0 the constants remain.
    """
    if d % 2 != 0:
        raise ValueError("degree must be even, got %d" % d)
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    monos, rows = _dsh_condition_rows(n, d)
    basis = [MultiPoly.monomial(e) for e in monos]
    cyc = cycle_perm(n + 1)
    defects = []
    for f in basis:
        g = divided_difference(f)
        defects.append(g - g.permute_variables(cyc))
    rows = rows + _rows_from_images(defects, len(basis))
    vectors = nullspace(rows, len(monos), pivot_order=pivot_order)
    return _polys_from_nullspace(monos, vectors, n)


def symmetric_slice_basis(n, d):
    """Orbit-sum basis of the symmetric homogeneous polynomials of degree d."""
    orbits = {}
    for e in monomial_exponents(n, d):
        orbits.setdefault(tuple(sorted(e, reverse=True)), set()).add(e)
    out = []
    for key in sorted(orbits):
        out.append(MultiPoly(n, {e: Fraction(1) for e in orbits[key]}))
    return out


def symmetric_dti_solutions(n, d, pivot_order="left"):
    """Symmetric f of degree d with x_1-weighted first derivative translation invariant.

    Solves, over the symmetric slice, the condition that d/dx_1 (x_1 f) has
    partial derivatives summing to zero.  Only constants should survive.
    """
    basis = symmetric_slice_basis(n, d)
    x1 = MultiPoly.variable(1, n)
    images = []
    for f in basis:
        h = (x1 * f).partial(1)
        acc = MultiPoly.zero(n)
        for i in range(1, n + 1):
            acc = acc + h.partial(i)
        images.append(acc)
    rows = _rows_from_images(images, len(basis))
    vectors = nullspace(rows, len(basis), pivot_order=pivot_order)
    out = []
    for vec in vectors:
        f = MultiPoly.zero(n)
        for c, b in zip(vec, basis):
            f = f + b.scaled(c)
        out.append(f)
    return out


def functional_equation_space(n, d, pivot_order="left"):
    """Homogeneous f of degree d with the two-sided divided-difference balance.

    The constraint, in n+1 variables:

      x_{n+1} (f(x_2-x_1,..,x_{n+1}-x_1) - f(x_2,..,x_{n+1}))
        = x_1 (f(x_2-x_1,..,x_{n+1}-x_1) - f(x_1,..,x_n)).
    """
    monos = monomial_exponents(n, d)
    basis = [MultiPoly.monomial(e) for e in monos]
    shifted, dropped_first, leading = _shift_vars(n)
    m = n + 1
    x1 = MultiPoly.variable(1, m)
    xm = MultiPoly.variable(m, m)
    images = []
    for f in basis:
        a = f.substitute(shifted)
        images.append(xm * (a - f.substitute(dropped_first)) - x1 * (a - f.substitute(leading)))
    rows = _rows_from_images(images, len(basis))
    vectors = nullspace(rows, len(monos), pivot_order=pivot_order)
    return _polys_from_nullspace(monos, vectors, n)


def second_order_divergence(f):
    """sum_i d/dx_i of d/dx_n (x_n f); zero iff that inner derivative is
    translation invariant along the diagonal."""
    if not isinstance(f, MultiPoly):
        raise TypeError("expected MultiPoly")
    n = f.nvars
    inner = (MultiPoly.variable(n, n) * f).partial(n)
    acc = MultiPoly.zero(n)
    for i in range(1, n + 1):
        acc = acc + inner.partial(i)
    return acc

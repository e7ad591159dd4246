"""Exact sparse multivariate polynomials over the rationals.

A polynomial in n variables is stored as a dict mapping exponent tuples
(one nonnegative int per variable) to nonzero Fraction coefficients.  All
arithmetic is exact, so identity tests mean actual polynomial equality.
These are the coefficient carriers for the linear-algebra side of the
package: homogeneous components, variable substitution by polynomials
(used for integer-matrix actions), partial derivatives, and exact division
by a single variable.
"""

from fractions import Fraction

from .indices import compositions_nonneg

__all__ = [
    "MultiPoly",
    "monomial_exponents",
    "diagonal_translation_invariant",
]


def _as_fraction(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    raise TypeError("coefficient must be int or Fraction, got %r" % type(c).__name__)


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables with Fraction coefficients.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero Fractions.
    Instances are treated as immutable: every operation returns a new object.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 0:
            raise ValueError("nvars must be a nonnegative integer")
        self.nvars = nvars
        clean = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(expo)
            if len(expo) != nvars:
                raise ValueError("exponent tuple %r does not have %d entries" % (expo, nvars))
            if any((not isinstance(e, int)) or isinstance(e, bool) or e < 0 for e in expo):
                raise ValueError("exponents must be nonnegative integers: %r" % (expo,))
            coeff = _as_fraction(coeff)
            if coeff != 0:
                clean[expo] = clean.get(expo, Fraction(0)) + coeff
                if clean[expo] == 0:
                    del clean[expo]
        self.terms = clean

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: _as_fraction(value)})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, i, nvars):
        """The polynomial x_i (1-based index, matching the math displays)."""
        if not 1 <= i <= nvars:
            raise ValueError("variable index %d out of range 1..%d" % (i, nvars))
        expo = [0] * nvars
        expo[i - 1] = 1
        return cls(nvars, {tuple(expo): Fraction(1)})

    @classmethod
    def monomial(cls, expo, coeff=1):
        return cls(len(expo), {tuple(expo): _as_fraction(coeff)})

    # ---- ring operations ----------------------------------------------

    def _check_same(self, other):
        if not isinstance(other, MultiPoly):
            raise TypeError("expected MultiPoly, got %r" % type(other).__name__)
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other):
        self._check_same(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            acc = out.get(expo, Fraction(0)) + coeff
            if acc == 0:
                out.pop(expo, None)
            else:
                out[expo] = acc
        return MultiPoly(self.nvars, out)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, q):
        q = _as_fraction(q)
        if q == 0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly(self.nvars, {e: c * q for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        self._check_same(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                expo = tuple(a + b for a, b in zip(ea, eb))
                acc = out.get(expo, Fraction(0)) + ca * cb
                if acc == 0:
                    out.pop(expo, None)
                else:
                    out[expo] = acc
        return MultiPoly(self.nvars, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        acc = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        return (isinstance(other, MultiPoly)
                and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    # ---- structure ----------------------------------------------------

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_part(self, d):
        return MultiPoly(self.nvars,
                         {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), Fraction(0))

    # ---- calculus and substitution -------------------------------------

    def partial(self, i):
        """Partial derivative with respect to x_i (1-based)."""
        if not 1 <= i <= self.nvars:
            raise ValueError("variable index %d out of range 1..%d" % (i, self.nvars))
        j = i - 1
        out = {}
        for expo, coeff in self.terms.items():
            if expo[j] == 0:
                continue
            nxt = list(expo)
            nxt[j] -= 1
            out[tuple(nxt)] = out.get(tuple(nxt), Fraction(0)) + coeff * expo[j]
        return MultiPoly(self.nvars, out)

    def substitute(self, replacements):
        """Compose: replace x_i by replacements[i-1] (all in a common ring).

        The replacement polynomials fix the variable count of the result,
        so substitution into more (or fewer) variables is allowed.
        """
        replacements = list(replacements)
        if len(replacements) != self.nvars:
            raise ValueError("need %d replacement polynomials, got %d"
                             % (self.nvars, len(replacements)))
        if self.nvars == 0:
            target = 0
        else:
            target = replacements[0].nvars
        for r in replacements:
            if not isinstance(r, MultiPoly) or r.nvars != target:
                raise ValueError("replacements must be MultiPoly over a common variable set")
        out = MultiPoly.zero(target)
        # cache powers of each replacement; exponents in our use stay small
        powers = [{0: MultiPoly.one(target)} for _ in range(self.nvars)]

        def power(j, k):
            cache = powers[j]
            if k not in cache:
                cache[k] = power(j, k - 1) * replacements[j]
            return cache[k]

        for expo, coeff in self.terms.items():
            term = MultiPoly.constant(target, coeff)
            for j, e in enumerate(expo):
                if e:
                    term = term * power(j, e)
            out = out + term
        return out

    def permute_variables(self, sigma):
        """Return g with g(x_1,...,x_n) = f(x_{sigma^{-1}(1)},...,x_{sigma^{-1}(n)}).

        ``sigma`` is a permutation of 1..n as an image tuple.  The exponent of
        x_j in the image of a monomial with exponents e is e[sigma(j)].
        """
        if sorted(sigma) != list(range(1, self.nvars + 1)):
            raise ValueError("sigma must be a permutation of 1..%d" % self.nvars)
        out = {}
        for expo, coeff in self.terms.items():
            nxt = tuple(expo[sigma[j] - 1] for j in range(self.nvars))
            out[nxt] = out.get(nxt, Fraction(0)) + coeff
        return MultiPoly(self.nvars, out)

    def divide_by_variable(self, i):
        """Exact division by x_i; raises ValueError if some term lacks x_i."""
        if not 1 <= i <= self.nvars:
            raise ValueError("variable index %d out of range 1..%d" % (i, self.nvars))
        j = i - 1
        out = {}
        for expo, coeff in self.terms.items():
            if expo[j] == 0:
                raise ValueError("polynomial is not divisible by x_%d" % i)
            nxt = list(expo)
            nxt[j] -= 1
            out[tuple(nxt)] = coeff
        return MultiPoly(self.nvars, out)

    def is_symmetric(self):
        """Invariance under all variable permutations (adjacent swaps suffice)."""
        n = self.nvars
        for i in range(1, n):
            swap = list(range(1, n + 1))
            swap[i - 1], swap[i] = swap[i], swap[i - 1]
            if self.permute_variables(tuple(swap)) != self:
                return False
        return True

    def evaluate(self, point):
        point = [_as_fraction(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError("need %d coordinates" % self.nvars)
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            prod = coeff
            for x, e in zip(point, expo):
                prod *= x ** e
            total += prod
        return total

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(%d, 0)" % self.nvars
        bits = []
        for expo in sorted(self.terms, reverse=True):
            coeff = self.terms[expo]
            mono = "*".join("x%d^%d" % (j + 1, e) for j, e in enumerate(expo) if e)
            bits.append("%s%s" % (coeff, "*" + mono if mono else ""))
        return "MultiPoly(%d, %s)" % (self.nvars, " + ".join(bits))


def monomial_exponents(nvars, degree):
    """Exponent tuples of the degree-`degree` monomials in nvars variables.

    Deterministic order; this is the basis ordering used by the linear
    algebra over homogeneous slices.
    """
    return list(compositions_nonneg(degree, nvars))


def diagonal_translation_invariant(f):
    """True iff the partial derivatives of f sum to zero.

    Equivalent to f(x_1 + t, ..., x_n + t) = f(x_1, ..., x_n) as a
    polynomial identity in t and the x_i.
    """
    if not isinstance(f, MultiPoly):
        raise TypeError("expected MultiPoly")
    acc = MultiPoly.zero(f.nvars)
    for i in range(1, f.nvars + 1):
        acc = acc + f.partial(i)
    return acc.is_zero()

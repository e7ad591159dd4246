"""Arbitrary-precision numeric evaluation and exact truncated direct sums.

Admissible values are computed through the convolution split of the iterated
integral at 1/2: writing the integral word of an index innermost-first as
e_1 .. e_L (B = dt/(1-t), A = dt/t, so the word is B A^{k_1-1} .. B A^{k_n-1}),

    value(k) = sum_{j=0..L} I(e_1..e_j; 1/2) * I(dual(e_{j+1}..e_L); 1/2)

where dual reverses the word and swaps the letters.  Every factor is a
multiple polylogarithm partial sum at argument 1/2, so the series converge
geometrically (one bit per term) instead of polynomially like the defining
sum.  Admissibility guarantees each factor's innermost letter is B, which is
what keeps the factors finite.

Truncated direct sums over signed integer tuples (ordered strictly or weakly
by 1/m, the weak case weighted by inverse factorials of the tie run lengths)
are computed in exact rational arithmetic.
"""

import json
import math
import os
import threading
from fractions import Fraction

from mpmath import mp, mpf

from .indices import check_index, format_index, is_admissible, word_of_index

DEFAULT_DIGITS = 60
_GUARD_DIGITS = 15

# mpmath's global precision switch is not thread safe; all precision-scoped
# computation in this module runs under this lock
_MP_LOCK = threading.RLock()


def _workdigits(digits):
    return digits + _GUARD_DIGITS


class BigReal:
    """A real number at a stated decimal precision with an error estimate.

    `value` is an mpmath float, `err` a conservative bound on the distance
    to the intended real number, `digits` the nominal precision D.  Zero
    tests use the fixed tolerance 10^-(D-10).
    """

    __slots__ = ("value", "err", "digits")

    def __init__(self, value, err, digits):
        self.value = value
        self.err = err
        self.digits = int(digits)

    @classmethod
    def from_rational(cls, q, digits=DEFAULT_DIGITS):
        q = Fraction(q)
        with _MP_LOCK, mp.workdps(_workdigits(digits)):
            v = mpf(q.numerator) / q.denominator
            err = abs(v) * mpf(10) ** (-_workdigits(digits))
        return cls(v, err, digits)

    def tolerance(self):
        with _MP_LOCK, mp.workdps(_workdigits(self.digits)):
            return mpf(10) ** (-(self.digits - 10))

    def is_zero(self):
        # abs must round at working precision, not mpmath's global default
        with _MP_LOCK, mp.workdps(_workdigits(self.digits)):
            return abs(self.value) <= mpf(10) ** (-(self.digits - 10))

    def _binop_digits(self, other):
        return min(self.digits, other.digits)

    def __add__(self, other):
        if not isinstance(other, BigReal):
            return NotImplemented
        d = self._binop_digits(other)
        with _MP_LOCK, mp.workdps(_workdigits(d)):
            v = self.value + other.value
            err = self.err + other.err + abs(v) * mpf(10) ** (-_workdigits(d))
        return BigReal(v, err, d)

    def __sub__(self, other):
        if not isinstance(other, BigReal):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        with _MP_LOCK, mp.workdps(_workdigits(self.digits)):
            v = -self.value
        return BigReal(v, self.err, self.digits)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, BigReal):
            return NotImplemented
        d = self._binop_digits(other)
        with _MP_LOCK, mp.workdps(_workdigits(d)):
            v = self.value * other.value
            err = (abs(self.value) * other.err + abs(other.value) * self.err
                   + self.err * other.err
                   + abs(v) * mpf(10) ** (-_workdigits(d)))
        return BigReal(v, err, d)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, q):
        q = Fraction(q)
        with _MP_LOCK, mp.workdps(_workdigits(self.digits)):
            f = mpf(q.numerator) / q.denominator
            v = self.value * f
            err = self.err * abs(f) + abs(v) * mpf(10) ** (-_workdigits(self.digits))
        return BigReal(v, err, self.digits)

    def to_decimal(self, digits=None):
        d = digits if digits is not None else self.digits
        with _MP_LOCK, mp.workdps(_workdigits(self.digits)):
            return mp.nstr(self.value, d)

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return "BigReal(%s, digits=%d)" % (self.to_decimal(min(self.digits, 20)),
                                           self.digits)


class ValueCache:
    """Persistent (index, precision) -> decimal string store.

    Backed by a JSON-lines file; hits are re-parsed at the recorded
    precision, which makes them bit-identical to a fresh computation
    (fresh computations are themselves canonicalized through the same
    serialize/parse round trip).  Reads are lock-free; writes serialize.
    """

    def __init__(self, path=None):
        self.path = path
        self._mem = {}
        self._lock = threading.Lock()
        if path is not None and os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    self._mem[(rec["index"], int(rec["precision"]))] = rec["value"]

    def get(self, index_text, digits):
        return self._mem.get((index_text, digits))

    def put(self, index_text, digits, value_text):
        with self._lock:
            key = (index_text, digits)
            if key in self._mem:
                return
            self._mem[key] = value_text
            if self.path is not None:
                rec = {"index": index_text, "precision": digits,
                       "value": value_text}
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(json.dumps(rec) + "\n")


_default_cache = None
_default_cache_lock = threading.Lock()


def default_cache():
    """Process-wide cache; file-backed iff MZV_CACHE_PATH is set."""
    global _default_cache
    with _default_cache_lock:
        if _default_cache is None:
            _default_cache = ValueCache(os.environ.get("MZV_CACHE_PATH"))
        return _default_cache


def configure_cache(path):
    """Point the process-wide cache at a file (None = memory only)."""
    global _default_cache
    with _default_cache_lock:
        _default_cache = ValueCache(path)
        return _default_cache


def _dual_word(w):
    return "".join("A" if c == "B" else "B" for c in reversed(w))


def _word_exponents(word):
    # innermost-first polylog word starting with B: each B opens a variable,
    # each A after it raises that variable's exponent
    exps = []
    for c in word:
        if c == "B":
            exps.append(1)
        else:
            exps[-1] += 1
    return exps


def _polylog_half(exps, nterms):
    """Partial sum of Li_{exps}(1/2), innermost exponent first.

    Truncation error is below 2^-nterms times a small polynomial factor.
    Must be called inside an mp.workdps context.
    """
    level = [mpf(0)] * (nterms + 1)
    for m in range(1, nterms + 1):
        level[m] = mpf(m) ** (-exps[0])
    for a in exps[1:]:
        cum = mpf(0)
        nxt = [mpf(0)] * (nterms + 1)
        for m in range(1, nterms + 1):
            nxt[m] = cum * mpf(m) ** (-a)
            cum += level[m]
        level = nxt
    total = mpf(0)
    power = mpf(1)
    for m in range(1, nterms + 1):
        power *= mpf("0.5")
        total += level[m] * power
    return total


def _integral_half(word, nterms):
    if not word:
        return mpf(1)
    return _polylog_half(_word_exponents(word), nterms)


def _convolution_eval(k, workdigits):
    # must be called inside an mp.workdps(workdigits) context
    eword = word_of_index(k)[::-1]
    length = len(eword)
    nterms = int(math.ceil(3.33 * workdigits)) + 64 + 8 * length
    total = mpf(0)
    for j in range(length + 1):
        left = _integral_half(eword[:j], nterms)
        right = _integral_half(_dual_word(eword[j:]), nterms)
        total += left * right
    return total


def eval_admissible(k, digits=DEFAULT_DIGITS, cache=None):
    """Numeric value of an admissible index, correct to well within 10^-(D-5)."""
    k = check_index(k)
    if not is_admissible(k):
        raise ValueError("eval_admissible needs an admissible index, got %s"
                         % format_index(k))
    if digits < 1:
        raise ValueError("digits must be positive")
    if cache is None:
        cache = default_cache()
    wd = _workdigits(digits)
    key = format_index(k)
    with _MP_LOCK, mp.workdps(wd):
        stored = cache.get(key, digits)
        if stored is None:
            if len(k) == 0:
                raw = mpf(1)
            else:
                raw = _convolution_eval(k, wd)
            stored = mp.nstr(raw, wd)
            cache.put(key, digits, stored)
        value = mpf(stored)
        err = mpf(10) ** (-(digits + 5))
    return BigReal(value, err, digits)


def eval_combo(combo, digits=DEFAULT_DIGITS, cache=None):
    """Linear extension of eval_admissible to an MzvCombo."""
    acc = BigReal.from_rational(0, digits)
    for k in sorted(combo.terms):
        acc = acc + eval_admissible(k, digits, cache).scaled(combo.terms[k])
    return acc


def eval_constant_term(poly, digits=DEFAULT_DIGITS, cache=None):
    """Numeric value of the T^0 coefficient of a RegPoly."""
    return eval_combo(poly.constant_term(), digits, cache)


# ---------------------------------------------------------------------------
# exact truncated direct sums over signed integers

def _signed_range(M):
    # all m with 0 < |m| < M, listed in strictly decreasing order of 1/m
    if M < 1:
        raise ValueError("M must be a positive integer")
    return list(range(1, M)) + [-m for m in range(M - 1, 0, -1)]


def direct_sum_F(k, M):
    """Exact partial sum over tuples with 0<|m_i|<M and 1/m_1 > ... > 1/m_n.

    Tuples are strict chains in the 1/m order, i.e. increasing position
    subsequences of the signed range; one cumulative pass per index slot.
    """
    k = check_index(k)
    n = len(k)
    if n == 0:
        return Fraction(1)
    values = _signed_range(M)
    g = None  # g[pos] = sum over chains of processed slots ending at pos
    for t, ki in enumerate(k):
        cum = Fraction(0)
        nxt = []
        for pos, m in enumerate(values):
            # exactly one empty chain precedes the first slot
            prior = Fraction(1) if t == 0 else cum
            nxt.append(prior * Fraction(1, m ** ki))
            if t > 0:
                cum += g[pos]
        g = nxt
    return sum(g, Fraction(0))


def direct_sum_natural(k, M):
    """Weighted partial sum over weak chains in the 1/m order.

    A tuple weakly decreasing in 1/m is weighted by the product of 1/r!
    over its maximal runs of equal entries; all other tuples weigh 0.
    Each distinct value m extends a partial chain by a run of j >= 1 equal
    entries, consuming index slots k_{i+1}..k_{i+j}.
    """
    k = check_index(k)
    n = len(k)
    if n == 0:
        return Fraction(1)
    g = [Fraction(0)] * (n + 1)
    g[0] = Fraction(1)
    for m in _signed_range(M):
        nxt = list(g)
        for i in range(n):
            base = g[i]
            if not base:
                continue
            powprod = Fraction(1)
            fact = 1
            for j in range(1, n - i + 1):
                powprod *= Fraction(1, m ** k[i + j - 1])
                fact *= j
                nxt[i + j] += base * powprod * Fraction(1, fact)
        g = nxt
    return g[n]


def richardson_extrapolate(values):
    """Accelerate s(M) sampled at M = 2^j, j increasing by 1.

    Assumes an error expansion whose M^-t terms may carry coefficients
    linear in log M (signed harmonic cancellations produce such terms), so
    each power factor is applied twice: the first pass turns (a + b log M)
    M^-t into a constant-coefficient M^-t term, the second removes it.
    Exact on Fractions, also fine on floats.
    """
    row = list(values)
    if not row:
        raise ValueError("need at least one sample")
    t = 0
    while len(row) > 1:
        factor = 2 ** (t // 2 + 1)
        row = [(factor * row[i + 1] - row[i]) / (factor - 1)
               for i in range(len(row) - 1)]
        t += 1
    return row[0]

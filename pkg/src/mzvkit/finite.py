"""Finite real multiple zeta values and their mod-p counterparts.

The finite real value of an index is the limit of its truncated direct sum
over signed integers ordered strictly by 1/m.  Symbolically it is computed
by the antipode-type splitting sum

    sum_{i=0..n} (-1)^(k_{i+1}+...+k_n)
        reg(k_1..k_i) * reg(k_n..k_{i+1})

with both factors regularized in one scheme (series scheme for zeta_F,
integral scheme for zeta_F_sharp), the product taken as full polynomials in
T, and the T-coefficients summed over i.  For the default sign convention
the sum is T-free; that is checked at runtime, and the constant term is the
value.  The surjection-weighted variant zeta_natural_F matches the limit of
the weakly-ordered weighted direct sums.

The mod-p values are literal finite sums in F_p: zeta_A_component over
0 < m_1 < ... < m_n < p, and zeta_natural_A_component the weighted weak-chain
sum over 0 < |m_i| < p/2 whose tie weights 1/r! require p > depth.
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .indices import (
    check_index,
    enumerate_surjections,
    format_index,
    push_index,
    stabilizer_order,
    weight,
    word_of_index,
)
from .regularization import (
    MzvCombo,
    RegPoly,
    shuffle_regularize,
    stuffle_regularize,
)

SIGN_CONVENTIONS = ("tail", "head")


def _antipode_poly(k, reg_of_index, sign_convention):
    if sign_convention not in SIGN_CONVENTIONS:
        raise ValueError("sign_convention must be one of %r" % (SIGN_CONVENTIONS,))
    n = len(k)
    total = RegPoly.zero()
    for i in range(n + 1):
        if sign_convention == "tail":
            expo = weight(k[i:])
        else:
            # audit-only alternative: exponent starts one slot earlier
            expo = weight(k[max(i - 1, 0):])
        left = reg_of_index(k[:i])
        right = reg_of_index(k[i:][::-1])
        term = left * right
        if expo % 2:
            term = term.scaled(-1)
        total = total + term
    return total


def _constant_term_checked(poly, k, sign_convention, label):
    if sign_convention == "tail" and poly.degree() > 0:
        raise ArithmeticError(
            "%s(%s) produced T-dependent terms; the splitting sum should be "
            "T-free under the tail sign convention" % (label, format_index(k)))
    return poly.constant_term()


@lru_cache(maxsize=None)
def _zeta_F(k, sign_convention):
    poly = _antipode_poly(k, stuffle_regularize, sign_convention)
    return _constant_term_checked(poly, k, sign_convention, "zeta_F")


def zeta_F(k, sign_convention="tail"):
    """Symbolic finite value with series-regularized factors, as an MzvCombo.

    sign_convention="head" keeps the rejected alternative exponent available
    for auditing; it does not match the direct-sum limit and its splitting
    sum need not be T-free (the T part is discarded).
    """
    return _zeta_F(check_index(k), sign_convention)


def _sharp_reg(k):
    return shuffle_regularize(word_of_index(k))


@lru_cache(maxsize=None)
def _zeta_F_sharp(k, sign_convention):
    poly = _antipode_poly(k, _sharp_reg, sign_convention)
    return _constant_term_checked(poly, k, sign_convention, "zeta_F_sharp")


def zeta_F_sharp(k, sign_convention="tail"):
    """Finite value with integral-scheme (shuffle) regularized factors."""
    return _zeta_F_sharp(check_index(k), sign_convention)


@lru_cache(maxsize=None)
def _zeta_natural_F(k, sign_convention):
    n = len(k)
    acc = MzvCombo.zero()
    for m in range(1, n + 1):
        for comp in enumerate_surjections(n, m):
            part = _zeta_F(push_index(comp, k), sign_convention)
            acc = acc + part.scaled(Fraction(1, stabilizer_order(comp)))
    if n == 0:
        acc = MzvCombo.one()
    return acc


def zeta_natural_F(k, sign_convention="tail"):
    """Surjection-weighted finite value: sum of zeta_F over collapsed indices,
    each divided by the order of the collapse's stabilizer."""
    return _zeta_natural_F(check_index(k), sign_convention)


# ---------------------------------------------------------------------------
# mod p

class ModPValue(NamedTuple):
    prime: int
    residue: int

    def __str__(self):
        return "%d (mod %d)" % (self.residue, self.prime)


def is_prime(p):
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def primes_in_range(lo, hi):
    """Primes p with lo <= p <= hi, ascending."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


def _check_prime(p):
    if not is_prime(p):
        raise ValueError("p must be prime, got %r" % (p,))
    return p


def zeta_A_component(k, p):
    """Sum over 0 < m_1 < ... < m_n < p of the inverse power product in F_p."""
    k = check_index(k)
    _check_prime(p)
    n = len(k)
    if n == 0:
        return ModPValue(p, 1 % p)
    level = [0] * p
    for m in range(1, p):
        level[m] = pow(m, -k[0], p)
    for a in k[1:]:
        cum = 0
        nxt = [0] * p
        for m in range(1, p):
            nxt[m] = cum * pow(m, -a, p) % p
            cum = (cum + level[m]) % p
        level = nxt
    return ModPValue(p, sum(level) % p)


def zeta_natural_A_component(k, p):
    """Weighted weak-chain sum over 0 < |m_i| < p/2 in F_p.

    Tie runs of length r weigh 1/r!, so r! must be invertible: requires
    p > depth(k).
    """
    k = check_index(k)
    _check_prime(p)
    n = len(k)
    if n == 0:
        return ModPValue(p, 1 % p)
    if p <= n:
        raise ValueError("need p > depth for invertible tie weights, got "
                         "p=%d depth=%d" % (p, n))
    half = (p - 1) // 2
    values = list(range(1, half + 1)) + [-m for m in range(half, 0, -1)]
    inv_fact = [0] * (n + 1)
    for j in range(1, n + 1):
        inv_fact[j] = pow(math.factorial(j), -1, p)
    g = [0] * (n + 1)
    g[0] = 1
    for m in values:
        mm = m % p
        nxt = list(g)
        for i in range(n):
            base = g[i]
            if base == 0:
                continue
            powprod = 1
            for j in range(1, n - i + 1):
                powprod = powprod * pow(mm, -k[i + j - 1], p) % p
                nxt[i + j] = (nxt[i + j] + base * powprod * inv_fact[j]) % p
        g = nxt
    return ModPValue(p, g[n] % p)

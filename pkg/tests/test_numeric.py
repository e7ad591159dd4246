"""Numeric engine tests.

Oracles: an independent pi/zeta implementation (mpmath's own), the classical
Euler identities as cross-checks, plain truncated partial sums of the
defining series with documented tail bounds, and brute-force enumerations of
the signed direct sums at tiny cutoffs.
"""

import itertools
import json
import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from mpmath import mp, mpf

from mzvkit.indices import admissible_indices, cone_weight, enumerate_surjections, \
    push_index, stabilizer_order
from mzvkit.numeric import (
    BigReal,
    ValueCache,
    direct_sum_F,
    direct_sum_natural,
    eval_admissible,
    eval_combo,
    eval_constant_term,
    richardson_extrapolate,
)
from mzvkit.regularization import MzvCombo, shuffle_regularize, stuffle_regularize


def _close(x, y, digits):
    with mp.workdps(digits + 30):
        return abs(x - y) < mpf(10) ** (-digits)


def _naive_partial(k, M):
    # float partial sum of the defining nested series, truncated at m_n < M;
    # shares nothing with the convolution-at-1/2 evaluation path
    h = [0.0] * M
    for m in range(1, M):
        h[m] = float(m) ** (-k[0])
    for a in k[1:]:
        cum = 0.0
        nxt = [0.0] * M
        for m in range(1, M):
            nxt[m] = cum * float(m) ** (-a)
            cum += h[m]
        h = nxt
    return sum(h)


# ---------------------------------------------------------------------------
# eval_admissible

def test_empty_index_is_one():
    v = eval_admissible((), 60)
    assert _close(v.value, mpf(1), 55)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        eval_admissible((1,), 60)
    with pytest.raises(ValueError):
        eval_admissible((2, 1), 60)
    with pytest.raises(ValueError):
        eval_admissible((2,), 0)


def test_zeta_two_matches_pi_squared_over_six():
    v = eval_admissible((2,), 60)
    with mp.workdps(90):
        target = mp.pi ** 2 / 6
        assert abs(v.value - target) < mpf(10) ** -55


def test_euler_depth_two_identity():
    a = eval_admissible((1, 2), 60)
    b = eval_admissible((3,), 60)
    assert _close(a.value, b.value, 55)


def test_matches_independent_zeta_implementation():
    for n in (2, 3, 5, 7):
        v = eval_admissible((n,), 60)
        with mp.workdps(90):
            assert abs(v.value - mp.zeta(n)) < mpf(10) ** -55, n


def test_naive_truncation_oracle():
    # tails at cutoff 4000: below 1e-7 for last part >= 3 (central estimate
    # C / (2 M^2)), far below the 1e-5 assertion threshold
    for k in [(3,), (4,), (2, 3), (1, 4)]:
        v = eval_admissible(k, 30)
        assert abs(float(v.value) - _naive_partial(k, 4000)) < 1e-5, k


def test_precision_doubling_stability():
    for w in range(2, 9):
        for k in admissible_indices(w):
            a = eval_admissible(k, 60)
            b = eval_admissible(k, 80)
            assert _close(a.value, b.value, 55), k


# ---------------------------------------------------------------------------
# combos and polynomials

def test_eval_combo_zero_and_linearity():
    assert eval_combo(MzvCombo.zero(), 60).is_zero()
    prod = MzvCombo.of_index((2,)) * MzvCombo.of_index((2,))
    lhs = eval_combo(prod, 60)
    z2 = eval_admissible((2,), 60)
    with mp.workdps(90):
        target = z2.value * z2.value
    assert _close(lhs.value, target, 50)


def test_eval_constant_term_of_regularization():
    # constant term of the series scheme at (2,1) is -z(1,2)-z(3) = -2 z(3)
    v = eval_constant_term(stuffle_regularize((2, 1)), 60)
    z3 = eval_admissible((3,), 60)
    with mp.workdps(90):
        target = -2 * z3.value
    assert _close(v.value, target, 50)
    w = eval_constant_term(stuffle_regularize((1, 1)), 60)
    z2 = eval_admissible((2,), 60)
    with mp.workdps(90):
        target = -z2.value / 2
    assert _close(w.value, target, 50)


def test_shuffle_homomorphism_numeric():
    # the integral scheme is a homomorphism for the shuffle product; the
    # identity is only numeric (coefficients can differ by true relations,
    # e.g. z(4) vs 4 z(1,3))
    from mzvkit.indices import shuffle_words

    def b_words(n):
        if n == 1:
            return ["B"]
        return [c + w for w in b_words(n - 1) for c in "AB"]

    pairs = []
    for la in range(1, 6):
        for lb in range(la, 8 - la):
            for u in b_words(la):
                for v in b_words(lb):
                    if (v, u) not in pairs:
                        pairs.append((u, v))
    for u, v in pairs:
        lhs = shuffle_regularize(u) * shuffle_regularize(v)
        rhs = None
        for term, mult in shuffle_words(u, v).items():
            part = shuffle_regularize(term).scaled(mult)
            rhs = part if rhs is None else rhs + part
        diff = lhs - rhs
        for j, combo in diff.coeffs.items():
            assert eval_combo(combo, 60).is_zero(), (u, v, j)


def test_numeric_zero_test_detects_real_relations_only():
    # z(4) = 4 z(1,3) is a true relation; perturbing it must not pass
    rel = MzvCombo({(4,): 1, (1, 3): -4})
    assert eval_combo(rel, 60).is_zero()
    off = rel + MzvCombo({(2,): Fraction(1, 10 ** 6)})
    assert not eval_combo(off, 60).is_zero()


# ---------------------------------------------------------------------------
# BigReal

def test_bigreal_arithmetic():
    x = BigReal.from_rational(Fraction(1, 3), 40)
    y = x + x + x
    assert _close(y.value, mpf(1), 35)
    assert (x - x).is_zero()
    assert _close(x.scaled(3).value, mpf(1), 35)
    assert x.to_decimal(10).startswith("0.333333333")
    assert abs(float(x) - 1 / 3) < 1e-15
    z = x * x
    with mp.workdps(70):
        ninth = mpf(1) / 9
    assert _close(z.value, ninth, 35)
    assert (2 * x - x.scaled(2)).is_zero()


def test_bigreal_error_tracking_grows():
    x = BigReal.from_rational(Fraction(1, 7), 50)
    assert (x + x).err >= x.err


def test_bigreal_zero_tolerance_is_d_minus_ten():
    tiny = BigReal.from_rational(Fraction(1, 10 ** 55), 60)
    small = BigReal.from_rational(Fraction(1, 10 ** 45), 60)
    assert tiny.is_zero()
    assert not small.is_zero()


# ---------------------------------------------------------------------------
# cache

def test_cache_bit_identity(tmp_path):
    path = str(tmp_path / "cache.jsonl")
    v1 = eval_admissible((2, 3), 60, cache=ValueCache(path))
    reloaded = ValueCache(path)
    assert reloaded.get("(2,3)", 60) is not None
    v2 = eval_admissible((2, 3), 60, cache=reloaded)
    assert v1.value == v2.value
    assert v1.to_decimal(70) == v2.to_decimal(70)
    with open(path, encoding="utf-8") as fh:
        recs = [json.loads(line) for line in fh if line.strip()]
    assert len(recs) == 1
    assert recs[0]["index"] == "(2,3)"
    assert recs[0]["precision"] == 60


def test_cache_distinguishes_precision(tmp_path):
    path = str(tmp_path / "cache.jsonl")
    c = ValueCache(path)
    eval_admissible((2,), 50, cache=c)
    eval_admissible((2,), 60, cache=c)
    assert c.get("(2)", 50) != c.get("(2)", 60)


def test_default_cache_env_pickup(tmp_path, monkeypatch):
    import mzvkit.numeric as numeric
    path = str(tmp_path / "envcache.jsonl")
    monkeypatch.setenv("MZV_CACHE_PATH", path)
    monkeypatch.setattr(numeric, "_default_cache", None)
    eval_admissible((2,), 45)
    with open(path, encoding="utf-8") as fh:
        assert "(2)" in fh.read()
    monkeypatch.setattr(numeric, "_default_cache", None)


def test_thread_safety_same_bits():
    cache = ValueCache(None)
    serial = {k: eval_admissible(k, 60, cache=ValueCache(None)).to_decimal(70)
              for k in [(1, 3), (2, 2)]}
    results = []
    with ThreadPoolExecutor(max_workers=4) as pool:
        futures = [pool.submit(eval_admissible, k, 60, cache)
                   for _ in range(3) for k in [(1, 3), (2, 2)]]
        for f in futures:
            results.append(f.result())
    for k, v in zip([(1, 3), (2, 2)] * 3, results):
        assert v.to_decimal(70) == serial[k]


# ---------------------------------------------------------------------------
# exact direct sums

def test_direct_sum_F_basics():
    assert direct_sum_F((), 5) == 1
    for M in range(2, 10):
        assert direct_sum_F((1,), M) == 0
    assert direct_sum_F((2,), 3) == Fraction(5, 2)
    with pytest.raises(ValueError):
        direct_sum_F((2,), 0)


def test_direct_sum_F_depth_two_closed_form():
    # pairing the full square (which cancels) against the diagonal gives
    # sum over strict chains of 1/(m1 m2) = -sum_{0<m<M} 1/m^2
    for M in (2, 3, 5, 10):
        expect = -sum(Fraction(1, m * m) for m in range(1, M))
        assert direct_sum_F((1, 1), M) == expect


def _signed_values(M):
    return [m for m in range(1, M)] + [-m for m in range(1, M)]


def test_direct_sum_F_brute_force():
    for k in [(1,), (2,), (1, 1), (2, 1), (1, 2)]:
        for M in (2, 4, 6):
            vals = _signed_values(M)
            total = Fraction(0)
            for tup in itertools.product(vals, repeat=len(k)):
                recips = [Fraction(1, m) for m in tup]
                if all(recips[i] > recips[i + 1] for i in range(len(tup) - 1)):
                    term = Fraction(1)
                    for m, e in zip(tup, k):
                        term *= Fraction(1, m ** e)
                    total += term
            assert direct_sum_F(k, M) == total, (k, M)


def test_direct_sum_natural_brute_force_via_cone_weight():
    cases = [((1, 1), 5), ((2, 1), 5), ((1, 2), 4), ((1, 1, 1), 4)]
    for k, M in cases:
        vals = _signed_values(M)
        total = Fraction(0)
        for tup in itertools.product(vals, repeat=len(k)):
            w = cone_weight(tup)
            if w:
                term = w
                for m, e in zip(tup, k):
                    term *= Fraction(1, m ** e)
                total += term
        assert direct_sum_natural(k, M) == total, (k, M)


def test_direct_sum_natural_depth_one_matches_strict():
    for M in (2, 3, 7):
        assert direct_sum_natural((2,), M) == direct_sum_F((2,), M)
    assert direct_sum_natural((2,), 3) == Fraction(5, 2)


def test_direct_sum_natural_surjection_expansion():
    # weighted weak chains = sum over ordered surjections of strict chains
    # of the collapsed index, divided by the stabilizer order
    for k in [(2, 1), (2, 1, 1), (1, 2, 2)]:
        n = len(k)
        for M in (4, 9):
            expect = Fraction(0)
            for m in range(1, n + 1):
                for comp in enumerate_surjections(n, m):
                    expect += Fraction(1, stabilizer_order(comp)) \
                        * direct_sum_F(push_index(comp, k), M)
            assert direct_sum_natural(k, M) == expect, (k, M)


def test_totally_odd_natural_vanishes():
    for k in [(1,), (3,), (1, 1), (3, 1), (1, 3), (1, 1, 1), (3, 3, 1)]:
        for M in (2, 5, 13):
            assert direct_sum_natural(k, M) == 0, (k, M)


# ---------------------------------------------------------------------------
# extrapolation

def test_richardson_exact_geometric():
    seq = [Fraction(1) + Fraction(1, 2 ** j) for j in range(1, 6)]
    assert richardson_extrapolate(seq) == 1
    assert richardson_extrapolate([Fraction(7, 3)] * 4) == Fraction(7, 3)
    with pytest.raises(ValueError):
        richardson_extrapolate([])


def test_richardson_depth_two_limits():
    seq = [direct_sum_F((1, 1), 2 ** j) for j in range(1, 9)]
    ext = richardson_extrapolate(seq)
    with mp.workdps(40):
        val = mpf(ext.numerator) / ext.denominator
        assert abs(val + mp.pi ** 2 / 6) < 1e-6


def test_richardson_depth_one_limit():
    seq = [direct_sum_F((2,), 2 ** j) for j in range(1, 9)]
    ext = richardson_extrapolate(seq)
    with mp.workdps(40):
        val = mpf(ext.numerator) / ext.denominator
        assert abs(val - mp.pi ** 2 / 3) < 1e-6

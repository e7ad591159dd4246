"""
Evaluating convergent values to many digits
===========================================

eval_admissible computes any admissible index at a requested number of
digits with a tracked error bound.  Known closed forms make good spot
checks; the file-backed cache makes repeated sweeps cheap.
"""

import time
from fractions import Fraction

from mpmath import mp

from mzvkit.numeric import BigReal, eval_admissible, eval_combo
from mzvkit.regularization import MzvCombo

# zeta(2) against an independent constant
v = eval_admissible((2,), 60)
with mp.workdps(80):
    print("eval (2)  =", mp.nstr(v.value, 55))
    print("pi^2/6    =", mp.nstr(mp.pi ** 2 / 6, 55))
    assert abs(v.value - mp.pi ** 2 / 6) < mp.mpf(10) ** -55

# Euler's weight-3 reduction, as a cancellation of BigReals
d = eval_admissible((1, 2), 60) - eval_admissible((3,), 60)
print("(1,2) - (3) =", d.to_decimal(5), " is_zero:", d.is_zero())
assert d.is_zero()

# depth 3 at modest weight, then the same index at doubled precision
k = (1, 1, 2)
t0 = time.monotonic()
a = eval_admissible(k, 60)
t1 = time.monotonic()
b = eval_admissible(k, 120)
t2 = time.monotonic()
print()
print("eval %s:" % (k,))
print("   60 digits: %s  (%.2fs)" % (a.to_decimal(50), t1 - t0))
print("  120 digits: %s  (%.2fs)" % (b.to_decimal(50), t2 - t1))
with mp.workdps(140):
    assert abs(a.value - b.value) < mp.mpf(10) ** -55

# rational combinations evaluate term by term with exact scalars
combo = MzvCombo.of_index((4,)) + MzvCombo.of_index((2, 2)).scaled(-3)
print()
print("z(4) - 3 z(2,2) =", eval_combo(combo, 40).to_decimal(30))

# BigReal arithmetic keeps an explicit error estimate
x = BigReal.from_rational(Fraction(1, 3), 30)
y = x.scaled(3) - BigReal.from_rational(Fraction(1), 30)
print("3*(1/3) - 1 is_zero:", y.is_zero())
print()
print("ok")

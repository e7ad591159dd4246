"""
Finite real values and their mod-p shadows
==========================================

zeta_F(k) is the symmetrized two-sided limit of the harmonic-type sums,
expressed exactly as a rational combination of convergent values.  The
natural variant adds the cone-weighted lattice points; mod p the same
construction lands in F_p.
"""

from fractions import Fraction

from mzvkit.finite import (
    primes_in_range,
    zeta_A_component,
    zeta_F,
    zeta_natural_A_component,
    zeta_natural_F,
)
from mzvkit.indices import format_index
from mzvkit.numeric import direct_sum_natural, eval_combo, richardson_extrapolate


def show(label, combo):
    terms = ", ".join("%s %s" % (q, format_index(k))
                      for k, q in sorted(combo.terms.items()))
    print("%-22s = %s" % (label, terms if terms else "0"))


show("zeta_F(3)", zeta_F((3,)))      # depth 1 cancels pairwise
show("zeta_F(2,1)", zeta_F((2, 1)))
show("zeta_F(1,2)", zeta_F((1, 2)))
show("zeta_natural_F(2,1)", zeta_natural_F((2, 1)))
show("zeta_natural_F(1,1)", zeta_natural_F((1, 1)))

# depth 2 collapse: natural = plain + half the single-block collapse
k = (3, 2)
lhs = zeta_natural_F(k)
rhs = zeta_F(k) + zeta_F((5,)).scaled(Fraction(1, 2))
assert lhs == rhs
show("zeta_natural_F(3,2)", lhs)

# the symbol agrees with the raw truncated lattice sums.  Convergence of
# the signed sums is slow (log factors), so extrapolate a doubling ladder.
k = (2, 1)
samples = [direct_sum_natural(k, 2 ** j) for j in range(3, 10)]
accel = richardson_extrapolate([float(s) for s in samples])
target = float(eval_combo(zeta_natural_F(k), 30))
print()
print("direct sums at M=8..512, accelerated: %.10f" % accel)
print("symbolic value evaluated:             %.10f" % target)
assert abs(accel - target) < 1e-6

# totally odd indices vanish at every truncation, no limit needed
for k in [(1,), (3,), (1, 1), (3, 1), (1, 1, 1)]:
    assert direct_sum_natural(k, 30) == 0

# mod p: same vanishing for every usable prime
print()
print("zeta_natural_A components of (3,1):",
      [zeta_natural_A_component((3, 1), p).residue
       for p in primes_in_range(5, 50)])

# a non-example stays nonzero mod most primes
print("zeta_A components of (2,1):       ",
      [zeta_A_component((2, 1), p).residue for p in primes_in_range(5, 50)])
print()
print("ok")

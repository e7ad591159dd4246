"""
Lattice cone weights and order-preserving surjections
=====================================================

The weighted sums behind the ♮-variants hinge on two combinatorial
gadgets: the local ball fraction w(m) of the region 1/t_1 > ... > 1/t_n
at a lattice point, and the weakly order-preserving surjections that
collapse an index when summation variables collide.
"""

from fractions import Fraction

from mzvkit.indices import (
    cone_weight,
    enumerate_surjections,
    push_index,
    stabilizer_order,
    surjection_values,
)

# depth 2: three strict regions carry weight 1, the diagonal 1/2, rest 0
print("depth-2 weight table on a small box:")
for m1 in range(-3, 4):
    row = []
    for m2 in range(-3, 4):
        if m1 == 0 or m2 == 0:
            row.append("  . ")
        else:
            row.append("%4s" % cone_weight((m1, m2)))
    print("  m1=%2d:" % m1, "".join(row))

# runs of equal 1/m each contribute 1/r!
print()
print("w(3,3,3)   =", cone_weight((3, 3, 3)))
print("w(2,2,5)   =", cone_weight((2, 2, 5)))
print("w(5,2,2)   =", cone_weight((5, 2, 2)))   # 1/5 > 1/2 fails: 0
print("w(4,4,2,2) =", cone_weight((4, 4, 2, 2)))

# surjections {1..n} -> {1..m}, kept as compositions of n into m parts
print()
n = 4
total = 0
for m in range(1, n + 1):
    comps = enumerate_surjections(n, m)
    total += len(comps)
    print("n=%d m=%d: %d surjections" % (n, m, len(comps)))
print("total %d = 2^(n-1)" % total)

# each surjection collapses an index blockwise and owns a stabilizer
k = (1, 2, 1, 3)
print()
print("collapses of k =", k)
for m in range(1, n + 1):
    for comp in enumerate_surjections(n, m):
        print("  phi=%s  ->  %s   #G_phi = %d"
              % (surjection_values(comp), push_index(comp, k),
                 stabilizer_order(comp)))

# the stabilizer orders are what divide the collapsed contributions in
# the surjection-weighted finite value; weights must stay consistent
assert all(sum(push_index(c, k)) == sum(k)
           for m in range(1, n + 1) for c in enumerate_surjections(n, m))
assert cone_weight((7, 7)) == Fraction(1, 2)
print()
print("ok")

"""
Hunting rational certificates for a boundary congruence
=======================================================

For an index whose weight and depth have opposite parity, the weighted
finite value should agree with an explicit binomial-weighted boundary
expansion, up to products of lower values and terms of smaller depth.
The toolkit evaluates both sides to 60 digits, spans the allowed
correction space, and asks an integer-relation search for an exact
rational certificate.  The certificate is evidence, not a proof: the
verdict is either "confirmed" with small coefficients or "inconclusive".
"""

from mzvkit.indices import format_index
from mzvkit.relations import (
    boundary_expansion,
    check_main_congruence,
    opposite_parity_indices,
    sharp_product_defect,
    verify_contraction_congruence,
    verify_word_dual_congruence,
    word_dual_expansion,
)

# weight 3: the boundary expansion telescopes to a single zeta value and
# the congruence degenerates to an exact identity, no search needed
for k in [(2, 1), (1, 2)]:
    combo = boundary_expansion(k)
    terms = ", ".join("%s %s" % (q, format_index(i))
                      for i, q in sorted(combo.terms.items()))
    print("boundary expansion of %s: %s" % (format_index(k), terms))
assert word_dual_expansion((2, 1)) == boundary_expansion((2, 1))
print()

# weight 5 and 6 need actual corrections; the reports carry them
for k in [(1, 4), (2, 3), (2, 2, 2), (4, 1, 1)]:
    rep = check_main_congruence(k, digits=60)
    coeffs = ", ".join("%s * %s" % (q, lbl) for lbl, q in rep.coefficients)
    print("%-22s %-12s %s" % (rep.target, rep.verdict,
                              coeffs if coeffs else "(exact, no span needed)"))
    assert rep.confirmed()

# the full opposite-parity sweep below weight 7 confirms throughout
count = 0
worst = 0
for k in opposite_parity_indices(6, 3):
    rep = check_main_congruence(k, digits=60)
    assert rep.confirmed()
    count += 1
    worst = max(worst, rep.height())
print()
print("swept %d indices, all confirmed, max coefficient height %d"
      % (count, worst))

# same congruence through the dual-word form of the right-hand side
rep = verify_word_dual_congruence((2, 3), digits=60)
print()
print("dual-word form at (2,3):", rep.verdict, dict(rep.coefficients))

# a contraction-type variant ships with two readings of its right-hand
# side; only the weight-homogeneous one survives testing
reports = verify_contraction_congruence((2, 2), digits=60)
for reading, rep in sorted(reports.items()):
    print("contraction reading %-19s -> %s" % (reading, rep.verdict))

# the regularized product rule needs every later part >= 2; with that
# hypothesis the numeric defect sits at the precision floor
d = sharp_product_defect((2, 1), (2, 2), digits=60)
print()
print("product-rule defect (2,1)*(2,2):", d.to_decimal(5),
      " is_zero:", d.is_zero())
print()
print("ok")

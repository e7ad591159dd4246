"""
Two regularizations and the polynomials they produce
====================================================

Divergent indices extend to polynomials in T under either product: the
series scheme multiplies by (1) under stuffle, the integral scheme
shuffles a leading B into the word.  Constant terms differ, and the
natural scheme sits between them with half-integer corrections.
"""

from mzvkit.indices import format_index, word_of_index
from mzvkit.regularization import (
    associator_coefficient,
    natural_regularize,
    shuffle_regularize,
    stuffle_regularize,
)


def show_poly(label, poly):
    print(label)
    for j in range(poly.degree(), -1, -1):
        combo = poly.coefficient(j)
        if combo.is_zero():
            continue
        terms = ", ".join("%s %s" % (q, format_index(k))
                          for k, q in sorted(combo.terms.items()))
        print("   T^%d: %s" % (j, terms))


# zeta(1) itself becomes T in both schemes
show_poly("series reg of (1):", stuffle_regularize((1,)))
show_poly("integral reg of (1):", shuffle_regularize(word_of_index((1,))))
print()

# at (2,1) the schemes already disagree in the constant term
show_poly("series reg of (2,1):", stuffle_regularize((2, 1)))
show_poly("integral reg of (2,1):", shuffle_regularize(word_of_index((2, 1))))
print()

# the natural scheme of (1,1): T^2/2 with no constant at all
show_poly("natural reg of (1,1):", natural_regularize((1, 1)))
print()

# word coefficients of the associator; words may end in A, where the
# index dictionary has no entry but the series convention still applies
for w in ["AB", "AAB", "ABB", "BAA", "ABA"]:
    combo = associator_coefficient(w)
    terms = ", ".join("%s %s" % (q, format_index(k))
                      for k, q in sorted(combo.terms.items()))
    print("Z(%s) = %s" % (w, terms if terms else "0"))

# consistency: on B-terminated words the associator coefficient is the
# integral-scheme constant term
for k in [(2,), (3,), (1, 2), (2, 2)]:
    w = word_of_index(k)
    assert associator_coefficient(w) == \
        shuffle_regularize(w).constant_term()
print()
print("ok")

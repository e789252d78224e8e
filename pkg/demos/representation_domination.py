#!/usr/bin/env python3
"""Compare one abstract group in two permutation degrees: when does the scaled
index of every element in the second action dominate the first?

For groups of prime-power order the regular action is always dominated by any
faithful transitive action.  That breaks down already at order 54: take the
direct product of the order-27 exponent-3 group with a cyclic group of order
2, in degree 54 (regular) against degree 18."""

from galcount import (
    check_index_domination,
    cyclic_natural,
    dihedral_natural,
    direct_product,
    dual_regular_pair,
    heisenberg_mod3,
    wreath,
)

pairs = [
    ("C4: regular vs natural", cyclic_natural(4)),
    ("C9: regular vs natural", cyclic_natural(9)),
    ("D4 (order 8): regular vs degree 4", dihedral_natural(4)),
    ("2 wr C4 (order 32): regular vs degree 8", wreath(cyclic_natural(2), cyclic_natural(4))),
    ("order-27 exponent-3: regular vs degree 9", heisenberg_mod3()),
]
for name, group in pairs:
    report = check_index_domination(dual_regular_pair(group))
    print(f"{name:45} -> {'HOLDS' if report.holds else 'FAILS'}")

print()
print("The order-54 counterexample:")
product = direct_product(heisenberg_mod3(), cyclic_natural(2))
report = check_index_domination(dual_regular_pair(product))
assert not report.holds
w = report.witness
word = "*".join(f"g{j + 1}" for j in w.word)
print(f"  degree 54 regular action vs degree 18 product action -> FAILS")
print(f"  witness element: {word}")
print(f"  ind in degree 54: {w.ind1}   ind in degree 18: {w.ind2}")
print(f"  a1 = {w.a1}   a2 = {w.a2}")
print(f"  violated inequality: a2*ind2 = {w.a2 * w.ind2} < a1*ind1 = {w.a1 * w.ind1}")

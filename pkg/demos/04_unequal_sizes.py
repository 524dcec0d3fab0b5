"""
Trading faces between dice of different sizes
=============================================

Two six-sided dice can be replaced by a four-sided and a nine-sided die
with the same 36 sums -- and more generally, for any divisor a of m, by an
a-by-(m^2/a) pair.  The labels of the big die follow a closed recipe, and
a triangular-number identity explains why its face counts add up.
"""

from sicherman import (
    Die,
    check_triangular_identity,
    decompose,
    decomposition_die_labels,
    enumerate_unequal,
    sum_histogram,
    triangular,
)

# All pairs of a 4-face and a 9-face die matching two standard d6.
print("4 x 9 replacements for two six-sided dice:")
for pair in enumerate_unequal(6, 4, 9):
    print("  ", pair.left.die, "|", pair.right.die)

# The divisor decomposition keeps the small die standard: for m = 6 and
# a = 2 it pairs a plain d2 with one 18-face die.
pair = decompose(6, 2)
print("\ndecompose(6, 2):", pair.left.die, "|", pair.right.die)

# Those 18 labels are not magic.  With b = m // a, take labels
# (i-1)a+1 .. ia and their mirror images i times each for i < b, then the
# middle block m-a+1 .. m a total of b times.
recipe = decomposition_die_labels(6, 2)
print("label recipe gives:  ", recipe)
print("recipe matches:", recipe == pair.right.die)

# Sanity check by rolling: the d2 + 18-face pair hits every sum from 2 to
# 12 exactly as often as two standard d6.
standard = [Die.standard(6), Die.standard(6)]
print("histogram equal:",
      sum_histogram([pair.left.die, pair.right.die]) == sum_histogram(standard))

# The face counts of the big die are a repeated staircase 1..b..1, so its
# size is a * (T_b + T_(b-1)) where T_n = n(n+1)/2 is triangular.  That
# forces a * size == m^2, i.e. the identity T_b + T_(b-1) = b^2 in disguise.
print("\nT_3 + T_2 =", triangular(3) + triangular(2), "= 3^2")
print("identity checked structurally for every divisor of 36:",
      all(check_triangular_identity(36, a) for a in (1, 2, 3, 4, 6, 9, 12, 18, 36)))

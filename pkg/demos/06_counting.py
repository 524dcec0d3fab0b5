"""
Counting relabelings without listing them
=========================================

For prime-power sizes every exponent split survives, so the number of
relabeled dice is pure combinatorics: a binomial formula when the number
of dice is unbounded, a central-trinomial formula for two dice.  The
closed forms are checked against the actual search.
"""

from sicherman import (
    count_n_dice,
    count_two_dice_trinomial,
    count_unbounded,
    enumerate_pairs,
)

# Splitting k cyclotomic factor pairs with no bound on how many dice share
# them: C(2k-1, k-1).
print("unbounded:", [count_unbounded(k) for k in range(1, 6)])

# The same split among exactly n dice is a coefficient of a polynomial
# power, here for n = 2 and n = 3.
print("two dice: ", [count_n_dice(2, k) for k in range(1, 6)])
print("three dice:", [count_n_dice(3, k) for k in range(1, 6)])

# For two dice there is also a closed sum of binomial products (the central
# trinomial coefficients): sum over i of C(k, i) * C(k-i, i).
print("trinomial:", [count_two_dice_trinomial(k) for k in range(1, 6)])
assert all(count_n_dice(2, k) == count_two_dice_trinomial(k) for k in range(1, 9))

# Cross-check against the solver: a die of size p^k has k factor pairs to
# split, so the number of distinct dice found by enumeration must equal the
# two-dice count.
print("\nsize  distinct dice  closed form")
for m, k in ((2, 1), (4, 2), (8, 3), (16, 4), (3, 1), (9, 2)):
    dice = {side.die.labels for p in enumerate_pairs(m) for side in (p.left, p.right)}
    print(f"{m:4d}  {len(dice):13d}  {count_two_dice_trinomial(k):11d}")

# Once n >= k the per-die bound stops binding and the n-dice count settles
# at the unbounded value.
print("\nn-dice counts for k = 4:",
      [count_n_dice(n, 4) for n in range(1, 7)], "limit", count_unbounded(4))

"""
Mixed sizes, and a conjecture that fails
========================================

Matching a d2 against a d8, how many relabelings keep the sums of "one of
each" honest?  For a prime p against p^k there are exactly k ways.  For
two distinct primes, only the standard labeling survives.  It is tempting
to guess that any coprime pair of sizes is equally rigid -- but a sweep
finds counterexamples, the smallest with sizes 5 and 6.
"""

from sicherman import Die, conjecture_sweep, enumerate_mixed, sum_histogram

# Prime against prime power: k relabelings for p vs p^k.
for p, k in ((2, 1), (2, 2), (2, 3), (3, 2)):
    pairs = enumerate_mixed(p, p**k)
    print(f"sizes {p} and {p**k}: {len(pairs)} pairs")
    for pair in pairs:
        print("   ", pair.left.die, "|", pair.right.die)

# Two distinct primes: nothing but the standard dice.
print("\nsizes 7 and 11:",
      [(str(p.left.die), str(p.right.die)) for p in enumerate_mixed(7, 11)])

# Now sweep every coprime pair of sizes up to 12 and keep anything beyond
# the standard pair.
report = conjecture_sweep(12)
print(f"\ncoprime sweep to 12: {report.total_nontrivial} nontrivial pairs")
for entry in report.entries:
    for a, b in entry.nontrivial:
        print(f"  sizes {entry.sizes[0]} x {entry.sizes[1]}: "
              f"{','.join(map(str, a))} | {','.join(map(str, b))}")

# The smallest counterexample, checked by rolling all 30 combinations.
left, right = Die((1, 3, 4, 5, 7)), Die((1, 2, 2, 3, 3, 4))
standard = [Die.standard(5), Die.standard(6)]
print("\n5 x 6 counterexample matches the standard histogram:",
      sum_histogram([left, right]) == sum_histogram(standard))

# Why rigidity fails: face counts only pin the cyclotomic factors of prime
# power order (their value at x = 1 is the prime).  Factors like phi_6 or
# phi_10 have value 1 at x = 1, so once both sizes admit them they can sit
# on either die.  Sizes 5 and 6 are the first coprime pair where that
# freedom produces genuinely new dice.

"""
Why some factor splits produce no die
=====================================

For a twelve-sided die the factor-splitting constraints leave 81 candidate
exponent vectors, but only some of them expand back into polynomials with
nonnegative coefficients -- that is, into actual dice.  Each family of bad
candidates is killed by exhibiting one negative coefficient, and this
script shows those certificates and the series shortcut used to find them.
"""

from sicherman import enumerate_pairs, negative_certificates
from sicherman.solver import candidate_product, excluded_vectors, reduced_form_matches

# Sizes of the form p^2 * q (12 = 4 * 3) have three families of excluded
# splits, written as exponent vectors (c_p, c_p2, c_pq, c_p2q); the
# exponent of phi_q is forced to 1 and omitted.
print("excluded split families for p^2 q sizes:")
for vector in excluded_vectors("p2q"):
    print("  ", vector)

# A certificate names a concrete negative coefficient in the expansion of
# the candidate.  Negative coefficient means "a face with a negative count",
# which is no die at all.
print("\ncertificates for p=2, q=3:")
for cert in negative_certificates("p2q", (2, 3)):
    print(f"  vector {cert.vector}: coefficient {cert.coefficient} at x^{cert.power}")

# The same certificate, verified by brute expansion of the product.
poly = candidate_product("p2q", (2, 3), (2, 0, 1, 2))
print("\nfull expansion of the (2, 0, 1, 2) candidate:", poly.coeffs)
print("coefficient of x^3:", poly[3])

# Expanding blindly gets slow for large primes, so each family also has a
# cancelled form: a short list of (1 - x^k)^e factors whose truncated
# series product matches the direct expansion.  Negative e means a factor
# in the denominator, expanded as a geometric-style series.
print("\ncancelled series form matches direct expansion:")
for p, q in ((2, 3), (3, 2), (5, 3)):
    m = p * p * q
    ok = all(
        reduced_form_matches("p2q", (p, q), vector, 2 * m)
        for vector in excluded_vectors("p2q")
    )
    print(f"  p={p}, q={q}: {ok}")

# Three-distinct-prime sizes (30 = 2 * 3 * 5) have four excluded families,
# and after removing them exactly 13 pairs survive.
print("\ncertificates for p=2, q=3, r=5:")
for cert in negative_certificates("pqr", (2, 3, 5)):
    print(f"  vector {cert.vector}: coefficient {cert.coefficient} at x^{cert.power}")
print("\nsurviving pairs for thirty sides:", len(enumerate_pairs(30)))

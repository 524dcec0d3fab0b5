"""Enumerate relabeled dice whose sums behave like standard dice.

Two standard m-sided dice have frequency polynomial
x^2 * prod(phi_d^2 for d | m, d > 1), so any relabeling that preserves the
sum frequencies corresponds to a way of splitting the cyclotomic factors
between the two dice.  Each candidate split is an exponent vector; a split
survives when both sides expand with nonnegative coefficients.  The same
machinery handles mixed standard sizes and prescribed unequal face counts,
since only the multiset of cyclotomic factors and the per-side face-count
targets change.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .cyclotomic import CyclotomicCache, divisors, is_prime, prime_factors
from .dice import Die, die_to_poly, poly_to_die
from .polyint import IntPoly, X, one_minus_x_pow, truncated_series_product

DEFAULT_SEARCH_CAP = 10**6


class SolverError(Exception):
    pass


class InvalidTargets(SolverError):
    """Face-count targets incompatible with the frequency polynomial."""


class NotADivisor(SolverError):
    pass


class UnsupportedShape(SolverError):
    """The shortcut formulas only cover sizes p^2*q and p*q*r."""


class SearchCapExceeded(SolverError):
    """More candidate vectors than the configured cap."""


class CertificateMissing(SolverError):
    """An expected negative coefficient could not be found."""


@dataclass(frozen=True)
class Problem:
    """A sum-frequency matching problem for a pair of dice.

    `sizes` are the standard dice whose sum distribution must be matched;
    `targets` optionally prescribes different face counts for the two
    relabeled dice (their product must be sizes[0] * sizes[1]).
    """

    kind: str
    sizes: tuple[int, int]
    targets: Optional[tuple[int, int]] = None

    @classmethod
    def equal(cls, m: int) -> Problem:
        _check_size(m)
        return cls("equal", (m, m))

    @classmethod
    def mixed(cls, m1: int, m2: int) -> Problem:
        _check_size(m1)
        _check_size(m2)
        return cls("mixed", (m1, m2))

    @classmethod
    def unequal_targets(cls, m: int, s1: int, s2: int) -> Problem:
        _check_size(m)
        if s1 < 1 or s2 < 1 or s1 * s2 != m * m:
            raise InvalidTargets(f"targets {s1}x{s2} do not multiply to {m}^2")
        return cls("unequal", (m, m), (s1, s2))

    @property
    def face_counts(self) -> tuple[int, int]:
        """Sizes of the two dice being solved for."""
        return self.targets if self.targets is not None else self.sizes


def _check_size(m: int) -> None:
    if m < 1:
        raise SolverError(f"die size must be positive, got {m}")


def frequency_poly(problem: Problem) -> IntPoly:
    """Product of the standard generating polynomials of problem.sizes."""
    m1, m2 = problem.sizes
    return die_to_poly(Die.standard(m1)) * die_to_poly(Die.standard(m2))


@dataclass(frozen=True)
class ExponentVector:
    """Cyclotomic exponents of one die, as sorted (divisor, exponent) pairs.

    Every divisor that appears in the frequency polynomial is listed, so two
    vectors for the same problem always have the same key set.
    """

    entries: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, mapping: dict[int, int]) -> ExponentVector:
        return cls(tuple(sorted((int(d), int(c)) for d, c in mapping.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __getitem__(self, d: int) -> int:
        for key, c in self.entries:
            if key == d:
                return c
        return 0

    def complement(self, mults: dict[int, int]) -> ExponentVector:
        return ExponentVector.from_dict({d: mults[d] - self[d] for d in mults})


@dataclass(frozen=True)
class SolutionSide:
    die: Die
    poly: IntPoly
    vector: Optional[ExponentVector] = None


@dataclass(frozen=True)
class SolutionPair:
    left: SolutionSide
    right: SolutionSide

    @property
    def dice(self) -> tuple[Die, Die]:
        return (self.left.die, self.right.die)

    @property
    def labels(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.left.die.labels, self.right.die.labels)

    def sorted_sides(self) -> SolutionPair:
        if self.left.die.labels <= self.right.die.labels:
            return self
        return SolutionPair(self.right, self.left)


def _divisor_mults(problem: Problem) -> dict[int, int]:
    mults: dict[int, int] = {}
    for m in problem.sizes:
        for d in divisors(m):
            if d > 1:
                mults[d] = mults.get(d, 0) + 1
    return mults


def _capped_compositions(total: int, caps: Sequence[int]) -> list[tuple[int, ...]]:
    if not caps:
        return [()] if total == 0 else []
    out = []
    for first in range(min(total, caps[0]), -1, -1):
        for rest in _capped_compositions(total - first, caps[1:]):
            out.append((first,) + rest)
    return out


def _candidate_vectors(
    mults: dict[int, int], left_size: int, search_cap: int
) -> Iterator[ExponentVector]:
    """Yield every exponent split whose left side has `left_size` faces.

    The left product evaluated at x=1 is the product of p^c over prime-power
    divisors p^j with exponent c, so for each prime the slot exponents must
    sum to the multiplicity of p in left_size.  Exponents of composite
    divisors are free up to their multiplicity in the problem.
    """
    prime_slots: dict[int, list[int]] = {}
    free: list[int] = []
    for d in sorted(mults):
        f = prime_factors(d)
        if len(f) == 1:
            prime_slots.setdefault(next(iter(f)), []).append(d)
        else:
            free.append(d)

    left_factors = prime_factors(left_size)
    axes: list[list[tuple[tuple[int, ...], tuple[int, ...]]]] = []
    n_candidates = 1
    for p, slots in sorted(prime_slots.items()):
        target = left_factors.get(p, 0)
        comps = _capped_compositions(target, [mults[d] for d in slots])
        axes.append([(tuple(slots), comp) for comp in comps])
        n_candidates *= len(comps)
    for d in free:
        axes.append([((d,), (c,)) for c in range(mults[d] + 1)])
        n_candidates *= mults[d] + 1
    if n_candidates > search_cap:
        raise SearchCapExceeded(
            f"{n_candidates} candidate vectors exceed the cap of {search_cap}"
        )

    for chosen in itertools.product(*axes):
        vec: dict[int, int] = {}
        for slots, comp in chosen:
            for d, c in zip(slots, comp):
                vec[d] = c
        yield ExponentVector.from_dict(vec)


def _vector_poly(vector: ExponentVector, cache: CyclotomicCache) -> IntPoly:
    poly = X
    for d, c in vector.entries:
        if c:
            poly = poly * cache.get(d) ** c
    return poly


def _enumerate(
    problem: Problem,
    *,
    search_cap: Optional[int],
    sign_prune: bool = False,
) -> list[SolutionPair]:
    cap = DEFAULT_SEARCH_CAP if search_cap is None else search_cap
    mults = _divisor_mults(problem)
    left_size, right_size = problem.face_counts
    freq = frequency_poly(problem)
    cache = CyclotomicCache()
    symmetric = left_size == right_size

    can_prune = (
        sign_prune
        and problem.kind == "equal"
        and _shape_of(problem.sizes[0]) is not None
    )
    found: dict[tuple, SolutionPair] = {}
    for vector in _candidate_vectors(mults, left_size, cap):
        right_vector = vector.complement(mults)
        if can_prune and (
            one_minus_x_exponent(vector, problem) > 0
            or one_minus_x_exponent(right_vector, problem) > 0
        ):
            continue
        left_poly = _vector_poly(vector, cache)
        if not left_poly.is_nonnegative:
            continue
        right_poly = _vector_poly(right_vector, cache)
        if not right_poly.is_nonnegative:
            continue
        if left_poly * right_poly != freq:
            raise AssertionError(
                f"split {vector} does not multiply back to the frequency poly"
            )
        left = SolutionSide(poly_to_die(left_poly), left_poly, vector)
        right = SolutionSide(poly_to_die(right_poly), right_poly, right_vector)
        pair = SolutionPair(left, right)
        if symmetric:
            pair = pair.sorted_sides()
        found.setdefault(pair.labels, pair)
    return sorted(found.values(), key=lambda p: p.labels)


def enumerate_pairs(
    m: int, *, search_cap: Optional[int] = None, sign_prune: bool = False
) -> list[SolutionPair]:
    """All pairs of m-sided dice with standard sum frequencies.

    The standard pair is always included.  Pairs are unordered and come back
    sorted by labels, smaller die first.  `sign_prune` skips splits whose
    linear coefficient is provably negative; it changes nothing but speed
    and only applies to sizes of shape p^2*q or p*q*r.
    """
    return _enumerate(Problem.equal(m), search_cap=search_cap, sign_prune=sign_prune)


def enumerate_mixed(
    m1: int, m2: int, *, search_cap: Optional[int] = None
) -> list[SolutionPair]:
    """Pairs matching the sums of standard m1- and m2-sided dice.

    The left die of every returned pair has m1 faces.
    """
    return _enumerate(Problem.mixed(m1, m2), search_cap=search_cap)


def enumerate_unequal(
    m: int, s1: int, s2: int, *, search_cap: Optional[int] = None
) -> list[SolutionPair]:
    """Pairs with s1 and s2 faces matching two standard m-sided dice.

    Requires s1 * s2 == m * m; the left die of every pair has s1 faces.
    """
    return _enumerate(Problem.unequal_targets(m, s1, s2), search_cap=search_cap)


def solve(problem: Problem, *, search_cap: Optional[int] = None) -> list[SolutionPair]:
    return _enumerate(problem, search_cap=search_cap)


# -- explicit decomposition for one divisor ---------------------------------


def decompose(m: int, a: int) -> SolutionPair:
    """The pair with a and m^2/a faces built from one divisor a of m.

    The left die is the standard a-sided die; the right die expands
    x(x^m-1)^2 / ((x^a-1)(x-1)), which always has nonnegative coefficients.
    Together they reproduce the sums of two standard m-sided dice.
    """
    if a < 1 or m % a:
        raise NotADivisor(f"{a} does not divide {m}")
    freq = frequency_poly(Problem.equal(m))
    small_die = Die.standard(a)
    small = die_to_poly(small_die)
    big = freq.div_exact(small)
    if not big.is_nonnegative:
        raise AssertionError(f"divisor {a} of {m} gave a negative expansion")
    mults = {d: 2 for d in divisors(m) if d > 1}
    left_vector = ExponentVector.from_dict(
        {d: (1 if a % d == 0 else 0) for d in mults}
    )
    return SolutionPair(
        SolutionSide(small_die, small, left_vector),
        SolutionSide(poly_to_die(big), big, left_vector.complement(mults)),
    )


def decomposition_die_labels(m: int, a: int) -> Die:
    """Closed-form labels of the large die in `decompose(m, a)`.

    With b = m // a, the labels come from 1..2m-a: for each i < b the numbers
    (i-1)a+1 .. ia and 2m-(i+1)a+1 .. 2m-ia appear i times, and the middle
    block m-a+1 .. m appears b times.
    """
    if a < 1 or m % a:
        raise NotADivisor(f"{a} does not divide {m}")
    b = m // a
    labels: list[int] = []
    for i in range(1, b):
        for v in range((i - 1) * a + 1, i * a + 1):
            labels.extend([v] * i)
        for v in range(2 * m - (i + 1) * a + 1, 2 * m - i * a + 1):
            labels.extend([v] * i)
    for v in range(m - a + 1, m + 1):
        labels.extend([v] * b)
    return Die(tuple(labels))


# -- sign shortcut and exclusion certificates -------------------------------


def _shape_of(m: int) -> Optional[str]:
    exps = sorted(prime_factors(m).values())
    if exps == [1, 2]:
        return "p2q"
    if exps == [1, 1, 1]:
        return "pqr"
    return None


def one_minus_x_exponent(vector: ExponentVector, problem: Problem) -> int:
    """Net exponent of (1-x) in the reduced product form of one side.

    Writing each cyclotomic factor as a ratio of terms x^d - 1 contributes
    mobius(d) copies of (1-x) per phi_d; the negated total is the linear
    coefficient of the product, so a positive exponent certifies a negative
    coefficient.  Only sizes p^2*q and p*q*r are supported.
    """
    m = problem.sizes[0]
    shape = _shape_of(m)
    if shape is None or problem.kind != "equal":
        raise UnsupportedShape(f"no (1-x) shortcut for {problem}")
    factors = prime_factors(m)
    if shape == "p2q":
        p = next(t for t, e in factors.items() if e == 2)
        q = next(t for t, e in factors.items() if e == 1)
        return vector[p * q] - vector[p] - 1
    p, q, r = sorted(factors)
    return (
        vector[p * q]
        + vector[p * r]
        + vector[q * r]
        - vector[p * q * r]
        - 3
    )


# Splits that pass the per-prime face-count constraints but expand with a
# negative coefficient.  For size p^2*q the vector lists exponents of
# (phi_p, phi_p2, phi_pq, phi_p2q) with phi_q fixed at 1; for p*q*r it lists
# (phi_pq, phi_pr, phi_qr, phi_pqr) with phi_p, phi_q, phi_r fixed at 1.
EXCLUDED_P2Q = ((1, 1, 0, 2), (2, 0, 2, 2), (2, 0, 1, 2))
EXCLUDED_PQR = ((0, 2, 2, 2), (0, 1, 2, 2), (2, 0, 0, 1), (1, 1, 1, 2))

# Reduced series forms of the same products: (size key, exponent) pairs where
# each factor is (1 - x^size)^exponent and negative exponents are expanded as
# geometric series.  All shared factors have been cancelled.
_SERIES_P2Q = {
    (1, 1, 0, 2): (("q", 1), ("p", 2), ("p2q", 2), ("1", -2), ("p2", -1), ("pq", -2)),
    (2, 0, 2, 2): (("p", 2), ("p2q", 2), ("1", -1), ("q", -1), ("p2", -2)),
    (2, 0, 1, 2): (("p", 3), ("p2q", 2), ("1", -2), ("p2", -2), ("pq", -1)),
}
_SERIES_PQR = {
    (0, 2, 2, 2): (("p", 1), ("q", 1), ("pqr", 2), ("1", -1), ("r", -1), ("pq", -2)),
    (0, 1, 2, 2): (("p", 2), ("q", 1), ("pqr", 2), ("1", -2), ("pr", -1), ("pq", -2)),
    (2, 0, 0, 1): (("r", 2), ("pq", 1), ("pqr", 1), ("1", -2), ("pr", -1), ("qr", -1)),
    (1, 1, 1, 2): (
        ("p", 1),
        ("q", 1),
        ("r", 1),
        ("pqr", 2),
        ("1", -2),
        ("pq", -1),
        ("pr", -1),
        ("qr", -1),
    ),
}


@dataclass(frozen=True)
class Certificate:
    """A negative coefficient excluding one candidate split."""

    case: str
    primes: tuple[int, ...]
    vector: tuple[int, ...]
    power: int
    coefficient: int


def _check_primes(case: str, primes: Sequence[int]) -> tuple[int, ...]:
    want = {"p2q": 2, "pqr": 3}.get(case)
    if want is None:
        raise UnsupportedShape(f"unknown case {case!r}")
    primes = tuple(primes)
    if len(primes) != want or len(set(primes)) != want:
        raise SolverError(f"case {case} needs {want} distinct primes, got {primes}")
    for p in primes:
        if not is_prime(p):
            raise SolverError(f"{p} is not prime")
    return primes


def _size_table(case: str, primes: Sequence[int]) -> dict[str, int]:
    if case == "p2q":
        p, q = primes
        return {"1": 1, "p": p, "q": q, "p2": p * p, "pq": p * q, "p2q": p * p * q}
    p, q, r = primes
    return {
        "1": 1,
        "p": p,
        "q": q,
        "r": r,
        "pq": p * q,
        "pr": p * r,
        "qr": q * r,
        "pqr": p * q * r,
    }


def excluded_vectors(case: str) -> tuple[tuple[int, ...], ...]:
    if case == "p2q":
        return EXCLUDED_P2Q
    if case == "pqr":
        return EXCLUDED_PQR
    raise UnsupportedShape(f"unknown case {case!r}")


def candidate_product(
    case: str,
    primes: Sequence[int],
    vector: Sequence[int],
    cache: Optional[CyclotomicCache] = None,
) -> IntPoly:
    """Direct cyclotomic expansion of one candidate split, without the
    leading x, so the constant term is 1."""
    primes = _check_primes(case, primes)
    cache = cache or CyclotomicCache()
    sizes = _size_table(case, primes)
    if case == "p2q":
        fixed = ("q",)
        keys = ("p", "p2", "pq", "p2q")
    else:
        fixed = ("p", "q", "r")
        keys = ("pq", "pr", "qr", "pqr")
    poly = IntPoly((1,))
    for key in fixed:
        poly = poly * cache.get(sizes[key])
    for key, c in zip(keys, vector):
        if c:
            poly = poly * cache.get(sizes[key]) ** c
    return poly


def reduced_series_form(
    case: str, primes: Sequence[int], vector: Sequence[int]
) -> list[tuple[IntPoly, int]]:
    """The cancelled (1 - x^k)^e factor list for one excluded split."""
    primes = _check_primes(case, primes)
    table = _SERIES_P2Q if case == "p2q" else _SERIES_PQR
    try:
        form = table[tuple(vector)]
    except KeyError:
        raise CertificateMissing(
            f"no tabulated series form for {case} vector {tuple(vector)}"
        ) from None
    sizes = _size_table(case, primes)
    return [(one_minus_x_pow(sizes[key]), e) for key, e in form]


def reduced_form_matches(
    case: str, primes: Sequence[int], vector: Sequence[int], limit: int
) -> bool:
    """Check the series form against the direct expansion up to `limit`."""
    direct = candidate_product(case, primes, vector)
    series = truncated_series_product(reduced_series_form(case, primes, vector), limit)
    if limit >= direct.degree:
        return series == direct
    return series.coeffs == direct.coeffs[: limit + 1]


def negative_certificates(case: str, primes: Sequence[int]) -> list[Certificate]:
    """Locate the first negative coefficient of every excluded split.

    Raises CertificateMissing if any expected negative coefficient is
    absent; with valid distinct primes this never happens.
    """
    primes = _check_primes(case, primes)
    cache = CyclotomicCache()
    out = []
    for vector in excluded_vectors(case):
        poly = candidate_product(case, primes, vector, cache)
        witness = poly.first_negative()
        if witness is None:
            raise CertificateMissing(
                f"{case} split {vector} at primes {primes} is nonnegative"
            )
        out.append(Certificate(case, primes, vector, witness[0], witness[1]))
    return out

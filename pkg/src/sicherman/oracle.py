"""Brute-force cross-checks that avoid cyclotomic factorization entirely.

`brute_force_pairs` searches over label multisets directly: labels are
assigned value by value, and the running sum-frequency table both forces
the number of faces carrying each value and prunes dead branches.  Nothing
here knows about polynomial factors, so agreement with the solver is a
meaningful check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .dice import Die, sum_histogram
from .solver import enumerate_mixed


class BudgetExceeded(Exception):
    """The node budget ran out before the search finished."""


@dataclass(frozen=True)
class SearchConfig:
    max_label: Optional[int] = None  # defaults to 2m - 1
    max_nodes: int = 2_000_000


def verify_pair_against_standard(die1: Die, die2: Die, m: int) -> bool:
    """Face-enumeration check of a pair against two standard m-sided dice."""
    return sum_histogram([die1, die2]) == sum_histogram(
        [Die.standard(m), Die.standard(m)]
    )


def brute_force_pairs(
    m: int, config: Optional[SearchConfig] = None
) -> list[tuple[Die, Die]]:
    """All pairs of m-face dice whose sums match two standard m-sided dice.

    Both dice must carry a 1 (the unique way to reach sum 2), and from there
    the frequency of each partial sum forces how many faces of each value
    the two dice hold together.  Labels run up to config.max_label, default
    2m - 1, which is the largest label any solution can use.  Raises
    BudgetExceeded when more than config.max_nodes assignments are tried.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    cfg = config or SearchConfig()
    max_label = cfg.max_label if cfg.max_label is not None else 2 * m - 1
    if max_label < 1:
        raise ValueError("max_label must be at least 1")

    top = 2 * max_label
    want = [0] * (top + 1)
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if a + b <= top:
                want[a + b] += 1
    if sum(want) != m * m:
        return []  # max_label too small to reach every standard sum

    conv = [0] * (top + 1)
    conv[2] = 1  # the forced 1-faces
    mult_a = [0] * (max_label + 1)
    mult_b = [0] * (max_label + 1)
    mult_a[1] = mult_b[1] = 1
    applied: list[list[tuple[int, int]]] = [[] for _ in range(max_label + 1)]
    nodes = 0
    found: dict[tuple, tuple[Die, Die]] = {}

    def emit() -> None:
        if conv != want:
            return
        labels_a, labels_b = [], []
        for v in range(1, max_label + 1):
            labels_a.extend([v] * mult_a[v])
            labels_b.extend([v] * mult_b[v])
        pair = (Die(tuple(labels_a)), Die(tuple(labels_b)))
        if pair[1].labels < pair[0].labels:
            pair = (pair[1], pair[0])
        if not verify_pair_against_standard(pair[0], pair[1], m):
            raise AssertionError(f"search produced a bad pair {pair}")
        found.setdefault((pair[0].labels, pair[1].labels), pair)

    def place(v: int, da: int, db: int) -> bool:
        """Add faces and update conv; undo and return False on overflow."""
        deltas = []
        for u in range(1, v):
            delta = da * mult_b[u] + mult_a[u] * db
            if delta:
                deltas.append((v + u, delta))
        if da and db:
            deltas.append((2 * v, da * db))
        ok = True
        for s, delta in deltas:
            conv[s] += delta
            if conv[s] > want[s]:
                ok = False
        if not ok:
            for s, delta in deltas:
                conv[s] -= delta
            return False
        mult_a[v] = da
        mult_b[v] = db
        applied[v] = deltas
        return True

    def unplace(v: int) -> None:
        for s, delta in applied[v]:
            conv[s] -= delta
        applied[v] = []
        mult_a[v] = mult_b[v] = 0

    def search(v: int, count_a: int, count_b: int) -> None:
        nonlocal nodes
        if count_a == m and count_b == m:
            emit()
            return
        if v > max_label:
            return
        t = want[v + 1] - conv[v + 1]
        if t < 0:
            return
        hi = min(t, m - count_a)
        lo = max(0, t - (m - count_b))
        for da in range(hi, lo - 1, -1):
            db = t - da
            nodes += 1
            if nodes > cfg.max_nodes:
                raise BudgetExceeded(f"more than {cfg.max_nodes} nodes at size {m}")
            if place(v, da, db):
                search(v + 1, count_a + da, count_b + db)
                unplace(v)

    if m == 1:
        emit()
    else:
        search(2, 1, 1)
    return sorted(found.values(), key=lambda pair: (pair[0].labels, pair[1].labels))


@dataclass(frozen=True)
class SweepEntry:
    sizes: tuple[int, int]
    pair_count: int
    nontrivial: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


@dataclass(frozen=True)
class SweepReport:
    bound: int
    entries: tuple[SweepEntry, ...]

    @property
    def total_nontrivial(self) -> int:
        return sum(len(e.nontrivial) for e in self.entries)


def conjecture_sweep(bound: int) -> SweepReport:
    """Scan coprime size pairs r < s <= bound for nonstandard relabelings.

    For every coprime pair the solver is run on the mixed problem; any pair
    of dice besides the two standard ones is recorded as nontrivial.  The
    expectation is that none exist.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    entries = []
    for r in range(2, bound + 1):
        for s in range(r + 1, bound + 1):
            if math.gcd(r, s) != 1:
                continue
            pairs = enumerate_mixed(r, s)
            standard = (Die.standard(r).labels, Die.standard(s).labels)
            nontrivial = tuple(
                p.labels for p in pairs if p.labels != standard
            )
            entries.append(SweepEntry((r, s), len(pairs), nontrivial))
    return SweepReport(bound, tuple(entries))

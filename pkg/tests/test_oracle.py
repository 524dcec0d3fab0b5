"""Brute-force search, and the sweep that probes the coprime-sizes guess."""

import pytest

from sicherman.dice import Die, sum_histogram
from sicherman.oracle import (
    BudgetExceeded,
    SearchConfig,
    brute_force_pairs,
    conjecture_sweep,
    verify_pair_against_standard,
)
from sicherman.solver import enumerate_pairs


def test_verify_pair_against_standard():
    assert verify_pair_against_standard(
        Die.from_text("1,2,2,3,3,4"), Die.from_text("1,3,4,5,6,8"), 6
    )
    assert verify_pair_against_standard(Die.standard(6), Die.standard(6), 6)
    assert not verify_pair_against_standard(
        Die.from_text("1,2,2,3,3,4"), Die.standard(6), 6
    )


def test_brute_force_smallest():
    assert brute_force_pairs(1) == [(Die((1,)), Die((1,)))]
    assert brute_force_pairs(2) == [(Die((1, 2)), Die((1, 2)))]


def test_brute_force_four():
    pairs = brute_force_pairs(4)
    assert [(a.labels, b.labels) for a, b in pairs] == [
        ((1, 2, 2, 3), (1, 3, 3, 5)),
        ((1, 2, 3, 4), (1, 2, 3, 4)),
    ]


def test_brute_force_matches_solver():
    for m in range(1, 7):
        brute = {(a.labels, b.labels) for a, b in brute_force_pairs(m)}
        assert brute == {p.labels for p in enumerate_pairs(m)}


def test_max_label_restricts_solutions():
    # labels capped at m leave only the standard pair
    pairs = brute_force_pairs(4, SearchConfig(max_label=4))
    assert [(a.labels, b.labels) for a, b in pairs] == [((1, 2, 3, 4), (1, 2, 3, 4))]
    # too small to reach the large sums at all
    assert brute_force_pairs(4, SearchConfig(max_label=2)) == []


def test_node_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_pairs(9, SearchConfig(max_nodes=5))


def test_sweep_covers_coprime_pairs_only():
    report = conjecture_sweep(8)
    sizes = [e.sizes for e in report.entries]
    assert (2, 3) in sizes and (3, 8) in sizes
    assert (4, 8) not in sizes and (6, 8) not in sizes
    assert all(r < s for r, s in sizes)


def test_sweep_prime_pairs_are_trivial():
    report = conjecture_sweep(7)
    by_sizes = {e.sizes: e for e in report.entries}
    assert by_sizes[(2, 3)].nontrivial == ()
    assert by_sizes[(5, 7)].nontrivial == ()
    assert by_sizes[(2, 3)].pair_count == 1


def test_sweep_finds_coprime_counterexamples():
    # the guess that coprime sizes admit only the standard labeling fails:
    # moving a phi_d with composite non-prime-power d across the pair can
    # leave both sides nonnegative.  (5,6) and (6,7) are the smallest cases.
    report = conjecture_sweep(7)
    by_sizes = {e.sizes: e for e in report.entries}
    assert ((1, 3, 4, 5, 7), (1, 2, 2, 3, 3, 4)) in by_sizes[(5, 6)].nontrivial
    assert ((1, 2, 2, 3, 3, 4), (1, 3, 4, 5, 6, 7, 9)) in by_sizes[(6, 7)].nontrivial
    for entry in report.entries:
        r, s = entry.sizes
        standard = sum_histogram([Die.standard(r), Die.standard(s)])
        for la, lb in entry.nontrivial:
            assert sum_histogram([Die(la), Die(lb)]) == standard
            assert (len(la), len(lb)) == (r, s)


def test_sweep_bound_twelve_count():
    assert conjecture_sweep(12).total_nontrivial == 14

##
## universal chain test suite
##

import pytest

from orbisnake.snake import enumerate_matchings, matching_sum, matching_poset
from orbisnake.universal import (build_ug, generic_labels, mg_matrix,
                                 partitioned_sums, weighted_sum_via_matrices)


def height_subset(poset, m):
    """Tiles enclosed by a matching, read off its height monomial."""
    h = poset.heights[m]
    if h.is_one():
        return frozenset()
    (mono, _c), = h.terms.items()
    assert all(e == 1 for _v, e in mono), "Boolean heights are squarefree"
    return frozenset(v for v, _e in mono)


@pytest.mark.parametrize("n", range(1, 11))
def test_matching_count_is_2_to_n(n):
    chain = build_ug(n)
    assert len(enumerate_matchings(chain)) == 2 ** n


@pytest.mark.parametrize("n", range(1, 11))
def test_poset_is_boolean_lattice(n):
    chain = build_ug(n)
    poset = matching_poset(chain)
    subsets = {m: height_subset(poset, m) for m in poset.nodes}

    # the height map is a bijection onto the power set of the tile y-vars
    universe = set().union(*subsets.values()) if n > 0 else set()
    assert len(universe) == n
    assert len(set(subsets.values())) == 2 ** n

    # covers add exactly one element, and every one-element extension occurs
    assert len(poset.covers) == n * 2 ** (n - 1)
    for lo, hi, _tile in poset.covers:
        diff = subsets[hi] - subsets[lo]
        assert len(diff) == 1 and subsets[lo] < subsets[hi]

    # rank sizes are binomial
    from math import comb
    for k in range(n + 1):
        assert sum(1 for s in subsets.values() if len(s) == k) == comb(n, k)


@pytest.mark.parametrize("n", range(1, 8))
def test_matrix_entries_are_partitioned_sums(n):
    chain = build_ug(n)
    assert partitioned_sums(chain) == mg_matrix(chain)


@pytest.mark.parametrize("n", range(1, 8))
def test_open_chain_upper_right_formula(n):
    chain = build_ug(n)
    assert weighted_sum_via_matrices(chain) == matching_sum(chain)


@pytest.mark.parametrize("n", range(2, 8))
@pytest.mark.parametrize("mode", ["az", "bw"])
def test_band_trace_formula(n, mode):
    chain = build_ug(n, band=mode)
    assert weighted_sum_via_matrices(chain) == matching_sum(chain)


def test_zeroed_diagonals_specialize():
    # deleting one diagonal per transition keeps the formulas consistent
    for zero_a, zero_b in [((1,), ()), ((), (1,)), ((1,), (2,))]:
        labels = generic_labels(3, zero_a=zero_a, zero_b=zero_b)
        chain = build_ug(3, labels=labels)
        assert weighted_sum_via_matrices(chain) == matching_sum(chain)


def test_minimal_and_maximal_are_extreme():
    chain = build_ug(4)
    poset = matching_poset(chain)
    sizes = sorted(len(height_subset(poset, m)) for m in poset.nodes)
    assert sizes[0] == 0 and sizes[-1] == 4

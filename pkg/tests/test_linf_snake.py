"""Chebyshev-metric snakes built from parity blocks, plus their enumeration."""

import pytest

from permsnake.code_model import expand, verify_snake
from permsnake.linf_snake import (
    MAX_LINF_N,
    MIN_LINF_N,
    VARIANTS,
    build_block,
    build_linf_snake,
    linf_size,
    rank_inf,
    successor_inf,
    unrank_inf,
)
from permsnake.perm_core import linf_distance, push_top


def test_build_block_two_element_example():
    assert expand(build_block((1, 2, 4, 3), 2)) == (
        (1, 2, 4, 3),
        (4, 1, 2, 3),
        (2, 4, 1, 3),
    )


def test_build_block_three_element_example():
    words = expand(build_block((1, 2, 4, 6, 3, 5), 3))
    assert words == (
        (1, 2, 4, 6, 3, 5),
        (6, 1, 2, 4, 3, 5),
        (4, 6, 1, 2, 3, 5),
        (2, 4, 6, 1, 3, 5),
        (4, 2, 6, 1, 3, 5),
    )
    # block length is n_block + (n_block - 1)!
    assert len(words) == 3 + 2


def test_build_block_rejects_mixed_parity():
    with pytest.raises(ValueError):
        build_block((1, 2, 3, 4), 2)
    with pytest.raises(ValueError):
        build_block((2, 4, 6, 1, 3, 5), 3)


def test_sizes_both_variants():
    assert [linf_size(n) for n in range(4, 11)] == [6, 18, 30, 120, 240, 1200, 3480]
    assert [linf_size(n, "even-top") for n in range(4, 11)] == [
        6, 10, 30, 60, 240, 696, 3480,
    ]


def test_even_top_strictly_smaller_for_odd_n():
    for n in (5, 7, 9):
        assert linf_size(n, "even-top") < linf_size(n)
    for n in (4, 6, 8, 10):
        assert linf_size(n, "even-top") == linf_size(n)


def test_pinned_length_four_expansion():
    words = expand(build_linf_snake(4))
    assert words == (
        (1, 2, 4, 3),
        (4, 1, 2, 3),
        (2, 4, 1, 3),
        (3, 2, 4, 1),
        (4, 3, 2, 1),
        (2, 4, 3, 1),
    )


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("n", range(MIN_LINF_N, 8))
def test_codes_verify_with_min_distance_two(n, variant):
    code = build_linf_snake(n, variant)
    assert code.cyclic
    report = verify_snake(code, "linf")
    assert report.valid
    assert report.min_pairwise_distance == 2
    assert code.size == linf_size(n, variant)


@pytest.mark.parametrize("n", [8, 9, 10])
def test_large_codes_already_verified_at_build_time(n):
    # build_linf_snake verifies internally (force=True); expanding is enough here
    code = build_linf_snake(n)
    assert len(set(expand(code))) == linf_size(n)


def test_consecutive_words_at_linf_distance_at_least_two():
    words = expand(build_linf_snake(6))
    M = len(words)
    for i in range(M):
        assert linf_distance(words[i], words[(i + 1) % M]) >= 2


def test_successor_example():
    assert successor_inf((1, 2, 4, 3)) == 3


@pytest.mark.parametrize("n", range(MIN_LINF_N, 8))
def test_successor_walks_the_whole_cycle(n):
    code = build_linf_snake(n)
    words = expand(code)
    M = len(words)
    for r, w in enumerate(words):
        t = successor_inf(w)
        assert t == code.transitions[r]
        assert push_top(t, w) == words[(r + 1) % M]


@pytest.mark.parametrize("n", range(MIN_LINF_N, 8))
def test_rank_and_unrank_are_mutually_inverse(n):
    words = expand(build_linf_snake(n))
    for r, w in enumerate(words):
        assert rank_inf(w) == r
        assert unrank_inf(n, r) == w


def test_rank_rejects_non_codewords():
    with pytest.raises(ValueError):
        rank_inf((2, 1, 3, 4))
    with pytest.raises(ValueError):
        rank_inf((1, 3, 2, 4))


def test_unrank_rejects_out_of_range():
    with pytest.raises(ValueError):
        unrank_inf(4, 6)
    with pytest.raises(ValueError):
        unrank_inf(4, -1)


def test_block_boundaries_push_full_length():
    # the glue step leaving each block pushes from the far end of the word
    n = 6
    code = build_linf_snake(n)
    q = n // 2
    block = q + 2  # q rotations plus the inner two-element walk
    for b in range(code.size // block):
        glue = code.transitions[b * block + block - 1]
        assert glue >= n - 1


def test_rejects_out_of_range_length():
    with pytest.raises(ValueError):
        build_linf_snake(MIN_LINF_N - 1)
    with pytest.raises(ValueError):
        build_linf_snake(MAX_LINF_N + 1)
    with pytest.raises(ValueError):
        build_linf_snake(6, "sideways")

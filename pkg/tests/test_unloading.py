import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fatbounds.averaged import roe_r
from fatbounds.unloading import (
    BlockVector,
    block_trace,
    dot_unload,
    format_trace,
    g_step,
    q_step,
    rectify,
    roe_R_block,
    roe_R_naive,
    run_routine,
    solve_t,
    sort_tail,
    unload_vector,
)


@pytest.mark.parametrize(
    "w, expected",
    [((2, 0, 0, 1), (2, 1, 0, 0)), ((5, 3, 3, 3), (5, 3, 3, 3)), ((1, 0, 2), (1, 2, 0))],
)
def test_sort_tail(w, expected):
    assert sort_tail(w) == expected


@pytest.mark.parametrize("w, expected", [((2, -1, 0), (2, 0, 0)), ((3, 1, 1), (3, 1, 1)), ((0, -2, -2), (0, 0, 0))])
def test_rectify(w, expected):
    assert rectify(w) == expected


def test_unload_vector_shape():
    assert unload_vector(2, 5) == (1, -1, -1, 0, 0)
    w = (7, 3, 2, 2, 1)
    assert dot_unload(w, 3) == sum(a * b for a, b in zip(w, unload_vector(3, 5))) == 0


@pytest.mark.parametrize(
    "w, i, expected",
    [((1, 1, 1), 2, (2, 0, 0)), ((3, 1, 1), 2, (3, 1, 1)), ((2, 1, 1, 1), 3, (3, 0, 0, 0))],
)
def test_q_step(w, i, expected):
    assert q_step(w, i) == expected


def test_q_step_index_range():
    with pytest.raises(ValueError):
        q_step((1, 1, 1), 3)
    with pytest.raises(ValueError):
        q_step((1, 1, 1), 1)


@pytest.mark.parametrize(
    "w, i, expected",
    [((1, 1, 1, 1), 2, (2, 1, 0, 0)), ((3, 2, 1, 1), 3, (4, 1, 0, 0)), ((4, 1, 0, 0), 3, (4, 1, 0, 0))],
)
def test_g_step(w, i, expected):
    assert g_step(w, i) == expected


@pytest.mark.parametrize(
    "w, i, expected",
    [((1, 1, 1), 2, ((2, 0, 0), 1)), ((2, 2, 2, 2), 2, ((3, 2, 1, 1), 1)), ((3, 1, 1), 2, ((3, 1, 1), 0))],
)
def test_run_routine(w, i, expected):
    assert run_routine(w, i) == expected


@pytest.mark.parametrize("m, n, expected", [(1, 3, 2), (2, 3, 3), (2, 4, 4)])
def test_roe_R_small(m, n, expected):
    assert roe_R_naive(m, n)[0] == expected
    assert roe_R_block(m, n)[0] == expected


@pytest.mark.parametrize(
    "i, R, S, n, expected",
    [(2, 1, 2, 3, 1), (2, 3, 2, 3, 0), (3, 3, 4, 4, 1)],
)
def test_solve_t(i, R, S, n, expected):
    assert solve_t(i, R, S, n) == expected


def test_R_10_100_near_observation():
    R = roe_R_block(10, 100)[0]
    assert 100 <= R <= 102


def test_naive_table_small_grid():
    # rows n = 3..10, columns m = 1..5; the first rows checked by hand
    expected = [
        [2, 3, 4, 6, 7],
        [2, 4, 5, 7, 9],
        [2, 4, 6, 8, 10],
        [3, 5, 7, 9, 11],
        [3, 5, 8, 10, 12],
        [3, 6, 8, 11, 13],
        [3, 6, 9, 12, 14],
        [4, 7, 9, 12, 15],
    ]
    got = [[roe_R_naive(m, n)[0] for m in range(1, 6)] for n in range(3, 11)]
    assert got == expected


def test_engines_agree_exhaustive_small():
    for n in range(3, 26):
        for m in range(1, 16):
            assert roe_R_naive(m, n)[0] == roe_R_block(m, n)[0], (m, n)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60), st.integers(3, 120))
def test_engines_agree_random(m, n):
    assert roe_R_naive(m, n)[0] == roe_R_block(m, n)[0]


def test_block_trace_matches_naive_trace():
    for n in range(3, 20):
        for m in range(1, 9):
            naive = roe_R_naive(m, n, want_trace=True)[1]
            assert format_trace(naive) == format_trace(block_trace(m, n)), (m, n)


def test_trace_golden():
    trace = roe_R_naive(2, 4, want_trace=True)[1]
    assert format_trace(trace).splitlines() == [
        "i=2 j=0 R=2 S=6 w=(2;2^3,1^0)",
        "i=2 j=1 R=3 S=4 w=(3;2^1,1^2)",
        "i=3 j=0 R=3 S=4 w=(3;2^1,1^2)",
        "i=3 j=1 R=4 S=1 w=(4;1^1,0^2)",
    ]


def test_trace_first_entry_strictly_increases_within_routine():
    trace = roe_R_naive(7, 30, want_trace=True)[1]
    for a, b in zip(trace, trace[1:]):
        if a.i == b.i:
            assert b.j == a.j + 1 and b.R > a.R


def _walk(m, n):
    """Every vector visited by the naive engine, with the pre-rectify sum."""
    w = (m,) * n
    for i in range(2, n):
        while True:
            w = sort_tail(w)
            if dot_unload(w, i) >= 0:
                break
            raw = tuple(a + b for a, b in zip(w, unload_vector(i, n)))
            yield i, w, raw
            w = sort_tail(rectify(raw))
    yield n - 1, w, w


def test_no_clipping_and_block_closure():
    for n in range(3, 30):
        for m in range(1, 12):
            for _, w, raw in _walk(m, n):
                assert rectify(raw) == raw, (m, n, raw)
                tail = w[1:]
                assert max(tail) - min(tail) <= 1
                assert BlockVector.from_vector(w).expand() == w


def test_block_vector_roundtrip():
    v = BlockVector(5, 3, 2, 6)
    assert v.expand() == (5, 3, 3, 2, 2, 2)
    assert v.tail_sum == (6 - 1) * (3 - 1) + 2 == sum(v.expand()[1:])
    assert BlockVector.from_vector(v.expand()).expand() == v.expand()
    assert BlockVector.from_vector((5, 1, 3, 2)) is None
    assert BlockVector.from_vector((5, 3, 1, 1)) is None


def test_state_identities():
    rng = random.Random(7)
    for _ in range(200):
        m, n = rng.randint(1, 40), rng.randint(3, 150)
        R, states = roe_R_block(m, n)
        assert states[0].R == m and states[0].S == (n - 1) * m
        assert states[-1].R == R
        for prev, cur in zip(states, states[1:]):
            i = cur.i
            assert cur.R + Fraction(cur.S, i) == prev.R + Fraction(prev.S, i)
            assert cur.R >= prev.R and cur.S <= prev.S and cur.S >= 0
            assert cur.rho == cur.S % (n - 1)


def test_R_upper_bound_by_averaged_constant():
    for n in range(3, 40):
        r = roe_r(n)
        for m in range(1, 25):
            R = roe_R_block(m, n)[0]
            assert R <= m * r + 2 * (n - 1)
            # the averaged value is a lower bound for R
            assert R >= m * r


def test_bad_arguments():
    with pytest.raises(ValueError):
        roe_R_block(1, 2)
    with pytest.raises(ValueError):
        roe_R_naive(0, 5)

"""Roé's unloading algorithm for R(m, n).

Two engines compute the same number:

* the naive engine rewrites the full multiplicity vector, applying
  ``g_i = p q_i p`` until it stabilizes, for i = 2, ..., n-1;
* the block engine tracks only the first entry R and the tail sum S. From a
  uniform start the tail always takes at most two adjacent values, so (R, S)
  determines the whole vector.

Trace lines share one text format across engines::

    i=<routine> j=<step> R=<first> S=<tailsum> w=(a;b^c,(b-1)^(n-1-c))
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

MultVector = tuple[int, ...]


@dataclass(frozen=True)
class BlockVector:
    """v(a, b, c, n): first entry a, then c entries b and n-1-c entries b-1."""

    a: int
    b: int
    c: int
    n: int

    @classmethod
    def from_tail_sum(cls, a: int, S: int, n: int) -> "BlockVector":
        k = n - 1
        b = -(-S // k)
        return cls(a, b, S - k * (b - 1), n)

    @classmethod
    def from_vector(cls, w: Sequence[int]) -> Optional["BlockVector"]:
        """Block form of ``w`` if its tail is sorted and balanced, else None."""
        n = len(w)
        tail = list(w[1:])
        if any(x < y for x, y in zip(tail, tail[1:])) or tail[0] - tail[-1] > 1:
            return None
        return cls.from_tail_sum(w[0], sum(tail), n)

    @property
    def tail_sum(self) -> int:
        return (self.n - 1) * (self.b - 1) + self.c

    def expand(self) -> MultVector:
        return (self.a,) + (self.b,) * self.c + (self.b - 1,) * (self.n - 1 - self.c)

    def render(self) -> str:
        return f"({self.a};{self.b}^{self.c},{self.b - 1}^{self.n - 1 - self.c})"


@dataclass(frozen=True)
class RoeState:
    """State after routine ``i``: first entry R, tail sum S, and S mod (n-1)."""

    i: int
    R: int
    S: int
    rho: int


@dataclass(frozen=True)
class TraceStep:
    i: int
    j: int
    vector: MultVector

    @property
    def R(self) -> int:
        return self.vector[0]

    @property
    def S(self) -> int:
        return sum(self.vector[1:])

    def render(self) -> str:
        block = BlockVector.from_vector(self.vector)
        w = block.render() if block is not None else "(" + ",".join(map(str, self.vector)) + ")"
        return f"i={self.i} j={self.j} R={self.R} S={self.S} w={w}"


UnloadTrace = list[TraceStep]


def format_trace(trace: UnloadTrace) -> str:
    return "\n".join(step.render() for step in trace)


# --- vector primitives ------------------------------------------------------


def sort_tail(w: Sequence[int]) -> MultVector:
    return (w[0],) + tuple(sorted(w[1:], reverse=True))


def rectify(w: Sequence[int]) -> MultVector:
    return tuple(max(x, 0) for x in w)


def unload_vector(i: int, n: int) -> MultVector:
    """(1, -1, ..., -1, 0, ..., 0) with i entries equal to -1."""
    return (1,) + (-1,) * i + (0,) * (n - 1 - i)


def dot_unload(w: Sequence[int], i: int) -> int:
    """w . v_i, i.e. w_1 minus the next i entries."""
    return w[0] - sum(w[1 : i + 1])


def _check_index(w: Sequence[int], i: int) -> None:
    if not 2 <= i <= len(w) - 1:
        raise ValueError(f"routine index i={i} outside 2..{len(w) - 1}")


def q_step(w: Sequence[int], i: int) -> MultVector:
    _check_index(w, i)
    w = tuple(w)
    if dot_unload(w, i) >= 0:
        return w
    v = unload_vector(i, len(w))
    return rectify(x + y for x, y in zip(w, v))


def g_step(w: Sequence[int], i: int) -> MultVector:
    return sort_tail(q_step(sort_tail(w), i))


def run_routine(
    w: Sequence[int], i: int, trace: Optional[UnloadTrace] = None
) -> tuple[MultVector, int]:
    """Iterate g_i to its fixpoint; returns the fixpoint and the number of changing steps."""
    current = sort_tail(w)
    steps = 0
    if trace is not None:
        trace.append(TraceStep(i, 0, current))
    while True:
        nxt = g_step(current, i)
        if nxt == current:
            return current, steps
        current = nxt
        steps += 1
        if trace is not None:
            trace.append(TraceStep(i, steps, current))


def _check_mn(m: int, n: int) -> None:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < 3:
        raise ValueError(f"unloading needs n >= 3, got {n}")


def roe_R_naive(m: int, n: int, want_trace: bool = False) -> tuple[int, Optional[UnloadTrace]]:
    """R(m, n) by applying routines O_2, ..., O_{n-1} to (m, ..., m)."""
    _check_mn(m, n)
    trace: Optional[UnloadTrace] = [] if want_trace else None
    w: MultVector = (m,) * n
    for i in range(2, n):
        w, _ = run_routine(w, i, trace)
    return w[0], trace


# --- block engine -----------------------------------------------------------


def head_sum(S: int, i: int, n: int) -> int:
    """Sum of the i largest tail entries of a balanced tail with sum S."""
    q, rho = divmod(S, n - 1)
    return i * q + min(rho, i)


def solve_t(i: int, R_prev: int, S_prev: int, n: int) -> int:
    """Least j >= 0 after which the routine O_i stops.

    After j steps the state is (R_prev + j, S_prev - j*i), and the routine
    stops once the first entry is at least the sum of the i largest tail
    entries.
    """
    j = 0
    while head_sum(S_prev - j * i, i, n) > R_prev + j:
        j += 1
        if S_prev - j * i < 0:
            raise ArithmeticError(f"block form broke down at i={i}, R={R_prev}, S={S_prev}, n={n}")
    return j


def roe_R_block(m: int, n: int) -> tuple[int, list[RoeState]]:
    """R(m, n) from the (R, S) recurrence; returns R and the state after each routine."""
    _check_mn(m, n)
    k = n - 1
    R, S = m, k * m
    states = [RoeState(1, R, S, S % k)]
    for i in range(2, n):
        t = solve_t(i, R, S, n)
        R, S = R + t, S - i * t
        states.append(RoeState(i, R, S, S % k))
    return R, states


def block_trace(m: int, n: int) -> UnloadTrace:
    """The naive engine's trace, reconstructed from the block recurrence."""
    _check_mn(m, n)
    trace: UnloadTrace = []
    R, S = m, (n - 1) * m
    for i in range(2, n):
        t = solve_t(i, R, S, n)
        for j in range(t + 1):
            trace.append(TraceStep(i, j, BlockVector.from_tail_sum(R + j, S - i * j, n).expand()))
        R, S = R + t, S - i * t
    return trace

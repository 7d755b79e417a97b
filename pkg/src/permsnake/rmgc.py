"""Complete cyclic push-to-top Gray codes over the whole of S_n.

These codes visit every permutation of [n] exactly once and return to the
start.  They are the scaffolding for the Chebyshev snake construction, which
needs two properties guaranteed here:

- the code starts at the identity and has rank 0 there,
- the stored cyclic transition list ends with a t_2 (canonical form), so that
  dropping the final closing transition leaves a Hamiltonian path whose net
  effect is a swap of the first two positions.

The recursive builder turns each transition u of the order n-1 code into the
block t_n, ..., t_n (n-1 times) followed by t_{n-u+1}.  Completeness and
cyclicity are validated at build time; a brute-force Hamiltonian-cycle search
(n <= 6) exists as a fallback and for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .code_model import GrayCode, expand
from .perm_core import Perm, identity, push_top

__all__ = [
    "RmgcTable",
    "build_rmgc",
    "rmgc_rank",
    "rmgc_succ",
    "rmgc_unrank",
]

MAX_RMGC_N = 8


@dataclass(frozen=True)
class RmgcTable:
    """A complete cyclic code together with its expansion and rank lookup."""

    n: int
    code: GrayCode
    codewords: tuple[Perm, ...]
    rank_index: dict[Perm, int]


def _raw_transitions(n: int) -> tuple[int, ...]:
    if n == 2:
        return (2, 2)
    small = _raw_transitions(n - 1)
    out: list[int] = []
    for u in small:
        out.extend([n] * (n - 1))
        out.append(n - u + 1)
    return tuple(out)


def _canonicalize(transitions: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate the cyclic transition list so its final entry is a t_2.

    Any rotation of a complete cyclic list is again complete and cyclic from
    any start, because the pushes act on positions, not values.
    """
    last_two = max(i for i, t in enumerate(transitions) if t == 2)
    k = last_two + 1
    return transitions[k:] + transitions[:k]


def _validate(n: int, code: GrayCode) -> tuple[tuple[Perm, ...], dict[Perm, int]]:
    words = expand(code)  # raises on duplicates or failed closure
    if len(words) != factorial(n):
        raise ValueError(
            f"code visits {len(words)} permutations, expected {factorial(n)}"
        )
    return words, {w: r for r, w in enumerate(words)}


def _search_transitions(n: int) -> tuple[int, ...]:
    """Exhaustive Hamiltonian-cycle fallback, n <= 6.  First cycle in
    lexicographic transition order wins, so the result is deterministic."""
    if n > 6:
        raise ValueError("fallback search is capped at n <= 6")
    total = factorial(n)
    start = identity(n)
    path: list[int] = []
    seen = {start}
    cur = start

    def dfs(cur: Perm) -> bool:
        if len(seen) == total:
            for t in range(2, n + 1):
                if push_top(t, cur) == start:
                    path.append(t)
                    return True
            return False
        for t in range(2, n + 1):
            nxt = push_top(t, cur)
            if nxt in seen:
                continue
            seen.add(nxt)
            path.append(t)
            if dfs(nxt):
                return True
            path.pop()
            seen.remove(nxt)
        return False

    if not dfs(cur):
        raise ValueError(f"no complete cyclic code found for n={n}")
    return tuple(path)


@lru_cache(maxsize=None)
def build_rmgc(n: int) -> RmgcTable:
    """Complete cyclic code over S_n in canonical form, 1 <= n <= 8.

    The order-1 table is the degenerate single codeword (no transitions).
    """
    if not 1 <= n <= MAX_RMGC_N:
        raise ValueError(f"build_rmgc supports 1 <= n <= {MAX_RMGC_N}, got {n}")
    if n == 1:
        code = GrayCode(n=1, start=(1,), transitions=(), cyclic=False)
        return RmgcTable(1, code, ((1,),), {(1,): 0})
    try:
        transitions = _canonicalize(_raw_transitions(n))
        code = GrayCode(n=n, start=identity(n), transitions=transitions, cyclic=True)
        words, index = _validate(n, code)
    except ValueError:
        transitions = _canonicalize(_search_transitions(n))
        code = GrayCode(n=n, start=identity(n), transitions=transitions, cyclic=True)
        words, index = _validate(n, code)
    return RmgcTable(n, code, words, index)


def rmgc_rank(table: RmgcTable, sigma: Perm) -> int:
    """Rank of sigma in the table's enumeration (0 at the identity start)."""
    try:
        return table.rank_index[tuple(sigma)]
    except KeyError:
        raise ValueError(f"{sigma!r} is not a permutation of 1..{table.n}") from None


def rmgc_unrank(table: RmgcTable, r: int) -> Perm:
    """Codeword at rank r."""
    if not 0 <= r < len(table.codewords):
        raise ValueError(f"rank {r} out of range 0..{len(table.codewords) - 1}")
    return table.codewords[r]


def rmgc_succ(table: RmgcTable, sigma: Perm) -> int:
    """Push-to-top index leading from sigma to the next codeword."""
    if table.n < 2:
        raise ValueError("the order-1 code has no transitions")
    return table.code.transitions[rmgc_rank(table, sigma)]

"""Gray-code containers, the snake verifier, and the BFS distance oracle.

A code is stored as a start permutation plus a tuple of push-to-top indices.
For a cyclic code with M codewords the tuple holds M transitions, the last one
mapping the final codeword back to the start.  For a non-cyclic code with M
codewords it holds M-1 transitions.

verify_snake checks the strong snake property: every pair of distinct
codewords must be at distance >= 2 in the chosen metric.  Two
implementations exist and are compared against each other in tests: a pure
per-pair loop (the reference) and a vectorized bulk path used for large codes.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from math import factorial, log2
from typing import Callable, Iterable, Optional

from .perm_core import (
    MAX_N,
    Perm,
    check_perm,
    kendall_distance,
    linf_distance,
    push_top,
)

__all__ = [
    "GrayCode",
    "SnakeReport",
    "PAIRWISE_CAP",
    "balance_gap",
    "bfs_distance_oracle",
    "decode_code",
    "encode_code",
    "expand",
    "rate",
    "verify_snake",
]

METRICS = ("kendall", "linf")

# verify_snake refuses codes with more codewords than this unless force=True;
# the pair count grows quadratically.
PAIRWISE_CAP = 2000


@dataclass(frozen=True)
class GrayCode:
    """A push-to-top Gray code: start permutation plus transition indices.

    transitions[k] = i means codeword k+1 is push_top(i, codeword k).
    For cyclic codes the last transition maps the last codeword to the start.
    """

    n: int
    start: Perm
    transitions: tuple[int, ...]
    cyclic: bool

    def __post_init__(self) -> None:
        check_perm(self.start)
        if len(self.start) != self.n:
            raise ValueError(f"start has length {len(self.start)}, expected n={self.n}")
        for t in self.transitions:
            if not 2 <= t <= self.n:
                raise ValueError(f"transition index {t} out of range 2..{self.n}")
        if self.cyclic and not self.transitions:
            raise ValueError("a cyclic code needs at least one transition")
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "start", tuple(self.start))

    @property
    def size(self) -> int:
        """Number of codewords M."""
        return len(self.transitions) if self.cyclic else len(self.transitions) + 1


@dataclass(frozen=True)
class SnakeReport:
    """Outcome of verify_snake.

    witness is a pair of codeword ranks at distance < 2, or None when valid.
    min_pairwise_distance is the distance at the witness when invalid, and the
    true minimum over all pairs when valid.
    """

    valid: bool
    metric: str
    min_pairwise_distance: Optional[int]
    witness: Optional[tuple[int, int]]


def expand(code: GrayCode) -> tuple[Perm, ...]:
    """All codewords in rank order, starting at code.start.

    Raises ValueError on a repeated codeword (reporting the first collision)
    or, for cyclic codes, when the final transition does not return to start.
    """
    words = [code.start]
    seen = {code.start: 0}
    cur = code.start
    steps = code.transitions if not code.cyclic else code.transitions[:-1]
    for k, t in enumerate(steps):
        cur = push_top(t, cur)
        dup = seen.get(cur)
        if dup is not None:
            raise ValueError(f"codeword at rank {k + 1} repeats rank {dup}: {cur}")
        seen[cur] = k + 1
        words.append(cur)
    if code.cyclic:
        closing = push_top(code.transitions[-1], cur)
        if closing != code.start:
            raise ValueError(
                f"cyclic code does not close: final transition yields {closing}, "
                f"start is {code.start}"
            )
    return tuple(words)


def _metric_fn(metric: str) -> Callable[[Perm, Perm], int]:
    if metric == "kendall":
        return kendall_distance
    if metric == "linf":
        return linf_distance
    raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")


def _verify_pairs_python(words: tuple[Perm, ...], metric: str) -> SnakeReport:
    """Reference pairwise check: plain double loop, early exit on violation."""
    dist = _metric_fn(metric)
    best: Optional[int] = None
    m = len(words)
    for i in range(m):
        wi = words[i]
        for j in range(i + 1, m):
            d = dist(wi, words[j])
            if d < 2:
                return SnakeReport(False, metric, d, (i, j))
            if best is None or d < best:
                best = d
    return SnakeReport(True, metric, best, None)


def _verify_pairs_numpy(words: tuple[Perm, ...], metric: str) -> SnakeReport:
    """Vectorized pairwise check.  Same verdict and witness as the reference:
    the witness is the lexicographically first violating pair."""
    import numpy as np

    m = len(words)
    if m < 2:
        return SnakeReport(True, metric, None, None)
    n = len(words[0])
    P = np.array(words, dtype=np.int16)

    if metric == "kendall":
        # Sign vectors over value pairs: row sigma has sign(pos(u) - pos(v))
        # for each u < v.  d(a, b) = (npairs - s_a . s_b) / 2.
        pos = np.empty_like(P)
        rows = np.arange(m, dtype=np.intp)[:, None]
        pos[rows, P - 1] = np.arange(n, dtype=np.int16)[None, :]
        iu, iv = np.triu_indices(n, k=1)
        S = np.sign(pos[:, iu] - pos[:, iv]).astype(np.float32)
        npairs = iu.shape[0]
        chunk = max(1, (1 << 22) // max(1, m))
        best = None
        witness = None
        for lo in range(0, m, chunk):
            hi = min(m, lo + chunk)
            G = S[lo:hi] @ S.T
            D = (npairs - G) / 2.0
            # mask the diagonal and the lower triangle (pairs i < j only)
            for r in range(lo, hi):
                D[r - lo, : r + 1] = np.inf
            block_min = D.min() if D.size else np.inf
            if block_min < 2:
                bad = np.argwhere(D < 2)
                bad = bad[np.lexsort((bad[:, 1], bad[:, 0]))]
                i, j = int(bad[0][0]) + lo, int(bad[0][1])
                return SnakeReport(False, metric, int(round(float(D[i - lo, j]))), (i, j))
            if best is None or block_min < best:
                best = block_min
        return SnakeReport(True, metric, int(round(float(best))), None)

    if metric == "linf":
        chunk = max(1, (1 << 22) // max(1, m * n))
        best = None
        for lo in range(0, m, chunk):
            hi = min(m, lo + chunk)
            D = np.abs(P[lo:hi, None, :] - P[None, :, :]).max(axis=2)
            for r in range(lo, hi):
                D[r - lo, : r + 1] = np.iinfo(D.dtype).max
            block_min = int(D.min()) if D.size else None
            if block_min is not None and block_min < 2:
                bad = np.argwhere(D < 2)
                bad = bad[np.lexsort((bad[:, 1], bad[:, 0]))]
                i, j = int(bad[0][0]) + lo, int(bad[0][1])
                return SnakeReport(False, metric, int(D[i - lo, j]), (i, j))
            if block_min is not None and (best is None or block_min < best):
                best = block_min
        return SnakeReport(True, metric, best, None)

    raise ValueError(f"unknown metric {metric!r}")


# Codes at or below this size use the pure reference path by default.
_BULK_THRESHOLD = 256


def verify_snake(code: GrayCode, metric: str, force: bool = False) -> SnakeReport:
    """Exhaustive pairwise distance >= 2 check over all distinct codewords.

    Codes with more than PAIRWISE_CAP codewords are refused unless force=True.
    The report's witness, when present, is the lowest-rank violating pair.
    """
    _metric_fn(metric)  # validate metric early
    if code.size > PAIRWISE_CAP and not force:
        raise ValueError(
            f"code has {code.size} codewords (> {PAIRWISE_CAP}); "
            "pass force=True to verify anyway"
        )
    words = expand(code)
    if len(words) <= _BULK_THRESHOLD:
        return _verify_pairs_python(words, metric)
    return _verify_pairs_numpy(words, metric)


def rate(code: GrayCode) -> float:
    """log2(M) / log2(n!): how much of the full symmetric group the code uses.

    A single-codeword code has rate 0.0 by convention.
    """
    m = code.size
    if m <= 1 or code.n <= 1:
        return 0.0
    return log2(m) / log2(factorial(code.n))


def balance_gap(code: GrayCode) -> int:
    """Largest cyclic wait until the same element is pushed to the top again.

    For each step k of a cyclic code, take the least j in 1..M such that the
    value moved at step (k + j) mod M equals the value moved at step k; the
    gap is the maximum over k.  j = M counts: a value pushed exactly once
    recurs after a full period.
    """
    if not code.cyclic:
        raise ValueError("balance_gap is defined for cyclic codes only")
    words = expand(code)
    m = code.size
    tops = [words[(k + 1) % m][0] for k in range(m)]
    occurrences: dict[int, list[int]] = {}
    for k, v in enumerate(tops):
        occurrences.setdefault(v, []).append(k)
    worst = 0
    for occ in occurrences.values():
        for idx in range(len(occ)):
            nxt = occ[(idx + 1) % len(occ)]
            gap = (nxt - occ[idx]) % m
            if gap == 0:
                gap = m
            worst = max(worst, gap)
    return worst


def _adjacent_swap_neighbors(sigma: Perm) -> Iterable[Perm]:
    n = len(sigma)
    for s in range(n - 1):
        yield sigma[:s] + (sigma[s + 1], sigma[s]) + sigma[s + 2 :]


def bfs_distance_oracle(
    n: int,
    alpha: Perm,
    beta: Perm,
    neighbors: Optional[Callable[[Perm], Iterable[Perm]]] = None,
) -> int:
    """Graph distance from alpha to beta by breadth-first search.

    The default edge relation swaps two neighbouring entries, so the result
    equals kendall_distance; pass a different neighbors callable to measure
    other graphs.  Deliberately independent of the closed-form metrics so the
    two can be checked against each other.  Guarded to n <= 6.
    """
    if n > 6:
        raise ValueError("bfs_distance_oracle is capped at n <= 6")
    alpha = check_perm(alpha)
    beta = check_perm(beta)
    if len(alpha) != n or len(beta) != n:
        raise ValueError("permutation length does not match n")
    if neighbors is None:
        neighbors = _adjacent_swap_neighbors
    if alpha == beta:
        return 0
    seen = {alpha}
    frontier = deque([(alpha, 0)])
    while frontier:
        cur, d = frontier.popleft()
        for nxt in neighbors(cur):
            if nxt in seen:
                continue
            if nxt == beta:
                return d + 1
            seen.add(nxt)
            frontier.append((nxt, d + 1))
    raise ValueError("beta not reachable from alpha under the given edges")


def encode_code(code: GrayCode, metric: Optional[str] = None) -> str:
    """One-line canonical JSON for a code, optionally tagged with a metric."""
    if metric is not None and metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")
    payload = {
        "n": code.n,
        "metric": metric,
        "start": list(code.start),
        "transitions": list(code.transitions),
        "cyclic": code.cyclic,
    }
    return json.dumps(payload, separators=(",", ":"))


def decode_code(text: str) -> tuple[GrayCode, Optional[str]]:
    """Inverse of encode_code.  Raises ValueError on malformed input."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ValueError("code JSON must be an object")
    missing = {"n", "start", "transitions", "cyclic"} - payload.keys()
    if missing:
        raise ValueError(f"code JSON missing keys: {sorted(missing)}")
    n = payload["n"]
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise ValueError(f"n must be an integer in 1..{MAX_N}")
    start = payload["start"]
    transitions = payload["transitions"]
    if not isinstance(start, list) or not all(isinstance(v, int) for v in start):
        raise ValueError("start must be a list of integers")
    if not isinstance(transitions, list) or not all(
        isinstance(v, int) for v in transitions
    ):
        raise ValueError("transitions must be a list of integers")
    if not isinstance(payload["cyclic"], bool):
        raise ValueError("cyclic must be a boolean")
    metric = payload.get("metric")
    if metric is not None and metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")
    code = GrayCode(
        n=n,
        start=tuple(start),
        transitions=tuple(transitions),
        cyclic=payload["cyclic"],
    )
    return code, metric

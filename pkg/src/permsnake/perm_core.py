"""Permutations in one-line notation and the two metrics used by the codes.

Conventions used across the package:

- A permutation of [n] = {1, ..., n} is a tuple sigma of length n whose entry
  at index i-1 is sigma(i), the value in position i.  Positions and values are
  both 1-based; only tuple indices are 0-based.
- compose(a, b) is the permutation i -> a(b(i)).
- push_to_top: push_top(i, sigma) removes the element in position i and
  reinserts it in position 1.  Valid for 2 <= i <= n.
- push_bottom(k, sigma) removes the element in position n+1-k and reinserts it
  in position n.  Valid for 2 <= k <= n.
- n is capped at MAX_N = 20 so ranks and code sizes stay inside 64-bit range
  (20! < 2**62).
"""

from __future__ import annotations

from collections.abc import Iterable

Perm = tuple[int, ...]

MAX_N = 20

__all__ = [
    "MAX_N",
    "Perm",
    "check_perm",
    "compose",
    "format_perm",
    "identity",
    "inverse",
    "is_perm",
    "kendall_distance",
    "linf_distance",
    "parse_perm",
    "push_bottom",
    "push_top",
    "sign",
]


def identity(n: int) -> Perm:
    """The identity permutation of [n].

    >>> identity(4)
    (1, 2, 3, 4)
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    return tuple(range(1, n + 1))


def is_perm(sigma: Iterable[int]) -> bool:
    """True if sigma is a permutation of [n] for some 1 <= n <= MAX_N."""
    t = tuple(sigma)
    n = len(t)
    return 1 <= n <= MAX_N and sorted(t) == list(range(1, n + 1))


def check_perm(sigma: Perm) -> Perm:
    """Return sigma unchanged, raising ValueError if it is not a permutation."""
    if not is_perm(sigma):
        raise ValueError(f"not a permutation of 1..n (n <= {MAX_N}): {sigma!r}")
    return tuple(sigma)


def compose(a: Perm, b: Perm) -> Perm:
    """Functional composition: (a b)(i) = a(b(i)).

    >>> compose((2, 1, 3), (3, 1, 2))
    (3, 2, 1)
    """
    if len(a) != len(b):
        raise ValueError("composing permutations of different sizes")
    return tuple(a[b[i] - 1] for i in range(len(a)))


def inverse(a: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    >>> compose((3, 1, 2), inverse((3, 1, 2)))
    (1, 2, 3)
    """
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v - 1] = i + 1
    return tuple(inv)


def push_top(i: int, sigma: Perm) -> Perm:
    """Push the element in position i to position 1.

    >>> push_top(3, (1, 2, 3, 4, 5))
    (3, 1, 2, 4, 5)
    >>> push_top(5, (3, 1, 2, 4, 5))
    (5, 3, 1, 2, 4)
    """
    n = len(sigma)
    if not 2 <= i <= n:
        raise ValueError(f"push_top index must be in 2..{n}, got {i}")
    return (sigma[i - 1],) + sigma[: i - 1] + sigma[i:]


def push_bottom(k: int, sigma: Perm) -> Perm:
    """Push the element in position n+1-k to position n.

    >>> push_bottom(2, (1, 2, 3, 4))
    (1, 2, 4, 3)
    >>> push_bottom(4, (1, 2, 3, 4))
    (2, 3, 4, 1)
    """
    n = len(sigma)
    if not 2 <= k <= n:
        raise ValueError(f"push_bottom index must be in 2..{n}, got {k}")
    j = n - k  # 0-based index of the element being moved
    return sigma[:j] + sigma[j + 1 :] + (sigma[j],)


def sign(sigma: Perm) -> int:
    """+1 for even permutations, -1 for odd ones.

    Computed from the cycle structure in O(n).

    >>> sign((1, 2, 3))
    1
    >>> sign((2, 1, 3))
    -1
    """
    n = len(sigma)
    seen = [False] * n
    s = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j] - 1
            clen += 1
        if clen % 2 == 0:
            s = -s
    return s


def kendall_distance(a: Perm, b: Perm) -> int:
    """Number of value pairs whose relative order differs between a and b.

    This is the graph distance in the Cayley graph of S_n generated by
    adjacent transpositions: the minimum number of swaps of neighbouring
    entries turning a into b.

    >>> kendall_distance((2, 1, 4, 3), (2, 4, 3, 1))
    2
    >>> kendall_distance((1, 2, 3), (3, 2, 1))
    3
    """
    n = len(a)
    if len(b) != n:
        raise ValueError("permutations of different sizes")
    pa = [0] * (n + 1)
    pb = [0] * (n + 1)
    for i in range(n):
        pa[a[i]] = i
        pb[b[i]] = i
    d = 0
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if (pa[u] < pa[v]) != (pb[u] < pb[v]):
                d += 1
    return d


def linf_distance(a: Perm, b: Perm) -> int:
    """Chebyshev distance: the largest per-position difference of values.

    >>> linf_distance((2, 1, 4, 3), (2, 4, 3, 1))
    3
    >>> linf_distance((1, 2, 3), (3, 2, 1))
    2
    """
    if len(a) != len(b):
        raise ValueError("permutations of different sizes")
    return max(abs(x - y) for x, y in zip(a, b))


def parse_perm(text: str) -> Perm:
    """Parse a permutation written as "[3,1,2]" (spaces allowed).

    >>> parse_perm("[3, 1, 2]")
    (3, 1, 2)
    """
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"permutation must look like [3,1,2], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise ValueError("empty permutation")
    try:
        values = tuple(int(part) for part in body.split(","))
    except ValueError:
        raise ValueError(f"permutation entries must be integers: {text!r}") from None
    return check_perm(values)


def format_perm(sigma: Perm) -> str:
    """Inverse of parse_perm: "(3, 1, 2)" -> "[3,1,2]".

    >>> format_perm((3, 1, 2))
    '[3,1,2]'
    """
    return "[" + ",".join(str(v) for v in sigma) + "]"

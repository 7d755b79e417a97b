"""Size bounds, densities, and rates for permutation snakes.

Everything here is exact integer or Fraction arithmetic; floats appear only
in the convenience rate fields.  The constructive sizes (ksnake_size,
linf_size) come from the closed recursions, not from building codes, so rows
can be tabulated for any n up to the package cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, log2
from typing import Optional

from .perm_core import MAX_N
from .ksnake import ksnake_size
from .linf_snake import MIN_LINF_N, linf_size

__all__ = [
    "BoundsRow",
    "bounds_table",
    "even_push_upper",
    "ksnake_density",
    "linf_upper",
    "trivial_upper",
]


def trivial_upper(n: int) -> int:
    """n!/2: a Kendall snake is an independent set in a bipartite graph whose
    larger side has n!/2 vertices."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return factorial(n) // 2


def even_push_upper(n: int) -> int:
    """Sharper Kendall bound: floor(n!/2 - C(floor(n/2)-1, 2)/(n-1))."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    value = Fraction(factorial(n), 2) - Fraction(comb(n // 2 - 1, 2), n - 1)
    return value.numerator // value.denominator


def linf_upper(n: int) -> int:
    """Chebyshev bound: n! / 2^floor(n/2)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return factorial(n) // (1 << (n // 2))


def ksnake_density(N: int) -> Fraction:
    """M_N / N! as an exact rational: (2n)! / (n!^2 4^n) for N = 2n+1."""
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {N}")
    n = (N - 1) // 2
    return Fraction(factorial(2 * n), factorial(n) ** 2 * 4**n)


@dataclass(frozen=True)
class BoundsRow:
    """One table row: upper bounds, achieved construction sizes, and rates.

    Family-specific fields are None where the family is not defined
    (ksnake needs odd n >= 3, the Chebyshev construction needs n >= 4).
    """

    n: int
    trivial_upper: int
    even_push_upper: int
    linf_upper: int
    ksnake_size: Optional[int]
    ksnake_density: Optional[Fraction]
    ksnake_rate: Optional[float]
    linf_size: Optional[int]
    linf_rate: Optional[float]


def _rate(m: int, n: int) -> float:
    return log2(m) / log2(factorial(n))


def bounds_row(n: int) -> BoundsRow:
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be in 2..{MAX_N}, got {n}")
    k_size = k_density = k_rate = None
    if n >= 3 and n % 2 == 1:
        k_size = ksnake_size(n)
        k_density = ksnake_density(n)
        k_rate = _rate(k_size, n)
    l_size = l_rate = None
    if n >= MIN_LINF_N:
        l_size = linf_size(n)
        l_rate = _rate(l_size, n)
    return BoundsRow(
        n=n,
        trivial_upper=trivial_upper(n),
        even_push_upper=even_push_upper(n),
        linf_upper=linf_upper(n),
        ksnake_size=k_size,
        ksnake_density=k_density,
        ksnake_rate=k_rate,
        linf_size=l_size,
        linf_rate=l_rate,
    )


def bounds_table(n_lo: int, n_hi: int) -> tuple[BoundsRow, ...]:
    """Rows for n_lo..n_hi inclusive, 2 <= n_lo <= n_hi <= 20."""
    if not 2 <= n_lo <= n_hi <= MAX_N:
        raise ValueError(f"need 2 <= n_lo <= n_hi <= {MAX_N}")
    return tuple(bounds_row(n) for n in range(n_lo, n_hi + 1))

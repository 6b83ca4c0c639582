"""Closed-form counts of torsion pairs in cluster tubes, and asymptotics.

The headline count for rank n is

    T(n) = sum_{l >= 0} 2^(l+1) C(n-1+l, l) C(2n-1, n-1-2l),

and the refinement by k triangles, l cliques and m empty cells is

    T(n,k,l,m) = 2 * multinomial(n-1+k+l+m; n-1, k, l, m)
                   * C(n-1-k-l-m, l+m),

with the convention that a binomial with bottom larger than top (or negative
top) is zero.  :func:`lagrange_coefficient` re-derives the degree-n refined
coefficient by Lagrange inversion from the compositional inverse
``Q(z) = z (1 - x z - (y1+y2) z^2/(1-z))`` of the polygon series, expanding
``(1-z)^{-1} (z/Q(z))^n`` by the multinomial theorem; it must agree with the
power-series route coefficient for coefficientwise cross-checks.

T(n) grows like ``alpha / sqrt(pi n) * rho^n`` where rho is the largest
positive root of ``8x^3 - 48x^2 - 47x + 4`` and alpha the smallest positive
root of ``71x^6 + 213x^4 - 72x^2 + 4``; :func:`real_root` isolates these to
any precision by exact rational bisection and :func:`asymptotic_check`
measures the approach of the exact counts to them.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Literal

from .series import Poly3

# coefficient lists are low degree -> high degree
RHO_POLYNOMIAL: tuple[int, ...] = (4, -47, -48, 8)
ALPHA_POLYNOMIAL: tuple[int, ...] = (4, 0, -72, 0, 213, 0, 71)


def binomial(a: int, b: int) -> int:
    """C(a, b) as a subset count: zero unless 0 <= b <= a."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(parts!) with all parts nonnegative."""
    ps = list(parts)
    if any(p < 0 for p in ps):
        return 0
    out, total = 1, 0
    for p in ps:
        total += p
        out *= math.comb(total, p)
    return out


def torsion_count(n: int) -> int:
    """Number of torsion pairs in the rank-n cluster tube."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    total = 0
    l = 0
    while n - 1 - 2 * l >= 0:
        total += 2 ** (l + 1) * binomial(n - 1 + l, l) * binomial(2 * n - 1, n - 1 - 2 * l)
        l += 1
    return total


def torsion_count_refined(n: int, k: int, l: int, m: int) -> int:
    """Torsion pairs at rank n with k triangles, l cliques, m empty cells."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    if min(k, l, m) < 0:
        raise ValueError("statistics must be nonnegative")
    return 2 * multinomial((n - 1, k, l, m)) * binomial(n - 1 - k - l - m, l + m)


def refined_support(n: int) -> list[tuple[int, int, int]]:
    """All (k, l, m) with a nonzero refined count, sorted."""
    out = []
    for k in range(n):
        for l in range((n - 1 - k) // 2 + 1):
            for m in range((n - 1 - k) // 2 - l + 1):
                if torsion_count_refined(n, k, l, m):
                    out.append((k, l, m))
    return sorted(out)


def refined_table(n: int) -> dict[tuple[int, int, int], int]:
    return {klm: torsion_count_refined(n, *klm) for klm in refined_support(n)}


def lagrange_coefficient(n: int) -> Poly3:
    """Degree-n refined coefficient via Lagrange inversion.

    Extracts ``[z^(n-1)] (1-z)^{-1} (1 - xz - (y1+y2) z^2/(1-z))^{-n}`` from
    the multinomial expansion with ``X = xz`` and ``Y_i = y_i z^2/(1-z)``:
    the (k, l, m) term carries ``z^(k+2(l+m)) (1-z)^{-(l+m+1)}``, so the
    geometric factor must supply ``i = n-1-k-2(l+m)`` powers of z, worth
    ``C(l+m+i, l+m)``.  The result is doubled since either half of a torsion
    pair may be the finite one.
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    terms: dict[tuple[int, int, int], int] = {}
    for k in range(n):
        for l in range((n - 1 - k) // 2 + 1):
            for m in range((n - 1 - k) // 2 - l + 1):
                i = n - 1 - k - 2 * (l + m)
                if i < 0:
                    continue
                c = multinomial((n - 1, k, l, m)) * binomial(l + m + i, l + m)
                if c:
                    terms[(k, l, m)] = 2 * c
    return Poly3.from_dict(terms)


def _poly_eval(coeffs: tuple[int, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def real_root(
    coeffs: tuple[int, ...],
    which: Literal["largest", "smallest"] = "largest",
    tolerance: Fraction = Fraction(1, 10**14),
) -> Fraction:
    """Isolate the largest or smallest positive real root by bisection.

    Brackets are located on a uniform grid below the Cauchy bound, then
    narrowed with exact rational arithmetic; only simple (sign-changing)
    roots are found, which covers the asymptotic constants.
    """
    if not coeffs or coeffs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    bound = Fraction(1) + max(Fraction(abs(c), abs(coeffs[-1])) for c in coeffs[:-1])
    grid = 4096
    brackets = []
    prev = _poly_eval(coeffs, Fraction(0))
    for step in range(1, grid + 1):
        xq = bound * step / grid
        val = _poly_eval(coeffs, xq)
        if val == 0:
            return xq
        if (prev < 0) != (val < 0):
            brackets.append((bound * (step - 1) / grid, xq))
        prev = val
    if not brackets:
        raise ValueError("no positive root bracket found")
    lo, hi = brackets[-1] if which == "largest" else brackets[0]
    flo = _poly_eval(coeffs, lo)
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        fmid = _poly_eval(coeffs, mid)
        if fmid == 0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


@functools.cache
def growth_rate() -> float:
    """rho = 6.847333996370022..., the exponential growth rate of T(n)."""
    return float(real_root(RHO_POLYNOMIAL, "largest"))


@functools.cache
def growth_amplitude() -> float:
    """alpha = 0.2658656601482029..., the constant in T(n) ~ alpha rho^n / sqrt(pi n)."""
    return float(real_root(ALPHA_POLYNOMIAL, "smallest"))


def asymptotic_check(n: int) -> tuple[float, float]:
    """(T(n+1)/T(n), T(n) sqrt(pi n) / rho^n), computed from exact counts.

    The first ratio approaches rho and the second approaches alpha as n
    grows.  Exact integers go in; the conversion to float happens last (in
    log space, so huge n cannot overflow).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    tn, tn1 = torsion_count(n), torsion_count(n + 1)
    ratio = tn1 / tn  # correctly rounded for arbitrary-size ints
    alpha_est = math.exp(
        math.log(tn) + 0.5 * math.log(math.pi * n) - n * math.log(growth_rate())
    )
    return ratio, alpha_est

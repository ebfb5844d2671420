"""Dimensions of irreducible SO_n-modules and the resulting bounds on the
number of squares needed for sDisc_k."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .subdisc import KRangeError


@dataclass(frozen=True)
class HighestWeight:
    """Dominant weight of SO_n: a length floor(n/2) integer tuple (zero-padded)."""

    n: int
    lam: tuple[int, ...]

    def __init__(self, n: int, lam: Sequence[int]):
        l = n // 2
        lam = tuple(int(x) for x in lam)
        if len(lam) > l:
            raise ValueError(f"weight {lam} longer than rank {l} of SO_{n}")
        lam = lam + (0,) * (l - len(lam))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "lam", lam)
        self._validate()

    def _validate(self) -> None:
        n, lam = self.n, self.lam
        if n < 2:
            raise ValueError("n must be at least 2")
        l = len(lam)
        if n % 2:
            ok = all(lam[i] >= lam[i + 1] for i in range(l - 1)) and (l == 0 or lam[-1] >= 0)
        else:
            ok = all(lam[i] >= lam[i + 1] for i in range(l - 2))
            if l >= 2:
                ok = ok and lam[l - 2] >= abs(lam[l - 1])
        if not ok:
            raise ValueError(f"{lam} is not a dominant weight for SO_{n}")

    @property
    def rank(self) -> int:
        return len(self.lam)


def weyl_dim(w: HighestWeight) -> int:
    """Complex dimension of the irreducible SO_n-module with highest weight w."""
    n, lam = w.n, w.lam
    l = len(lam)
    d = Fraction(1)
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            li, lj = lam[i - 1], lam[j - 1]
            d *= Fraction(li - lj + j - i, j - i)
            d *= Fraction(li + lj + n - i - j, n - i - j)
    if n % 2:
        for i in range(1, l + 1):
            d *= Fraction(2 * lam[i - 1] + n - 2 * i, n - 2 * i)
    if d.denominator != 1 or d <= 0:
        raise ArithmeticError(f"Weyl dimension of {lam} for SO_{n} came out as {d}")
    return d.numerator


def hook_weight(n: int, first: int, ones: int) -> HighestWeight:
    """The weight (first, 1^ones)."""
    return HighestWeight(n, (first,) + (1,) * ones)


@dataclass(frozen=True)
class MuBoundReport:
    n: int
    k: int
    weight_used: HighestWeight
    doubled: bool
    bound: int
    roy_count: int


def roy_count(n: int, k: int) -> int:
    """Number of squares in the explicit binomial-size presentation."""
    return comb(n * (n + 1) // 2, n - k)


def mu_bound(n: int, k: int) -> MuBoundReport:
    """Upper bound on the minimal number of squares summing to sDisc_k."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 <= k <= n - 2:
        raise KRangeError(f"k={k} out of range 0..{n - 2} for n={n}")
    l = n // 2
    if (n - 2) % 4 == 0 and k == l - 1:
        w = hook_weight(n, n - l + 1, l - 1)
        doubled = True
    elif k + 1 < n - l:
        w = hook_weight(n, n - k, k)
        doubled = False
    else:
        w = hook_weight(n, n - k, n - k - 2)
        doubled = False
    dim = weyl_dim(w)
    bound = 2 * dim if doubled else dim
    report = MuBoundReport(n, k, w, doubled, bound, roy_count(n, k))
    return report


def harmonic_dimension(nvars: int, degree: int) -> int:
    """Dimension of the harmonic polynomials of a given degree in nvars variables."""
    if degree < 2:
        return comb(degree + nvars - 1, nvars - 1)
    return comb(degree + nvars - 1, nvars - 1) - comb(degree + nvars - 3, nvars - 1)


def harmonic_dim_crosscheck(n: int) -> bool:
    """The k = 0 bound equals the dimension of degree-n harmonics in n variables."""
    if n < 3:
        raise ValueError("needs n >= 3")
    report = mu_bound(n, 0)
    if report.doubled or report.weight_used.lam[0] != n or any(report.weight_used.lam[1:]):
        return False
    return report.bound == comb(2 * n - 1, n) - comb(2 * n - 3, n - 2)

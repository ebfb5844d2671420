"""Subdiscriminants from roots, as symmetric functions and of matrices, and
classification of a matrix by its number of distinct eigenvalues."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .exactmath import MultiPoly, RationalMatrix, as_scalar, mat_mul, trace
from .symfun import SymPolyInBasis, delta_nk, to_elementary_basis, to_power_sum_basis


class KRangeError(ValueError):
    """k outside the admissible range for the given size."""


def _check_k(n: int, k: int, top: int | None = None) -> None:
    top = n - 1 if top is None else top
    if not isinstance(k, int) or not 0 <= k <= top:
        raise KRangeError(f"k={k} out of range 0..{top} for n={n}")


def sdisc_degree(n: int, k: int) -> int:
    return (n - k) * (n - k - 1)


def sdisc_from_roots(roots: Sequence, k: int) -> Fraction:
    """Sum over (n-k)-subsets of the squared Vandermonde product of the roots."""
    roots = [as_scalar(r) for r in roots]
    n = len(roots)
    if n < 1:
        raise ValueError("need at least one root")
    _check_k(n, k)
    total = Fraction(0)
    for subset in combinations(roots, n - k):
        d = Fraction(1)
        for a, b in combinations(subset, 2):
            d *= a - b
        total += d * d
    return total


@lru_cache(maxsize=None)
def sdisc_symbolic(n: int, k: int, basis: str = "power-sum") -> SymPolyInBasis:
    """sDisc_k as a polynomial in p1..pn or e1..en (memoized per (n, k, basis))."""
    _check_k(n, k)
    f = delta_nk(n, k)
    if basis == "power-sum":
        return to_power_sum_basis(f, n)
    if basis == "elementary":
        return to_elementary_basis(f, n)
    raise ValueError(f"unsupported basis {basis!r}")


def power_traces(a, n: int) -> list:
    """[Tr(A), Tr(A^2), ..., Tr(A^n)] for a grid whose entries form a ring."""
    out = []
    pw = a
    for j in range(1, n + 1):
        if j > 1:
            pw = mat_mul(pw, a)
        out.append(trace(pw))
    return out


def sdisc_of_matrix(a: RationalMatrix, k: int) -> Fraction:
    """sDisc_k of the characteristic polynomial, via p_j = Tr(A^j)."""
    _check_k(a.n, k)
    if k == a.n - 1:
        return Fraction(a.n)
    sym = sdisc_symbolic(a.n, k, "power-sum")
    return Fraction(sym.evaluate(power_traces(a.entries, a.n)))


def sdisc_vector(a: RationalMatrix) -> tuple[Fraction, ...]:
    n = a.n
    traces = power_traces(a.entries, n)
    values = []
    for k in range(n - 1):
        values.append(Fraction(sdisc_symbolic(n, k, "power-sum").evaluate(traces)))
    values.append(Fraction(n))
    return tuple(values)


@dataclass(frozen=True)
class Classification:
    distinct: int
    sdisc: tuple[Fraction, ...]

    @property
    def first_nonzero(self) -> int:
        """Least k with sDisc_k != 0."""
        return len(self.sdisc) - self.distinct


def classify(a: RationalMatrix) -> Classification:
    """Number of distinct (complex) eigenvalues, with the full subdiscriminant vector."""
    vec = sdisc_vector(a)
    kstar = next(k for k, v in enumerate(vec) if v != 0)
    return Classification(a.n - kstar, vec)


def homogeneity_check(a: RationalMatrix, k: int, t) -> bool:
    t = as_scalar(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    lhs = sdisc_of_matrix(a.scale(t), k)
    return lhs == t ** sdisc_degree(a.n, k) * sdisc_of_matrix(a, k)


def entry_variables(n: int) -> tuple[str, ...]:
    """Entry variables of a symmetric n x n matrix, upper triangle row by row."""
    return tuple(f"a{i + 1}{j + 1}" if n < 10 else f"a{i + 1}_{j + 1}" for i in range(n) for j in range(i, n))


def symbolic_symmetric(n: int) -> list[list[MultiPoly]]:
    """The generic symmetric matrix with entries a_ij = a_ji."""
    names = entry_variables(n)
    it = iter(names)
    grid = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = MultiPoly.var(next(it), names)
            grid[i][j] = grid[j][i] = v
    return grid


@lru_cache(maxsize=None)
def sdisc_entry_polynomial(n: int, k: int) -> MultiPoly:
    """sDisc_k of the generic symmetric matrix, as a polynomial in its entries."""
    _check_k(n, k)
    names = entry_variables(n)
    if k == n - 1:
        return MultiPoly.constant(n, names)
    traces = power_traces(symbolic_symmetric(n), n)
    sym = sdisc_symbolic(n, k, "power-sum")
    images = {f"p{j}": traces[j - 1] for j in range(1, n + 1)}
    return sym.poly.substitute(images, names)

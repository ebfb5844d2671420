"""Graded pieces of the vanishing ideal of the points with at most n-k-1
distinct coordinates, and their symmetric-group invariants.

The ideal is taken to be generated by the Vandermonde products over
(n-k)-subsets of the variables; everything below is graded linear algebra on
that generating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial

from .exactmath import MultiPoly, coefficient_matrix, monomials_of_degree, rank
from .symfun import delta_nk, reynolds, vandermonde_delta, x_vars

MAX_N = 5


class IdealSizeError(ValueError):
    pass


def generator_degree(n: int, k: int) -> int:
    return comb(n - k, 2)


def target_degree(n: int, k: int) -> int:
    return (n - k) * (n - k - 1)


def _check(n: int, k: int) -> None:
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range for n={n}")
    if n > MAX_N:
        raise IdealSizeError(f"n={n} exceeds the size guard n <= {MAX_N}")


def graded_generators(n: int, k: int, d: int) -> list[MultiPoly]:
    """delta(x_S) * m with |S| = n-k and m a monomial, of total degree exactly d."""
    g = generator_degree(n, k)
    if d < g:
        return []
    xs = x_vars(n)
    out = []
    for subset in combinations(range(n), n - k):
        delta = vandermonde_delta(subset, n)
        for exps in monomials_of_degree(n, d - g):
            out.append(delta * MultiPoly(xs, {exps: 1}))
    return out


def kl_generators(n: int, k: int, d: int) -> list[MultiPoly]:
    """All delta(x_S) * m of total degree at most d (empty below the generator degree)."""
    out = []
    for deg in range(generator_degree(n, k), d + 1):
        out.extend(graded_generators(n, k, deg))
    return out


@dataclass(frozen=True)
class GradedSpanReport:
    n: int
    k: int
    degree: int
    generator_count: int
    invariant_rank: int
    spans_delta: bool


def invariant_component(n: int, k: int, d: int) -> GradedSpanReport:
    """Rank of the symmetrized degree-d generators; at the target degree, compare with Delta_{n,k}."""
    _check(n, k)
    gens = graded_generators(n, k, d)
    images = [reynolds(f, n) for f in gens]
    images = [f for f in images if f]
    rows, _ = coefficient_matrix(images)
    r = rank(rows) if rows else 0
    spans = False
    if d == target_degree(n, k) and r == 1:
        delta = delta_nk(n, k)
        stacked, _ = coefficient_matrix(images + [delta])
        spans = rank(stacked) == 1
    return GradedSpanReport(n, k, d, len(gens), r, spans)


def lemma_sweep(n: int, k: int) -> list[GradedSpanReport]:
    """Reports for every degree from the generator degree up to the target degree."""
    return [invariant_component(n, k, d) for d in range(generator_degree(n, k), target_degree(n, k) + 1)]


def lemma_holds(reports: list[GradedSpanReport]) -> bool:
    if not reports:
        return False
    n, k = reports[0].n, reports[0].k
    top = target_degree(n, k)
    for rep in reports:
        if rep.degree < top and rep.invariant_rank != 0:
            return False
        if rep.degree == top and not (rep.invariant_rank == 1 and rep.spans_delta):
            return False
    return any(rep.degree == top for rep in reports)


@dataclass(frozen=True)
class SymmetrizationReport:
    n: int
    k: int
    low_checked: int
    low_vanish: bool
    staircase_checked: int
    staircase_ok: bool


def symmetrization_identity(n: int, k: int, extra: int | None = None) -> SymmetrizationReport:
    """tau(x^alpha * delta(x_1..x_{n-k})) on enumerated exponents.

    Vanishes whenever alpha_1 + ... + alpha_{n-k} < 0 + 1 + ... + (n-k-1);
    when (alpha_1..alpha_{n-k}) is a permutation of (0..n-k-1) and the rest
    is zero it equals +-(k!/n!) Delta_{n,k}.  The remaining k exponents range
    over total degree at most ``extra`` (default: the generator degree).
    """
    _check(n, k)
    m = n - k
    g = generator_degree(n, k)
    extra = g if extra is None else extra
    xs = x_vars(n)
    delta = vandermonde_delta(range(m), n)
    tails = [t for t in product(range(extra + 1), repeat=k) if sum(t) <= extra]
    low_checked = 0
    low_ok = True
    for head_sum in range(g):
        for head in _compositions(head_sum, m):
            for tail in tails:
                f = MultiPoly(xs, {head + tail: 1}) * delta
                low_checked += 1
                if reynolds(f, n):
                    low_ok = False
    stair_checked = 0
    stair_ok = True
    expected = delta_nk(n, k).scale(Fraction(factorial(k), factorial(n)))
    for head in permutations(range(m)):
        f = MultiPoly(xs, {tuple(head) + (0,) * k: 1}) * delta
        img = reynolds(f, n)
        stair_checked += 1
        if img != expected and img != -expected:
            stair_ok = False
    return SymmetrizationReport(n, k, low_checked, low_ok, stair_checked, stair_ok)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest

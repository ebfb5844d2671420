"""Symmetric functions: Vandermonde products, the subset sums Delta_{n,k},
monomial/elementary/power-sum conversions and the Reynolds operator of S_n.

Polynomials in the root variables live over ``x1..xn``; elementary and power
sum representations live over ``e1..en`` and ``p1..pn``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Sequence

from .exactmath import MultiPoly

BASES = ("monomial", "elementary", "power-sum")


class NotSymmetricError(ValueError):
    """Raised when a polynomial changes under an adjacent transposition."""

    def __init__(self, transposition: tuple[int, int]):
        self.transposition = transposition
        i, j = transposition
        super().__init__(f"polynomial is not invariant under swapping x{i + 1} and x{j + 1}")


def x_vars(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def e_vars(n: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(1, n + 1))


def p_vars(n: int) -> tuple[str, ...]:
    return tuple(f"p{i}" for i in range(1, n + 1))


_BASIS_VARS = {"monomial": x_vars, "elementary": e_vars, "power-sum": p_vars}


@dataclass(frozen=True)
class SymPolyInBasis:
    """A symmetric polynomial in n variables written in one of three bases."""

    n: int
    basis: str
    poly: MultiPoly

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")

    def expand(self) -> MultiPoly:
        """Back to a polynomial in x1..xn."""
        if self.basis == "monomial":
            return self.poly.with_variables(x_vars(self.n))
        if self.basis == "elementary":
            images = {f"e{j}": elementary(self.n, j) for j in range(1, self.n + 1)}
        else:
            images = {f"p{j}": power_sum(self.n, j) for j in range(1, self.n + 1)}
        return self.poly.substitute(images, x_vars(self.n))

    def evaluate(self, values: Sequence) -> Fraction:
        """Evaluate with the basis generators set to ``values`` (index 1..n)."""
        return self.poly.evaluate(dict(zip(self.poly.variables, values)))


@lru_cache(maxsize=None)
def elementary(n: int, j: int) -> MultiPoly:
    """e_j(x1..xn); e_0 = 1 and e_j = 0 for j > n."""
    xs = x_vars(n)
    terms = {}
    for s in combinations(range(n), j):
        e = [0] * n
        for i in s:
            e[i] = 1
        terms[tuple(e)] = 1
    return MultiPoly(xs, terms)


@lru_cache(maxsize=None)
def power_sum(n: int, j: int) -> MultiPoly:
    xs = x_vars(n)
    if j == 0:
        return MultiPoly.constant(n, xs)
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = j
        terms[tuple(e)] = 1
    return MultiPoly(xs, terms)


def vandermonde_delta(indices: Sequence[int], n: int | None = None) -> MultiPoly:
    """prod_{a<b} (x_{i_a} - x_{i_b}) over the given 0-based indices.

    Fewer than two indices give the constant 1.
    """
    indices = list(indices)
    if len(set(indices)) != len(indices):
        raise ValueError("indices must be distinct")
    if n is None:
        n = max(indices, default=-1) + 1
    xs = x_vars(n)
    result = MultiPoly.constant(1, xs)
    for a, b in combinations(indices, 2):
        ea = [0] * n
        eb = [0] * n
        ea[a] = 1
        eb[b] = 1
        result = result * MultiPoly(xs, {tuple(ea): 1, tuple(eb): -1})
    return result


@lru_cache(maxsize=None)
def delta_nk(n: int, k: int) -> MultiPoly:
    """Sum of squared Vandermonde products over all (n-k)-subsets of x1..xn."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range for n={n}")
    xs = x_vars(n)
    total = MultiPoly.zero(xs)
    for s in combinations(range(n), n - k):
        d = vandermonde_delta(s, n)
        total = total + d * d
    return total


def symmetry_violation(f: MultiPoly, n: int) -> tuple[int, int] | None:
    """First adjacent transposition that moves ``f``, or None if symmetric."""
    f = f.with_variables(x_vars(n))
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = i + 1, i
        if f.permute_variables(perm) != f:
            return (i, i + 1)
    return None


def check_symmetric(f: MultiPoly, n: int) -> MultiPoly:
    f = f.with_variables(x_vars(n))
    bad = symmetry_violation(f, n)
    if bad is not None:
        raise NotSymmetricError(bad)
    return f


def _is_partition_exponent(e) -> bool:
    return all(e[i] >= e[i + 1] for i in range(len(e) - 1))


class _ElementaryProducts:
    """Cache of e_1^a1 ... e_n^an expanded in x, built incrementally."""

    def __init__(self, n: int):
        self.n = n
        self.cache = {(0,) * n: MultiPoly.constant(1, x_vars(n))}

    def get(self, a: tuple[int, ...]) -> MultiPoly:
        hit = self.cache.get(a)
        if hit is not None:
            return hit
        # peel one factor off the highest nonzero index
        j = max(i for i, x in enumerate(a) if x)
        prev = list(a)
        prev[j] -= 1
        result = self.get(tuple(prev)) * elementary(self.n, j + 1)
        self.cache[a] = result
        return result


def to_elementary_basis(f: MultiPoly, n: int) -> SymPolyInBasis:
    """Write a symmetric polynomial in e1..en by lex leading-term reduction."""
    f = check_symmetric(f, n)
    ev = e_vars(n)
    products = _ElementaryProducts(n)
    out = {}
    rest = f
    while rest:
        lead = max(rest.terms)
        c = rest.terms[lead]
        if not _is_partition_exponent(lead):
            raise NotSymmetricError(symmetry_violation(rest, n) or (0, 1))
        # x^lambda is the lex leading term of prod e_j^(lambda_j - lambda_{j+1})
        a = tuple(lead[j] - (lead[j + 1] if j + 1 < n else 0) for j in range(n))
        out[a] = out.get(a, 0) + c
        rest = rest - products.get(a).scale(c)
    result = MultiPoly(ev, out)
    if f.coefficients_integral():
        assert result.coefficients_integral(), "integer symmetric polynomial gave non-integer e-coefficients"
    return SymPolyInBasis(n, "elementary", result)


@lru_cache(maxsize=None)
def elementary_in_power_sums(n: int) -> tuple[MultiPoly, ...]:
    """(e_0, e_1, ..., e_n) as polynomials in p1..pn (Newton's identities)."""
    pv = p_vars(n)
    es = [MultiPoly.constant(1, pv)]
    for j in range(1, n + 1):
        acc = MultiPoly.zero(pv)
        for i in range(1, j + 1):
            term = es[j - i] * MultiPoly.var(f"p{i}", pv)
            acc = acc + term if i % 2 == 1 else acc - term
        es.append(acc.scale(Fraction(1, j)))
    return tuple(es)


def to_power_sum_basis(f: MultiPoly, n: int) -> SymPolyInBasis:
    """Write a symmetric polynomial in p1..pn (higher power sums never appear)."""
    elem = to_elementary_basis(f, n)
    es = elementary_in_power_sums(n)
    images = {f"e{j}": es[j] for j in range(1, n + 1)}
    return SymPolyInBasis(n, "power-sum", elem.poly.substitute(images, p_vars(n)))


def convert(sym: SymPolyInBasis, basis: str) -> SymPolyInBasis:
    if basis == sym.basis:
        return sym
    f = sym.expand()
    if basis == "monomial":
        return SymPolyInBasis(sym.n, "monomial", f)
    if basis == "elementary":
        return to_elementary_basis(f, sym.n)
    if basis == "power-sum":
        return to_power_sum_basis(f, sym.n)
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _permutations(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(n)))


def reynolds(f: MultiPoly, n: int) -> MultiPoly:
    """Average of g.f over all g in S_n.

    Costs n! substitutions per call; intended for n <= 6.
    """
    f = f.with_variables(x_vars(n))
    acc: dict = {}
    for perm in _permutations(n):
        for e, c in f.terms.items():
            ne = [0] * n
            for i, x in enumerate(e):
                ne[perm[i]] = x
            ne = tuple(ne)
            acc[ne] = acc.get(ne, 0) + c
    scale = Fraction(1, factorial(n))
    return MultiPoly(x_vars(n), {e: c * scale for e, c in acc.items() if c})

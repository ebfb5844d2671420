"""Exact rational scalars, sparse multivariate polynomials and exact linear algebra.

Everything here works over the rationals (``fractions.Fraction``); nothing
touches floating point.  Polynomials are sparse dicts from exponent tuples to
nonzero coefficients, printed and iterated in graded lexicographic order over
the declared variable order.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Sequence

Scalar = int | Fraction


def as_scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact scalar: {x!r}")


def format_scalar(x: Scalar) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class MultiPoly:
    """Polynomial over the rationals in a fixed, ordered list of variables.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms", "_intform")

    def __init__(self, variables: Sequence[str], terms=None):
        self._intform = None
        self.variables = tuple(variables)
        nv = len(self.variables)
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nv:
                    raise ValueError(f"exponent vector {exps} does not match {nv} variables")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if c:
                    clean[exps] = clean.get(exps, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> MultiPoly:
        # terms must already be clean: right length, no zero coefficients
        p = object.__new__(cls)
        p.variables = variables
        p.terms = terms
        p._intform = None
        return p

    @classmethod
    def zero(cls, variables: Sequence[str]) -> MultiPoly:
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, c: Scalar, variables: Sequence[str]) -> MultiPoly:
        variables = tuple(variables)
        if not c:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> MultiPoly:
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls._raw(variables, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], variables: Sequence[str], c: Scalar = 1) -> MultiPoly:
        return cls(variables, {tuple(exps): c})

    # -- inspection ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs.pop() == degree

    def homogeneous_part(self, degree: int) -> MultiPoly:
        return MultiPoly._raw(self.variables, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * len(self.variables), 0)

    def is_constant(self) -> bool:
        zero = (0,) * len(self.variables)
        return all(e == zero for e in self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        """Terms in graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading_term(self, order: str = "grlex"):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order == "lex":
            e = max(self.terms)
        else:
            e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def coefficients_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    # -- variable handling --------------------------------------------------

    def with_variables(self, variables: Sequence[str]) -> MultiPoly:
        """Re-express over a superset (or reordering) of the current variables."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        missing = [v for v in self.variables if v not in pos]
        if missing:
            used = {self.variables[i] for e in self.terms for i, x in enumerate(e) if x}
            if used & set(missing):
                raise ValueError(f"variables {missing} occur in the polynomial")
        idx = [pos.get(v) for v in self.variables]
        nv = len(variables)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * nv
            for i, x in enumerate(e):
                if x:
                    ne[idx[i]] = x
            terms[tuple(ne)] = c
        return MultiPoly._raw(variables, terms)

    def _align(self, other: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
        if self.variables == other.variables:
            return self, other
        merged = list(self.variables)
        merged += [v for v in other.variables if v not in self.variables]
        return self.with_variables(merged), other.with_variables(merged)

    def _coerce(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.variables)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly._raw(a.variables, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c: Scalar) -> MultiPoly:
        if not c:
            return MultiPoly._raw(self.variables, {})
        return MultiPoly._raw(self.variables, {e: x * c for e, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(other)
        if not a.terms or not b.terms:
            return MultiPoly._raw(a.variables, {})
        if len(a.terms) < len(b.terms):
            a, b = b, a
        return MultiPoly._raw(a.variables, _packed_product(a.terms, b.terms, len(a.variables)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        raise TypeError("MultiPoly is unhashable")

    # -- evaluation and substitution -----------------------------------------

    def evaluate(self, point) -> Scalar:
        """Evaluate at a point given as a sequence (variable order) or a dict by name."""
        if isinstance(point, dict):
            values = [point[v] for v in self.variables]
        else:
            values = list(point)
            if len(values) != len(self.variables):
                raise ValueError("point has the wrong number of coordinates")
        if all(type(v) is int for v in values):
            return self._evaluate_integral(values)
        powers = [{0: 1, 1: v} for v in values]
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, x in enumerate(e):
                if x:
                    cache = powers[i]
                    p = cache.get(x)
                    if p is None:
                        p = cache[x] = values[i] ** x
                    term = term * p
            total += term
        return total

    def _evaluate_integral(self, values: list[int]) -> Scalar:
        # integer point: clear coefficient denominators once and stay in ints
        form = self._intform
        if form is None:
            den = 1
            for c in self.terms.values():
                if isinstance(c, Fraction) and c.denominator != 1:
                    den = den * c.denominator // _gcd(den, c.denominator)
            form = self._intform = (den, [(e, int(c * den)) for e, c in self.terms.items()])
        den, items = form
        powers = [{0: 1, 1: v} for v in values]
        total = 0
        for e, c in items:
            term = c
            for i, x in enumerate(e):
                if x:
                    cache = powers[i]
                    p = cache.get(x)
                    if p is None:
                        p = cache[x] = values[i] ** x
                    term *= p
            total += term
        return Fraction(total, den) if den != 1 else total

    def substitute(self, mapping: dict, variables: Sequence[str]) -> MultiPoly:
        """Replace each named variable by a polynomial over ``variables``.

        Variables not in ``mapping`` must occur in ``variables`` and are kept.
        """
        variables = tuple(variables)
        images = []
        for v in self.variables:
            img = mapping.get(v)
            if img is None:
                img = MultiPoly.var(v, variables)
            elif not isinstance(img, MultiPoly):
                img = MultiPoly.constant(img, variables)
            else:
                img = img.with_variables(variables)
            images.append(img)
        caches = [{0: MultiPoly.constant(1, variables), 1: img} for img in images]

        def power(i, x):
            cache = caches[i]
            p = cache.get(x)
            if p is None:
                p = cache[x] = power(i, x - 1) * images[i]
            return p

        total = MultiPoly.zero(variables)
        for e, c in self.terms.items():
            term = MultiPoly.constant(c, variables)
            for i, x in enumerate(e):
                if x:
                    term = term * power(i, x)
            total = total + term
        return total

    def permute_variables(self, perm: Sequence[int]) -> MultiPoly:
        """Apply x_i -> x_{perm[i]} (0-based)."""
        nv = len(self.variables)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * nv
            for i, x in enumerate(e):
                ne[perm[i]] = x
            terms[tuple(ne)] = c
        return MultiPoly._raw(self.variables, terms)

    # -- display ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.variables, e) if x
            )
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{format_scalar(mag)}*{mono}"
            else:
                body = format_scalar(mag)
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def _packed_product(ta: dict, tb: dict, nv: int) -> dict:
    # Kronecker packing: exponent vectors become single ints so the inner
    # loop is one integer add per term pair.
    maxa = [0] * nv
    for e in ta:
        for i, x in enumerate(e):
            if x > maxa[i]:
                maxa[i] = x
    maxb = [0] * nv
    for e in tb:
        for i, x in enumerate(e):
            if x > maxb[i]:
                maxb[i] = x
    shifts = []
    pos = 0
    for i in range(nv):
        shifts.append(pos)
        pos += max(1, (maxa[i] + maxb[i]).bit_length())

    def pack(e):
        key = 0
        for x, sh in zip(e, shifts):
            if x:
                key |= x << sh
        return key

    pa = [(pack(e), c) for e, c in ta.items()]
    pb = [(pack(e), c) for e, c in tb.items()]
    out: dict[int, Scalar] = {}
    get = out.get
    for ka, ca in pa:
        for kb, cb in pb:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    masks = []
    for i in range(nv):
        width = (shifts[i + 1] if i + 1 < nv else pos) - shifts[i]
        masks.append((shifts[i], (1 << width) - 1))
    result = {}
    for k, c in out.items():
        if c:
            result[tuple((k >> sh) & m for sh, m in masks)] = c
    return result


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Exact ``a op b`` for op in {"add", "sub", "mul"}; variable sets are unioned."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_sum(polys: Iterable[MultiPoly], variables: Sequence[str]) -> MultiPoly:
    """Sum of many polynomials, accumulated in one dict."""
    variables = tuple(variables)
    acc: dict = {}
    get = acc.get
    for p in polys:
        for e, c in p.with_variables(variables).terms.items():
            acc[e] = get(e, 0) + c
    return MultiPoly._raw(variables, {e: c for e, c in acc.items() if c})


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, in decreasing lex order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def coefficient_matrix(polys: Sequence[MultiPoly]) -> tuple[list[list[Scalar]], list[tuple[int, ...]]]:
    """Rows of coefficients of ``polys`` over the union of their monomials (grlex)."""
    if not polys:
        return [], []
    variables = polys[0].variables
    for p in polys[1:]:
        for v in p.variables:
            if v not in variables:
                variables = variables + (v,)
    polys = [p.with_variables(variables) for p in polys]
    monos = sorted({e for p in polys for e in p.terms}, key=lambda e: (sum(e), e), reverse=True)
    col = {e: j for j, e in enumerate(monos)}
    rows = []
    for p in polys:
        row = [0] * len(monos)
        for e, c in p.terms.items():
            row[col[e]] = c
        rows.append(row)
    return rows, monos


# ---------------------------------------------------------------------------
# matrices


class RationalMatrix:
    """Square matrix with exact rational entries.

    ``symmetric=True`` is a checked claim: construction fails if the entries
    are not symmetric.
    """

    __slots__ = ("n", "entries", "symmetric")

    def __init__(self, entries, symmetric: bool = False):
        rows = [[as_scalar(x) for x in row] for row in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        self.n = n
        self.entries = tuple(tuple(r) for r in rows)
        if symmetric and not self.is_symmetric():
            raise ValueError("matrix flagged symmetric is not symmetric")
        self.symmetric = symmetric

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], symmetric=True)

    @classmethod
    def zero(cls, n: int) -> RationalMatrix:
        return cls([[0] * n for _ in range(n)], symmetric=True)

    @classmethod
    def diag(cls, values: Iterable) -> RationalMatrix:
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], symmetric=True)

    def is_symmetric(self) -> bool:
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.n) for j in range(i))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_scalar(x) for x in r) + "]" for r in self.entries)
        return f"RationalMatrix([{body}])"

    def _keep_sym(self, other: RationalMatrix, result) -> RationalMatrix:
        sym = self.symmetric and other.symmetric
        return RationalMatrix(result, symmetric=sym)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        return self._keep_sym(other, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return self._keep_sym(other, [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def scale(self, t) -> RationalMatrix:
        t = as_scalar(t)
        return RationalMatrix([[t * x for x in r] for r in self.entries], symmetric=self.symmetric)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix(mat_mul(self.entries, other.entries))

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(transpose(self.entries), symmetric=self.symmetric)

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.n)), Fraction(0))

    def power(self, k: int) -> RationalMatrix:
        result = RationalMatrix.identity(self.n)
        for _ in range(k):
            result = result @ self
        if self.symmetric:
            result = RationalMatrix(result.entries, symmetric=True)
        return result

    def inverse(self) -> RationalMatrix:
        return RationalMatrix(inverse(self.entries))


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(x, y):
    """Product of two grids; entries may be any ring elements (scalars or MultiPolys)."""
    cols = list(zip(*y))
    out = []
    for row in x:
        new = []
        for col in cols:
            acc = 0
            for a, b in zip(row, col):
                if a and b:
                    acc = a * b + acc
            new.append(acc)
        out.append(new)
    return out


def trace(m):
    acc = 0
    for i in range(len(m)):
        acc = m[i][i] + acc
    return acc


def _integer_rows(m) -> tuple[list[list[int]], Fraction]:
    # scale every row to integers; returns the rows and the product of the scale factors
    rows = []
    scale = Fraction(1)
    for r in m:
        r = [as_scalar(x) for x in r]
        lcm = 1
        for x in r:
            d = x.denominator
            if d != 1:
                lcm = lcm * d // _gcd(lcm, d)
        rows.append([int(x * lcm) for x in r])
        scale *= lcm
    return rows, scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def det(m) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square grid")
    if n == 0:
        return Fraction(1)
    a, scale = _integer_rows(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1]) / scale


def rank(m) -> int:
    """Exact rank over the rationals via fraction-free elimination."""
    if not m or not m[0]:
        return 0
    a, _ = _integer_rows(m)
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        piv = a[r][col]
        row_r = a[r]
        for i in range(r + 1, nrows):
            row_i = a[i]
            f = row_i[col]
            if f:
                for j in range(col + 1, ncols):
                    row_i[j] = (row_i[j] * piv - f * row_r[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    row_i[j] = (row_i[j] * piv) // prev
            row_i[col] = 0
        prev = piv
        r += 1
    return r


def rref(m) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and the pivot columns."""
    a = [[as_scalar(x) for x in r] for r in m]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    return a, pivots


def nullspace(m) -> list[list[Fraction]]:
    """Basis of {v : m v = 0}."""
    if not m:
        return []
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def inverse(m) -> list[list[Fraction]]:
    n = len(m)
    aug = [[as_scalar(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def det_expand(m):
    """Determinant by Laplace expansion along the first row.

    Works over any commutative ring (used for small matrices of polynomials).
    """
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_expand(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_leibniz(m):
    """Determinant as the signed sum over permutations (oracle for small sizes)."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total - term if inversions % 2 else total + term
    return total


def char_poly(a: RationalMatrix) -> list[Fraction]:
    """Monic characteristic polynomial as (c_0, ..., c_{n-1}, 1).

    Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -Tr(A M_k)/k.
    Only divides by the integers 1..n.
    """
    n = a.n
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    entries = [list(r) for r in a.entries]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = mat_mul(entries, m)
        c = coeffs[n - k + 1]
        for i in range(n):
            m[i][i] += c
        am = mat_mul(entries, m)
        coeffs[n - k] = -Fraction(trace(am)) / k
    return coeffs

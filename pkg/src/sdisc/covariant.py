"""The exterior-power covariant of a symmetric matrix and what hangs off it.

For a symmetric n x n matrix A and 0 <= k <= n-2 put s = n-k-1 and
B_i = A^i - Tr(A^i)/n * I (i = 1..s).  The wedge B_1 ^ ... ^ B_s lives in the
s-th exterior power of the trace-zero symmetric matrices N; its Plucker
coordinates in a trace-orthogonal rational basis of N give, through the
Cauchy-Binet formula, a weighted sum of squares equal to the Gram determinant
det(Tr(B_i B_j)), which is a constant multiple of sDisc_k.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Sequence

from .exactmath import (
    MultiPoly,
    RationalMatrix,
    coefficient_matrix,
    det,
    det_expand,
    mat_mul,
    nullspace,
    poly_sum,
    rank,
    trace,
    transpose,
)
from .subdisc import (
    KRangeError,
    classify,
    entry_variables,
    sdisc_entry_polynomial,
    sdisc_of_matrix,
    symbolic_symmetric,
)

MAX_N = 6
# certificate terms above this degree are kept as unexpanded minors
EXPAND_MAX_DEGREE = 6


class SizeGuardError(ValueError):
    """The requested computation is beyond the supported desk-scale sizes."""


def _check_nk(n: int, k: int) -> None:
    if n < 2:
        raise KRangeError(f"n={n} must be at least 2")
    if not 0 <= k <= n - 2:
        raise KRangeError(f"k={k} out of range 0..{n - 2} for n={n}")


def _check_size(n: int) -> None:
    if n > MAX_N:
        raise SizeGuardError(f"n={n} exceeds the size guard n <= {MAX_N}")


def term_degree(n: int, k: int) -> int:
    return (n - k) * (n - k - 1) // 2


# ---------------------------------------------------------------------------
# trace-zero symmetric matrices


@dataclass(frozen=True)
class TraceZeroBasis:
    """Trace-orthogonal rational basis of the trace-zero symmetric matrices.

    The first n(n-1)/2 elements are E_ij + E_ji (i < j, lexicographic); the
    rest are diagonal, obtained by Gram-Schmidt (no normalization) from
    diag(e_m - e_{m+1}).
    """

    n: int
    matrices: tuple[RationalMatrix, ...]
    norms: tuple[Fraction, ...]
    off_diagonal: tuple[tuple[int, int], ...]
    diagonals: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrices)

    def coordinates(self, m) -> list:
        """Coordinates of a trace-zero symmetric grid (scalars or polynomials)."""
        out = [m[i][j] for i, j in self.off_diagonal]
        for vec, norm in zip(self.diagonals, self.norms[len(self.off_diagonal):]):
            acc = 0
            for i, v in enumerate(vec):
                if v:
                    acc = m[i][i] * v + acc
            out.append(acc * (1 / norm))
        return out

    def combine(self, coords: Sequence) -> RationalMatrix:
        n = self.n
        grid = [[Fraction(0)] * n for _ in range(n)]
        for c, b in zip(coords, self.matrices):
            for i in range(n):
                for j in range(n):
                    grid[i][j] += c * b.entries[i][j]
        return RationalMatrix(grid, symmetric=True)


@lru_cache(maxsize=None)
def trace_zero_basis(n: int) -> TraceZeroBasis:
    if n < 2:
        raise ValueError("n must be at least 2")
    mats, norms, off = [], [], []
    for i, j in combinations(range(n), 2):
        grid = [[0] * n for _ in range(n)]
        grid[i][j] = grid[j][i] = 1
        mats.append(RationalMatrix(grid, symmetric=True))
        norms.append(Fraction(2))
        off.append((i, j))
    diags: list[list[Fraction]] = []
    for m in range(n - 1):
        v = [Fraction(0)] * n
        v[m], v[m + 1] = Fraction(1), Fraction(-1)
        for u in diags:
            proj = sum(a * b for a, b in zip(v, u)) / sum(a * a for a in u)
            v = [a - proj * b for a, b in zip(v, u)]
        diags.append(v)
        mats.append(RationalMatrix.diag(v))
        norms.append(sum(a * a for a in v))
    return TraceZeroBasis(n, tuple(mats), tuple(norms), tuple(off), tuple(tuple(d) for d in diags))


# ---------------------------------------------------------------------------
# wedges


@dataclass(frozen=True)
class WedgeVector:
    """Element of the s-th exterior power of N, by Plucker coordinates.

    ``coords`` maps increasing s-tuples of basis indices to nonzero values.
    """

    n: int
    s: int
    coords: dict = field(hash=False)

    def is_zero(self) -> bool:
        return not self.coords

    def __getitem__(self, subset) -> Fraction:
        return self.coords.get(tuple(subset), Fraction(0))


def wedge_rows(rows: Sequence[Sequence]) -> dict:
    """Plucker coordinates of the wedge of the given coordinate rows.

    Entry types may be scalars or polynomials; coordinate S is the minor of
    the rows on the columns S.  Zero coordinates are dropped.
    """
    scale = 1
    if all(isinstance(x, (int, Fraction)) for row in rows for x in row):
        # clear denominators row by row and work in integers
        int_rows = []
        for row in rows:
            den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
            int_rows.append([int(x * den) for x in row])
            scale *= den
        rows = int_rows
    coords = {(): 1}
    for row in rows:
        nxt: dict = {}
        for subset, val in coords.items():
            for b, x in enumerate(row):
                if not x or b in subset:
                    continue
                # moving b into sorted position past the larger indices
                flips = sum(1 for t in subset if t > b)
                pos = len(subset) - flips
                key = subset[:pos] + (b,) + subset[pos:]
                term = val * x
                prev = nxt.get(key, 0)
                nxt[key] = prev - term if flips % 2 else prev + term
        coords = {key: v for key, v in nxt.items() if v}
    if scale != 1:
        coords = {key: Fraction(v, scale) for key, v in coords.items()}
    return coords


def _require_symmetric(a: RationalMatrix) -> None:
    if not a.is_symmetric():
        raise ValueError("matrix is not symmetric")


def adjusted_powers(a, n: int, s: int) -> list:
    """B_i = A^i - Tr(A^i)/n I for i = 1..s, on any grid of ring elements."""
    out = []
    pw = a
    for i in range(1, s + 1):
        if i > 1:
            pw = mat_mul(pw, a)
        shift = trace(pw) * Fraction(1, n)
        b = [list(row) for row in pw]
        for d in range(n):
            b[d][d] = b[d][d] - shift
        out.append(b)
    return out


def compute_Tk(a: RationalMatrix, k: int) -> WedgeVector:
    n = a.n
    _check_nk(n, k)
    _require_symmetric(a)
    basis = trace_zero_basis(n)
    s = n - k - 1
    rows = [basis.coordinates(b) for b in adjusted_powers([list(r) for r in a.entries], n, s)]
    return WedgeVector(n, s, wedge_rows(rows))


def vanishing_test(a: RationalMatrix, k: int) -> bool:
    """True iff the covariant vanishes, i.e. A has at most n-k-1 distinct eigenvalues."""
    return compute_Tk(a, k).is_zero()


def gram_matrix(a: RationalMatrix, k: int) -> list[list[Fraction]]:
    n = a.n
    bs = adjusted_powers([list(r) for r in a.entries], n, n - k - 1)
    return [[Fraction(trace(mat_mul(x, y))) for y in bs] for x in bs]


def gram_sos_value(a: RationalMatrix, k: int) -> Fraction:
    """det(Tr(B_i B_j)), cross-checked against the weighted Plucker sum."""
    _check_nk(a.n, k)
    _require_symmetric(a)
    value = det(gram_matrix(a, k))
    norms = trace_zero_basis(a.n).norms
    wedge = compute_Tk(a, k)
    plucker = Fraction(0)
    for subset, c in wedge.coords.items():
        w = Fraction(1)
        for b in subset:
            w *= norms[b]
        plucker += w * c * c
    assert plucker == value, "Cauchy-Binet consistency failed"
    return value


def random_rational(rng: random.Random, bound: int = 6, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_symmetric(n: int, rng: random.Random, bound: int = 6, den: int = 4) -> RationalMatrix:
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            grid[i][j] = grid[j][i] = random_rational(rng, bound, den)
    return RationalMatrix(grid, symmetric=True)


def random_integer_symmetric(n: int, rng: random.Random, bound: int = 9) -> RationalMatrix:
    return random_symmetric(n, rng, bound, 1)


@lru_cache(maxsize=None)
def proportionality_constant(n: int, k: int, samples: int = 20, seed: int = 0) -> Fraction:
    """The constant c with det Gram = c * sDisc_k, checked equal on ``samples`` points."""
    _check_nk(n, k)
    rng = random.Random(seed)
    ratios = []
    while len(ratios) < samples:
        a = random_symmetric(n, rng)
        sd = sdisc_of_matrix(a, k)
        if sd == 0:
            continue
        ratios.append(gram_sos_value(a, k) / sd)
    if len(set(ratios)) != 1:
        raise ArithmeticError(f"Gram determinant is not proportional to sDisc_{k} for n={n}: {set(ratios)}")
    return ratios[0]


# ---------------------------------------------------------------------------
# symbolic covariant and certificates


@lru_cache(maxsize=None)
def symbolic_rows(n: int, k: int) -> tuple[tuple[MultiPoly, ...], ...]:
    """Coordinates of B_1..B_s for the generic symmetric matrix (entry variables)."""
    _check_nk(n, k)
    basis = trace_zero_basis(n)
    names = entry_variables(n)
    rows = []
    for b in adjusted_powers(symbolic_symmetric(n), n, n - k - 1):
        coords = basis.coordinates(b)
        rows.append(tuple(c if isinstance(c, MultiPoly) else MultiPoly.constant(c, names) for c in coords))
    return tuple(rows)


def expandable(n: int, k: int) -> bool:
    return term_degree(n, k) <= EXPAND_MAX_DEGREE


@lru_cache(maxsize=None)
def plucker_polynomials(n: int, k: int) -> tuple[tuple[tuple[int, ...], MultiPoly], ...]:
    """All s-subsets in lex order with the expanded Plucker coordinate of T_k."""
    _check_nk(n, k)
    _check_size(n)
    if not expandable(n, k):
        raise SizeGuardError(
            f"symbolic expansion of T_{k} for n={n} (degree {term_degree(n, k)}) exceeds degree {EXPAND_MAX_DEGREE}"
        )
    coords = wedge_rows(symbolic_rows(n, k))
    names = entry_variables(n)
    dim = trace_zero_basis(n).dim
    return tuple(
        (subset, coords.get(subset, MultiPoly.zero(names))) for subset in combinations(range(dim), n - k - 1)
    )


class SosCertificate:
    """Exact identity c * sDisc_k = sum_i w_i * g_i^2 on symmetric matrices.

    Terms are either explicit polynomials over the entry variables, or, for
    certificates emitted here, minors of the symbolic coordinate rows of
    B_1..B_s that are expanded only on demand.
    """

    def __init__(self, n: int, k: int, c, weights, polys=None, *, subsets=None, lazy: bool = False):
        self.n = n
        self.k = k
        self.c = Fraction(c)
        self.weights = tuple(Fraction(w) for w in weights)
        self.subsets = tuple(subsets) if subsets is not None else None
        self._polys = tuple(polys) if polys is not None else None
        self.lazy = lazy
        if self._polys is None and not lazy:
            raise ValueError("explicit certificates need their polynomials")
        if self._polys is not None and len(self._polys) != len(self.weights):
            raise ValueError("weights and polynomials differ in length")
        if self.c <= 0 or any(w <= 0 for w in self.weights):
            raise ValueError("constant and weights must be positive")

    @property
    def variables(self) -> tuple[str, ...]:
        return entry_variables(self.n)

    @property
    def degree(self) -> int:
        return term_degree(self.n, self.k)

    def __len__(self) -> int:
        return len(self.weights)

    def is_expanded(self) -> bool:
        return self._polys is not None

    @property
    def polys(self) -> tuple[MultiPoly, ...]:
        if self._polys is None:
            self._polys = tuple(p for _, p in plucker_polynomials(self.n, self.k))
        return self._polys

    @property
    def terms(self) -> list[tuple[Fraction, MultiPoly]]:
        return list(zip(self.weights, self.polys))

    def term_values(self, a: RationalMatrix) -> list[Fraction]:
        """g_i(A) for every term."""
        if self._polys is not None:
            point = [a.entries[i][j] for i in range(self.n) for j in range(i, self.n)]
            if all(x.denominator == 1 for x in point):
                point = [x.numerator for x in point]
            return [Fraction(p.evaluate(point)) for p in self._polys]
        wedge = compute_Tk(a, self.k)
        return [wedge[subset] for subset in self.subsets]

    def rhs_value(self, a: RationalMatrix) -> Fraction:
        return sum((w * g * g for w, g in zip(self.weights, self.term_values(a))), Fraction(0))

    def terms_homogeneous(self) -> bool:
        """Every term is homogeneous of degree (n-k)(n-k-1)/2 (zero counts as homogeneous).

        Unexpanded terms are minors whose i-th row is homogeneous of degree i,
        so checking the rows suffices.
        """
        d = self.degree
        if self._polys is not None or expandable(self.n, self.k):
            return all(p.is_homogeneous(d) for p in self.polys)
        rows = symbolic_rows(self.n, self.k)
        return all(x.is_homogeneous(i + 1) for i, row in enumerate(rows) for x in row)


def emit_certificate(n: int, k: int) -> SosCertificate:
    """Weighted SOS certificate for sDisc_k on n x n symmetric matrices."""
    _check_nk(n, k)
    _check_size(n)
    basis = trace_zero_basis(n)
    subsets = list(combinations(range(basis.dim), n - k - 1))
    weights = []
    for subset in subsets:
        w = Fraction(1)
        for b in subset:
            w *= basis.norms[b]
        weights.append(w)
    c = proportionality_constant(n, k)
    polys = [p for _, p in plucker_polynomials(n, k)] if expandable(n, k) else None
    return SosCertificate(n, k, c, weights, polys, subsets=subsets, lazy=polys is None)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    mode: str
    checked: int
    violation: RationalMatrix | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None


def sample_lines(n: int, lines: int, points_per_line: int, seed: int) -> list[RationalMatrix]:
    """Points A0 + t*A1 (t = 0..points_per_line-1) on random lines of symmetric matrices."""
    rng = random.Random(seed)
    out = []
    for _ in range(lines):
        a0 = random_integer_symmetric(n, rng)
        a1 = random_integer_symmetric(n, rng)
        for t in range(points_per_line):
            out.append(a0 + a1.scale(t))
    return out


def verify_certificate(cert: SosCertificate, mode: str = "auto", samples: int | None = None, seed: int = 0) -> VerifyResult:
    """Check c * sDisc_k == sum w g^2.

    ``symbolic`` expands both sides.  ``samples`` evaluates exactly on random
    lines: the identity restricted to a line is a univariate polynomial of
    degree (n-k)(n-k-1), so agreement at that many plus one points proves it on
    the whole line.
    """
    n, k = cert.n, cert.k
    if mode == "auto":
        mode = "symbolic" if n <= 4 else "samples"
    if mode == "symbolic":
        lhs = sdisc_entry_polynomial(n, k).scale(cert.c)
        rhs = poly_sum(((g * g).scale(w) for w, g in cert.terms), cert.variables)
        return VerifyResult(lhs == rhs, "symbolic", 1)
    if mode != "samples":
        raise ValueError(f"unknown mode {mode!r}")
    per_line = 2 * term_degree(n, k) + 1
    if samples is None:
        samples = 2 * per_line
    lines = max(1, -(-samples // per_line))
    points = sample_lines(n, lines, per_line, seed)
    for a in points:
        lhs = cert.c * sdisc_of_matrix(a, k)
        rhs = cert.rhs_value(a)
        if lhs != rhs:
            return VerifyResult(False, "samples", len(points), a, lhs, rhs)
    return VerifyResult(True, "samples", len(points))


def gram_entry_polynomial(n: int, k: int) -> MultiPoly:
    """det(Tr(B_i B_j)) for the generic symmetric matrix."""
    _check_nk(n, k)
    bs = adjusted_powers(symbolic_symmetric(n), n, n - k - 1)
    g = [[trace(mat_mul(x, y)) for y in bs] for x in bs]
    value = det_expand(g)
    if not isinstance(value, MultiPoly):
        value = MultiPoly.constant(value, entry_variables(n))
    return value


def rank_of_Tk_star(n: int, k: int) -> int:
    """Dimension of the span of the Plucker coordinate polynomials of T_k."""
    polys = [p for _, p in plucker_polynomials(n, k)]
    rows, _ = coefficient_matrix(polys)
    return rank(rows)


# ---------------------------------------------------------------------------
# the commutator map gamma


@lru_cache(maxsize=None)
def skew_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Basis E_ij - E_ji (i < j) of so_n, in lex order."""
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _commutator_table(n: int) -> tuple[dict, int]:
    basis = trace_zero_basis(n)
    pairs = skew_pairs(n)
    table = {}
    for a in range(basis.dim):
        for b in range(basis.dim):
            x, y = basis.matrices[a].entries, basis.matrices[b].entries
            xy, yx = mat_mul(x, y), mat_mul(y, x)
            comm = {r: xy[i][j] - yx[i][j] for r, (i, j) in enumerate(pairs) if xy[i][j] != yx[i][j]}
            table[a, b] = comm
    # integer form: every value times a common denominator
    den = lcm(*(Fraction(v).denominator for comm in table.values() for v in comm.values()))
    return {key: [(r, int(v * den)) for r, v in comm.items()] for key, comm in table.items()}, den


def gamma_apply(w: WedgeVector) -> dict:
    """Image of w under a_1^...^a_m -> sum_{i<j} (-1)^(i+j) [a_i, a_j] (x) (wedge of the rest).

    Returns {(skew index, (m-2)-subset): value} with zero entries dropped.
    """
    m = w.s
    if m < 2:
        raise ValueError("gamma needs exterior degree at least 2")
    table, den = _commutator_table(w.n)
    cden = lcm(*(Fraction(c).denominator for c in w.coords.values())) if w.coords else 1
    pairs = list(combinations(range(m), 2))
    out: dict = {}
    for subset, c in w.coords.items():
        c = int(c * cden)
        for i, j in pairs:
            comm = table[subset[i], subset[j]]
            if not comm:
                continue
            # positions are 1-based in the sign
            sc = -c if (i + j) % 2 else c
            rest = subset[:i] + subset[i + 1:j] + subset[j + 1:]
            for r, v in comm:
                key = (r, rest)
                out[key] = out.get(key, 0) + sc * v
    total = den * cden
    return {key: Fraction(v, total) for key, v in out.items() if v}


def wedge_of(n: int, matrices: Sequence[RationalMatrix]) -> WedgeVector:
    basis = trace_zero_basis(n)
    rows = [basis.coordinates(m.entries) for m in matrices]
    return WedgeVector(n, len(rows), wedge_rows(rows))


def gamma_matrix(n: int, m: int) -> tuple[list[list[Fraction]], list]:
    """Matrix of gamma: rows indexed by (skew index, (m-2)-subset), columns by m-subsets."""
    dim = trace_zero_basis(n).dim
    cols = list(combinations(range(dim), m))
    row_keys = [(r, rest) for r in range(len(skew_pairs(n))) for rest in combinations(range(dim), m - 2)]
    index = {key: i for i, key in enumerate(row_keys)}
    grid = [[Fraction(0)] * len(cols) for _ in row_keys]
    for j, subset in enumerate(cols):
        image = gamma_apply(WedgeVector(n, m, {subset: Fraction(1)}))
        for key, v in image.items():
            grid[index[key]][j] = Fraction(v)
    return grid, row_keys


@dataclass(frozen=True)
class KernelReport:
    n: int
    k: int
    wedge_dim: int
    rank: int
    kernel_dim: int
    gamma_rank: int
    stacked_rank: int

    @property
    def gamma_in_kernel(self) -> bool:
        return self.stacked_rank == self.kernel_dim


def tk_star_kernel_report(n: int, k: int) -> KernelReport:
    """Rank of T_k* and containment of the image of gamma* in its kernel."""
    polys = [p for _, p in plucker_polynomials(n, k)]
    rows, _ = coefficient_matrix(polys)
    r = rank(rows)
    kernel = nullspace(transpose(rows))
    s = n - k - 1
    if s >= 2:
        gam, _ = gamma_matrix(n, s)
        gam = [row for row in gam if any(row)]
    else:
        gam = []
    g_rank = rank(gam) if gam else 0
    stacked = rank(kernel + gam) if (kernel or gam) else 0
    return KernelReport(n, k, len(polys), r, len(kernel), g_rank, stacked)


# ---------------------------------------------------------------------------
# highest weight witness


def j_form(n: int) -> RationalMatrix:
    """Gram matrix of the split quadratic form: [[0, I], [I, 0]] (plus a 1 for odd n)."""
    l = n // 2
    grid = [[0] * n for _ in range(n)]
    for i in range(l):
        grid[i][l + i] = grid[l + i][i] = 1
    if n % 2:
        grid[n - 1][n - 1] = 1
    return RationalMatrix(grid, symmetric=True)


def cycle_order(n: int) -> list[int]:
    """0-based orbit of e_1: e_1, e_{l+1}, ..., e_n, e_l, ..., e_2."""
    l = n // 2
    return [0] + list(range(l, n)) + list(range(l - 1, 0, -1))


def cyclic_matrix(n: int) -> RationalMatrix:
    order = cycle_order(n)
    grid = [[0] * n for _ in range(n)]
    for t in range(n):
        grid[order[(t + 1) % n]][order[t]] = 1
    return RationalMatrix(grid)


def is_j_selfadjoint(a: RationalMatrix, j: RationalMatrix) -> bool:
    return a.transpose() @ j == j @ a


def highest_weight(n: int, s: int) -> tuple[int, ...]:
    """Weight of x_1 ^ ... ^ x_s, zero-padded to floor(n/2) entries."""
    l = n // 2
    if not 1 <= s <= n - 1:
        raise ValueError(f"s={s} out of range 1..{n - 1}")
    if s <= l:
        lam = [s + 1] + [1] * (s - 1)
    else:
        lam = [s + 1] + [1] * (n - s - 1)
    return tuple(lam + [0] * (l - len(lam)))


def _functional_matrix(bs: Sequence, rows: Sequence[int]) -> list[list]:
    # x_i(B_j) = (row_i, 1) entry of B_j
    return [[b[r][0] for b in bs] for r in rows]


@dataclass(frozen=True)
class WitnessResult:
    n: int
    k: int
    pairing: Fraction
    weight: tuple[int, ...]
    j_selfadjoint: bool
    trace_zero: bool


def highest_weight_witness(n: int, k: int) -> WitnessResult:
    """Evaluate T_k* of the highest weight vector x_1^...^x_s at the cyclic matrix."""
    _check_nk(n, k)
    s = n - k - 1
    j = j_form(n)
    a = cyclic_matrix(n)
    selfadj = is_j_selfadjoint(a, j)
    tr0 = a.trace() == 0
    if not (selfadj and tr0):
        raise AssertionError("cyclic matrix is not a trace-zero J-selfadjoint matrix")
    bs = adjusted_powers([list(r) for r in a.entries], n, s)
    pairing = det(_functional_matrix(bs, cycle_order(n)[1:s + 1]))
    if abs(pairing) != 1:
        raise AssertionError(f"pairing {pairing} is not +-1")
    return WitnessResult(n, k, pairing, highest_weight(n, s), selfadj, tr0)


def torus_element(n: int, t: Sequence) -> list[Fraction]:
    t = [Fraction(x) for x in t]
    if any(x == 0 for x in t):
        raise ValueError("torus entries must be nonzero")
    d = t + [1 / x for x in t]
    if n % 2:
        d.append(Fraction(1))
    return d


def random_j_selfadjoint(n: int, rng: random.Random) -> RationalMatrix:
    """J*S minus its trace part, for a random rational symmetric S."""
    b = j_form(n) @ random_symmetric(n, rng)
    return b - RationalMatrix.identity(n).scale(b.trace() / n)


def torus_factor(n: int, s: int, t: Sequence) -> Fraction:
    """prod t_i^lambda_i for the highest weight of the s-th wedge."""
    torus_element(n, t)
    chi = Fraction(1)
    for ti, li in zip(t, highest_weight(n, s)):
        chi *= Fraction(ti) ** li
    return chi


def torus_weight_check(n: int, s: int, t: Sequence, seed: int = 0, tries: int = 50) -> bool:
    """x_1^...^x_s scales by prod t_i^lambda_i under conjugation by the torus element."""
    l = n // 2
    if len(t) != l:
        raise ValueError(f"need {l} torus parameters")
    d = torus_element(n, t)
    chi = torus_factor(n, s, t)
    rows = cycle_order(n)[1:s + 1]
    j = j_form(n)
    rng = random.Random(seed)
    for _ in range(tries):
        bs = [random_j_selfadjoint(n, rng) for _ in range(s)]
        assert all(is_j_selfadjoint(b, j) and b.trace() == 0 for b in bs)
        before = det(_functional_matrix([b.entries for b in bs], rows))
        if before == 0:
            continue
        moved = [[[b.entries[p][q] * d[q] / d[p] for q in range(n)] for p in range(n)] for b in bs]
        after = det(_functional_matrix(moved, rows))
        return after == chi * before
    raise ArithmeticError("no test matrices with a nonzero functional value")


# ---------------------------------------------------------------------------
# test points with prescribed eigenvalue multiplicities


def cayley(s_grid) -> RationalMatrix:
    """(I - S)(I + S)^-1, orthogonal for skew-symmetric S."""
    n = len(s_grid)
    eye = RationalMatrix.identity(n)
    sm = RationalMatrix(s_grid)
    return (eye - sm) @ (eye + sm).inverse()


def random_orthogonal(n: int, rng: random.Random) -> RationalMatrix:
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = random_rational(rng, 3, 3)
            grid[i][j], grid[j][i] = v, -v
    q = cayley(grid)
    assert q @ q.transpose() == RationalMatrix.identity(n)
    return q


def sample_Ek(n: int, multiplicities: Sequence[int], seed: int = 0, verify: bool = True) -> RationalMatrix:
    """Q D Q^T with D realizing the given eigenvalue multiplicities, Q rational orthogonal."""
    parts = list(multiplicities)
    if any(p < 1 for p in parts) or sum(parts) != n:
        raise ValueError(f"{parts} is not a partition of {n}")
    rng = random.Random(seed)
    values: list[Fraction] = []
    while len(values) < len(parts):
        v = random_rational(rng, 9, 3)
        if v not in values:
            values.append(v)
    diag = [v for v, p in zip(values, parts) for _ in range(p)]
    q = random_orthogonal(n, rng)
    a = q @ RationalMatrix.diag(diag) @ q.transpose()
    a = RationalMatrix(a.entries, symmetric=True)
    if verify:
        got = classify(a).distinct
        assert got == len(parts), f"expected {len(parts)} distinct eigenvalues, got {got}"
    return a

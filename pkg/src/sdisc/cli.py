"""Command line interface: ``sdisc compute|classify|sos|sos-verify|bounds|verify``.

Exit codes: 0 success, 2 unreadable input, 3 k (or size) out of range,
4 a certificate or verification check failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .covariant import (
    SizeGuardError,
    SosCertificate,
    compute_Tk,
    emit_certificate,
    gamma_apply,
    gram_sos_value,
    highest_weight_witness,
    proportionality_constant,
    random_symmetric,
    sample_Ek,
    torus_weight_check,
    trace_zero_basis,
    vanishing_test,
    verify_certificate,
    wedge_of,
)
from .exactmath import MultiPoly, RationalMatrix, as_scalar, format_scalar
from .idealcheck import lemma_holds, lemma_sweep, symmetrization_identity
from .repdim import mu_bound
from .subdisc import KRangeError, classify, entry_variables, sdisc_from_roots, sdisc_of_matrix

EXIT_PARSE = 2
EXIT_RANGE = 3
EXIT_FAILED = 4

TERM_ORDER = "graded lexicographic over a11, a12, ..., a1n, a22, ..., ann (upper triangle, row-major)"


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# file formats


def _parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"rationals must be strings or integers, got {x!r}")
    try:
        return as_scalar(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {x!r}") from exc


def matrix_from_json(data: dict) -> RationalMatrix:
    try:
        n = data["n"]
        rows = data["entries"]
    except (KeyError, TypeError) as exc:
        raise InputError("matrix file needs 'n' and 'entries'") from exc
    if not isinstance(n, int) or len(rows) != n or any(len(r) != n for r in rows):
        raise InputError("entries must form an n x n grid")
    grid = [[_parse_rational(x) for x in row] for row in rows]
    symmetric = bool(data.get("symmetric", False))
    try:
        return RationalMatrix(grid, symmetric=symmetric)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def matrix_to_json(a: RationalMatrix) -> dict:
    out = {"n": a.n, "entries": [[format_scalar(x) for x in row] for row in a.entries]}
    if a.symmetric:
        out["symmetric"] = True
    return out


def certificate_to_json(cert: SosCertificate) -> dict:
    terms = []
    for w, g in cert.terms:
        poly = [{"exponents": list(e), "coeff": format_scalar(c)} for e, c in g.sorted_terms()]
        terms.append({"weight": format_scalar(w), "poly": poly})
    return {
        "n": cert.n,
        "k": cert.k,
        "c": format_scalar(cert.c),
        "terms": terms,
        "metadata": {
            "tool": f"sdisc {__version__}",
            "variables": list(entry_variables(cert.n)),
            "term_order": TERM_ORDER,
        },
    }


def certificate_from_json(data: dict) -> SosCertificate:
    try:
        n, k = data["n"], data["k"]
        c = _parse_rational(data["c"])
        names = entry_variables(n)
        weights, polys = [], []
        for term in data["terms"]:
            weights.append(_parse_rational(term["weight"]))
            coeffs = {}
            for mono in term["poly"]:
                exps = tuple(mono["exponents"])
                if len(exps) != len(names) or not all(isinstance(e, int) and e >= 0 for e in exps):
                    raise InputError(f"bad exponent vector {list(exps)}")
                coeffs[exps] = _parse_rational(mono["coeff"])
            polys.append(MultiPoly(names, coeffs))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed certificate: {exc}") from exc
    try:
        return SosCertificate(n, k, c, weights, polys)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args) -> int:
    if (args.roots is None) == (args.matrix is None):
        raise InputError("give exactly one of --roots or --matrix")
    if args.roots is not None:
        roots = [_parse_rational(r) for r in args.roots.split(",") if r.strip()]
        if not roots:
            raise InputError("no roots given")
        value = sdisc_from_roots(roots, args.k)
    else:
        value = sdisc_of_matrix(matrix_from_json(_load_json(args.matrix)), args.k)
    print(format_scalar(value))
    return 0


def cmd_classify(args) -> int:
    result = classify(matrix_from_json(_load_json(args.matrix)))
    values = ", ".join(format_scalar(v) for v in result.sdisc)
    print(f"distinct={result.distinct}; sdisc=[{values}]")
    return 0


def cmd_sos(args) -> int:
    cert = emit_certificate(args.n, args.k)
    if not cert.is_expanded():
        raise SizeGuardError(f"certificate for n={args.n}, k={args.k} is too large to write out")
    with open(args.out, "w") as fh:
        json.dump(certificate_to_json(cert), fh, indent=1)
    print(f"c={format_scalar(cert.c)}; terms={len(cert)}; degree={cert.degree}")
    return 0


def cmd_sos_verify(args) -> int:
    cert = certificate_from_json(_load_json(args.cert))
    if args.symbolic:
        result = verify_certificate(cert, "symbolic")
    elif args.samples is not None:
        result = verify_certificate(cert, "samples", samples=args.samples, seed=args.seed)
    else:
        result = verify_certificate(cert, "auto", seed=args.seed)
    print(f"c={format_scalar(cert.c)}; terms={len(cert)}; mode={result.mode}; ok={result.ok}")
    if not result.ok:
        if result.violation is not None:
            print(f"violating sample: {json.dumps(matrix_to_json(result.violation))}")
            print(f"lhs={format_scalar(result.lhs)} rhs={format_scalar(result.rhs)}")
        return EXIT_FAILED
    return 0


def cmd_bounds(args) -> int:
    if args.n < 2:
        raise KRangeError(f"n={args.n} leaves no admissible k")
    print("k\tweight\tdoubled\tbound\troy_count")
    for k in range(args.n - 1):
        r = mu_bound(args.n, k)
        weight = "(" + ",".join(str(x) for x in r.weight_used.lam) + ")"
        print(f"{k}\t{weight}\t{'yes' if r.doubled else 'no'}\t{r.bound}\t{r.roy_count}")
    return 0


# -- verification suites -----------------------------------------------------


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def check_lemma(n: int, k: int) -> tuple[bool, str]:
    reports = lemma_sweep(n, k)
    sym = symmetrization_identity(n, k)
    ranks = [r.invariant_rank for r in reports]
    ok = lemma_holds(reports) and sym.low_vanish and sym.staircase_ok
    return ok, f"ranks={ranks} low_checked={sym.low_checked}"


def check_covariant(n: int, k: int, seed: int) -> tuple[bool, str]:
    c = proportionality_constant(n, k)
    rng = random.Random(seed)
    ok = True
    for _ in range(5):
        a = random_symmetric(n, rng)
        ok &= gram_sos_value(a, k) == c * sdisc_of_matrix(a, k)
    parts = 0
    for part in _partitions(n):
        a = sample_Ek(n, part, seed)
        ok &= vanishing_test(a, k) == (len(part) <= n - k - 1)
        parts += 1
    return ok, f"c={format_scalar(c)} partitions={parts}"


def check_witness(n: int, k: int, seed: int) -> tuple[bool, str]:
    w = highest_weight_witness(n, k)
    rng = random.Random(seed)
    ok = abs(w.pairing) == 1
    for _ in range(5):
        t = []
        while len(t) < n // 2:
            x = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
            if x:
                t.append(x)
        ok &= torus_weight_check(n, n - k - 1, t, seed=rng.randint(0, 10**6))
    return ok, f"pairing={format_scalar(w.pairing)} weight={w.weight}"


def check_gamma(n: int, k: int, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    ok = True
    for _ in range(5):
        ok &= not gamma_apply(compute_Tk(random_symmetric(n, rng), k))
    return ok, "gamma(T_k(A)) = 0 on 5 samples"


def check_gamma_control(n: int) -> tuple[bool, str]:
    basis = trace_zero_basis(n)
    a = basis.matrices[basis.off_diagonal.index((0, 1))]
    b = basis.matrices[basis.off_diagonal.index((0, 2))]
    image = gamma_apply(wedge_of(n, [a, b]))
    return bool(image), "gamma((E12+E21)^(E13+E31)) != 0"


def _run_check(job):
    func, args = job
    try:
        return func(*args)
    except Exception as exc:  # reported as a failed check
        return False, f"error: {exc!r}"


def build_checks(suite: str, max_n: int, seed: int) -> list:
    checks = []
    suites = ["lemma", "covariant", "witness", "gamma"] if suite == "all" else [suite]
    for name in suites:
        if name == "lemma":
            for n in range(2, min(max_n, 5) + 1):
                for k in range(n - 1):
                    checks.append((name, f"n={n} k={k}", (check_lemma, (n, k))))
        elif name == "covariant":
            for n in range(2, max_n + 1):
                for k in range(n - 1):
                    checks.append((name, f"n={n} k={k}", (check_covariant, (n, k, seed))))
        elif name == "witness":
            for n in range(2, max_n + 1):
                for k in range(n - 1):
                    checks.append((name, f"n={n} k={k}", (check_witness, (n, k, seed))))
        elif name == "gamma":
            for n in range(3, max_n + 1):
                for k in range(n - 2):
                    checks.append((name, f"n={n} k={k}", (check_gamma, (n, k, seed))))
                checks.append((name, f"n={n} control", (check_gamma_control, (n,))))
    return checks


def cmd_verify(args) -> int:
    checks = build_checks(args.suite, args.max_n, args.seed)
    jobs = [job for _, _, job in checks]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_check, jobs))
    else:
        results = map(_run_check, jobs)
    failures = 0
    for (suite, label, _), (ok, detail) in zip(checks, results):
        print(f"{'PASS' if ok else 'FAIL'} {suite} {label} {detail}", flush=True)
        failures += not ok
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return EXIT_FAILED if failures else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdisc", description="Exact subdiscriminants and their SOS certificates.")
    parser.add_argument("--version", action="version", version=f"sdisc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="sDisc_k of roots or of a matrix")
    p.add_argument("--roots", help="comma-separated rationals")
    p.add_argument("--matrix", help="matrix JSON file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", help="number of distinct eigenvalues")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sos", help="write a weighted SOS certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sos)

    p = sub.add_parser("sos-verify", help="check a certificate file")
    p.add_argument("--cert", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true")
    mode.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sos_verify)

    p = sub.add_parser("bounds", help="bounds on the number of squares, per k")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=["lemma", "covariant", "witness", "gamma", "all"], default="all")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (KRangeError, SizeGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE


if __name__ == "__main__":
    sys.exit(main())

"""Brute-force oracle for the constants c_{n,k} with det Gram = c * sDisc_k.

Standalone on purpose (no package imports).  At a diagonal matrix with
eigenvalues 0, 1, ..., n-1 every B_i is diagonal, so Tr(B_i B_j) is a dot
product of eigenvalue vectors, and sDisc_k is the subset sum of squared
Vandermonde products.  Run once before the build; output is frozen in
constants.json.
"""

import json
from fractions import Fraction
from itertools import combinations, permutations
from pathlib import Path


def leibniz(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Fraction(sign)
        for i, p in enumerate(perm):
            term *= m[i][p]
        total += term
    return total


def ratio(n, k):
    eig = [Fraction(i) for i in range(n)]
    s = n - k - 1
    bs = []
    for i in range(1, s + 1):
        powers = [x**i for x in eig]
        mean = sum(powers) / n
        bs.append([x - mean for x in powers])
    gram = [[sum(a * b for a, b in zip(u, v)) for v in bs] for u in bs]
    sdisc = Fraction(0)
    for subset in combinations(eig, n - k):
        d = Fraction(1)
        for a, b in combinations(subset, 2):
            d *= a - b
        sdisc += d * d
    return leibniz(gram) / sdisc


if __name__ == "__main__":
    table = {f"{n},{k}": str(ratio(n, k)) for n in range(2, 7) for k in range(n - 1)}
    Path(__file__).with_name("constants.json").write_text(json.dumps(table, indent=1) + "\n")
    print(table)

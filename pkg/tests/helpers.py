"""Independent oracles and shared bookkeeping for the test suite.

The oracles here deliberately avoid the library's own algorithms: subgroup
spans are grown by breadth-first addition, invariant factors come from
determinantal divisors (gcds of minors), and curve points come from a raw
scan of projective space.  Acceptance results are recorded into a list the
session hook prints at the end of the run.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

ACCEPTANCE_LINES: list = []


def record_acceptance(number: int, description: str, ok: bool) -> bool:
    status = "pass" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"ACCEPTANCE {number}: {description} ... {status}")
    return ok


def span_by_enumeration(rows, width: int, modulus: int) -> set:
    """All Z-combinations of the rows mod `modulus`, grown one addition at a
    time (no Howell machinery involved)."""
    zero = tuple(0 for _ in range(width))
    seen = {zero}
    frontier = [zero]
    gens = [tuple(x % modulus for x in row) for row in rows]
    while frontier:
        base = frontier.pop()
        for gen in gens:
            nxt = tuple((a + b) % modulus for a, b in zip(base, gen))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def brute_projective_points(g: int, q: int, lambdas) -> list:
    """Scan every tuple of F_q^(2g+2) whose first nonzero entry is 1 and keep
    the solutions of the quadric system.  Only sensible for tiny q."""
    n = 2 * g + 2
    lams = (1,) + tuple(x % q for x in lambdas)
    points = []
    for tup in itertools.product(range(q), repeat=n):
        lead = next((x for x in tup if x), None)
        if lead != 1:
            continue
        x1sq, x2sq = tup[0] * tup[0] % q, tup[1] * tup[1] % q
        if all((lam * x1sq + x2sq + tup[j + 1] * tup[j + 1]) % q == 0
               for j, lam in enumerate(lams, start=1)):
            points.append(tup)
    return sorted(points)


def _minors_gcd(rows, size: int) -> int:
    m, n = len(rows), len(rows[0])
    g = 0
    for rsel in itertools.combinations(range(m), size):
        for csel in itertools.combinations(range(n), size):
            sub = [[Fraction(rows[i][j]) for j in csel] for i in rsel]
            g = math.gcd(g, abs(_det_fraction(sub)))
            if g == 1:
                return 1
    return g


def _det_fraction(mat) -> int:
    n = len(mat)
    mat = [row[:] for row in mat]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        for r in range(col + 1, n):
            factor = mat[r][col] / mat[col][col]
            for c in range(col, n):
                mat[r][c] -= factor * mat[col][c]
    assert det.denominator == 1
    return int(det)


def invariant_factors_oracle(rows) -> tuple:
    """Nonzero invariant factors via determinantal divisors, d_i = D_i/D_{i-1}.

    Exponential in the matrix size; keep inputs small.
    """
    rows = [list(map(int, row)) for row in rows]
    if not rows or not rows[0]:
        return ()
    rank_cap = min(len(rows), len(rows[0]))
    divisors = [1]
    for size in range(1, rank_cap + 1):
        g = _minors_gcd(rows, size)
        if g == 0:
            break
        divisors.append(g)
    return tuple(divisors[i] // divisors[i - 1] for i in range(1, len(divisors)))


def subgroup_count_oracle(m: int, k: int) -> int:
    """Number of subgroups of Z_k^m for prime k, via Gaussian binomials."""
    total = 0
    for d in range(m + 1):
        num = den = 1
        for i in range(d):
            num *= k ** (m - i) - 1
            den *= k ** (d - i) - 1
        total += num // den
    return total

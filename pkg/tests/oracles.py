"""Reference computations that share no code with the package under test."""

import random
from functools import lru_cache
from fractions import Fraction
from math import comb


def fib_list(n):
    out = [0, 1]
    while len(out) <= n:
        out.append(out[-1] + out[-2])
    return out[:n + 1]


def product(values):
    out = 1
    for v in values:
        out *= v
    return out


def rational_fnomial(values, n, k):
    """C(n,k) from a plain list of sequence values, as a Fraction."""
    num = product(values[1:n + 1])
    den = product(values[1:k + 1]) * product(values[1:n - k + 1])
    return Fraction(num, den)


def rational_multinomial(values, parts):
    num = product(values[1:sum(parts) + 1])
    den = product(product(values[1:p + 1]) for p in parts)
    return Fraction(num, den)


@lru_cache(maxsize=None)
def additive_multinomial(parts):
    """Classical multinomial by the recurrence M(k) = sum_j M(k - e_j)."""
    parts = tuple(p for p in parts if p)
    if len(parts) <= 1:
        return 1
    return sum(additive_multinomial(parts[:j] + (parts[j] - 1,) + parts[j + 1:])
               for j in range(len(parts)))


def q_binomial(n, k, q):
    """Gaussian binomial by the q-Pascal rule."""
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return q_binomial(n - 1, k - 1, q) + q ** k * q_binomial(n - 1, k, q)


def gaussian_list(q, n):
    return [sum(q ** i for i in range(m)) for m in range(n + 1)]


def gauss_jordan_inverse(rows):
    """Inverse of a square matrix over the rationals."""
    size = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(size)]
         for i, r in enumerate(rows)]
    for col in range(size):
        piv = next(r for r in range(col, size) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[size:] for row in a]


def square_fnomial_matrix(values, N):
    return [[rational_fnomial(values, n, k) if k <= n else 0 for k in range(N + 1)]
            for n in range(N + 1)]


def brute_compositions(m):
    """Every composition of m as a set of tuples, by recursion on the first part."""
    if m == 0:
        return {()}
    out = set()
    for first in range(1, m + 1):
        for rest in brute_compositions(m - first):
            out.add((first,) + rest)
    return out


def poly_from_roots(roots):
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    return coeffs


def lucas_values(P, Q, scale, n):
    """scale * U_k(P, Q) for k = 0..n; Lucasnomials are integers for any P, Q."""
    u = [0, 1]
    while len(u) <= n:
        u.append(P * u[-1] - Q * u[-2])
    return [scale * x for x in u[:n + 1]]


def random_admissible_lists(count, n, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        P = rng.randint(1, 4)
        Q = -rng.randint(1, 4)
        scale = rng.randint(1, 5)
        out.append(lucas_values(P, Q, scale, n))
    return out


def binom(n, k):
    return comb(n, k) if 0 <= k <= n else 0


# Paper's printed Phi_0..Phi_8 for Fibonacci, low-to-high coefficients.
PAPER_FIBONACCI_PHI = [
    [1],
    [-1, 1],
    [0, -1, 1],
    [1, 0, -2, 1],
    [-1, 3, 0, -3, 1],
    [-6, -5, 15, 0, -5, 1],
    [35, -48, -40, 60, 0, -8, 1],
    [181, 455, -624, -260, 260, 0, -13, 1],
    [-6056, 8301, 9555, -6552, -1820, 1092, 0, -21, 1],
]

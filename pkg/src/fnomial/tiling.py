"""Additive lambda-decompositions of sequence terms and the multi F-nomial recurrence.

A sequence in the T_lambda family splits every term as
(a + b)_F = lam_a * a_F + lam_b * b_F with non-negative integer lam.  The
rule is registered per sequence name; Natural and Fibonacci are supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple

from .coeffs import multi_fnomial
from .compositions import all_compositions
from .fseq import FSequence
from .inversion import VerificationReport


class UnsupportedSequenceError(ValueError):
    pass


@dataclass(frozen=True)
class LambdaVector:
    parts: Tuple[int, ...]
    lambdas: Tuple[int, ...]

    def holds_for(self, F: FSequence) -> bool:
        return is_valid_lambda(F, self.parts, self.lambdas)


def _natural_rule(F, a, b):
    return 1, 1


def _fibonacci_rule(F, a, b):
    # F(a+b) = F(b-1) F(a) + F(a+1) F(b)
    return F[b - 1], F[a + 1]


LAMBDA_RULES: Dict[str, Callable[[FSequence, int, int], Tuple[int, int]]] = {
    "natural": _natural_rule,
    "fibonacci": _fibonacci_rule,
}


def _rule(F: FSequence):
    try:
        return LAMBDA_RULES[F.name]
    except KeyError:
        raise UnsupportedSequenceError(
            f"no lambda rule registered for sequence {F.name!r}") from None


def is_valid_lambda(F: FSequence, parts: Sequence[int], lambdas: Sequence[int]) -> bool:
    """True when lambdas are non-negative and sum lam_j * (k_j)_F == (sum k_j)_F."""
    if len(parts) != len(lambdas) or any(l < 0 for l in lambdas):
        return False
    return sum(l * F[k] for l, k in zip(lambdas, parts)) == F[sum(parts)]


def lambda_two_part(F: FSequence, a: int, b: int) -> LambdaVector:
    if a < 1 or b < 1:
        raise ValueError(f"parts must be positive, got {a}, {b}")
    la, lb = _rule(F)(F, a, b)
    return LambdaVector((a, b), (la, lb))


def lambda_decompose(F: FSequence, parts: Sequence[int]) -> LambdaVector:
    """Split (k_1 + ... + k_s)_F by peeling parts off the left.

    At each step (k_j + rest)_F = lam * (k_j)_F + mu * rest_F, and mu
    multiplies every coefficient produced for the remaining parts.
    """
    parts = tuple(parts)
    if not parts:
        raise ValueError("parts must be non-empty")
    if any(p < 1 for p in parts):
        raise ValueError(f"parts must be positive, got {parts}")
    rule = _rule(F)
    lambdas = []
    scale = 1
    rest = sum(parts)
    for p in parts[:-1]:
        rest -= p
        lam, mu = rule(F, p, rest)
        lambdas.append(scale * lam)
        scale *= mu
    lambdas.append(scale)
    return LambdaVector(parts, tuple(lambdas))


def fibonacci_three_part(F: FSequence, a: int, b: int, c: int) -> Tuple[int, int, int]:
    """Closed-form coefficients for (a+b+c)_F over Fibonacci, s = 3.

    lam_a = (c+1)_F (b-1)_F, lam_b = (c+1)_F (a+1)_F,
    lam_c = a_F b_F + (a-1)_F (b-1)_F.
    """
    if min(a, b, c) < 1:
        raise ValueError("parts must be positive")
    return (F[c + 1] * F[b - 1],
            F[c + 1] * F[a + 1],
            F[a] * F[b] + F[a - 1] * F[b - 1])


@dataclass(frozen=True)
class RecurrenceCheck:
    n: int
    parts: Tuple[int, ...]
    lambdas: Tuple[int, ...]
    lhs: int
    terms: Tuple[int, ...]

    @property
    def rhs(self) -> int:
        return sum(self.terms)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self):
        return self.ok


def verify_theorem1_recurrence(F: FSequence, n: int, parts: Sequence[int]) -> RecurrenceCheck:
    """Compare C(n; k_1..k_s)_F with sum_j lam_j C(n-1; .., k_j - 1, ..)_F.

    Parts reduced to zero stay in the multi-index and contribute 0_F! = 1.
    """
    parts = tuple(parts)
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    lv = lambda_decompose(F, parts)
    lhs = multi_fnomial(F, n, parts)
    terms = []
    for j, lam in enumerate(lv.lambdas):
        reduced = parts[:j] + (parts[j] - 1,) + parts[j + 1:]
        terms.append(lam * multi_fnomial(F, n - 1, reduced))
    return RecurrenceCheck(n, parts, lv.lambdas, lhs, tuple(terms))


def verify_recurrence_upto(F: FSequence, N: int) -> VerificationReport:
    """Run the recurrence over every composition of every 1 <= n <= N."""
    checked = 0
    for n in range(1, N + 1):
        for comp in all_compositions(n):
            res = verify_theorem1_recurrence(F, n, comp)
            checked += 1
            if not res:
                return VerificationReport("theorem1-recurrence", F.name, N, False,
                                          checked, comp, res.lhs, res.rhs)
    return VerificationReport("theorem1-recurrence", F.name, N, True, checked)

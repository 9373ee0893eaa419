"""Dense integer polynomials and the Phi_n(x) basis built from inverse F-nomials.

Phi_n(x) = sum_k inv(n, k) x^k, and conversely x^n = sum_k C(n,k)_F Phi_k(x).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .coeffs import fnomial
from .fseq import FSequence
from .inversion import VerificationReport, fnomial_inverse_direct, inverse_matrix


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class Polynomial:
    """Coefficients low-to-high; the zero polynomial has no coefficients."""

    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "Polynomial":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(c * v for v in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def dense(self, length: int) -> List[int]:
        """Coefficient list padded with zeros to ``length`` entries."""
        if length < len(self.coeffs):
            raise ValueError(f"degree {self.degree} does not fit {length} slots")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs) or [0])

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)


def phi_polynomial(F: FSequence, n: int, method: str = "oracle") -> Polynomial:
    """Phi_n(x), monic of degree n, from row n of the inverse F-nomial matrix."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if method == "direct":
        return Polynomial(fnomial_inverse_direct(F, n, k) for k in range(n + 1))
    return Polynomial(inverse_matrix(F, n, method=method).rows[n])


def phi_polynomials(F: FSequence, N: int, method: str = "oracle") -> List[Polynomial]:
    """Phi_0 .. Phi_N from a single inversion."""
    inv = inverse_matrix(F, N, method=method)
    return [Polynomial(row) for row in inv.rows]


def expand_monomial(F: FSequence, n: int) -> List[Tuple[int, int]]:
    """Coefficients (k, C(n,k)_F) expressing x^n in the Phi basis."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return [(k, fnomial(F, n, k)) for k in range(n + 1)]


def from_phi_basis(coeffs: Sequence[int], phis: Sequence[Polynomial]) -> Polynomial:
    """sum_k coeffs[k] * Phi_k(x) in the monomial basis."""
    acc = Polynomial()
    for c, p in zip(coeffs, phis):
        if c:
            acc = acc + p.scale(c)
    return acc


def to_phi_basis(p: Polynomial, F: FSequence) -> List[int]:
    """Coordinates of p in the Phi basis, via x^n = sum_k C(n,k)_F Phi_k."""
    out = [0] * max(len(p.coeffs), 1)
    for n, c in enumerate(p.coeffs):
        if c:
            for k, b in expand_monomial(F, n):
                out[k] += c * b
    return out


def roundtrip_check(F: FSequence, N: int, method: str = "oracle") -> VerificationReport:
    """Expand sum_k C(n,k)_F Phi_k(x) and compare with x^n for every n <= N."""
    phis = phi_polynomials(F, N, method=method)
    for n in range(N + 1):
        got = from_phi_basis([c for _, c in expand_monomial(F, n)], phis)
        want = Polynomial.monomial(n)
        if got != want:
            return VerificationReport("roundtrip", F.name, N, False, n + 1, (n,),
                                      str(want), str(got))
    return VerificationReport("roundtrip", F.name, N, True, N + 1)

"""Inverse of the F-nomial coefficient matrix.

Two independent routes to the same integers:

* :func:`fnomial_inverse_direct` evaluates the signed sum of multi F-nomials
  over compositions of n - k, entry by entry, with no division beyond the
  coefficients themselves.
* :func:`invert_unitriangular` runs exact forward substitution on the whole
  lower-triangular matrix.

:func:`verify_delta_convolution` checks that the direct entries really
invert the coefficient matrix.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .coeffs import fnomial, multi_fnomial
from .compositions import all_compositions
from .fseq import FSequence


class TriMatrix:
    """Square lower-triangular integer matrix indexed (n, k), 0 <= k <= n <= N.

    Stored as ragged rows; entries above the diagonal read as 0.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        rows = [list(r) for r in rows]
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
        self.rows = rows

    @classmethod
    def identity(cls, N: int) -> "TriMatrix":
        return cls([[0] * n + [1] for n in range(N + 1)])

    @property
    def N(self) -> int:
        return len(self.rows) - 1

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx: Tuple[int, int]) -> int:
        n, k = idx
        if k > n:
            return 0
        return self.rows[n][k]

    def __eq__(self, other):
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"TriMatrix(N={self.N})"

    def is_unit_diagonal(self) -> bool:
        return all(row[-1] == 1 for row in self.rows)

    def __matmul__(self, other: "TriMatrix") -> "TriMatrix":
        if self.order != other.order:
            raise ValueError("order mismatch")
        a, b = self.rows, other.rows
        return TriMatrix(
            [[sum(a[n][s] * b[s][k] for s in range(k, n + 1)) for k in range(n + 1)]
             for n in range(self.order)])

    def entries(self):
        for n, row in enumerate(self.rows):
            for k, v in enumerate(row):
                yield n, k, v

    def to_json(self) -> str:
        return json.dumps(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        size = self.order
        for row in self.rows:
            w.writerow([str(v) for v in row] + [""] * (size - len(row)))
        return buf.getvalue()

    def to_text(self) -> str:
        width = max(len(str(v)) for _, _, v in self.entries())
        return "\n".join(" ".join(str(v).rjust(width) for v in row)
                         for row in self.rows) + "\n"


def fnomial_matrix(F: FSequence, N: int) -> TriMatrix:
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    return TriMatrix([[fnomial(F, n, k) for k in range(n + 1)] for n in range(N + 1)])


def fnomial_inverse_direct(F: FSequence, n: int, k: int) -> int:
    """Entry (n, k) of the inverse F-nomial matrix by the composition formula.

    sum over compositions (k_1..k_s) of n - k of (-1)^s C(n; k, k_1, .., k_s)_F
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n == k:
        return 1
    total = 0
    for comp in all_compositions(n - k):
        term = multi_fnomial(F, n, (k,) + comp)
        if len(comp) & 1:
            total -= term
        else:
            total += term
    return total


def fnomial_inverse_factored(F: FSequence, n: int, k: int) -> int:
    """Same entry via C(n,k)_F times a k-free signed sum over compositions of n - k."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n == k:
        return 1
    m = n - k
    inner = sum((-1) ** len(c) * multi_fnomial(F, m, c) for c in all_compositions(m))
    return fnomial(F, n, k) * inner


def invert_unitriangular(M: TriMatrix) -> TriMatrix:
    """Exact inverse of a unit lower-triangular integer matrix by forward substitution."""
    if not M.is_unit_diagonal():
        bad = next(n for n, row in enumerate(M.rows) if row[-1] != 1)
        raise ValueError(f"diagonal entry ({bad}, {bad}) is {M.rows[bad][-1]}, not 1")
    a = M.rows
    inv: List[List[int]] = []
    for n in range(M.order):
        row = [0] * (n + 1)
        row[n] = 1
        for k in range(n):
            acc = 0
            for s in range(k, n):
                acc += a[n][s] * inv[s][k]
            row[k] = -acc
        inv.append(row)
    return TriMatrix(inv)


def inverse_matrix(F: FSequence, N: int, method: str = "oracle") -> TriMatrix:
    """Inverse F-nomial matrix up to order N by ``"direct"`` or ``"oracle"``."""
    if method == "oracle":
        return invert_unitriangular(fnomial_matrix(F, N))
    if method == "direct":
        return TriMatrix([[fnomial_inverse_direct(F, n, k) for k in range(n + 1)]
                          for n in range(N + 1)])
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class VerificationReport:
    check: str
    sequence: str
    N: int
    ok: bool
    checked: int
    failure: Optional[tuple] = None
    expected: object = None
    got: object = None

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return f"{self.check} {self.sequence} N={self.N}: ok ({self.checked} checks)"
        return (f"{self.check} {self.sequence} N={self.N}: FAIL at {self.failure}, "
                f"expected {self.expected}, got {self.got}")


def verify_delta_convolution(F: FSequence, N: int) -> VerificationReport:
    """Check sum_s C(n,s)_F * inv(s,k) == delta(n,k) with direct-formula inverse entries."""
    inv = inverse_matrix(F, N, method="direct")
    checked = 0
    for n in range(N + 1):
        for k in range(n + 1):
            total = sum(fnomial(F, n, s) * inv[s, k] for s in range(k, n + 1))
            want = 1 if n == k else 0
            checked += 1
            if total != want:
                return VerificationReport("delta-convolution", F.name, N, False,
                                          checked, (n, k), want, total)
    return VerificationReport("delta-convolution", F.name, N, True, checked)

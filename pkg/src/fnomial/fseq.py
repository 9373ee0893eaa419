"""Integer sequences n -> n_F and the cobweb-admissibility check."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, Tuple, Union


class FSequence:
    """A named non-negative integer sequence with a growable prefix cache.

    ``term`` computes n_F from the prefix ``values[0..n-1]`` already cached,
    which keeps recurrences like Fibonacci linear.  Explicit sequences pass
    ``term=None`` and are bounded by their length.
    """

    def __init__(self, name: str, term: Optional[Callable[[int, list], int]],
                 initial: Sequence[int] = ()):
        self.name = name
        self._term = term
        self._values = list(initial)
        self._lock = threading.Lock()

    @property
    def is_finite(self) -> bool:
        return self._term is None

    def __len__(self):
        if self._term is None:
            return len(self._values)
        raise TypeError(f"sequence {self.name!r} is unbounded")

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError(f"negative index {n}")
        values = self._values
        if n < len(values):
            return values[n]
        if self._term is None:
            raise IndexError(
                f"explicit sequence {self.name!r} has no term at index {n} "
                f"(length {len(values)})")
        with self._lock:
            # another thread may have extended the table meanwhile
            while len(self._values) <= n:
                self._values.append(self._term(len(self._values), self._values))
        return self._values[n]

    def prefix(self, n: int) -> Tuple[int, ...]:
        """Return (0_F, 1_F, ..., n_F)."""
        self[n]
        return tuple(self._values[:n + 1])

    def __repr__(self):
        return f"FSequence({self.name!r})"


def natural() -> FSequence:
    return FSequence("natural", lambda n, prev: n)


def fibonacci() -> FSequence:
    def term(n, prev):
        if n < 2:
            return n
        return prev[n - 1] + prev[n - 2]
    return FSequence("fibonacci", term)


def gaussian(q: int) -> FSequence:
    """q-integers [n]_q = 1 + q + ... + q^(n-1) for an integer q >= 2."""
    if isinstance(q, bool) or not isinstance(q, int):
        raise TypeError(f"q must be an int, got {q!r}")
    if q < 2:
        raise ValueError(f"gaussian sequence needs q >= 2, got {q}")

    def term(n, prev):
        if n == 0:
            return 0
        return prev[n - 1] * q + 1
    return FSequence(f"gaussian:{q}", term)


def explicit(values: Iterable[int], name: str = "explicit") -> FSequence:
    values = list(values)
    for i, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"term {i} is not an int: {v!r}")
        if v < 0:
            raise ValueError(f"term {i} is negative: {v}")
    return FSequence(name, None, values)


def load_sequence_file(path: Union[str, Path]) -> FSequence:
    """Read one non-negative decimal integer per line; line i holds i_F.

    Blank lines are skipped.
    """
    path = Path(path)
    values = []
    with path.open() as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                values.append(int(line, 10))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not a decimal integer: {line!r}") from None
    try:
        return explicit(values, name=f"file:{path}")
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


SequenceKind = Union[str, Sequence[int], FSequence]


def make_sequence(kind: SequenceKind) -> FSequence:
    """Build a sequence from a descriptor.

    Accepted descriptors: ``"natural"``, ``"fibonacci"``, ``"gaussian:<q>"``,
    ``"file:<path>"``, or a list of non-negative ints.
    """
    if isinstance(kind, FSequence):
        return kind
    if not isinstance(kind, str):
        return explicit(kind)
    name, _, arg = kind.partition(":")
    name = name.strip().lower()
    if name == "natural" and not arg:
        return natural()
    if name in ("fibonacci", "fib") and not arg:
        return fibonacci()
    if name in ("gaussian", "q"):
        try:
            q = int(arg)
        except ValueError:
            raise ValueError(f"bad gaussian parameter in {kind!r}") from None
        return gaussian(q)
    if name == "file" and arg:
        return load_sequence_file(arg)
    raise ValueError(f"unknown sequence descriptor {kind!r}")


@dataclass(frozen=True)
class AdmissibilityReport:
    sequence: str
    N: int
    admissible: bool
    failure: Optional[Tuple[int, int]] = None
    value: Optional[Fraction] = None
    reason: str = ""

    def __bool__(self):
        return self.admissible


def check_admissible(F: FSequence, N: int) -> AdmissibilityReport:
    """Check that every C(n,k)_F, 0 <= k <= n <= N, is a non-negative integer.

    Uses rational arithmetic on the factorial quotient, independently of the
    integer-division path in :mod:`fnomial.coeffs`.  Rows are scanned in
    order, so the first failure reported is the smallest (n, k).
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    fact = [1]
    for i in range(1, N + 1):
        fact.append(fact[-1] * F[i])
    for n in range(N + 1):
        for k in range(1, n):
            den = fact[k] * fact[n - k]
            if den == 0:
                return AdmissibilityReport(F.name, N, False, (n, k), None,
                                           "zero denominator")
            value = Fraction(fact[n], den)
            if value.denominator != 1:
                return AdmissibilityReport(F.name, N, False, (n, k), value,
                                           "not an integer")
    return AdmissibilityReport(F.name, N, True)

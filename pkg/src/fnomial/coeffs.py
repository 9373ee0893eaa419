"""Exact F-factorials, F-nomial and multi F-nomial coefficients."""

from __future__ import annotations

import threading
import weakref
from typing import Dict, List, Sequence, Tuple

from .fseq import FSequence


class NonAdmissibleError(ArithmeticError):
    """A factorial quotient was not an exact integer."""

    def __init__(self, sequence: str, n: int, parts: Tuple[int, ...], reason: str):
        self.sequence = sequence
        self.n = n
        self.parts = parts
        self.reason = reason
        super().__init__(
            f"sequence {sequence!r} is not admissible: "
            f"C({n}; {', '.join(map(str, parts))}) {reason}")


# Per-sequence tables, keyed weakly so dropping a sequence drops its caches.
_factorials: "weakref.WeakKeyDictionary[FSequence, List[int]]" = weakref.WeakKeyDictionary()
_multi_memo: "weakref.WeakKeyDictionary[FSequence, Dict[Tuple[int, ...], int]]" = \
    weakref.WeakKeyDictionary()
_extend_lock = threading.Lock()


def _factorial_table(F: FSequence, n: int) -> List[int]:
    table = _factorials.get(F)
    if table is None:
        table = _factorials.setdefault(F, [1])
    if len(table) <= n:
        with _extend_lock:
            while len(table) <= n:
                table.append(table[-1] * F[len(table)])
    return table


def f_factorial(F: FSequence, n: int) -> int:
    """n_F! = n_F * (n-1)_F * ... * 1_F, with 0_F! = 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _factorial_table(F, n)[n]


def falling_factorial(F: FSequence, n: int, k: int) -> int:
    """n_F * (n-1)_F * ... * (n-k+1)_F."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    out = 1
    for i in range(n - k + 1, n + 1):
        out *= F[i]
    return out


def _exact_div(F: FSequence, num: int, den: int, n: int, parts: Tuple[int, ...]) -> int:
    if den == 0:
        raise NonAdmissibleError(F.name, n, parts, "has a zero denominator")
    q, r = divmod(num, den)
    if r:
        raise NonAdmissibleError(F.name, n, parts, f"= {num}/{den} is not an integer")
    return q


def fnomial(F: FSequence, n: int, k: int) -> int:
    """F-nomial coefficient n_F! / (k_F! (n-k)_F!).

    Zero outside 0 <= k <= n; one at k = 0 and k = n.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    fact = _factorial_table(F, n)
    return _exact_div(F, fact[n], fact[k] * fact[n - k], n, (k, n - k))


def _multi_key(parts: Sequence[int]) -> Tuple[int, ...]:
    # permutation invariant, and zero parts contribute 0_F! = 1
    return tuple(sorted(p for p in parts if p))


def multi_fnomial(F: FSequence, n: int, parts: Sequence[int], memo: bool = True) -> int:
    """Multi F-nomial coefficient n_F! / prod (k_i)_F!, zero unless sum(parts) == n."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be non-negative, got {parts}")
    if sum(parts) != n:
        return 0
    key = _multi_key(parts)
    if len(key) <= 1:
        return 1
    table = None
    if memo:
        table = _multi_memo.get(F)
        if table is None:
            table = _multi_memo.setdefault(F, {})
        hit = table.get(key)
        if hit is not None:
            return hit
    fact = _factorial_table(F, n)
    den = 1
    for p in key:
        den *= fact[p]
    value = _exact_div(F, fact[n], den, n, parts)
    if table is not None:
        table[key] = value
    return value


def clear_caches(F: FSequence = None) -> None:
    """Drop memoized factorials and multi F-nomials (for one sequence or all)."""
    if F is None:
        _factorials.clear()
        _multi_memo.clear()
    else:
        _factorials.pop(F, None)
        _multi_memo.pop(F, None)

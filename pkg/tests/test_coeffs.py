import itertools
import threading

import pytest
from hypothesis import given, settings, strategies as st

from fnomial.coeffs import (NonAdmissibleError, clear_caches, f_factorial, falling_factorial,
                            fnomial, multi_fnomial)
from fnomial.fseq import explicit, fibonacci, gaussian, make_sequence, natural

from oracles import (additive_multinomial, binom, fib_list, product, q_binomial,
                     rational_fnomial, rational_multinomial)

BUILTINS = ["natural", "fibonacci", "gaussian:2", "gaussian:3"]


def test_factorials():
    F = fibonacci()
    assert f_factorial(F, 5) == product(fib_list(5)[1:]) == 30
    assert f_factorial(F, 0) == 1
    assert f_factorial(natural(), 0) == 1
    assert f_factorial(natural(), 4) == 24


def test_falling_factorials():
    assert falling_factorial(fibonacci(), 5, 2) == 15
    assert falling_factorial(natural(), 6, 3) == 120
    assert falling_factorial(fibonacci(), 9, 0) == 1
    with pytest.raises(ValueError):
        falling_factorial(natural(), 2, 3)


def test_fnomial_examples():
    F = fibonacci()
    assert fnomial(F, 5, 2) == rational_fnomial(fib_list(5), 5, 2) == 15
    for n in range(10):
        assert fnomial(F, n, n) == 1
        assert fnomial(F, n, 0) == 1
        assert fnomial(F, n, -1) == 0
        assert fnomial(F, n, n + 1) == 0


def test_natural_is_binomial():
    N = natural()
    for n in range(11):
        for k in range(n + 1):
            assert fnomial(N, n, k) == binom(n, k)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_gaussian_is_q_binomial(q):
    G = gaussian(q)
    for n in range(11):
        for k in range(n + 1):
            assert fnomial(G, n, k) == q_binomial(n, k, q)


def test_fibonomial_against_rational_oracle():
    F = fibonacci()
    values = fib_list(20)
    for n in range(21):
        for k in range(n + 1):
            assert fnomial(F, n, k) == rational_fnomial(values, n, k)


def test_inexact_division_raises():
    with pytest.raises(NonAdmissibleError) as info:
        fnomial(explicit([0, 2, 3]), 2, 1)
    assert info.value.n == 2
    with pytest.raises(NonAdmissibleError):
        multi_fnomial(explicit([0, 2, 3]), 2, (1, 1))


def test_zero_denominator_raises():
    with pytest.raises(NonAdmissibleError):
        fnomial(explicit([0, 1, 0, 2]), 3, 1)


def test_multi_examples():
    F = fibonacci()
    assert multi_fnomial(F, 3, (1, 1, 1)) == 2
    assert multi_fnomial(F, 3, (1, 1)) == 0
    assert multi_fnomial(natural(), 4, (2, 1, 1)) == 12
    assert multi_fnomial(F, 0, ()) == 1
    assert multi_fnomial(F, 4, (0, 4, 0)) == 1


def test_multi_against_rational_oracle():
    F = fibonacci()
    values = fib_list(12)
    for parts in itertools.product(range(4), repeat=3):
        n = sum(parts)
        assert multi_fnomial(F, n, parts) == rational_multinomial(values, parts)


def test_multi_rejects_negative_parts():
    with pytest.raises(ValueError):
        multi_fnomial(natural(), 2, (3, -1))


@pytest.mark.parametrize("kind", BUILTINS)
def test_symmetry(kind):
    F = make_sequence(kind)
    for n in range(13):
        for k in range(n + 1):
            v = fnomial(F, n, k)
            assert v == fnomial(F, n, n - k) == multi_fnomial(F, n, (k, n - k))


@settings(max_examples=60)
@given(st.sampled_from(BUILTINS),
       st.lists(st.integers(0, 4), min_size=1, max_size=5), st.randoms())
def test_permutation_invariance(kind, parts, rnd):
    F = make_sequence(kind)
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    n = sum(parts)
    assert multi_fnomial(F, n, parts) == multi_fnomial(F, n, shuffled)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=5))
def test_natural_multinomial_matches_additive_recurrence(parts):
    assert multi_fnomial(natural(), sum(parts), parts) == additive_multinomial(tuple(parts))


@given(st.sampled_from(BUILTINS), st.lists(st.integers(0, 5), min_size=1, max_size=4))
def test_memo_transparent(kind, parts):
    F = make_sequence(kind)
    n = sum(parts)
    first = multi_fnomial(F, n, parts, memo=False)
    assert multi_fnomial(F, n, parts) == first
    assert multi_fnomial(F, n, parts) == first
    clear_caches(F)
    assert multi_fnomial(F, n, parts) == first


def test_concurrent_memo_agrees():
    F = fibonacci()
    keys = [p for p in itertools.product(range(1, 5), repeat=3)]
    expected = {p: multi_fnomial(fibonacci(), sum(p), p, memo=False) for p in keys}
    bad = []

    def worker():
        for p in keys:
            if multi_fnomial(F, sum(p), p) != expected[p]:
                bad.append(p)

    threads = [threading.Thread(target=worker) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not bad

import threading

import pytest
from hypothesis import given, strategies as st

from fnomial.fseq import (check_admissible, explicit, fibonacci, gaussian, load_sequence_file,
                          make_sequence, natural)

from oracles import fib_list, gaussian_list


def test_builtin_examples():
    assert make_sequence("fibonacci")[5] == 5
    assert make_sequence("natural")[7] == 7
    assert make_sequence("gaussian:2")[4] == 1 + 2 + 4 + 8


def test_zero_terms():
    assert natural()[0] == 0
    assert fibonacci()[0] == 0
    assert gaussian(3)[0] == 0


def test_builtins_match_definitions():
    F, N = fibonacci(), natural()
    assert [F[i] for i in range(65)] == fib_list(64)
    assert [N[i] for i in range(65)] == list(range(65))
    for q in (2, 3, 7):
        G = gaussian(q)
        assert [G[i] for i in range(30)] == gaussian_list(q, 29)


def test_query_order_does_not_matter():
    a, b = fibonacci(), fibonacci()
    assert b[64] == a[64]
    assert [b[i] for i in range(64, -1, -1)] == [a[i] for i in range(64, -1, -1)]


def test_concurrent_queries_agree():
    F = fibonacci()
    expected = fib_list(400)
    results = []

    def worker(order):
        results.append((order, [F[i] for i in order]))

    orders = [range(400, -1, -1), range(401), range(0, 401, 7)]
    threads = [threading.Thread(target=worker, args=(o,)) for o in orders for _ in range(3)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(results) == len(threads)
    for order, got in results:
        assert got == [expected[i] for i in order]
    assert [F[i] for i in range(401)] == expected


@pytest.mark.parametrize("bad", ["gaussian:1", "gaussian:0", "gaussian:-3"])
def test_rejects_small_q(bad):
    with pytest.raises(ValueError):
        make_sequence(bad)


def test_rejects_negative_explicit():
    with pytest.raises(ValueError):
        make_sequence([0, 1, -2])


@pytest.mark.parametrize("bad", ["lucas", "gaussian:x", "file:", ""])
def test_rejects_unknown_descriptor(bad):
    with pytest.raises(ValueError):
        make_sequence(bad)


def test_explicit_is_bounded():
    F = explicit([0, 1, 3])
    assert F[2] == 3
    with pytest.raises(IndexError):
        F[3]


def test_load_file(tmp_path):
    p = tmp_path / "seq.txt"
    p.write_text("0\n1\n1\n2\n\n3\n")
    F = make_sequence(f"file:{p}")
    assert [F[i] for i in range(5)] == [0, 1, 1, 2, 3]


def test_load_file_rejects_junk(tmp_path):
    p = tmp_path / "seq.txt"
    p.write_text("0\n1.5\n")
    with pytest.raises(ValueError, match="not a decimal integer"):
        load_sequence_file(p)
    p.write_text("0\n-1\n")
    with pytest.raises(ValueError, match="negative"):
        load_sequence_file(p)


@pytest.mark.parametrize("kind", ["fibonacci", "natural", "gaussian:2", "gaussian:3"])
def test_builtins_admissible(kind):
    assert check_admissible(make_sequence(kind), 12)


def test_explicit_admissibility_examples():
    assert check_admissible(explicit([0, 1, 3]), 2)
    rep = check_admissible(explicit([0, 2, 3]), 2)
    assert not rep
    assert rep.failure == (2, 1)
    assert rep.value.numerator == 3 and rep.value.denominator == 2


def test_zero_denominator_is_reported():
    rep = check_admissible(explicit([0, 1, 0, 2]), 3)
    assert not rep
    assert rep.reason == "zero denominator"


@given(st.lists(st.integers(0, 6), min_size=1, max_size=7))
def test_admissibility_monotone(values):
    F = explicit([0] + values)
    N = len(values)
    if check_admissible(F, N):
        for M in range(N + 1):
            assert check_admissible(F, M)
    else:
        fail = check_admissible(F, N).failure
        # anything below the first failing row is still fine
        assert check_admissible(F, fail[0] - 1)

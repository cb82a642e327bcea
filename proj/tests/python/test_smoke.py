import pytest

import malcev


def X(i, m=2, N=4):
    return malcev.Series.generator(m, N, i)


def test_bch_low_degrees():
    b = malcev.bch(X(0), X(1))
    assert b.coeff([0]) == "1"
    assert b.coeff([1]) == "1"
    assert b.coeff([0, 1]) == "1/2"
    assert b.coeff([0, 0, 1]) == "1/12"
    assert b.coeff([0, 1, 1]) == "1/12"


def test_exp_log_round_trip():
    eps = X(0) + X(1) * X(1)
    assert malcev.log(malcev.exp(eps)) == eps


def test_power_square_root():
    g = malcev.Series.unit(1, 2) + malcev.Series.generator(1, 2, 0)
    h = malcev.power(g, "1/2")
    assert h.coeff([]) == "1"
    assert h.coeff([0]) == "1/2"
    assert h.coeff([0, 0]) == "-1/8"


def test_collect_expand_round_trip():
    q = malcev.exp(X(0, 2, 3) + X(1, 2, 3))
    factors = malcev.collect(q)
    assert factors[0] == ([0], "1")
    assert factors[1] == ([1], "1")
    assert factors[2] == ([0, 1], "-1/2")
    assert malcev.expand(factors, 2, 3) == q


def test_lyndon_words():
    words = malcev.lyndon_words(2, 3)
    assert words == [[0], [1], [0, 1], [0, 0, 1], [0, 1, 1]]


def test_compile_term():
    lie, word = malcev.compile_term("x0+x1", 3)
    assert word == "x0*x1*comm(x0,x1)^(-1/2)"
    assert lie.coeff([0]) == "1"
    lie2, word2 = malcev.compile_term("x0*x1", 3)
    assert word2 == "x0*x1"
    assert lie2.coeff([0, 1]) == "1/2"


def test_solve_heisenberg():
    f = malcev.solve("heisenberg", [["1", "0", "0"], ["0", "1", "0"]], ["1", "1"])
    assert f == ["-1/2", "-1/2", "0"]


def test_singular_equation_rejected():
    with pytest.raises(RuntimeError):
        malcev.solve("heisenberg", [["1", "0", "0"]], ["0"])


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        malcev.solve("no-such-algebra.json", [["1"]], ["1"])


def test_hall_petresco():
    assert malcev.hall_petresco_verified(2, 3)


def test_verify_suite():
    report = malcev.run_verify("bch", seed=7, cases=5)
    assert report["ok"]
    assert report["failed"] == 0

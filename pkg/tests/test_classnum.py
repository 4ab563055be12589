import pytest

from qrverify.arith import primes_in_range
from qrverify.classnum import (
    class_number_dirichlet,
    class_number_forms_oracle,
    qr_sum,
    reduced_forms,
)
from oracles import reduced_forms_exhaustive, squares_mod, weighted_sum_by_squares

three_mod_four = [p for p in primes_in_range(7, 1500) if p % 4 == 3]
one_mod_four = [p for p in primes_in_range(5, 1500) if p % 4 == 1]


def test_dirichlet_p7():
    # squares mod 7 are {1, 2, 4}
    assert squares_mod(7) == {1, 2, 4}
    res = class_number_dirichlet(7)
    assert res.weighted_sum == (1 + 2 + 4) - (3 + 5 + 6) == -7
    assert res.h == 1


@pytest.mark.parametrize("p, h", [(11, 1), (23, 3)])
def test_dirichlet_small(p, h):
    res = class_number_dirichlet(p)
    assert res.weighted_sum == weighted_sum_by_squares(p) == -p * h
    assert res.h == h


def test_forms_examples():
    assert reduced_forms(7) == [(1, 1, 2)]
    assert sorted(reduced_forms(23)) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]
    assert class_number_forms_oracle(163) == 1
    assert class_number_forms_oracle(163) == len(reduced_forms_exhaustive(-163))


@pytest.mark.parametrize("p", [3, 5, 13, 17])
def test_domain_errors(p):
    with pytest.raises(ValueError):
        class_number_dirichlet(p)
    with pytest.raises(ValueError):
        class_number_forms_oracle(p)


@pytest.mark.parametrize("p", [p for p in three_mod_four if p < 400])
def test_forms_match_box_search(p):
    assert sorted(reduced_forms(p)) == sorted(reduced_forms_exhaustive(-p))


@pytest.mark.parametrize("p", three_mod_four)
def test_two_routes_agree_and_h_is_odd(p):
    res = class_number_dirichlet(p)
    assert res.h == class_number_forms_oracle(p)
    assert res.weighted_sum == -p * res.h
    assert res.h % 2 == 1


def test_qr_sum_examples():
    assert qr_sum(5, 1) == 1 + 4 == 5 * 4 // 4
    assert qr_sum(7, 1) == 7
    assert 4 * qr_sum(7, 1) == 7 * 6 - 2 * 7 * 1
    assert qr_sum(7, -1) == 21 - 7 == 14
    assert 4 * qr_sum(7, -1) == 7 * 6 + 2 * 7 * 1


def test_qr_sum_validation():
    with pytest.raises(ValueError):
        qr_sum(3, 1)
    with pytest.raises(ValueError):
        qr_sum(7, 0)


@pytest.mark.parametrize("p", one_mod_four)
def test_qr_sums_one_mod_four(p):
    assert qr_sum(p, 1) == qr_sum(p, -1) == p * (p - 1) // 4
    assert qr_sum(p, 1) == sum(squares_mod(p))


@pytest.mark.parametrize("p", three_mod_four)
def test_qr_sums_three_mod_four(p):
    h = class_number_forms_oracle(p)
    plus, minus = qr_sum(p, 1), qr_sum(p, -1)
    assert plus + minus == p * (p - 1) // 2
    assert minus - plus == p * h

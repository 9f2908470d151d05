import pytest
from hypothesis import given, settings, strategies as st

from mzeta.algebra import MultiPoly, PowerSeries, VarTable, parse_poly, series_arith, series_invert
from mzeta.errors import DomainError, TruncationError

VT = VarTable(["L", "x"], ["L"])


def S(coeffs, order):
    return PowerSeries(VT, [parse_poly(str(c), VT) for c in coeffs], order)


def test_one_plus_times_one_minus():
    assert S([1, 1], 4) * S([1, -1], 4) == S([1, 0, -1, 0, 0], 4)


def test_geometric_series_times_one_minus_t():
    geo = S([1] * 9, 8)
    assert (geo * S([1, -1], 8)).is_one()


def test_product_of_point_and_tate_zetas_is_projective_line():
    n = 6
    one = S([1] * (n + 1), n)
    tate = S([f"L^{i}" for i in range(n + 1)], n)
    prod = one * tate
    for i in range(n + 1):
        assert prod[i] == parse_poly(" + ".join(f"L^{j}" for j in range(i + 1)), VT)


def test_inverse_of_one_plus_t_alternates():
    inv = series_invert(S([1, 1], 6))
    assert [inv[i].constant_term() for i in range(7)] == [1, -1, 1, -1, 1, -1, 1]


def test_inverse_of_one_minus_tate():
    inv = S([1, "-L"], 5).invert()
    assert all(inv[i] == parse_poly(f"L^{i}", VT) for i in range(6))


def test_inverse_of_one_plus_t_plus_t2_multiplies_back():
    a = S([1, 1, 1], 9)
    inv = a.invert()
    assert [inv[i].constant_term() for i in range(10)] == [1, -1, 0, 1, -1, 0, 1, -1, 0, 1]
    assert (a * inv).is_one()


def test_non_unit_constant_rejected():
    with pytest.raises(DomainError, match="not invertible"):
        S([2, 1], 3).invert()
    with pytest.raises(DomainError):
        S(["x", 1], 3).invert()


def test_reading_past_order_is_an_error():
    s = S([1, 1], 2)
    with pytest.raises(TruncationError):
        s[3]


def test_order_is_weakest_of_operands():
    assert (S([1], 3) * S([1], 5)).order == 3
    assert series_arith(S([1], 3), S([1], 5), "add").order == 3


coeff = st.sampled_from(["0", "1", "-1", "x", "L", "2*x - L", "L^-1*x"])


@settings(max_examples=50, deadline=None)
@given(st.lists(coeff, min_size=1, max_size=5), st.sampled_from(["1", "-1", "L", "-L^2", "L^-1"]),
       st.integers(0, 7))
def test_inverse_is_two_sided(tail, const, order):
    a = PowerSeries(VT, [parse_poly(const, VT)] + [parse_poly(c, VT) for c in tail], order)
    inv = a.invert()
    assert (a * inv).is_one() and (inv * a).is_one()

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nekagt.exactmath import QSeries, random_point
from nekagt.nekrasov import (
    GaugeConfig,
    W_element,
    Z_direct,
    Z_prime,
    Z_trace,
    chains,
    delta,
    x_exponent,
)
from oracles import binomial_series, euler_power, poly_mul


def zex(a, m, t1, t2):
    first = (m - 2 * a) * (m - t2) * (m - t1) * (m + 2 * a - t1 - t2) / (2 * a * t1 * t2 * (t1 + t2 - 2 * a))
    second = (m + 2 * a) * (m - t2) * (m - t1) * (m - 2 * a - t1 - t2) / (2 * a * t1 * t2 * (t1 + t2 + 2 * a))
    return first - second


def test_config_validation():
    with pytest.raises(ValueError):
        GaugeConfig(r=2, a=[[1]], m=[1])
    cfg = GaugeConfig(r=1, a=[[0], [1]], m=[1, 2])
    assert cfg.N == 2 and cfg.specialized


def test_order_zero_is_one():
    cfg = GaugeConfig(r=2, a=[[Fraction(1, 3), Fraction(-1, 3)]], m=[Fraction(2, 5)], order=0)
    assert Z_direct(cfg) == QSeries.one(1, 0)


@pytest.mark.parametrize("seed", range(3))
def test_first_order_general_torus(seed):
    p = random_point(seed, ["t1", "t2", "a", "m"])
    cfg = GaugeConfig(r=2, a=[[p["a"], -p["a"]]], m=[p["m"]], t1=p["t1"], t2=p["t2"], order=1)
    assert Z_direct(cfg).coefficient((1,)) == zex(p["a"], p["m"], p["t1"], p["t2"])


def test_chain_enumeration_counts():
    assert sum(1 for _ in chains(1, 1, 3)) == 1 + 1 + 2 + 3
    assert sum(1 for _ in chains(2, 1, 1)) == 3


def test_x_exponents():
    assert x_exponent(1, 3) == (1, 1, 1)
    assert x_exponent(2, 3) == (1, 0, 1)
    assert x_exponent(3, 3) == (1, 0, 0)


def test_W_element_worked_value():
    for m in (Fraction(1, 3), Fraction(-5, 7)):
        el = W_element(((1, 1),), ((2, 1),), [0], [0], m)
        assert el.value == m * (m - 1) * (m - 2) * (m + 3) * (m + 1) / 6
        assert el.x_power == 1
    assert W_element(((),), ((),), [0], [0], Fraction(3)).value == 1


@settings(max_examples=30)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=9))
def test_W_element_shift_invariance(shift):
    mus, nus = ((1,), (1,)), ((2,), ())
    a = [Fraction(2, 7), Fraction(-3, 5)]
    b = [Fraction(1, 9), Fraction(4, 3)]
    m = Fraction(5, 11)
    base = W_element(mus, nus, a, b, m).value
    moved = W_element(mus, nus, [x + shift for x in a], [x + shift for x in b], m).value
    assert base == moved


@pytest.mark.parametrize("r,N", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_trace_equals_direct_sum(r, N):
    names = [f"a{i}{j}" for i in range(N) for j in range(r)] + [f"m{i}" for i in range(N)]
    p = random_point(11 * r + N, names)
    cfg = GaugeConfig(r=r, a=[[p[f"a{i}{j}"] for j in range(r)] for i in range(N)],
                      m=[p[f"m{i}"] for i in range(N)], order=3 if N == 1 else 2)
    assert Z_trace(cfg) == Z_direct(cfg)


def test_trace_needs_special_torus():
    cfg = GaugeConfig(r=1, a=[[0]], m=[1], t1=2, t2=3)
    with pytest.raises(ValueError):
        Z_trace(cfg)


def test_z_prime_first_order():
    for m in (Fraction(1, 3), Fraction(-2, 7)):
        cfg = GaugeConfig(r=2, a=[[1, -1]], m=[m], order=1)
        assert Z_prime(cfg).coefficient((1,)) == 1 - 2 * m * m
    general = GaugeConfig(r=2, a=[[1, -1]], m=[Fraction(1, 2)], t1=2, t2=3, order=1)
    assert Z_prime(general).coefficient((1,)) == 1 - 2 * delta(Fraction(1, 2), Fraction(1, 2), 2, 3)


def test_z_prime_massless_is_inverse_euler():
    cfg = GaugeConfig(r=1, a=[[0]], m=[0], order=6)
    series = Z_prime(cfg)
    assert [series.coefficient((n,)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]


def _qpoch_oracle(exp_first, exp_step, alpha, order):
    """(x;q)^alpha in two variables with x = q^exp_first, q = q1 q2, as a coefficient dict."""
    out = {(0, 0): Fraction(1)}
    i = 0
    while sum(exp_first) + 2 * i <= order:
        e = (exp_first[0] + i, exp_first[1] + i)
        deg = sum(e)
        factor = binomial_series(alpha, deg, order)
        new = {}
        for (u, v), c in out.items():
            for j, f in enumerate(factor):
                if f and j % deg == 0:
                    k = j // deg
                    key = (u + k * e[0], v + k * e[1])
                    if sum(key) <= order:
                        new[key] = new.get(key, 0) + c * f
        out = new
        i += 1
    return out


def test_z_prime_two_points_against_product_oracle():
    m1, m2 = Fraction(2, 3), Fraction(-1, 5)
    order = 3
    cfg = GaugeConfig(r=1, a=[[0], [0]], m=[m1, m2], order=order)
    # (q;q)^{2 D11 + 2 D22 - 1} (x1/x2; q)^{2 D12} (q x2/x1; q)^{2 D21} with x1/x2 = q2, q x2/x1 = q1
    total = 2 * delta(m1, m1, 1, -1) + 2 * delta(m2, m2, 1, -1) - 1
    # (q1 q2; q1 q2)^total only has diagonal terms
    one_var = euler_power(total, order)
    euler = {(n, n): c for n, c in enumerate(one_var) if 2 * n <= order and c}
    first = _qpoch_oracle((0, 1), (1, 1), 2 * delta(m1, m2, 1, -1), order)
    second = _qpoch_oracle((1, 0), (1, 1), 2 * delta(m2, m1, 1, -1), order)
    product = {}
    for parts in (euler, first, second):
        if not product:
            product = dict(parts)
            continue
        new = {}
        for (u1, v1), c1 in product.items():
            for (u2, v2), c2 in parts.items():
                key = (u1 + u2, v1 + v2)
                if sum(key) <= order:
                    new[key] = new.get(key, 0) + c1 * c2
        product = new
    expected = QSeries(2, order, product)
    assert Z_prime(cfg) == expected


def test_binomial_oracle_sanity():
    assert poly_mul(binomial_series(Fraction(-1), 1, 4), [1, -1, 0, 0, 0], 4) == [1, 0, 0, 0, 0]

import math
import random

import numpy as np
import pytest

from specgap import (
    ChebCombo,
    MonoPoly,
    alpha,
    from_mono,
    sup_on_interval,
    to_mono,
    v_eval,
)
from oracles import dense_max


def test_v0_is_constant_one():
    assert v_eval(0, 7.3) == 1.0
    assert v_eval(0, -123.0) == 1.0


def test_v2_v3_closed_forms():
    for x in np.linspace(-3, 3, 31):
        assert v_eval(2, x) == pytest.approx(x * x - 1.0, abs=1e-12)
        assert v_eval(3, x) == pytest.approx(x**3 - 2.0 * x, abs=1e-12)


def test_sine_quotient_closed_form():
    theta = 0.3
    x = 2.0 * math.cos(theta)
    for m in (1, 2, 5, 9):
        expected = math.sin((m + 1) * theta) / math.sin(theta)
        assert v_eval(m, x) == pytest.approx(expected, abs=1e-12)


def test_recurrence_consistency():
    rnd = random.Random(101)
    xs = [rnd.uniform(-3.0, 3.0) for _ in range(100)]
    for m in range(1, 21):
        for x in xs:
            lhs = v_eval(m + 1, x)
            rhs = x * v_eval(m, x) - v_eval(m - 1, x)
            assert lhs == pytest.approx(rhs, abs=1e-10 * max(1.0, abs(lhs)))


def test_v_eval_rejects_negative_index():
    with pytest.raises(ValueError):
        v_eval(-1, 0.0)


def test_alpha_small_cases():
    assert abs(alpha(1)) < 1e-12
    assert alpha(2) == pytest.approx(1.0, abs=1e-12)
    assert v_eval(2, alpha(2)) == pytest.approx(0.0, abs=1e-12)
    assert alpha(3) == pytest.approx(math.sqrt(2.0), abs=1e-12)
    assert v_eval(3, alpha(3)) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        alpha(0)


def test_root_structure():
    for m in range(1, 13):
        roots = [2.0 * math.cos(ell * math.pi / (m + 1)) for ell in range(1, m + 1)]
        for r in roots:
            assert abs(v_eval(m, r)) < 1e-9
        assert alpha(m) == pytest.approx(max(roots), abs=1e-12)


def test_from_mono_x_squared():
    combo = from_mono(MonoPoly((0.0, 0.0, 1.0)))
    assert combo.coeffs == (1.0, 0.0, 1.0)


def test_to_mono_v1():
    assert to_mono(ChebCombo((0.0, 1.0))).coeffs == (0.0, 1.0)


def test_basis_round_trip():
    rnd = random.Random(7)
    for _ in range(50):
        deg = rnd.randint(0, 12)
        combo = ChebCombo(tuple(rnd.uniform(-2, 2) for _ in range(deg + 1)))
        back = from_mono(to_mono(combo))
        assert len(back.coeffs) == len(combo.coeffs)
        for a, b in zip(back.coeffs, combo.coeffs):
            assert a == pytest.approx(b, abs=1e-10)


def test_combo_eval_matches_monomial_path():
    rnd = random.Random(11)
    for _ in range(30):
        deg = rnd.randint(0, 10)
        combo = ChebCombo(tuple(rnd.uniform(-1, 1) for _ in range(deg + 1)))
        p = to_mono(combo)
        for _ in range(10):
            x = rnd.uniform(-2.5, 2.5)
            a, b = combo(x), p(x)
            assert a == pytest.approx(b, rel=1e-9, abs=1e-9)


def test_trailing_zeros_trimmed():
    c = ChebCombo((1.0, 2.0, 0.0, 0.0))
    assert c.coeffs == (1.0, 2.0)
    assert c.degree == 1
    assert MonoPoly((0.0,)).degree == 0


def test_sup_v2_on_shifted_interval():
    p = to_mono(ChebCombo((0.0, 0.0, 1.0)))
    a = -3.0 / math.sqrt(2.0)
    x, m = sup_on_interval(p, a, 1.0 / math.sqrt(2.0))
    assert x == a
    assert m == pytest.approx(3.5, abs=1e-9)
    assert m >= 3.5  # widened upward


def test_sup_v1_hits_right_endpoint():
    p = to_mono(ChebCombo((0.0, 1.0)))
    for k in (3, 4, 7):
        rt = math.sqrt(k - 1.0)
        x, m = sup_on_interval(p, -1.0 / rt, k / rt)
        assert x == k / rt
        assert m == pytest.approx(k / rt, abs=1e-9)


def test_sup_constant():
    x, m = sup_on_interval(MonoPoly((5.0,)), 0.0, 1.0)
    assert (x, m) == (0.0, pytest.approx(5.0, abs=1e-9))


def test_sup_rejects_reversed_interval():
    with pytest.raises(ValueError):
        sup_on_interval(MonoPoly((1.0,)), 1.0, 0.0)


def test_sup_is_an_upper_bound():
    rnd = random.Random(2024)
    for _ in range(1000):
        deg = rnd.randint(0, 8)
        p = MonoPoly(tuple(rnd.uniform(-3, 3) for _ in range(deg + 1)))
        a = rnd.uniform(-3, 2)
        b = a + rnd.uniform(0.0, 3.0)
        _, m = sup_on_interval(p, a, b)
        assert m >= dense_max(p.coeffs, a, b, samples=100) - 1e-12


def test_sup_handles_interior_double_critical_point():
    # p = (x^2 - 1)^2 has critical points at -1, 0, 1; max on [-2, 2] at ends
    p = MonoPoly((1.0, 0.0, -2.0, 0.0, 1.0))
    x, m = sup_on_interval(p, -0.5, 0.5)
    assert x == pytest.approx(0.0, abs=1e-9)
    assert m == pytest.approx(1.0, abs=1e-9)
    _, m = sup_on_interval(p, -2.0, 2.0)
    assert m == pytest.approx(9.0, abs=1e-8)

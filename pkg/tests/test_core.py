import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frftsynth import core, signals
from frftsynth.errors import InvalidArgumentError, SingularMatrixError, SingularOrderError


def rel(a, b):
    return np.linalg.norm(a - b) / np.linalg.norm(b)


def dense_centered_dft(n):
    k = np.arange(n) - n // 2
    return np.exp(-2j * np.pi * np.outer(k, k) / n) / math.sqrt(n)


@pytest.mark.parametrize(
    "raw, reduced",
    [(0.0, 0.0), (2.0, 2.0), (-2.0, 2.0), (3.0, -1.0), (4.0, 0.0), (5.5, 1.5), (-2.5, 1.5), (-1.9, -1.9)],
)
def test_reduce_order(raw, reduced):
    order = core.reduce_order(raw)
    assert order.reduced == pytest.approx(reduced)
    assert -2 < order.reduced <= 2
    assert order.angle == pytest.approx(reduced * math.pi / 2)


@given(st.floats(-50, 50, allow_nan=False))
def test_reduce_order_range_and_period(raw):
    order = core.reduce_order(raw)
    assert -2 < order.reduced <= 2
    assert (raw - order.reduced) / 4 == pytest.approx(round((raw - order.reduced) / 4), abs=1e-9)


def test_reduce_order_rejects_nonfinite():
    with pytest.raises(InvalidArgumentError):
        core.reduce_order(float("nan"))


@pytest.mark.parametrize("raw, expected", [(1e-7, 0), (1 - 1e-7, 1), (-2 + 1e-8, 2), (3.0, -1), (0.01, None)])
def test_nearest_integer(raw, expected):
    assert core.reduce_order(raw).nearest_integer == expected


@pytest.mark.parametrize("n", [64, 65, 1024])
def test_centered_dft_matches_dense_matrix(n):
    x = signals.gaussian_enveloped(n)
    assert rel(core.centered_dft(x), dense_centered_dft(n) @ x) < 1e-12
    assert rel(core.centered_idft(x), dense_centered_dft(n).conj() @ x) < 1e-12


@pytest.mark.parametrize("n", [64, 1024])
@pytest.mark.parametrize("impl", ["fast", "direct"])
def test_integer_orders_exact(n, impl):
    x = signals.gaussian_enveloped(n)
    f = dense_centered_dft(n)
    k = np.arange(n)
    expected = {0: x, 1: f @ x, -1: f.conj() @ x, 2: x[(2 * (n // 2) - k) % n], 4: x, -3: f @ x}
    for a, ref in expected.items():
        assert rel(core.frft(x, a, impl), ref) < 1e-12


def test_interpolate_keeps_samples():
    x = signals.gaussian_enveloped(64)
    for factor in (2, 3):
        z = core.interpolate(x, factor)
        assert z.size == factor * x.size
        assert rel(z[::factor], x) < 1e-12


@pytest.mark.parametrize("n", [64, 100, 256])
@pytest.mark.parametrize("a", [0.1, 0.25, 0.5, 0.75, 1.3, -0.6, 1.9, -1.7])
def test_fast_matches_direct(n, a):
    x = signals.gaussian_enveloped(n)
    assert rel(core.frft_fast(x, a), core.frft_direct(x, a)) < 1e-2


@pytest.mark.parametrize("a", [0.2, 0.5, 1.2])
@pytest.mark.parametrize("u0", [-1.5, 2.0])
def test_shifted_gaussian_moves_along_rotated_axis(a, u0):
    # |F_a exp(-pi (u - u0)^2)| = exp(-pi (u - u0 cos phi)^2)
    n = 256
    u = core.grid(n)
    x = np.exp(-np.pi * (u - u0) ** 2)
    phi = a * math.pi / 2
    expected = np.exp(-np.pi * (u - u0 * math.cos(phi)) ** 2)
    for impl in ("fast", "direct"):
        assert rel(np.abs(core.frft(x, a, impl)), expected) < 1e-6


@pytest.mark.parametrize("a", [0.01, 0.1, 0.25, 0.5, 0.75, 1.3, 1.5, -0.4])
def test_gaussian_is_eigenfunction(a):
    g = signals.gaussian(256)
    assert rel(core.frft(g, a, "fast"), g) < 1e-2
    assert rel(core.frft(g, a, "direct"), g) < 1e-2


@settings(max_examples=25, deadline=None)
@given(st.floats(-4, 4, allow_nan=False), st.integers(0, 2**31 - 1))
def test_fast_is_unitary_and_invertible(a, seed):
    x = signals.gaussian_enveloped(128, seed=seed)
    y = core.frft(x, a)
    assert abs(np.linalg.norm(y) - np.linalg.norm(x)) / np.linalg.norm(x) < 1e-3
    assert rel(core.frft_inverse(y, a), x) < 1e-2


@settings(max_examples=15, deadline=None)
@given(st.floats(-1.9, 1.9, allow_nan=False), st.floats(-1.9, 1.9, allow_nan=False))
def test_index_additivity(a, b):
    x = signals.gaussian_enveloped(256)
    assert rel(core.frft(core.frft(x, a), b), core.frft(x, a + b)) < 2e-2


def test_period_four():
    x = signals.gaussian_enveloped(128)
    assert rel(core.frft(x, 4.3), core.frft(x, 0.3)) < 1e-12
    assert rel(core.frft(x, -3.7), core.frft(x, 0.3)) < 1e-12


def test_real_even_signal_dft_stays_real():
    n = 64
    x = np.cos(2 * np.pi * 3 * (np.arange(n) - n // 2) / n)
    assert np.max(np.abs(core.frft(x, 1).imag)) < 1e-12


def test_lct_of_rotation_matrix_is_frft():
    x = signals.gaussian_enveloped(64)
    for a in (0.3, -0.7, 1.4):
        m = core.SymmetricLctMatrix.from_order(a)
        assert np.array_equal(core.lct_direct(x, m), core.frft_direct(x, a))


def test_lct_constant_is_sqrt_one_minus_i_cot():
    for a in (0.3, 0.9, 1.6, -0.4):
        phi = a * math.pi / 2
        c = core.SymmetricLctMatrix.from_order(a).constant
        assert c == pytest.approx(np.sqrt(1 - 1j / math.tan(phi)))


def test_lct_rejects_singular_matrix():
    with pytest.raises(SingularMatrixError):
        core.SymmetricLctMatrix(1.0, 0.0)
    with pytest.raises(InvalidArgumentError):
        core.SymmetricLctMatrix(float("inf"), 1.0)


@pytest.mark.parametrize("a", [0.0, 2.0, 1e-8, -4.0])
def test_direct_rejects_even_integer_orders(a):
    with pytest.raises(SingularOrderError):
        core.frft_direct(np.ones(16), a)


def test_input_validation():
    with pytest.raises(InvalidArgumentError):
        core.frft(np.ones(4), 0.3)
    with pytest.raises(InvalidArgumentError):
        core.frft(np.ones(16), 0.3, impl="slow")
    with pytest.raises(InvalidArgumentError):
        core.frft(np.ones((4, 4)), 0.3)
    with pytest.raises(InvalidArgumentError):
        core.frft(np.array([1.0, np.nan] * 8), 0.3)
    with pytest.raises(InvalidArgumentError):
        core.frft(np.array([]), 0.0)


def test_sign_flipped_chirp_breaks_oracle_equivalence(monkeypatch):
    # a mutant of the chirp helper must be caught by the fast/direct comparison
    x = signals.gaussian_enveloped(256)
    direct = core.frft_direct(x, 0.3)
    original = core._chirp
    monkeypatch.setattr(core, "_chirp", lambda coords, rate: original(coords, -rate))
    assert rel(core.frft_fast(x, 0.3), direct) > 1e-2

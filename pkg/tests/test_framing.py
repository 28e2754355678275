import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frftsynth import core
from frftsynth.errors import InvalidArgumentError
from frftsynth.framing import (
    OrderSchedule,
    WindowSpec,
    frame_signal,
    overlap_add,
    process_signal,
    project,
)


def test_window_defaults():
    w = WindowSpec(1000)
    assert w.hop_samples == 500
    assert (w.analysis_window, w.synthesis_crossfade) == ("rectangular", "hann")


@pytest.mark.parametrize(
    "kwargs",
    [dict(length_samples=0), dict(length_samples=8, hop_samples=9), dict(length_samples=8, analysis_window="kaiser")],
)
def test_window_validation(kwargs):
    with pytest.raises(InvalidArgumentError):
        WindowSpec(**kwargs)


@pytest.mark.parametrize("analysis, synthesis", [("rectangular", "hann"), ("hann", "hann"), ("hann", "rectangular")])
@pytest.mark.parametrize("n", [64, 1024])
def test_window_product_overlap_adds_to_gain(analysis, synthesis, n):
    w = WindowSpec(n, n // 2, analysis, synthesis)
    a, s = w.windows()
    total = np.zeros(8 * n)
    for start in range(0, 7 * n, n // 2):
        total[start:start + n] += a * s
    steady = total[n:6 * n]
    assert np.allclose(steady, w.cola_gain(), rtol=0, atol=1e-12)


def test_sqrt_hann_pair():
    a, s = WindowSpec(16, 8, "hann", "hann").windows()
    np.testing.assert_allclose(a * s, 0.5 - 0.5 * np.cos(2 * np.pi * np.arange(16) / 16), atol=1e-15)


@pytest.mark.parametrize("n, expected", [(1000, 1), (1001, 2), (1500, 2), (1501, 3), (4000, 7)])
def test_frame_count(n, expected):
    assert WindowSpec(1000).frame_count(n) == expected


def test_frame_signal_zero_pads_last_frame():
    x = np.arange(1, 11, dtype=float)
    frames = frame_signal(x, WindowSpec(4, 3, "rectangular", "rectangular"))
    assert len(frames) == 3
    np.testing.assert_array_equal(frames[-1].real, [7, 8, 9, 10])
    frames = frame_signal(x, WindowSpec(4, 4, "rectangular", "rectangular"))
    np.testing.assert_array_equal(frames[-1].real, [9, 10, 0, 0])


def test_frame_signal_rejects_short_input():
    with pytest.raises(InvalidArgumentError):
        frame_signal(np.ones(10), WindowSpec(16))


def test_order_schedule():
    np.testing.assert_allclose(OrderSchedule.ramp(0.0, 0.5).orders(6), [0, 0.1, 0.2, 0.3, 0.4, 0.5])
    np.testing.assert_allclose(OrderSchedule.constant(0.25).orders(3), [0.25] * 3)
    assert OrderSchedule.ramp(0.0, 0.5).orders(1)[0] == 0.0
    with pytest.raises(InvalidArgumentError):
        OrderSchedule("linear_ramp", 0.0)
    with pytest.raises(InvalidArgumentError):
        OrderSchedule("cubic", 0.0)


def test_projection():
    y = np.array([1 + 2j, -3 - 4j])
    np.testing.assert_array_equal(project(y, "real"), [1, -3])
    np.testing.assert_array_equal(project(y, "imaginary"), [2, -4])
    assert project(y, "complex_passthrough") is y
    assert not np.iscomplexobj(project(y, "imaginary"))
    with pytest.raises(InvalidArgumentError):
        project(y, "magnitude")


@pytest.mark.parametrize("analysis, synthesis", [("rectangular", "hann"), ("hann", "hann"), ("rectangular", "rectangular")])
def test_order_zero_reproduces_steady_state(analysis, synthesis):
    rng = np.random.default_rng(3)
    x = rng.standard_normal(5000)
    hop = 256 if synthesis == "hann" else 512
    w = WindowSpec(512, hop, analysis, synthesis)
    y = process_signal(x, w, OrderSchedule.constant(0.0))
    ss = w.steady_state(x.size)
    assert y.shape == x.shape
    assert np.max(np.abs(y[ss] - x[ss])) < 1e-9


@settings(max_examples=20, deadline=None)
@given(st.integers(64, 3000), st.sampled_from([16, 32, 64]))
def test_hann_hann_cola_any_length(n, length):
    x = np.random.default_rng(n).standard_normal(max(n, length))
    w = WindowSpec(length, length // 2, "hann", "hann")
    y = process_signal(x, w, OrderSchedule.constant(0.0))
    ss = w.steady_state(x.size)
    assert np.max(np.abs(y[ss] - x[ss])) < 1e-9


def test_single_frame_is_not_crossfaded():
    x = np.random.default_rng(0).standard_normal(256)
    w = WindowSpec(256)
    y = process_signal(x, w, OrderSchedule.constant(0.0))
    np.testing.assert_allclose(y, x, atol=1e-15)


def test_overlap_add_keeps_complex_frames():
    w = WindowSpec(8)
    out = overlap_add([np.ones(8) * 1j, np.ones(8)], w, 12)
    assert np.iscomplexobj(out)
    assert out.size == 12
    out = overlap_add([np.ones(8), np.ones(8)], w, 12)
    assert out.dtype == np.float64


def test_overlap_add_rejects_bad_frames():
    with pytest.raises(InvalidArgumentError):
        overlap_add([], WindowSpec(8), 8)
    with pytest.raises(InvalidArgumentError):
        overlap_add([np.ones(7)], WindowSpec(8), 8)


def test_process_signal_matches_manual_framing():
    rng = np.random.default_rng(7)
    x = rng.standard_normal(1024)
    w = WindowSpec(256)
    y = process_signal(x, w, OrderSchedule.ramp(0.1, 0.4), proj="imaginary")
    orders = np.linspace(0.1, 0.4, w.frame_count(x.size))
    _, s = w.windows()
    ref = np.zeros(1024 + 256)
    for m, a in enumerate(orders):
        start = m * 128
        frame = np.zeros(256, complex)
        chunk = x[start:start + 256]
        frame[:chunk.size] = chunk
        ref[start:start + 256] += core.frft(frame, a).imag * s
    np.testing.assert_allclose(y, ref[:1024] / w.cola_gain(), atol=1e-12)

import math

import numpy as np
import pytest

from frftsynth import analysis, core, signals
from frftsynth.errors import InvalidArgumentError, ResourceLimitError

RATE = 44100


def test_stft_real_sine_reads_unit_magnitude_at_its_bin():
    n = 8192
    f0 = 64 * RATE / 2048
    x = np.cos(2 * np.pi * f0 * np.arange(n) / RATE)
    sg = analysis.stft_spectrogram(x, 2048, 512, sample_rate=RATE)
    assert sg.magnitudes.shape == (1025, 13)
    assert np.all(np.argmax(sg.magnitudes, axis=0) == 64)
    assert sg.magnitudes[64].mean() == pytest.approx(1.0, rel=1e-9)
    assert sg.time_axis[0] == pytest.approx(1024 / RATE)
    assert sg.to_db().min() >= analysis.DB_FLOOR


def test_stft_complex_input_is_two_sided():
    n = 4096
    x = np.exp(-2j * np.pi * 3000 * np.arange(n) / RATE)
    sg = analysis.stft_spectrogram(x, 1024, sample_rate=RATE)
    assert sg.freq_axis.size == 1024
    assert np.all(np.diff(sg.freq_axis) > 0)
    peak = sg.freq_axis[np.argmax(sg.magnitudes[:, 0])]
    assert abs(peak + 3000) < RATE / 1024


def test_stft_rejects_bad_sizes():
    with pytest.raises(InvalidArgumentError):
        analysis.stft_spectrogram(np.ones(100), 256)
    with pytest.raises(InvalidArgumentError):
        analysis.stft_spectrogram(np.ones(1000), 256, window_fn="kaiser")


@pytest.mark.parametrize("n", [128, 256])
def test_wigner_of_gaussian_matches_closed_form(n):
    # W(t, f) = sqrt(2) exp(-2 pi (t^2 + f^2)) for exp(-pi t^2)
    w = analysis.wigner(signals.gaussian(n))
    t, f = np.meshgrid(w.time_axis, w.freq_axis, indexing="ij")
    expected = math.sqrt(2) * np.exp(-2 * np.pi * (t**2 + f**2))
    assert np.linalg.norm(w.values - expected) / np.linalg.norm(expected) < 2e-2
    assert w.imag_residue < 1e-12


def test_wigner_marginal_is_energy():
    x = signals.gaussian_enveloped(256)
    w = analysis.wigner(x)
    energy = np.sum(np.abs(x) ** 2) / math.sqrt(x.size)
    assert w.values.sum() * w.cell_area == pytest.approx(energy, rel=1e-9)
    # time marginal recovers |x|^2 sample by sample
    df = w.freq_axis[1] - w.freq_axis[0]
    np.testing.assert_allclose(w.values.sum(axis=1) * df, np.abs(x) ** 2, atol=1e-12)


def test_wigner_size_limit():
    with pytest.raises(ResourceLimitError):
        analysis.wigner(np.ones(analysis.MAX_WIGNER_LENGTH + 1))
    with pytest.raises(ResourceLimitError):
        analysis.rotation_check(np.ones(analysis.MAX_ROTATION_LENGTH + 2), 0.5)


def test_rotation_check_is_exactly_one_at_order_zero():
    assert analysis.rotation_check(signals.enveloped_tone(128, 0.1), 0.0) == 1.0


@pytest.mark.parametrize("a", [0.25, 0.5, 1.0, -0.5])
def test_wigner_rotates_with_order(a):
    tone = signals.enveloped_tone(128, 0.1)
    scores = analysis.rotation_scores(tone, a)
    assert scores[1] >= 0.95
    # the opposite orientation does not fit an off-center tone
    assert scores[-1] < 0.5


def test_rotation_fast_and_direct_agree():
    tone = signals.enveloped_tone(64, 0.1)
    assert analysis.rotation_check(tone, 0.5, "fast") == pytest.approx(
        analysis.rotation_check(tone, 0.5, "direct"), abs=1e-9
    )


def test_ridge_fit_recovers_linear_chirp():
    n = 2 * RATE
    t = np.arange(n) / RATE
    f0, rate = 2000.0, 3000.0
    x = np.cos(2 * np.pi * (f0 * t + 0.5 * rate * t**2))
    sg = analysis.stft_spectrogram(x, 2048, 512, sample_rate=RATE)
    fit = analysis.ridge_fit(sg)
    assert fit.slopes[0] == pytest.approx(rate, rel=5e-2)
    assert fit.intercepts[0] == pytest.approx(f0 + rate * fit.t_ref, rel=1e-2)


def test_ridge_fit_finds_two_mirrored_chirps():
    n = 2 * RATE
    t = np.arange(n) / RATE - 1.0
    x = np.cos(2 * np.pi * (5000 * t + 0.5 * 1500 * t**2)) + np.cos(2 * np.pi * (5000 * t - 0.5 * 1500 * t**2))
    sg = analysis.stft_spectrogram(x, 2048, 512, sample_rate=RATE)
    fit = analysis.ridge_fit(sg, n_ridges=2)
    assert sorted(fit.slopes) == pytest.approx([-1500, 1500], rel=5e-2)
    assert fit.intercepts == pytest.approx([5000, 5000], rel=1e-2)


def test_ridge_fit_region_validation():
    sg = analysis.stft_spectrogram(np.ones(8192), 1024)
    with pytest.raises(InvalidArgumentError):
        analysis.ridge_fit(sg, (None, None, 30000, None))


def test_rotation_predictions():
    assert analysis.rotation_slope(0.0, 1024, RATE) == 0.0
    assert analysis.rotation_slope(0.5, 44100, RATE) == pytest.approx(-RATE)
    assert analysis.rotation_intercept(0.5, 1000.0) == pytest.approx(1000 * math.sqrt(2))


def test_complex_tone_ridge_follows_prediction():
    n = 65536
    f0 = 2000.0
    x = np.exp(2j * np.pi * f0 * np.arange(n) / RATE)
    y = core.frft(x, 0.2)
    sg = analysis.stft_spectrogram(y, 1024, 512, sample_rate=RATE)
    fit = analysis.ridge_fit(sg, (None, None, 0, None))
    assert fit.slopes[0] == pytest.approx(analysis.rotation_slope(0.2, n, RATE), rel=1e-2)

"""Time-frequency diagnostics: STFT, Wigner distribution, rotation and ridge checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.ndimage import map_coordinates
from scipy.signal import find_peaks

from .core import Impl, OrderLike, as_buffer, as_order, frft, grid
from .errors import InvalidArgumentError, ResourceLimitError

DB_FLOOR = -100.0
MAX_WIGNER_LENGTH = 512
MAX_ROTATION_LENGTH = 256


@dataclass
class SpectrogramGrid:
    """Linear STFT magnitudes, shape ``(n_freqs, n_frames)``.

    A full-scale real sinusoid reads about 1.0 (0 dB) at its bin. Complex
    input yields a two-sided, ascending frequency axis.
    """

    magnitudes: np.ndarray
    time_axis: np.ndarray
    freq_axis: np.ndarray
    window_len: int
    hop: int
    window_fn: str
    sample_rate: float

    def to_db(self, floor: float = DB_FLOOR) -> np.ndarray:
        return np.maximum(20 * np.log10(np.maximum(self.magnitudes, 1e-300)), floor)


@dataclass
class WignerGrid:
    """Discrete Wigner distribution ``values[time, freq]``.

    Axes are in grid units: time ``u_n`` spaced ``1/sqrt(N)``, frequency spaced
    ``1/(2 sqrt(N))`` (the lag product runs over whole samples on each side,
    so the frequency range is ``[-sqrt(N)/4, sqrt(N)/4)``). Values are scaled
    so ``values.sum() * cell_area`` is the signal energy ``sum|x|^2 / sqrt(N)``.
    """

    values: np.ndarray
    time_axis: np.ndarray
    freq_axis: np.ndarray
    imag_residue: float = 0.0

    @property
    def cell_area(self) -> float:
        return float((self.time_axis[1] - self.time_axis[0]) * (self.freq_axis[1] - self.freq_axis[0]))


def _window(name: str, n: int) -> np.ndarray:
    if name == "hann":
        return 0.5 - 0.5 * np.cos(2 * np.pi * np.arange(n) / n)
    if name == "rectangular":
        return np.ones(n)
    raise InvalidArgumentError(f"unknown window {name!r}")


def stft_spectrogram(
    x,
    window_len: int = 2048,
    hop: int | None = None,
    window_fn: Literal["hann", "rectangular"] = "hann",
    sample_rate: float = 44100,
) -> SpectrogramGrid:
    """Magnitude STFT over full frames only; column times are frame centers."""
    x = np.asarray(x)
    hop = window_len // 4 if hop is None else hop
    if x.ndim != 1 or window_len < 2 or hop < 1 or window_len > x.size:
        raise InvalidArgumentError(
            f"invalid STFT sizes: len={x.size}, window_len={window_len}, hop={hop}"
        )
    win = _window(window_fn, window_len)
    starts = np.arange(0, x.size - window_len + 1, hop)
    frames = np.lib.stride_tricks.sliding_window_view(x, window_len)[starts] * win
    if np.iscomplexobj(x):
        spectrum = np.fft.fftshift(np.fft.fft(frames, axis=1), axes=1)
        freqs = np.fft.fftshift(np.fft.fftfreq(window_len, 1 / sample_rate))
        scale = 1.0 / win.sum()
    else:
        spectrum = np.fft.rfft(frames, axis=1)
        freqs = np.fft.rfftfreq(window_len, 1 / sample_rate)
        scale = 2.0 / win.sum()
    return SpectrogramGrid(
        magnitudes=np.abs(spectrum).T * scale,
        time_axis=(starts + window_len / 2) / sample_rate,
        freq_axis=freqs,
        window_len=window_len,
        hop=hop,
        window_fn=window_fn,
        sample_rate=sample_rate,
    )


def wigner(x) -> WignerGrid:
    """Pseudo-Wigner distribution over all lags that stay inside the buffer."""
    x = as_buffer(x)
    n = x.size
    if n > MAX_WIGNER_LENGTH:
        raise ResourceLimitError(f"wigner is O(N^2); N={n} exceeds {MAX_WIGNER_LENGTH}")
    c = n // 2
    t = np.arange(n)[:, None]
    lag = np.arange(n)[None, :] - c
    ahead, behind = t + lag, t - lag
    valid = (ahead >= 0) & (ahead < n) & (behind >= 0) & (behind < n)
    products = np.where(
        valid, x[np.clip(ahead, 0, n - 1)] * np.conj(x[np.clip(behind, 0, n - 1)]), 0
    )
    spectrum = np.fft.fftshift(np.fft.fft(np.fft.ifftshift(products, axes=1), axis=1), axes=1)
    spectrum *= 2 / math.sqrt(n)
    return WignerGrid(
        values=spectrum.real,
        time_axis=grid(n),
        freq_axis=(np.arange(n) - c) / (2 * math.sqrt(n)),
        imag_residue=float(np.abs(spectrum.imag).max()),
    )


def _rotate_wigner(w: WignerGrid, angle: float) -> np.ndarray:
    # resample W at (t cos - f sin, t sin + f cos), in index units
    n_t, n_f = w.values.shape
    dt = w.time_axis[1] - w.time_axis[0]
    df = w.freq_axis[1] - w.freq_axis[0]
    ct, cf = n_t // 2, n_f // 2
    i, j = np.meshgrid(np.arange(n_t) - ct, np.arange(n_f) - cf, indexing="ij")
    cos, sin = math.cos(angle), math.sin(angle)
    src_i = ct + i * cos - j * (df / dt) * sin
    src_j = cf + i * (dt / df) * sin + j * cos
    return map_coordinates(w.values, [src_i, src_j], order=1, mode="constant", cval=0.0)


def _correlation(a: np.ndarray, b: np.ndarray) -> float:
    a = a.ravel() - a.mean()
    b = b.ravel() - b.mean()
    denom = math.sqrt(float(a @ a) * float(b @ b))
    if denom == 0:
        return 0.0
    return float(np.clip((a @ b) / denom, -1.0, 1.0))


def rotation_scores(x, order: OrderLike, impl: Impl = "direct") -> dict[int, float]:
    """Correlation between W[frft(x)] and W[x] rotated by +angle and -angle.

    Keys are the orientation sign (+1, -1).
    """
    x = as_buffer(x)
    if x.size > MAX_ROTATION_LENGTH:
        raise ResourceLimitError(f"rotation_check limited to N <= {MAX_ROTATION_LENGTH}")
    order = as_order(order)
    target = wigner(frft(x, order, impl)).values
    source = wigner(x)
    return {
        sign: _correlation(target, _rotate_wigner(source, sign * order.angle))
        for sign in (1, -1)
    }


def rotation_check(x, order: OrderLike, impl: Impl = "direct") -> float:
    """Best normalized correlation over both rotation orientations."""
    return max(rotation_scores(x, order, impl).values())


@dataclass
class RidgeFit:
    """Fitted ridge lines ``f = slope * (t - t_ref) + intercept``, strongest first."""

    slopes: list[float]
    intercepts: list[float]
    energies: list[float]
    t_ref: float
    points: list[np.ndarray] = field(default_factory=list, repr=False)


def _column_peaks(col: np.ndarray, freqs: np.ndarray, k: int, threshold: float, min_sep: int):
    if k == 1:
        idx = np.array([int(np.argmax(col))])
    else:
        idx, _ = find_peaks(col, distance=min_sep)
        idx = idx[np.argsort(col[idx])[::-1][:k]]
    out = []
    df = freqs[1] - freqs[0]
    for i in idx:
        if col[i] < threshold:
            continue
        f = freqs[i]
        if 0 < i < col.size - 1 and col[i - 1] > 0 and col[i + 1] > 0:
            # parabolic interpolation on log magnitude
            lo, mid, hi = np.log(col[i - 1 : i + 2])
            denom = lo - 2 * mid + hi
            if denom < 0:
                f += 0.5 * (lo - hi) / denom * df
        out.append((f, col[i]))
    return out


def _hough_seed(t: np.ndarray, f: np.ndarray, tol: float, max_slope: float):
    slopes = np.linspace(-max_slope, max_slope, 2001)
    offsets = f[None, :] - slopes[:, None] * t[None, :]
    lo = offsets.min()
    bins = np.floor((offsets - lo) / tol).astype(np.int64)
    n_bins = int(bins.max()) + 1
    counts = np.zeros(slopes.size * n_bins, dtype=np.int64)
    np.add.at(counts, (np.arange(slopes.size)[:, None] * n_bins + bins).ravel(), 1)
    best = int(np.argmax(counts))
    s_idx, b_idx = divmod(best, n_bins)
    return slopes[s_idx], lo + (b_idx + 0.5) * tol


def ridge_fit(
    spec: SpectrogramGrid,
    region: tuple[float | None, float | None, float | None, float | None] | None = None,
    n_ridges: int = 1,
    rel_threshold: float = 0.1,
    t_ref: float | None = None,
) -> RidgeFit:
    """Fit straight ridges to per-column spectral peaks.

    Parameters
    ----------
    spec : SpectrogramGrid
    region : (t_min, t_max, f_min, f_max), optional
        Bounds in seconds and Hz; ``None`` entries are open.
    n_ridges : int
        Peaks taken per column and lines fitted (2 for mirrored ridges).
    rel_threshold : float
        Peaks below this fraction of the region maximum are ignored.
    t_ref : float, optional
        Time at which intercepts are reported; defaults to the region center.

    Lines are seeded by a Hough vote over (slope, intercept), refined by
    least squares on their inliers and removed from the pool in turn.
    """
    t_min, t_max, f_min, f_max = region or (None, None, None, None)
    t_sel = np.ones(spec.time_axis.size, bool)
    f_sel = np.ones(spec.freq_axis.size, bool)
    if t_min is not None:
        t_sel &= spec.time_axis >= t_min
    if t_max is not None:
        t_sel &= spec.time_axis <= t_max
    if f_min is not None:
        f_sel &= spec.freq_axis >= f_min
    if f_max is not None:
        f_sel &= spec.freq_axis <= f_max
    if t_sel.sum() < 2 or f_sel.sum() < 3:
        raise InvalidArgumentError("ridge region is empty")
    times = spec.time_axis[t_sel]
    freqs = spec.freq_axis[f_sel]
    mags = spec.magnitudes[np.ix_(f_sel, t_sel)]
    if mags.max() <= 0:
        raise InvalidArgumentError("ridge region has no energy")
    if t_ref is None:
        t_ref = 0.5 * (times[0] + times[-1])

    df = freqs[1] - freqs[0]
    min_sep = max(3, freqs.size // 64)
    threshold = rel_threshold * mags.max()
    rows = []
    for ti, t in enumerate(times):
        for f, m in _column_peaks(mags[:, ti], freqs, n_ridges, threshold, min_sep):
            rows.append((t - t_ref, f, m))
    pts = np.array(rows) if rows else np.empty((0, 3))

    hop_s = times[1] - times[0]
    slopes, intercepts, energies, members = [], [], [], []
    span_f = freqs[-1] - freqs[0]
    span_t = max(times[-1] - times[0], hop_s)
    for _ in range(n_ridges):
        if len(pts) < 2:
            break
        slope, icpt = _hough_seed(pts[:, 0], pts[:, 1], 2 * df, 4 * span_f / span_t)
        for _ in range(4):
            tol = 3 * df + abs(slope) * hop_s
            inl = np.abs(pts[:, 1] - (slope * pts[:, 0] + icpt)) <= tol
            if inl.sum() < 2:
                break
            slope, icpt = np.polyfit(pts[inl, 0], pts[inl, 1], 1)
        if inl.sum() < 2:
            break
        slopes.append(float(slope))
        intercepts.append(float(icpt))
        energies.append(float(pts[inl, 2].sum()))
        members.append(pts[inl])
        pts = pts[~inl]

    order = np.argsort(energies)[::-1]
    return RidgeFit(
        slopes=[slopes[i] for i in order],
        intercepts=[intercepts[i] for i in order],
        energies=[energies[i] for i in order],
        t_ref=float(t_ref),
        points=[members[i] for i in order],
    )


def rotation_slope(order: OrderLike, n_samples: int, sample_rate: float) -> float:
    """Predicted ridge slope in Hz/s of a tone after a full-signal FrFT.

    A horizontal line rotated by the order's angle has slope ``-tan(angle)``
    in grid units; converting to Hz/s multiplies by ``sample_rate^2 / N``.
    """
    angle = as_order(order).angle
    return -math.tan(angle) * sample_rate**2 / n_samples


def rotation_intercept(order: OrderLike, frequency: float) -> float:
    """Ridge frequency at the signal center after the rotation, in Hz."""
    return frequency / math.cos(as_order(order).angle)

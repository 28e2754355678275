"""Windowed frame processing and overlap-add resynthesis."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .core import Impl, as_buffer, frft
from .errors import InvalidArgumentError

WindowName = Literal["rectangular", "hann"]
Projection = Literal["real", "imaginary", "complex_passthrough"]

WINDOWS = ("rectangular", "hann")
PROJECTIONS = ("real", "imaginary", "complex_passthrough")


def _periodic_hann(n: int) -> np.ndarray:
    return 0.5 - 0.5 * np.cos(2 * np.pi * np.arange(n) / n)


@dataclass(frozen=True)
class WindowSpec:
    """Frame length, hop and the analysis / synthesis window pair.

    ``hop_samples`` defaults to half the frame length. When both sides are
    Hann, each side uses the square root of the periodic Hann window so the
    product is a Hann window, which overlap-adds to a constant at 50% hop.
    """

    length_samples: int
    hop_samples: int | None = None
    analysis_window: WindowName = "rectangular"
    synthesis_crossfade: WindowName = "hann"

    def __post_init__(self):
        if self.hop_samples is None:
            object.__setattr__(self, "hop_samples", max(1, self.length_samples // 2))
        if self.length_samples < 1 or self.hop_samples < 1:
            raise InvalidArgumentError("window length and hop must be positive")
        if self.hop_samples > self.length_samples:
            raise InvalidArgumentError("hop must not exceed the window length")
        for name in (self.analysis_window, self.synthesis_crossfade):
            if name not in WINDOWS:
                raise InvalidArgumentError(f"unknown window {name!r}")

    def windows(self) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(analysis, synthesis)`` window arrays."""
        n = self.length_samples
        ones = np.ones(n)
        if self.analysis_window == "hann" and self.synthesis_crossfade == "hann":
            root = np.sqrt(_periodic_hann(n))
            return root, root
        analysis = _periodic_hann(n) if self.analysis_window == "hann" else ones
        synthesis = _periodic_hann(n) if self.synthesis_crossfade == "hann" else ones
        return analysis, synthesis

    def frame_count(self, n_samples: int) -> int:
        excess = n_samples - self.length_samples
        return -(-excess // self.hop_samples) + 1

    def cola_gain(self) -> float:
        """Steady-state value of the hop-shifted sum of analysis*synthesis."""
        analysis, synthesis = self.windows()
        product = analysis * synthesis
        hop = self.hop_samples
        padded = np.zeros(-(-product.size // hop) * hop)
        padded[:product.size] = product
        return float(padded.reshape(-1, hop).sum(axis=0).mean())

    def steady_state(self, n_samples: int) -> slice:
        """Samples covered by a full complement of overlapping frames."""
        m = self.frame_count(n_samples)
        if m == 1:
            return slice(0, n_samples)
        start = self.length_samples - self.hop_samples
        stop = min(n_samples, (m - 1) * self.hop_samples + self.hop_samples)
        return slice(start, stop)


@dataclass(frozen=True)
class OrderSchedule:
    """Per-frame transform order: constant, or a linear ramp from start to end."""

    kind: Literal["constant", "linear_ramp"] = "constant"
    start: float = 0.0
    end: float | None = None

    def __post_init__(self):
        if self.kind not in ("constant", "linear_ramp"):
            raise InvalidArgumentError(f"unknown schedule kind {self.kind!r}")
        if self.kind == "linear_ramp" and self.end is None:
            raise InvalidArgumentError("a linear ramp needs an end order")
        for value in (self.start, self.end):
            if value is not None and not math.isfinite(value):
                raise InvalidArgumentError("orders must be finite")

    @classmethod
    def constant(cls, order: float) -> OrderSchedule:
        return cls("constant", float(order))

    @classmethod
    def ramp(cls, start: float, end: float) -> OrderSchedule:
        return cls("linear_ramp", float(start), float(end))

    def orders(self, n_frames: int) -> np.ndarray:
        if self.kind == "constant" or n_frames == 1:
            return np.full(n_frames, self.start)
        m = np.arange(n_frames)
        out = self.start + (self.end - self.start) * m / (n_frames - 1)
        out[-1] = self.end
        return out


def project(y: np.ndarray, part: Projection) -> np.ndarray:
    """Keep the real or imaginary component (as real samples), or pass through."""
    if part == "real":
        return y.real.copy()
    if part == "imaginary":
        return y.imag.copy()
    if part == "complex_passthrough":
        return y
    raise InvalidArgumentError(f"unknown projection {part!r}")


def frame_signal(x, w: WindowSpec) -> list[np.ndarray]:
    """Cut ``x`` into hop-spaced frames, zero-padding the last one.

    The analysis window is applied to every frame.
    """
    x = as_buffer(x)
    if x.size < w.length_samples:
        raise InvalidArgumentError(
            f"signal has {x.size} samples, shorter than the {w.length_samples}-sample window"
        )
    analysis, _ = w.windows()
    n_frames = w.frame_count(x.size)
    frames = []
    for m in range(n_frames):
        start = m * w.hop_samples
        frame = np.zeros(w.length_samples, dtype=np.complex128)
        chunk = x[start:start + w.length_samples]
        frame[:chunk.size] = chunk
        frames.append(frame * analysis)
    return frames


def process_frames(
    frames: Sequence[np.ndarray],
    schedule: OrderSchedule,
    proj: Projection = "real",
    impl: Impl = "fast",
) -> list[np.ndarray]:
    if len(frames) == 0:
        raise InvalidArgumentError("no frames to process")
    orders = schedule.orders(len(frames))
    return [project(frft(f, a, impl), proj) for f, a in zip(frames, orders)]


def overlap_add(frames: Sequence[np.ndarray], w: WindowSpec, out_len: int) -> np.ndarray:
    """Crossfade frames at hop offsets and sum them, in frame order.

    The sum is divided by :meth:`WindowSpec.cola_gain`. A single frame is
    returned without a crossfade since there is nothing to fade against.
    The result is real unless any frame is complex.
    """
    if len(frames) == 0:
        raise InvalidArgumentError("no frames to overlap-add")
    frames = [np.asarray(f) for f in frames]
    if any(f.shape != (w.length_samples,) for f in frames):
        raise InvalidArgumentError("every frame must have the window length")
    dtype = np.complex128 if any(np.iscomplexobj(f) for f in frames) else np.float64

    if len(frames) == 1:
        out = np.zeros(max(out_len, w.length_samples), dtype=dtype)
        out[:w.length_samples] = frames[0]
        return out[:out_len]

    _, synthesis = w.windows()
    gain = w.cola_gain()
    total = (len(frames) - 1) * w.hop_samples + w.length_samples
    out = np.zeros(max(total, out_len), dtype=dtype)
    for m, frame in enumerate(frames):
        start = m * w.hop_samples
        out[start:start + w.length_samples] += frame * synthesis
    if gain != 1.0:
        out /= gain
    return out[:out_len]


def process_signal(
    x,
    w: WindowSpec,
    schedule: OrderSchedule,
    proj: Projection = "real",
    impl: Impl = "fast",
) -> np.ndarray:
    """frame -> per-frame FrFT + projection -> overlap-add, same length as ``x``."""
    x = as_buffer(x)
    frames = frame_signal(x, w)
    return overlap_add(process_frames(frames, schedule, proj, impl), w, x.size)

"""Alpha-filtering: multiply in the fractional domain, transform back."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .core import FrftOrder, Impl, as_buffer, as_order, centered_dft, frft
from .errors import InvalidArgumentError
from .framing import WindowSpec, frame_signal, overlap_add
from .synthesis import DEFAULT_SAMPLE_RATE


@dataclass(frozen=True)
class CenterSchedule:
    """Per-frame filter center frequency in Hz.

    ``exponential`` interpolates geometrically:
    ``c_m = start * (end / start) ** (m / (M - 1))``.
    """

    kind: Literal["constant", "exponential"] = "constant"
    start: float = 1000.0
    end: float | None = None

    def __post_init__(self):
        if self.kind not in ("constant", "exponential"):
            raise InvalidArgumentError(f"unknown center schedule {self.kind!r}")
        if self.kind == "exponential" and self.end is None:
            raise InvalidArgumentError("an exponential sweep needs an end frequency")
        for value in (self.start, self.end):
            if value is not None and not value > 0:
                raise InvalidArgumentError("center frequencies must be positive")

    def centers(self, n_frames: int) -> np.ndarray:
        if self.kind == "constant" or n_frames == 1:
            return np.full(n_frames, float(self.start))
        m = np.arange(n_frames) / (n_frames - 1)
        return self.start * (self.end / self.start) ** m


@dataclass(frozen=True)
class AlphaFilterSpec:
    """Gaussian-cosine band filter applied at a fractional order.

    ``bandwidth_b`` is in 1/s and multiplies time in seconds inside the
    Gaussian envelope.
    """

    bandwidth_b: float
    center_schedule: CenterSchedule
    order: FrftOrder
    window: WindowSpec
    sample_rate: int = DEFAULT_SAMPLE_RATE
    label: str = field(default="alpha-band-pass", compare=False)

    def __post_init__(self):
        if not self.bandwidth_b > 0:
            raise InvalidArgumentError("bandwidth_b must be positive")
        object.__setattr__(self, "order", as_order(self.order))


def gaussian_cosine_ir(b: float, c: float, n: int, sample_rate: int = DEFAULT_SAMPLE_RATE) -> np.ndarray:
    """``exp(-0.5 (t b)^2) cos(2 pi c t)`` on ``t_k = (k - n // 2) / sample_rate``."""
    if not b > 0 or not c > 0 or n < 1 or not sample_rate > 0:
        raise InvalidArgumentError("need b > 0, c > 0, n >= 1 and a positive sample rate")
    t = (np.arange(n) - n // 2) / sample_rate
    return np.exp(-0.5 * (t * b) ** 2) * np.cos(2 * math.pi * c * t)


def build_alpha_kernel(ir, n: int | None = None) -> np.ndarray:
    """Centered unitary DFT of ``ir``, aligned bin-for-bin with the FrFT grid."""
    ir = as_buffer(ir)
    if n is not None and ir.size != n:
        raise InvalidArgumentError(f"impulse response has {ir.size} samples, frame has {n}")
    return centered_dft(ir)


def alpha_filter(
    x,
    spec: AlphaFilterSpec,
    impl: Impl = "fast",
    kernel: np.ndarray | None = None,
) -> np.ndarray:
    """Filter ``x`` frame by frame in the fractional domain of ``spec.order``.

    Each frame is transformed, multiplied element-wise by the kernel built
    from that frame's center frequency, transformed back with the negated
    order, reduced to its real part and overlap-added. Passing ``kernel``
    uses that fixed array for every frame instead.
    """
    x = as_buffer(x)
    w = spec.window
    frames = frame_signal(x, w)
    if kernel is not None:
        kernel = as_buffer(kernel)
        if kernel.size != w.length_samples:
            raise InvalidArgumentError("kernel length must equal the window length")
    centers = spec.center_schedule.centers(len(frames))
    out = []
    for frame, c in zip(frames, centers):
        k = kernel
        if k is None:
            ir = gaussian_cosine_ir(spec.bandwidth_b, c, w.length_samples, spec.sample_rate)
            k = build_alpha_kernel(ir)
        filtered = frft(frft(frame, spec.order, impl) * k, -spec.order, impl)
        out.append(filtered.real)
    return overlap_add(out, w, x.size)

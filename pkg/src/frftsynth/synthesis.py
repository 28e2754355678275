"""Alpha-synthesis: windowed FrFT of pure sinusoids."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Impl
from .errors import InvalidArgumentError
from .framing import OrderSchedule, Projection, WindowSpec, process_signal

DEFAULT_SAMPLE_RATE = 44100


@dataclass(frozen=True)
class SineSpec:
    frequency: float
    duration: float
    amplitude: float = 1.0
    sample_rate: int = DEFAULT_SAMPLE_RATE
    phase: float = 0.0

    def __post_init__(self):
        if not 0 < self.frequency < self.sample_rate / 2:
            raise InvalidArgumentError(
                f"frequency {self.frequency} Hz must lie in (0, {self.sample_rate / 2})"
            )
        if not self.duration > 0:
            raise InvalidArgumentError("duration must be positive")

    @property
    def n_samples(self) -> int:
        return int(round(self.duration * self.sample_rate))


def sine(spec: SineSpec) -> np.ndarray:
    n = np.arange(spec.n_samples)
    return spec.amplitude * np.cos(2 * math.pi * spec.frequency * n / spec.sample_rate + spec.phase)


def alpha_synthesize(
    spec: SineSpec,
    w: WindowSpec,
    schedule: OrderSchedule,
    proj: Projection = "real",
    impl: Impl = "fast",
) -> np.ndarray:
    """Render a sinusoid through the framed FrFT.

    No loudness normalisation happens here. The output has the sinusoid's
    length and is real unless ``proj`` is ``"complex_passthrough"``.
    """
    return process_signal(sine(spec), w, schedule, proj, impl)

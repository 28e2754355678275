"""Deterministic test signals confined to the centered time-frequency disk."""
from __future__ import annotations

import math

import numpy as np

from .core import grid

DEFAULT_SEED = 20240611


def gaussian(n: int) -> np.ndarray:
    """Sampled ``exp(-pi u^2)``, the order-independent eigenfunction."""
    u = grid(n)
    return np.exp(-np.pi * u * u).astype(np.complex128)


def gaussian_enveloped(n: int, seed: int = DEFAULT_SEED, n_tones: int = 4) -> np.ndarray:
    """Random complex tones under a Gaussian envelope.

    Envelope width and tone frequencies scale with ``sqrt(n)`` so the
    Wigner support stays well inside the disk of radius ``sqrt(n)/2``.
    """
    rng = np.random.default_rng(seed)
    u = grid(n)
    width = math.sqrt(n) / 8
    envelope = np.exp(-np.pi * (u / width) ** 2)
    freqs = rng.uniform(-math.sqrt(n) / 8, math.sqrt(n) / 8, n_tones)
    weights = rng.normal(size=n_tones) + 1j * rng.normal(size=n_tones)
    return envelope * (np.exp(2j * np.pi * np.outer(u, freqs)) @ weights)


def enveloped_tone(n: int, cycles_per_sample: float, width: float = 1.5) -> np.ndarray:
    """Complex exponential at ``cycles_per_sample`` under ``exp(-pi (u/width)^2)``."""
    k = np.arange(n) - n // 2
    u = grid(n)
    return np.exp(-np.pi * (u / width) ** 2) * np.exp(2j * np.pi * cycles_per_sample * k)

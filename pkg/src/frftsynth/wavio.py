"""WAV and spectrogram file I/O."""
from __future__ import annotations

import os
from typing import Literal

import numpy as np
from matplotlib import image as mpimg
from scipy.io import wavfile

from .analysis import DB_FLOOR, SpectrogramGrid
from .errors import DataError, InvalidArgumentError, WavFormatError

WavFormat = Literal["pcm16", "float32"]
NORMALIZED_PEAK = 0.9


def load_wav(path: str | os.PathLike) -> tuple[np.ndarray, int]:
    """Read a PCM16 or float32 WAV as float samples in [-1, 1], downmixed to mono."""
    try:
        rate, data = wavfile.read(path)
    except ValueError as exc:
        raise WavFormatError(f"{path}: {exc}") from exc
    if data.dtype == np.int16:
        samples = data.astype(np.float64) / 32768.0
    elif data.dtype == np.float32:
        samples = data.astype(np.float64)
    else:
        raise WavFormatError(f"{path}: unsupported sample type {data.dtype}")
    if samples.ndim == 2:
        samples = samples.mean(axis=1)
    return samples, int(rate)


def prepare_samples(x, normalize: bool = True) -> np.ndarray:
    x = np.asarray(x)
    if np.iscomplexobj(x):
        raise InvalidArgumentError("WAV output must be real; project the signal first")
    x = x.astype(np.float64)
    if not np.all(np.isfinite(x)):
        raise DataError("signal contains NaN or Inf; refusing to write it")
    peak = float(np.max(np.abs(x))) if x.size else 0.0
    if normalize and peak > 1.0:
        x = x * (NORMALIZED_PEAK / peak)
    return x


def save_wav(
    x,
    sample_rate: int,
    path: str | os.PathLike,
    fmt: WavFormat = "pcm16",
    normalize: bool = True,
) -> None:
    """Write mono ``x``. With ``normalize``, a peak above 1 is rescaled to 0.9."""
    x = prepare_samples(x, normalize)
    if fmt == "pcm16":
        data = np.clip(np.round(x * 32768.0), -32768, 32767).astype(np.int16)
    elif fmt == "float32":
        data = x.astype(np.float32)
    else:
        raise InvalidArgumentError(f"unknown WAV format {fmt!r}")
    wavfile.write(path, int(sample_rate), data)


def write_spectrogram_csv(grid: SpectrogramGrid, path: str | os.PathLike) -> None:
    """One row per frame: center time, then dB magnitude per frequency bin."""
    db = grid.to_db()
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("time_s," + ",".join(f"{f:.6g}" for f in grid.freq_axis) + "\n")
        for t, column in zip(grid.time_axis, db.T):
            fh.write(f"{t:.6g}," + ",".join(f"{v:.6g}" for v in column) + "\n")


def write_spectrogram_png(grid: SpectrogramGrid, path: str | os.PathLike) -> None:
    db = grid.to_db()
    top = max(float(db.max()), DB_FLOOR + 1.0)
    mpimg.imsave(path, db, cmap="viridis", origin="lower", vmin=DB_FLOOR, vmax=top)

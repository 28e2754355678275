"""Render configuration and the single-render driver shared by the CLI and presets."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields
from typing import Any

import numpy as np

from .analysis import stft_spectrogram
from .errors import UsageError
from .filtering import AlphaFilterSpec, CenterSchedule, alpha_filter
from .framing import PROJECTIONS, OrderSchedule, WindowSpec, process_signal
from .synthesis import DEFAULT_SAMPLE_RATE, SineSpec, sine
from .wavio import load_wav, save_wav, write_spectrogram_csv, write_spectrogram_png

METHODS = ("frft_raw", "alpha_synthesis", "alpha_filter")


@dataclass
class FilterParams:
    bandwidth_b: float = 1.0
    center: CenterSchedule = field(default_factory=CenterSchedule)
    order: float = 0.25


@dataclass
class RenderConfig:
    """Everything needed for one render; field names match the JSON config keys."""

    sine: SineSpec | None = None
    input_wav: str | None = None
    method: str = "alpha_synthesis"
    window: WindowSpec | None = None
    schedule: OrderSchedule = field(default_factory=OrderSchedule)
    filter: FilterParams = field(default_factory=FilterParams)
    projection: str = "real"
    impl: str = "fast"
    output_wav: str | None = None
    output_csv: str | None = None
    output_png: str | None = None
    normalize: bool = True
    sample_rate: int = DEFAULT_SAMPLE_RATE
    wav_format: str = "pcm16"
    spectrogram_window: int = 2048
    spectrogram_hop: int | None = None

    def validate(self) -> None:
        if (self.sine is None) == (self.input_wav is None):
            raise UsageError("exactly one source (sine or input_wav) is required")
        if self.method not in METHODS:
            raise UsageError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.projection not in PROJECTIONS:
            raise UsageError(f"projection must be one of {PROJECTIONS}")
        if self.impl not in ("fast", "direct"):
            raise UsageError("impl must be 'fast' or 'direct'")
        if self.wav_format not in ("pcm16", "float32"):
            raise UsageError("wav_format must be 'pcm16' or 'float32'")
        if self.method == "alpha_filter" and self.projection != "real":
            raise UsageError("alpha_filter always keeps the real part")
        if self.method != "frft_raw" and self.window is None:
            raise UsageError(f"method {self.method} needs a window")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RenderConfig:
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        kw = dict(data)
        rate = kw.get("sample_rate", DEFAULT_SAMPLE_RATE)
        try:
            if kw.get("sine") is not None:
                kw["sine"] = SineSpec(sample_rate=rate, **kw["sine"])
            if kw.get("window") is not None:
                kw["window"] = WindowSpec(**kw["window"])
            if "schedule" in kw:
                kw["schedule"] = OrderSchedule(**kw["schedule"])
            if "filter" in kw:
                spec = dict(kw["filter"])
                if "center" in spec:
                    spec["center"] = CenterSchedule(**spec["center"])
                kw["filter"] = FilterParams(**spec)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"invalid config: {exc}") from exc
        return cls(**kw)


def load_config(path: str | os.PathLike) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from exc


def source_signal(cfg: RenderConfig) -> tuple[np.ndarray, int]:
    if cfg.sine is not None:
        return sine(cfg.sine), cfg.sine.sample_rate
    return load_wav(cfg.input_wav)


def render_signal(cfg: RenderConfig, x: np.ndarray, sample_rate: int) -> np.ndarray:
    """Apply the configured method to ``x``; the result has ``x``'s length."""
    if cfg.method == "frft_raw":
        w = WindowSpec(x.size, x.size, "rectangular", "rectangular")
        return process_signal(x, w, cfg.schedule, cfg.projection, cfg.impl)
    if cfg.method == "alpha_synthesis":
        return process_signal(x, cfg.window, cfg.schedule, cfg.projection, cfg.impl)
    spec = AlphaFilterSpec(
        bandwidth_b=cfg.filter.bandwidth_b,
        center_schedule=cfg.filter.center,
        order=cfg.filter.order,
        window=cfg.window,
        sample_rate=sample_rate,
    )
    return alpha_filter(x, spec, cfg.impl)


def run_render(cfg: RenderConfig) -> np.ndarray:
    """Render and write whichever outputs are configured. Returns the signal."""
    cfg.validate()
    x, rate = source_signal(cfg)
    y = render_signal(cfg, x, rate)
    write_outputs(cfg, y, rate)
    return y


def write_outputs(cfg: RenderConfig, y: np.ndarray, rate: int) -> None:
    if cfg.output_wav:
        # complex renders are written as their real part
        save_wav(np.real(y), rate, cfg.output_wav, cfg.wav_format, cfg.normalize)
    if cfg.output_csv or cfg.output_png:
        grid = stft_spectrogram(
            y, min(cfg.spectrogram_window, y.size), cfg.spectrogram_hop, sample_rate=rate
        )
        if cfg.output_csv:
            write_spectrogram_csv(grid, cfg.output_csv)
        if cfg.output_png:
            write_spectrogram_png(grid, cfg.output_png)

"""Parameter grids of the published sound and figure examples.

Window sizes are exact sample counts at 44.1 kHz; the seconds quoted in the
examples are rounded versions of these powers of two (and of 22050/44100).
"""
from __future__ import annotations

import itertools
import json
import os
from pathlib import Path
from typing import Callable, Iterator

from .errors import UsageError
from .filtering import CenterSchedule
from .framing import OrderSchedule, WindowSpec
from .render import FilterParams, RenderConfig, run_render
from .synthesis import DEFAULT_SAMPLE_RATE, SineSpec

RATE = DEFAULT_SAMPLE_RATE
FULL_SIGNAL = 524288  # ~11.89 s, the longest window in the rotation figure

GROUP1_FREQS = (55.0, 220.0, 880.0)
GROUP1_WINDOWS = (22050, 44100)
GROUP1_ORDERS = (0.0, 0.01, 0.05, 0.1, 0.25, 0.5)
GROUP2_WINDOWS = (2048, 4096, 8192, 16384)
GROUP3_FREQS = (220.0, 3520.0)
GROUP3_WINDOWS = (8192, 16384)
GROUP3_ORDERS = (0.01, 0.05, 0.1, 0.25, 0.5)
FIGURE_TONE = 11025.0
FIGURE1_WINDOWS = (65536, 131072, 262144, 524288)
FIGURE1_ORDER = 0.3
FIGURE2_ORDERS = (0.3, 0.45)

PRESETS = ("group1", "group2", "group3", "figure1", "figure2")


def _tone(freq: float, n_samples: int) -> SineSpec:
    return SineSpec(frequency=freq, duration=n_samples / RATE, sample_rate=RATE)


def _window_params(n: int) -> dict:
    return {"window_samples": n, "window_seconds": n / RATE, "hop_samples": n // 2}


def _group1():
    for f, w, a in itertools.product(GROUP1_FREQS, GROUP1_WINDOWS, GROUP1_ORDERS):
        cfg = RenderConfig(
            sine=_tone(f, RATE),
            method="alpha_synthesis",
            window=WindowSpec(w),
            schedule=OrderSchedule.constant(a),
        )
        params = {"method": "alpha_synthesis", "frequency_hz": f, "order": a,
                  "projection": "real", "duration_samples": RATE, **_window_params(w)}
        yield f"group1_f{f:g}_w{w}_a{a:g}", cfg, params


def _group2():
    for f, w in itertools.product(GROUP1_FREQS, GROUP2_WINDOWS):
        cfg = RenderConfig(
            sine=_tone(f, RATE),
            method="alpha_synthesis",
            window=WindowSpec(w),
            schedule=OrderSchedule.ramp(0.0, 0.5),
        )
        params = {"method": "alpha_synthesis", "frequency_hz": f, "order_start": 0.0,
                  "order_end": 0.5, "projection": "real", "duration_samples": RATE,
                  **_window_params(w)}
        yield f"group2_f{f:g}_w{w}_ramp0-0.5", cfg, params


def _group3():
    for f, w, a in itertools.product(GROUP3_FREQS, GROUP3_WINDOWS, GROUP3_ORDERS):
        cfg = RenderConfig(
            sine=_tone(f, 2 * RATE),
            method="alpha_filter",
            window=WindowSpec(w),
            filter=FilterParams(1.0, CenterSchedule("exponential", 100.0, 10000.0), a),
        )
        params = {"method": "alpha_filter", "frequency_hz": f, "order": a,
                  "bandwidth_b": 1.0, "center_start_hz": 100.0, "center_end_hz": 10000.0,
                  "center_sweep": "exponential", "duration_samples": 2 * RATE,
                  **_window_params(w)}
        yield f"group3_f{f:g}_w{w}_a{a:g}", cfg, params


def _figure1():
    for w in FIGURE1_WINDOWS:
        cfg = RenderConfig(
            sine=_tone(FIGURE_TONE, FULL_SIGNAL),
            method="alpha_synthesis",
            window=WindowSpec(w),
            schedule=OrderSchedule.constant(FIGURE1_ORDER),
            spectrogram_hop=2048,
        )
        params = {"method": "alpha_synthesis", "frequency_hz": FIGURE_TONE,
                  "order": FIGURE1_ORDER, "projection": "real",
                  "duration_samples": FULL_SIGNAL, **_window_params(w)}
        yield f"figure1_w{w}", cfg, params


def _figure2():
    for a, proj in itertools.product(FIGURE2_ORDERS, ("complex_passthrough", "real")):
        cfg = RenderConfig(
            sine=_tone(FIGURE_TONE, FULL_SIGNAL),
            method="frft_raw",
            schedule=OrderSchedule.constant(a),
            projection=proj,
            spectrogram_hop=2048,
        )
        params = {"method": "frft_raw", "frequency_hz": FIGURE_TONE, "order": a,
                  "projection": proj, "duration_samples": FULL_SIGNAL,
                  **_window_params(FULL_SIGNAL),
                  "wav_content": "real part" if proj == "complex_passthrough" else "signal"}
        tag = "complex" if proj == "complex_passthrough" else "real"
        yield f"figure2_a{a:g}_{tag}", cfg, params


_GRIDS = {
    "group1": _group1,
    "group2": _group2,
    "group3": _group3,
    "figure1": _figure1,
    "figure2": _figure2,
}


def preset_jobs(name: str) -> Iterator[tuple[str, RenderConfig, dict]]:
    if name not in _GRIDS:
        raise UsageError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    return _GRIDS[name]()


def run_preset(
    name: str,
    out_dir: str | os.PathLike,
    log: Callable[[str], None] | None = None,
) -> dict:
    """Render every combination of preset ``name`` into ``out_dir/name``.

    Writes ``manifest.json`` last and returns its contents.
    """
    jobs = list(preset_jobs(name))
    target = Path(out_dir) / name
    target.mkdir(parents=True, exist_ok=True)
    renders = []
    for stem, cfg, params in jobs:
        cfg.output_wav = str(target / f"{stem}.wav")
        cfg.output_csv = str(target / f"{stem}.csv")
        cfg.output_png = str(target / f"{stem}.png")
        y = run_render(cfg)
        files = [Path(p).name for p in (cfg.output_wav, cfg.output_csv, cfg.output_png)]
        renders.append({"id": stem, "params": params, "sample_rate": RATE,
                        "n_samples": int(y.size), "files": files})
        if log:
            log(f"{name}: {stem}")
    manifest = {
        "preset": name,
        "renders": renders,
        "files": [f for r in renders for f in r["files"]],
    }
    with open(target / "manifest.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    return manifest

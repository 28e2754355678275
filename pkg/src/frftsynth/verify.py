"""Self-check suite: measured error vs tolerance for the transform's properties."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from . import analysis, core, signals
from .filtering import AlphaFilterSpec, CenterSchedule, alpha_filter, gaussian_cosine_ir
from .framing import WindowSpec, frame_signal, overlap_add

ORDERS = (0.1, 0.25, 0.5, 0.75, 1.3)
UNITARY_ORDERS = (0.1, 0.25, 0.5, 0.75, 1.0, 1.5)
INVERSE_ORDERS = (0.01, 0.25, 0.5, 1.0)


@dataclass
class Check:
    name: str
    measured: float
    tolerance: float
    at_least: bool = False  # True when the measurement must reach the tolerance

    @property
    def passed(self) -> bool:
        if not math.isfinite(self.measured):
            return False
        if self.at_least:
            return self.measured >= self.tolerance
        return self.measured < self.tolerance

    def line(self) -> str:
        op = ">=" if self.at_least else "<"
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: {self.measured:.3e} (need {op} {self.tolerance:g})"


def rel_err(y: np.ndarray, ref: np.ndarray) -> float:
    return float(np.linalg.norm(y - ref) / np.linalg.norm(ref))


def energy_dev(y: np.ndarray, x: np.ndarray) -> float:
    return abs(float(np.linalg.norm(y)) - float(np.linalg.norm(x))) / float(np.linalg.norm(x))


def _integer_checks(n: int) -> list[Check]:
    x = signals.gaussian_enveloped(n)
    k = np.arange(n)
    c = n // 2
    dft = np.exp(-2j * np.pi * np.outer(k - c, k - c) / n) / math.sqrt(n)
    refs = {
        0: x,
        1: dft @ x,
        -1: dft.conj() @ x,
        2: x[(2 * c - k) % n],
    }
    return [
        Check(f"integer order {a:+d} exact, N={n}", rel_err(core.frft(x, a), ref), 1e-12)
        for a, ref in refs.items()
    ]


def filter_equivalence(n_window: int = 1024, n_signal: int = 4096) -> float:
    """Relative gap between alpha_filter at order 1 and plain spectrum multiplication."""
    rate = 44100
    rng = np.random.default_rng(signals.DEFAULT_SEED)
    x = rng.standard_normal(n_signal)
    w = WindowSpec(n_window)
    spec = AlphaFilterSpec(1.0, CenterSchedule("constant", 1000.0), 1.0, w, rate)
    got = alpha_filter(x, spec)

    c = n_window // 2
    m = np.arange(n_window)
    # centered unitary DFT through an uncentered FFT and explicit phase ramps
    ramp = np.exp(2j * np.pi * c * (m - c) / n_window)
    pick = (m - c) % n_window

    def dft(v):
        return ramp * np.fft.fft(v)[pick] / math.sqrt(n_window)

    def idft(v):
        spread = np.empty(n_window, dtype=complex)
        spread[pick] = v * np.conj(ramp)
        return np.fft.ifft(spread) * math.sqrt(n_window)

    h = dft(gaussian_cosine_ir(1.0, 1000.0, n_window, rate))
    frames = [idft(dft(f) * h).real for f in frame_signal(x, w)]
    return rel_err(got, overlap_add(frames, w, x.size))


def run_checks(level: Literal["quick", "full"] = "quick") -> list[Check]:
    full = level == "full"
    sizes = (64, 256, 1024) if full else (64, 256)
    checks: list[Check] = []

    for n in ((64, 1024) if full else (64,)):
        checks += _integer_checks(n)

    for n in sizes:
        x = signals.gaussian_enveloped(n)
        for a in ORDERS:
            checks.append(Check(
                f"fast vs direct, N={n}, a={a}",
                rel_err(core.frft_fast(x, a), core.frft_direct(x, a)), 1e-2))

    for n in sizes:
        x = signals.gaussian_enveloped(n)
        worst_fast = max(energy_dev(core.frft(x, a, "fast"), x) for a in UNITARY_ORDERS)
        checks.append(Check(f"unitarity fast, N={n}", worst_fast, 1e-3))
        if n <= 512:
            worst = max(energy_dev(core.frft(x, a, "direct"), x) for a in UNITARY_ORDERS)
            checks.append(Check(f"unitarity direct, N={n}", worst, 1e-4))

    n_add = 1024 if full else 256
    x = signals.gaussian_enveloped(n_add)
    checks.append(Check(
        f"index additivity 0.3+0.2, N={n_add}",
        rel_err(core.frft(core.frft(x, 0.3), 0.2), core.frft(x, 0.5)), 2e-2))

    for n in sizes:
        x = signals.gaussian_enveloped(n)
        worst = max(rel_err(core.frft_inverse(core.frft(x, a), a), x) for a in INVERSE_ORDERS)
        checks.append(Check(f"inverse round trip fast, N={n}", worst, 1e-2))
        if n <= 512:
            worst = max(
                rel_err(core.frft_inverse(core.frft(x, a, "direct"), a, "direct"), x)
                for a in INVERSE_ORDERS
            )
            checks.append(Check(f"inverse round trip direct, N={n}", worst, 1e-4))

    g = signals.gaussian(256)
    for impl in ("fast", "direct"):
        worst = max(rel_err(core.frft(g, a, impl), g) for a in ORDERS + UNITARY_ORDERS)
        checks.append(Check(f"gaussian eigenfunction ({impl}), N=256", worst, 1e-2))

    n_rot = 128 if full else 64
    tone = signals.enveloped_tone(n_rot, 0.1)
    checks.append(Check(f"rotation at a=0, N={n_rot}", analysis.rotation_check(tone, 0.0), 1.0, True))
    for a in ((0.25, 0.5) if full else (0.5,)):
        checks.append(Check(
            f"wigner rotation a={a}, N={n_rot}", analysis.rotation_check(tone, a), 0.95, True))

    if full:
        x = signals.gaussian_enveloped(256)
        wg = analysis.wigner(x)
        energy = float(np.sum(np.abs(x) ** 2)) / math.sqrt(x.size)
        checks.append(Check(
            "wigner marginal, N=256", abs(wg.values.sum() * wg.cell_area - energy) / energy, 5e-2))

    checks.append(Check("alpha filter at a=1 vs spectrum multiply", filter_equivalence(), 1e-6))
    return checks


def verify(level: Literal["quick", "full"] = "quick", out: Callable[[str], None] = print) -> bool:
    """Run the suite, print one line per check, return True iff all pass."""
    start = time.perf_counter()
    checks = run_checks(level)
    for check in checks:
        out(check.line())
    failed = sum(not c.passed for c in checks)
    out(f"{len(checks) - failed}/{len(checks)} checks passed in {time.perf_counter() - start:.1f} s")
    return failed == 0

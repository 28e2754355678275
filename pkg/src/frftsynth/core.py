"""Discrete fractional Fourier transform.

Signals live on a centered, dimensionless grid: sample ``k`` of a length-N
buffer sits at ``u_k = (k - N // 2) / sqrt(N)``, so the quadrature weight is
``1 / sqrt(N)`` and the order-1 transform is exactly the centered unitary DFT.

Two implementations of the fractional orders are provided:

* :func:`frft_direct` evaluates the integral kernel by quadrature, O(N^2).
  It is slow and serves as the reference.
* :func:`frft_fast` is the chirp-multiply / chirp-convolve / chirp-multiply
  decomposition on a 2x oversampled grid, O(N log N).

:func:`frft` dispatches between them and routes integer orders to exact
permutation / DFT paths.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np
from scipy.signal import fftconvolve

from .errors import InvalidArgumentError, SingularMatrixError, SingularOrderError

EPS_ORDER = 1e-6
MIN_FAST_LENGTH = 8

# upper bound on kernel entries materialised at once by the quadrature
_QUADRATURE_BLOCK = 1 << 21

Impl = Literal["fast", "direct"]


@dataclass(frozen=True)
class FrftOrder:
    """Transform order ``raw`` with its representative in (-2, 2] and angle."""

    raw: float
    reduced: float
    angle: float

    @property
    def nearest_integer(self) -> int | None:
        """Integer in {-1, 0, 1, 2} within ``EPS_ORDER`` of ``reduced``, else None."""
        n = round(self.reduced)
        if abs(self.reduced - n) <= EPS_ORDER:
            return 2 if n == -2 else int(n)
        return None

    def __neg__(self) -> FrftOrder:
        return reduce_order(-self.raw)


OrderLike = Union[float, FrftOrder]


def reduce_order(raw: float) -> FrftOrder:
    """Reduce ``raw`` modulo 4 into (-2, 2].

    >>> reduce_order(-2.0).reduced
    2.0
    """
    raw = float(raw)
    if not math.isfinite(raw):
        raise InvalidArgumentError(f"order must be finite, got {raw!r}")
    reduced = raw - 4.0 * math.ceil((raw - 2.0) / 4.0)
    # guard against rounding pushing the representative onto -2
    if reduced <= -2.0:
        reduced += 4.0
    return FrftOrder(raw=raw, reduced=reduced, angle=reduced * math.pi / 2)


def as_order(order: OrderLike) -> FrftOrder:
    if isinstance(order, FrftOrder):
        return order
    return reduce_order(order)


def as_buffer(x) -> np.ndarray:
    """Validate ``x`` as a non-empty, finite, 1-D complex buffer."""
    buf = np.asarray(x)
    if buf.ndim != 1:
        raise InvalidArgumentError(f"expected a 1-D signal, got shape {buf.shape}")
    if buf.size == 0:
        raise InvalidArgumentError("signal is empty")
    buf = buf.astype(np.complex128, copy=False)
    if not np.all(np.isfinite(buf)):
        raise InvalidArgumentError("signal contains NaN or Inf")
    return buf


def grid(n: int) -> np.ndarray:
    """Dimensionless coordinates ``u_k`` of a length-``n`` buffer."""
    return (np.arange(n) - n // 2) / math.sqrt(n)


def centered_dft(x) -> np.ndarray:
    """Unitary DFT with both index axes centered on ``N // 2``."""
    x = as_buffer(x)
    return np.fft.fftshift(np.fft.fft(np.fft.ifftshift(x), norm="ortho"))


def centered_idft(x) -> np.ndarray:
    x = as_buffer(x)
    return np.fft.fftshift(np.fft.ifft(np.fft.ifftshift(x), norm="ortho"))


def centered_reversal(x) -> np.ndarray:
    """Map ``k -> (2 * (N // 2) - k) mod N``, i.e. ``u -> -u`` on the grid."""
    x = as_buffer(x)
    n = x.size
    return x[(2 * (n // 2) - np.arange(n)) % n]


def _integer_power(x: np.ndarray, n: int) -> np.ndarray:
    if n == 0:
        return x.copy()
    if n == 1:
        return centered_dft(x)
    if n == -1:
        return centered_idft(x)
    return centered_reversal(x)


def interpolate(x: np.ndarray, factor: int) -> np.ndarray:
    """Band-limited interpolation onto a grid ``factor`` times finer.

    Sample ``j`` of the result sits at ``(j / factor - N // 2) / sqrt(N)``, so
    every ``factor``-th sample reproduces ``x``. The Nyquist bin of an even
    length is split evenly between +/- N/2 to keep real signals real.
    """
    n = x.size
    if factor == 1:
        return x.copy()
    c = n // 2
    m = factor * n
    spectrum = centered_dft(x)
    padded = np.zeros(m, dtype=np.complex128)
    padded[(np.arange(n) - c) % m] = spectrum
    if n % 2 == 0:
        padded[(-c) % m] = spectrum[0] / 2
        padded[c] += spectrum[0] / 2
    z = np.fft.ifft(padded) * m
    return z[(np.arange(m) - factor * c) % m] / math.sqrt(n)


@dataclass(frozen=True)
class SymmetricLctMatrix:
    """Symmetric LCT parameter matrix ``[[diag, -offdiag], [-offdiag, diag]]``."""

    diag: float
    offdiag: float

    def __post_init__(self):
        if not (math.isfinite(self.diag) and math.isfinite(self.offdiag)):
            raise InvalidArgumentError("LCT matrix entries must be finite")
        if self.offdiag == 0:
            raise SingularMatrixError("offdiag must be non-zero")

    @classmethod
    def from_order(cls, order: OrderLike) -> SymmetricLctMatrix:
        """The matrix ``(cot phi, csc phi)`` whose LCT is the FrFT of ``order``."""
        phi = as_order(order).angle
        s = math.sin(phi)
        return cls(diag=math.cos(phi) / s, offdiag=1.0 / s)

    @property
    def constant(self) -> complex:
        """Kernel constant with ``|C| = sqrt(|offdiag|)``.

        The phase is ``-(pi sgn(b) / 4 - theta / 2)`` where ``theta`` is the
        rotation angle recovered from ``(diag, offdiag)``; for the FrFT matrix
        this is the usual ``sqrt(1 - i cot phi)``.
        """
        b = self.offdiag
        theta = math.atan2(1.0 / b, self.diag / b)
        phase = -(math.pi * math.copysign(1.0, b) / 4 - theta / 2)
        return math.sqrt(abs(b)) * complex(math.cos(phase), math.sin(phase))

    def oversampling(self) -> int:
        # integrand frequency is bounded by sqrt(N)/2 * (1 + |diag| + |offdiag|)
        return int((1.0 + abs(self.diag) + abs(self.offdiag)) // 2) + 1


def lct_direct(x, m: SymmetricLctMatrix, oversample: int | None = None) -> np.ndarray:
    """Symmetric LCT by direct quadrature of its kernel.

    ``y[j] = C * h * sum_t exp(i pi (a u_j^2 - 2 b u_j t + a t^2)) x(t)``

    The input is band-limited-interpolated onto a grid ``oversample`` times
    finer before summation (``h = 1 / (oversample * sqrt(N))``); the default
    factor keeps the chirped integrand below the fine grid's Nyquist rate for
    any signal confined to the centered time-frequency disk. ``oversample=1``
    is the plain Riemann sum on the signal's own grid.
    """
    x = as_buffer(x)
    if not isinstance(m, SymmetricLctMatrix):
        raise InvalidArgumentError("m must be a SymmetricLctMatrix")
    n = x.size
    factor = m.oversampling() if oversample is None else int(oversample)
    if factor < 1:
        raise InvalidArgumentError("oversample must be >= 1")

    a, b = m.diag, m.offdiag
    fine = interpolate(x, factor)
    t = (np.arange(factor * n) / factor - n // 2) / math.sqrt(n)
    u = grid(n)
    t_phase = a * t * t
    weighted = fine * np.exp(1j * np.pi * t_phase)

    y = np.empty(n, dtype=np.complex128)
    rows = max(1, _QUADRATURE_BLOCK // fine.size)
    for start in range(0, n, rows):
        um = u[start:start + rows, None]
        y[start:start + rows] = np.exp(-2j * np.pi * b * um * t[None, :]) @ weighted
    y *= np.exp(1j * np.pi * a * u * u)
    return m.constant * y / (factor * math.sqrt(n))


def frft_direct(x, order: OrderLike, oversample: int | None = None) -> np.ndarray:
    """Fractional Fourier transform by quadrature of the integral kernel.

    Parameters
    ----------
    x : array_like
        Input samples on the centered grid.
    order : float or FrftOrder
        Transform order; must not be within ``EPS_ORDER`` of an even integer.
    oversample : int, optional
        Quadrature refinement factor, see :func:`lct_direct`.

    Returns
    -------
    numpy.ndarray
        Complex transform of the same length as ``x``.
    """
    order = as_order(order)
    if abs(math.sin(order.angle)) <= EPS_ORDER:
        raise SingularOrderError(
            f"order {order.raw} is an even integer; use frft() for the exact path"
        )
    return lct_direct(x, SymmetricLctMatrix.from_order(order), oversample)


def _chirp(coords: np.ndarray, rate: float) -> np.ndarray:
    return np.exp(1j * np.pi * rate * coords * coords)


def _fast_core(x: np.ndarray, angle: float) -> np.ndarray:
    # valid for 0.5 <= |order| <= 1.5, where csc and tan(angle/2) stay bounded
    n = x.size
    c = n // 2
    step = 0.5 / math.sqrt(n)
    v = (np.arange(2 * n) - 2 * c) * step
    lens = _chirp(v, -math.tan(angle / 2))
    lags = np.arange(-(2 * n - 1), 2 * n) * step
    kernel = _chirp(lags, 1.0 / math.sin(angle))

    spread = fftconvolve(interpolate(x, 2) * lens, kernel)[2 * n - 1:4 * n - 1]
    k_phi = np.exp(-1j * (math.pi * np.sign(angle) / 4 - angle / 2)) / math.sqrt(
        abs(math.sin(angle))
    )
    y = k_phi * step * lens * spread
    return y[::2]


def frft_fast(x, order: OrderLike) -> np.ndarray:
    """Fractional Fourier transform in O(N log N).

    Integer orders are exact. Otherwise exact quarter turns are peeled off
    (``F_a = F_{a-s} o F_s`` with ``s = +/-1``) until the residual order lies
    in [0.5, 1.5] in magnitude, and the residual is computed on a 2x
    band-limited oversampled grid as chirp multiplication, linear chirp
    convolution and a second chirp multiplication, then decimated.
    """
    x = as_buffer(x)
    if x.size < MIN_FAST_LENGTH:
        raise InvalidArgumentError(
            f"frft_fast needs at least {MIN_FAST_LENGTH} samples, got {x.size}"
        )
    order = as_order(order)
    exact = order.nearest_integer
    if exact is not None:
        return _integer_power(x, exact)

    a = order.reduced
    if 0 < a < 0.5:
        x, a = centered_idft(x), a + 1
    elif -0.5 < a < 0:
        x, a = centered_dft(x), a - 1
    elif a > 1.5:
        x, a = centered_dft(x), a - 1
    elif a < -1.5:
        x, a = centered_idft(x), a + 1
    return _fast_core(x, a * math.pi / 2)


def frft(x, order: OrderLike, impl: Impl = "fast") -> np.ndarray:
    """Fractional Fourier transform of order ``order``.

    Orders within ``EPS_ORDER`` of an integer take the exact path (identity,
    centered DFT/IDFT, centered reversal) whatever ``impl`` says.
    """
    x = as_buffer(x)
    order = as_order(order)
    exact = order.nearest_integer
    if exact is not None:
        return _integer_power(x, exact)
    if impl == "fast":
        return frft_fast(x, order)
    if impl == "direct":
        return frft_direct(x, order)
    raise InvalidArgumentError(f"unknown implementation {impl!r}")


def frft_inverse(y, order: OrderLike, impl: Impl = "fast") -> np.ndarray:
    return frft(y, -as_order(order), impl)

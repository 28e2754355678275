"""Fractional Fourier transform tools for sound synthesis and filtering."""
from .core import (
    FrftOrder,
    SymmetricLctMatrix,
    centered_dft,
    centered_idft,
    frft,
    frft_direct,
    frft_fast,
    frft_inverse,
    lct_direct,
    reduce_order,
)
from .filtering import AlphaFilterSpec, CenterSchedule, alpha_filter
from .framing import OrderSchedule, WindowSpec, overlap_add, process_signal
from .synthesis import SineSpec, alpha_synthesize, sine

__all__ = [
    "AlphaFilterSpec",
    "CenterSchedule",
    "FrftOrder",
    "OrderSchedule",
    "SineSpec",
    "SymmetricLctMatrix",
    "WindowSpec",
    "alpha_filter",
    "alpha_synthesize",
    "centered_dft",
    "centered_idft",
    "frft",
    "frft_direct",
    "frft_fast",
    "frft_inverse",
    "lct_direct",
    "overlap_add",
    "process_signal",
    "reduce_order",
    "sine",
]

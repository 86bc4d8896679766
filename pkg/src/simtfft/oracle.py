"""Independent reference implementations used to check generated FFT programs.

The DFT here is the deliberately naive O(N^2) definition, evaluated in double
precision. It shares no code or structure with the fast kernels it validates.
"""

from __future__ import annotations

import numpy as np

# Above this size the full N x N coefficient matrix is not materialised;
# the transform is evaluated in row chunks instead.
_CHUNK_ROWS = 256


def dft_reference(x: np.ndarray) -> np.ndarray:
    """Naive forward DFT: X[k] = sum_n x[n] * exp(-2j*pi*n*k/N).

    `x` is a 1-D complex vector; computation is complex128 throughout.
    """
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim != 1 or x.size < 1:
        raise ValueError("input must be a 1-D vector with N >= 1")
    n = x.size
    # exp table of the N distinct roots; entry m is W^m with W = exp(-2j*pi/N)
    basis = np.exp(-2j * np.pi * np.arange(n) / n)
    out = np.empty(n, dtype=np.complex128)
    idx = np.arange(n, dtype=np.int64)
    for start in range(0, n, _CHUNK_ROWS):
        k = np.arange(start, min(start + _CHUNK_ROWS, n), dtype=np.int64)
        out[start : start + k.size] = (basis[(k[:, None] * idx[None, :]) % n] * x).sum(axis=1)
    return out


def digit_reverse(index: int, radix: int, digits: int) -> int:
    """Reverse the base-`radix` digits of `index` (`digits` positions wide)."""
    if index < 0 or index >= radix**digits:
        raise ValueError(f"index {index} out of range for {digits} base-{radix} digits")
    out = 0
    for _ in range(digits):
        index, d = divmod(index, radix)
        out = out * radix + d
    return out


def mixed_digit_reverse(index: int, radices: list[int]) -> int:
    """Digit reversal for a mixed-radix factorisation.

    `radices` lists the per-pass radices from first to last; the index is
    decomposed most-significant digit first in that order, then the digit
    sequence is reversed.
    """
    total = 1
    for r in radices:
        total *= r
    if index < 0 or index >= total:
        raise ValueError(f"index {index} out of range for radices {radices}")
    digits = []
    rem = index
    for r in reversed(radices):
        rem, d = divmod(rem, r)
        digits.append(d)
    # digits[0] is the last-pass digit; reversal makes it most significant
    out = 0
    for r, d in zip(reversed(radices), digits):
        out = out * r + d
    return out


def compare(a: np.ndarray, b: np.ndarray) -> dict[str, float]:
    """Error summary of `a` against reference `b`.

    Relative error is normalised by max|b|, which keeps the figure meaningful
    for spectra with large dynamic range.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    err = np.abs(a - b)
    scale = float(np.max(np.abs(b)))
    return {
        "max_abs_err": float(err.max()),
        "max_rel_err": float(err.max() / scale) if scale > 0 else float(err.max()),
        "rms_err": float(np.sqrt(np.mean(err**2))),
    }

"""Fourier pair between frequency distributions and dephasing factors.

Discrete realization of the continuum pair

    phi(t)   = int p(w) e^{+i w t} dw
    wp(w)    = (1/2pi) int phi(t) e^{-i w t} dt

on conjugate grids (dw = 2pi / (N dt)) via FFTs with fftshift bookkeeping, plus
the diagnostics that decide whether the recovered distribution is a legitimate
probability density: normalization, realness, negativity, and the Gram-matrix
positive-definiteness witness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dephasing import DephasingSeries, ohmic_series, symmetry_residual, time_grid
from .ensemble import SpectralEnsemble, _chunk_map


class SeriesSymmetryError(ValueError):
    """Inversion input violates conjugate symmetry."""


@dataclass(frozen=True)
class QuasiDistribution:
    """Real distribution on a uniform frequency grid plus legitimacy diagnostics.

    negativity = -int min(values, 0) dw; realness_residual is the largest
    imaginary part discarded during inversion.
    """

    omega: np.ndarray
    values: np.ndarray
    norm: float
    min_value: float
    negativity: float
    realness_residual: float

    @classmethod
    def from_samples(cls, omega, values, realness_residual: float = 0.0):
        omega = np.asarray(omega, dtype=float).copy()
        values = np.asarray(values, dtype=float).copy()
        if omega.ndim != 1 or omega.size < 2 or values.shape != omega.shape:
            raise ValueError("omega grid and values must be matching 1-d arrays")
        omega.setflags(write=False)
        values.setflags(write=False)
        return cls(
            omega=omega,
            values=values,
            norm=float(np.trapezoid(values, omega)),
            min_value=float(np.min(values)),
            negativity=float(-np.trapezoid(np.minimum(values, 0.0), omega)),
            realness_residual=float(realness_residual),
        )

    @property
    def domega(self) -> float:
        return float(self.omega[1] - self.omega[0])


@dataclass(frozen=True)
class BochnerReport:
    """Smallest eigenvalue of the Gram matrix [phi(t_j - t_k)] for one time set."""

    times: np.ndarray
    min_eigenvalue: float
    matrix_dim: int


def conjugate_frequency_grid(times: np.ndarray) -> np.ndarray:
    dt = float(times[1] - times[0])
    return 2.0 * np.pi * np.fft.fftshift(np.fft.fftfreq(times.size, d=dt))


def _as_omega_weights(dist):
    if isinstance(dist, QuasiDistribution):
        return dist.omega, dist.values
    if isinstance(dist, SpectralEnsemble):
        return dist.omega, dist.weights
    omega, weights = dist
    return np.asarray(omega, dtype=float), np.asarray(weights, dtype=float)


def forward_ft(dist, grid: np.ndarray,
               omega0: float = 0.0, model_tag: str = "ensemble") -> DephasingSeries:
    """Dephasing series phi(t) = int p(w) e^{i w t} dw of a real distribution.

    Uses the exact FFT pair when the input lives on the conjugate grid of
    ``grid``, direct summation otherwise.  The result is normalized by its
    t = 0 sample (the discrete mass of the input, required to be 1 within
    1e-6) so the series invariants hold for any legal input.
    """
    omega, weights = _as_omega_weights(dist)
    if np.iscomplexobj(weights):
        raise ValueError("weights must be real")
    grid = np.asarray(grid, dtype=float)
    n = grid.size
    dt = float(grid[1] - grid[0])
    domega = float(omega[1] - omega[0])

    conjugate = (
        omega.size == n
        and abs(domega * dt * n - 2.0 * np.pi) <= 1e-9 * 2.0 * np.pi
        and abs(omega[n // 2]) <= 1e-9 * max(abs(omega[-1]), 1.0)
    )
    if conjugate:
        values = domega * n * np.fft.fftshift(np.fft.ifft(np.fft.ifftshift(weights)))
    else:
        if omega.size * n > 1 << 28:
            raise ValueError(
                "grids too large for direct summation; use conjugate grids for the FFT path"
            )
        # trapezoid weights off the conjugate grid
        tw = np.full(omega.size, domega)
        tw[0] *= 0.5
        tw[-1] *= 0.5
        values = np.empty(n, dtype=complex)
        step = max(1, (1 << 22) // max(omega.size, 1))
        for lo in range(0, n, step):
            hi = min(lo + step, n)
            values[lo:hi] = np.exp(1j * np.outer(grid[lo:hi], omega)) @ (weights * tw)

    mass = float(np.real(values[n // 2]))
    if abs(mass - 1.0) > 1e-6:
        raise ValueError("input mass differs from 1 beyond tolerance")
    return DephasingSeries(grid, values / mass, omega0=omega0, model_tag=model_tag)


def inverse_ft(series: DephasingSeries) -> QuasiDistribution:
    """Recover the simulating (quasi-)distribution of a dephasing series.

    wp(w_k) = (dt/2pi) sum_n phi(t_n) e^{-i w_k t_n} on the conjugate grid
    dw = 2pi/(N dt); the imaginary residual is recorded, never silently lost.
    """
    if symmetry_residual(series.values) > 1e-8:
        raise SeriesSymmetryError("series not conjugate-symmetric")
    omega = conjugate_frequency_grid(series.times)
    spectrum = series.dt / (2.0 * np.pi) * np.fft.fftshift(
        np.fft.fft(np.fft.ifftshift(series.values))
    )
    return QuasiDistribution.from_samples(
        omega, spectrum.real, realness_residual=float(np.max(np.abs(spectrum.imag)))
    )


def roundtrip_error(dist) -> float:
    """L-infinity self-consistency of the transform pair on the input's grid."""
    omega, weights = _as_omega_weights(dist)
    n = omega.size
    domega = float(omega[1] - omega[0])
    dt = 2.0 * np.pi / (n * domega)
    grid = (np.arange(n) - n // 2) * dt
    series = forward_ft((omega, weights), grid)
    back = inverse_ft(series)
    return float(np.max(np.abs(back.values - weights)))


def bochner_witness(series: DephasingSeries, times) -> BochnerReport:
    """Assemble the Hermitian Gram matrix phi(t_j - t_k) and report its floor.

    For a positive-definite dephasing factor the smallest eigenvalue is
    nonnegative; a clearly negative value certifies that no probability
    distribution generates the series.
    """
    times = np.asarray(times, dtype=float)
    diffs = np.subtract.outer(times, times)
    m = series.value_at(diffs.ravel()).reshape(diffs.shape)
    m = 0.5 * (m + m.conj().T)
    return BochnerReport(
        times=times,
        min_eigenvalue=float(np.linalg.eigvalsh(m)[0]),
        matrix_dim=times.size,
    )


def bochner_search(series: DephasingSeries, restarts: int, seed: int,
                   window: float | None = None, max_size: int = 8,
                   stop_below: float | None = None):
    """Randomized search for a Gram matrix with a negative floor.

    Time sets of size 2..max_size are drawn uniformly from the grid points in
    [0, window] (default window: a quarter of the series span).  Returns
    (best report, restarts used).
    """
    if window is None:
        window = 0.25 * series.t_max
    dt = series.dt
    k_hi = int(window / dt)
    n0 = series.n // 2
    rng = np.random.default_rng(seed)
    best = None
    used = 0
    for _ in range(restarts):
        used += 1
        size = int(rng.integers(2, max_size + 1))
        times = series.times[n0 + rng.integers(0, k_hi + 1, size)]
        rep = bochner_witness(series, times)
        if best is None or rep.min_eigenvalue < best.min_eigenvalue:
            best = rep
        if stop_below is not None and best.min_eigenvalue < stop_below:
            break
    return best, used


def negativity_landscape(omega_c: float, phases, omega_window, grid: np.ndarray | None = None):
    """Negative part of the recovered extended-model distribution over (w, phase).

    For each phase, builds the closed-form Ohmic extended series, inverts it,
    and keeps min(wp, 0) on the requested frequency window.  Returns
    (omega, phases, matrix) with matrix shape (len(omega), len(phases)).
    """
    phases = np.asarray(phases, dtype=float)
    if grid is None:
        grid = time_grid(200.0 / omega_c, 1 << 16)
    lo, hi = float(omega_window[0]), float(omega_window[1])
    omega_full = conjugate_frequency_grid(grid)
    mask = (omega_full >= lo) & (omega_full <= hi)
    omega = omega_full[mask]

    def column(phase):
        dist = inverse_ft(ohmic_series(omega_c, grid, phase=phase))
        return np.minimum(dist.values[mask], 0.0)

    cols = _chunk_map(column, list(phases))
    return omega, phases, np.column_stack(cols)

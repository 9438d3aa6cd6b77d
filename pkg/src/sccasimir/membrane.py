"""Tensioned-membrane mechanics: resonance frequency, frequency-shift /
pressure-gradient conversion, electrostatic response, static deflection,
thermal expansion, and the frequency-noise floor.

The effective stiffness produced by a separation-dependent external
pressure carries pressure-gradient units (Pa/m); it is never stored as a
N/m spring constant.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.integrate import quad

from .errors import FitError, ParseError
from .physcore import CONSTANTS, MembraneSpec

__all__ = [
    "SweepRecord",
    "load_sweep_csv",
    "fundamental_frequency",
    "dw2_from_gradient",
    "gradient_from_dw2",
    "predicted_frequency_jump",
    "electrostatic_dw2",
    "LcpdResult",
    "lcpd_fit",
    "static_deflection",
    "patch_pressure",
    "cte_alpha",
    "thermal_stress",
    "frequency_noise",
]


@dataclass(frozen=True)
class SweepRecord:
    """One (temperature, resonance frequency) measurement point."""

    T: float                    # K
    f: float                    # Hz
    sigma_f: float | None = None  # Hz
    Q: float | None = None

    def __post_init__(self):
        if self.T <= 0.0:
            raise ValueError(f"T must be > 0, got {self.T}")
        if self.f <= 0.0:
            raise ValueError(f"f must be > 0, got {self.f}")
        if self.sigma_f is not None and self.sigma_f < 0.0:
            raise ValueError(f"sigma_f must be >= 0, got {self.sigma_f}")


_SWEEP_HEADERS = (
    ["T_K", "f_Hz"],
    ["T_K", "f_Hz", "sigma_f_Hz"],
    ["T_K", "f_Hz", "sigma_f_Hz", "Q"],
)


def load_sweep_csv(path) -> list[SweepRecord]:
    """Read sweep records from CSV with header ``T_K,f_Hz[,sigma_f_Hz][,Q]``."""
    path = Path(path)
    records: list[SweepRecord] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path.name} is empty", line=1) from None
        header = [h.strip() for h in header]
        if header not in [list(h) for h in _SWEEP_HEADERS]:
            raise ParseError(
                f"unrecognized header {header!r}; expected one of "
                f"{['/'.join(h) for h in _SWEEP_HEADERS]}", line=1)
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"expected {len(header)} fields, got {len(row)}", line=lineno)
            try:
                values = [float(cell) for cell in row]
            except ValueError:
                raise ParseError(f"non-numeric field in {row!r}", line=lineno) from None
            kwargs = dict(zip(("T", "f", "sigma_f", "Q"), values))
            try:
                records.append(SweepRecord(**kwargs))
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from None
    if not records:
        raise ParseError(f"{path.name} contains no data rows", line=2)
    return records


def fundamental_frequency(m: MembraneSpec, with_holes: bool = True) -> float:
    """Fundamental-mode frequency in Hz: ``(1/(sqrt(2) L)) sqrt(sigma/rho)``,
    scaled by ``sqrt(Y_ratio)`` for the perforated membrane."""
    f = math.sqrt(m.sigma / m.rho) / (math.sqrt(2.0) * m.L)
    if with_holes:
        f *= math.sqrt(m.Y_ratio)
    return f


def dw2_from_gradient(Pprime: float, m: MembraneSpec) -> float:
    """Angular-frequency-squared shift from an external pressure gradient:
    ``d(omega^2) = -P' / (rho h)``."""
    return -Pprime / m.areal_density


def gradient_from_dw2(dw2: float, m: MembraneSpec) -> float:
    """Exact inverse of :func:`dw2_from_gradient`."""
    return -dw2 * m.areal_density


def predicted_frequency_jump(Pprime_jump: float, m: MembraneSpec, f0: float) -> float:
    """Linear-frequency shift in Hz from a pressure-gradient change.

    ``df = d(omega^2) / (8 pi^2 f0)`` with the sign of the input preserved.
    """
    if f0 <= 0.0:
        raise ValueError(f"f0 must be > 0, got {f0}")
    return dw2_from_gradient(Pprime_jump, m) / (8.0 * math.pi ** 2 * f0)


def electrostatic_dw2(V_bg: float, V0: float, m: MembraneSpec) -> float:
    """Frequency-squared pull from a residual plate voltage:
    ``-(eps0 / rho h) (V_bg - V0)^2 / d^3``; always <= 0."""
    dv = V_bg - V0
    return -CONSTANTS.eps0 * dv * dv / (m.areal_density * m.d ** 3)


@dataclass(frozen=True)
class LcpdResult:
    """Parabola-fit output: compensation voltage, stress, and density, with
    linearized one-sigma uncertainties."""

    V0: float
    sigma: float
    rho: float
    V0_err: float
    sigma_err: float
    rho_err: float


def lcpd_fit(points, m: MembraneSpec, with_holes: bool = True) -> LcpdResult:
    """Recover (V0, stress, density) from a backgate-voltage sweep.

    Fits ``f^2`` against ``V_bg`` with a concave parabola (linear in the
    model, so no iteration bias): the apex abscissa gives the compensation
    voltage, the apex frequency the stress, and the curvature
    ``-eps0 / (4 pi^2 rho h d^3)`` the density.  The geometry fields
    (L, h, d, Y_ratio) of ``m`` are used; its sigma/rho are ignored.
    """
    pts = [(float(v), float(f)) for v, f in points]
    if len(pts) < 5:
        raise FitError(f"need at least 5 points, got {len(pts)}")
    v = np.array([p[0] for p in pts])
    f2 = np.array([p[1] ** 2 for p in pts])
    coeffs, cov = np.polyfit(v, f2, 2, cov=True)
    a, b, c = coeffs
    if a >= 0.0:
        raise FitError("convex fit: data do not show an electrostatic parabola",
                       last_iterate=tuple(coeffs))
    v0 = -b / (2.0 * a)
    if not (v.min() < v0 < v.max()):
        raise FitError(f"apex {v0:.4g} V outside the sampled voltage range",
                       last_iterate=tuple(coeffs))
    f2_apex = c - b * b / (4.0 * a)
    rho = -CONSTANTS.eps0 / (4.0 * math.pi ** 2 * a * m.h * m.d ** 3)
    y = m.Y_ratio if with_holes else 1.0
    sigma = 2.0 * m.L ** 2 * rho * f2_apex / y

    # linearized propagation through v0 = -b/2a, rho ~ 1/a, sigma ~ f2_apex/a
    da, db, dc = (math.sqrt(max(cov[i, i], 0.0)) for i in range(3))
    v0_err = abs(v0) * math.hypot(da / abs(a), db / abs(b)) if b != 0 else db / (2 * abs(a))
    rho_err = rho * da / abs(a)
    grad_f2 = math.hypot(dc, (b / (2 * a)) * db) + (b * b / (4 * a * a)) * da
    sigma_err = abs(sigma) * math.hypot(grad_f2 / f2_apex, da / abs(a))
    return LcpdResult(V0=v0, sigma=sigma, rho=rho,
                      V0_err=v0_err, sigma_err=sigma_err, rho_err=rho_err)


def static_deflection(pressure_law: tuple[float, float], m: MembraneSpec) -> float:
    """Center deflection in m under an attractive power-law pressure.

    ``pressure_law = (C, n)`` describes ``P(d) = C / d^n`` with C <= 0
    (attraction toward the backgate).  High-tension limit:
    ``z0 = C_hole P(d) L^2 / (4 C1 h sigma)``; negative toward the gate.
    """
    amplitude, exponent = pressure_law
    if amplitude > 0.0:
        raise ValueError("repulsive pressure law: amplitude must be <= 0")
    pressure = amplitude / m.d ** exponent
    return m.C_hole * pressure * m.L ** 2 / (4.0 * m.C1 * m.h * m.sigma)


def patch_pressure(V_rms: float, ell: float, d: float) -> float:
    """Quasi-static patch-potential pressure bound in Pa:
    ``0.9 eps0 V_rms^2 ell^2 / d^4``.  Used for budget checks only, never
    subtracted from signals."""
    if d <= 0.0:
        raise ValueError(f"d must be > 0, got {d}")
    return 0.9 * CONSTANTS.eps0 * V_rms ** 2 * ell ** 2 / d ** 4


def cte_alpha(T: float, A: float, B: float) -> float:
    """Cryogenic thermal-expansion coefficient ``A T + B T^3`` in 1/K."""
    if T < 0.0:
        raise ValueError(f"T must be >= 0, got {T}")
    return A * T + B * T ** 3


def thermal_stress(T1: float, T2: float, m: MembraneSpec,
                   alpha_sub=None) -> float:
    """Film stress accumulated between ``T1`` and ``T2`` in Pa.

    ``E/(1-nu) * integral of (alpha_film - alpha_sub)``; the substrate
    coefficient defaults to zero when unknown.
    """
    sub = alpha_sub if alpha_sub is not None else (lambda T: 0.0)

    def integrand(T: float) -> float:
        return cte_alpha(T, m.cte_A, m.cte_B) - sub(T)

    val, _ = quad(integrand, T1, T2, limit=200)
    return m.E / (1.0 - m.nu) * val


def frequency_noise(f0: float, Q: float, noise_to_signal: float, tau: float) -> float:
    """RMS frequency-noise floor in Hz of a phase-locked resonance readout:
    ``(f0 / 2Q) (N/S) sqrt(1 / (2 pi tau))``."""
    if f0 <= 0.0 or Q <= 0.0 or tau <= 0.0 or noise_to_signal < 0.0:
        raise ValueError("f0, Q, tau must be > 0 and noise_to_signal >= 0")
    return f0 / (2.0 * Q) * noise_to_signal * math.sqrt(1.0 / (2.0 * math.pi * tau))

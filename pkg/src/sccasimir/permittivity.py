"""Dielectric functions at imaginary frequency for normal and
superconducting films.

Three responses are supported, all evaluated at the imaginary frequency
``i*xi`` with ``xi`` an energy in eV:

* Drude:  ``eps = 1 + Omega**2 / (xi*(xi + gamma))``
* plasma: ``eps = 1 + Omega**2 / xi**2``
* BCS:    ``eps = 1 + (Omega**2/xi) * (1/(xi + gamma) + g(xi; T)/xi)``

``g(xi; T)`` is the dimensionless pairing correction to the Drude
response.  Its ``xi -> 0`` limit is the condensate spectral fraction
``w**2`` with ``w = superfluid_weight(T)``, so the permittivity develops
the plasma-like singularity ``1 + (w*Omega)**2 / xi**2`` below the
transition.  At ``T >= Tc`` the correction is gated off and BCS coincides
with Drude exactly.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .physcore import CONSTANTS, SuperconductorParams

__all__ = [
    "ModelKind",
    "DielectricModel",
    "drude",
    "plasma",
    "bcs",
    "bcs_gap",
    "condensate_fraction",
    "superfluid_weight",
    "effective_plasma_frequency",
    "bcs_g",
    "permittivity_iw",
]

_KB = CONSTANTS.kB_eV


class ModelKind(enum.Enum):
    DRUDE = "drude"
    PLASMA = "plasma"
    BCS = "bcs"


@dataclass(frozen=True)
class DielectricModel:
    """Tagged choice of optical response with its film parameters."""

    kind: ModelKind
    params: SuperconductorParams

    @property
    def gamma(self) -> float:
        return self.params.gamma


def drude(params: SuperconductorParams = SuperconductorParams()) -> DielectricModel:
    return DielectricModel(ModelKind.DRUDE, params)


def plasma(params: SuperconductorParams = SuperconductorParams()) -> DielectricModel:
    return DielectricModel(ModelKind.PLASMA, params)


def bcs(params: SuperconductorParams = SuperconductorParams()) -> DielectricModel:
    return DielectricModel(ModelKind.BCS, params)


def bcs_gap(T: float, p: SuperconductorParams) -> float:
    """Closed-form temperature-dependent pairing gap in eV.

    ``Delta(T) = c1 kB Tc sqrt(1 - T/Tc) (c2 + c3 T/Tc)``, zero at and
    above the transition.
    """
    if T < 0.0:
        raise ValueError(f"temperature must be >= 0, got {T} K")
    if T >= p.Tc:
        return 0.0
    t = T / p.Tc
    return p.c1 * _KB * p.Tc * math.sqrt(1.0 - t) * (p.c2 + p.c3 * t)


def condensate_fraction(T: float, p: SuperconductorParams) -> float:
    """Fraction of the free-carrier spectral weight sitting in the
    zero-frequency condensate response, in (0, 1).

    Evaluated from the closed-form expression

        pi/(2 eta) tanh(1/(4 eta t)) - (1/eta**2) *
            Int_0^inf dx tanh(E(x)/(2 t)) / (E(x) (4 x**2 + 1))

    with ``eta = gamma/(2 Delta)``, ``t = kB T / gamma`` and
    ``E(x) = sqrt(x**2 + 1/(4 eta**2))``.  This quantity is the
    ``xi -> 0`` limit of ``bcs_g`` (verified against brute-force
    quadrature of the pairing integrand in the tests).
    """
    if not (0.0 < T < p.Tc):
        raise ValueError(f"superconducting state requires 0 < T < Tc, got {T} K")
    delta = bcs_gap(T, p)
    gamma = p.gamma
    eta = gamma / (2.0 * delta)
    t_red = _KB * T / gamma
    first = math.pi / (2.0 * eta) * math.tanh(1.0 / (4.0 * eta * t_red))
    a = 1.0 / (2.0 * eta)
    two_t = 2.0 * t_red

    def integrand(x: float) -> float:
        e = math.hypot(x, a)
        return math.tanh(e / two_t) / (e * (4.0 * x * x + 1.0))

    split = 50.0 * max(a, 1.0)
    head, _ = quad(integrand, 0.0, split, points=[0.5, a],
                   limit=300, epsabs=0.0, epsrel=1e-12)
    tail, _ = quad(integrand, split, math.inf, limit=300,
                   epsabs=1e-16, epsrel=1e-12)
    return first - (head + tail) / (eta * eta)


def superfluid_weight(T: float, p: SuperconductorParams) -> float:
    """Normalized effective superfluid plasma frequency, in (0, 1).

    The effective low-frequency plasma energy of the superconducting film
    is ``superfluid_weight(T) * Omega``; its square is the condensate
    spectral fraction.
    """
    fraction = condensate_fraction(T, p)
    if fraction <= 0.0:
        # cancellation of two O(1/eta^2) terms this close to Tc exceeds
        # double precision; the weight is below ~1e-5 here anyway
        raise ArithmeticError(
            f"condensate fraction lost to rounding at T={T} K (Tc={p.Tc} K)")
    return math.sqrt(fraction)


def effective_plasma_frequency(T: float, p: SuperconductorParams) -> float:
    """Static effective plasma energy in eV: ``w(T)*Omega`` below the
    transition, 0 at and above it (closed gap carries no condensate)."""
    if T >= p.Tc:
        return 0.0
    return superfluid_weight(T, p) * p.Omega


def _g_integrand(eps: float, xi: float, delta: float, gamma: float,
                 kT: float) -> float:
    e_qp = math.hypot(eps, delta)
    # principal-branch sqrt keeps Re >= 0, which makes Re[G+] decay at
    # large eps and the integral converge
    qp = cmath.sqrt((e_qp + 1j * xi) ** 2 - delta * delta)
    ap = e_qp * (e_qp + 1j * xi) + delta * delta
    w = qp + 1j * gamma
    g_plus = (eps * eps * qp + w * ap) / (qp * (eps * eps - w * w))
    th = 1.0 if kT == 0.0 else math.tanh(min(e_qp / (2.0 * kT), 60.0))
    return th / e_qp * g_plus.real


_LOG_NODES, _LOG_WEIGHTS = np.polynomial.legendre.leggauss(64)


def _bcs_g_impl(xi: float, T: float, p: SuperconductorParams,
                rel_tol: float) -> float:
    delta = bcs_gap(T, p)
    if delta == 0.0:
        return 0.0
    gamma = p.gamma
    kT = _KB * T
    emax = max(200.0 * delta, 200.0 * xi, 50.0 * kT)
    # all integrand structure sits below ~30x the largest energy scale;
    # beyond that the 1/eps^3 tail is within rounding noise of Re[G+],
    # so the adaptive rule is restricted to the head
    e_head = min(emax, 30.0 * max(delta, xi, gamma, kT))
    # subdivision anchors: the quasiparticle edge and the narrow
    # sqrt(delta*xi) layer that carries the condensate weight at small xi
    pts = sorted({delta, xi, gamma, math.sqrt(delta * xi)})
    pts = [x for x in pts if 0.0 < x < e_head]
    with warnings.catch_warnings():
        # for xi >> delta the layer and the continuum cancel to near the
        # rounding floor of Re[G+]; quadpack then flags roundoff although
        # its estimate is already as good as double precision allows
        warnings.simplefilter("ignore", IntegrationWarning)
        head, _ = quad(_g_integrand, 0.0, e_head, args=(xi, delta, gamma, kT),
                       points=pts, limit=300, epsabs=0.0, epsrel=rel_tol)
    tail = 0.0
    if emax > e_head:
        # fixed-order log-spaced rule: exact enough for a smooth algebraic
        # tail and immune to the cancellation noise out there
        lo, hi = math.log(e_head), math.log(emax)
        u = 0.5 * (hi - lo) * (_LOG_NODES + 1.0) + lo
        eps = np.exp(u)
        vals = np.array([_g_integrand(e, xi, delta, gamma, kT) for e in eps])
        tail = 0.5 * (hi - lo) * float(np.dot(_LOG_WEIGHTS, vals * eps))
    return 2.0 * (head + tail)


@lru_cache(maxsize=200_000)
def _bcs_g_cached(xi: float, T: float, p: SuperconductorParams,
                  rel_tol: float) -> float:
    return _bcs_g_impl(xi, T, p, rel_tol)


def bcs_g(xi: float, T: float, p: SuperconductorParams,
          rel_tol: float = 1e-8) -> float:
    """Dimensionless pairing correction ``g(xi; T)`` to the Drude response.

    The epsilon integral is folded onto [0, inf) and doubled using the even
    symmetry of the integrand, then truncated at
    ``max(200 Delta, 200 xi, 50 kB T)``.  Returns 0 at and above the
    transition.

    Parameters
    ----------
    xi : float
        Imaginary-frequency energy in eV, > 0.  The zero-frequency
        behavior is handled by the static reflection coefficients of the
        Lifshitz module, not here.
    T : float
        Temperature in K, >= 0.
    """
    if xi <= 0.0:
        raise ValueError(f"bcs_g requires xi > 0, got {xi}")
    if T < 0.0:
        raise ValueError(f"temperature must be >= 0, got {T} K")
    return _bcs_g_cached(float(xi), float(T), p, float(rel_tol))


def permittivity_iw(model: DielectricModel, xi: float, T: float) -> float:
    """Dielectric function at imaginary frequency ``i*xi``; real and >= 1.

    ``T`` only matters for the BCS response.
    """
    if xi <= 0.0:
        raise ValueError(f"permittivity requires xi > 0, got {xi}")
    p = model.params
    if model.kind is ModelKind.PLASMA:
        return 1.0 + (p.Omega / xi) ** 2
    if model.kind is ModelKind.DRUDE:
        return 1.0 + p.Omega ** 2 / (xi * (xi + p.gamma))
    g = bcs_g(xi, T, p)
    if g == 0.0:
        # closed gap: reuse the Drude arithmetic so the coincidence at
        # T >= Tc is bit-exact, not merely within rounding
        return 1.0 + p.Omega ** 2 / (xi * (xi + p.gamma))
    return 1.0 + (p.Omega ** 2 / xi) * (1.0 / (xi + p.gamma) + g / xi)

"""Physical constants, unit conventions, and shared parameter records.

Unit conventions used everywhere in this package:

* spectral quantities (Matsubara energies, plasma/relaxation frequencies,
  superconducting gaps) are energies in eV,
* lengths are m, wavevectors 1/m, pressures Pa, forces N, temperatures K,
* the photon dispersion is evaluated as ``q = sqrt((xi/hbar_c)**2 + k**2)``
  with ``hbar_c`` in eV m, which keeps spectral magnitudes O(1) instead of
  rad/s.

Constants are stored in both eV-based and SI units so that pressure
formulas (emitted in Pa) never need repeated conversions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ParseError

__all__ = [
    "Constants",
    "CONSTANTS",
    "SuperconductorParams",
    "MembraneSpec",
    "ConversionFactors",
    "Basis",
    "matsubara_frequency",
    "small_gap_membrane",
    "big_gap_membrane",
    "read_config",
    "write_config",
]


@dataclass(frozen=True)
class Constants:
    """CODATA-pinned physical constants in the package unit conventions."""

    kB_eV: float = 8.617333262e-5        # Boltzmann constant, eV/K
    kB_J: float = 1.380649e-23           # Boltzmann constant, J/K
    hbar_eVs: float = 6.582119569e-16    # reduced Planck constant, eV s
    hbar_Js: float = 1.054571817e-34     # reduced Planck constant, J s
    c: float = 299792458.0               # speed of light, m/s
    eps0: float = 8.8541878128e-12       # vacuum permittivity, F/m
    zeta3: float = 1.2020569031595943    # Riemann zeta(3)
    hbar_c_eVm: float = 6.582119569e-16 * 299792458.0  # hbar*c, eV m


CONSTANTS = Constants()


def matsubara_frequency(l: int, T: float) -> float:
    """Thermal (Matsubara) energy ``2 pi l kB T`` in eV.

    Parameters
    ----------
    l : int
        Mode index, >= 0. ``l = 0`` returns exactly 0.
    T : float
        Temperature in K, > 0.
    """
    if l < 0:
        raise ValueError(f"Matsubara index must be >= 0, got {l}")
    if T <= 0.0:
        raise ValueError(f"temperature must be positive, got {T} K")
    return 2.0 * math.pi * l * CONSTANTS.kB_eV * T


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


@dataclass(frozen=True)
class SuperconductorParams:
    """Optical and gap parameters of the superconducting film.

    ``Omega`` and ``gamma0`` are energies in eV; the effective relaxation
    used at cryogenic temperature is ``gamma0 / RRR`` (no further
    temperature dependence). ``c1, c2, c3`` parameterize the closed-form
    gap law.

    The default relaxation is the dirty-film transport value 0.465 eV.
    (A film this dirty has a sub-nm mean free path, which is what makes
    the local pairing response applicable in the first place; the meV
    scale belongs to the quasiparticle tunneling broadening, a different
    quantity.)
    """

    Omega: float = 5.33
    gamma0: float = 0.465
    RRR: float = 1.0
    Tc: float = 14.2
    c1: float = 1.764
    c2: float = 0.9963
    c3: float = 0.7735

    def __post_init__(self):
        _require(self.Omega > 0, f"Omega must be > 0, got {self.Omega}")
        _require(self.gamma0 > 0, f"gamma0 must be > 0, got {self.gamma0}")
        _require(self.RRR >= 1.0, f"RRR must be >= 1, got {self.RRR}")
        _require(self.Tc > 0, f"Tc must be > 0, got {self.Tc}")

    @property
    def gamma(self) -> float:
        """Effective low-temperature relaxation energy in eV."""
        return self.gamma0 / self.RRR


@dataclass(frozen=True)
class MembraneSpec:
    """Geometry, mechanics, and correction constants of one membrane.

    ``Y_ratio`` is the frequency-squared ratio between the perforated and
    unperforated membrane, ``area_ratio`` the force reduction from the
    release holes, ``C1``/``C_hole`` the deflection constants, and
    ``cte_A``/``cte_B`` the coefficients of the cryogenic thermal-expansion
    law ``alpha(T) = A*T + B*T**3``.
    """

    L: float            # side length, m
    h: float            # membrane thickness, m
    d: float            # plate separation, m
    sigma: float        # tensile stress, Pa
    rho: float          # density, kg/m^3
    E: float = 375e9    # Young's modulus, Pa
    nu: float = 0.2949  # Poisson ratio
    C1: float = 3.45
    C_hole: float = 1.086
    Y_ratio: float = 0.923
    area_ratio: float = 0.945
    cte_A: float = 0.0  # 1/K^2
    cte_B: float = 0.0  # 1/K^4

    def __post_init__(self):
        for name in ("L", "h", "d", "sigma", "rho"):
            _require(getattr(self, name) > 0, f"{name} must be > 0")
        _require(0.0 < self.Y_ratio <= 1.0, "Y_ratio must be in (0, 1]")
        _require(0.0 < self.area_ratio <= 1.0, "area_ratio must be in (0, 1]")

    @property
    def areal_density(self) -> float:
        """Mass per unit area ``rho * h`` in kg/m^2."""
        return self.rho * self.h

    @property
    def area(self) -> float:
        """Plate area ``L**2`` in m^2."""
        return self.L * self.L


def small_gap_membrane() -> MembraneSpec:
    """Canonical 190 nm gap device."""
    return MembraneSpec(
        L=709e-6, h=155e-9, d=190e-9, sigma=677e6, rho=4992.0,
        cte_A=2.001e-10, cte_B=9.159e-13,
    )


def big_gap_membrane() -> MembraneSpec:
    """Canonical 1213 nm gap reference device."""
    return MembraneSpec(
        L=709e-6, h=155e-9, d=1213e-9, sigma=683e6, rho=5332.0,
        cte_A=4.289e-10, cte_B=3.181e-13,
    )


class Basis(enum.Enum):
    """Frequency-squared basis the FEM conversion factors apply to."""

    ANGULAR_SQUARED = "angular-squared"   # factors multiply d(omega^2), (rad/s)^2
    LINEAR_SQUARED = "linear-squared"     # factors multiply d(f^2), Hz^2


@dataclass(frozen=True)
class ConversionFactors:
    """Externally supplied FEM-derived linear maps from a frequency-squared
    shift to force / pressure / center-deflection changes.

    All three factors share one basis, which must be declared explicitly:
    there is no physically safe default because the two readings differ by
    ``(2 pi)**2``.
    """

    force_per_w2: float       # N per (basis unit)
    pressure_per_w2: float    # Pa per (basis unit)
    deflection_per_w2: float  # m per (basis unit)
    basis: Basis

    def __post_init__(self):
        if not isinstance(self.basis, Basis):
            raise ValueError("basis must be declared as a Basis member")


# --- flat key=value configuration files -------------------------------------
#
# Documented keys (units in the key name where ambiguous):
#   superconductor: Omega_eV, gamma0_eV, RRR, Tc_K, c1, c2, c3
#   membrane:       L_m, h_m, d_m, sigma_Pa, rho_kgm3, E_Pa, nu, C1, C_hole,
#                   Y_ratio, area_ratio, cte_A_perK2, cte_B_perK4
#   conversion:     force_per_w2_N, pressure_per_w2_Pa, deflection_per_w2_m,
#                   basis (= "angular-squared" | "linear-squared")

_SC_KEYS = {
    "Omega_eV": "Omega", "gamma0_eV": "gamma0", "RRR": "RRR", "Tc_K": "Tc",
    "c1": "c1", "c2": "c2", "c3": "c3",
}
_MEMBRANE_KEYS = {
    "L_m": "L", "h_m": "h", "d_m": "d", "sigma_Pa": "sigma",
    "rho_kgm3": "rho", "E_Pa": "E", "nu": "nu", "C1": "C1",
    "C_hole": "C_hole", "Y_ratio": "Y_ratio", "area_ratio": "area_ratio",
    "cte_A_perK2": "cte_A", "cte_B_perK4": "cte_B",
}
_FACTOR_KEYS = {
    "force_per_w2_N": "force_per_w2",
    "pressure_per_w2_Pa": "pressure_per_w2",
    "deflection_per_w2_m": "deflection_per_w2",
}


def read_config(path) -> dict:
    """Parse a flat ``key = value`` file; ``#`` starts a comment."""
    out: dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {raw!r}", line=lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or not value:
            raise ParseError(f"empty key or value in {raw!r}", line=lineno)
        out[key] = value
    return out


def _pick(config: dict, keymap: dict, kind: str) -> dict:
    picked = {}
    for file_key, field in keymap.items():
        if file_key in config:
            try:
                picked[field] = float(config[file_key])
            except ValueError as exc:
                raise ParseError(f"key {file_key!r} is not a number: "
                                 f"{config[file_key]!r}") from exc
    if not picked:
        raise ParseError(f"no {kind} keys found in configuration")
    return picked


def superconductor_from_config(config: dict) -> SuperconductorParams:
    return replace(SuperconductorParams(), **_pick(config, _SC_KEYS, "superconductor"))


def membrane_from_config(config: dict) -> MembraneSpec:
    picked = _pick(config, _MEMBRANE_KEYS, "membrane")
    for required in ("L", "h", "d", "sigma", "rho"):
        if required not in picked:
            raise ParseError(f"membrane configuration is missing {required}")
    return MembraneSpec(**picked)


def conversion_from_config(config: dict) -> ConversionFactors:
    picked = _pick(config, _FACTOR_KEYS, "conversion factor")
    if "basis" not in config:
        raise ParseError("conversion factors need an explicit 'basis' key")
    try:
        basis = Basis(config["basis"])
    except ValueError as exc:
        raise ParseError(f"unknown basis {config['basis']!r}; use one of "
                         f"{[b.value for b in Basis]}") from exc
    missing = set(_FACTOR_KEYS.values()) - set(picked)
    if missing:
        raise ParseError(f"conversion factors missing keys for {sorted(missing)}")
    return ConversionFactors(basis=basis, **picked)


def write_config(obj, path) -> None:
    """Serialize a parameter record to the flat file format.

    Floats are written with ``repr`` so a read-back reproduces the record
    bit-exactly.
    """
    if isinstance(obj, SuperconductorParams):
        keymap = _SC_KEYS
    elif isinstance(obj, MembraneSpec):
        keymap = _MEMBRANE_KEYS
    elif isinstance(obj, ConversionFactors):
        keymap = _FACTOR_KEYS
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    lines = [f"{file_key} = {getattr(obj, field)!r}"
             for file_key, field in keymap.items()]
    if isinstance(obj, ConversionFactors):
        lines.append(f"basis = {obj.basis.value}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

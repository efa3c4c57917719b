"""Atomic-unit conversions used at the I/O boundaries of the package.

All internal physics is done in Hartree atomic units; attoseconds and
W/cm^2 appear only when reading laser parameters or printing results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """Frozen conversion table (CODATA 2018). Single source of truth for
    every unit factor in the package."""

    au_time_in_attoseconds: float
    speed_of_light: float            # in au (inverse fine-structure constant)
    intensity_au_in_w_per_cm2: float
    hartree_in_ev: float
    bohr_radius_nm: float
    version: str = "codata2018"

    def __post_init__(self) -> None:
        for name in ("au_time_in_attoseconds", "speed_of_light",
                     "intensity_au_in_w_per_cm2", "hartree_in_ev",
                     "bohr_radius_nm"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"constant {name} must be finite and positive")
        if not 24.18 <= self.au_time_in_attoseconds <= 24.20:
            raise ValueError("au_time_in_attoseconds outside [24.18, 24.20]")
        if not 137.0 <= self.speed_of_light <= 137.1:
            raise ValueError("speed_of_light outside [137.0, 137.1] au")


CODATA2018 = PhysicalConstants(
    au_time_in_attoseconds=24.188843265857,       # hbar / E_h, in as
    speed_of_light=137.035999084,                 # 1 / alpha
    intensity_au_in_w_per_cm2=3.50944552059e16,   # eps0 c E_au^2 / 2
    hartree_in_ev=27.211386245988,
    bohr_radius_nm=0.0529177210903,
)

CONSTANTS = CODATA2018


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


def au_time_to_attoseconds(t: float) -> float:
    """Convert a time from atomic units to attoseconds."""
    return _require_finite("t", t) * CONSTANTS.au_time_in_attoseconds


def intensity_to_field(intensity_w_cm2: float) -> float:
    """Peak field strength in au for a laser intensity in W/cm^2."""
    intensity_w_cm2 = _require_finite("intensity", intensity_w_cm2)
    if intensity_w_cm2 < 0:
        raise ValueError(f"intensity must be >= 0, got {intensity_w_cm2!r}")
    return math.sqrt(intensity_w_cm2 / CONSTANTS.intensity_au_in_w_per_cm2)


def field_to_intensity(field_au: float) -> float:
    """Inverse of :func:`intensity_to_field`."""
    field_au = _require_finite("field", field_au)
    if field_au < 0:
        raise ValueError(f"field must be >= 0, got {field_au!r}")
    return field_au * field_au * CONSTANTS.intensity_au_in_w_per_cm2


def elliptical_peak_field(f0: float, ellipticity: float) -> float:
    """Field strength at maximum of an elliptically polarized pulse,
    F0 / sqrt(1 + eps^2)."""
    f0 = _require_finite("f0", f0)
    ellipticity = _require_finite("ellipticity", ellipticity)
    if f0 < 0:
        raise ValueError(f"f0 must be >= 0, got {f0!r}")
    if not 0.0 <= ellipticity <= 1.0:
        raise ValueError(f"ellipticity must be in [0, 1], got {ellipticity!r}")
    return f0 / math.sqrt(1.0 + ellipticity * ellipticity)


def wavelength_to_angular_frequency(wavelength_nm: float) -> float:
    """Angular frequency in au of light with the given vacuum wavelength."""
    wavelength_nm = _require_finite("wavelength", wavelength_nm)
    if wavelength_nm <= 0:
        raise ValueError(f"wavelength must be > 0, got {wavelength_nm!r}")
    return 2.0 * math.pi * CONSTANTS.speed_of_light * CONSTANTS.bohr_radius_nm / wavelength_nm

"""Tunneling-time estimators built on the time-energy uncertainty relation.

Every estimator is a closed form in the ionization potential and the barrier
discriminant delta_z. Below barrier suppression all times are real; above it
the barrier-crossing and approach times acquire conjugate imaginary parts
while their sum stays real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .atom import AtomModel, LaserField
from .barrier import BarrierGeometry, Regime, RegimeError


@dataclass(frozen=True)
class TunnelClocks:
    """All time estimators for one barrier geometry, in au.

    Real-only entries are None above barrier suppression, where
    ``complex_parts`` holds the (crossing, approach) pair instead.
    """

    tau_i: float | None        # time to reach the barrier entrance
    tau_d: float | None        # time spent under the barrier
    tau_sym: float             # total, tau_i + tau_d = ip / (4 z_eff F)
    tau_unsy: float | None     # single-sided estimate, 2 * tau_d
    tau_c: float               # first-order value at the classical exit, ip / (2F)
    tau_t: float | None        # tau_d plus the critical-field approach term
    tau_a: float               # ionization time at barrier suppression, 1 / ip
    de_plus: float | None      # energy uncertainty at the exit point
    de_minus: float | None     # energy uncertainty at the entrance point
    complex_parts: tuple[complex, complex] | None = None


def _require_real_regime(geom: BarrierGeometry, what: str) -> None:
    if geom.regime is Regime.SUPER_ATOMIC:
        raise RegimeError(
            f"{what} is complex above barrier suppression; use complex_times()")


def _gap_minus(geom: BarrierGeometry, atom: AtomModel) -> float:
    # ip - delta_z, rationalized to 4 z F / (ip + delta_z): immune to the
    # cancellation that otherwise dominates it for weak fields.
    if geom.delta_z == 0.0:
        return atom.ip
    return 4.0 * atom.z_eff * geom.f / (atom.ip + geom.delta_z)


def energy_uncertainty_at(x: float, atom: AtomModel) -> float:
    """Energy uncertainty read off the binding potential, z_eff / x."""
    if not x > 0:
        raise ValueError(f"x must be > 0, got {x!r}")
    return atom.z_eff / x


def tau_unsymmetric(geom: BarrierGeometry, atom: AtomModel) -> float:
    """Single-sided estimate 1 / (ip - delta_z), twice the barrier-crossing time."""
    _require_real_regime(geom, "tau_unsy")
    return 1.0 / _gap_minus(geom, atom)


def tau_classical_first_order(atom: AtomModel, field: LaserField) -> float:
    """First-order (weak-field) time at the classical exit point, ip / (2F).

    Kept verbatim as the leading term quoted for the classical exit; note
    the expansion of :func:`tau_unsymmetric` itself carries an extra
    effective-charge factor, ip / (2 z_eff F).
    """
    return atom.ip / (2.0 * field.f_peak)


def tau_delay(geom: BarrierGeometry, atom: AtomModel) -> float:
    """Time to cross the barrier region, 1 / (2 (ip - delta_z))."""
    _require_real_regime(geom, "tau_d")
    return 0.5 / _gap_minus(geom, atom)


def tau_initial(geom: BarrierGeometry, atom: AtomModel) -> float:
    """Time to reach the barrier entrance, 1 / (2 (ip + delta_z))."""
    _require_real_regime(geom, "tau_i")
    return 0.5 / (atom.ip + geom.delta_z)


def tau_symmetric(geom: BarrierGeometry, atom: AtomModel) -> float:
    """Total time ip / (4 z_eff F); real in every regime."""
    return atom.ip / (4.0 * atom.z_eff * geom.f)


def tau_total(geom: BarrierGeometry, atom: AtomModel) -> float:
    """Barrier-crossing time plus the critical-field approach term 1 / (2 ip)."""
    _require_real_regime(geom, "tau_t")
    return 0.5 * (1.0 / atom.ip + 1.0 / _gap_minus(geom, atom))


def tau_appearance(atom: AtomModel) -> float:
    """Ionization time at the barrier-suppression field, 1 / ip."""
    return 1.0 / atom.ip


def complex_times(geom: BarrierGeometry, atom: AtomModel) -> tuple[complex, complex]:
    """Barrier-crossing and approach times above barrier suppression.

    Returns (tau_d, tau_i) = 1 / (2 (ip -+ i delta_z'')) rationalized; the
    real parts coincide, the imaginary parts are opposite, and the sum is
    the real total time ip / (4 z_eff F).
    """
    if geom.regime is not Regime.SUPER_ATOMIC:
        raise RegimeError("complex decomposition only applies above barrier "
                          "suppression; the estimators are real here")
    dzi = geom.delta_z_imag
    den = 2.0 * (atom.ip * atom.ip + dzi * dzi)
    re = atom.ip / den
    im = dzi / den
    return (complex(re, im), complex(re, -im))


def keldysh_gamma(atom: AtomModel, field: LaserField, omega: float) -> float:
    """Adiabaticity parameter omega * sqrt(2 ip) / F."""
    if not omega > 0:
        raise ValueError(f"omega must be > 0, got {omega!r}")
    return omega * math.sqrt(2.0 * atom.ip) / field.f_peak


def compute_clocks(geom: BarrierGeometry, atom: AtomModel) -> TunnelClocks:
    """Evaluate every estimator for one solved geometry."""
    field = LaserField.direct(geom.f)
    tau_sym = tau_symmetric(geom, atom)
    tau_c = tau_classical_first_order(atom, field)
    tau_a = tau_appearance(atom)
    if geom.regime is Regime.SUPER_ATOMIC:
        return TunnelClocks(tau_i=None, tau_d=None, tau_sym=tau_sym,
                            tau_unsy=None, tau_c=tau_c, tau_t=None, tau_a=tau_a,
                            de_plus=None, de_minus=None,
                            complex_parts=complex_times(geom, atom))
    gap = _gap_minus(geom, atom)
    return TunnelClocks(
        tau_i=tau_initial(geom, atom),
        tau_d=tau_delay(geom, atom),
        tau_sym=tau_sym,
        tau_unsy=tau_unsymmetric(geom, atom),
        tau_c=tau_c,
        tau_t=tau_total(geom, atom),
        tau_a=tau_a,
        de_plus=0.5 * gap,
        de_minus=0.5 * (atom.ip + geom.delta_z),
        complex_parts=None,
    )

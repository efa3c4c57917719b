"""Command-line front end: geometry, times, sweep, compare, catalog.

Exit codes: 0 success, 2 usage/config/parse error, 3 field-regime error
(requested real quantities do not exist at the given field strength).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .atom import (AtomConfigError, AtomModel, LaserField, builtin_catalog,
                   catalog_lookup)
from .barrier import (Regime, RegimeError, appearance_intensity,
                      atomic_field_strength, solve_geometry)
from .clocks import compute_clocks, keldysh_gamma
from .harness import (ESTIMATORS, FIGURES, compare, emit_figure_data,
                      figure_table, load_measurements, run_sweep)
from .units import au_time_to_attoseconds, wavelength_to_angular_frequency

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REGIME = 3


def _fmt(value: object, precision: int) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{precision}g}"
    return str(value)


def _write_output(text: str, args: argparse.Namespace) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_record(pairs: list[tuple[str, object]], args: argparse.Namespace) -> str:
    if args.format == "json":
        return json.dumps(dict(pairs), indent=2) + "\n"
    header = ",".join(key for key, _ in pairs)
    row = ",".join(_fmt(value, args.precision) for _, value in pairs)
    return header + "\n" + row + "\n"


def _render_table(columns: Sequence[str], rows: list[list[object]],
                  args: argparse.Namespace) -> str:
    if args.format == "json":
        return json.dumps([dict(zip(columns, row)) for row in rows], indent=2) + "\n"
    lines = [",".join(columns)]
    lines += [",".join(_fmt(v, args.precision) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _resolve_atom(args: argparse.Namespace) -> AtomModel:
    inline = args.ip is not None or args.z_eff is not None
    if args.atom and inline:
        raise AtomConfigError("give either --atom or --ip/--z-eff, not both")
    if args.atom:
        return catalog_lookup(args.atom)
    if args.ip is None or args.z_eff is None:
        raise AtomConfigError("atom not specified: use --atom NAME[:MODEL] "
                              "or both --ip and --z-eff")
    return AtomModel(name=args.name, ip=args.ip, z_eff=args.z_eff, source="cli")


def _resolve_field(args: argparse.Namespace) -> LaserField:
    modes = [args.field is not None, args.field_from_intensity is not None,
             args.f0 is not None]
    if sum(modes) != 1:
        raise ValueError("choose exactly one of --field, --field-from-intensity, "
                         "--f0 (with --ellipticity)")
    if args.field is not None:
        return LaserField.direct(args.field, wavelength=args.wavelength)
    if args.field_from_intensity is not None:
        return LaserField.from_intensity(args.field_from_intensity,
                                         wavelength=args.wavelength)
    if args.ellipticity is None:
        raise ValueError("--f0 requires --ellipticity")
    return LaserField.from_f0_ellipticity(args.f0, args.ellipticity,
                                          wavelength=args.wavelength)


def parse_grid(spec: str) -> list[float]:
    """Parse ``MIN:MAX:STEP`` (inclusive endpoints) or ``F1,F2,...`` into a
    sorted, deduplicated field grid."""
    try:
        if ":" in spec:
            parts = spec.split(":")
            if len(parts) != 3:
                raise ValueError("grid range must be MIN:MAX:STEP")
            lo, hi, step = (float(p) for p in parts)
            if not step > 0:
                raise ValueError("grid step must be > 0")
            if hi < lo:
                raise ValueError("grid max must be >= min")
            n = int(math.floor((hi - lo) / step + 1e-9)) + 1
            values = [lo + k * step for k in range(n)]
        else:
            values = sorted({float(p) for p in spec.split(",") if p.strip()})
    except ValueError as exc:
        raise ValueError(f"bad grid {spec!r}: {exc}") from None
    if not values:
        raise ValueError(f"bad grid {spec!r}: no points")
    if any(not (math.isfinite(v) and v > 0) for v in values):
        raise ValueError(f"bad grid {spec!r}: all field values must be positive")
    return values


def _omega(args: argparse.Namespace) -> float | None:
    if getattr(args, "wavelength", None) is None:
        return None
    return wavelength_to_angular_frequency(args.wavelength)


def cmd_geometry(args: argparse.Namespace) -> int:
    atom = _resolve_atom(args)
    field = _resolve_field(args)
    geom = solve_geometry(atom, field)
    pairs: list[tuple[str, object]] = [
        ("atom", atom.name),
        ("source", atom.source),
        ("i_p_au", atom.ip),
        ("z_eff", atom.z_eff),
        ("f_au", geom.f),
        ("f_a_au", atomic_field_strength(atom)),
        ("i_a_au", appearance_intensity(atom)),
        ("regime", geom.regime.value),
        ("delta_z_au", geom.delta_z),
        ("delta_z_imag_au", geom.delta_z_imag),
        ("x_entrance_au", geom.x_entrance),
        ("x_peak_au", geom.x_peak),
        ("x_exit_au", geom.x_exit),
        ("x_classical_au", geom.x_classical),
        ("barrier_width_au", geom.barrier_width),
        ("h_max_au", geom.h_max),
    ]
    _write_output(_render_record(pairs, args), args)
    return EXIT_REGIME if geom.regime is Regime.SUPER_ATOMIC else EXIT_OK


def cmd_times(args: argparse.Namespace) -> int:
    atom = _resolve_atom(args)
    field = _resolve_field(args)
    geom = solve_geometry(atom, field)
    clocks = compute_clocks(geom, atom)
    pairs: list[tuple[str, object]] = [
        ("atom", atom.name),
        ("source", atom.source),
        ("i_p_au", atom.ip),
        ("z_eff", atom.z_eff),
        ("f_au", geom.f),
        ("regime", geom.regime.value),
    ]
    for name in ("tau_i", "tau_d", "tau_sym", "tau_unsy", "tau_c", "tau_t", "tau_a"):
        value = getattr(clocks, name)
        pairs.append((f"{name}_au", value))
        pairs.append((f"{name}_as",
                      None if value is None else au_time_to_attoseconds(value)))
    pairs.append(("de_plus_au", clocks.de_plus))
    pairs.append(("de_minus_au", clocks.de_minus))
    if clocks.complex_parts is not None:
        tau_d_c, tau_i_c = clocks.complex_parts
        pairs += [("tau_d_re_au", tau_d_c.real), ("tau_d_im_au", tau_d_c.imag),
                  ("tau_i_re_au", tau_i_c.real), ("tau_i_im_au", tau_i_c.imag)]
    else:
        pairs += [("tau_d_re_au", None), ("tau_d_im_au", None),
                  ("tau_i_re_au", None), ("tau_i_im_au", None)]
    omega = _omega(args)
    if omega is not None:
        pairs.append(("omega_au", omega))
        pairs.append(("gamma_k", keldysh_gamma(atom, field, omega)))
    _write_output(_render_record(pairs, args), args)
    return EXIT_REGIME if geom.regime is Regime.SUPER_ATOMIC else EXIT_OK


_DUMP_COLUMNS = (
    "f_au", "regime", "delta_z_au", "delta_z_imag_au", "x_entrance_au",
    "x_peak_au", "x_exit_au", "x_classical_au", "barrier_width_au", "h_max_au",
    "tau_i_as", "tau_d_as", "tau_sym_as", "tau_unsy_as", "tau_c_as", "tau_t_as",
    "tau_a_as", "light_as", "tau_d_re_au", "tau_d_im_au", "gamma_k",
)


def cmd_sweep(args: argparse.Namespace) -> int:
    atom = _resolve_atom(args)
    grid = parse_grid(args.grid)
    rows = run_sweep(atom, grid, omega=_omega(args))
    if args.figure:
        if args.format == "json":
            meta, columns, values = figure_table(rows, args.figure)
            payload = {"meta": meta,
                       "rows": [dict(zip(columns, v)) for v in values]}
            _write_output(json.dumps(payload, indent=2) + "\n", args)
        else:
            _write_output(emit_figure_data(rows, args.figure,
                                           precision=args.precision), args)
        return EXIT_OK
    table = []
    for row in rows:
        geom, clocks = row.geometry, row.clocks
        complex_d = clocks.complex_parts[0] if clocks.complex_parts else None
        table.append([
            row.f, geom.regime.value, geom.delta_z, geom.delta_z_imag,
            geom.x_entrance, geom.x_peak, geom.x_exit, geom.x_classical,
            geom.barrier_width, geom.h_max,
            row.times_as["tau_i_as"], row.times_as["tau_d_as"],
            row.times_as["tau_sym_as"], row.times_as["tau_unsy_as"],
            row.times_as["tau_c_as"], row.times_as["tau_t_as"],
            row.times_as["tau_a_as"], row.light_traversal_as,
            None if complex_d is None else complex_d.real,
            None if complex_d is None else complex_d.imag,
            row.gamma,
        ])
    _write_output(_render_table(_DUMP_COLUMNS, table, args), args)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    atom = _resolve_atom(args)
    records = load_measurements(args.data)
    if not records:
        raise ValueError(f"{args.data}: no measurement records")
    rows = run_sweep(atom, sorted({r.f for r in records}))
    report = compare(rows, args.estimator, records)
    pairs: list[tuple[str, object]] = [
        ("model_id", report.model_id),
        ("estimator", report.estimator),
        ("n_records", report.n_records),
        ("n_used", len(report.points)),
        ("n_skipped", report.n_skipped),
        ("rms_as", report.rms),
        ("max_abs_as", report.max_abs),
        ("fraction_within_bars", report.fraction_within_bars),
    ]
    text = _render_record(pairs, args)
    if args.residuals:
        columns = ("f_au", "model_as", "measured_as", "residual_as", "within_bars")
        table = [[p.f, p.model_as, p.measured_as, p.residual_as,
                  int(p.within_bars)] for p in report.points]
        text += _render_table(columns, table, args)
    _write_output(text, args)
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    columns = ("name", "source", "i_p_au", "z_eff", "f_a_au", "i_a_au")
    table = [[a.name, a.source, a.ip, a.z_eff, atomic_field_strength(a),
              appearance_intensity(a)] for a in builtin_catalog()]
    _write_output(_render_table(columns, table, args), args)
    return EXIT_OK


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", metavar="PATH", default=None,
                        help="write output to PATH instead of stdout")
    parser.add_argument("--precision", type=int, default=6, metavar="N",
                        help="significant digits for printed numbers (default 6)")


def _add_atom_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--atom", metavar="NAME[:MODEL]",
                        help="catalog atom, e.g. He:clementi or He:kullie")
    parser.add_argument("--ip", type=float, help="ionization potential in au")
    parser.add_argument("--z-eff", dest="z_eff", type=float,
                        help="effective nuclear charge")
    parser.add_argument("--name", default="custom",
                        help="label for an inline --ip/--z-eff atom")


def _add_field_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--field", type=float, metavar="AU",
                        help="peak field strength in au")
    parser.add_argument("--field-from-intensity", type=float, metavar="WCM2",
                        help="peak intensity in W/cm^2")
    parser.add_argument("--f0", type=float, metavar="AU",
                        help="major-axis field amplitude in au")
    parser.add_argument("--ellipticity", type=float, metavar="E",
                        help="polarization ellipticity in [0, 1]")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="attoclock",
        description="Barrier geometry and uncertainty-relation tunneling times "
                    "for strong-field ionization.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_geo = sub.add_parser("geometry", help="barrier geometry at one field strength")
    _add_atom_flags(p_geo)
    _add_field_flags(p_geo)
    p_geo.add_argument("--wavelength", type=float, metavar="NM")
    _add_output_flags(p_geo)
    p_geo.set_defaults(func=cmd_geometry)

    p_times = sub.add_parser("times", help="all time estimators at one field strength")
    _add_atom_flags(p_times)
    _add_field_flags(p_times)
    p_times.add_argument("--wavelength", type=float, metavar="NM",
                         help="laser wavelength for the adiabaticity parameter")
    _add_output_flags(p_times)
    p_times.set_defaults(func=cmd_times)

    p_sweep = sub.add_parser("sweep", help="evaluate over a field-strength grid")
    _add_atom_flags(p_sweep)
    p_sweep.add_argument("--grid", required=True, metavar="MIN:MAX:STEP|F1,F2,...")
    p_sweep.add_argument("--figure", choices=FIGURES, default=None,
                         help="emit one figure table instead of the full dump")
    p_sweep.add_argument("--wavelength", type=float, metavar="NM")
    _add_output_flags(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_cmp = sub.add_parser("compare", help="score a model against measured points")
    _add_atom_flags(p_cmp)
    p_cmp.add_argument("--estimator", choices=ESTIMATORS, required=True)
    p_cmp.add_argument("--residuals", action="store_true",
                       help="also print the per-point residual table")
    p_cmp.add_argument("data", metavar="CSV", help="measurement CSV path")
    _add_output_flags(p_cmp)
    p_cmp.set_defaults(func=cmd_compare)

    p_cat = sub.add_parser("catalog", help="list built-in atom models")
    _add_output_flags(p_cat)
    p_cat.set_defaults(func=cmd_catalog)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:   # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except RegimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

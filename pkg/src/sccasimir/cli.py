"""Command-line surface.

Every command accepts ``--format csv|table`` (same numbers, different
rendering: 9 significant digits for CSV, 4 for tables), echoes its
resolved parameters as ``#`` header lines for provenance, and is
byte-deterministic for identical inputs.

Exit codes: 0 success, 2 usage error, 3 unreadable or malformed input,
4 non-convergence of the Matsubara sum.
"""

from __future__ import annotations

import math
import os
import sys
from dataclasses import replace

import click

from . import analysis, experiments, membrane
from .errors import ConvergenceError, FitError, ParseError
from .lifshitz import (
    LifshitzSpec,
    PlatePlate,
    QuadratureConfig,
    SpherePlate,
    ZeroFreqApproach,
    casimir_pressure,
    casimir_pressure_gradient,
    ideal_casimir_force,
    local_exponent,
    tc_jump,
)
from .permittivity import bcs, drude, plasma
from .physcore import (
    CONSTANTS,
    SuperconductorParams,
    big_gap_membrane,
    conversion_from_config,
    membrane_from_config,
    read_config,
    small_gap_membrane,
    superconductor_from_config,
    _SC_KEYS,
)

_MODELS = {"drude": drude, "plasma": plasma, "bcs": bcs}
_CONFIG_ENV = "SCCASIMIR_CONFIG"

_format_option = click.option(
    "--format", "fmt", type=click.Choice(["csv", "table"]), default="table",
    show_default=True, help="Output rendering.")


def _fail_input(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(3)


def _load_config(config_path: str | None) -> dict:
    path = config_path or os.environ.get(_CONFIG_ENV)
    if not path:
        return {}
    try:
        return read_config(path)
    except (OSError, ParseError) as exc:
        _fail_input(str(exc))


def _sc_params(config: dict, omega, gamma0, rrr, tc) -> SuperconductorParams:
    if set(config) & set(_SC_KEYS):
        params = superconductor_from_config(config)
    else:
        params = SuperconductorParams()
    overrides = {name: value for name, value in
                 (("Omega", omega), ("gamma0", gamma0), ("RRR", rrr), ("Tc", tc))
                 if value is not None}
    return replace(params, **overrides) if overrides else params


def _membrane_spec(preset: str, membrane_config: str | None):
    if membrane_config is not None:
        try:
            return membrane_from_config(read_config(membrane_config))
        except (OSError, ParseError) as exc:
            _fail_input(str(exc))
    return small_gap_membrane() if preset == "small" else big_gap_membrane()


def _quad_config(rel_tol, term_stop, max_matsubara) -> QuadratureConfig:
    return QuadratureConfig(rel_tol=rel_tol, term_stop_rel=term_stop,
                            max_matsubara=max_matsubara)


def _echo_header(pairs):
    for key, value in pairs:
        click.echo(f"# {key} = {value}")


def _emit_rows(rows, fmt: str):
    """rows: (quantity, value, unit) triples."""
    if fmt == "csv":
        click.echo("quantity,value,unit")
        for name, value, unit in rows:
            click.echo(f"{name},{value:.8e},{unit}")
    else:
        width = max(len(name) for name, _, _ in rows)
        for name, value, unit in rows:
            click.echo(f"{name:<{width}}  {value:.4g} {unit}")


def _sc_header(p: SuperconductorParams):
    return [("Omega_eV", repr(p.Omega)), ("gamma0_eV", repr(p.gamma0)),
            ("RRR", repr(p.RRR)), ("Tc_K", repr(p.Tc))]


_sc_options = [
    click.option("--config", "config_path", type=click.Path(), default=None,
                 help=f"Flat key=value file; ${_CONFIG_ENV} is used when unset."),
    click.option("--omega", type=float, default=None, help="Plasma energy, eV."),
    click.option("--gamma0", type=float, default=None, help="Relaxation energy, eV."),
    click.option("--rrr", type=float, default=None, help="Residual resistance ratio."),
    click.option("--tc", type=float, default=None, help="Critical temperature, K."),
]

_quad_options = [
    click.option("--rel-tol", type=float, default=1e-8, show_default=True,
                 help="Relative tolerance of the momentum integrals."),
    click.option("--term-stop", type=float, default=1e-10, show_default=True,
                 help="Per-term stopping ratio of the Matsubara sum."),
    click.option("--max-matsubara", type=int, default=100_000, show_default=True,
                 help="Hard cap on the Matsubara index."),
]


def _add_options(options):
    def wrap(func):
        for option in reversed(options):
            func = option(func)
        return func
    return wrap


@click.group()
@click.version_option(package_name="sccasimir")
def main():
    """Casimir pressures between superconducting plates and the membrane
    calibration pipeline."""


@main.command()
@click.option("--d", type=float, required=True, help="Plate separation, m.")
@click.option("--t", "--T", "temperature", type=float, default=None, help="Temperature, K.")
@click.option("--model", type=click.Choice(sorted(_MODELS)), default="bcs",
              show_default=True)
@click.option("--approach", type=click.Choice([a.value for a in ZeroFreqApproach]),
              default="plasma-bcs", show_default=True)
@click.option("--ideal", is_flag=True,
              help="Perfect-conductor force from geometry (needs --area or --radius).")
@click.option("--area", type=float, default=None, help="Plate area for --ideal, m^2.")
@click.option("--radius", type=float, default=None, help="Sphere radius for --ideal, m.")
@click.option("--ideal-zero-t", is_flag=True,
              help="Closed-form zero-temperature perfect-conductor pressure.")
@click.option("--skip-exponent", is_flag=True, help="Do not evaluate the local exponent.")
@_add_options(_sc_options)
@_add_options(_quad_options)
@_format_option
def pressure(d, temperature, model, approach, ideal, area, radius, ideal_zero_t,
             skip_exponent, config_path, omega, gamma0, rrr, tc,
             rel_tol, term_stop, max_matsubara, fmt):
    """Casimir pressure, gradient, and local power-law exponent."""
    if ideal:
        if (area is None) == (radius is None):
            raise click.UsageError("--ideal needs exactly one of --area / --radius")
        geometry = PlatePlate(area, d) if area is not None else SpherePlate(radius, d)
        _echo_header([("command", "pressure --ideal"), ("d_m", repr(d)),
                      ("area_m2" if area is not None else "radius_m",
                       repr(area if area is not None else radius))])
        _emit_rows([("ideal_force", ideal_casimir_force(geometry), "N")], fmt)
        return
    if ideal_zero_t:
        hbar_c = CONSTANTS.hbar_Js * CONSTANTS.c
        value = -math.pi ** 2 * hbar_c / (240.0 * d ** 4)
        _echo_header([("command", "pressure --ideal-zero-t"), ("d_m", repr(d))])
        _emit_rows([("ideal_pressure", value, "Pa")], fmt)
        return
    if temperature is None:
        raise click.UsageError("--t is required unless --ideal/--ideal-zero-t")
    params = _sc_params(_load_config(config_path), omega, gamma0, rrr, tc)
    spec = LifshitzSpec(d=d, T=temperature, model=_MODELS[model](params),
                        approach=ZeroFreqApproach(approach),
                        quad=_quad_config(rel_tol, term_stop, max_matsubara))
    _echo_header([("command", "pressure"), ("d_m", repr(d)), ("T_K", repr(temperature)),
                  ("model", model), ("approach", approach)] + _sc_header(params))
    try:
        rows = [("pressure", casimir_pressure(spec), "Pa"),
                ("pressure_gradient", casimir_pressure_gradient(spec), "Pa/m")]
        if not skip_exponent:
            rows.append(("local_exponent", local_exponent(spec), ""))
    except ConvergenceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(4)
    _emit_rows(rows, fmt)


def _single_value_command(name, evaluator, doc):
    @main.command(name=name, help=doc)
    @click.option("--d", type=float, required=True, help="Plate separation, m.")
    @click.option("--t", "--T", "temperature", type=float, required=True,
                  help="Temperature, K.")
    @click.option("--model", type=click.Choice(sorted(_MODELS)), default="bcs",
                  show_default=True)
    @click.option("--approach", type=click.Choice([a.value for a in ZeroFreqApproach]),
                  default="plasma-bcs", show_default=True)
    @_add_options(_sc_options)
    @_add_options(_quad_options)
    @_format_option
    def command(d, temperature, model, approach, config_path, omega, gamma0, rrr, tc,
                rel_tol, term_stop, max_matsubara, fmt):
        params = _sc_params(_load_config(config_path), omega, gamma0, rrr, tc)
        spec = LifshitzSpec(d=d, T=temperature, model=_MODELS[model](params),
                            approach=ZeroFreqApproach(approach),
                            quad=_quad_config(rel_tol, term_stop, max_matsubara))
        _echo_header([("command", name), ("d_m", repr(d)), ("T_K", repr(temperature)),
                      ("model", model), ("approach", approach)] + _sc_header(params))
        try:
            _emit_rows(evaluator(spec), fmt)
        except ConvergenceError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)
    return command


_single_value_command(
    "gradient",
    lambda spec: [("pressure_gradient", casimir_pressure_gradient(spec), "Pa/m")],
    "Separation derivative of the Casimir pressure.")
_single_value_command(
    "exponent",
    lambda spec: [("local_exponent", local_exponent(spec), "")],
    "Local power-law exponent of the pressure.")


@main.command()
@click.option("--d", type=float, default=190e-9, show_default=True,
              help="Plate separation, m.")
@click.option("--dt", "--dT", "dt", type=float, default=0.1, show_default=True,
              help="Half-width of the temperature bracket, K.")
@click.option("--approach", type=click.Choice([a.value for a in ZeroFreqApproach]),
              default="plasma-bcs", show_default=True)
@click.option("--all", "all_approaches", is_flag=True,
              help="Evaluate all three prescriptions.")
@click.option("--membrane", "preset", type=click.Choice(["small", "big"]),
              default="small", show_default=True)
@click.option("--membrane-config", type=click.Path(), default=None)
@click.option("--f0", type=float, default=None,
              help="Resonance frequency for the predicted shift, Hz "
                   "(defaults to the membrane fundamental).")
@_add_options(_sc_options)
@_add_options(_quad_options)
@_format_option
def jump(d, dt, approach, all_approaches, preset, membrane_config, f0,
         config_path, omega, gamma0, rrr, tc, rel_tol, term_stop, max_matsubara, fmt):
    """Pressure-gradient change across the transition and the predicted
    frequency shift.  The transition temperature is the resolved Tc."""
    params = _sc_params(_load_config(config_path), omega, gamma0, rrr, tc)
    tc_value = params.Tc
    spec_m = _membrane_spec(preset, membrane_config)
    if f0 is None:
        f0 = membrane.fundamental_frequency(spec_m)
    quad_cfg = _quad_config(rel_tol, term_stop, max_matsubara)
    approaches = ([ZeroFreqApproach.PLASMA_BCS, ZeroFreqApproach.PLASMA_PLASMA,
                   ZeroFreqApproach.DRUDE_BCS] if all_approaches
                  else [ZeroFreqApproach(approach)])
    _echo_header([("command", "jump"), ("d_m", repr(d)), ("Tc_K", repr(tc_value)),
                  ("dT_K", repr(dt)), ("f0_Hz", repr(f0)),
                  ("membrane", preset if membrane_config is None else membrane_config)]
                 + _sc_header(params))
    rows = []
    try:
        for ap in approaches:
            value = tc_jump(d, tc_value, dt, ap, params, quad_cfg)
            df = membrane.predicted_frequency_jump(value, spec_m, f0)
            rows.append((f"gradient_jump[{ap.value}]", value, "Pa/m"))
            rows.append((f"frequency_shift[{ap.value}]", df, "Hz"))
    except ConvergenceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(4)
    _emit_rows(rows, fmt)


@main.command()
@click.option("--small", "small_path", type=click.Path(), required=True,
              help="Small-gap sweep CSV (T_K,f_Hz[,sigma_f_Hz][,Q]).")
@click.option("--big", "big_path", type=click.Path(), required=True,
              help="Big-gap reference sweep CSV.")
@click.option("--window", nargs=2, type=float, required=True,
              help="Fit window (lo hi), K; must sit below the transition.")
@click.option("--membrane", "preset", type=click.Choice(["small", "big"]),
              default="small", show_default=True)
@click.option("--membrane-config", type=click.Path(), default=None)
@click.option("--factors-config", type=click.Path(), default=None,
              help="FEM conversion factors (key=value file).")
@click.option("--combine", type=click.Choice(["add", "quadrature"]), default="add",
              show_default=True, help="Uncertainty combination rule.")
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Write the per-point CSV report here (default: stdout).")
@_format_option
def sweep(small_path, big_path, window, preset, membrane_config, factors_config,
          combine, out_path, fmt):
    """Run the calibrate/subtract/convert pipeline on two sweep files."""
    try:
        small_records = membrane.load_sweep_csv(small_path)
        big_records = membrane.load_sweep_csv(big_path)
    except (OSError, ParseError) as exc:
        _fail_input(str(exc))
    spec_m = _membrane_spec(preset, membrane_config)
    factors = None
    if factors_config is not None:
        try:
            factors = conversion_from_config(read_config(factors_config))
        except (OSError, ParseError) as exc:
            _fail_input(str(exc))
    try:
        report = analysis.sweep_pipeline(small_records, big_records, tuple(window),
                                         spec_m, factors=factors, combine=combine)
    except ValueError as exc:
        _fail_input(str(exc))

    _echo_header([
        ("command", "sweep"), ("small", small_path), ("big", big_path),
        ("window_K", f"{window[0]!r} {window[1]!r}"), ("combine", combine),
        ("fit_slope_small", repr(report.small.fit_slope)),
        ("fit_slope_big", repr(report.big.fit_slope)),
    ])
    rows = [("dw2_jump", report.dw2_jump, "(rad/s)^2"),
            ("dw2_sigma", report.dw2_sigma, "(rad/s)^2"),
            ("gradient_jump", report.gradient_jump, "Pa/m"),
            ("gradient_sigma", report.gradient_sigma, "Pa/m")]
    if report.conversion is not None:
        rows += [("force_change", report.conversion.dF, "N"),
                 ("pressure_change", report.conversion.dP, "Pa"),
                 ("deflection_change", report.conversion.dz, "m")]
    _emit_rows(rows, fmt)

    small_by_t = {t: (v, s) for t, v, s in report.small.records}
    lines = ["T_K,dw2_small,sigma_small,dw2_casimir,sigma_casimir,"
             "dPprime_Pa_per_m,dF_N,dP_Pa,dz_m"]
    for t, dw2, sig in report.differential:
        dw2_small, sig_small = small_by_t[t]
        gradient = membrane.gradient_from_dw2(dw2, spec_m)
        if factors is not None:
            shift = dw2 if factors.basis.value == "angular-squared" \
                else dw2 / (4.0 * math.pi ** 2)
            conv = analysis.convert_fem(shift, factors)
            extra = f",{conv.dF:.8e},{conv.dP:.8e},{conv.dz:.8e}"
        else:
            extra = ",nan,nan,nan"
        lines.append(f"{t:.8e},{dw2_small:.8e},{sig_small:.8e},{dw2:.8e},"
                     f"{sig:.8e},{gradient:.8e}" + extra)
    text = "\n".join(lines) + "\n"
    if out_path is None:
        click.echo(text, nl=False)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        click.echo(f"# wrote {len(report.differential)} rows to {out_path}")


@main.command("generate-sweep")
@click.option("--out", "out_path", type=click.Path(), required=True)
@click.option("--slope", type=float, default=-2.2e7, show_default=True,
              help="Baseline slope, (rad/s)^2 per K.")
@click.option("--intercept", type=float, default=5.226e12, show_default=True,
              help="Baseline intercept, (rad/s)^2.")
@click.option("--jump-dw2", type=float, default=None,
              help="Injected step above the transition, (rad/s)^2.")
@click.option("--jump-gradient", type=float, default=None,
              help="Injected step as a pressure gradient, Pa/m.")
@click.option("--tc-step", type=float, default=14.2, show_default=True,
              help="Step temperature, K.")
@click.option("--noise-f", type=float, default=0.0, show_default=True,
              help="Per-point frequency noise, Hz.")
@click.option("--t-min", type=float, default=13.175, show_default=True)
@click.option("--t-max", type=float, default=14.675, show_default=True)
@click.option("--n-points", type=int, default=31, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--membrane", "preset", type=click.Choice(["small", "big"]),
              default="small", show_default=True)
@click.option("--membrane-config", type=click.Path(), default=None)
def generate_sweep_cmd(out_path, slope, intercept, jump_dw2, jump_gradient, tc_step,
                       noise_f, t_min, t_max, n_points, seed, preset, membrane_config):
    """Write a deterministic synthetic sweep CSV for pipeline tests."""
    if (jump_dw2 is None) and (jump_gradient is None):
        jump_dw2 = 0.0
    if (jump_dw2 is not None) and (jump_gradient is not None):
        raise click.UsageError("give at most one of --jump-dw2 / --jump-gradient")
    spec_m = _membrane_spec(preset, membrane_config)
    if jump_gradient is not None:
        jump_dw2 = membrane.dw2_from_gradient(jump_gradient, spec_m)
    if n_points < 2 or t_max <= t_min:
        raise click.UsageError("need n_points >= 2 and t_max > t_min")
    grid = tuple(t_min + i * (t_max - t_min) / (n_points - 1) for i in range(n_points))
    truth = analysis.SweepTruth(slope=slope, intercept=intercept, jump=jump_dw2,
                                Tc=tc_step, noise_f=noise_f, grid=grid)
    try:
        records = analysis.generate_sweep(truth, seed=seed)
    except ValueError as exc:
        _fail_input(str(exc))
    # full float precision: these files round-trip through the pipeline
    with_sigma = noise_f > 0.0
    lines = ["T_K,f_Hz,sigma_f_Hz" if with_sigma else "T_K,f_Hz"]
    for r in records:
        lines.append(f"{r.T!r},{r.f!r},{r.sigma_f!r}" if with_sigma
                     else f"{r.T!r},{r.f!r}")
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    click.echo(f"# wrote {len(records)} records to {out_path} (seed {seed})")


@main.command("lcpd-fit")
@click.option("--csv", "csv_path", type=click.Path(), required=True,
              help="Voltage sweep CSV with header V_volt,f_Hz.")
@click.option("--membrane", "preset", type=click.Choice(["small", "big"]),
              default="small", show_default=True)
@click.option("--membrane-config", type=click.Path(), default=None)
@_format_option
def lcpd_fit_cmd(csv_path, preset, membrane_config, fmt):
    """Fit the electrostatic parabola: compensation voltage, stress, density."""
    import csv as csv_mod
    spec_m = _membrane_spec(preset, membrane_config)
    points = []
    try:
        with open(csv_path, newline="", encoding="utf-8") as fh:
            reader = csv_mod.reader(fh)
            header = [h.strip() for h in next(reader, [])]
            if header != ["V_volt", "f_Hz"]:
                raise ParseError(f"expected header V_volt,f_Hz, got {header!r}", line=1)
            for lineno, row in enumerate(reader, start=2):
                if not row or all(not c.strip() for c in row):
                    continue
                try:
                    points.append((float(row[0]), float(row[1])))
                except (ValueError, IndexError):
                    raise ParseError(f"bad row {row!r}", line=lineno) from None
    except (OSError, ParseError) as exc:
        _fail_input(str(exc))
    try:
        result = membrane.lcpd_fit(points, spec_m)
    except FitError as exc:
        _fail_input(f"fit failed: {exc}")
    _echo_header([("command", "lcpd-fit"), ("csv", csv_path),
                  ("n_points", str(len(points)))])
    _emit_rows([("V0", result.V0, "V"), ("V0_err", result.V0_err, "V"),
                ("sigma", result.sigma, "Pa"), ("sigma_err", result.sigma_err, "Pa"),
                ("rho", result.rho, "kg/m^3"), ("rho_err", result.rho_err, "kg/m^3")],
               fmt)


@main.command("dynes-fit")
@click.option("--csv", "csv_path", type=click.Path(), required=True,
              help="Conductance CSV with header V_volt,G_arb.")
@click.option("--t", "--T", "temperature", type=float, required=True,
              help="Measurement temperature, K.")
@_format_option
def dynes_fit_cmd(csv_path, temperature, fmt):
    """Fit gap, broadening, and scale to tunneling-conductance data."""
    try:
        points = analysis.load_dynes_csv(csv_path)
    except (OSError, ParseError) as exc:
        _fail_input(str(exc))
    try:
        result = analysis.dynes_fit(points, T=temperature)
    except FitError as exc:
        _fail_input(f"fit failed: {exc}")
    _echo_header([("command", "dynes-fit"), ("csv", csv_path),
                  ("T_K", repr(temperature)), ("n_points", str(len(points)))])
    _emit_rows([("Delta", result.Delta, "eV"), ("gamma", result.gamma, "eV"),
                ("A", result.A, "arb")], fmt)


@main.command()
@click.option("--flag-above", type=float, default=0.005, show_default=True,
              help="Relative deviation that marks a row as suspect.")
@_format_option
def tables(flag_above, fmt):
    """Ideal-conductor force comparison across published geometries."""
    def render(rows, geom_col, recompute):
        out = []
        for row in rows:
            force = recompute(row)
            dev = abs(force - row.force) / row.force
            out.append((row.ref, getattr(row, geom_col), row.d, row.force, force,
                        dev, "SUSPECT" if dev > flag_above else "ok"))
        return out

    plate = render(experiments.PLATE_PLATE_ROWS, "area",
                   experiments.recompute_plate_row)
    sphere = render(experiments.SPHERE_PLATE_ROWS, "radius",
                    experiments.recompute_sphere_row)
    _echo_header([("command", "tables"), ("flag_above", repr(flag_above))])

    def emit(section, geom_name, data, avg, med, avg_rec, med_rec):
        if fmt == "csv":
            click.echo(f"# {section}")
            click.echo(f"ref,{geom_name},min_sep_m,force_table_N,force_ideal_N,"
                       "rel_deviation,status")
            for ref, geom, dsep, ft, fr, dev, status in data:
                click.echo(f"{ref},{geom:.8e},{dsep:.8e},{ft:.8e},{fr:.8e},"
                           f"{dev:.8e},{status}")
            click.echo(f"average,,,{avg:.8e},{avg_rec:.8e},,")
            click.echo(f"median,,,{med:.8e},{med_rec:.8e},,")
        else:
            click.echo(f"--- {section} ---")
            width = max(len(r[0]) for r in data)
            for ref, geom, dsep, ft, fr, dev, status in data:
                click.echo(f"{ref:<{width}}  {geom:.4g}  {dsep:.4g}  "
                           f"{ft:.4g}  {fr:.4g}  {dev:.2e}  {status}")
            click.echo(f"{'average':<{width}}  {'':>9}  {'':>9}  {avg:.4g}  {avg_rec:.4g}")
            click.echo(f"{'median':<{width}}  {'':>9}  {'':>9}  {med:.4g}  {med_rec:.4g}")

    emit("plate-plate (average/median exclude This work)", "area_m2", plate,
         experiments.plate_average_force(), experiments.plate_median_force(),
         experiments.plate_average_force(recomputed=True),
         experiments.plate_median_force(recomputed=True))
    emit("sphere-plate", "radius_m", sphere,
         experiments.sphere_average_force(), experiments.sphere_median_force(),
         experiments.sphere_average_force(recomputed=True),
         experiments.sphere_median_force(recomputed=True))
    suspects = [r[0] for r in plate + sphere if r[6] == "SUSPECT"]
    click.echo(f"# rows deviating more than {flag_above:.1%}: "
               + (", ".join(suspects) if suspects else "none"))


@main.command()
@click.option("--f0", type=float, required=True, help="Resonance frequency, Hz.")
@click.option("--q", type=float, required=True, help="Quality factor.")
@click.option("--noise-to-signal", "ns", type=float, required=True,
              help="Lock-in noise-to-signal ratio.")
@click.option("--tau", type=float, required=True, help="Integration time, s.")
@_format_option
def noise(f0, q, ns, tau, fmt):
    """Noise-limited frequency resolution of the resonance readout."""
    _echo_header([("command", "noise"), ("f0_Hz", repr(f0)), ("Q", repr(q)),
                  ("noise_to_signal", repr(ns)), ("tau_s", repr(tau))])
    _emit_rows([("frequency_noise", membrane.frequency_noise(f0, q, ns, tau), "Hz")],
               fmt)


if __name__ == "__main__":
    main()

"""Command-line front end: runs the standard experiments and writes CSV artifacts.

Every command is deterministic (identical configuration gives byte-identical
output).  Lengths are given in units of the lattice constant a, masses as
mu0*tau, potentials as v0*a/v_f; free-energy columns carry the dimensionless
combinations L*F/v_f (1D), L^2*F/(v_f*W) (2D) noted in each header.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import configparser
import csv
import math
import os
import subprocess
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import click

from . import __version__
from .continuum import (
    continuum_free_energy_1d,
    continuum_free_energy_2d,
    continuum_free_energy_spike,
    large_l_asymptote,
)
from .errors import CasimirError, ConfigError, NonConvergence, NumericalError, QuadratureFailure
from .free_energy import (
    free_energy_extended_interp,
    free_energy_spike_large_l,
    free_energy_zero_t_1d,
    free_energy_zero_t_2d,
)
from .lattice import BarrierConfig, LatticeParams, QuadratureSpec
from .protection import (
    FermionKind,
    effective_length,
    free_energy_staggered,
    gap_closed_form,
)
from .abel_plana import zero_point_energy_infinite_mass

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    """Resolved parameters of one experiment run."""

    experiment: str
    gamma: float
    mu0_tau: float
    mu_sign: str
    l_min: int
    l_max: int
    l_step: int
    v0: float
    wilson_m0: float
    quad_rel_tol: float
    out: Path

    def validate(self) -> None:
        if self.gamma <= 0:
            raise ConfigError("gamma must be positive")
        if self.mu0_tau < 0:
            raise ConfigError("mu0_tau must be nonnegative")
        if self.mu_sign not in ("same", "opposite"):
            raise ConfigError(f"mu_sign must be 'same' or 'opposite', got {self.mu_sign!r}")
        if self.l_step <= 0:
            raise ConfigError("l_step must be positive")
        if self.quad_rel_tol <= 0:
            raise ConfigError("quad_rel_tol must be positive")
        if self.v0 < 0:
            raise ConfigError("v0 must be nonnegative")

    @property
    def lattice(self) -> LatticeParams:
        return LatticeParams(a=1.0, tau=1.0, v_f=self.gamma)

    @property
    def quad(self) -> QuadratureSpec:
        return QuadratureSpec(rel_tol=self.quad_rel_tol)

    def sweep(self) -> list[int]:
        return list(range(self.l_min, self.l_max + 1, self.l_step))

    def signed_masses(self) -> tuple[float, float]:
        mu0 = self.mu0_tau  # tau = 1
        return mu0, mu0 if self.mu_sign == "same" else -mu0


def _worker_count() -> int:
    env = os.environ.get("CASIMIR_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError as exc:
            raise ConfigError(f"CASIMIR_THREADS must be an integer, got {env!r}") from exc
        if n < 1:
            raise ConfigError("CASIMIR_THREADS must be at least 1")
        return n
    return os.cpu_count() or 1


def _parallel_map(fn, items):
    """Order-preserving parallel map; worker count never changes the output."""
    if len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(_worker_count(), len(items))) as pool:
        return list(pool.map(fn, items))


@lru_cache(maxsize=1)
def _build_id() -> str:
    try:
        described = subprocess.run(
            ["git", "describe", "--always", "--dirty"],
            capture_output=True,
            text=True,
            cwd=Path(__file__).parent,
            timeout=5,
        )
        if described.returncode == 0:
            return f"tangent-casimir-{__version__}+g{described.stdout.strip()}"
    except OSError:
        pass
    return f"tangent-casimir-{__version__}"


def _write_csv(cfg: RunConfig, columns: list[str], rows: list[tuple], note: str) -> None:
    echo = " ".join(
        f"{k}={getattr(cfg, k)}"
        for k in (
            "gamma",
            "mu0_tau",
            "mu_sign",
            "l_min",
            "l_max",
            "l_step",
            "v0",
            "wilson_m0",
            "quad_rel_tol",
        )
    )
    with open(cfg.out, "w", newline="") as fh:
        fh.write(f"# schema={SCHEMA_VERSION}\n")
        fh.write(f"# experiment={cfg.experiment}\n")
        fh.write(f"# config: {echo}\n")
        fh.write(f"# units: {note}\n")
        fh.write(f"# build={_build_id()}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(x) for x in row])


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.12e}"
    return str(x)


_COMMON_OPTIONS = [
    click.option("--gamma", type=float, default=1.0, show_default=True, help="v_f*tau/a."),
    click.option("--mu0-tau", type=float, default=1.0, show_default=True, help="Barrier mass mu0*tau."),
    click.option(
        "--mu-sign",
        type=click.Choice(["same", "opposite"]),
        default="same",
        show_default=True,
        help="Relative sign of the two barrier masses.",
    ),
    click.option("--l-min", type=int, default=None, help="Smallest separation, in units of a."),
    click.option("--l-max", type=int, default=None, help="Largest separation, in units of a."),
    click.option("--l-step", type=int, default=None, help="Separation step, in units of a."),
    click.option("--v0", type=float, default=0.0, show_default=True, help="Staggered amplitude v0*a/v_f."),
    click.option(
        "--wilson-m0",
        type=float,
        default=1.0,
        show_default=True,
        help="Wilson mass parameter m0*a/v_f for the gap table.",
    ),
    click.option("--quad-rel-tol", type=float, default=1e-10, show_default=True),
    click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None),
    click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None),
    click.option(
        "--defaults",
        is_flag=True,
        help="Ignore --config values and run with the built-in figure defaults.",
    ),
]


def _with_common_options(fn):
    for opt in reversed(_COMMON_OPTIONS):
        fn = opt(fn)
    return fn


def _load_config_file(path: str) -> dict[str, str]:
    parser = configparser.ConfigParser()
    try:
        parser.read(path)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse config file {path}: {exc}") from exc
    values: dict[str, str] = {}
    for section in ("run", "DEFAULT"):
        if section in parser or section == "DEFAULT":
            for key, val in parser[section].items():
                values.setdefault(key.replace("-", "_"), val)
    return values


def _resolve(ctx: click.Context, params: dict, experiment: str, sweep_defaults: tuple[int, int, int]) -> RunConfig:
    """Merge flags > config file > built-in defaults into a RunConfig."""
    from click.core import ParameterSource

    file_values: dict[str, str] = {}
    if params["config_path"] and not params["defaults"]:
        file_values = _load_config_file(params["config_path"])

    def pick(name: str, cast, fallback):
        if ctx.get_parameter_source(name) == ParameterSource.COMMANDLINE:
            return params[name]
        if name in file_values:
            try:
                return cast(file_values[name])
            except ValueError as exc:
                raise ConfigError(f"bad config value for {name}: {file_values[name]!r}") from exc
        return fallback if params[name] is None else params[name]

    l_min = pick("l_min", int, sweep_defaults[0])
    l_max = pick("l_max", int, sweep_defaults[1])
    l_step = pick("l_step", int, sweep_defaults[2])
    out = pick("out", Path, Path(f"{experiment}.csv"))
    cfg = RunConfig(
        experiment=experiment,
        gamma=pick("gamma", float, 1.0),
        mu0_tau=pick("mu0_tau", float, 1.0),
        mu_sign=pick("mu_sign", str, "same"),
        l_min=l_min,
        l_max=l_max,
        l_step=l_step,
        v0=pick("v0", float, 0.0),
        wilson_m0=pick("wilson_m0", float, 1.0),
        quad_rel_tol=pick("quad_rel_tol", float, 1e-10),
        out=Path(out),
    )
    cfg.validate()
    return cfg


def _dispatch(ctx: click.Context, body) -> None:
    try:
        body()
    except ConfigError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    except (QuadratureFailure, NumericalError, NonConvergence) as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        ctx.exit(3)
    except CasimirError as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        ctx.exit(3)


@click.group()
@click.version_option(version=__version__, prog_name="casimir")
def main() -> None:
    """Lattice-fermion Casimir experiments; each command writes one CSV artifact."""


@main.command("fig-barrier-1d")
@_with_common_options
@click.pass_context
def cmd_fig_barrier_1d(ctx: click.Context, **params) -> None:
    """Free energy vs separation for extended barriers in 1D.

    Columns: l_over_a, then L*F/v_f for the lattice (both mass-sign choices),
    the continuum reference, and the large-L asymptotes.
    """

    def body() -> None:
        cfg = _resolve(ctx, params, "fig_barrier_1d", (2, 40, 2))
        lat = cfg.lattice
        mu0 = cfg.mu0_tau
        c_same = large_l_asymptote(1, +1)
        c_opp = large_l_asymptote(1, -1)

        def row(steps: int):
            if mu0 == 0.0:
                return (steps,) + (0.0,) * 6
            same = BarrierConfig(mu_l=mu0, mu_r=mu0, l_mu=math.inf, l=float(steps))
            opp = BarrierConfig(mu_l=mu0, mu_r=-mu0, l_mu=math.inf, l=float(steps))
            f_same = free_energy_zero_t_1d(same, lat, cfg.quad).value
            f_opp = free_energy_zero_t_1d(opp, lat, cfg.quad).value
            fc_same = continuum_free_energy_1d(mu0, mu0, float(steps), lat.v_f, cfg.quad)
            fc_opp = continuum_free_energy_1d(mu0, -mu0, float(steps), lat.v_f, cfg.quad)
            scale = steps / lat.v_f
            return (
                steps,
                f_same * scale,
                f_opp * scale,
                fc_same * scale,
                fc_opp * scale,
                c_same,
                c_opp,
            )

        rows = _parallel_map(row, cfg.sweep())
        rows.sort(key=lambda r: r[0])
        _write_csv(
            cfg,
            [
                "l_over_a",
                "f_lattice_same_sign",
                "f_lattice_opposite_sign",
                "f_continuum_same",
                "f_continuum_opposite",
                "f_asymptote_same",
                "f_asymptote_opposite",
            ],
            rows,
            "f columns are L*F/v_f (dimensionless)",
        )

    _dispatch(ctx, body)


@main.command("fig-spike")
@click.option("--mu-min", type=float, default=0.0, show_default=True, help="Smallest a*mu0/v_f.")
@click.option("--mu-max", type=float, default=8.0, show_default=True, help="Largest a*mu0/v_f.")
@click.option("--mu-step", type=float, default=0.25, show_default=True)
@_with_common_options
@click.pass_context
def cmd_fig_spike(ctx: click.Context, mu_min: float, mu_max: float, mu_step: float, **params) -> None:
    """Free energy of two one-site mass spikes vs the spike mass.

    Columns carry L*F/v_f, which is independent of the separation for the
    large-L closed forms.
    """

    def body() -> None:
        cfg = _resolve(ctx, params, "fig_spike", (100, 100, 1))
        if mu_step <= 0 or mu_max < mu_min:
            raise ConfigError("need mu_step > 0 and mu_max >= mu_min")
        lat = cfg.lattice
        l_ref = float(cfg.l_min)
        count = int(round((mu_max - mu_min) / mu_step)) + 1

        def row(i: int):
            x = mu_min + i * mu_step
            mu0 = x * lat.v_f / lat.a
            f_lat = free_energy_spike_large_l(mu0, mu0, l_ref, lat) * l_ref / lat.v_f
            f_cont = continuum_free_energy_spike(x * lat.v_f, l_ref, lat.v_f) * l_ref / lat.v_f
            return (x, f_lat, f_cont)

        rows = _parallel_map(row, list(range(count)))
        rows.sort(key=lambda r: r[0])
        _write_csv(
            cfg,
            ["mu0_a_over_vf", "f_lattice", "f_continuum"],
            rows,
            "f columns are L*F/v_f (dimensionless); continuum spike weight m = a*mu0",
        )

    _dispatch(ctx, body)


@main.command("fig-barrier-2d")
@_with_common_options
@click.pass_context
def cmd_fig_barrier_2d(ctx: click.Context, **params) -> None:
    """Free energy vs separation for extended barriers on a 2D surface.

    Columns: l_over_a, then L^2*F/(v_f*W) for lattice, continuum and asymptotes.
    """

    def body() -> None:
        cfg = _resolve(ctx, params, "fig_barrier_2d", (4, 30, 2))
        lat = cfg.lattice
        mu0 = cfg.mu0_tau
        c_same = large_l_asymptote(2, +1)
        c_opp = large_l_asymptote(2, -1)

        def row(steps: int):
            if mu0 == 0.0:
                return (steps,) + (0.0,) * 6
            same = BarrierConfig(mu_l=mu0, mu_r=mu0, l_mu=math.inf, l=float(steps), w=1.0)
            opp = BarrierConfig(mu_l=mu0, mu_r=-mu0, l_mu=math.inf, l=float(steps), w=1.0)
            f_same = free_energy_zero_t_2d(same, lat, cfg.quad).value
            f_opp = free_energy_zero_t_2d(opp, lat, cfg.quad).value
            fc_same = continuum_free_energy_2d(mu0, mu0, float(steps), 1.0, lat.v_f, cfg.quad)
            fc_opp = continuum_free_energy_2d(mu0, -mu0, float(steps), 1.0, lat.v_f, cfg.quad)
            scale = steps * steps / lat.v_f
            return (
                steps,
                f_same * scale,
                f_opp * scale,
                fc_same * scale,
                fc_opp * scale,
                c_same,
                c_opp,
            )

        rows = _parallel_map(row, cfg.sweep())
        rows.sort(key=lambda r: r[0])
        _write_csv(
            cfg,
            [
                "l_over_a",
                "f_lattice_same_sign",
                "f_lattice_opposite_sign",
                "f_continuum_same",
                "f_continuum_opposite",
                "f_asymptote_same",
                "f_asymptote_opposite",
            ],
            rows,
            "f columns are L^2*F/(v_f*W) (dimensionless)",
        )

    _dispatch(ctx, body)


@main.command("protection")
@click.option(
    "--v0-values",
    default="0.0,0.5,1.0,2.0",
    show_default=True,
    help="Comma-separated staggered amplitudes v0*a/v_f to sweep.",
)
@_with_common_options
@click.pass_context
def cmd_protection(ctx: click.Context, v0_values: str, **params) -> None:
    """Staggered-potential sweep: effective-length collapse and the gap table.

    Gap columns are in units of v_f/a; collapse_residual compares F(L, v0)
    with the v0 = 0 curve evaluated at L_eff.
    """

    def body() -> None:
        cfg = _resolve(ctx, params, "protection", (100, 200, 50))
        lat = cfg.lattice
        mu_l, mu_r = cfg.signed_masses()
        try:
            v0_list = [float(s) for s in v0_values.split(",") if s.strip()]
        except ValueError as exc:
            raise ConfigError(f"bad --v0-values: {v0_values!r}") from exc
        if any(v < 0 for v in v0_list):
            raise ConfigError("v0 values must be nonnegative")

        def gaps(v0_phys: float) -> tuple[float, ...]:
            va = lat.v_f / lat.a
            return tuple(
                gap_closed_form(kind, v0_phys, lat, m0=cfg.wilson_m0 * va) / va
                for kind in (
                    FermionKind.NAIVE,
                    FermionKind.WILSON,
                    FermionKind.KOGUT_SUSSKIND,
                    FermionKind.SLAC,
                    FermionKind.TANGENT,
                )
            )

        points = [(v0, steps) for v0 in v0_list for steps in cfg.sweep()]

        def row(point: tuple[float, int]):
            v0, steps = point
            v0_phys = v0 * lat.v_f / lat.a
            if mu_l == 0.0:
                return (v0, steps, 0.0, effective_length(float(steps), v0_phys, lat), 0.0) + gaps(v0_phys)
            barrier = BarrierConfig(mu_l=mu_l, mu_r=mu_r, l_mu=math.inf, l=float(steps), v0=v0_phys)
            f_v = free_energy_staggered(barrier, lat, cfg.quad).value
            l_eff = effective_length(float(steps), v0_phys, lat)
            f_ref = free_energy_extended_interp(mu_l, mu_r, l_eff, lat, cfg.quad)
            residual = abs(f_v - f_ref) / abs(f_ref)
            return (v0, steps, f_v * l_eff / lat.v_f, l_eff, residual) + gaps(v0_phys)

        rows = _parallel_map(row, points)
        rows.sort(key=lambda r: (r[0], r[1]))
        _write_csv(
            cfg,
            [
                "v0_a_over_vf",
                "l_over_a",
                "f_times_l_eff",
                "l_eff_over_a",
                "collapse_residual",
                "gap_naive",
                "gap_wilson",
                "gap_kogut_susskind",
                "gap_slac",
                "gap_tangent",
            ],
            rows,
            "f_times_l_eff is L_eff*F/v_f; gaps in units v_f/a (wilson at m0 = wilson_m0)",
        )

    _dispatch(ctx, body)


@main.command("abel-plana")
@_with_common_options
@click.pass_context
def cmd_abel_plana(ctx: click.Context, **params) -> None:
    """Hard-wall zero-point energy vs separation and its large-L asymptote.

    delta_f_tau is the regularized sum-minus-integral in units 1/tau;
    coefficient is (ln 2 / tau - delta_f) * L / v_f, tending to
    pi (gamma^2 + 1) / (24 gamma^2).
    """

    def body() -> None:
        cfg = _resolve(ctx, params, "abel_plana", (50, 400, 50))
        lat = cfg.lattice
        gamma = lat.gamma
        asym = math.pi * (gamma * gamma + 1.0) / (24.0 * gamma * gamma)

        def row(steps: int):
            delta_f = zero_point_energy_infinite_mass(float(steps), lat, cfg.quad)
            coeff = (math.log(2.0) / lat.tau - delta_f) * steps * lat.a / lat.v_f
            offset = delta_f + asym * lat.v_f / (steps * lat.a) - math.log(2.0) / lat.tau
            return (steps, delta_f * lat.tau, coeff, asym, offset * lat.tau)

        rows = _parallel_map(row, cfg.sweep())
        rows.sort(key=lambda r: r[0])
        _write_csv(
            cfg,
            ["l_over_a", "delta_f_tau", "coefficient", "asymptote_coefficient", "offset_minus_ln2"],
            rows,
            "delta_f_tau = tau*(sum-integral); coefficient tends to asymptote_coefficient",
        )

    _dispatch(ctx, body)


if __name__ == "__main__":
    main()

"""Parameter sweeps over (x, theta) grids with deterministic CSV output."""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .amplitude import builtin_spec
from .errors import DomainError, ConvergenceError
from .expansion import DEFAULT_DELTA, watson_sum
from .expintegral import (
    e1_optimal_index,
    e1_partial_sum,
    script_E,
    superasymptotic_estimate,
)
from .oracle import DEFAULT_TOL, reference_value

CSV_COLUMNS = (
    "x",
    "theta_over_pi",
    "n_star",
    "partial_sum_re",
    "partial_sum_im",
    "oracle_re",
    "oracle_im",
    "abs_remainder",
    "log10_abs_remainder",
    "envelope_alg",
    "envelope_sing",
    "log10_scaled_remainder_alg",
    "log10_scaled_remainder_sing",
    "error",
)

E1_CSV_COLUMNS = (
    "x",
    "n_opt",
    "script_e",
    "partial_sum",
    "remainder",
    "first_neglected",
    "superasymptotic_estimate",
    "jeffreys_ratio",
)


@dataclass(frozen=True)
class SweepConfig:
    spec_name: str
    spec_params: dict = field(default_factory=dict)
    r: float = 0.8
    x_values: tuple[float, ...] = (5.0, 10.0, 15.0, 20.0)
    theta_grid: tuple[float, float, int] = (0.0, 0.48, 49)  # in units of pi
    delta: float = DEFAULT_DELTA
    tol: float = DEFAULT_TOL
    output_path: str | None = None

    def validate(self) -> None:
        spec = builtin_spec(self.spec_name, **self.spec_params)
        if not 0.0 < self.r < spec.radius:
            raise DomainError(f"r: must satisfy 0 < r < spec radius {spec.radius}, got {self.r}")
        for x in self.x_values:
            if not x > 0.0:
                raise DomainError(f"x_values: entries must be positive, got {x}")
        start, stop, count = self.theta_grid
        if count < 1:
            raise DomainError(f"theta_grid: count must be >= 1, got {count}")
        lim = 0.5 - self.delta / math.pi
        if not (-lim - 1e-12 <= start <= lim + 1e-12 and -lim - 1e-12 <= stop <= lim + 1e-12):
            raise DomainError(
                f"theta_grid: range must lie within +/-(1/2 - delta/pi) = +/-{lim:g}, "
                f"got [{start}, {stop}]"
            )
        if not self.delta > 0.0:
            raise DomainError(f"delta: must be positive, got {self.delta}")
        if not self.tol > 0.0:
            raise DomainError(f"tol: must be positive, got {self.tol}")

    def theta_values(self) -> list[float]:
        start, stop, count = self.theta_grid
        if count == 1:
            return [start]
        return [start + (stop - start) * i / (count - 1) for i in range(count)]


@dataclass(frozen=True)
class SweepRecord:
    x: float
    theta_over_pi: float
    n_star: int | None = None
    partial_sum_re: float | None = None
    partial_sum_im: float | None = None
    oracle_re: float | None = None
    oracle_im: float | None = None
    abs_remainder: float | None = None
    log10_abs_remainder: float | None = None
    envelope_alg: float | None = None
    envelope_sing: float | None = None
    log10_scaled_remainder_alg: float | None = None
    log10_scaled_remainder_sing: float | None = None
    error: str = ""


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, int):
        return str(v)
    return f"{v:.17g}"


def record_to_row(rec: SweepRecord) -> str:
    vals = [getattr(rec, c) if c != "error" else rec.error for c in CSV_COLUMNS]
    return ",".join(_fmt(v) if not isinstance(v, str) else v for v in vals)


def compute_point(
    spec_name: str,
    spec_params: dict,
    x: float,
    theta_over_pi: float,
    r: float,
    delta: float,
    tol: float,
) -> SweepRecord:
    """One grid point: truncated sum, oracle value, measured remainder, envelopes."""
    spec = builtin_spec(spec_name, **spec_params)
    z = x * cmath.exp(1j * math.pi * theta_over_pi)
    try:
        ws = watson_sum(spec, z, r, delta)
        ref = reference_value(spec, z, tol)
    except (ConvergenceError, DomainError) as exc:
        return SweepRecord(x=x, theta_over_pi=theta_over_pi, error=str(exc).replace(",", ";"))
    remainder = ref.value - ws.value
    abs_rem = abs(remainder)
    log10_rem = math.log10(abs_rem) if abs_rem > 0.0 else None
    scaled_alg = None
    if abs_rem > 0.0:
        scaled_alg = log10_rem + r * x * math.log10(math.e)
    scaled_sing = None
    if spec.singularities and abs_rem > 0.0:
        s = spec.singularities[0]
        psi = abs(s.phi)
        theta_eff = math.pi * theta_over_pi * (1.0 if s.phi < 0 else -1.0)
        scaled_sing = log10_rem + x * s.rho * math.cos(theta_eff - psi) * math.log10(math.e)
    return SweepRecord(
        x=x,
        theta_over_pi=theta_over_pi,
        n_star=ws.n_star,
        partial_sum_re=ws.value.real,
        partial_sum_im=ws.value.imag,
        oracle_re=ref.value.real,
        oracle_im=ref.value.imag,
        abs_remainder=abs_rem,
        log10_abs_remainder=log10_rem,
        envelope_alg=ws.envelope_alg,
        envelope_sing=ws.envelope_sing,
        log10_scaled_remainder_alg=scaled_alg,
        log10_scaled_remainder_sing=scaled_sing,
    )


def _point_args(config: SweepConfig) -> list[tuple]:
    return [
        (config.spec_name, config.spec_params, x, th, config.r, config.delta, config.tol)
        for x in config.x_values
        for th in config.theta_values()
    ]


def run_sweep(config: SweepConfig, jobs: int = 1) -> list[SweepRecord]:
    """Evaluate the grid in deterministic x-major, theta-minor order."""
    config.validate()
    args = _point_args(config)
    if jobs <= 1:
        return [compute_point(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_compute_point_star, args, chunksize=4))


def _compute_point_star(args: tuple) -> SweepRecord:
    return compute_point(*args)


def write_csv(records: Iterable[SweepRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(CSV_COLUMNS) + "\n")
        for rec in records:
            fh.write(record_to_row(rec) + "\n")


def e1_table(x_values: Iterable[float]) -> list[tuple]:
    """Superasymptotics table for the scaled exponential integral."""
    rows = []
    for x in x_values:
        n_opt = e1_optimal_index(x)
        ev = script_E(x)
        ps = e1_partial_sum(x, n_opt)
        rem = ev - ps
        u_n = (-1.0) ** n_opt * math.exp(math.lgamma(n_opt + 1) - n_opt * math.log(x))
        est = superasymptotic_estimate(x) if x >= 1.0 else float("nan")
        rows.append((x, n_opt, ev, ps, rem, u_n, est, rem / u_n))
    return rows


def write_e1_csv(rows: Iterable[tuple], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(E1_CSV_COLUMNS) + "\n")
        for row in rows:
            x, n_opt, ev, ps, rem, u_n, est, ratio = row
            cells = [_fmt(float(x)), str(int(n_opt))] + [
                _fmt(float(v)) for v in (ev, ps, rem, u_n, est, ratio)
            ]
            fh.write(",".join(cells) + "\n")


def preset_configs(name: str) -> list[SweepConfig]:
    """Baked-in sweep presets mirroring the figure grids."""
    if name == "fig1a":
        return [SweepConfig(spec_name="u_chg", spec_params={"a": 0.5, "b": 0.75})]
    if name == "fig1b":
        return [SweepConfig(spec_name="struve_k0")]
    if name == "fig2a":
        return [
            SweepConfig(spec_name="pole", spec_params={"psi": p * math.pi}, x_values=(20.0,))
            for p in (0.1, 0.4)
        ]
    if name == "fig2b":
        return [
            SweepConfig(spec_name="sqrt_branch", spec_params={"psi": p * math.pi}, x_values=(20.0,))
            for p in (0.1, 0.4)
        ]
    if name == "trivial":
        return [SweepConfig(spec_name="c0", theta_grid=(0.0, 0.45, 25))]
    raise DomainError(f"unknown sweep preset {name!r}")

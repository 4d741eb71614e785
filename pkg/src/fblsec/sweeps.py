"""Config-driven parameter sweeps emitting CSV rows.

A sweep config is a single JSON document: one swept variable, a range
(start/stop/step or an explicit list), fixed values for everything
else, the set of leakage methods to evaluate, and optionally a design
mode that solves for the blocklength at every point.  The CSV column
set is fixed per run; outputs that were not requested stay empty rather
than defaulting to zero.  Rows are evaluated and emitted in range
order, and all numeric fields use shortest round-trip decimal
formatting, so identical configs produce byte-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Any

from .channel import ChannelStats
from .design import solve_constrained_closed_form, solve_weighted
from .fbl import FblParams
from .leakage import ail_approx, ail_exact
from .mc import McConfig, ail_mc

__all__ = [
    "CONFIG_SCHEMA_VERSION",
    "PARAM_DEFAULTS",
    "ConfigError",
    "SweepSpec",
    "parse_config",
    "effective_config",
    "run_sweep",
    "rows_to_csv",
]

CONFIG_SCHEMA_VERSION = 1

# Baseline simulation parameters; any of them can be fixed or swept.
PARAM_DEFAULTS: dict[str, float] = {
    "m": 200,
    "n": 400,
    "eps": 1e-3,
    "snr_db": 0.0,
    "hb_gain": 1.0,
    "mu_b": 1.0,
    "mu_e": 0.1,
    "n_max": 1000,
    "phi": 1e-2,
}

_VARIABLES = ("snr_db", "eps", "m", "n", "lambda", "phi")
_METHODS = ("exact", "approx", "mc")
_FIXED_KEYS = ("m", "n", "eps", "snr_db", "hb_gain", "mu_b", "mu_e", "n_max", "phi", "lambda", "gamma_b")
_DESIGN_MODES = ("constrained", "weighted")

COLUMNS = ("ail_exact", "ail_approx", "ail_mc", "mc_stderr", "est", "n_star", "feasible")


class ConfigError(ValueError):
    """A sweep config violates the schema; message names the field."""


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    values: tuple[float, ...]
    fixed: dict[str, float]
    methods: tuple[str, ...]
    design: str | None
    mc_samples: int
    mc_seed: int


def _expect(condition: bool, field: str, message: str) -> None:
    if not condition:
        raise ConfigError(f"{field}: {message}")


def _resolve_range(raw: Any) -> tuple[float, ...]:
    if isinstance(raw, list):
        _expect(len(raw) > 0, "range", "explicit list must be non-empty")
        _expect(all(isinstance(v, (int, float)) for v in raw), "range", "list entries must be numbers")
        return tuple(float(v) for v in raw)
    _expect(isinstance(raw, dict), "range", "must be a list or a start/stop/step object")
    unknown = set(raw) - {"start", "stop", "step"}
    _expect(not unknown, "range", f"unknown keys {sorted(unknown)}")
    try:
        start, stop, step = float(raw["start"]), float(raw["stop"]), float(raw["step"])
    except KeyError as missing:
        raise ConfigError(f"range: missing key {missing.args[0]!r}") from None
    _expect(step > 0.0, "range.step", "must be positive")
    _expect(stop >= start, "range.stop", "must be >= start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return tuple(start + i * step for i in range(count))


def parse_config(doc: Any) -> SweepSpec:
    """Validate a decoded JSON document into a SweepSpec."""
    _expect(isinstance(doc, dict), "config", "top level must be an object")
    unknown = set(doc) - {"schema_version", "variable", "range", "fixed", "methods", "design", "mc_samples", "mc_seed"}
    _expect(not unknown, "config", f"unknown keys {sorted(unknown)}")
    _expect("schema_version" in doc, "schema_version", "is required")
    _expect(doc["schema_version"] == CONFIG_SCHEMA_VERSION, "schema_version",
            f"expected {CONFIG_SCHEMA_VERSION}, got {doc['schema_version']!r}")

    variable = doc.get("variable")
    _expect(variable in _VARIABLES, "variable", f"must be one of {_VARIABLES}, got {variable!r}")
    values = _resolve_range(doc.get("range"))
    if variable in ("m", "n"):
        values = tuple(float(int(round(v))) for v in values)

    fixed_raw = doc.get("fixed", {})
    _expect(isinstance(fixed_raw, dict), "fixed", "must be an object")
    for key, value in fixed_raw.items():
        _expect(key in _FIXED_KEYS, f"fixed.{key}", f"unknown parameter; allowed: {_FIXED_KEYS}")
        _expect(isinstance(value, (int, float)), f"fixed.{key}", "must be a number")
    _expect(variable not in fixed_raw, f"fixed.{variable}", "the swept variable cannot also be fixed")
    fixed = {key: float(value) for key, value in fixed_raw.items()}

    methods_raw = doc.get("methods", ["approx"])
    _expect(isinstance(methods_raw, list) and methods_raw, "methods", "must be a non-empty list")
    for method in methods_raw:
        _expect(method in _METHODS, "methods", f"must be a subset of {_METHODS}, got {method!r}")
    methods = tuple(dict.fromkeys(methods_raw))

    design_raw = doc.get("design")
    design = None
    if design_raw is not None:
        _expect(isinstance(design_raw, dict), "design", "must be an object")
        unknown = set(design_raw) - {"mode"}
        _expect(not unknown, "design", f"unknown keys {sorted(unknown)}")
        design = design_raw.get("mode")
        _expect(design in _DESIGN_MODES, "design.mode", f"must be one of {_DESIGN_MODES}, got {design!r}")
        if design == "weighted":
            _expect("lambda" in fixed or variable == "lambda", "design.mode",
                    "weighted design needs 'lambda' fixed or swept")

    mc_samples = doc.get("mc_samples", 100_000)
    _expect(isinstance(mc_samples, int) and mc_samples >= 1, "mc_samples", "must be a positive integer")
    mc_seed = doc.get("mc_seed", 0)
    _expect(isinstance(mc_seed, int) and mc_seed >= 0, "mc_seed", "must be a non-negative integer")

    return SweepSpec(
        variable=variable,
        values=values,
        fixed=fixed,
        methods=methods,
        design=design,
        mc_samples=mc_samples,
        mc_seed=mc_seed,
    )


def effective_config(spec: SweepSpec) -> dict[str, Any]:
    """Canonical config document that reproduces this spec exactly."""
    doc: dict[str, Any] = {
        "schema_version": CONFIG_SCHEMA_VERSION,
        "variable": spec.variable,
        "range": list(spec.values),
        "fixed": dict(spec.fixed),
        "methods": list(spec.methods),
        "mc_samples": spec.mc_samples,
        "mc_seed": spec.mc_seed,
    }
    if spec.design is not None:
        doc["design"] = {"mode": spec.design}
    return doc


def _row_context(spec: SweepSpec, value: float):
    setting = dict(PARAM_DEFAULTS)
    setting.update(spec.fixed)
    setting[spec.variable] = value
    rho = 10.0 ** (setting["snr_db"] / 10.0)
    stats = ChannelStats(rho=rho, mu_b=setting["mu_b"], mu_e=setting["mu_e"])
    gamma_b = setting.get("gamma_b")
    if gamma_b is None:
        gamma_b = rho * setting["hb_gain"]
    params = FblParams(
        m=int(round(setting["m"])),
        n=int(round(setting["n"])),
        eps=setting["eps"],
        n_max=int(round(setting["n_max"])),
    )
    return setting, params, stats, float(gamma_b)


def run_sweep(spec: SweepSpec) -> tuple[tuple[str, ...], list[dict[str, Any]]]:
    """Evaluate all rows; returns (header, rows) with rows in range order."""
    header = (spec.variable,) + COLUMNS
    rows: list[dict[str, Any]] = []
    for value in spec.values:
        setting, params, stats, gamma_b = _row_context(spec, value)
        row: dict[str, Any] = {key: None for key in COLUMNS}
        row[spec.variable] = int(value) if spec.variable in ("m", "n") else value

        if spec.design is not None:
            if spec.design == "constrained":
                outcome = solve_constrained_closed_form(setting["phi"], gamma_b, stats, params)
            else:
                outcome = solve_weighted(setting["lambda"], gamma_b, stats, params)
            row["n_star"] = outcome.n_star
            row["feasible"] = outcome.feasible
            row["est"] = outcome.est
            eval_params = replace(params, n=outcome.n_star)
            if "approx" in spec.methods:
                row["ail_approx"] = outcome.ail
        else:
            eval_params = params
            row["est"] = (1.0 - params.eps) * params.m / params.n
            if "approx" in spec.methods:
                row["ail_approx"] = ail_approx(eval_params, gamma_b, stats).value

        if "exact" in spec.methods:
            row["ail_exact"] = ail_exact(eval_params, gamma_b, stats).value
        if "mc" in spec.methods:
            estimate = ail_mc(
                eval_params, gamma_b, stats, McConfig(samples=spec.mc_samples, seed=spec.mc_seed)
            )
            row["ail_mc"] = estimate.value
            row["mc_stderr"] = estimate.std_error
        rows.append(row)
    return header, rows


def _format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def rows_to_csv(header: tuple[str, ...], rows: list[dict[str, Any]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_format_cell(row.get(column)) for column in header))
    return "\n".join(lines) + "\n"

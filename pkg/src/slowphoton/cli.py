"""Scenario runner and figure-data front end.

A scenario is a small config (flat ``key = value`` text with ``#``
comments, or an equivalent JSON object) naming a source waveform, a
medium, a time grid, the methods to compute and the outputs to write.
Each run produces one CSV per requested output plus a JSON manifest with
every parameter, the derived EIT numbers and the convergence diagnostics,
so any value in a CSV can be recomputed from the manifest alone.  Output
is deterministic: the same config yields byte-identical files.

Subcommands: ``run <config>``, ``figure <preset> [--out DIR]``,
``eit-params <config>``, ``validate <config>``.  The default output
directory can be overridden with the SLOWPHOTON_OUTDIR environment
variable.  Exit codes: 1 config parse error, 2 validation error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .errors import ConfigError, ConvergenceError, ValidityError
from .media import (
    AbsorberSpec,
    BroadLine,
    EitMedium,
    MatchedLine,
    eit_params,
    fe57_siderite,
)
from .observables import integrated_intensity, pulse_area, thickness_scan
from .propagate import (
    TimeSeries,
    adiabatic_eit,
    analytic_matched,
    analytic_parts_broad,
    analytic_parts_matched,
    approx_broad,
    gaussian_broad,
    phi_plus,
    propagate_numeric,
    total_eit,
)
from .waveforms import PhotonWaveform, TimeGrid, WaveformKind, sample

__all__ = [
    "Scenario",
    "ScanSpec",
    "load_config",
    "validate",
    "run_scenario",
    "figure_preset",
    "PRESET_NAMES",
    "main",
]

TRACE_METHODS = (
    "input",
    "numeric",
    "analytic_matched",
    "analytic_parts",
    "approx_broad",
    "adiabatic_eit",
    "total_eit",
    "gaussian_approx",
    "phi_plus",
    "phi_plus_zero",
)
OUTPUT_KINDS = ("time_trace", "thickness_scan", "eit_params", "areas_and_energies")


@dataclass(frozen=True)
class ScanSpec:
    kind: str
    t_min: float
    t_max: float
    n_points: int

    def values(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.n_points)


@dataclass
class Scenario:
    """A complete run description, as parsed from a config file."""

    name: str
    reference_rate_label: str
    source: PhotonWaveform
    medium: Optional[AbsorberSpec]
    grid: TimeGrid
    methods: list[str]
    outputs: list[str]
    scan: Optional[ScanSpec] = None


# ---------------------------------------------------------------------------
# config parsing
# ---------------------------------------------------------------------------

def _parse_flat_text(text: str) -> dict:
    data: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        data[key] = value
    return data


def _flatten(obj, prefix="") -> dict:
    flat = {}
    for key, value in obj.items():
        full = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, full + "."))
        else:
            flat[full] = value
    return flat


def _as_list(value) -> list[str]:
    if isinstance(value, str):
        return [tok.strip() for tok in value.split(",") if tok.strip()]
    if isinstance(value, (list, tuple)):
        return [str(tok) for tok in value]
    raise ConfigError(f"expected a list or comma-separated string, got {value!r}")


def _as_float(flat, key) -> float:
    try:
        return float(flat[key])
    except KeyError:
        raise ConfigError(f"missing required key {key!r}") from None
    except (TypeError, ValueError):
        raise ConfigError(f"key {key!r}: not a number: {flat[key]!r}") from None


def _as_int(flat, key) -> int:
    value = _as_float(flat, key)
    if value != int(value):
        raise ConfigError(f"key {key!r}: expected an integer, got {value}")
    return int(value)


def _build_medium(flat) -> Optional[AbsorberSpec]:
    kind = str(flat.get("medium.kind", "none")).strip().lower()
    try:
        if kind == "none":
            return None
        if kind == "matched":
            return MatchedLine(
                gamma=_as_float(flat, "medium.gamma"),
                thickness=_as_float(flat, "medium.thickness"),
            )
        if kind == "broad":
            return BroadLine(
                gamma_total=_as_float(flat, "medium.gamma_total"),
                thickness=_as_float(flat, "medium.thickness"),
            )
        if kind == "eit":
            return EitMedium(
                gamma_total=_as_float(flat, "medium.gamma_total"),
                gamma_m=_as_float(flat, "medium.gamma_m"),
                omega=_as_float(flat, "medium.omega"),
                thickness=_as_float(flat, "medium.thickness"),
            )
    except ValueError as exc:
        raise ConfigError(f"medium: {exc}") from None
    raise ConfigError(f"unknown medium.kind {kind!r}")


def load_config(path) -> Scenario:
    """Parse a scenario from flat key=value text or a JSON object."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise ConfigError("JSON config must be an object")
        flat = _flatten(obj)
    else:
        flat = _parse_flat_text(text)

    try:
        kind = WaveformKind(str(flat.get("source.kind", "")).strip().lower())
    except ValueError:
        raise ConfigError(
            f"unknown source.kind {flat.get('source.kind')!r}; expected one of "
            f"{[k.value for k in WaveformKind]}"
        ) from None
    try:
        source = PhotonWaveform(kind, _as_float(flat, "source.delta_ph"))
    except ValueError as exc:
        raise ConfigError(f"source: {exc}") from None

    try:
        grid = TimeGrid(
            t_start=_as_float(flat, "grid.t_start"),
            t_end=_as_float(flat, "grid.t_end"),
            n_points=_as_int(flat, "grid.n_points"),
        )
    except ValueError as exc:
        raise ConfigError(f"grid: {exc}") from None

    scan = None
    if "scan.kind" in flat:
        scan = ScanSpec(
            kind=str(flat["scan.kind"]).strip().lower(),
            t_min=_as_float(flat, "scan.t_min"),
            t_max=_as_float(flat, "scan.t_max"),
            n_points=_as_int(flat, "scan.n_points"),
        )

    return Scenario(
        name=str(flat.get("name", Path(path).stem)),
        reference_rate_label=str(flat.get("reference_rate", "gamma_ref")),
        source=source,
        medium=_build_medium(flat),
        grid=grid,
        methods=_as_list(flat.get("methods", "")),
        outputs=_as_list(flat.get("outputs", "time_trace")),
        scan=scan,
    )


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate(sc: Scenario) -> tuple[list[str], list[str]]:
    """Check every method/output precondition without running anything.

    Returns (errors, warnings); empty errors means the scenario can run.
    """
    errors: list[str] = []
    warnings: list[str] = []
    med = sc.medium
    kind = sc.source.kind
    d = sc.source.delta_ph

    needs_trace = any(o in ("time_trace", "areas_and_energies") for o in sc.outputs)
    if needs_trace and not sc.methods:
        errors.append("methods must be nonempty for time_trace outputs")
    for m in sc.methods:
        if m not in TRACE_METHODS:
            errors.append(f"unknown method {m!r}; valid: {', '.join(TRACE_METHODS)}")
    for o in sc.outputs:
        if o not in OUTPUT_KINDS:
            errors.append(f"unknown output {o!r}; valid: {', '.join(OUTPUT_KINDS)}")

    def need_medium(m, cls, what):
        if not isinstance(med, cls):
            errors.append(f"method {m!r} requires a {what} medium")
            return False
        return True

    def check_matched_condition(m):
        if not math.isclose(med.gamma, d, rel_tol=1e-12):
            errors.append(
                f"method {m!r} assumes the matched condition gamma == delta_ph "
                f"(got gamma={med.gamma}, delta_ph={d})"
            )

    for m in sc.methods:
        if m == "analytic_matched":
            if need_medium(m, MatchedLine, "matched-line"):
                check_matched_condition(m)
                if kind is not WaveformKind.EXPONENTIAL_CAUSAL:
                    errors.append("analytic_matched applies to the causal exponential source")
        elif m == "analytic_parts":
            if kind not in (
                WaveformKind.SYMMETRIC_PART,
                WaveformKind.ANTISYMMETRIC_PART,
                WaveformKind.EXPONENTIAL_CAUSAL,
            ):
                errors.append("analytic_parts applies to the causal, symmetric or antisymmetric source")
            if isinstance(med, BroadLine):
                if not med.gamma_total > d:
                    errors.append(
                        "analytic_parts through a broad line requires Gamma > delta_ph "
                        f"(got Gamma={med.gamma_total}, delta_ph={d})"
                    )
            elif isinstance(med, MatchedLine):
                check_matched_condition(m)
            else:
                errors.append("analytic_parts requires a matched-line or broad-line medium")
        elif m == "approx_broad":
            if need_medium(m, BroadLine, "broad-line"):
                if not med.gamma_total > d:
                    errors.append("approx_broad requires Gamma > delta_ph")
            if kind is not WaveformKind.EXPONENTIAL_CAUSAL:
                errors.append("approx_broad applies to the causal exponential source")
        elif m in ("adiabatic_eit", "total_eit", "phi_plus", "phi_plus_zero"):
            if need_medium(m, EitMedium, "EIT"):
                if med.omega**2 < med.gamma_m * med.gamma_total:
                    errors.append(
                        f"method {m!r}: adiabatic expansion requires "
                        "Omega**2 >= gamma_m*Gamma (the transparency hole must be open); "
                        f"got Omega**2={med.omega**2:g} < {med.gamma_m * med.gamma_total:g}"
                    )
                if m == "adiabatic_eit" and kind is not WaveformKind.EXPONENTIAL_CAUSAL:
                    errors.append("adiabatic_eit applies to the causal exponential source")
                if m == "total_eit":
                    if kind is WaveformKind.GAUSSIAN:
                        errors.append("total_eit has no Gaussian decomposition; use numeric")
                    elif d > med.gamma_total * (1 + 1e-12):
                        errors.append("total_eit requires delta_ph <= Gamma")
        elif m == "gaussian_approx":
            if need_medium(m, BroadLine, "broad-line"):
                ft = (d / med.gamma_total) ** 2 * med.thickness
                if ft >= 1.0:
                    errors.append(f"gaussian_approx requires f*T < 1, got f*T = {ft:g}")
            if kind is not WaveformKind.GAUSSIAN:
                errors.append("gaussian_approx applies to the Gaussian source")

    if "thickness_scan" in sc.outputs:
        if sc.scan is None:
            errors.append("thickness_scan output requires scan.* keys")
        elif sc.scan.kind not in ("matched", "broad"):
            errors.append(f"unknown scan.kind {sc.scan.kind!r}")
        elif sc.scan.kind == "broad":
            if not isinstance(med, (BroadLine, EitMedium)):
                errors.append("broad thickness scan needs a broad-line medium for Gamma")
            elif not med.linewidth > d:
                errors.append("broad thickness scan requires Gamma > delta_ph")
    if "eit_params" in sc.outputs and not isinstance(med, EitMedium):
        errors.append("eit_params output requires an EIT medium")

    # grid advice
    tau = sc.grid.times()
    if sc.grid.t_start < 0 < sc.grid.t_end and min(abs(tau)) > 1e-12 * max(1.0, sc.grid.spacing):
        warnings.append("tau = 0 is not a grid sample; jump values will be offset")
    if isinstance(med, EitMedium) and med.omega**2 >= med.gamma_m * med.gamma_total:
        p = eit_params(med)
        needed = p.t_d + 2.0 / p.delta_eff
        if sc.grid.t_end < needed:
            warnings.append(
                f"grid ends at {sc.grid.t_end:g} before the delayed envelope "
                f"(group delay t_d = {p.t_d:.4g}, edge width 2/delta_eff); "
                f"extend t_end beyond {needed:.4g}"
            )
    tail = math.exp(-d * max(sc.grid.t_end, 0.0))
    if tail > 1e-3 and kind is not WaveformKind.GAUSSIAN:
        warnings.append(
            f"grid truncates the envelope tail (exp(-delta_ph*t_end) = {tail:.2g})"
        )
    return errors, warnings


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------

def _compute_trace(sc: Scenario, method: str) -> TimeSeries:
    w, med, grid = sc.source, sc.medium, sc.grid
    tau = grid.times()
    if method == "input":
        return sample(w, grid)
    if method == "numeric":
        return propagate_numeric(w, med, grid)
    if method == "analytic_matched":
        amp = analytic_matched(w.delta_ph, med.thickness, tau)
        return TimeSeries(grid, amp, "analytic_matched", w, med)
    if method == "analytic_parts":
        if isinstance(med, MatchedLine):
            b_s, b_a = analytic_parts_matched(w.delta_ph, med.thickness, tau)
        else:
            b_s, b_a = analytic_parts_broad(w.delta_ph, med.gamma_total, med.thickness, tau)
        if sc.source.kind is WaveformKind.SYMMETRIC_PART:
            amp = b_s
        elif sc.source.kind is WaveformKind.ANTISYMMETRIC_PART:
            amp = b_a
        else:
            amp = b_s + b_a
        return TimeSeries(grid, amp, "analytic_parts", w, med)
    if method == "approx_broad":
        amp = approx_broad(w.delta_ph, med.gamma_total, med.alpha0_l, tau)
        return TimeSeries(grid, amp, "approx_broad", w, med)
    if method == "adiabatic_eit":
        amp = np.asarray(adiabatic_eit(w, med, tau))
        return TimeSeries(grid, amp, "adiabatic_eit", w, med)
    if method == "total_eit":
        return total_eit(w, med, grid)
    if method == "gaussian_approx":
        amp = gaussian_broad(w.delta_ph, med.gamma_total, med.thickness, tau)
        return TimeSeries(grid, amp, "gaussian_approx", w, med)
    if method in ("phi_plus", "phi_plus_zero"):
        d = 0.0 if method == "phi_plus_zero" else w.delta_ph
        amp = np.asarray(phi_plus(d, eit_params(med), tau), dtype=complex)
        return TimeSeries(grid, amp, "phi_plus", w, med, extras={"delta_ph": d})
    raise ValueError(f"unknown method {method!r}")


def _fmt(x: float) -> str:
    """Shortest round-trip decimal for a float."""
    return repr(float(x))


def _write_csv(path: Path, header: list[str], rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n", newline="\n")


def _medium_dict(med: Optional[AbsorberSpec]) -> dict:
    if med is None:
        return {"kind": "none"}
    out = {"kind": type(med).__name__, **dataclasses.asdict(med)}
    return out


def run_scenario(sc: Scenario, out_dir) -> dict:
    """Execute a validated scenario; returns the manifest dictionary."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest: dict = {
        "tool": {"name": "slowphoton", "version": __version__},
        "scenario": {
            "name": sc.name,
            "reference_rate": sc.reference_rate_label,
            "source": {"kind": sc.source.kind.value, "delta_ph": sc.source.delta_ph},
            "medium": _medium_dict(sc.medium),
            "grid": dataclasses.asdict(sc.grid),
            "methods": list(sc.methods),
            "outputs": list(sc.outputs),
        },
        "derived": {},
        "convergence": {},
        "files": {},
    }
    if isinstance(sc.medium, EitMedium):
        p = eit_params(sc.medium)
        manifest["derived"]["eit_params"] = dataclasses.asdict(p)
        manifest["derived"]["delta_eff_over_delta_ph"] = p.delta_eff / sc.source.delta_ph
        manifest["derived"]["t_d_over_tau_life"] = p.t_d / sc.source.tau_life
    if isinstance(sc.medium, (BroadLine, EitMedium)):
        g, d = sc.medium.linewidth, sc.source.delta_ph
        if g > d:
            manifest["derived"]["t_plus"] = sc.medium.alpha0_l / (g + d)
            manifest["derived"]["t_minus"] = sc.medium.alpha0_l / (g - d)

    traces: dict[str, TimeSeries] = {}
    if any(o in ("time_trace", "areas_and_energies") for o in sc.outputs):
        for method in sc.methods:
            ts = _compute_trace(sc, method)
            traces[method] = ts
            if "convergence" in ts.extras:
                manifest["convergence"][method] = ts.extras["convergence"]

    for output in sc.outputs:
        if output == "time_trace":
            path = out_dir / f"{sc.name}_trace.csv"
            header = ["tau"]
            for m in sc.methods:
                header += [f"re_{m}", f"im_{m}", f"abs_{m}"]
            tau = sc.grid.times()
            cols = [tau]
            for m in sc.methods:
                amp = traces[m].amplitude
                cols += [amp.real, amp.imag, np.abs(amp)]
            _write_csv(path, header, zip(*cols))
            manifest["files"]["time_trace"] = path.name
        elif output == "thickness_scan":
            scan = thickness_scan(
                sc.scan.kind,
                sc.source.delta_ph,
                sc.medium.linewidth if sc.medium is not None else None,
                sc.scan.values(),
            )
            path = out_dir / f"{sc.name}_scan.csv"
            header = ["thickness", "u_s", "u_a", "u_total", "beer_reference"]
            _write_csv(
                path,
                header,
                zip(scan.thickness_values, scan.u_s, scan.u_a, scan.u_total, scan.beer_reference),
            )
            manifest["files"]["thickness_scan"] = path.name
            manifest["derived"]["scan_normalization"] = scan.normalization
        elif output == "areas_and_energies":
            path = out_dir / f"{sc.name}_areas.csv"
            header = ["method", "area_re", "area_im", "area_abs", "energy"]
            lines = [",".join(header)]
            for m in sc.methods:
                area = pulse_area(traces[m])
                energy = integrated_intensity(traces[m])
                lines.append(
                    ",".join(
                        [m, _fmt(area.real), _fmt(area.imag), _fmt(abs(area)), _fmt(energy)]
                    )
                )
            path.write_text("\n".join(lines) + "\n", newline="\n")
            manifest["files"]["areas_and_energies"] = path.name
        elif output == "eit_params":
            path = out_dir / f"{sc.name}_eit_params.json"
            path.write_text(
                json.dumps(manifest["derived"]["eit_params"], indent=2, sort_keys=True)
                + "\n"
            )
            manifest["files"]["eit_params"] = path.name

    manifest_path = out_dir / f"{sc.name}_manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    manifest["files"]["manifest"] = manifest_path.name
    return manifest


# ---------------------------------------------------------------------------
# figure presets
# ---------------------------------------------------------------------------

PRESET_NAMES = ("fig2", "fig3a", "fig3b", "fig5", "fig6a", "fig6b", "fig7", "fe57")

_EIT_EXAMPLE = dict(gamma_total=10.0, gamma_m=1.0, omega=20.0, thickness=30.0)


def figure_preset(name: str) -> list[Scenario]:
    """Scenarios reproducing the published figure panels (one per CSV)."""
    eit = EitMedium(**_EIT_EXAMPLE)
    eit_grid = TimeGrid(-2.0, 15.0, 1701)
    if name == "fig2":
        med = MatchedLine(gamma=1.0, thickness=10.0)
        grid = TimeGrid(-4.0, 10.0, 1401)
        return [
            Scenario(
                name=f"fig2_{label}",
                reference_rate_label="delta_ph",
                source=PhotonWaveform(kind, 1.0),
                medium=med,
                grid=grid,
                methods=["input", "analytic_parts", "numeric"],
                outputs=["time_trace"],
            )
            for label, kind in (
                ("symmetric", WaveformKind.SYMMETRIC_PART),
                ("antisymmetric", WaveformKind.ANTISYMMETRIC_PART),
            )
        ]
    if name == "fig3a":
        med = BroadLine(gamma_total=10.0, thickness=10.0)
        grid = TimeGrid(-0.5, 2.5, 1501)
        return [
            Scenario(
                name="fig3a_total",
                reference_rate_label="delta_ph",
                source=PhotonWaveform(WaveformKind.EXPONENTIAL_CAUSAL, 1.0),
                medium=med,
                grid=grid,
                methods=["input", "numeric", "approx_broad"],
                outputs=["time_trace"],
            ),
            Scenario(
                name="fig3a_antisymmetric",
                reference_rate_label="delta_ph",
                source=PhotonWaveform(WaveformKind.ANTISYMMETRIC_PART, 1.0),
                medium=med,
                grid=grid,
                methods=["input", "analytic_parts", "numeric"],
                outputs=["time_trace"],
            ),
        ]
    if name == "fig3b":
        return [
            Scenario(
                name="fig3b",
                reference_rate_label="delta_ph",
                source=PhotonWaveform(WaveformKind.EXPONENTIAL_CAUSAL, 1.0),
                medium=BroadLine(gamma_total=10.0, thickness=10.0),
                grid=TimeGrid(-1.0, 1.0, 11),
                methods=[],
                outputs=["thickness_scan"],
                scan=ScanSpec(kind="broad", t_min=0.0, t_max=10.0, n_points=41),
            )
        ]
    if name == "fig5":
        p = eit_params(eit)
        return [
            Scenario(
                name="fig5",
                reference_rate_label="gamma_m",
                source=PhotonWaveform(WaveformKind.EXPONENTIAL_CAUSAL, 0.1 * p.delta_eff),
                medium=eit,
                grid=TimeGrid(-0.5, 2.5, 1201),
                methods=["phi_plus", "phi_plus_zero"],
                outputs=["time_trace"],
            )
        ]
    if name in ("fig6a", "fig6b"):
        delta = 1.0 if name == "fig6a" else 10.0
        return [
            Scenario(
                name=name,
                reference_rate_label="gamma_m",
                source=PhotonWaveform(WaveformKind.EXPONENTIAL_CAUSAL, delta),
                medium=eit,
                grid=eit_grid,
                methods=["input", "numeric", "total_eit", "adiabatic_eit"],
                outputs=["time_trace", "eit_params", "areas_and_energies"],
            )
        ]
    if name == "fig7":
        return [
            Scenario(
                name=f"fig7_{label}",
                reference_rate_label="gamma_m",
                source=PhotonWaveform(kind, 1.0),
                medium=eit,
                grid=eit_grid,
                methods=["input", "numeric", "total_eit"],
                outputs=["time_trace"],
            )
            for label, kind in (
                ("symmetric", WaveformKind.SYMMETRIC_PART),
                ("antisymmetric", WaveformKind.ANTISYMMETRIC_PART),
            )
        ]
    if name == "fe57":
        return [
            Scenario(
                name="fe57",
                reference_rate_label="gamma_m",
                source=PhotonWaveform(WaveformKind.EXPONENTIAL_CAUSAL, 1.0),
                medium=fe57_siderite(),
                grid=eit_grid,
                methods=["input", "numeric", "total_eit"],
                outputs=["time_trace", "eit_params"],
            )
        ]
    raise ValueError(
        f"unknown preset {name!r}; valid presets: {', '.join(PRESET_NAMES)}"
    )


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _default_outdir() -> str:
    return os.environ.get("SLOWPHOTON_OUTDIR", ".")


def _report(errors, warnings, file=sys.stdout):
    for e in errors:
        print(f"error: {e}", file=file)
    for w in warnings:
        print(f"warning: {w}", file=file)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="slowphoton",
        description="Single-photon transmission through resonant and EIT absorbers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario config")
    p_run.add_argument("config")
    p_run.add_argument("--out", default=None, help="output directory")

    p_fig = sub.add_parser("figure", help="run a named figure preset")
    p_fig.add_argument("preset", help=f"one of: {', '.join(PRESET_NAMES)}, or 'all'")
    p_fig.add_argument("--out", default=None, help="output directory")

    p_eit = sub.add_parser("eit-params", help="print EIT filter numbers for a config")
    p_eit.add_argument("config")

    p_val = sub.add_parser("validate", help="validate a config without running")
    p_val.add_argument("config")

    args = parser.parse_args(argv)
    out_dir = getattr(args, "out", None) or _default_outdir()

    if args.command in ("run", "eit-params", "validate"):
        try:
            sc = load_config(args.config)
        except (ConfigError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1

    if args.command == "validate":
        errors, warnings = validate(sc)
        _report(errors, warnings)
        if errors:
            return 2
        print("ok")
        return 0

    if args.command == "eit-params":
        if not isinstance(sc.medium, EitMedium):
            print("error: eit-params requires an EIT medium", file=sys.stderr)
            return 2
        try:
            p = eit_params(sc.medium)
        except ValidityError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(json.dumps(dataclasses.asdict(p), indent=2, sort_keys=True))
        return 0

    if args.command == "run":
        errors, warnings = validate(sc)
        _report(errors, warnings, file=sys.stderr)
        if errors:
            return 2
        try:
            manifest = run_scenario(sc, out_dir)
        except ConvergenceError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        print(json.dumps(manifest["files"], indent=2, sort_keys=True))
        return 0

    if args.command == "figure":
        names = PRESET_NAMES if args.preset == "all" else (args.preset,)
        try:
            scenario_lists = [figure_preset(n) for n in names]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        written = {}
        for scenarios in scenario_lists:
            for sc in scenarios:
                errors, warnings = validate(sc)
                _report(errors, warnings, file=sys.stderr)
                if errors:
                    return 2
                try:
                    manifest = run_scenario(sc, out_dir)
                except ConvergenceError as exc:
                    print(f"error: {exc}", file=sys.stderr)
                    return 3
                written[sc.name] = manifest["files"]
        print(json.dumps(written, indent=2, sort_keys=True))
        return 0

    raise AssertionError(args.command)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

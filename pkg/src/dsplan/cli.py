"""Command-line front end.

Four commands: ``risk`` (evaluate one plan), ``optimize`` (find the optimum
plan), ``reproduce`` (regenerate a published table), ``validate`` (run the
invariant suite).  Configuration comes from a versioned JSON file; results
go to CSV with locale-independent formatting, 4-decimal risk columns
matching the published tables, and full-precision values alongside.

Exit codes: 0 success, 1 invariant violation (validate), 2 invalid
configuration, 3 numerical stability cap exceeded.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import click

from .bsp_ref import bsp_bayes_risk_mc
from .mc_oracle import MCConfig, simulate_dsp_risk
from .model import AcceptanceCost, CostModel, HybridPlan, Type1Plan
from .risk_hybrid import bayes_risk_hybrid
from .risk_type1 import StabilityCapError, bayes_risk_type1
from .search import GridSpec, optimize_hybrid, optimize_type1
from .specfun import GammaPrior
from .tables import TABLES
from . import validate as validate_mod

EXIT_INVARIANT = 1
EXIT_CONFIG = 2
EXIT_STABILITY = 3

CONFIG_VERSION = 1


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    scheme: str
    prior: GammaPrior
    costs: CostModel
    g: AcceptanceCost
    grid: GridSpec
    mc: MCConfig
    plan: Type1Plan | HybridPlan | None


def _require(mapping, key, where):
    if key not in mapping:
        raise ConfigError(f"missing '{key}' in {where}")
    return mapping[key]


def _parse_zeta(raw):
    if raw == "inf":
        return math.inf
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return float(raw)
    raise ConfigError(f"zeta must be a number or \"inf\", got {raw!r}")


def parse_config(text: str, seed_override: int | None = None) -> RunConfig:
    """Parse and validate a JSON run configuration (schema version 1)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    if doc.get("version") != CONFIG_VERSION:
        raise ConfigError(f"config version must be {CONFIG_VERSION}")

    scheme = _require(doc, "scheme", "config")
    if scheme not in ("type1", "hybrid"):
        raise ConfigError(f"scheme must be 'type1' or 'hybrid', got {scheme!r}")

    try:
        p = _require(doc, "prior", "config")
        prior = GammaPrior(float(_require(p, "a", "prior")), float(_require(p, "b", "prior")))
        c = _require(doc, "costs", "config")
        costs = CostModel(
            c_sample=float(_require(c, "c_sample", "costs")),
            c_time=float(_require(c, "c_time", "costs")),
            c_reject=float(_require(c, "c_reject", "costs")),
            salvage=float(c.get("salvage", 0.0)),
        )
        terms = _require(doc, "acceptance_cost", "config")
        g = AcceptanceCost(tuple((float(t[0]), float(t[1])) for t in terms))
        gd = doc.get("grid", {})
        grid = GridSpec(
            zeta_step=float(gd.get("zeta_step", 0.0125)),
            tau_step=float(gd.get("tau_step", 0.0125)),
            zeta_cap=float(gd.get("zeta_cap", 6.0)),
            alpha=float(gd.get("alpha", 0.01)),
        )
        md = doc.get("mc", {})
        mc = MCConfig(
            trials=int(md.get("trials", 1_000_000)),
            seed=int(seed_override if seed_override is not None else md.get("seed", 20240801)),
            batch=int(md.get("batch", 65_536)),
        )
        plan = None
        if "plan" in doc:
            pd = doc["plan"]
            n = int(_require(pd, "n", "plan"))
            tau = float(_require(pd, "tau", "plan"))
            zeta = _parse_zeta(_require(pd, "zeta", "plan"))
            if scheme == "hybrid":
                plan = HybridPlan(n, int(_require(pd, "r", "plan")), tau, zeta)
            else:
                plan = Type1Plan(n, tau, zeta)
    except ConfigError:
        raise
    except (TypeError, ValueError, KeyError, IndexError) as exc:
        raise ConfigError(f"invalid configuration: {exc}") from exc
    return RunConfig(scheme=scheme, prior=prior, costs=costs, g=g, grid=grid, mc=mc, plan=plan)


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return repr(x)
    return str(x)


def _fmt4(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return f"{x:.4f}"


def _write_csv(rows: list[dict], header: list[str], out: str | None) -> None:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for row in rows:
        w.writerow({k: ("" if row.get(k) is None else row[k]) for k in header})
    data = buf.getvalue()
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(data)
    else:
        click.echo(data, nl=False)


def _load_config(path: str | None, seed: int | None) -> RunConfig:
    if not path:
        raise ConfigError("--config is required for this command")
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    return parse_config(text, seed_override=seed)


def _plan_fields(plan) -> dict:
    return {
        "n": plan.n,
        "r": plan.r if isinstance(plan, HybridPlan) else "",
        "tau": _fmt4(plan.tau),
        "zeta": _fmt4(plan.zeta),
    }


@click.group()
def main() -> None:
    """Decision-theoretic sampling plans for censored exponential life tests."""


def _config_options(fn):
    fn = click.option("--config", "config_path", type=click.Path(), help="JSON run configuration.")(fn)
    fn = click.option("--out", "out_path", type=click.Path(), default=None, help="Output CSV path (stdout when omitted).")(fn)
    fn = click.option("--seed", type=int, default=None, help="Override the Monte Carlo seed.")(fn)
    fn = click.option("--quick", is_flag=True, help="Reduced-trial Monte Carlo.")(fn)
    return fn


RISK_HEADER = [
    "scheme", "n", "r", "tau", "zeta",
    "sampling_term", "salvage_term", "time_term", "acceptance_term",
    "threshold_term", "risk", "risk_4dp", "mc_mean", "mc_std_error", "mc_trials",
]


@main.command("risk")
@_config_options
@click.option("--mc", "with_mc", is_flag=True, help="Append a Monte Carlo estimate.")
def cmd_risk(config_path, out_path, seed, quick, with_mc) -> None:
    """Evaluate the closed-form Bayes risk of the configured plan."""
    try:
        cfg = _load_config(config_path, seed)
        if cfg.plan is None:
            raise ConfigError("the risk command needs a 'plan' section")
        if cfg.scheme == "hybrid":
            bd = bayes_risk_hybrid(cfg.plan, cfg.costs, cfg.g, cfg.prior)
        else:
            bd = bayes_risk_type1(cfg.plan, cfg.costs, cfg.g, cfg.prior)
    except StabilityCapError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_STABILITY)
    except (ConfigError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)

    row = {"scheme": cfg.scheme, **_plan_fields(cfg.plan)}
    row.update(
        sampling_term=_fmt(bd.sampling_term),
        salvage_term=_fmt(bd.salvage_term),
        time_term=_fmt(bd.time_term),
        acceptance_term=_fmt(bd.acceptance_term),
        threshold_term=_fmt(bd.threshold_term),
        risk=_fmt(bd.total),
        risk_4dp=_fmt4(bd.total),
    )
    if with_mc:
        mc = cfg.mc if not quick else MCConfig(trials=min(cfg.mc.trials, 50_000), seed=cfg.mc.seed, batch=cfg.mc.batch)
        est = simulate_dsp_risk(cfg.plan, cfg.costs, cfg.g, cfg.prior, mc)
        row.update(mc_mean=_fmt(est.mean), mc_std_error=_fmt(est.std_error), mc_trials=est.trials)
    _write_csv([row], RISK_HEADER, out_path)


OPT_HEADER = ["kind", "scheme", "n", "r", "tau", "zeta", "risk", "risk_4dp", "notes"]


@main.command("optimize")
@_config_options
@click.option("--scan-log", "scan_log_path", type=click.Path(), default=None,
              help="Also write the per-(n[,r]) scan minima to this CSV.")
def cmd_optimize(config_path, out_path, seed, quick, scan_log_path) -> None:
    """Run the bounded grid search and report the optimum plan."""
    try:
        cfg = _load_config(config_path, seed)
        if cfg.scheme == "hybrid":
            report = optimize_hybrid(cfg.costs, cfg.g, cfg.prior, cfg.grid)
        else:
            report = optimize_type1(cfg.costs, cfg.g, cfg.prior, cfg.grid)
    except StabilityCapError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_STABILITY)
    except (ConfigError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)

    rows = [{
        "kind": "optimum", "scheme": cfg.scheme, **_plan_fields(report.plan),
        "risk": _fmt(report.risk), "risk_4dp": _fmt4(report.risk),
        "notes": "; ".join(report.notes),
    }]
    for e in report.runner_ups:
        rows.append({
            "kind": "runner_up", "scheme": cfg.scheme, "n": e.n,
            "r": "" if e.r is None else e.r, "tau": _fmt4(e.tau),
            "zeta": _fmt4(e.zeta), "risk": _fmt(e.risk), "risk_4dp": _fmt4(e.risk),
            "notes": "",
        })
    _write_csv(rows, OPT_HEADER, out_path)

    if scan_log_path:
        log_rows = [
            {
                "scheme": cfg.scheme, "n": e.n, "r": "" if e.r is None else e.r,
                "tau": _fmt4(e.tau), "zeta": _fmt4(e.zeta),
                "risk": _fmt(e.risk), "risk_4dp": _fmt4(e.risk),
            }
            for e in report.scan_log
        ]
        _write_csv(log_rows, ["scheme", "n", "r", "tau", "zeta", "risk", "risk_4dp"], scan_log_path)


REPRO_HEADER = [
    "table", "row", "label", "varying", "scheme", "source",
    "n", "r", "tau", "zeta", "risk", "risk_4dp", "paper_risk", "risk_delta",
]


@main.command("reproduce")
@click.argument("table_id")
@_config_options
def cmd_reproduce(table_id, config_path, out_path, seed, quick) -> None:
    """Regenerate every DSP row of a published table (T1, T2-type1,
    T2-hybrid, T3..T19); published comparison rows are echoed with
    source=paper."""
    spec = TABLES.get(table_id)
    if spec is None:
        click.echo(
            f"error: unknown table id {table_id!r}; known: {', '.join(TABLES)}", err=True
        )
        sys.exit(EXIT_CONFIG)
    rows = []
    try:
        for i, r in enumerate(spec.rows):
            if spec.scheme == "hybrid":
                rep = optimize_hybrid(r.costs, r.g, r.prior)
            else:
                rep = optimize_type1(r.costs, r.g, r.prior)
            rows.append({
                "table": spec.table_id, "row": i, "label": r.label,
                "varying": r.varying, "scheme": spec.scheme, "source": "dsp",
                **_plan_fields(rep.plan),
                "risk": _fmt(rep.risk), "risk_4dp": _fmt4(rep.risk),
                "paper_risk": _fmt4(r.paper_risk),
                "risk_delta": _fmt(rep.risk - r.paper_risk),
            })
            for comp in r.comparisons:
                plan = comp.plan or ()
                has_r = spec.scheme == "hybrid" and len(plan) == 4
                rows.append({
                    "table": spec.table_id, "row": i, "label": f"{r.label} [{comp.label}]",
                    "varying": r.varying, "scheme": spec.scheme, "source": "paper",
                    "n": plan[0] if plan else "",
                    "r": plan[1] if has_r else "",
                    "tau": _fmt4(plan[-2]) if len(plan) >= 2 else "",
                    "zeta": _fmt4(plan[-1]) if len(plan) >= 2 else "",
                    "risk": "", "risk_4dp": _fmt4(comp.risk),
                    "paper_risk": _fmt4(comp.risk), "risk_delta": "",
                })
    except StabilityCapError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_STABILITY)
    _write_csv(rows, REPRO_HEADER, out_path)


@main.command("validate")
@_config_options
@click.option("--corrupt", is_flag=True, hidden=True,
              help="Negative control: perturb one constant so the suite must fail.")
def cmd_validate(config_path, out_path, seed, quick, corrupt) -> None:
    """Run the full invariant suite; nonzero exit on any failure."""
    results = validate_mod.run_all(
        quick=quick, seed=seed if seed is not None else 20240801, corrupt=corrupt
    )
    lines = [r.line() for r in results]
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    if not all(r.passed for r in results):
        sys.exit(EXIT_INVARIANT)


if __name__ == "__main__":
    main()

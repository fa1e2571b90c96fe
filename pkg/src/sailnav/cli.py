"""Command-line front end.

Every subcommand resolves its settings as defaults < JSON config file <
flags, and echoes the result under "resolved_config" in its JSON output.
Exit codes: 0 success, 1 a reported check failed, 2 usage or domain error.
"""

import argparse
import json
import math
import sys

from . import io
from .analysis.bounds import compute_bounds
from .analysis.diagnostics import convergence_study
from .analysis.montecarlo import estimate_from_samples, tack_tail_from_batch
from .dynamics import ModelParams, PolarState
from .engine import SimConfig, run, run_batch
from .plotting import emit_plot
from .scenarios import AdversarialParams, run_tack_chase_scenario, run_ninety_degree_loop
from .strategies import FeedbackAStar, ImpulseA
from .wind import load_schedule

DEFAULT_SEED = 20240601

MODEL_DEFAULTS = {
    "sigma": 1.0,
    "v": 1.0,
    "c": 0.0,
    "eta": 0.1,
    "dt": None,
    "horizon": None,
    "seed": DEFAULT_SEED,
    "strategy": "impulse-a",
    "alpha": math.pi / 8,
    "r0": 1.0,
    "damping_n": None,
}

START_DEFAULTS = {"r": 1.0, "theta": math.pi / 2, "tack": 1}

DEFAULTS = {
    "simulate": {**MODEL_DEFAULTS, **START_DEFAULTS, "out": None, "geographic": False, "wind_file": None},
    "montecarlo": {**MODEL_DEFAULTS, **START_DEFAULTS, "n": 1000, "workers": 1, "tail_max": 10, "out": None},
    "bounds": {k: MODEL_DEFAULTS[k] for k in ("sigma", "v", "c", "eta", "alpha", "r0")} | {"r": None},
    "scenario": {
        "kind": "chase", "v": 1.0, "c": 0.0, "eta": 0.1, "alpha": math.pi / 8, "r0": 1.0, "beta": 0.1,
        "alpha0": None, "r1": None, "margin": 0.1, "r": 1.0, "cycles": 10, "dt": 1e-3, "shifts": True,
        "out": None, "geographic": False,
    },
    "convergence": {"sigma": 1.0, "v": 1.0, "dts": [1e-2, 1e-3, 1e-4], "n": 128, "t_end": 1.0,
                    "seed": DEFAULT_SEED},
    "plot": {"input": None, "frame": "rotating", "out": None, "eta": 0.0},
}


# settings that change how or where a command runs but not its results;
# they are left out of the logged configuration so outputs stay comparable
EXECUTION_KEYS = ("workers", "out")


def logged_config(cfg: dict) -> dict:
    return {k: v for k, v in cfg.items() if k not in EXECUTION_KEYS}


class UsageError(Exception):
    pass


def _model_flags(p, keys):
    S = argparse.SUPPRESS
    flag_info = {
        "sigma": (float, "wind variability, rad per sqrt(time)"),
        "v": (float, "boat speed"),
        "c": (float, "time lost per tack"),
        "eta": (float, "target radius"),
        "dt": (float, "time step"),
        "horizon": (float, "give up after this time"),
        "seed": (int, "master seed"),
        "alpha": (float, "strategy A tacking margin (rad)"),
        "r0": (float, "strategy A outer radius"),
        "damping_n": (int, "damping parameter n for A*"),
        "r": (float, "start radius"),
        "theta": (float, "start angle (rad)"),
        "tack": (int, "start tack, +1 starboard or -1 port"),
        "n": (int, "number of paths"),
        "workers": (int, "worker processes"),
        "tail_max": (int, "largest i in the tack tail"),
        "beta": (float, "adversary shift size (rad)"),
        "alpha0": (float, "adversarial start angle"),
        "r1": (float, "adversary trigger radius"),
        "margin": (float, "overshoot margin of the 90-degree loop"),
        "cycles": (int, "number of cycles"),
        "t_end": (float, "end time of the convergence study"),
    }
    for k in keys:
        typ, hlp = flag_info[k]
        p.add_argument("--" + k.replace("_", "-"), dest=k, type=typ, default=S, help=hlp)


def build_parser() -> argparse.ArgumentParser:
    S = argparse.SUPPRESS
    parser = argparse.ArgumentParser(prog="sailnav", description="Sailboat navigation under random wind.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", default=None, help="JSON file with snake_case keys")

    p = sub.add_parser("simulate", help="simulate one path")
    common(p)
    _model_flags(p, ["sigma", "v", "c", "eta", "dt", "horizon", "seed", "alpha", "r0", "damping_n", "r", "theta",
                     "tack"])
    p.add_argument("--strategy", choices=["impulse-a", "a-star"], default=S)
    p.add_argument("--out", default=S, help="trajectory CSV")
    p.add_argument("--geographic", action="store_true", default=S, help="add xi1, xi2 columns")
    p.add_argument("--wind-file", dest="wind_file", default=S, help="JSON wind schedule")

    p = sub.add_parser("montecarlo", help="Monte Carlo batch with checks")
    common(p)
    _model_flags(p, ["sigma", "v", "c", "eta", "dt", "horizon", "seed", "alpha", "r0", "damping_n", "r", "theta",
                     "tack", "n", "workers", "tail_max"])
    p.add_argument("--strategy", choices=["impulse-a", "a-star"], default=S)
    p.add_argument("--out", default=S, help="results JSON (default stdout)")

    p = sub.add_parser("bounds", help="analytic constants and bounds")
    common(p)
    _model_flags(p, ["sigma", "v", "c", "eta", "alpha", "r0", "r"])

    p = sub.add_parser("scenario", help="adversarial wind scenarios")
    common(p)
    p.add_argument("--kind", choices=["chase", "ninety"], default=S)
    _model_flags(p, ["v", "c", "eta", "alpha", "r0", "beta", "alpha0", "r1", "margin", "r", "cycles", "dt"])
    p.add_argument("--shifts", action=argparse.BooleanOptionalAction, default=S)
    p.add_argument("--out", default=S, help="trajectory CSV")
    p.add_argument("--geographic", action="store_true", default=S)

    p = sub.add_parser("convergence", help="strong convergence against the closed forms")
    common(p)
    _model_flags(p, ["sigma", "v", "n", "t_end", "seed"])
    p.add_argument("--dts", type=float, nargs="+", default=S)

    p = sub.add_parser("plot", help="SVG of a trajectory CSV")
    common(p)
    p.add_argument("--input", required=False, default=S)
    p.add_argument("--frame", choices=["rotating", "geographic"], default=S)
    p.add_argument("--out", default=S)
    _model_flags(p, ["eta"])
    return parser


def resolve(command: str, ns: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS[command])
    path = getattr(ns, "config", None)
    if path:
        try:
            with open(path) as fh:
                file_cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
        if not isinstance(file_cfg, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = sorted(set(file_cfg) - set(cfg))
        if unknown:
            raise UsageError(f"unknown config keys for {command}: {unknown}")
        cfg.update(file_cfg)
    for k, v in vars(ns).items():
        if k in cfg:
            cfg[k] = v
    return cfg


def _model(cfg) -> ModelParams:
    return ModelParams(cfg["sigma"], cfg["v"], cfg["c"], cfg["eta"])


def _strategy(cfg):
    if cfg["strategy"] == "impulse-a":
        return ImpulseA(cfg["alpha"], cfg["r0"])
    if cfg["strategy"] == "a-star":
        return FeedbackAStar()
    raise ValueError(f"unknown strategy {cfg['strategy']!r}")


def _sim_config(cfg, record=False, wind=None) -> SimConfig:
    return SimConfig(_model(cfg), _strategy(cfg), dt=cfg["dt"], horizon=cfg["horizon"], seed=cfg["seed"],
                     record_trajectory=record, damping_n=cfg["damping_n"], wind=wind)


def _check(name, passed, detail=""):
    return {"name": name, "pass": bool(passed), "detail": detail}


def _emit(text: str, out=None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_simulate(cfg):
    wind = load_schedule(cfg["wind_file"]) if cfg["wind_file"] else None
    sc = _sim_config(cfg, record=bool(cfg["out"]), wind=wind)
    res = run(sc, (PolarState(cfg["r"], cfg["theta"]), cfg["tack"]))
    if cfg["out"]:
        io.write_trajectory_csv(cfg["out"], res.trajectory, geographic=cfg["geographic"])
    out = {
        "tau": res.tau,
        "tacks": res.tacks,
        "payoff": res.payoff,
        "terminated": res.terminated,
        "stopping_times": [{"t": t, "kind": k} for t, k in res.stopping_times],
        "e1_first_index": res.e1_first_index,
        "dt": res.dt,
        "warnings": list(res.warnings),
        "resolved_config": logged_config(cfg),
    }
    _emit(io.dumps(out))
    return 0


def cmd_montecarlo(cfg):
    if cfg["n"] < 2:
        raise ValueError("--n must be >= 2")
    sc = _sim_config(cfg)
    model = sc.model
    start = (PolarState(cfg["r"], cfg["theta"]), cfg["tack"])
    batch = run_batch(sc, start, cfg["n"], workers=cfg["workers"])
    est = estimate_from_samples(batch.payoff, batch.hit)
    tau_est = estimate_from_samples(batch.tau, batch.hit)
    m_est = estimate_from_samples(batch.tacks.astype(float), batch.hit)
    checks = [_check("timeouts_at_most_0.1pct", est.healthy, f"{est.timeout_count} of {batch.n}")]
    bounds = None
    if cfg["strategy"] == "impulse-a":
        if model.sigma > 0 and model.eta < cfg["r"] <= cfg["r0"]:
            b = compute_bounds(model, cfg["alpha"], cfg["r0"], cfg["r"])
            bounds = b.to_dict()
            checks.append(_check("E_tau_below_2K_over_p0", tau_est.mean <= b.E_tau_bound + 3 * tau_est.stderr))
            checks.append(_check("E_M_below_2_over_p0_minus_1", m_est.mean <= b.E_M_bound + 3 * m_est.stderr))
            checks.append(_check("payoff_below_V_bound", est.mean <= b.V_c_eta_bound + 3 * est.stderr))
            tail = tack_tail_from_batch(batch, cfg["tail_max"])
            ok = all(pt.prob <= (1 - b.p0) ** (pt.i // 2) + 3 * pt.stderr for pt in tail if pt.i >= 2)
            checks.append(_check("geometric_tack_tail", ok))
    else:
        bound = math.sqrt(2) * (cfg["r"] - model.eta) / model.v
        dt = batch.dt
        tmax = float(batch.tau[batch.hit].max()) if batch.hit.any() else math.nan
        checks.append(_check("astar_tau_below_sqrt2_bound", tmax <= bound + 2 * dt,
                             f"max tau {tmax!r}, bound {bound + 2 * dt!r}"))
        lo = float(batch.dr_min.min()) / (model.v * dt)
        hi = float(batch.dr_max.max()) / (model.v * dt)
        checks.append(_check("astar_radial_step_bounds", lo >= -1 - 1e-12 and hi <= -1 / math.sqrt(2) + 1e-12,
                             f"dr/(v dt) in [{lo!r}, {hi!r}]"))
        bounds = {"astar_tau_bound": bound}
    out = {
        "params": {"sigma": model.sigma, "v": model.v, "c": model.c, "eta": model.eta},
        "strategy": cfg["strategy"],
        "estimate": {"mean": est.mean, "stderr": est.stderr, "n": est.n, "timeouts": est.timeout_count,
                     "ci95": list(est.ci95)},
        "tau_estimate": tau_est.to_dict(),
        "tacks_estimate": m_est.to_dict(),
        "bounds": bounds,
        "checks": checks,
        "resolved_config": logged_config(cfg),
    }
    _emit(io.dumps(out), cfg["out"])
    return 0 if all(c["pass"] for c in checks) else 1


def cmd_bounds(cfg):
    r = cfg["r"] if cfg["r"] is not None else cfg["r0"]
    b = compute_bounds(ModelParams(cfg["sigma"], cfg["v"], cfg["c"], cfg["eta"]), cfg["alpha"], cfg["r0"], r)
    checks = [_check("c1c2_below_one", b.c1c2 < 1, f"c1c2 = {b.c1c2!r}"),
              _check("c1c2_within_claimed_3_over_4", b.c1c2_within_claim,
                     f"c1c2 = {b.c1c2!r}; informational, only c1c2 < 1 is needed")]
    _emit(io.dumps({"bounds": b.to_dict(), "checks": checks, "resolved_config": logged_config(cfg)}))
    return 0 if b.c1c2 < 1 else 1


def cmd_scenario(cfg):
    model = ModelParams(0.0, cfg["v"], cfg["c"], cfg["eta"])
    if cfg["kind"] == "chase":
        adv = AdversarialParams(cfg["r0"], cfg["alpha"], cfg["beta"], cfg["alpha0"], cfg["r1"])
        res, rep = run_tack_chase_scenario(model, adv, cfg["cycles"], dt=cfg["dt"])
        checks = [_check("target_never_hit", not rep.hit),
                  _check("confined", rep.confined, f"r in [{rep.min_r!r}, {rep.max_r!r}]"),
                  _check("tacks_at_least_cycles", rep.tacks >= cfg["cycles"])]
    else:
        res, rep = run_ninety_degree_loop(model, cfg["margin"], cfg["cycles"], r_start=cfg["r"], dt=cfg["dt"],
                                          shifts=cfg["shifts"])
        if cfg["shifts"]:
            checks = [_check("target_never_hit", not rep.hit),
                      _check("no_net_progress", rep.confined),
                      _check("tacks_equal_cycles", rep.tacks == cfg["cycles"])]
        else:
            checks = [_check("target_reached_without_shifts", rep.hit)]
    if cfg["out"]:
        io.write_trajectory_csv(cfg["out"], res.trajectory, geographic=cfg["geographic"])
    out = {"report": rep.to_dict(), "terminated": res.terminated, "checks": checks, "resolved_config": logged_config(cfg)}
    _emit(io.dumps(out))
    return 0 if all(c["pass"] for c in checks) else 1


def cmd_convergence(cfg):
    model = ModelParams(cfg["sigma"], cfg["v"])
    rep = convergence_study(model, cfg["dts"], cfg["n"], T=cfg["t_end"], seed=cfg["seed"])
    checks = [_check("errors_decrease", rep.monotone or model.sigma == 0),
              _check("radial_closed_form_1e-12", rep.radial_max_error <= 1e-12)]
    if model.sigma > 0:
        checks.append(_check("strong_order_at_least_0.4", rep.slope >= 0.4, f"slope {rep.slope!r}"))
    out = {"dts": rep.dts, "rms_errors": rep.rms_errors, "slope": rep.slope,
           "radial_max_error": rep.radial_max_error, "checks": checks, "resolved_config": logged_config(cfg)}
    _emit(io.dumps(out))
    return 0 if all(c["pass"] for c in checks) else 1


def cmd_plot(cfg):
    if not cfg["input"] or not cfg["out"]:
        raise UsageError("plot needs --input and --out")
    emit_plot(cfg["input"], cfg["frame"], cfg["out"], eta=cfg["eta"])
    return 0


COMMANDS = {
    "simulate": cmd_simulate,
    "montecarlo": cmd_montecarlo,
    "bounds": cmd_bounds,
    "scenario": cmd_scenario,
    "convergence": cmd_convergence,
    "plot": cmd_plot,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve(ns.command, ns)
        return COMMANDS[ns.command](cfg)
    except (UsageError, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"sailnav {ns.command}: error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"sailnav {ns.command}: check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: compute values, run verifications, list identities.

Scalars are given as ``p/q`` rationals (exact mode) or decimals (numeric
mode); bare integers fit either. Mixing rationals and decimals is refused.
Output is one JSON document per line.

Exit codes: 0 pass, 1 identity failure, 2 usage error, 3 precondition violation.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import identities as ident
from . import sweeps
from .contour import ContourSpec, hl_G_integral_check, qw_integral, qw_integral_check
from .errors import PreconditionError
from .identities import IDENTITIES, EXACT, NUMERIC, IdentityReport
from .partitions import format_partition, parse_partition, strip_zeros
from .scalars import to_json_scalar
from .spin_hl import hl_F, hl_G, hl_G_star, stable_F, stable_F_star, stable_F_symmetrization
from .spin_qw import qw_F, qw_F_star

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

COMPUTE_FUNCTIONS = ("qw", "qw-dual", "hl-f", "hl-g", "hl-gstar", "stable-f", "stable-fstar",
                     "qw-integral")

STRUCTURAL = {
    "ybe": "unfused Yang-Baxter equation, all occupations <= 4 (exact)",
    "fused-ybe": "continued fused Yang-Baxter equation, index triples <= 2 (exact)",
    "fusion-routes": "fused weights: brute force = recursion = closed form, J <= 3 (exact)",
    "gauge": "gauge relation between weights and dual weights, unfused and continued (exact)",
    "route-agreement": "spin q-Whittaker: branching = lattice on the (3,3) box (exact)",
    "symmetry-stability": "spin q-Whittaker: symmetric in x and stable under x = -s (exact)",
    "s0-reduction": "spin q-Whittaker at s = 0 equals classical q-Whittaker (exact)",
    "stable-routes": "stable spin HL: lattice = symmetrization on the (3,3) box (exact)",
    "qw-integral": "contour integral of spin q-Whittaker against the exact value (numeric)",
    "hl-g-integral": "contour integral of spin HL G against the exact value (numeric)",
}
ALL_CHECKS = {**IDENTITIES, **STRUCTURAL}
EXACT_CHECKS = {"dual-cauchy", "pieri-vertical", "ybe", "fused-ybe", "fusion-routes", "gauge",
                "route-agreement", "symmetry-stability", "s0-reduction", "stable-routes"}

# default numbers of variables per check: (first list, second list)
DEFAULT_COUNTS = {
    "qw-cauchy": (2, 2), "q-gauss": (1, 1), "dual-cauchy": (2, 2), "hl-cauchy": (1, 1),
    "stable-hl-cauchy": (2, 2), "pieri-horizontal": (2, 1), "pieri-vertical": (2, 1),
    "ybe": (2, 0), "route-agreement": (3, 0), "symmetry-stability": (3, 0),
    "s0-reduction": (3, 0), "stable-routes": (3, 0), "qw-integral": (2, 0),
    "hl-g-integral": (2, 0),
}


class UsageError(ValueError):
    pass


# --- parsing ---------------------------------------------------------------

def parse_scalar(text: str):
    """Return ``(value, kind)`` with kind ``rational``, ``decimal`` or ``integer``."""
    t = text.strip()
    if not t:
        raise UsageError("empty scalar")
    try:
        if "/" in t:
            return Fraction(t), "rational"
        if any(c in t for c in ".eE"):
            return float(t), "decimal"
        return Fraction(int(t)), "integer"
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse scalar {text!r}") from exc


def parse_list(text: Optional[str]):
    if text is None:
        return None
    if not text.strip():
        return []
    return [parse_scalar(t) for t in text.split(",")]


@dataclass
class RunConfig:
    command: str
    target: str
    q: object = None
    s: object = None
    u: Optional[list] = None
    v: Optional[list] = None
    x: Optional[list] = None
    y: Optional[list] = None
    lam: Optional[tuple] = None
    mu: Optional[tuple] = None
    nu: Optional[tuple] = None
    m: Optional[int] = None
    n: Optional[int] = None
    mode: str = EXACT
    cutoff: Optional[int] = None
    tol: float = ident.DEFAULT_TOL
    trials: int = 1
    seed: int = 0
    jobs: int = 1
    radius: float = 1.0
    nodes: int = 64
    out: Optional[str] = None
    kinds: List[str] = field(default_factory=list)


def _scalar_value(value, mode):
    return float(value) if mode == NUMERIC else value


def config_from_args(args) -> RunConfig:
    kinds = []
    scalars = {}
    for name in ("q", "s"):
        text = getattr(args, name)
        if text is not None:
            val, kind = parse_scalar(text)
            scalars[name] = val
            kinds.append(kind)
    lists = {}
    for name in ("u", "v", "x", "y"):
        parsed = parse_list(getattr(args, name))
        if parsed is not None:
            lists[name] = [val for val, _ in parsed]
            kinds.extend(kind for _, kind in parsed)
    if "rational" in kinds and "decimal" in kinds:
        raise UsageError("mixing p/q rationals and decimals is not allowed; pick one mode")
    mode = args.mode
    if mode is None:
        mode = NUMERIC if "decimal" in kinds else EXACT
    if mode == EXACT and "decimal" in kinds:
        raise UsageError("exact mode needs p/q rationals or integers, not decimals")
    partitions = {}
    for name, attr in (("lam", "lambda_"), ("mu", "mu"), ("nu", "nu")):
        text = getattr(args, attr, None)
        if text is not None:
            try:
                partitions[name] = parse_partition(text)
            except ValueError as exc:
                raise UsageError(f"cannot parse partition {text!r}: {exc}") from exc
    seed = args.seed
    if seed is None:
        env = os.environ.get("SPINFN_SEED")
        try:
            seed = int(env) if env else 0
        except ValueError as exc:
            raise UsageError(f"SPINFN_SEED must be an integer, got {env!r}") from exc
    cfg = RunConfig(
        command=args.command, target=getattr(args, "target", "") or "",
        q=_scalar_value(scalars["q"], mode) if "q" in scalars else None,
        s=_scalar_value(scalars["s"], mode) if "s" in scalars else None,
        mode=mode, cutoff=args.cutoff, tol=args.tol, trials=args.trials, seed=seed,
        jobs=args.jobs, radius=args.radius, nodes=args.nodes, out=args.out, m=args.m, n=args.n,
        kinds=kinds, **partitions)
    for name, vals in lists.items():
        setattr(cfg, name, [_scalar_value(v, mode) for v in vals])
    if cfg.trials < 1 or cfg.jobs < 1:
        raise UsageError("--trials and --jobs must be positive")
    return cfg


# --- compute ---------------------------------------------------------------

def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def _agree(values: Sequence, mode: str, tol: float) -> bool:
    if len(values) < 2:
        return True
    first = values[0]
    if mode == EXACT and all(isinstance(v, (int, Fraction)) for v in values):
        return all(v == first for v in values)
    scale = max(abs(complex(first)), 1e-300)
    return all(abs(complex(v) - complex(first)) / scale <= tol for v in values)


def compute(cfg: RunConfig) -> dict:
    fn = cfg.target
    q, s = cfg.q, cfg.s
    lam = cfg.lam if cfg.lam is not None else ()
    # the empty q-Whittaker polynomial is 1 whatever q and s are
    if not (fn in ("qw", "qw-dual") and not strip_zeros(lam)):
        _need(q, "--q")
        _need(s, "--s")
    routes: Dict[str, object] = {}
    if fn in ("qw", "qw-dual", "qw-integral"):
        xs = cfg.x if cfg.x is not None else []
        mu = cfg.mu or ()
        inputs = {"x": xs, "lambda": lam, "mu": mu}
        if fn == "qw":
            for route in ("branching", "lattice"):
                routes[route] = qw_F(q, s, xs, lam, mu, route=route)
        elif fn == "qw-dual":
            for route in ("lattice", "normalization", "branching"):
                routes[route] = qw_F_star(q, s, xs, lam, mu, route=route)
        else:
            if mu:
                raise UsageError("qw-integral has no skew form; drop --mu")
            spec = ContourSpec(cfg.radius, cfg.nodes)
            routes["integral"] = qw_integral(q, s, xs, lam, spec)
            routes["branching"] = qw_F(q, s, xs, lam)
            inputs.update(radius=cfg.radius, nodes=cfg.nodes)
    elif fn in ("hl-f", "stable-f"):
        us = cfg.u if cfg.u is not None else []
        if fn == "hl-f":
            mu = cfg.mu if cfg.mu is not None else ()
            inputs = {"u": us, "lambda": lam, "mu": mu}
            routes["lattice"] = hl_F(q, s, us, lam, mu)
        else:
            inputs = {"u": us, "lambda": lam}
            routes["lattice"] = stable_F(q, s, us, lam)
            if len(set(us)) == len(us):
                routes["symmetrization"] = stable_F_symmetrization(q, s, us, lam)
    elif fn in ("hl-g", "hl-gstar", "stable-fstar"):
        vs = cfg.v if cfg.v is not None else []
        mu = cfg.mu
        inputs = {"v": vs, "lambda": lam, "mu": mu}
        if fn == "hl-g":
            routes["lattice"] = hl_G(q, s, vs, lam, mu)
        elif fn == "hl-gstar":
            for route in ("dual-lattice", "normalization"):
                routes[route] = hl_G_star(q, s, vs, lam, mu, route=route)
        else:
            for route in ("dual-lattice", "normalization"):
                routes[route] = stable_F_star(q, s, vs, lam, mu or (), route=route)
    else:
        raise UsageError(f"unknown function {fn!r}; choose from {', '.join(COMPUTE_FUNCTIONS)}")
    values = list(routes.values())
    tol = cfg.tol if fn != "qw-integral" else max(cfg.tol, 1e-8)
    return {
        "function": fn,
        "inputs": _json_inputs({"q": q, "s": s, **inputs}),
        "mode": cfg.mode,
        "value": _json_value(values[0]),
        "routes": {name: _json_value(val) for name, val in routes.items()},
        "agreement": _agree(values, cfg.mode, tol),
    }


def _json_value(value):
    if isinstance(value, (int, Fraction)):
        return to_json_scalar(Fraction(value))
    z = complex(value)
    return z.real if z.imag == 0 else to_json_scalar(z)


def _json_inputs(inputs: dict) -> dict:
    out = {}
    for key, val in inputs.items():
        if val is None:
            out[key] = None
        elif type(val) is int:
            out[key] = val
        elif isinstance(val, tuple):
            out[key] = format_partition(val)
        elif isinstance(val, list):
            out[key] = [_json_value(v) for v in val]
        elif isinstance(val, (int, float, Fraction)):
            out[key] = _json_value(val)
        else:
            out[key] = val
    return out


# --- verify ----------------------------------------------------------------

class _Draw:
    """Fixed values from the command line, random rationals otherwise."""

    def __init__(self, cfg: RunConfig, rng: random.Random, name: str):
        self.cfg = cfg
        self.rng = rng
        self.exact = name in EXACT_CHECKS
        counts = DEFAULT_COUNTS.get(name, (1, 1))
        self.first = cfg.m if cfg.m is not None else counts[0]
        self.second = cfg.n if cfg.n is not None else counts[1]

    def _random(self, small: bool):
        val = ident.random_rational(self.rng)
        if not self.exact:
            val = val / (4 if small else 2)
        return val

    def scalar(self, name: str):
        fixed = getattr(self.cfg, name)
        return fixed if fixed is not None else self._random(False)

    def variables(self, name: str, count: int):
        fixed = getattr(self.cfg, name)
        if fixed is not None:
            return list(fixed)
        vals: list = []
        while len(vals) < count:
            val = self._random(True)
            if val not in vals:
                vals.append(val)
        return vals


def _check_mode(name: str, cfg: RunConfig) -> None:
    if name in EXACT_CHECKS and cfg.mode == NUMERIC:
        raise UsageError(f"{name} is an exact check; give p/q rationals, not decimals")


def _cutoff(cfg: RunConfig, default: int) -> int:
    return cfg.cutoff if cfg.cutoff is not None else default


def _hl_pair(draw: _Draw, cfg: RunConfig, q, s, m: int, n: int):
    # rejection sampling keeps the convergence condition
    for _ in range(1000):
        us = draw.variables("u", m)
        vs = draw.variables("v", n)
        try:
            ident._hl_condition("hl-cauchy", q, s, us, vs)
            return us, vs
        except PreconditionError:
            if cfg.u is not None and cfg.v is not None:
                raise
    raise PreconditionError("hl-cauchy: no admissible random point found")


def run_trial(name: str, cfg: RunConfig, index: int) -> List[IdentityReport]:
    rng = random.Random(f"{cfg.seed}:{name}:{index}")
    draw = _Draw(cfg, rng, name)
    seed = cfg.seed
    q, s = draw.scalar("q"), draw.scalar("s")
    m, n = draw.first, draw.second
    mu, nu = cfg.mu or (), cfg.nu or ()
    tol = cfg.tol
    if name == "qw-cauchy":
        return [ident.verify_qw_cauchy_skew(q, s, draw.variables("x", m), draw.variables("y", n),
                                            mu, nu, _cutoff(cfg, 30), tol, seed=seed)]
    if name == "q-gauss":
        x = draw.variables("x", 1)[0]
        y = draw.variables("y", 1)[0]
        return [ident.verify_q_gauss(q, s, x, y, _cutoff(cfg, 30), tol, seed=seed)]
    if name == "dual-cauchy":
        us, xs = draw.variables("u", m), draw.variables("x", n)
        return [ident.verify_dual_cauchy(q, s, us, xs, mu, nu, variant, seed=seed)
                for variant in ("standard", "alternative")]
    if name == "hl-cauchy":
        us, vs = _hl_pair(draw, cfg, q, s, m, n)
        hl_mu = cfg.mu if cfg.mu is not None else ()
        hl_nu = cfg.nu if cfg.nu is not None else (0,) * (len(hl_mu) + len(us))
        return [ident.verify_hl_cauchy_skew(q, s, us, vs, hl_mu, hl_nu, _cutoff(cfg, 40), tol,
                                            seed=seed)]
    if name == "stable-hl-cauchy":
        us, vs = _hl_pair(draw, cfg, q, s, m, n)
        return [ident.verify_stable_hl_cauchy(q, s, us, vs, mu, nu, _cutoff(cfg, 40), tol, seed=seed)]
    if name == "pieri-horizontal":
        xs = draw.variables("x", m)
        y = draw.variables("y", 1)[0]
        return [ident.verify_pieri_horizontal(q, s, xs, y, nu, _cutoff(cfg, 30), tol, seed=seed)]
    if name == "pieri-vertical":
        xs = draw.variables("x", m)
        u = draw.variables("u", 1)[0]
        return [ident.verify_pieri_vertical(q, s, xs, u, mu, seed=seed)]
    if name == "ybe":
        u1, u2 = draw.variables("u", 2)[:2]
        return [sweeps.ybe_sweep(q, s, u1, u2, seed=seed)]
    if name == "fused-ybe":
        x = draw.variables("x", 1)[0]
        y = draw.variables("y", 1)[0]
        return [sweeps.fused_ybe_sweep(q, s, x, y, seed=seed)]
    if name == "fusion-routes":
        return [sweeps.fusion_routes_sweep(q, s, draw.variables("u", 1)[0], seed=seed)]
    if name == "gauge":
        return [sweeps.gauge_sweep(q, s, draw.variables("u", 1)[0], draw.variables("x", 1)[0],
                                   seed=seed)]
    if name == "route-agreement":
        return [sweeps.route_agreement_sweep(q, s, draw.variables("x", m), seed=seed)]
    if name == "symmetry-stability":
        return [sweeps.symmetry_stability_sweep(q, s, draw.variables("x", m), seed=seed)]
    if name == "s0-reduction":
        return [sweeps.s0_reduction_sweep(q, draw.variables("x", m), seed=seed)]
    if name == "stable-routes":
        us = draw.variables("u", m)
        while cfg.u is None and s in us:
            us = draw.variables("u", m)
        return [sweeps.stable_routes_sweep(q, s, us, seed=seed)]
    if name == "qw-integral":
        lam = cfg.lam if cfg.lam is not None else (2, 1)
        xs = draw.variables("x", max(m, len(strip_zeros(lam))))
        return [qw_integral_check(q, s, xs, lam, ContourSpec(cfg.radius, cfg.nodes),
                                  max(tol, 1e-8), seed=seed)]
    if name == "hl-g-integral":
        lam = cfg.lam if cfg.lam is not None else (1, 0)
        reports = []
        for form in ("full", "reduced"):
            reports.append(hl_G_integral_check(q, s, draw.variables("v", m), lam,
                                               ContourSpec(cfg.radius, cfg.nodes), form,
                                               max(tol, 1e-8), seed=seed))
        return reports
    raise UsageError(f"unknown check {name!r}; see list-identities")


def _trial_job(args):
    name, cfg, index = args
    return run_trial(name, cfg, index)


def verify(cfg: RunConfig) -> List[dict]:
    name = cfg.target
    if name not in ALL_CHECKS:
        raise UsageError(f"unknown check {name!r}; see list-identities")
    _check_mode(name, cfg)
    jobs = [(name, cfg, i) for i in range(cfg.trials)]
    if cfg.jobs > 1 and cfg.trials > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_trial_job, jobs))
    else:
        results = [_trial_job(j) for j in jobs]
    docs = []
    for index, reports in enumerate(results):
        for report in reports:
            doc = report.to_dict()
            doc["trial"] = index
            docs.append(doc)
    return docs


SELFTEST = (
    ("ybe", {}),
    ("fused-ybe", {}),
    ("fusion-routes", {}),
    ("gauge", {}),
    ("dual-cauchy", {"m": 1, "n": 1}),
    ("pieri-vertical", {"m": 1}),
    ("q-gauss", {"q": 0.3, "s": 0.2, "x": [0.1], "y": [0.1], "mode": NUMERIC}),
    ("qw-cauchy", {"q": 0.3, "s": 0.2, "x": [0.1], "y": [0.1], "mode": NUMERIC}),
    ("qw-integral", {"q": 0.3, "s": 0.2, "x": [0.1], "lam": (1,), "mode": NUMERIC}),
)


def selftest(cfg: RunConfig) -> List[dict]:
    docs = []
    for name, overrides in SELFTEST:
        sub = replace(cfg, command="verify", target=name, trials=1, jobs=1, q=None, s=None,
                      u=None, v=None, x=None, y=None, lam=None, mu=None, nu=None, m=None, n=None,
                      mode=EXACT, cutoff=None)
        docs.extend(verify(replace(sub, **overrides)))
    return docs


# --- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for flag in ("q", "s"):
        common.add_argument(f"--{flag}", help=f"scalar {flag} as p/q or decimal")
    for flag in ("u", "v", "x", "y"):
        common.add_argument(f"--{flag}", help="comma-separated variables ('' for none)")
    common.add_argument("--lambda", dest="lambda_", help="partition, e.g. 2,1 ('' for empty)")
    common.add_argument("--mu", help="inner partition")
    common.add_argument("--nu", help="second partition")
    common.add_argument("--m", type=int, help="number of variables in the first list")
    common.add_argument("--n", type=int, help="number of variables in the second list")
    common.add_argument("--mode", choices=(EXACT, NUMERIC), help="default: inferred from inputs")
    common.add_argument("--cutoff", type=int, help="truncation for infinite sums")
    common.add_argument("--tol", type=float, default=ident.DEFAULT_TOL, help="relative tolerance")
    common.add_argument("--trials", type=int, default=1, help="random parameter points")
    common.add_argument("--seed", type=int, help="default: $SPINFN_SEED or 0")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for trials")
    common.add_argument("--radius", type=float, default=1.0, help="contour radius")
    common.add_argument("--nodes", type=int, default=64, help="quadrature nodes per circle")
    common.add_argument("--out", help="write JSON lines here instead of stdout")

    parser = argparse.ArgumentParser(prog="spinfn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("compute", parents=[common], help="evaluate a function by every route")
    p.add_argument("target", metavar="FUNCTION", choices=COMPUTE_FUNCTIONS)
    p = sub.add_parser("verify", parents=[common], help="check an identity at parameter points")
    p.add_argument("target", metavar="NAME")
    sub.add_parser("list-identities", parents=[common], help="names accepted by verify")
    sub.add_parser("selftest", parents=[common], help="quick battery of checks")
    return parser


def _emit(docs: Sequence[dict], out: Optional[str]) -> None:
    text = "".join(json.dumps(d, sort_keys=True) + "\n" for d in docs)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        if cfg.command == "list-identities":
            docs = [{"name": k, "description": v, "mode": EXACT if k in EXACT_CHECKS else NUMERIC}
                    for k, v in sorted(ALL_CHECKS.items())]
            _emit(docs, cfg.out)
            return EXIT_PASS
        if cfg.command == "compute":
            doc = compute(cfg)
            _emit([doc], cfg.out)
            return EXIT_PASS if doc["agreement"] else EXIT_FAIL
        docs = verify(cfg) if cfg.command == "verify" else selftest(cfg)
        _emit(docs, cfg.out)
        return EXIT_PASS if all(d["pass"] for d in docs) else EXIT_FAIL
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"spinfn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ZeroDivisionError) as exc:
        print(json.dumps({"error": "precondition", "message": str(exc)}), file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(json.dumps({"error": "precondition", "message": str(exc)}), file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes are a stable CI contract: 0 success/pass, 1 verify-fail (or
a campaign with violations), 2 structural input error, 3 parse error,
4 hypothesis violation, 64 usage error. Reports are canonical JSON on
stdout; --format table gives a loose human view never meant for
parsing. An empty solution set is a success: absence is an answer.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

import numpy as np

from .characters import enumerate_characters
from .equations import (
    battery_report,
    companion_cosine,
    residual_central_dalembert,
    residual_dalembert,
    residual_integral_dalembert,
    residual_sine_addition,
    residual_spherical,
    residual_vanvleck,
    residual_wilson,
)
from .errors import HypothesisError, ParseError, StructuralError, UsageError
from .fixtures import write_fixtures
from .jsonio import (
    canonical_json,
    load_function,
    load_measure,
    load_morphism,
    load_semigroup,
    morphism_to_json,
    render_table,
)
from .measures import DEFAULT_TOL, ToleranceConfig, check_function
from .semigroups import MorphismKind, center, enumerate_involutive_morphisms
from .solvers import (
    match_solution_sets,
    newton_oracle,
    solve_central_dalembert,
    solve_dalembert,
    solve_spherical,
    solve_vanvleck,
)
from .stability import CampaignConfig, fuzz_campaign

EQUATION_TAGS = (
    "vanvleck",
    "dalembert_variant",
    "integral_dalembert",
    "corollary33",
    "spherical",
    "sine_addition",
    "wilson_variant",
)

ORACLE_MAX_ORDER = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would sys.exit(2); we want 64
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="feqlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, *flags: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        if "eq" in flags:
            p.add_argument("--eq", required=True, choices=EQUATION_TAGS)
        if "sg" in flags:
            p.add_argument("--sg", required=True, help="semigroup JSON path")
        if "sigma" in flags:
            p.add_argument("--sigma", help="involutive morphism JSON path")
        if "mu" in flags:
            p.add_argument("--mu", help="measure JSON path")
        if "f" in flags:
            p.add_argument("--f", required=True, help="function JSON path")
        if "trials" in flags:
            p.add_argument("--trials", type=int, default=100)
        if "radius" in flags:
            p.add_argument("--radius", type=float, default=1.0)
        if "starts" in flags:
            p.add_argument("--starts", type=int, default=200)
        if "seed" in flags:
            p.add_argument("--seed", type=int, default=0)
        if "tol" in flags:
            p.add_argument("--tol", type=float, default=None,
                           help="override eq_tol (dedup/oracle tolerances keep defaults)")
        if "battery" in flags:
            p.add_argument("--battery", action="store_true",
                           help="attach the solution-identity battery to the report")
        if "force" in flags:
            p.add_argument("--force", action="store_true",
                           help="evaluate despite a failed hypothesis; report is marked")
        p.add_argument("--format", choices=("json", "table"), default="json")
        return p

    add("validate", "check a Cayley table", "sg")
    add("analyze", "center, involutive morphisms, characters", "sg")
    add("solve", "closed-form solution set for an equation", "eq", "sg", "sigma", "mu", "tol")
    add("verify", "residual report for a candidate function",
        "eq", "sg", "sigma", "mu", "f", "tol", "battery", "force")
    add("stability", "seeded superstability fuzz campaign",
        "sg", "sigma", "mu", "trials", "radius", "seed", "tol")
    add("oracle", "numeric multistart roots vs closed form",
        "eq", "sg", "sigma", "mu", "starts", "seed", "tol")
    fx = sub.add_parser("fixtures", help="write the bundled example inputs")
    fx.add_argument("--out", default="fixtures", help="output directory")
    fx.add_argument("--format", choices=("json", "table"), default="json")
    return parser


def _tolerances(args) -> ToleranceConfig:
    tol = getattr(args, "tol", None)
    if tol is None:
        return DEFAULT_TOL
    if tol < 0:
        raise UsageError("--tol must be nonnegative")
    return ToleranceConfig(eq_tol=tol)


def _need(args, flag: str):
    value = getattr(args, flag, None)
    if value is None:
        raise UsageError(f"--{flag} is required for --eq {args.eq}")
    return value


def _load_sigma(args, sg):
    return load_morphism(_need(args, "sigma"), sg)


def _load_mu(args):
    return load_measure(_need(args, "mu"))


def cmd_validate(args) -> tuple[dict, int]:
    sg = load_semigroup(args.sg)
    payload = {"valid": True, "n": sg.n, "identity": sg.identity}
    if sg.name is not None:
        payload["name"] = sg.name
    return payload, 0


def cmd_analyze(args) -> tuple[dict, int]:
    sg = load_semigroup(args.sg)
    autos = enumerate_involutive_morphisms(sg, MorphismKind.AUTOMORPHISM)
    antis = enumerate_involutive_morphisms(sg, MorphismKind.ANTI_AUTOMORPHISM)
    chars = enumerate_characters(sg)
    payload = {
        "n": sg.n,
        "name": sg.name,
        "identity": sg.identity,
        "center": center(sg),
        "automorphisms": [morphism_to_json(m) for m in autos],
        "anti_automorphisms": [morphism_to_json(m) for m in antis],
        "character_count": len(chars),
        "characters": [c.to_json() for c in chars],
    }
    return payload, 0


def cmd_solve(args) -> tuple[dict, int]:
    sg = load_semigroup(args.sg)
    tol = _tolerances(args)
    eq = args.eq
    if eq == "vanvleck":
        sols = solve_vanvleck(sg, _load_sigma(args, sg), _load_mu(args), tol)
    elif eq == "dalembert_variant":
        sols = solve_dalembert(sg, _load_sigma(args, sg), tol)
    elif eq in ("corollary33", "integral_dalembert"):
        sols = solve_central_dalembert(sg, _load_sigma(args, sg), _load_mu(args), tol)
    elif eq == "spherical":
        sols = solve_spherical(sg, _load_mu(args), tol)
    else:
        raise UsageError(f"no closed-form solver for --eq {eq}")
    return sols.to_json(), 0


def cmd_verify(args) -> tuple[dict, int]:
    sg = load_semigroup(args.sg)
    tol = _tolerances(args)
    f = check_function(sg, load_function(_need(args, "f")))
    eq = args.eq
    if eq == "vanvleck":
        sigma, mu = _load_sigma(args, sg), _load_mu(args)
        if args.battery:
            report = battery_report(sg, f, sigma, mu, tol, force=args.force)
        else:
            report = residual_vanvleck(sg, f, sigma, mu, tol, force=args.force)
    elif eq == "dalembert_variant":
        report = residual_dalembert(sg, f, _load_sigma(args, sg))
    elif eq == "integral_dalembert":
        report = residual_integral_dalembert(sg, f, _load_sigma(args, sg), _load_mu(args), tol)
    elif eq == "corollary33":
        report = residual_central_dalembert(sg, f, _load_sigma(args, sg), _load_mu(args), tol)
    elif eq == "spherical":
        report = residual_spherical(sg, f, _load_mu(args))
    elif eq == "sine_addition":
        g = companion_cosine(sg, f, _load_mu(args), tol)
        report = residual_sine_addition(sg, f, g)
    else:  # wilson_variant
        sigma, mu = _load_sigma(args, sg), _load_mu(args)
        g = companion_cosine(sg, f, mu, tol)
        report = residual_wilson(sg, f, g, sigma)
    return report.to_json(), 0 if report.passed(tol) else 1


def cmd_stability(args) -> tuple[dict, int]:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.radius < 0:
        raise UsageError("--radius must be nonnegative")
    sg = load_semigroup(args.sg)
    config = CampaignConfig(trials=args.trials, radius_min=0.0, radius_max=args.radius,
                            seed=args.seed)
    summary, _ = fuzz_campaign(sg, _load_sigma(args, sg), _load_mu(args), config,
                               _tolerances(args))
    return summary.to_json(), 0 if summary.violations == 0 else 1


def _closed_form_for(eq: str, sg, sigma, mu, tol):
    if eq == "vanvleck":
        return solve_vanvleck(sg, sigma, mu, tol)
    if eq == "dalembert_variant":
        return solve_dalembert(sg, sigma, tol)
    if eq in ("corollary33", "integral_dalembert"):
        return solve_central_dalembert(sg, sigma, mu, tol)
    if eq == "spherical":
        return solve_spherical(sg, mu, tol)
    raise UsageError(f"no oracle cross-check for --eq {eq}")


def cmd_oracle(args) -> tuple[dict, int]:
    sg = load_semigroup(args.sg)
    if sg.n > ORACLE_MAX_ORDER:
        raise UsageError(f"oracle command caps at order {ORACLE_MAX_ORDER}, got {sg.n}")
    if args.starts < 1:
        raise UsageError("--starts must be >= 1")
    tol = _tolerances(args)
    eq = args.eq
    sigma = load_morphism(args.sigma, sg) if args.sigma else None
    mu = load_measure(args.mu) if args.mu else None
    need_sigma = eq != "spherical"
    if need_sigma and sigma is None:
        raise UsageError(f"--sigma is required for --eq {eq}")
    if eq != "dalembert_variant" and mu is None:
        raise UsageError(f"--mu is required for --eq {eq}")
    closed = _closed_form_for(eq, sg, sigma, mu, tol)
    roots = newton_oracle(sg, eq, sigma, mu, starts=args.starts, seed=args.seed, tol=tol)
    refs = closed.vectors()
    pairs, oracle_only, closed_only = match_solution_sets(roots, refs, tol)

    def vec_json(v: np.ndarray) -> list:
        return [[z.real, z.imag] for z in v]

    payload = {
        "equation": eq,
        "oracle_roots": [vec_json(r) for r in roots],
        "closed_form": [vec_json(r) for r in refs],
        "matched": len(pairs),
        "oracle_only": [vec_json(roots[i]) for i in oracle_only],
        "closed_only": [vec_json(refs[j]) for j in closed_only],
    }
    return payload, 0 if not oracle_only and not closed_only else 1


def cmd_fixtures(args) -> tuple[dict, int]:
    names = write_fixtures(args.out)
    return {"dir": args.out, "written": names}, 0


_COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "stability": cmd_stability,
    "oracle": cmd_oracle,
    "fixtures": cmd_fixtures,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload, code = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except HypothesisError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return 4
    except StructuralError as exc:
        print(f"structural error: {exc}", file=sys.stderr)
        return 2
    if args.format == "table":
        print(render_table(payload))
    else:
        print(canonical_json(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())

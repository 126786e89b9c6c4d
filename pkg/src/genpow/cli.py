"""
Command-line front end.

::

    genpow compute exp|log|gpow|norm|root-check FILE... [--method ...] [--out FILE]
    genpow verify all|ID... [--trials N] [--seed S] [--dims 2-6]
    genpow hunt exp-monotonicity [--trials N] [--seed S] [--save-witness DIR]

Exit codes: 0 success, 1 numerical failure (no convergence), 2 unreadable
input or bad usage, 3 violated precondition, 4 unknown theorem id,
5 hunt found nothing, 6 a gating theorem had failures.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

import numpy as np

from . import matfile
from .errors import PRECONDITION_ERRORS, NoConvergence
from .gpower import gpow, is_root
from .harness import DEFAULT_DIMS, DEFAULT_SEED, DEFAULT_TRIALS, REGISTRY, hunt_exp_monotonicity_failure
from .linalg import DEFAULT_TOL, Tolerances, operator_norm
from .matfun import exp_general, exp_spectral, log_series, log_spectral

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_UNKNOWN_THEOREM = 4
EXIT_NOT_FOUND = 5
EXIT_THEOREM_FAILED = 6

HUNT_DEFAULT_SEED = 1
HUNT_DEFAULT_TRIALS = 10000

_OPS = {"exp": 1, "log": 1, "gpow": 2, "norm": 1, "root-check": 3}


@dataclass
class RunConfig:
    tol: Tolerances = DEFAULT_TOL
    seed: Optional[int] = None
    trials: Optional[int] = None
    dims: Sequence[int] = DEFAULT_DIMS
    output_format: str = "text"


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _dims(text: str) -> List[int]:
    """``"2-6"`` or ``"2,3,5"`` (or a mix), each dimension in [2, 8]."""
    dims: List[int] = []
    try:
        for part in text.split(","):
            if "-" in part:
                lo, hi = (int(x) for x in part.split("-", 1))
                dims.extend(range(lo, hi + 1))
            else:
                dims.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid dimension list {text!r}") from None
    if not dims or any(not 2 <= d <= 8 for d in dims):
        raise argparse.ArgumentTypeError("dimensions must lie in [2, 8]")
    return dims


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _common_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("tolerances")
    for name in ("herm", "psd", "commute", "recon", "series"):
        g.add_argument(f"--tol-{name}", type=_positive_float, metavar="X")
    g.add_argument("--max-sweeps", type=_positive_int, metavar="N")
    p.add_argument("--seed", type=_seed, help="64-bit master seed (decimal or 0x...)")
    p.add_argument("--trials", type=_positive_int)
    p.add_argument("--dims", type=_dims, default=list(DEFAULT_DIMS), help="e.g. 2-6 or 2,4,8")
    p.add_argument("--format", choices=("text", "json"), default="text", dest="output_format")
    p.add_argument("-v", "--verbose", action="store_true", help="log every failing trial")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="genpow", description="Generalized matrix powers A^B = exp(B log A)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="evaluate one matrix function")
    c.add_argument("op", choices=sorted(_OPS))
    c.add_argument("files", nargs="+", metavar="FILE")
    c.add_argument(
        "--method",
        choices=("series", "spectral"),
        help="exp: series (default) or spectral; log: spectral (default) or series",
    )
    c.add_argument("--out", metavar="FILE", help="also write the result matrix to FILE")

    v = sub.add_parser("verify", parents=[common], help="run theorem verifiers")
    v.add_argument("theorems", nargs="+", metavar="ID", help="'all' or any of: " + ", ".join(REGISTRY))

    h = sub.add_parser("hunt", parents=[common], help="search for counterexamples")
    h.add_argument("target", choices=("exp-monotonicity",))
    h.add_argument("--generator", choices=("rank-one", "commuting"), default="rank-one")
    h.add_argument("--save-witness", metavar="DIR", help="write A.mat and B.mat into DIR")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    overrides = {
        f"tol_{name}": getattr(args, f"tol_{name}")
        for name in ("herm", "psd", "commute", "recon", "series")
        if getattr(args, f"tol_{name}") is not None
    }
    if args.max_sweeps is not None:
        overrides["max_sweeps"] = args.max_sweeps
    return RunConfig(
        tol=replace(DEFAULT_TOL, **overrides),
        seed=args.seed,
        trials=args.trials,
        dims=tuple(args.dims),
        output_format=args.output_format,
    )


def _matrix_json(a) -> dict:
    a = np.asarray(a)
    return {"dim": a.shape[0], "real": a.real.tolist(), "imag": a.imag.tolist()}


def _emit(cfg: RunConfig, text: str, payload: dict) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(text)


def cmd_compute(op: str, paths: Sequence[str], cfg: RunConfig, method: Optional[str] = None,
                out: Optional[str] = None) -> int:
    if len(paths) != _OPS[op]:
        print(f"error: {op} takes {_OPS[op]} matrix file(s), got {len(paths)}", file=sys.stderr)
        return EXIT_PARSE
    try:
        mats = [matfile.read(p) for p in paths]
    except (OSError, matfile.MatrixFileError) as exc:
        print(f"error: cannot read matrix: {exc}", file=sys.stderr)
        return EXIT_PARSE

    tol = cfg.tol
    payload: dict = {"op": op}
    result = None
    extra = ""
    if op == "exp":
        result = (exp_spectral if method == "spectral" else exp_general)(mats[0], tol)
    elif op == "log":
        result = (log_series if method == "series" else log_spectral)(mats[0], tol)
    elif op == "gpow":
        res = gpow(mats[0], mats[1], tol)
        result = res.value
        norm = operator_norm(res.value, tol)
        payload.update(norm=norm, norm_bound=res.norm_bound, commuting=res.commuting)
        extra = (
            f"# norm {norm!r}\n# norm_bound {res.norm_bound!r}\n"
            f"# commuting {str(res.commuting).lower()}\n"
        )
    elif op == "norm":
        value = operator_norm(mats[0], tol)
        payload["result"] = value
        _emit(cfg, f"{value!r}\n", payload)
        return EXIT_OK
    else:
        flag = is_root(mats[0], mats[1], mats[2], tol)
        payload["result"] = flag
        _emit(cfg, f"{str(flag).lower()}\n", payload)
        return EXIT_OK

    payload["result"] = _matrix_json(result)
    if out:
        matfile.write(out, result)
    _emit(cfg, matfile.render(result) + extra, payload)
    return EXIT_OK


def cmd_verify(theorem_ids: Sequence[str], cfg: RunConfig) -> int:
    ids: List[str] = []
    for tid in theorem_ids:
        if tid == "all":
            ids.extend(REGISTRY)
        elif tid in REGISTRY:
            ids.append(tid)
        else:
            print(f"error: unknown theorem id {tid!r}; known: all, {', '.join(REGISTRY)}",
                  file=sys.stderr)
            return EXIT_UNKNOWN_THEOREM
    ids = list(dict.fromkeys(ids))
    seed = DEFAULT_SEED if cfg.seed is None else cfg.seed
    trials = DEFAULT_TRIALS if cfg.trials is None else cfg.trials

    reports = [REGISTRY[t](trials=trials, dims=cfg.dims, seed=seed, tol=cfg.tol) for t in ids]
    ok = all(r.ok for r in reports if r.gating)

    lines = []
    for r in reports:
        if not r.gating:
            verdict = "INFO"
        else:
            verdict = "PASS" if r.ok else "FAIL"
        seed_note = "" if r.failing_seed is None else f" failing_seed={r.failing_seed}"
        lines.append(
            f"{r.theorem_id:<14} trials={r.trials} passes={r.passes} skips={r.skips} "
            f"failures={r.failures} worst_residual={r.worst_residual:.3e}{seed_note} [{verdict}]"
        )
    lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
    payload = {
        "seed": seed,
        "trials": trials,
        "dims": list(cfg.dims),
        "ok": ok,
        "reports": [r.to_dict() for r in reports],
    }
    _emit(cfg, "\n".join(lines) + "\n", payload)
    return EXIT_OK if ok else EXIT_THEOREM_FAILED


def cmd_hunt(target: str, cfg: RunConfig, generator: str = "rank-one",
             save_witness: Optional[str] = None) -> int:
    seed = HUNT_DEFAULT_SEED if cfg.seed is None else cfg.seed
    trials = HUNT_DEFAULT_TRIALS if cfg.trials is None else cfg.trials
    res = hunt_exp_monotonicity_failure(trials, seed, generator=generator, tol=cfg.tol)
    payload = {
        "target": target,
        "found": res.found,
        "trials_used": res.trials_used,
        "witness_eigenvalue": res.witness_eigenvalue,
        "trial_seed": res.trial_seed,
        "A": None if res.A is None else _matrix_json(res.A),
        "B": None if res.B is None else _matrix_json(res.B),
    }
    if res.found:
        text = (
            f"found: true\ntrials_used: {res.trials_used}\ntrial_seed: {res.trial_seed}\n"
            f"witness_eigenvalue: {res.witness_eigenvalue!r}\n"
            f"A (A >= B):\n{matfile.render(res.A)}B:\n{matfile.render(res.B)}"
        )
        if save_witness:
            os.makedirs(save_witness, exist_ok=True)
            matfile.write(os.path.join(save_witness, "A.mat"), res.A)
            matfile.write(os.path.join(save_witness, "B.mat"), res.B)
    else:
        text = f"found: false\ntrials_used: {res.trials_used}\n"
    _emit(cfg, text, payload)
    return EXIT_OK if res.found else EXIT_NOT_FOUND


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.ERROR,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = _config(args)
        if args.command == "compute":
            return cmd_compute(args.op, args.files, cfg, args.method, args.out)
        if args.command == "verify":
            return cmd_verify(args.theorems, cfg)
        return cmd_hunt(args.target, cfg, args.generator, args.save_witness)
    except PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except NoConvergence as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())

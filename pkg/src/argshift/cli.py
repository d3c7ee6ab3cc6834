"""Command-line entry point.

    argshift describe --type A2
    argshift invariants --type B2
    argshift shift --type A2 --seed 7 --nmax 3
    argshift verify theorem1 --type A1 --nmax 4 --seed 7
    argshift verify all --type A2 --seed 7 --out report.jsonl

Exit status: 0 when every check passes, 1 when a check fails, 2 for bad
input, 3 for retry exhaustion or internal errors, 4 for I/O failures.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from .chevalley import build_lie_algebra
from .errors import ArgshiftError, RetryExhausted, UnsupportedType
from .invariants import extract_generators
from .rootsys import parse_type
from .shift import a_mu_graded_dim, build_shift_family, fraction_strings, sample_regular
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RUNTIME, EXIT_IO = 0, 1, 2, 3, 4
MODES = SUITES + ("all",)


@dataclass
class RunConfig:
    type: str
    nmax: int = 3
    seed: int = 0
    retries: int = 5
    out: str | None = None
    format: str = "json"
    mode: str = "all"

    def validate(self):
        parse_type(self.type)
        if self.nmax < 1:
            raise ValueError("--nmax must be >= 1")
        if self.retries < 1:
            raise ValueError("--retries must be >= 1")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ARGSHIFT_THREADS", "1")))
    except ValueError:
        return 1


def _dumps(rec) -> str:
    return json.dumps(rec, sort_keys=True, separators=(", ", ": "))


def _render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return "".join(_dumps(r) + "\n" for r in records)
    lines = []
    for r in records:
        status = "PASS" if r.get("passed", True) else "FAIL"
        rest = " ".join(
            f"{k}={_dumps(v) if isinstance(v, (list, dict)) else v}"
            for k, v in sorted(r.items())
            if k not in ("suite", "passed")
        )
        lines.append(f"[{status}] {r.get('suite', '')} {rest}".rstrip())
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".argshift-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _suite_job(args):
    name, kwargs = args
    return name, run_suite(name, **kwargs)


def run_verify(cfg: RunConfig) -> tuple[list[dict], bool]:
    names = list(SUITES) if cfg.mode == "all" else [cfg.mode]
    kwargs = {"label": cfg.type, "nmax": cfg.nmax, "seed": cfg.seed, "retries": cfg.retries}
    jobs = [(n, kwargs) for n in names]
    workers = min(_threads(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = dict(pool.map(_suite_job, jobs))
    else:
        results = dict(map(_suite_job, jobs))
    records = [rec for n in names for rec in results[n]]
    return records, all(r["passed"] for r in records)


def cmd_describe(cfg: RunConfig) -> int:
    from .suites import structure_checks

    lie = build_lie_algebra(cfg.type)
    rec = lie.rs.to_json()
    rec.update(
        {
            "dim": lie.dim,
            "n_positive": lie.rs.n_positive,
            "basis": lie.names,
            "checks": structure_checks(lie),
        }
    )
    ok = all(rec["checks"].values())
    rec["passed"] = ok
    if cfg.format == "json":
        _emit(_dumps(rec) + "\n", cfg.out)
    else:
        lines = [
            f"type {rec['type']}  rank {rec['rank']}  dim {rec['dim']}  |positive roots| {rec['n_positive']}",
            "positive roots: " + " ".join(str(r) for r in rec["positive_roots"]),
            "basis: " + " ".join(lie.names),
            "checks: " + " ".join(f"{k}={v}" for k, v in rec["checks"].items()),
        ]
        _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_invariants(cfg: RunConfig) -> int:
    lie = build_lie_algebra(cfg.type)
    gens = extract_generators(lie)
    sidecar = {"type": gens.type, "degrees": gens.degrees,
               "dims_by_degree": {str(k): v for k, v in sorted(gens.dims_by_degree.items())}}
    if cfg.format == "json":
        _emit(_dumps(gens.to_json(lie.names)) + "\n", cfg.out)
    else:
        lines = [f"Phi_{i + 1} = {g.to_text(lie.names)}" for i, g in enumerate(gens.generators)]
        if cfg.out:
            write_atomic(cfg.out, "\n".join(lines) + "\n")
            write_atomic(cfg.out + ".json", _dumps(sidecar) + "\n")
        else:
            sys.stdout.write("\n".join(lines) + "\n" + _dumps(sidecar) + "\n")
    return EXIT_OK


def cmd_shift(cfg: RunConfig) -> int:
    lie = build_lie_algebra(cfg.type)
    gens = extract_generators(lie)
    mu = sample_regular(lie.rs, random.Random(cfg.seed))
    fam = build_shift_family(lie, mu, gens)
    graded = [a_mu_graded_dim(fam, n) for n in range(1, cfg.nmax + 1)]
    report = {
        "type": lie.rs.label,
        "mu": fraction_strings(mu),
        "seed": cfg.seed,
        "degrees": fam.degrees,
        "count": fam.count,
        "commutative": True,
        "graded_dims": graded,
        "generators": [
            {"phi": i + 1, "order": k, "poly": p.to_text(lie.names)}
            for (i, k), p in zip(fam.labels, fam.generators)
        ],
    }
    if cfg.format == "json":
        _emit(_dumps(report) + "\n", cfg.out)
    else:
        lines = [f"d_mu^{k} Phi_{i + 1} = {p.to_text(lie.names)}" for (i, k), p in zip(fam.labels, fam.generators)]
        summary = {k: v for k, v in report.items() if k != "generators"}
        _emit("\n".join(lines) + "\n" + _dumps(summary) + "\n", cfg.out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    records, ok = run_verify(cfg)
    _emit(_render(records, cfg.format), cfg.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="argshift", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="root system type, e.g. A2, B2, G2")
    common.add_argument("--nmax", type=int, default=3, help="largest degree checked")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--retries", type=int, default=5, help="resample cap for generic parameters")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("describe", parents=[common], help="root system, basis and structure checks")
    sub.add_parser("invariants", parents=[common], help="basic invariants of S(g)^g")
    sub.add_parser("shift", parents=[common], help="argument-shift generators for a sampled mu")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("mode", choices=MODES)
    return parser


def _error(exc: Exception, code: int) -> int:
    obj = {"error": getattr(exc, "kind", type(exc).__name__), "message": str(exc)}
    if isinstance(exc, RetryExhausted):
        if exc.report is not None:
            obj["report"] = exc.report.to_json()
        if exc.offending:
            obj["offending"] = exc.offending
    sys.stdout.write(_dumps(obj) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        type=args.type, nmax=args.nmax, seed=args.seed, retries=args.retries,
        out=args.out, format=args.format, mode=getattr(args, "mode", "all"),
    )
    try:
        cfg.validate()
        handler = {
            "describe": cmd_describe,
            "invariants": cmd_invariants,
            "shift": cmd_shift,
            "verify": cmd_verify,
        }[args.command]
        return handler(cfg)
    except UnsupportedType as exc:
        return _error(exc, EXIT_INPUT)
    except ArgshiftError as exc:
        return _error(exc, EXIT_RUNTIME)
    except ValueError as exc:
        return _error(exc, EXIT_INPUT)
    except OSError as exc:
        return _error(exc, EXIT_IO)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    gldstandby dist    --alpha .. --beta .. --theta .. --gamma .. --eta .. [--mission --grid]
    gldstandby sysrel  ... --n 2,5,10,20 [--switch gld --switch-alpha ..]
    gldstandby mttf    ... --n 2,5
    gldstandby sens    ... --target mttf --param theta --values 0.3,0.4 --n 2,5
    gldstandby sim     ... --n 5 --reps 1000000 --seed 7
    gldstandby verify  [--reps --seed]

Exit codes: 0 success, 1 verification failure, 2 usage/config error,
3 numerical error.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__, gld
from .errors import DomainError, NumericalError
from .gld import GldParams
from .mcsim import SimConfig, simulate_imperfect, simulate_perfect
from .sensitivity import ParamId, Target, reliability_partial, sensitivity_table
from .sysrel import (
    Imperfect,
    Perfect,
    SystemConfig,
    mttf_perfect,
    reliability_imperfect_lower,
    reliability_perfect,
    time_grid,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

COMMANDS = ("dist", "sysrel", "mttf", "sens", "sim", "verify")
_COMPONENT_FIELDS = ("alpha", "beta", "theta", "gamma", "eta")
_SWITCH_FIELDS = tuple(f"switch_{f}" for f in _COMPONENT_FIELDS)


class UsageError(Exception):
    pass


@dataclass
class RunSpec:
    command: str
    alpha: float | None = None
    beta: float | None = None
    theta: float | None = None
    gamma: float | None = None
    eta: float | None = None
    switch: str = "perfect"
    switch_alpha: float | None = None
    switch_beta: float | None = None
    switch_theta: float | None = None
    switch_gamma: float | None = None
    switch_eta: float | None = None
    n: list[int] = field(default_factory=list)
    mission: float = 100.0
    grid: int = 201
    param: str | None = None
    values: list[float] = field(default_factory=list)
    target: str = "mttf"
    reps: int = 10**6
    seed: int = 0
    format: str = "csv"
    out: str | None = None
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)

    def component(self) -> GldParams:
        return GldParams(self.alpha, self.beta, self.theta, self.gamma, self.eta)

    def switch_model(self):
        if self.switch == "perfect":
            return Perfect()
        return Imperfect(
            GldParams(self.switch_alpha, self.switch_beta, self.switch_theta, self.switch_gamma, self.switch_eta)
        )


_SPEC_FIELDS = {f.name for f in dataclasses.fields(RunSpec)} - {"command"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config")
    for name in _COMPONENT_FIELDS:
        common.add_argument(f"--{name}", type=float, default=None)
    common.add_argument("--switch", choices=("perfect", "gld"), default=None)
    for name in _COMPONENT_FIELDS:
        common.add_argument(f"--switch-{name}", dest=f"switch_{name}", type=float, default=None)
    common.add_argument("--n", type=_int_list, default=None)
    common.add_argument("--mission", type=float, default=None)
    common.add_argument("--grid", type=int, default=None)
    common.add_argument("--param", choices=[p.value for p in ParamId], default=None)
    common.add_argument("--values", type=_float_list, default=None)
    common.add_argument("--target", choices=("mttf", "reliability"), default=None)
    common.add_argument("--reps", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None)
    common.add_argument("--threads", type=int, default=None)

    parser = _Parser(prog="gldstandby", description="Cold-standby reliability under the GLD")
    sub = parser.add_subparsers(dest="command")
    for cmd in COMMANDS:
        sub.add_parser(cmd, parents=[common])
    return parser


def _load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}")
    if not isinstance(data, dict):
        raise UsageError(f"config {path} must hold a JSON object")
    data = {k.replace("-", "_"): v for k, v in data.items()}
    unknown = set(data) - _SPEC_FIELDS
    if unknown:
        raise UsageError(f"unknown config fields: {', '.join(sorted(unknown))}")
    if isinstance(data.get("n"), int):
        data["n"] = [data["n"]]
    if isinstance(data.get("values"), (int, float)):
        data["values"] = [data["values"]]
    return data


def _validate(spec: RunSpec) -> None:
    cmd = spec.command
    if cmd != "verify":
        missing = [f"--{f}" for f in _COMPONENT_FIELDS if getattr(spec, f) is None]
        if missing:
            raise UsageError(f"{cmd} needs {' '.join(missing)}")
        try:
            spec.component()
        except DomainError as exc:
            raise UsageError(str(exc))
    if spec.switch not in ("perfect", "gld"):
        raise UsageError(f"--switch must be perfect or gld, got {spec.switch}")
    if spec.switch == "gld" and cmd in ("sysrel", "sim"):
        missing = [f"--{f.replace('_', '-')}" for f in _SWITCH_FIELDS if getattr(spec, f) is None]
        if missing:
            raise UsageError(f"--switch gld needs {' '.join(missing)}")
        try:
            spec.switch_model()
        except DomainError as exc:
            raise UsageError(f"switch: {exc}")
    if cmd in ("sysrel", "mttf", "sens", "sim"):
        if not spec.n:
            raise UsageError(f"{cmd} needs --n")
        if any(n < 1 for n in spec.n):
            raise UsageError("--n values must be >= 1")
    if not spec.mission > 0:
        raise UsageError("--mission must be > 0")
    if spec.grid < 2:
        raise UsageError("--grid must be >= 2")
    if cmd == "sens" and spec.param is None:
        raise UsageError("sens needs --param")
    if spec.param is not None and spec.param not in {p.value for p in ParamId}:
        raise UsageError(f"unknown --param {spec.param}")
    if spec.target not in ("mttf", "reliability"):
        raise UsageError(f"unknown --target {spec.target}")
    if spec.format not in ("csv", "json"):
        raise UsageError(f"unknown --format {spec.format}")
    if spec.reps < 100:
        raise UsageError("--reps must be >= 100")
    if not 0 <= spec.seed < 2**64:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    if spec.threads < 1:
        raise UsageError("--threads must be >= 1")


def parse_args(argv: Sequence[str]) -> RunSpec:
    """Build a validated RunSpec from flags, layered over an optional JSON config."""
    ns = _build_parser().parse_args(list(argv))
    if ns.command is None:
        raise UsageError(f"missing command; choose from {', '.join(COMMANDS)}")
    values = _load_config(ns.config) if ns.config else {}
    for name in _SPEC_FIELDS:
        flag = getattr(ns, name, None)
        if flag is not None:
            values[name] = flag
    try:
        spec = RunSpec(command=ns.command, **values)
    except TypeError as exc:
        raise UsageError(str(exc))
    _validate(spec)
    return spec


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".10g")


def _fmt4(x: float) -> str:
    return f"{x:.4f}"


def _dist_rows(spec: RunSpec):
    p = spec.component()
    rows = []
    for t in time_grid(spec.mission, spec.grid):
        t = float(t)
        if t == 0.0 and min(p.alpha, p.beta) < 1.0:
            h = float("inf")
        else:
            h = gld.hazard(p, t)
        rows.append([t, gld.pdf(p, t), gld.cdf(p, t), gld.survival(p, t), h])
    return ["t", "pdf", "cdf", "survival", "hazard"], [[_fmt(v) for v in r] for r in rows]


def _sysrel_rows(spec: RunSpec):
    p = spec.component()
    grid = [float(t) for t in time_grid(spec.mission, spec.grid)]
    header = ["t"]
    columns = []
    for n in spec.n:
        perfect = SystemConfig(n, p)
        if spec.switch == "gld":
            imperfect = SystemConfig(n, p, spec.switch_model())
            header += [f"perfect_n{n}", f"lower_n{n}"]
            columns.append([reliability_perfect(perfect, t) for t in grid])
            columns.append([reliability_imperfect_lower(imperfect, t) for t in grid])
        else:
            header.append(f"R_n{n}")
            columns.append([reliability_perfect(perfect, t) for t in grid])
    rows = [[_fmt(t)] + [_fmt(c[i]) for c in columns] for i, t in enumerate(grid)]
    return header, rows


def _mttf_rows(spec: RunSpec):
    p = spec.component()
    return ["n", "mttf"], [[str(n), _fmt4(mttf_perfect(SystemConfig(n, p)))] for n in spec.n]


def _sens_rows(spec: RunSpec):
    param = ParamId(spec.param)
    base = SystemConfig(spec.n[0], spec.component())
    target = Target(spec.target)
    if target is Target.MTTF or spec.values:
        values = spec.values or [param.get(base.component)]
        t = spec.mission if target is Target.RELIABILITY else None
        table = sensitivity_table(target, param, values, spec.n, base, t=t)
        vals, ns, cells = table.grid()
        fmt = _fmt4 if target is Target.MTTF else _fmt
        header = [param.value] + [f"n={n}" for n in ns]
        return header, [[_fmt(v)] + [fmt(c) for c in row] for v, row in zip(vals, cells)]
    # reliability curve over mission time at the base parameters
    grid = [float(t) for t in time_grid(spec.mission, spec.grid)]
    header = ["t"] + [f"n={n}" for n in spec.n]
    cols = [[reliability_partial(base.with_n(n), t, param).value for t in grid] for n in spec.n]
    return header, [[_fmt(t)] + [_fmt(c[i]) for c in cols] for i, t in enumerate(grid)]


def _sim_rows(spec: RunSpec):
    p = spec.component()
    grid = tuple(float(t) for t in time_grid(spec.mission, spec.grid))
    rows = []
    for k, n in enumerate(spec.n):
        sim = SimConfig(spec.reps, (spec.seed + k) % 2**64, grid, threads=spec.threads)
        if spec.switch == "gld":
            res = simulate_imperfect(SystemConfig(n, p, spec.switch_model()), sim)
        else:
            res = simulate_perfect(SystemConfig(n, p), sim)
        rows += [[str(n), _fmt(r.t), _fmt(r.estimate), _fmt(r.stderr)] for r in res.estimates]
        rows.append([str(n), "mttf", _fmt(res.mttf[0]), _fmt(res.mttf[1])])
    return ["n", "t", "estimate", "stderr"], rows


def _render(spec: RunSpec, header: list[str], rows: list[list[str]]) -> str:
    if spec.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()

    def value(s: str):
        try:
            return int(s)
        except ValueError:
            pass
        try:
            return float(s)
        except ValueError:
            return s

    meta = {"run": dataclasses.asdict(spec), "version": __version__, "seed": spec.seed}
    data = [{h: value(v) for h, v in zip(header, r)} for r in rows]
    return json.dumps({"meta": meta, "data": data}, indent=2, allow_nan=True) + "\n"


def _emit(spec: RunSpec, text: str) -> None:
    if spec.out:
        with open(spec.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verify(spec: RunSpec) -> int:
    from .verify import run_suites

    results = run_suites(reps=spec.reps, seed=spec.seed)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail} [{r.seconds:.2f}s]" for r in results
    ]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} suites passed")
    _emit(spec, "\n".join(lines) + "\n")
    return EXIT_OK if passed == len(results) else EXIT_VERIFY


_HANDLERS = {
    "dist": _dist_rows,
    "sysrel": _sysrel_rows,
    "mttf": _mttf_rows,
    "sens": _sens_rows,
    "sim": _sim_rows,
}


def run(spec: RunSpec) -> int:
    try:
        if spec.command == "verify":
            return _verify(spec)
        header, rows = _HANDLERS[spec.command](spec)
        _emit(spec, _render(spec, header, rows))
    except NumericalError as exc:
        print(f"gldstandby: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except DomainError as exc:
        print(f"gldstandby: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"gldstandby: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        spec = parse_args(argv)
    except UsageError as exc:
        print(f"gldstandby: usage error: {exc} (see gldstandby <command> --help)", file=sys.stderr)
        return EXIT_USAGE
    return run(spec)


if __name__ == "__main__":
    sys.exit(main())

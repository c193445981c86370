"""Command-line interface.

Subcommands: gen, solve, reduce, predict, critical, sweep, fit.  Exit codes
follow the SAT-solver convention: 10 satisfiable, 20 unsatisfiable; 0 success
for the non-solving commands, 1 usage error, 2 I/O or parse error, 3 when
predict hits its iteration cap.

The sweep grid lives in a flat key-value config file (``key = value``, ``#``
comments, lists separated by commas or spaces)::

    n = 4096, 8192, 16384
    d1 = 0.05 0.1 0.3
    d3 = 1.8
    algo = ppur
    trials = 20
    seed = 1234
    # max_iters = 10000000   (optional, PREDICT only)
"""

from __future__ import annotations

import argparse
import sys

from . import experiment
from .dimacs import emit_dimacs, parse_dimacs
from .errors import HornSatError, InvalidParamsError
from .formula import normalize, reduce_to_3cnf
from .meanfield import DEFAULT_MAX_ITERS, critical_d1, predict_h
from .randgen import ModelParams, generate
from .solver import SAT, solve_gp, solve_ppur, solve_pur_serial

__all__ = ["main", "run_command"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_NONTERM = 3
EXIT_SAT = 10
EXIT_UNSAT = 20

_ALGO_NAMES = {"gp": experiment.GP, "ppur": experiment.PPUR,
               "pur": experiment.PUR, "predict": experiment.PREDICT}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1 (argparse defaults to 2)
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_gen(args) -> int:
    params = ModelParams(n=args.n, d1=args.d1, d3=args.d3, seed=args.seed)
    formula = generate(params)
    if args.normalize:
        formula = normalize(formula)
    _write_text(args.out, emit_dimacs(formula))
    return EXIT_OK


def _cmd_solve(args) -> int:
    if args.optional_step and args.algo != "gp":
        print("error: --optional-step applies to --algo gp only", file=sys.stderr)
        return EXIT_USAGE
    if args.convergence and args.algo == "gp":
        print("error: --convergence applies to --algo ppur/pur only", file=sys.stderr)
        return EXIT_USAGE
    formula = parse_dimacs(_read_text(args.file))
    if args.algo == "gp":
        outcome = solve_gp(formula, use_optional_step=args.optional_step)
    elif args.algo == "ppur":
        outcome = solve_ppur(formula, run_to_convergence=args.convergence)
    else:
        outcome = solve_pur_serial(formula, run_to_convergence=args.convergence)
    print(outcome.status)
    print(f"h {outcome.rounds}")
    if outcome.status == SAT:
        for v in outcome.true_variables:
            print(v)
    return EXIT_SAT if outcome.status == SAT else EXIT_UNSAT


def _cmd_reduce(args) -> int:
    formula = parse_dimacs(_read_text(args.file))
    _write_text(args.out, emit_dimacs(reduce_to_3cnf(formula)))
    return EXIT_OK


def _cmd_predict(args) -> int:
    h, terminated = predict_h(args.n, args.d1, args.d3, args.max_iters)
    print(h)
    if not terminated:
        print(f"did not terminate within {args.max_iters} iterations", file=sys.stderr)
        return EXIT_NONTERM
    return EXIT_OK


def _cmd_critical(args) -> int:
    print(f"{critical_d1(args.d3):.4f}")
    return EXIT_OK


def _parse_sweep_config(text: str) -> dict:
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        key, sep, value = stripped.partition("=")
        if not sep or not key.strip() or not value.strip():
            raise InvalidParamsError(f"config line {lineno}: expected 'key = value'")
        raw[key.strip()] = value.strip()

    known = {"n", "d1", "d3", "algo", "trials", "seed", "max_iters"}
    unknown = set(raw) - known
    if unknown:
        raise InvalidParamsError(f"unknown config keys: {sorted(unknown)}")
    missing = {"n", "d1", "d3", "algo", "trials", "seed"} - set(raw)
    if missing:
        raise InvalidParamsError(f"missing config keys: {sorted(missing)}")

    def split(value: str) -> list[str]:
        return value.replace(",", " ").split()

    try:
        config = {
            "ns": [int(tok) for tok in split(raw["n"])],
            "d1s": [float(tok) for tok in split(raw["d1"])],
            "d3s": [float(tok) for tok in split(raw["d3"])],
            "trials": int(raw["trials"]),
            "base_seed": int(raw["seed"]),
            "max_iters": int(raw.get("max_iters", DEFAULT_MAX_ITERS)),
        }
    except ValueError as exc:
        raise InvalidParamsError(f"bad config value: {exc}") from None
    algo = raw["algo"].lower()
    if algo not in _ALGO_NAMES:
        raise InvalidParamsError(f"algo must be one of {sorted(_ALGO_NAMES)}, got {algo!r}")
    config["algo"] = _ALGO_NAMES[algo]
    return config


def _cmd_sweep(args) -> int:
    config = _parse_sweep_config(_read_text(args.config))
    records = experiment.sweep(
        config["ns"],
        config["d1s"],
        config["d3s"],
        algo=config["algo"],
        trials=config["trials"],
        base_seed=config["base_seed"],
        max_iters=config["max_iters"],
    )
    experiment.write_csv(records, args.out, timings=args.timings)
    print(f"wrote {len(records)} records to {args.out}", file=sys.stderr)
    return EXIT_OK


def _cmd_fit(args) -> int:
    records = experiment.read_csv(args.file)
    model = experiment.H_VS_LOG_N if args.model == "logn" else experiment.LOG_H_VS_LOG_N
    groups: dict[tuple[float, float], dict[int, list[int]]] = {}
    for r in records:
        groups.setdefault((r.d1, r.d3), {}).setdefault(r.n, []).append(r.h)
    for (d1, d3) in sorted(groups):
        cells = groups[(d1, d3)]
        points = [(n, sum(hs) / len(hs)) for n, hs in sorted(cells.items())]
        fit = experiment.fit_scaling(points, model)
        print(
            f"d1={d1:.6g} d3={d3:.6g} slope={fit.slope:.6g} "
            f"intercept={fit.intercept:.6g} r2={fit.r_squared:.6g}"
        )
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="hornsat", description="Horn-SAT toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[], help="sample a random instance as DIMACS")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d1", type=float, required=True)
    p.add_argument("--d3", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--normalize", action="store_true", help="emit reduced form")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="solve a DIMACS Horn formula")
    p.add_argument("--algo", choices=("gp", "ppur", "pur"), required=True)
    p.add_argument("--optional-step", action="store_true",
                   help="gp: conclude SAT when a frontier has no positive literal")
    p.add_argument("--convergence", action="store_true",
                   help="ppur/pur: keep propagating past a contradiction")
    p.add_argument("file", help="DIMACS file, or - for stdin")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("reduce", help="rewrite to 3CNF Horn DIMACS")
    p.add_argument("file", help="DIMACS file, or - for stdin")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("predict", help="mean-field round count")
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--d1", type=float, required=True)
    p.add_argument("--d3", type=float, required=True)
    p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("critical", help="critical unit density d1* for d3 >= 2")
    p.add_argument("--d3", type=float, required=True)
    p.set_defaults(func=_cmd_critical)

    p = sub.add_parser("sweep", help="run a grid of trials into a CSV")
    p.add_argument("--config", required=True, help="flat key-value grid file")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--timings", action="store_true",
                   help="record wall-clock elapsed_ms (breaks byte reproducibility)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("fit", help="least-squares scaling fit of a sweep CSV")
    p.add_argument("--model", choices=("logn", "powerlaw"), required=True)
    p.add_argument("file", help="CSV produced by sweep")
    p.set_defaults(func=_cmd_fit)

    return parser


def run_command(argv) -> int:
    """Parse and execute one command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (HornSatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def main(argv=None) -> int:
    return run_command(argv if argv is not None else sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())

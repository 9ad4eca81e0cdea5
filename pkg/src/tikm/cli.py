"""Command-line front end.

Subcommands::

    tikm werner    --fs -0.5 | --ps 0.75          closed-form report for one state
    tikm diagram   --fs-min --fs-max --steps      measures along a correlation grid
    tikm rkky      --dim 3 --j ... --r-min ...    coupling and Kondo scales vs distance
    tikm simulate  --sites 4 --jk 0.5 ...         exact diagonalization of one chain
    tikm critical  --param jk --min --max --tol   bisect for the f_s = -1/4 crossing

Formats: ``pretty`` (6 significant digits, human), ``csv`` and ``json``
(17 significant digits, bit-stable across runs).  Exit codes: 0 success,
2 usage or domain error, 3 I/O error, 4 eigensolver not converged,
5 degenerate ground state, 6 no bisection bracket, 7 non-monotone scan.
The ``KE_THREADS`` environment variable caps sweep parallelism.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

import numpy as np

from . import kondo_sim, measures, rkky, werner
from .errors import (
    DegenerateGroundError,
    DomainError,
    EmptySectorError,
    NoBracketError,
    NonMonotoneError,
    NotConvergedError,
    OutOfRangeError,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NOT_CONVERGED = 4
EXIT_DEGENERATE = 5
EXIT_NO_BRACKET = 6
EXIT_NON_MONOTONE = 7

_MACHINE_DIGITS = ".17g"
_PRETTY_DIGITS = ".6g"


def _fmt(value: object, spec: str = _MACHINE_DIGITS) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, spec)
    return str(value)


def _json_line(obj: object) -> str:
    """Serialize with floats at 17 significant digits (round-trip exact)."""
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_json_line(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_line(v) for v in obj) + "]"
    if isinstance(obj, (bool, float, int)):
        return _fmt(obj)
    return json.dumps(obj)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _pretty_table(pairs: Sequence[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {_fmt(v, _PRETTY_DIGITS)}" for k, v in pairs) + "\n"


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _report_pairs(f_s: float, state: werner.WernerState) -> list[tuple[str, object]]:
    rep = werner.classify(state)
    return [
        ("fs", f_s),
        ("ps", state.p_s),
        ("pt", state.p_t),
        ("prob_singlet", rep.prob_singlet),
        ("prob_triplet", rep.prob_triplet),
        ("concurrence", rep.concurrence),
        ("negativity", rep.negativity),
        ("pair_entropy", rep.pair_entropy),
        ("single_entropy", rep.single_entropy),
        ("entangled", rep.entangled),
        ("teleport", rep.teleportation_useful),
        ("chsh", rep.chsh_violating),
    ]


def _emit_record(pairs: list[tuple[str, object]], fmt: str, out: str | None) -> None:
    if fmt == "json":
        _write_out(_json_line(dict(pairs)) + "\n", out)
    elif fmt == "csv":
        _write_out(_csv_text([k for k, _ in pairs], [[v for _, v in pairs]]), out)
    else:
        _write_out(_pretty_table(pairs), out)


def cmd_werner(args: argparse.Namespace) -> int:
    state = werner.from_fidelity(args.ps) if args.ps is not None else werner.from_correlation(args.fs)
    _emit_record(_report_pairs(state.f_s, state), args.format, args.out)
    return EXIT_OK


_DIAGRAM_COLUMNS = (
    "fs",
    "ps",
    "pt",
    "concurrence",
    "negativity",
    "pair_entropy",
    "single_entropy",
    "entangled",
    "teleport",
    "chsh",
)


def cmd_diagram(args: argparse.Namespace) -> int:
    if not (werner.F_MIN <= args.fs_min < args.fs_max <= werner.F_MAX):
        raise OutOfRangeError(
            f"need {werner.F_MIN} <= fs-min < fs-max <= {werner.F_MAX}, got [{args.fs_min}, {args.fs_max}]"
        )
    if args.steps < 2:
        raise OutOfRangeError(f"steps must be >= 2, got {args.steps}")
    rows = []
    for f_s in np.linspace(args.fs_min, args.fs_max, args.steps):
        state = werner.from_correlation(float(f_s))
        rep = werner.classify(state)
        rows.append(
            [
                float(f_s),
                state.p_s,
                state.p_t,
                rep.concurrence,
                rep.negativity,
                rep.pair_entropy,
                rep.single_entropy,
                rep.entangled,
                rep.teleportation_useful,
                rep.chsh_violating,
            ]
        )
    if args.format == "json":
        text = _json_line([dict(zip(_DIAGRAM_COLUMNS, row)) for row in rows]) + "\n"
    else:
        text = _csv_text(_DIAGRAM_COLUMNS, rows)
    _write_out(text, args.out)
    return EXIT_OK


_RKKY_COLUMNS = ("r", "x", "f", "coupling", "sign_class", "tk", "i_over_tk")


def cmd_rkky(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise DomainError(f"steps must be >= 2, got {args.steps}")
    if not 0.0 < args.r_min < args.r_max:
        raise DomainError(f"need 0 < r-min < r-max, got [{args.r_min}, {args.r_max}]")
    rows = []
    for r in np.linspace(args.r_min, args.r_max, args.steps):
        params = rkky.RkkyParams(
            j=args.j,
            fermi_energy=args.ef,
            fermi_wavevector=args.kf,
            dos_fermi=args.rhof,
            bandwidth=args.bandwidth,
            dimension=args.dim,
            distance=float(r),
        )
        res = rkky.coupling(params)
        x = 2.0 * args.kf * float(r)
        fval = rkky.f3(x) if args.dim == 3 else rkky.f1(x)
        rows.append([float(r), x, fval, res.coupling, res.sign_class, res.kondo_temperature, res.ratio])
    if args.format == "json":
        text = _json_line([dict(zip(_RKKY_COLUMNS, row)) for row in rows]) + "\n"
    else:
        text = _csv_text(_RKKY_COLUMNS, rows)
    _write_out(text, args.out)
    return EXIT_OK


_MODEL_FLAGS = ("sites", "hopping", "jk", "idirect", "xa", "xb", "nup", "ndn")


def _model_from_args(args: argparse.Namespace) -> kondo_sim.ChainModel:
    """Build the model with flag > config-file > built-in default precedence."""
    values: dict = {}
    if args.config is not None:
        values.update(kondo_sim.parse_model_file(args.config))
    for key in _MODEL_FLAGS:
        flag = getattr(args, key)
        if flag is not None:
            values[key] = flag
    if "sites" not in values:
        raise OutOfRangeError("missing required model parameter: sites (flag --sites or config file)")
    return kondo_sim.ChainModel(**values)


def _add_model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sites", type=int, default=None, help="chain length L (<= 10)")
    parser.add_argument("--hopping", type=float, default=None, help="nearest-neighbor hopping t (default 1)")
    parser.add_argument("--jk", type=float, default=None, help="AFM Kondo coupling (>= 0, default 0)")
    parser.add_argument("--idirect", type=float, default=None, help="direct impurity exchange (default 0)")
    parser.add_argument("--xa", type=int, default=None, help="site of impurity A (default: centered pair)")
    parser.add_argument("--xb", type=int, default=None, help="site of impurity B")
    parser.add_argument("--nup", type=int, default=None, help="up electrons (default: half filling)")
    parser.add_argument("--ndn", type=int, default=None, help="down electrons (default: half filling)")
    parser.add_argument("--config", default=None, help="key = value model file; flags override it")


def cmd_simulate(args: argparse.Namespace) -> int:
    model = _model_from_args(args)
    basis = kondo_sim.build_basis(model)
    h = kondo_sim.build_hamiltonian(model, basis)
    method = "dense" if args.dense else "auto"
    g = kondo_sim.ground_state(h, method=method)
    e_high = kondo_sim.sector_ground_energy(model, (model.default_sz2() + 2) / 2.0, method=method)
    singlet = g.energy < e_high - kondo_sim.SINGLET_MARGIN
    rho = kondo_sim.impurity_rdm(g, basis)
    f_s = measures.spin_correlation(rho)
    pairs: list[tuple[str, object]] = [
        ("sites", model.sites),
        ("hopping", model.hopping),
        ("jk", model.jk),
        ("idirect", model.idirect),
        ("xa", model.xa),
        ("xb", model.xb),
        ("nup", model.nup),
        ("ndn", model.ndn),
        ("sector_dim", basis.dim),
        ("method", g.method),
        ("iterations", g.iterations),
        ("residual_norm", g.residual_norm),
        ("energy", g.energy),
        ("singlet", singlet),
        ("degenerate", not singlet),
        ("werner_residual", measures.werner_residual(rho)),
    ]
    pairs += _report_pairs(f_s, werner.from_correlation(f_s))
    _emit_record(pairs, args.format, args.out)
    if args.out is not None:
        sys.stdout.write(
            f"sites={model.sites} jk={_fmt(model.jk, _PRETTY_DIGITS)} "
            f"idirect={_fmt(model.idirect, _PRETTY_DIGITS)} dim={basis.dim}: "
            f"E0={_fmt(g.energy, _PRETTY_DIGITS)} fs={_fmt(f_s, _PRETTY_DIGITS)} "
            f"singlet={_fmt(singlet)}\n"
        )
    return EXIT_OK


def cmd_critical(args: argparse.Namespace) -> int:
    model = _model_from_args(args)
    value = kondo_sim.find_crossing(
        model,
        args.param,
        args.min,
        args.max,
        target_fs=args.target_fs,
        tol=args.tol,
    )
    f_s = kondo_sim.point_correlation(model, args.param, value)
    pairs: list[tuple[str, object]] = [
        ("param", args.param),
        ("value", value),
        ("fs", f_s),
        ("target_fs", args.target_fs),
        ("tol", args.tol),
    ]
    if args.format == "json":
        _write_out(_json_line(dict(pairs)) + "\n", args.out)
    elif args.format == "csv":
        _write_out(_csv_text([k for k, _ in pairs], [[v for _, v in pairs]]), args.out)
    else:
        _write_out(_pretty_table(pairs), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tikm",
        description="Entanglement measures for two exchange-coupled Kondo impurities.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, default_format: str, formats=("csv", "json", "pretty")) -> None:
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("werner", help="closed-form report for one correlation/fidelity value")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--fs", type=float, default=None, help="spin-spin correlation in [-3/4, 1/4]")
    group.add_argument("--ps", type=float, default=None, help="singlet fidelity in [0, 1]")
    add_common(p, "pretty")
    p.set_defaults(func=cmd_werner)

    p = sub.add_parser("diagram", help="measures and probabilities along a correlation grid")
    p.add_argument("--fs-min", type=float, default=werner.F_MIN)
    p.add_argument("--fs-max", type=float, default=werner.F_MAX)
    p.add_argument("--steps", type=int, default=101)
    add_common(p, "csv", formats=("csv", "json"))
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("rkky", help="indirect exchange and Kondo temperature versus distance")
    p.add_argument("--dim", type=int, choices=(1, 3), required=True)
    p.add_argument("--j", type=float, required=True, help="AFM exchange magnitude")
    p.add_argument("--ef", type=float, required=True, help="Fermi energy")
    p.add_argument("--kf", type=float, required=True, help="Fermi wavevector")
    p.add_argument("--rhof", type=float, required=True, help="density of states at the Fermi level")
    p.add_argument("--bandwidth", type=float, required=True)
    p.add_argument("--r-min", type=float, required=True)
    p.add_argument("--r-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=101)
    add_common(p, "csv", formats=("csv", "json"))
    p.set_defaults(func=cmd_rkky)

    p = sub.add_parser("simulate", help="exact diagonalization of one chain model")
    _add_model_flags(p)
    p.add_argument("--dense", action="store_true", help="force the dense eigensolver")
    add_common(p, "pretty")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("critical", help="bisect for the parameter where f_s crosses -1/4")
    p.add_argument("--param", choices=("jk", "idirect"), required=True)
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--target-fs", type=float, default=-0.25)
    _add_model_flags(p)
    add_common(p, "pretty")
    p.set_defaults(func=cmd_critical)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    if "KE_THREADS" in os.environ and not os.environ["KE_THREADS"].isdigit():
        sys.stderr.write("tikm: KE_THREADS must be a positive integer\n")
        return EXIT_USAGE
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OutOfRangeError, DomainError, EmptySectorError, ValueError) as exc:
        sys.stderr.write(f"tikm: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"tikm: {exc}\n")
        return EXIT_IO
    except NotConvergedError as exc:
        sys.stderr.write(f"tikm: {exc}\n")
        return EXIT_NOT_CONVERGED
    except DegenerateGroundError as exc:
        sys.stderr.write(f"tikm: {exc}\n")
        return EXIT_DEGENERATE
    except NoBracketError as exc:
        sys.stderr.write(f"tikm: {exc}\n")
        return EXIT_NO_BRACKET
    except NonMonotoneError as exc:
        sys.stderr.write(f"tikm: {exc}\n")
        return EXIT_NON_MONOTONE


if __name__ == "__main__":
    sys.exit(main())

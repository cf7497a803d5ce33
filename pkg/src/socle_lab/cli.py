"""Command-line front end: ``socle-lab <subcommand> ...``.

Exit codes: 0 success, 1 domain error (or a failed verification suite),
2 usage error including malformed partitions, weights and input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence, TextIO

from . import fock, socle, superchar, zuckerman
from .errors import DomainError
from .partitions import format_partition, lr_coeff, multi_lr, parse_partition
from .verify import DEFAULT_SEED, SUITES

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one-line diagnostic instead of the usage dump
        raise UsageError(message)


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight_arg(text: str):
    try:
        return fock.parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- formatting ------------------------------------------------------------------------


def _pair(lp, mp) -> str:
    return f"({format_partition(lp)} | {format_partition(mp)})"


def _decomp_text(decomp: socle.SemisimpleDecomp) -> str:
    if not decomp:
        return "0"
    return " + ".join(f"{s['mult']}x{_pair(s['lambda'], s['mu'])}" for s in socle.decomp_to_json(decomp))


def _print_layers(out: TextIO, layers: list[socle.SemisimpleDecomp]) -> None:
    for k, layer in enumerate(layers):
        print(f"layer {k}: {_decomp_text(layer)}", file=out)


def _dump(out: TextIO, obj) -> None:
    print(json.dumps(obj, sort_keys=False), file=out)


def _print_vec(out: TextIO, v: fock.GrothVec, as_json: bool) -> None:
    if as_json:
        for rec in fock.vec_to_records(v):
            print(json.dumps(rec), file=out)
        return
    if not v:
        print("0", file=out)
        return
    for label, c in sorted(v.items()):
        print(f"{c}  [{','.join(map(str, label.a))}|{','.join(map(str, label.b))}]", file=out)


def _print_poly(out: TextIO, f: superchar.SuperPoly, as_json: bool) -> None:
    if as_json:
        _dump(out, superchar.poly_to_json(f))
    else:
        print(superchar.format_poly(f), file=out)


def _read_vec(path: str) -> fock.GrothVec:
    records = []
    try:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    records.append(json.loads(line))
        return fock.vec_from_records(records)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(f"cannot read vector file {path!r}: {exc}") from None


def _read_poly(path: str) -> superchar.SuperPoly:
    try:
        with open(path, encoding="utf-8") as fh:
            return superchar.poly_from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read polynomial file {path!r}: {exc}") from None


# -- subcommands ----------------------------------------------------------------------


def cmd_lr(args, out):
    print(lr_coeff(args.lam, args.mu, args.nu), file=out)


def cmd_multi_lr(args, out):
    if len(args.partitions) < 2:
        raise UsageError("multi-lr needs lambda, at least one gamma, and lambda'")
    lam, *gammas, lam_p = args.partitions
    print(multi_lr(lam, gammas, lam_p), file=out)


def cmd_socle(args, out):
    layers = socle.socle_layers_injective(args.lam, args.mu, args.blocks)
    if args.json:
        _dump(out, {"lambda": list(args.lam), "mu": list(args.mu), "blocks": args.blocks,
                    "layers": socle.layers_to_json(layers)})
    else:
        _print_layers(out, layers)


def cmd_jh(args, out):
    decomp = socle.jh_injective(args.lam, args.mu, args.blocks)
    if args.json:
        _dump(out, {"lambda": list(args.lam), "mu": list(args.mu), "blocks": args.blocks,
                    "jh": socle.decomp_to_json(decomp)})
    else:
        print(_decomp_text(decomp), file=out)


def _cmd_mn_layers(fn: Callable[[int, int], list]):
    def run(args, out):
        layers = fn(args.m, args.n)
        if args.json:
            _dump(out, {"m": args.m, "n": args.n, "layers": socle.layers_to_json(layers)})
        else:
            _print_layers(out, layers)
    return run


def cmd_act(args, out):
    v = _read_vec(args.file)
    op = fock.apply_e if args.op == "e" else fock.apply_f
    _print_vec(out, op(args.i, v), args.json)


def cmd_gamma(args, out):
    _print_vec(out, zuckerman.gamma(_read_vec(args.file)), args.json)


def cmd_iota(args, out):
    _print_vec(out, fock.iota_kac(_read_vec(args.file)), args.json)


def cmd_contract(args, out):
    _print_vec(out, fock.contraction(args.i, args.j, _read_vec(args.file)), args.json)


def cmd_socle_window(args, out):
    basis = fock.socle_T_window(args.m, args.n, args.lo, args.hi)
    if args.json:
        _dump(out, {"m": args.m, "n": args.n, "lo": args.lo, "hi": args.hi, "dim": len(basis),
                    "basis": [fock.vec_to_records(v) for v in basis]})
    else:
        print(len(basis), file=out)


def cmd_appendix_check(args, out):
    report = fock.appendix_inclusion_report(args.m, args.n, args.lo, args.hi, args.q)
    if args.json:
        _dump(out, {"m": report.m, "n": report.n, "lo": report.lo, "hi": report.hi, "q": report.split,
                    "passed": report.passed, "weights_checked": report.weights_checked,
                    "socle_dim": report.socle_dim,
                    "failing_weights": [[list(pair) for pair in content] for content, _ in report.failures]})
    else:
        print("true" if report.passed else "false", file=out)
        print(f"weights checked {report.weights_checked}, socle part dim {report.socle_dim}, "
              f"failing weights {len(report.failures)}", file=out)


def cmd_atyp(args, out):
    print(fock.atypicality(args.weight), file=out)


def cmd_superschur(args, out):
    _print_poly(out, superchar.super_schur(args.lam, args.m, args.n), args.json)


def cmd_kac_sch(args, out):
    _print_poly(out, superchar.kac_supercharacter(args.weight, args.m, args.n), args.json)


def cmd_ds(args, out):
    _print_poly(out, superchar.ds_power(_read_poly(args.file), args.power), args.json)


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    print(f"seed {args.seed}", file=out)
    failed = total = 0
    for name in names:
        fn = SUITES[name]
        checks = fn(seed=args.seed) if args.size is None else fn(seed=args.seed, size=args.size)
        for check in checks:
            print(f"[{name}] {check.line()}", file=out)
            total += 1
            failed += not check.passed
    print(f"{total - failed}/{total} checks passed", file=out)
    return EXIT_DOMAIN if failed else EXIT_OK


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="socle-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, handler, help_text: str, json_flag: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(handler=handler)
        if json_flag:
            p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient N^lam_{mu,nu}", json_flag=False)
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("mu", type=_partition_arg)
    p.add_argument("nu", type=_partition_arg)

    p = add("multi-lr", cmd_multi_lr, "iterated coefficient N^lam_{gamma_1..gamma_r, lam'}", json_flag=False)
    p.add_argument("partitions", nargs="+", type=_partition_arg, metavar="PARTITION",
                   help="lam gamma_1 ... gamma_r lam'")

    for name, handler, what in (("socle", cmd_socle, "socle layers"),
                                ("jh", cmd_jh, "Jordan-Hoelder multiplicities")):
        p = add(name, handler, f"{what} of the injective I^(lam,mu)")
        p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
        p.add_argument("--mu", type=_partition_arg, required=True)
        p.add_argument("--blocks", type=int, required=True)

    for name, fn, what in (("socle-k", socle.socle_layers_K, "K_{m|n}"),
                           ("socle-j", socle.socle_layers_J, "J_{m|n}")):
        p = add(name, _cmd_mn_layers(fn), f"socle layers of {what}")
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)

    p = add("act", cmd_act, "apply a Chevalley generator e_i or f_i")
    p.add_argument("op", choices=("e", "f"))
    p.add_argument("i", type=int)
    p.add_argument("--file", required=True, help="vector file (JSON lines)")

    for name, handler, what in (("gamma", cmd_gamma, "Zuckerman Euler map on a Verma-basis vector"),
                                ("iota", cmd_iota, "Kac classes expanded in the Verma basis")):
        p = add(name, handler, what)
        p.add_argument("--file", required=True, help="vector file (JSON lines)")

    p = add("contract", cmd_contract, "contraction of tensor slots i and j (1-based)")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--file", required=True, help="vector file (JSON lines)")

    p = add("socle-window", cmd_socle_window, "dimension of the contraction socle on a finite window")
    for name in ("m", "n", "lo", "hi"):
        p.add_argument(name, type=int)

    p = add("appendix-check", cmd_appendix_check, "check (soc T) cap Y inside s.Y on a window")
    for name in ("m", "n", "lo", "hi", "q"):
        p.add_argument(name, type=int)

    p = add("atyp", cmd_atyp, "degree of atypicality of a weight", json_flag=False)
    p.add_argument("weight", type=_weight_arg, help='e.g. "1,0|0,-1"')

    p = add("superschur", cmd_superschur, "super Schur function s_lam in (m|n) variables")
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = add("kac-sch", cmd_kac_sch, "supercharacter of the Kac module")
    p.add_argument("weight", type=_weight_arg)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = add("ds", cmd_ds, "ds evaluation of a supercharacter (x_m = y_n = t)")
    p.add_argument("--file", required=True, help="polynomial file (JSON)")
    p.add_argument("--power", type=int, default=1)

    p = add("verify", cmd_verify, "run invariant suites", json_flag=False)
    p.add_argument("suite", choices=(*SUITES, "all"))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--size", type=int, default=None, help="sample count for randomized suites")

    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code = args.handler(args, out)
    except UsageError as exc:
        print(f"socle-lab: error: {exc}", file=err)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"socle-lab: domain error: {exc}", file=err)
        return EXIT_DOMAIN
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return EXIT_OK if code is None else code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

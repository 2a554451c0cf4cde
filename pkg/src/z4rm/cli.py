"""Command-line interface.

Exit codes: 0 success, 1 failed verification, 2 usage or input error.
"""
import argparse
import sys

from . import __version__
from .analysis import gray_image_params
from .code import (DEFAULT_CAP, CapExceeded, Q4CodeFormatError, ZeroCodeError,
                   dumps, min_lee_distance, read_code, write_code)
from .duality import dual_code
from .family import InvalidIndex, format_table, rm_code, rm_table
from .verify import run_suite


class UsageError(Exception):
    pass


def _emit(code, out_path, stdout):
    if out_path:
        write_code(code, out_path)
    else:
        stdout.write(dumps(code))


def _load(path):
    try:
        return read_code(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except Q4CodeFormatError as e:
        raise UsageError(f"{path}: {e}") from None


def cmd_build(args, stdout):
    try:
        code = rm_code(args.s, args.r, args.m)
    except InvalidIndex as e:
        raise UsageError(str(e)) from None
    _emit(code, args.out, stdout)
    return 0


def cmd_info(args, stdout):
    code = _load(args.path)
    stdout.write(f"N={code.n} GAMMA={code.gamma} DELTA={code.delta}\n")
    stdout.write(f"ROWS={code.gamma + code.delta}\n")
    return 0


def cmd_mindist(args, stdout):
    code = _load(args.path)
    try:
        d = min_lee_distance(code, args.cap)
    except (ZeroCodeError, CapExceeded) as e:
        raise UsageError(str(e)) from None
    stdout.write(f"{d}\n")
    return 0


def cmd_dual(args, stdout):
    code = _load(args.path)
    try:
        dual = dual_code(code, args.inner)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(dual, args.out, stdout)
    return 0


def cmd_verify(args, stdout):
    if not args.family:
        raise UsageError("verify requires --family")
    ok = run_suite(args.m, args.extended, out=lambda line: stdout.write(line + "\n"))
    return 0 if ok else 1


def cmd_table(args, stdout):
    stdout.write(format_table(rm_table(args.m)))
    return 0


def cmd_gray(args, stdout):
    code = _load(args.path)
    report = gray_image_params(code)
    stdout.write("\n".join(report.lines()) + "\n")
    return 0


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="z4rm", description="Quaternary Reed-Muller codes")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    for name, required in (("build", False), ("export", True)):
        b = sub.add_parser(name, help="emit RM_s(r,m) as Q4CODE v1")
        b.add_argument("-s", type=int, required=True)
        b.add_argument("-r", type=int, required=True)
        b.add_argument("-m", type=int, required=True)
        b.add_argument("--out", required=required)
        b.set_defaults(func=cmd_build)

    i = sub.add_parser("info", help="print the type of a Q4CODE file")
    i.add_argument("path")
    i.set_defaults(func=cmd_info)

    d = sub.add_parser("mindist", help="minimum Lee distance")
    d.add_argument("path")
    d.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    d.set_defaults(func=cmd_mindist)

    du = sub.add_parser("dual", help="emit the dual code")
    du.add_argument("path")
    du.add_argument("--inner", choices=["standard", "kronecker"], required=True)
    du.add_argument("--out")
    du.set_defaults(func=cmd_dual)

    v = sub.add_parser("verify", help="run the family invariant suite")
    v.add_argument("--family", action="store_true")
    v.add_argument("-m", type=_positive, required=True)
    v.add_argument("--extended", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print the (gamma,delta) grid for m")
    t.add_argument("-m", type=_positive, required=True)
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("gray", help="Gray-image report")
    g.add_argument("path")
    g.set_defaults(func=cmd_gray)
    return p


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, stdout)
    except UsageError as e:
        stderr.write(f"z4rm: error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

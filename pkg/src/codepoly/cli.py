"""``code-enum``: enumerate code polynomials and verify identities from the shell.

Exit codes: 0 success (all identities equal), 1 some identity unequal,
2 usage or parse error, 3 a bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .codefile import CodeFile, CodeFileError, parse_code_file, render_code_file
from .codes import ENUMERATION_BOUND, SCAN_BOUND, BoundExceeded, CodeError, dual_code
from .enumerators import ROLES, TUPLE_BOUND, enumerate_polynomial
from .identities import (
    MACWILLIAMS_BOUND,
    IdentityReport,
    lemma1_for_code,
    thm31_intersection_to_weight,
    thm31_weight_to_intersection,
    thm32_inhomo_to_homo,
    thm33_intersection_decomposition,
    thm41_macwilliams_homogeneous,
    thm42_macwilliams_inhomogeneous,
)

EXIT_OK, EXIT_UNEQUAL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

THEOREMS = ("3.1a", "3.1b", "3.2", "3.3", "4.1", "4.2", "lemma2.1")
NEEDS_V = {"3.2", "4.1", "4.2"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    g: int = 1
    v: Optional[tuple[int, ...]] = None
    tuple_bound: int = TUPLE_BOUND
    scan_bound: int = SCAN_BOUND
    macwilliams_bound: int = MACWILLIAMS_BOUND
    fmt: str = "text"

    def check(self, code_file: CodeFile) -> None:
        if self.g < 1:
            raise UsageError(f"genus must be >= 1, got {self.g}")
        if self.v is not None:
            if len(self.v) != code_file.n:
                raise UsageError(f"--v has length {len(self.v)}, code length is {code_file.n}")
            for a in self.v:
                if not 0 <= a < code_file.ring.size:
                    raise UsageError(f"--v entry {a} is not an element of {code_file.ring}")


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _parse_theorems(text: str) -> list[str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in names if t not in THEOREMS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown theorem(s) {bad}; choose from {', '.join(THEOREMS)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="code-enum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("codefile")
    common.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    common.add_argument("--tuple-bound", type=int, default=TUPLE_BOUND)
    common.add_argument("--scan-bound", type=int, default=SCAN_BOUND)

    p = sub.add_parser("enumerate", parents=[common], help="print one of the four code polynomials")
    p.add_argument("--which", choices=ROLES, required=True)
    p.add_argument("-g", type=int, default=1)
    p.add_argument("--v", type=_parse_vector)

    p = sub.add_parser("verify", parents=[common], help="check identities on a code")
    p.add_argument("-g", type=int, default=1)
    p.add_argument("--v", type=_parse_vector)
    p.add_argument("--theorems", type=_parse_theorems, default=list(THEOREMS))
    p.add_argument("--macwilliams-bound", type=int, default=MACWILLIAMS_BOUND)

    sub.add_parser("dual", parents=[common], help="print the dual code as a code file")
    return parser


def cmd_enumerate(code_file: CodeFile, cfg: RunConfig, which: str, out=None) -> int:
    out = out or sys.stdout
    if which in ("jacobi-homo", "jacobi-inhomo") and cfg.v is None:
        raise UsageError(f"--which {which} requires --v")
    code = code_file.to_code(bound=cfg.tuple_bound)
    poly = enumerate_polynomial(code, cfg.g, which, cfg.v, tuple_bound=cfg.tuple_bound)
    if cfg.fmt == "json":
        out.write(poly.to_json() + "\n")
    else:
        out.write(poly.canonical_text() + "\n")
    return EXIT_OK


def run_theorem(name: str, code, cfg: RunConfig) -> list[IdentityReport]:
    g, v, tb = cfg.g, cfg.v, cfg.tuple_bound
    mw = dict(tuple_bound=tb, macwilliams_bound=cfg.macwilliams_bound, scan_bound=cfg.scan_bound)
    if name == "3.1a":
        return [thm31_weight_to_intersection(code, g, tb)]
    if name == "3.1b":
        return [thm31_intersection_to_weight(code, g, tb)]
    if name == "3.2":
        return [thm32_inhomo_to_homo(code, g, v, tb)]
    if name == "3.3":
        return [thm33_intersection_decomposition(code, g, tb)]
    if name == "4.1":
        return [thm41_macwilliams_homogeneous(code, g, v, **mw)]
    if name == "4.2":
        return [thm42_macwilliams_inhomogeneous(code, g, v, **mw)]
    if name == "lemma2.1":
        return lemma1_for_code(code, g, tb)
    raise UsageError(f"unknown theorem {name!r}")


def cmd_verify(code_file: CodeFile, cfg: RunConfig, theorems: Sequence[str], out=None) -> int:
    out = out or sys.stdout
    missing_v = [t for t in theorems if t in NEEDS_V]
    if missing_v and cfg.v is None:
        raise UsageError(f"theorem(s) {', '.join(missing_v)} require --v")
    code = code_file.to_code(bound=cfg.tuple_bound)
    reports: list[IdentityReport] = []
    errors: list[tuple[str, str]] = []
    for name in theorems:
        try:
            reports.extend(run_theorem(name, code, cfg))
        except BoundExceeded as exc:
            errors.append((name, str(exc)))
    if cfg.fmt == "json":
        obj = {
            "reports": [r.to_json_obj() for r in reports],
            "errors": [{"theorem": t, "error": e} for t, e in errors],
        }
        out.write(json.dumps(obj) + "\n")
    else:
        for r in reports:
            out.write(r.render() + "\n")
        for t, e in errors:
            out.write(f"{t}: bound exceeded: {e}\n")
    if not all(r.equal for r in reports):
        return EXIT_UNEQUAL
    if errors:
        return EXIT_BOUND
    return EXIT_OK


def cmd_dual(code_file: CodeFile, cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    code = code_file.to_code(bound=cfg.tuple_bound)
    dual = dual_code(code, scan_bound=cfg.scan_bound, bound=max(cfg.tuple_bound, ENUMERATION_BOUND))
    if cfg.fmt == "json":
        obj = {
            "ring": str(dual.ring),
            "n": dual.n,
            "size": dual.size,
            "codewords": [list(w) for w in dual.codewords],
        }
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(render_code_file(dual))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        g=getattr(args, "g", 1),
        v=getattr(args, "v", None),
        tuple_bound=args.tuple_bound,
        scan_bound=args.scan_bound,
        macwilliams_bound=getattr(args, "macwilliams_bound", MACWILLIAMS_BOUND),
        fmt=args.fmt,
    )
    try:
        code_file = parse_code_file(args.codefile)
        cfg.check(code_file)
        if args.command == "enumerate":
            return cmd_enumerate(code_file, cfg, args.which)
        if args.command == "verify":
            return cmd_verify(code_file, cfg, args.theorems)
        return cmd_dual(code_file, cfg)
    except (CodeFileError, UsageError, CodeError, OSError) as exc:
        print(f"code-enum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as exc:
        print(f"code-enum: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())

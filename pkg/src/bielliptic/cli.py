"""Command-line front end.

Subcommands::

    bielliptic branch --l 2 --m 1 [--twisted] | --wreath U2+
    bielliptic dims --group "G0(4)" --weight 8
    bielliptic ec --space {y2,a1,e2,delta,m} --system LABEL
    bielliptic euler --n 0-4 [--partition 111111] [--format json|latex|text]
    bielliptic verify [SUITE] [--max-weight 10] [--max-d 12] [--d 7]

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.  Default bounds come from ``BIELLIPTIC_MAX_N``,
``BIELLIPTIC_MAX_WEIGHT`` and ``BIELLIPTIC_MAX_D``.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from typing import Sequence

from . import __version__
from .cohomology import ec_A1, ec_Delta, ec_E2, ec_M, ec_Y2
from .dimforms import GROUPS, dim_cusp, dim_eisenstein, dim_new, equivariant_cusp_dims
from .getzler import euler_Bn
from .motives import MotiveClass
from .verify import SUITES, run_suite
from .weylchars import W
from .wreath import branch_sp4_to_wreath, branch_wreath_to_diagonal, parse_wreath_label, twisted_pullback

__all__ = ["emit_table", "format_row", "main", "parse_partition", "run"]

SCHEMA = "bielliptic.output/1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _env_bound(name: str, default: int) -> int:
    return int(os.environ.get(name, default))


MAX_N = _env_bound("BIELLIPTIC_MAX_N", 8)
MAX_WEIGHT = _env_bound("BIELLIPTIC_MAX_WEIGHT", 16)
MAX_D = _env_bound("BIELLIPTIC_MAX_D", 12)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering


def _partition_label(lam) -> str:
    return "".join(map(str, lam))


def format_row(row: dict, fmt: str = "text") -> str:
    """One line of the Euler-class table, zero coefficients omitted."""
    parts = []
    for lam, coeff in row.items():
        if not coeff:
            continue
        if fmt == "latex":
            body = coeff.latex()
            parts.append(f"({body})s_{{{_partition_label(lam)}}}" if lam else body)
        else:
            body = str(coeff)
            parts.append(f"({body})s{_partition_label(lam)}" if lam else body)
    text = " + ".join(parts) if parts else "0"
    return f"${text}$" if fmt == "latex" else text


def emit_table(rows: Sequence[int], partition=None, fmt: str = "text") -> str:
    """Table lines ``n: row``; with ``partition`` only that coefficient is printed."""
    lines = []
    for n in rows:
        row = euler_Bn(n)
        if partition is not None:
            coeff = row.get(tuple(partition), MotiveClass())
            lines.append(f"${coeff.latex()}$" if fmt == "latex" else str(coeff))
        else:
            lines.append(f"{n}: {format_row(row, fmt)}")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_partition(s: str) -> tuple[int, ...]:
    """Accept ``"1^6"``, ``"111111"``, ``"3,2,1"`` or ``"()"`` for the empty partition."""
    s = s.strip()
    if s in ("", "()", "0", "empty"):
        return ()
    if "^" in s:
        out = []
        for chunk in s.replace(" ", "").split(","):
            part, _, mult = chunk.partition("^")
            out += [int(part)] * int(mult or 1)
    elif "," in s:
        out = [int(x) for x in s.split(",")]
    else:
        out = [int(ch) for ch in s]
    if any(p <= 0 for p in out):
        raise UsageError(f"invalid partition {s!r}")
    return tuple(sorted(out, reverse=True))


def _parse_range(s: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:(?:-|\.\.)\s*(\d+))?\s*", s)
    if not m:
        raise UsageError(f"invalid range {s!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    return list(range(lo, hi + 1))


_W_RE = re.compile(r"^[wW]?\s*(\d+)\s*,\s*(\d+)\s*(?:\(\s*-?\s*(\d+)\s*\))?$")


def _parse_sp4(s: str):
    m = _W_RE.match(s.strip())
    if not m:
        raise UsageError(f"invalid Sp(4) label {s!r}; expected e.g. W2,1 or W2,1(-1)")
    l, mm, t = int(m.group(1)), int(m.group(2)), int(m.group(3) or 0)
    if not l >= mm >= 0:
        raise UsageError(f"highest weight ({l}, {mm}) is not dominant")
    return l, mm, t


def _parse_sp2(s: str) -> int:
    m = re.fullmatch(r"\s*[vV]?\s*(\d+)\s*", s)
    if not m:
        raise UsageError(f"invalid Sp(2) label {s!r}; expected e.g. V6")
    return int(m.group(1))


def _bound(name: str, value: int, limit: int) -> None:
    if value > limit:
        raise UsageError(f"{name}={value} exceeds the configured bound {limit}")


# ---------------------------------------------------------------------------
# commands


def _cmd_branch(args) -> tuple[dict, str]:
    if args.wreath:
        u = parse_wreath_label(args.wreath)
        terms = [
            {"label": f"V{c}{sign}", "twist": (u.weight - c) // 2}
            for c, sign in branch_wreath_to_diagonal(u)
        ]
        params = {"wreath": str(u)}
    else:
        if args.l is None or args.m is None:
            raise UsageError("branch needs --l and --m, or --wreath")
        if not args.l >= args.m >= 0:
            raise UsageError(f"highest weight ({args.l}, {args.m}) is not dominant")
        _bound("l", args.l, MAX_WEIGHT)
        cls = twisted_pullback(args.l, args.m) if args.twisted else branch_sp4_to_wreath(args.l, args.m)
        terms = [
            {"label": str(label), "twist": t}
            for (label, t), n in cls.items()
            for _ in range(n)
        ]
        params = {"l": args.l, "m": args.m, "twisted": args.twisted}
    text = " + ".join(
        f"{d['label']}(-{d['twist']})" if d["twist"] else d["label"] for d in terms
    )
    return {"parameters": params, "result": {"terms": terms}}, text or "0"


def _cmd_dims(args) -> tuple[dict, str]:
    if args.group not in GROUPS:
        raise UsageError(f"unknown group {args.group!r}; choose from {', '.join(GROUPS)}")
    _bound("weight", args.weight, MAX_WEIGHT * 4)
    k = args.weight
    result = {
        "group": args.group,
        "weight": k,
        "cusp": dim_cusp(args.group, k),
        "eisenstein": dim_eisenstein(args.group, k),
    }
    level = {"G1": 1, "G0(2)": 2, "G0(4)": 4}.get(args.group)
    if level:
        result["new"] = dim_new(level, k)
    if args.group == "G(2)":
        result["s3_multiplicities"] = equivariant_cusp_dims(k)._asdict()
    text = ", ".join(f"{key}={val}" for key, val in result.items())
    return {"parameters": {"group": args.group, "weight": k}, "result": result}, text


def _cmd_ec(args) -> tuple[dict, str]:
    space, label = args.space, args.system
    params = {"space": space, "system": label}
    if space == "y2":
        a = _parse_sp2(label)
        _bound("weight", a, MAX_WEIGHT)
        g = ec_Y2(a)
        result = {"graded": g.to_json(), "euler": {rho: e.to_json() for rho, e in g.euler().items()}}
        text = " + ".join(f"({e})·{rho}" for rho, e in g.euler().items() if e) or "0"
        return {"parameters": params, "result": result}, text
    if space == "a1":
        a = _parse_sp2(label)
        _bound("weight", a, MAX_WEIGHT)
        value = ec_A1(a)
    elif space in ("e2", "delta"):
        u = parse_wreath_label(label)
        _bound("weight", u.a, MAX_WEIGHT)
        value = ec_E2(u) if space == "e2" else ec_Delta(u)
    elif space == "m":
        l, m, t = _parse_sp4(label)
        _bound("l", l, MAX_WEIGHT)
        value = ec_M(W(l, m, t))
    else:
        raise UsageError(f"unknown space {space!r}")
    return {"parameters": params, "result": {"class": value.to_json(), "text": str(value)}}, str(value)


def _cmd_euler(args) -> tuple[dict, str]:
    rows = _parse_range(args.n)
    for n in rows:
        _bound("n", n, MAX_N)
    lam = parse_partition(args.partition) if args.partition is not None else None
    if lam is not None and any(sum(lam) != n for n in rows):
        raise UsageError(f"partition {lam} does not match every requested n")
    payload = []
    for n in rows:
        row = euler_Bn(n)
        payload.append(
            {
                "n": n,
                "coefficients": [
                    {"partition": list(p), "class": c.to_json(), "text": str(c)}
                    for p, c in row.items()
                    if lam is None or p == lam
                ],
            }
        )
    fmt = "latex" if args.format == "latex" else "text"
    if len(rows) == 1 and lam is None:
        text = format_row(euler_Bn(rows[0]), fmt)
    else:
        text = emit_table(rows, lam, fmt).rstrip("\n")
    params = {"n": rows, "partition": list(lam) if lam is not None else None}
    return {"parameters": params, "result": {"rows": payload}}, text


def _cmd_verify(args) -> tuple[dict, str, bool]:
    suite = args.suite_pos or args.suite
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    if args.d is not None and not 2 <= args.d <= args.max_d:
        raise UsageError(f"--d must lie in [2, {args.max_d}]")
    _bound("max-d", args.max_d, MAX_D)
    checks = run_suite(suite, max_weight=args.max_weight, max_d=args.max_d, d=args.d)
    ok = all(c.passed for c in checks)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" for c in checks]
    for c in checks:
        if not c.passed:
            lines += [f"    {c.name}: {f}" for f in c.failures[:10]]
    params = {"suite": suite, "max_weight": args.max_weight, "max_d": args.max_d, "d": args.d}
    result = {"passed": ok, "checks": [c.to_json() for c in checks]}
    return {"parameters": params, "result": result}, "\n".join(lines), ok


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bielliptic", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_format="json"):
        sp.add_argument("--format", choices=("json", "latex", "text"), default=default_format)
        sp.add_argument("--out", help="write output to this path instead of stdout")
        sp.add_argument("--timing", action="store_true", help="include wall-clock time in JSON")

    b = sub.add_parser("branch", help="branch W_{l,m} to Sp2 wr S2, or a wreath label to the diagonal")
    b.add_argument("--l", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--twisted", action="store_true", help="attach homogeneity Tate twists")
    b.add_argument("--wreath", help="wreath label such as U2,1 or U3+ to branch to Sp2 x S2")
    common(b)

    d = sub.add_parser("dims", help="dimensions of modular forms")
    d.add_argument("--group", required=True, help=f"one of {', '.join(GROUPS)}")
    d.add_argument("--weight", type=int, required=True)
    common(d)

    e = sub.add_parser("ec", help="compactly supported Euler class of a local system")
    e.add_argument("--space", required=True, choices=("y2", "a1", "e2", "delta", "m"))
    e.add_argument("--system", required=True, help="V6 | U2,1 | U3+ | W2,1(-1)")
    common(e)

    u = sub.add_parser("euler", help="S_n-equivariant Euler class of n-pointed bi-elliptic curves")
    u.add_argument("--n", required=True, help="a number or a range such as 0-4")
    u.add_argument("--partition", help="only this Schur coefficient, e.g. 1^6 or 111111")
    common(u, default_format="text")

    v = sub.add_parser("verify", help="run self-consistency suites")
    v.add_argument("suite_pos", nargs="?", metavar="SUITE")
    v.add_argument("--suite", default="all", help=f"all, {', '.join(SUITES)}")
    v.add_argument("--max-weight", type=int, default=min(10, MAX_WEIGHT))
    v.add_argument("--max-d", type=int, default=MAX_D)
    v.add_argument("--d", type=int)
    common(v, default_format="text")
    return p


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Execute a command; return the exit status and the serialized output."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), ""
    start = time.perf_counter()
    ok = True
    try:
        if args.command == "verify":
            record, text, ok = _cmd_verify(args)
        else:
            handler = {"branch": _cmd_branch, "dims": _cmd_dims, "ec": _cmd_ec, "euler": _cmd_euler}
            record, text = handler[args.command](args)
    except (UsageError, ValueError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    if args.format == "json":
        full = {"schema": SCHEMA, "version": __version__, "command": args.command, **record}
        if args.timing:
            full["timing_s"] = round(time.perf_counter() - start, 6)
        out = json.dumps(full, indent=2, sort_keys=True) + "\n"
    else:
        out = text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
        out = ""
    return (EXIT_OK if ok else EXIT_FAIL), out


def main(argv: Sequence[str] | None = None) -> int:
    status, out = run(argv)
    stream = sys.stdout if status != EXIT_USAGE else sys.stderr
    stream.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())

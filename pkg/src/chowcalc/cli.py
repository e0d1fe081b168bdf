"""Command-line front end.

    chowcalc ring --group gl --n 2 --q 3 --max-degree 3
    chowcalc ring --group sp --m 2 --q 3 --invert 2,3 --max-degree 4
    chowcalc levi --blocks 1,1 --q 3 --max-degree 4
    chowcalc wreath --l 2 --b 1 --height 1 --max-degree 3
    chowcalc sylow-shape --n 6 --q 2 --l 3
    chowcalc sylow-model --n 6 --q 2 --l 3 --max-degree 4
    chowcalc verify guillot

Exit status: 0 on success, 1 when a computation precondition fails, 2 on
usage errors.  Computed tables are cached under ``$CHOWCALC_CACHE``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, TextIO

from . import __version__
from .chevalley import ChevalleyQuery, chow_BG, sylow_chow_model, sylow_shape, theorem_a
from .invariants import GroupKind
from .presentations import GradedTable
from .suites import SUITES
from .twisted import twisted_coinvariants_levi
from .wreath import iterate_tower

TOOL = "chowcalc"


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# cache


def cache_dir() -> Path:
    env = os.environ.get("CHOWCALC_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / TOOL


def _cache_path(descriptor: str) -> Path:
    key = hashlib.sha256(f"{TOOL} {__version__} {descriptor}".encode()).hexdigest()
    return cache_dir() / f"{key}.json"


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    t = int(epoch) if epoch else int(time.time())
    return datetime.fromtimestamp(t, timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def load_or_compute(descriptor: str, compute: Callable[[], dict], use_cache: bool = True) -> dict:
    """Return the output document for ``descriptor``, computing it on a miss."""
    path = _cache_path(descriptor)
    if use_cache:
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
            if doc.get("descriptor") == descriptor:
                return doc
        except (OSError, ValueError):
            pass
    doc = compute()
    doc["descriptor"] = descriptor
    doc["metadata"] = {"tool": TOOL, "version": __version__, "timestamp": _timestamp()}
    if use_cache:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, sort_keys=True)
            os.replace(tmp, path)
        except OSError:
            pass
    return doc


# --------------------------------------------------------------------------
# documents and rendering


def _table_doc(table: GradedTable, cutoff: int, **extra) -> dict:
    doc = {
        "cutoff": cutoff,
        "components": [{"degree": d, "factors": list(G.factors)} for d, G in table.items()],
    }
    doc.update(extra)
    return doc


def _render_group(factors: list[int]) -> str:
    if not factors:
        return "0"
    return " + ".join("Z" if a == 0 else f"Z/{a}" for a in factors)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        lines = ["degree,factors"]
        for c in doc["components"]:
            lines.append(f"{c['degree']},{';'.join(map(str, c['factors']))}")
        return "\n".join(lines) + "\n"
    lines = [f"# {doc['descriptor']}"]
    for key in ("presentation", "shape"):
        if key in doc:
            lines.append(f"# {doc[key]}")
    width = max([len("degree")] + [len(str(c["degree"])) for c in doc["components"]])
    lines.append(f"{'degree'.ljust(width)}  group")
    for c in doc["components"]:
        lines.append(f"{str(c['degree']).ljust(width)}  {_render_group(c['factors'])}")
    return "\n".join(lines) + "\n"


def _parse_int_list(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


# --------------------------------------------------------------------------
# subcommands


def _cmd_ring(args) -> dict:
    if args.group == "sp":
        if args.m is None:
            raise UsageError("--group sp needs --m")
        size = args.m
    else:
        if args.n is None:
            raise UsageError(f"--group {args.group} needs --n")
        size = args.n
    inverted = sorted(set(_parse_int_list(args.invert)))
    letter = "m" if args.group == "sp" else "n"
    descriptor = (
        f"ring:{args.group}:{letter}={size}:q={args.q}:d={args.max_degree}"
        f":invert={','.join(map(str, inverted))}"
    )

    def compute():
        query = ChevalleyQuery(GroupKind(args.group, size), args.q, args.max_degree, frozenset(inverted))
        P, T = theorem_a(query) if inverted else chow_BG(query)
        return _table_doc(T, args.max_degree, presentation=str(P))

    return load_or_compute(descriptor, compute, not args.no_cache)


def _cmd_levi(args) -> dict:
    blocks = _parse_int_list(args.blocks)
    if not blocks:
        raise UsageError("--blocks needs at least one block size")
    descriptor = f"levi:blocks={','.join(map(str, blocks))}:q={args.q}:d={args.max_degree}"

    def compute():
        T = twisted_coinvariants_levi(blocks, args.q, args.max_degree)
        return _table_doc(T, args.max_degree)

    return load_or_compute(descriptor, compute, not args.no_cache)


def _cmd_wreath(args) -> dict:
    descriptor = f"wreath:l={args.l}:b={args.b}:height={args.height}:d={args.max_degree}"

    def compute():
        T = iterate_tower(args.l, args.b, args.height, args.max_degree + 1)
        return _table_doc(T, args.max_degree, model="F_l model")

    return load_or_compute(descriptor, compute, not args.no_cache)


def _cmd_sylow_model(args) -> dict:
    descriptor = f"sylow-model:n={args.n}:q={args.q}:l={args.l}:d={args.max_degree}"

    def compute():
        shape = sylow_shape(args.n, args.q, args.l)
        T = sylow_chow_model(shape, args.max_degree + 1)
        return _table_doc(T, args.max_degree, shape=str(shape), model="F_l model")

    return load_or_compute(descriptor, compute, not args.no_cache)


def _cmd_sylow_shape(args, out: TextIO) -> int:
    shape = sylow_shape(args.n, args.q, args.l)
    out.write(f"# sylow-shape:n={args.n}:q={args.q}:l={args.l}\n")
    out.write(f"l={shape.l} b={shape.b} towers={list(shape.towers)}\n")
    out.write(f"{shape}\n")
    out.write(f"order exponent {shape.order_exponent}\n")
    return 0


def _cmd_verify(args, out: TextIO) -> int:
    suite = SUITES.get(args.suite)
    if suite is None:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    passed = failed = 0
    for case, ok in suite():
        out.write(f"{'PASS' if ok else 'FAIL'} {args.suite}: {case}\n")
        if ok:
            passed += 1
        else:
            failed += 1
    out.write(f"{args.suite}: {passed} passed, {failed} failed\n")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL, description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def table_opts(p):
        p.add_argument("--max-degree", type=int, default=12)
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")

    p = sub.add_parser("ring", help="Chow ring of BG(F_q) for GL, SL or Sp")
    p.add_argument("--group", choices=("gl", "sl", "sp"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--invert", help="comma-separated primes to invert")
    table_opts(p)

    p = sub.add_parser("levi", help="twisted coinvariants of a block Levi of GL_n")
    p.add_argument("--blocks", required=True)
    p.add_argument("--q", type=int, required=True)
    table_opts(p)

    p = sub.add_parser("wreath", help="iterated wreath tower over Z/l^b")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--height", type=int, default=1)
    table_opts(p)

    for name in ("sylow-shape", "sylow-model"):
        p = sub.add_parser(name, help=f"{name.replace('-', ' ')} of GL_n(F_q) at l")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--l", type=int, required=True)
        if name == "sylow-model":
            table_opts(p)

    p = sub.add_parser("verify", help="run a named verification grid")
    p.add_argument("suite")
    return parser


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "sylow-shape":
            return _cmd_sylow_shape(args, out)
        if getattr(args, "max_degree", 0) < 0:
            raise UsageError("--max-degree must be nonnegative")
        handler = {
            "ring": _cmd_ring,
            "levi": _cmd_levi,
            "wreath": _cmd_wreath,
            "sylow-model": _cmd_sylow_model,
        }[args.command]
        doc = handler(args)
        out.write(render(doc, args.format))
        return 0
    except UsageError as exc:
        err.write(f"{TOOL}: usage error: {exc}\n")
        return 2
    except (ValueError, RuntimeError) as exc:
        err.write(f"{TOOL}: error: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

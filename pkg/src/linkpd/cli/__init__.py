"""Command-line entry point: ``linkpd [flags] SCRIPT`` (or ``-e TEXT``)."""

from __future__ import annotations

import argparse
import sys

from ..expr import ParseError
from .runner import EXIT_ERROR, Options, Result, Runner, ScriptError, canonical_generators, run
from .script import SIGNATURES, Binding, Command, IdealLit, RingDecl, Script, parse, print_script

__all__ = ["main", "parse", "print_script", "run", "Options", "Runner", "Result", "Script",
           "RingDecl", "Binding", "Command", "IdealLit", "ScriptError", "SIGNATURES",
           "canonical_generators"]


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="linkpd",
        description="Run a script of ideal computations (Groebner bases, colons, "
                    "resolutions, links) or the built-in verification suite.")
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("script", nargs="?", help="script file, or - for standard input")
    src.add_argument("-e", "--execute", metavar="TEXT", help="script given inline")
    src.add_argument("--verify-paper", action="store_true",
                     help="run the verification suite without a script")
    ap.add_argument("--field", help="override the script's field: QQ or ZZ/p")
    ap.add_argument("--order", choices=["grevlex", "lex"], help="override the monomial order")
    ap.add_argument("--seed", type=int, default=1, help="seed for random choices (default 1)")
    ap.add_argument("--json", action="store_true", help="one JSON object per command")
    ap.add_argument("--timeout-secs", type=float, default=None,
                    help="per-command time limit; an expired command is reported as skipped")
    ap.add_argument("--print", dest="print_only", action="store_true",
                    help="parse and print the script in canonical form, then exit")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    opts = Options(field=ns.field, order=ns.order, seed=ns.seed, json=ns.json,
                   timeout_secs=ns.timeout_secs)
    if ns.verify_paper:
        text = f"ring {ns.field or 'ZZ/32003'}[x];\nverify_paper({ns.seed});\n"
    elif ns.execute is not None:
        text = ns.execute
    elif ns.script == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(ns.script, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
    try:
        script = parse(text)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if ns.print_only:
        sys.stdout.write(print_script(script))
        return 0
    return run(script, opts)

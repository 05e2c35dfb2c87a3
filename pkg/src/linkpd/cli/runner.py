"""Execute a parsed script against the engine and format the results."""

from __future__ import annotations

import json
import signal
from contextlib import contextmanager
from dataclasses import dataclass

from ..expr import Name, evaluate
from ..fields import field_from_name
from ..ideal import Ideal, colon, eliminate, intersect, power, saturate
from ..invariants import codim, dimension, hilbert, multiplicity
from ..linkage import find_regular_sequence, is_unmixed, link, unmixed_part
from ..orders import order_from_name
from ..papersuite import verify_all
from ..poly import PolyRing
from ..resolution import PolyMatrix, betti, minimize, minors, pd_quotient, resolve
from .script import Binding, Command, IdealLit, Script

EXIT_OK, EXIT_CHECKS_FAILED, EXIT_ERROR = 0, 1, 2


class CommandTimeout(Exception):
    pass


class ScriptError(Exception):
    """A runtime failure of one command (index is 1-based)."""

    def __init__(self, index: int, command: str, message: str):
        super().__init__(f"command {index} ({command}): {message}")
        self.index = index
        self.command = command


@dataclass
class Options:
    field: str | None = None
    order: str | None = None
    seed: int = 1
    json: bool = False
    timeout_secs: float | None = None


@dataclass
class Result:
    command: str
    inputs: list[str]
    kind: str  # generators | value | table | report | skipped
    payload: object
    anchors: list[str] | None = None
    failed_checks: bool = False

    def to_json(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs, "result_kind": self.kind}
        if self.kind == "generators":
            out["generators"] = self.payload
        elif self.kind == "table":
            out["table"] = self.payload
        else:
            out["value"] = self.payload
        if self.anchors is not None:
            out["anchors"] = self.anchors
        return out

    def to_text(self) -> str:
        if self.kind == "generators":
            return f"{self.command} = ({', '.join(self.payload)})"
        if self.kind == "table":
            return f"{self.command} =\n{self.payload['text']}"
        if self.kind == "report":
            return self.payload["text"]
        if isinstance(self.payload, bool):
            return f"{self.command} = {'true' if self.payload else 'false'}"
        return f"{self.command} = {self.payload}"


@contextmanager
def _time_limit(seconds: float | None):
    if not seconds or not hasattr(signal, "SIGALRM"):
        yield
        return

    def on_alarm(signum, frame):
        raise CommandTimeout()

    old = signal.signal(signal.SIGALRM, on_alarm)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def canonical_generators(I: Ideal) -> list[str]:
    """Reduced Groebner basis, largest leading monomial first."""
    return [str(g) for g in I.gb()]


def build_ring(script: Script, opts: Options) -> PolyRing:
    fld = field_from_name(opts.field or script.ring.field)
    order_name = opts.order or script.ring.order or "grevlex"
    return PolyRing(script.ring.variables, fld, order_from_name(order_name))


class Runner:
    def __init__(self, script: Script, opts: Options | None = None):
        self.script = script
        self.opts = opts or Options()
        self.ring = build_ring(script, self.opts)
        self.env: dict = {}

    # -- values ------------------------------------------------------------
    def _poly(self, node):
        return evaluate(node, self.ring, {k: v for k, v in self.env.items()
                                          if not isinstance(v, (Ideal, PolyMatrix))})

    def _bind(self, b: Binding):
        if b.kind == "ideal":
            self.env[b.name] = Ideal(self.ring, [self._poly(e) for e in b.body])
        elif b.kind == "poly":
            self.env[b.name] = self._poly(b.body[0])
        else:
            self.env[b.name] = PolyMatrix(self.ring, [[self._poly(e) for e in row] for row in b.body])

    def _arg(self, a):
        if isinstance(a, int):
            return a
        if isinstance(a, IdealLit):
            return Ideal(self.ring, [self._poly(e) for e in a.gens])
        if isinstance(a, Name) and isinstance(self.env.get(a.id), (Ideal, PolyMatrix)):
            return self.env[a.id]
        return self._poly(a)

    # -- commands ----------------------------------------------------------
    def _execute(self, cmd: Command) -> Result:
        args = [self._arg(a) for a in cmd.args]
        inputs = [cmd.arg_text(a) for a in cmd.args]
        name = cmd.name
        seed = self.opts.seed

        def gens(I):
            return Result(name, inputs, "generators", canonical_generators(I))

        def value(v):
            return Result(name, inputs, "value", v)

        if name == "gb":
            return gens(args[0])
        if name == "nf":
            return value(str(args[1].gb().reduce(args[0])))
        if name == "sum":
            return gens(args[0] + args[1])
        if name == "product":
            return gens(args[0] * args[1])
        if name == "power":
            return gens(power(args[0], args[1]))
        if name == "intersect":
            return gens(intersect(args[0], args[1]))
        if name == "colon":
            return gens(colon(args[0], args[1]))
        if name == "saturate":
            return gens(saturate(args[0], args[1]))
        if name == "eliminate":
            return gens(eliminate(args[0], args[1]))
        if name == "dim":
            return value(dimension(args[0]))
        if name == "codim":
            return value(codim(args[0]))
        if name == "mult":
            return value(multiplicity(args[0]))
        if name == "hilbert":
            return value(str(hilbert(args[0])))
        if name == "regseq":
            z = find_regular_sequence(args[0], list(args[1:]), seed)
            return Result(name, inputs, "generators", [str(f) for f in z])
        if name in ("resolve", "betti"):
            res = minimize(resolve(args[0]))
            table = betti(res)
            payload = {"betti": {f"{i},{j}": v for (i, j), v in sorted(table.table.items())},
                       "ranks": res.ranks, "text": str(table)}
            return Result(name, inputs, "table", payload)
        if name == "pd":
            return value(pd_quotient(args[0]))
        if name == "minors":
            return gens(minors(args[0], args[1]))
        if name == "link":
            res = link(args[0], list(args[1].gens))
            r = gens(res.linked)
            if not res.ok:
                raise ValueError("linked ideal fails the multiplicity check")
            return r
        if name == "unmixed":
            return gens(unmixed_part(args[0], seed))
        if name == "isunmixed":
            return value(is_unmixed(args[0], seed))
        if name == "verify_paper":
            rseed = args[0] if args else seed
            report = verify_all(rseed, self.ring.field)
            payload = report.to_dict()
            anchors = sorted({e.anchor for e in report.entries})
            if not self.opts.json:
                payload = {"text": report.to_text()}
            return Result(name, inputs, "report", payload, anchors, failed_checks=not report.passed)
        raise ValueError(f"unknown command {name}")

    def run(self):
        """Yield a Result per command; raises ScriptError on the first failure."""
        index = 0
        for item in self.script.items:
            if isinstance(item, Binding):
                self._bind(item)
                continue
            index += 1
            try:
                with _time_limit(self.opts.timeout_secs):
                    yield self._execute(item)
            except CommandTimeout:
                yield Result(item.name, [item.arg_text(a) for a in item.args], "skipped",
                             "skipped/timeout")
            except Exception as exc:
                raise ScriptError(index, item.name, f"{type(exc).__name__}: {exc}") from exc


def run(script: Script, opts: Options | None = None, out=None, err=None) -> int:
    """Run ``script``, writing results to ``out``; returns the exit code."""
    import sys
    out = out or sys.stdout
    err = err or sys.stderr
    opts = opts or Options()
    code = EXIT_OK
    try:
        for res in Runner(script, opts).run():
            if opts.json:
                out.write(json.dumps(res.to_json(), sort_keys=True) + "\n")
            else:
                out.write(res.to_text() + "\n")
            out.flush()
            if res.kind == "skipped":
                code = EXIT_ERROR
            elif res.failed_checks and code == EXIT_OK:
                code = EXIT_CHECKS_FAILED
    except ScriptError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR
    except ValueError as exc:  # bad field or order names
        err.write(f"error: {exc}\n")
        return EXIT_ERROR
    return code

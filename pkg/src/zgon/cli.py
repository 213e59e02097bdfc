"""Command line: ``zgon hom | verify | arquiver | plot``.

Exit codes: 0 success, 1 a verification mismatch, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .core import ConfigurationError, DomainError, Gon
from .formats import ParseError, parse_arc, parse_interval, parse_object
from .linalg import field_named
from .rep import Interval, check_interval, hom_report
from .stable import Arc, ar_quiver, hom_dim, is_admissible, phi_inv
from . import figures, verify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    m: int = 1
    window: int = 4
    field: str = "rational"
    seed: int = 0
    output: str = "text"

    def validate(self, *, allow_empty_window: bool = False) -> None:
        if self.m < 1:
            raise ConfigurationError("--m must be at least 1")
        if self.window < (0 if allow_empty_window else 1):
            raise ConfigurationError("--window must be at least 1")
        field_named(self.field)

    @property
    def gon(self) -> Gon:
        return Gon(self.m)


def _config(ns) -> RunConfig:
    return RunConfig(ns.m, ns.window, ns.field, ns.seed, ns.output)


def _emit(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- commands ---------------------------------------------------------------------------

def cmd_hom(cfg: RunConfig, x: str, y: str, arcs: bool = False) -> dict:
    gon = cfg.gon
    if arcs:
        a, b = parse_arc(x), parse_arc(y)
        gon.check(a.a1, a.a2, b.a1, b.a2)
        for c in (a, b):
            if not is_admissible(c):
                raise DomainError(f"{c} is not admissible")
        report = hom_report(phi_inv(a), phi_inv(b)).as_dict()
        return {"source": str(a), "target": str(b), "dim": hom_dim(a, b), **report}
    U, V = parse_interval(x), parse_interval(y)
    check_interval(U, gon)
    check_interval(V, gon)
    return {"source": str(U), "target": str(V), **hom_report(U, V).as_dict()}


def cmd_verify(cfg: RunConfig, *, suites: list[str] | None = None, samples: int | None = None,
               exhaustive: bool = False) -> tuple[list[dict], int]:
    cfg.validate()
    extra = {}
    if samples is not None:
        extra = {"samples": samples, "pf_samples": samples, "seq_samples": samples,
                 "triple_samples": samples}
    vc = verify.VerifyConfig(m=cfg.m, window=cfg.window, field=field_named(cfg.field),
                             seed=cfg.seed, exhaustive_sequences=exhaustive, **extra)
    results = [r.as_dict() for r in verify.run(vc, suites)]
    code = EXIT_OK if all(r["passed"] for r in results) else EXIT_MISMATCH
    return results, code


def cmd_arquiver(cfg: RunConfig, fmt: str = "dot") -> str:
    cfg.validate(allow_empty_window=True)
    g = ar_quiver(cfg.gon, cfg.window)
    if fmt == "dot":
        return figures.quiver_dot(g)
    return json.dumps(figures.quiver_adjacency(g), indent=1) + "\n"


def cmd_plot(cfg: RunConfig, objects: list[str], *, hammocks: bool = False,
             triangle: bool = False) -> str:
    cfg.validate(allow_empty_window=True)
    gon = cfg.gon
    parsed: list[Interval | Arc] = []
    for s in objects:
        obj = parse_object(s)
        if isinstance(obj, Interval):
            check_interval(obj, gon)
        else:
            gon.check(obj.a1, obj.a2)
            if not is_admissible(obj):
                raise DomainError(f"{obj} is not admissible")
        parsed.append(obj)
    return figures.gon_svg(gon, parsed, window=cfg.window, hammocks=hammocks, triangle=triangle)


# -- argument parsing ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=1, help="number of copies of Z")
    common.add_argument("--window", type=int, default=4, help="index bound |n| <= window")
    common.add_argument("--field", choices=["rational", "prime"], default="rational")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", choices=["text", "json"], default="text")

    p = argparse.ArgumentParser(prog="zgon", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hom", parents=[common], help="Hom report for two objects")
    h.add_argument("source")
    h.add_argument("target")
    h.add_argument("--arcs", action="store_true", help="read the objects as arcs")

    v = sub.add_parser("verify", parents=[common], help="run the verification suites")
    v.add_argument("--suite", action="append", choices=sorted(verify.SUITES), dest="suites")
    v.add_argument("--samples", type=int, default=None, help="oracle samples per suite")
    v.add_argument("--exhaustive", action="store_true", help="check every middle-term sequence")

    q = sub.add_parser("arquiver", parents=[common], help="export the AR quiver")
    q.add_argument("--format", choices=["dot", "json"], default="dot")
    q.add_argument("--file", default=None, help="destination (stdout by default)")

    g = sub.add_parser("plot", parents=[common], help="draw arcs or intervals as SVG")
    g.add_argument("objects", nargs="*")
    g.add_argument("--format", choices=["svg"], default="svg")
    g.add_argument("--hammocks", action="store_true")
    g.add_argument("--triangle", action="store_true")
    g.add_argument("--file", default=None)
    return p


def _print_report(results: list[dict], stream) -> None:
    for r in results:
        flag = "PASS" if r["passed"] else "FAIL"
        stream.write(f"{flag} {r['suite']} ({r['checked']} checks)\n")
        for c in r["counterexamples"]:
            stream.write(f"  {c['pair']}: closed form {c['closed_form']}, oracle {c['oracle']}\n")


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = _config(ns)
    try:
        if ns.command == "hom":
            rep = cmd_hom(cfg, ns.source, ns.target, ns.arcs)
            if cfg.output == "json":
                print(json.dumps(rep, sort_keys=True))
            else:
                for k, val in rep.items():
                    print(f"{k} {val}")
            return EXIT_OK
        if ns.command == "verify":
            results, code = cmd_verify(cfg, suites=ns.suites, samples=ns.samples,
                                       exhaustive=ns.exhaustive)
            if cfg.output == "json":
                print(json.dumps({"passed": code == EXIT_OK, "suites": results}, indent=1))
            else:
                _print_report(results, sys.stdout)
            return code
        if ns.command == "arquiver":
            _emit(cmd_arquiver(cfg, ns.format), ns.file)
            return EXIT_OK
        if ns.command == "plot":
            _emit(cmd_plot(cfg, ns.objects, hammocks=ns.hammocks, triangle=ns.triangle), ns.file)
            return EXIT_OK
    except (ParseError, DomainError, ConfigurationError, ValueError) as exc:
        print(f"zgon: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

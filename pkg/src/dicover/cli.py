"""Command-line front end.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error,
3 result not certified (budget or search cap reached).  On a nonzero exit
the first line of output is ``<STATUS> <tag>: <reason>``.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .covering import build_cover_ball, check_antisymmetry
from .dipaths import (
    cellular_approximate,
    directed_loops,
    initial_corner,
    is_essential,
    reachability,
    shortest_directed_cycle,
)
from .errors import (
    CertificateError,
    DicoverError,
    DomainError,
    ParseError,
    PreconditionError,
    SearchLimitError,
)
from .formats import parse, parse_path, parse_track, serialize
from .generators import generate
from .homology import euler_characteristic, homology, nonnegative_cycle_audit
from .precubical import CubeId, PrecubicalSet, validate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Report:
    """Human-readable lines followed by a ``#kv`` section."""

    def __init__(self, command: str, source: str):
        self.lines = []
        self.kv = {}
        self.status = None
        self.add("command", command)
        self.add("instance", source)

    def line(self, text: str = ""):
        self.lines.append(text)

    def add(self, key: str, value):
        self.kv[key] = value

    def fail(self, status: str, tag: str, reason: str):
        self.status = f"{status} {tag}: {reason}"

    def render(self) -> str:
        out = [self.status] if self.status else []
        out += self.lines
        out.append("#kv")
        out += [f"{k}={v}" for k, v in self.kv.items()]
        return "\n".join(out) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _instance_args(p):
    p.add_argument("--in", dest="infile", metavar="FILE", help="pcs v1 instance file")
    p.add_argument("--gen", nargs="+", metavar="NAME", help="generator name and integer parameters")
    p.add_argument("--forbid", nargs=4, type=int, action="append", default=[],
                   metavar=("X1", "Y1", "X2", "Y2"), help="remove grid squares (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dicover", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"dicover {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    for name, help_ in [
        ("validate", "check the face identities"),
        ("homology", "integer H0 and H1"),
        ("reach", "vertex reachability preorder"),
        ("dump", "print the instance in canonical pcs v1 form"),
    ]:
        _instance_args(sub.add_parser(name, help=help_))

    p = sub.add_parser("loops", help="certify every short directed loop as essential")
    _instance_args(p)
    p.add_argument("--max-len", type=int, required=True)

    p = sub.add_parser("essential", help="certify one loop literal")
    _instance_args(p)
    p.add_argument("--path", required=True, help="'path <vertex> <edge> ...'")

    p = sub.add_parser("approx", help="cellular approximation of a PL track")
    _instance_args(p)
    p.add_argument("--track", required=True, metavar="FILE")

    p = sub.add_parser("cover", help="build a cover ball and check antisymmetry")
    _instance_args(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--base", help="basepoint vertex name (default: first vertex)")

    p = sub.add_parser("audit", help="search for bounding nonnegative 1-cycles")
    _instance_args(p)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--cap", type=int, default=10**6, help="largest search space allowed")
    return parser


def _load(args, check=True) -> tuple:
    if bool(args.infile) == bool(args.gen):
        raise UsageError("give exactly one of --in or --gen")
    if args.infile:
        try:
            text = Path(args.infile).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.infile}: {exc.strerror}") from None
        return parse(text, check=check), args.infile
    name, *params = args.gen
    try:
        ints = [int(p) for p in params]
    except ValueError:
        raise UsageError(f"generator parameters must be integers: {params}") from None
    label = " ".join(args.gen)
    for rect in args.forbid:
        label += " --forbid " + " ".join(map(str, rect))
    return generate(name, ints, args.forbid), label


def _summary(rep: Report, X: PrecubicalSet):
    counts = ",".join(str(c) for c in X.counts)
    rep.line(f"cubes per dimension: {counts or '-'}")
    rep.add("counts", counts)


def cmd_validate(args, rep, X):
    report = validate(X)
    rep.add("violations", len(report.violations))
    if report.ok:
        rep.line("validate: ok")
        return EXIT_OK
    for v in report.violations:
        rep.line(f"violation: {v}")
    rep.fail("FAIL", "validate", f"{len(report.violations)} face-identity violation(s)")
    return EXIT_FAIL


def cmd_homology(args, rep, X):
    h = homology(X)
    rep.line(f"homology: H0 rank {h.h0_rank}, H1 = {h.h1_string()}")
    rep.line(f"ranks: d1 {h.rank_d1}, d2 {h.rank_d2}")
    rep.add("h0_rank", h.h0_rank)
    rep.add("h1_free_rank", h.h1_free_rank)
    rep.add("h1_torsion", ",".join(map(str, h.h1_torsion)))
    rep.add("h1", h.h1_string().replace(" ", ""))
    if X.dim <= 2:
        rep.add("euler_characteristic", euler_characteristic(X))
    return EXIT_OK


def cmd_reach(args, rep, X):
    pre = reachability(X)
    witness = shortest_directed_cycle(X)
    strict = sum(1 for u, v in pre.relation if u != v)
    rep.line(f"reach: {pre.size} vertices, {len(pre.relation)} related pairs ({strict} strict)")
    rep.line(f"antisymmetric: {'yes' if pre.is_antisymmetric() else 'no'}")
    if witness is not None:
        rep.line(f"shortest directed loop: {witness.format()}")
    rep.add("vertices", pre.size)
    rep.add("pairs", len(pre.relation))
    rep.add("antisymmetric", str(pre.is_antisymmetric()).lower())
    rep.add("directed_cycle", "none" if witness is None else len(witness))
    return EXIT_OK


def cmd_loops(args, rep, X):
    if args.max_len < 0:
        raise UsageError("--max-len must be nonnegative")
    h = homology(X)
    loops = directed_loops(X, args.max_len)
    for gamma in loops:
        is_essential(gamma, h)
    rep.line(f"loops: {len(loops)} nonempty directed loops of length <= {args.max_len}, all essential")
    witness = shortest_directed_cycle(X)
    if witness is not None:
        rep.line(f"shortest: {witness.format()}")
    rep.add("max_len", args.max_len)
    rep.add("loops", len(loops))
    rep.add("essential", len(loops))
    return EXIT_OK


def cmd_essential(args, rep, X):
    gamma = parse_path(X, args.path)
    if not gamma.is_loop:
        raise UsageError(f"{gamma.format()} is not a loop")
    cert = is_essential(gamma)
    rep.line(f"essential: {'yes' if cert.essential else 'no'} ({cert.describe()})")
    rep.add("path", gamma.format().replace(" ", "_"))
    rep.add("length", len(gamma))
    rep.add("essential", str(cert.essential).lower())
    rep.add("cycle", cert.cycle.format(X).replace(" ", ""))
    return EXIT_OK


def cmd_approx(args, rep, X):
    try:
        text = Path(args.track).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.track}: {exc.strerror}") from None
    alpha = parse_track(X, text)
    beta = cellular_approximate(alpha)
    want_start = initial_corner(X, alpha.initial)
    want_end = initial_corner(X, alpha.final)
    ok = beta.start == want_start and beta.end == want_end
    nonconstant_loop = alpha.is_loop and not alpha.is_constant
    if nonconstant_loop and not beta.edges:
        ok = False
    rep.line(f"approx: {beta.format()}")
    rep.line(f"endpoints: {X.name(CubeId(0, beta.start))} -> {X.name(CubeId(0, beta.end))}")
    rep.add("segments", len(alpha.segments))
    rep.add("edges", len(beta))
    rep.add("loop", str(alpha.is_loop).lower())
    rep.add("contract", "ok" if ok else "violated")
    if not ok:
        rep.fail("FAIL", "approx", "endpoint or nonconstancy contract violated")
        return EXIT_FAIL
    return EXIT_OK


def cmd_cover(args, rep, X):
    if args.radius < 0:
        raise UsageError("--radius must be nonnegative")
    if args.budget <= 0:
        raise UsageError("--budget must be positive")
    base = 0
    if args.base is not None:
        c = X.lookup(args.base)
        if c.dim != 0:
            raise UsageError(f"{args.base!r} is not a vertex")
        base = c.index
    ball = build_cover_ball(X, base, args.radius, args.budget)
    rep.line(f"cover: basepoint {X.name(CubeId(0, base))}, radius {args.radius}, budget {args.budget}")
    for d, (n, a) in enumerate(ball.layer_counts()):
        rep.line(f"layer {d}: {n} nodes, {a} darts")
    rep.line(f"total: {len(ball.nodes)} nodes, {len(ball.darts)} darts")
    rep.add("radius", args.radius)
    rep.add("budget", args.budget)
    rep.add("base", X.name(CubeId(0, base)))
    rep.add("nodes", len(ball.nodes))
    rep.add("darts", len(ball.darts))
    rep.add("unknown", len(ball.unknown))
    if not ball.certified:
        rep.add("verdict", "UNKNOWN")
        rep.line(f"verdict: UNKNOWN (cover radius={args.radius} budget={args.budget})")
        rep.fail("UNKNOWN", "cover", f"{len(ball.unknown)} merge(s) unresolved within budget {args.budget}")
        return EXIT_UNKNOWN
    bad = ball.check_local_bijection()
    verdict = check_antisymmetry(ball)
    if bad:
        rep.add("verdict", "FAIL")
        rep.fail("FAIL", "cover", f"{len(bad)} interior node(s) violate the local bijection")
        return EXIT_FAIL
    if not verdict.passed:
        rep.add("verdict", "FAIL")
        rep.line(f"directed cycle projects to: {verdict.projection.format()}")
        rep.fail("FAIL", "cover", f"directed cycle of length {len(verdict.cycle)} in the ball")
        return EXIT_FAIL
    rep.add("verdict", "PASS")
    rep.line(f"verdict: PASS (check_antisymmetry radius={args.radius} budget={args.budget})")
    return EXIT_OK


def cmd_audit(args, rep, X):
    if args.bound < 0:
        raise UsageError("--bound must be nonnegative")
    try:
        audit = nonnegative_cycle_audit(X, args.bound, cap=args.cap)
    except SearchLimitError as exc:
        rep.add("bound", args.bound)
        rep.add("verdict", "UNKNOWN")
        rep.fail("UNKNOWN", "audit", str(exc))
        return EXIT_UNKNOWN
    rep.line(f"audit: bound {args.bound}, {len(audit.cyclic_edges)} edges on directed cycles, "
             f"{audit.cycles_checked} nonnegative cycles checked")
    rep.add("bound", args.bound)
    rep.add("cycles_checked", audit.cycles_checked)
    rep.add("counterexamples", len(audit.counterexamples))
    if audit.counterexamples:
        for c in audit.counterexamples:
            rep.line(f"counterexample: {c.format(X)}")
        rep.add("verdict", "FAIL")
        rep.fail("FAIL", "audit", f"{len(audit.counterexamples)} bounding nonnegative cycle(s)")
        return EXIT_FAIL
    rep.add("verdict", "PASS")
    rep.line(f"verdict: PASS (audit bound={args.bound})")
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "homology": cmd_homology,
    "reach": cmd_reach,
    "loops": cmd_loops,
    "essential": cmd_essential,
    "approx": cmd_approx,
    "cover": cmd_cover,
    "audit": cmd_audit,
}


def run(argv) -> tuple:
    """Run one command; returns ``(output_text, exit_code)``."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return f"ERROR usage: {exc}\n", EXIT_USAGE
    try:
        X, source = _load(args, check=args.command != "validate")
        if args.command == "dump":
            return serialize(X), EXIT_OK
        rep = Report(args.command, source)
        _summary(rep, X)
        code = COMMANDS[args.command](args, rep, X)
        return rep.render(), code
    except UsageError as exc:
        return f"ERROR usage: {exc}\n", EXIT_USAGE
    except ParseError as exc:
        return f"ERROR parse: {exc}\n", EXIT_USAGE
    except (DomainError, PreconditionError) as exc:
        return f"ERROR usage: {exc}\n", EXIT_USAGE
    except CertificateError as exc:
        return f"FAIL certificate: {exc}\n", EXIT_FAIL
    except DicoverError as exc:
        return f"ERROR {type(exc).__name__}: {exc}\n", EXIT_USAGE


def main(argv=None) -> int:
    out, code = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

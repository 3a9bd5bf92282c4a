"""Command-line entry point: ``pdcert <command> ...``.

Exit codes: 0 every verdict passes, 1 some check fails, 2 usage or parse
error, 3 budget or precision shortfall.
"""

from __future__ import annotations

import argparse
import sys

from . import workflows
from .qexp import PrecisionError
from .report import (
    EXIT_FAIL,
    EXIT_OK,
    EXIT_SHORTFALL,
    EXIT_USAGE,
    exit_code,
    render_json,
    render_text,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = _Parser(prog="pdcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bernoulli", parents=[common], help="exact Bernoulli number B_k")
    b.add_argument("k", type=int)
    b.add_argument("--mod", type=int, metavar="P", help="also reduce mod the prime P")

    h = sub.add_parser("hunt", parents=[common], help="search primes ell meeting the level-raising hypotheses")
    h.add_argument("--p", type=int, required=True)
    h.add_argument("--a", type=int, required=True, help="chi = omega_p^a, a odd")
    h.add_argument("--bound", type=int, required=True)
    h.add_argument("--nonsplit", action="store_true", help="p | ell + 1 instead of p not dividing ell^2 - 1")
    h.add_argument("--all", action="store_true", help="report every prime, not only the ones that pass")

    v = sub.add_parser("verify-eigensystem", parents=[common],
                       help="build and certify the weight 2p eigenform of level ell")
    v.add_argument("--p", type=int, required=True, choices=(5, 7, 11))
    v.add_argument("--ell", type=int, required=True)
    v.add_argument("--precision", type=int)

    r = sub.add_parser("ring-analyze", parents=[common], help="structure of monomial quotients of power series rings")
    r.add_argument("file", help="presentation file, or - for stdin")

    hp = sub.add_parser("h-poly", parents=[common], help="the h_ell power series and their identities")
    hp.add_argument("--ell", type=int, required=True)
    hp.add_argument("--degree", type=int, default=6)
    hp.add_argument("--mod", type=int, metavar="P")

    ps = sub.add_parser("pseudo-check", parents=[common], help="pseudo-character laboratory on a catalog pair")
    ps.add_argument("--ring", required=True, help="F3, F3[e], F3[x,y], Z/9, ...")
    ps.add_argument("--group", required=True, help="C4, S3, D5, C2xC3, Dih(C3xC3), ...")
    ps.add_argument("--budget", type=int)
    ps.add_argument("--samples", type=int, default=200)
    ps.add_argument("--seed", type=int, default=0)

    sub.add_parser("examples", parents=[common], help="reproduce the three worked examples")
    return parser


def _examples():
    reports = []
    for p, a, ell in ((13, 3, 5), (17, 3, 293)):
        reports.append(workflows.hypothesis_report(p, a, ell))
    reports.append(workflows.hypothesis_report(5, 1, 2))
    reports.append(workflows.verify_level_raised_eigenform(5, 2))
    return reports


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    code = None
    try:
        if args.command == "bernoulli":
            reports = [workflows.bernoulli_report(args.k, args.mod)]
        elif args.command == "hunt":
            mode = "nonsplit" if args.nonsplit else "split"
            everything = workflows.hunt(args.p, args.a, args.bound, mode)
            hits = [r for r in everything if workflows.ell_hypotheses_pass(r)]
            reports = everything if args.all else hits
            code = EXIT_OK if hits else EXIT_FAIL
        elif args.command == "verify-eigensystem":
            reports = [workflows.verify_level_raised_eigenform(args.p, args.ell, args.precision)]
        elif args.command == "ring-analyze":
            if args.file == "-":
                text = sys.stdin.read()
            else:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
            reports = workflows.ring_reports(text)
        elif args.command == "h-poly":
            reports = [workflows.h_poly_report(args.ell, args.degree, args.mod)]
        elif args.command == "pseudo-check":
            rep = workflows.pseudo_check(args.ring, args.group, args.budget, args.samples, args.seed)
            reports = [rep]
            if workflows.budget_shortfall(rep):
                code = EXIT_SHORTFALL
        else:
            reports = _examples()
    except PrecisionError as exc:
        print(f"precision shortfall: {exc} (required {exc.required})", file=sys.stderr)
        return EXIT_SHORTFALL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    out.write(render_json(reports) if args.json else render_text(reports))
    if code is None:
        code = exit_code(reports)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

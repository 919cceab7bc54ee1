"""Command-line entry point.

Exit codes: 0 success, 1 invalid input (or budget exceeded), 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceeded, InvalidArgument
from .partitions import multipartitions_of, parse_multipartition, parse_partition
from .quiver import build_quiver, component_key
from .tableaux import enumerate_lr_tableaux, lr_coefficient, lr_expand
from .wreath_rules import induce_one_step, restrict_one_step, wreath_lr_expand

GRAMMAR = """\
syntax:
  partition       [3,2,1]      ([] is the empty partition)
  multipartition  [[2],[1,1],[]]   one partition per irreducible of F,
                  the trivial representation first

exit codes: 0 ok, 1 invalid input, 2 verification failure
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _dims(text: str) -> list[int]:
    try:
        dims = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidArgument(f"--dims must be comma-separated integers, got {text!r}") from exc
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="wreathlr",
        description="Littlewood-Richardson rules for wreath products F wr S_n and the quiver of F wr FI_n.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lr", help="classical LR coefficient, or the full expansion when GAMMA is omitted",
                       epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("lam")
    p.add_argument("delta")
    p.add_argument("gamma", nargs="?")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tableaux", help="list the LR tableaux of shape GAMMA/LAM with content DELTA",
                       epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("gamma")
    p.add_argument("lam")
    p.add_argument("delta")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("wreath-lr", help="decompose Ind(Phi_LAM ⊠ Phi_DELTA) for F wr S_(k+r)",
                       epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("lam")
    p.add_argument("delta")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("branch", help="one-step induction (up) or restriction (down) of Phi_LAM",
                       epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("direction", choices=["up", "down"])
    p.add_argument("lam")
    p.add_argument("--dims", required=True, help="dimensions of Irr F, trivial first, e.g. 1,2,1")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("quiver", help="the quiver of F wr FI_n for |Irr F| = L")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--components", action="store_true", help="report connected components")

    p = sub.add_parser("verify", help="check the rules against explicit matrix representations")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="built-in base group: C1..C6 or S3")
    src.add_argument("--group-file", help="JSON group with its irreducible representations")
    p.add_argument("--mode", required=True, choices=["lr", "branch", "quiver-arrows", "orthonormality"])
    p.add_argument("--n", type=int, default=2, help="largest size checked (default 2)")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--budget", type=int, help="largest group order the oracle may build")
    p.add_argument("--json", action="store_true")
    return parser


def _print_json(obj) -> None:
    print(json.dumps(obj))


def _cmd_lr(args) -> int:
    lam, delta = parse_partition(args.lam), parse_partition(args.delta)
    if args.gamma is not None:
        c = lr_coefficient(lam, delta, parse_partition(args.gamma))
        if args.json:
            _print_json({"coefficient": c})
        else:
            print(c)
        return 0
    terms = lr_expand(lam, delta)
    if args.json:
        _print_json({"terms": [{"mult": c, "partition": list(g)} for g, c in terms.items()]})
    else:
        for g, c in terms.items():
            print(f"{c} × {g}")
    return 0


def _cmd_tableaux(args) -> int:
    found = enumerate_lr_tableaux(parse_partition(args.gamma), parse_partition(args.lam), parse_partition(args.delta))
    if args.json:
        _print_json({"tableaux": [[list(r) for r in t.rows] for t in found]})
    else:
        for t in found:
            print(t)
    return 0


def _show(decomposition, as_json: bool) -> None:
    if as_json:
        _print_json(decomposition.to_json())
    else:
        for line in decomposition.lines():
            print(line)


def _cmd_wreath_lr(args) -> int:
    _show(wreath_lr_expand(parse_multipartition(args.lam), parse_multipartition(args.delta)), args.json)
    return 0


def _cmd_branch(args) -> int:
    rule = induce_one_step if args.direction == "up" else restrict_one_step
    _show(rule(parse_multipartition(args.lam), _dims(args.dims)), args.json)
    return 0


def _cmd_quiver(args) -> int:
    q = build_quiver(args.n, args.l)
    comps = q.components() if args.components else None
    if args.json:
        data = q.to_json()
        if comps is not None:
            data["components"] = len(comps)
        _print_json(data)
    elif args.dot:
        sys.stdout.write(q.to_dot())
        if comps is not None:
            print(f"// components: {len(comps)}")
        return 0
    else:
        print(f"n={q.n} l={q.l}: {len(q.vertices)} vertices, {len(q.arrows)} arrows")
        for a, b in q.arrows:
            print(f"{a} -> {b}")
    if comps is not None and not args.json:
        print(f"components: {len(comps)}")
        for c in comps:
            key = "[" + ",".join(str(p) for p in component_key(c[0])) + "]"
            print(f"  {key}: " + " ".join(str(v) for v in c))
    return 0


def _cmd_verify(args) -> int:
    from .oracle.groups import DEFAULT_BUDGET
    from .oracle.phi import WreathOracle
    from .oracle import verify as V

    budget = args.budget or DEFAULT_BUDGET
    oracle = WreathOracle.builtin(args.group, budget) if args.group else WreathOracle.from_json(args.group_file, budget)
    reports = []
    if args.mode == "lr":
        if (args.k is None) != (args.r is None):
            raise InvalidArgument("--k and --r must be given together")
        pairs = [(args.k, args.r)] if args.k is not None else [
            (k, s - k) for s in range(2, args.n + 1) for k in range(1, s)
        ]
        for k, r in pairs:
            for lam in multipartitions_of(k, oracle.l):
                for delta in multipartitions_of(r, oracle.l):
                    reports.append(V.verify_wreath_lr(oracle, lam, delta))
    elif args.mode == "branch":
        for n in range(0, args.n + 1):
            for lam in multipartitions_of(n, oracle.l):
                if n < args.n:
                    reports.append(V.verify_branching(oracle, lam))
                if n >= 1:
                    reports.append(V.verify_restriction(oracle, lam))
    elif args.mode == "quiver-arrows":
        for k in range(0, args.n + 1):
            for lam in multipartitions_of(k, oracle.l):
                reports.append(V.verify_quiver_arrows(oracle, lam))
    else:
        for n in range(1, args.n + 1):
            reports.append(V.verify_orthonormality(oracle, n))

    failed = sum(not r.passed for r in reports)
    if args.json:
        _print_json({"reports": [r.to_json() for r in reports], "passed": len(reports) - failed, "failed": failed})
    else:
        for r in reports:
            print(r.line())
        print(f"{len(reports) - failed}/{len(reports)} passed")
    return 2 if failed else 0


COMMANDS = {
    "lr": _cmd_lr,
    "tableaux": _cmd_tableaux,
    "wreath-lr": _cmd_wreath_lr,
    "branch": _cmd_branch,
    "quiver": _cmd_quiver,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InvalidArgument, BudgetExceeded) as exc:
        print(f"wreathlr: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

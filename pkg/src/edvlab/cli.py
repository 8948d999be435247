"""Command-line interface.

Exit status: 0 on success, 2 on invalid input, 1 when an internal
invariant is violated (including failing ``verify`` checks).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

from . import __version__
from .canon import canonical_code
from .classify import ROUNDING_MODES, census_of, classify, problem1_report
from .edv import EdgeDivisionVector, compare, edv
from .enumerate import all_trees
from .errors import EdvlabError, InvalidArgumentError
from .families import (
    DoubleStarlikeSpec,
    StarlikeSpec,
    corona_k1,
    make_double_star,
    make_double_starlike,
    make_power_star,
    make_starlike,
    make_two_spider,
    predict_dedv,
    rooted_product_path,
)
from .indices import COLUMNS, all_indices
from .transforms import (
    BalancedPair,
    all_balanced_pairs,
    branch_exchange,
    exchange_certificate,
    exchange_closure_trees,
    find_balanced_pairs,
)
from .tree import Tree, parse_trees
from .verify import SUITES, run_suites_parallel


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage errors exit 2
        self.print_usage(sys.stderr)
        raise SystemExit(f"{self.prog}: error: {message}") from None


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InvalidArgumentError(f"cannot read {path}: {exc.strerror}") from None


def _read_trees(path: str) -> list[Tree]:
    trees = list(parse_trees(_read_text(path)))
    if not trees:
        raise InvalidArgumentError(f"no tree found in {path}")
    return trees


def _read_tree(path: str) -> Tree:
    trees = _read_trees(path)
    if len(trees) != 1:
        raise InvalidArgumentError(f"{path} holds {len(trees)} trees, expected one")
    return trees[0]


def _tree_arg(args: argparse.Namespace) -> str:
    path = args.tree_opt or args.tree
    if path is None:
        raise InvalidArgumentError("a tree file is required (positional or --tree)")
    return path


def _vector_or_tree(text: str) -> EdgeDivisionVector:
    if text.lstrip().startswith("("):
        try:
            return EdgeDivisionVector.parse(text)
        except ValueError as exc:
            raise InvalidArgumentError(f"bad vector {text!r}: {exc}") from None
    return edv(_read_tree(text))


def _parse_lambda(text: str) -> int | Fraction | float:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        try:
            return float(text)
        except ValueError:
            raise InvalidArgumentError(f"bad lambda {text!r}") from None
    return int(q) if q.denominator == 1 else q


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidArgumentError(f"expected comma-separated integers, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _edges_json(t: Tree) -> dict:
    return {"n": t.n, "edges": [list(e) for e in t.edges]}


# ---------------------------------------------------------------------------
# commands


def cmd_enumerate(args, out) -> int:
    for i, t in enumerate(all_trees(args.n)):
        if args.format == "jsonl":
            out.write(_dump(_edges_json(t)) + "\n")
        else:
            if i:
                out.write("--\n")
            out.write(t.to_text())
    return 0


def cmd_edv(args, out) -> int:
    for t in _read_trees(_tree_arg(args)):
        out.write(f"{edv(t)}\n")
    return 0


def cmd_compare(args, out) -> int:
    a, b = _vector_or_tree(args.a), _vector_or_tree(args.b)
    out.write(compare(a, b).value + "\n")
    return 0


def cmd_indices(args, out) -> int:
    lam = _parse_lambda(args.lam)
    rows = []
    for t in _read_trees(_tree_arg(args)):
        rows.append((edv(t), all_indices(t, lam=lam, k=args.k)))
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for _, vals in rows:
            writer.writerow([vals[c].render() for c in COLUMNS])
        out.write(buf.getvalue())
    else:
        for r, vals in rows:
            obj = {"edv": str(r), **{c: vals[c].to_json() for c in COLUMNS}}
            out.write(_dump(obj) + "\n")
    return 0


def _exchange_record(t: Tree, p: BalancedPair) -> dict:
    return {
        "input": _edges_json(t),
        "pair": p.to_json(),
        "output": _edges_json(branch_exchange(t, p)),
        "certificate": exchange_certificate(t, p).to_json(),
    }


def cmd_exchange(args, out) -> int:
    t = _read_tree(_tree_arg(args))
    if (args.u is None) != (args.v is None):
        raise InvalidArgumentError("give both --u and --v or neither")
    if args.su is not None or args.sv is not None:
        if args.u is None or args.su is None or args.sv is None:
            raise InvalidArgumentError("--su/--sv need --u, --v and both sets")
        pairs = [BalancedPair(args.u, args.v, tuple(_int_list(args.su)), tuple(_int_list(args.sv)))]
    elif args.u is not None:
        for w in (args.u, args.v):
            if not 0 <= w < t.n:
                raise InvalidArgumentError(f"vertex {w} not in tree of order {t.n}")
        pairs = find_balanced_pairs(t, args.u, args.v)
    else:
        pairs = list(all_balanced_pairs(t))
    for p in pairs:
        out.write(_dump(_exchange_record(t, p)) + "\n")
    return 0


def cmd_closure(args, out) -> int:
    t = _read_tree(_tree_arg(args))
    found = exchange_closure_trees(t)
    codes = sorted(found)
    if args.format == "text":
        for i, code in enumerate(codes):
            if i:
                out.write("--\n")
            out.write(code.to_tree().to_text())
    else:
        obj = {
            "input": _edges_json(t),
            "code": canonical_code(t).hex(),
            "edv": str(edv(t)),
            "size": len(codes),
            "members": [code.hex() for code in codes],
        }
        out.write(_dump(obj) + "\n")
    return 0


def format_classify_table(n: int, classes, mode: str = "half-up") -> str:
    c = census_of(n, classes)
    header = ("n", "#trees", "#DEDV", "#EDV-equivalent", "DEDV", "EDV-equivalent")
    row = c.row(mode)
    widths = [max(len(h), len(v)) for h, v in zip(header, row)]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
        "  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip(),
        "",
        f"non-singleton classes: {c.class_count_nontrivial}",
    ]
    nontrivial = [cls for cls in classes if not cls.is_singleton]
    vw = max((len(str(cls.vector)) for cls in nontrivial), default=0)
    for cls in nontrivial:
        codes = " ".join(m.hex() for m in cls.members)
        lines.append(f"{str(cls.vector).ljust(vw)}  {cls.size}  {codes}")
    return "\n".join(lines) + "\n"


def cmd_classify(args, out) -> int:
    if args.report == "problem1":
        report = problem1_report(args.n)
        if args.format == "json":
            out.write(_dump(report.to_json()) + "\n")
        else:
            out.write(report.render())
        return 0
    classes = classify(args.n, jobs=args.jobs)
    if args.format == "table":
        out.write(format_classify_table(args.n, classes, args.rounding))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("vector", "size", "members"))
        for cls in classes:
            writer.writerow((str(cls.vector), cls.size, " ".join(m.hex() for m in cls.members)))
        out.write(buf.getvalue())
    else:
        obj = {
            "census": census_of(args.n, classes).to_json(args.rounding),
            "classes": [cls.to_json() for cls in classes],
        }
        out.write(_dump(obj) + "\n")
    return 0


def _family_tree(args) -> Tree:
    p = args.params
    kind = args.kind

    def ints(count: int) -> list[int]:
        if len(p) != count:
            raise InvalidArgumentError(f"{kind} takes {count} integer arguments")
        try:
            return [int(x) for x in p]
        except ValueError:
            raise InvalidArgumentError(f"{kind}: arguments must be integers") from None

    if kind == "starlike":
        if len(p) != 1:
            raise InvalidArgumentError("starlike takes one comma-separated leg list, e.g. 2,2,3")
        return make_starlike(StarlikeSpec(tuple(_int_list(p[0]))))
    if kind == "double-star":
        return make_double_star(*ints(2))
    if kind == "power-star":
        return make_power_star(*ints(2))
    if kind == "dt":
        s, k1, k2, k = ints(4)
        return make_double_starlike(DoubleStarlikeSpec(s, k1, k2, k))
    if kind == "two-spider":
        return make_two_spider(*ints(5))
    if kind in ("rooted-product", "corona"):
        if len(p) != 2:
            raise InvalidArgumentError(f"{kind} takes a tree file and s")
        seed = _read_tree(p[0])
        try:
            s = int(p[1])
        except ValueError:
            raise InvalidArgumentError("s must be an integer") from None
        return rooted_product_path(seed, s) if kind == "rooted-product" else corona_k1(seed, s)
    raise InvalidArgumentError(f"unknown family {kind!r}")  # pragma: no cover


def cmd_family(args, out) -> int:
    t = _family_tree(args)
    pred = predict_dedv(t)
    verdict = "unknown" if pred.verdict is None else str(pred.verdict).lower()
    if args.format == "json":
        obj = {"tree": _edges_json(t), "edv": str(edv(t)), "dedv": pred.to_json()}
        out.write(_dump(obj) + "\n")
    else:
        out.write(t.to_text())
        out.write(f"# edv {edv(t)}\n")
        out.write(f"# dedv {verdict}" + (f" ({pred.rule})" if pred.rule else "") + "\n")
    return 0


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites_parallel(names, args.max_n, args.seed, args.jobs)
    ok = all(r.passed for r in results)
    obj = {
        "suite": args.suite,
        "max_n": args.max_n,
        "seed": args.seed,
        "passed": ok,
        "checks": [r.to_json() for r in results],
    }
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def _add_tree_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("tree", nargs="?", help="tree file in text format ('-' for stdin)")
    p.add_argument("--tree", dest="tree_opt", metavar="FILE", help="tree file (alternative to the positional)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="edvlab", description="Edge division vectors of trees.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="all free trees of order n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("edv", help="edge division vector of each tree in a file")
    _add_tree_input(p)
    p.set_defaults(func=cmd_edv)

    p = sub.add_parser("compare", help="order relation between two trees or vectors")
    p.add_argument("a", help="tree file or vector such as '(4,1,1)'")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("indices", help="edge-additive topological indices")
    _add_tree_input(p)
    p.add_argument("--lambda", dest="lam", default="1", help="exponent for mW and vW (integer, p/q or real)")
    p.add_argument("--k", type=int, default=3, help="Steiner k")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("exchange", help="balanced pairs and their branch-exchanges")
    _add_tree_input(p)
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--su", help="comma-separated S_u")
    p.add_argument("--sv", help="comma-separated S_v")
    p.set_defaults(func=cmd_exchange)

    p = sub.add_parser("closure", help="classes reachable by repeated exchanges")
    _add_tree_input(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("classify", help="EDV classes of all trees of order n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("table", "json", "csv"), default="json")
    p.add_argument("--rounding", choices=tuple(ROUNDING_MODES), default="half-up")
    p.add_argument("--report", choices=("problem1",), help="compare exchange closures with classes")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("family", help="build a named family member and predict DEDV")
    p.add_argument(
        "kind",
        choices=("starlike", "double-star", "power-star", "dt", "two-spider", "rooted-product", "corona"),
    )
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        return exc.code or 0
    try:
        return args.func(args, out)
    except ValueError as exc:
        print(f"edvlab: error: {exc}", file=sys.stderr)
        return 2
    except EdvlabError as exc:
        print(f"edvlab: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

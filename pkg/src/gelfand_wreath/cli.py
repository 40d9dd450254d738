"""Command-line interface.

Window grammar for ``rsk``:

* r <= 2: a list of signed integers, ``"[-3,2,-1]"``; ``-k`` means value k with color 1;
* any r: a list of (value, color) pairs, ``"[(3,1),(2,0),(1,2)]"``.

Values are 1-based and must form a permutation of 1..n; colors lie in 0..r-1.

Exit codes: 0 success, 1 usage or parse error, 2 a checked statement failed,
3 an enumeration limit was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from . import group as grp
from .characters import character_table, table_from_json, table_to_json
from .classes import (
    SymmetricClassLabel,
    canonical_representative,
    class_size,
    enumerate_conj_classes,
    enumerate_symmetric_classes,
    shapes_of_class,
)
from .cyclotomic import CyclotomicError
from .model import REPRESENTATIONS, NotAClassFunctionError, decompose_class
from .tableaux import multipartition_list, multitableau_shape, rsk
from .verify import SUITES, run

CACHE_ENV = "GELFAND_CACHE_DIR"

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- formatting ----------------------------------------------------------------


def _partition_str(parts) -> str:
    return ",".join(map(str, parts)) if parts else "-"


def _multi_str(mu) -> str:
    return " | ".join(_partition_str(p) for p in mu)


def _tableau_str(t) -> str:
    return "/".join("[" + ",".join(map(str, row)) + "]" for row in t) if t else "[]"


def _emit(data, fmt: str, table_lines) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2))
    else:
        for line in table_lines():
            print(line)


def _columns(rows: list[list[str]]) -> list[str]:
    widths = [max(len(row[k]) for row in rows) for k in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


# -- cache ---------------------------------------------------------------------


def _cache_dir(arg: str | None) -> Path | None:
    path = arg or os.environ.get(CACHE_ENV)
    if not path:
        return None
    path = Path(path)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError:
        return None
    return path if os.access(path, os.W_OK) else None


def cached_table(r: int, n: int, cache_dir: Path | None):
    """Character table of G(r, n), read from or written to ``cache_dir`` when given."""
    if cache_dir is None:
        return character_table(r, n)
    target = cache_dir / f"chartable-r{r}-n{n}.json"
    if target.exists():
        try:
            return table_from_json(json.loads(target.read_text()))
        except (ValueError, KeyError, TypeError):
            pass  # unreadable cache entry, recompute
    table = character_table(r, n)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(table_to_json(r, n, table), fh)
    os.replace(tmp, target)
    return table


def _model_dimension(r: int, n: int) -> int:
    return sum(class_size(c) for c in enumerate_symmetric_classes(r, n))


# -- commands ------------------------------------------------------------------


def cmd_rsk(args) -> int:
    try:
        g = grp.parse_window_string(args.r, args.window)
    except ValueError as exc:
        raise UsageError(f"cannot parse window {args.window!r}: {exc}") from exc
    P, Q = rsk(g)
    shape = multitableau_shape(P)
    data = {
        "window": grp.format_window(g),
        "P": [[list(row) for row in t] for t in P],
        "Q": [[list(row) for row in t] for t in Q],
        "shape": [list(p) for p in shape],
        "absolute_involution": P == Q,
    }

    def lines():
        yield f"window: {grp.format_window(g)}"
        for name, T in (("P", P), ("Q", Q)):
            for j, t in enumerate(T):
                yield f"{name}_{j} = {_tableau_str(t)}"
        yield f"shape: {_multi_str(shape)}"
        yield f"P = Q: {'yes' if P == Q else 'no'}"

    _emit(data, args.format, lines)
    return EXIT_OK


def cmd_classes(args) -> int:
    r, n = args.r, args.n
    rows = []
    for c in enumerate_symmetric_classes(r, n):
        rows.append(
            {
                "class": c.to_json(),
                "size": class_size(c),
                "representative": grp.format_window(canonical_representative(c)),
                "shapes": [[list(p) for p in mu] for mu in sorted(shapes_of_class(c), reverse=True)],
            }
        )
    data = {"r": r, "n": n, "classes": rows, "total": sum(row["size"] for row in rows)}

    def lines():
        table = [["class", "size", "representative", "shapes"]]
        for c, row in zip(enumerate_symmetric_classes(r, n), rows):
            shapes = "; ".join(_multi_str(mu) for mu in sorted(shapes_of_class(c), reverse=True))
            table.append([str(c), str(row["size"]), row["representative"], shapes])
        yield from _columns(table)
        yield f"total: {data['total']}"

    _emit(data, args.format, lines)
    return EXIT_OK


def cmd_decompose(args) -> int:
    r, n = args.r, args.n
    if args.all == (args.class_label is not None):
        raise UsageError("decompose needs exactly one of --class or --all")
    if args.all:
        labels = list(enumerate_symmetric_classes(r, n))
    else:
        try:
            labels = [SymmetricClassLabel.parse(r, n, args.class_label)]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    grp._check_limit(_model_dimension(r, n), args.limit, "model basis")
    table = cached_table(r, n, args.cache_dir)
    try:
        reports = [decompose_class(c, table, args.rep) for c in labels]
    except (NotAClassFunctionError, CyclotomicError) as exc:
        print(f"error: {args.rep} does not give a character: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    data = [rep.to_json() for rep in reports]

    def lines():
        for rep in reports:
            status = "verified" if rep.verified else "MISMATCH"
            yield f"class {rep.label}: {status}"
            for mu, m in rep.computed.items():
                yield f"  {_multi_str(mu)}  x{m}"
            for mu in rep.missing:
                yield f"  missing: {_multi_str(mu)}"
            for mu in rep.unexpected:
                yield f"  unexpected: {_multi_str(mu)}"

    _emit(data if args.all else data[0], args.format, lines)
    return EXIT_OK if all(rep.verified for rep in reports) else EXIT_MISMATCH


def cmd_chartable(args) -> int:
    r, n = args.r, args.n
    table = cached_table(r, n, args.cache_dir)

    def lines():
        classes = enumerate_conj_classes(r, n)
        rows = [["", *(_multi_str(c.label) for c in classes)], ["size", *(str(c.size) for c in classes)]]
        for mu in multipartition_list(r, n):
            rows.append([_multi_str(mu), *(str(table[mu][c.label]) for c in classes)])
        yield from _columns(rows)

    _emit(table_to_json(r, n, table), args.format, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run(args.suite, args.r, args.n, args.limit)

    def lines():
        for res in results:
            yield res.summary()
            for failure in res.failures[:10]:
                yield f"  {failure}"

    _emit([res.to_json() for res in results], args.format, lines)
    return EXIT_OK if all(res.passed for res in results) else EXIT_MISMATCH


# -- argument parsing ----------------------------------------------------------


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gelfand-wreath", description="Involution models of the wreath products G(r, n).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, with_n=True):
        p.add_argument("-r", type=_positive, required=True, help="number of colors")
        if with_n:
            p.add_argument("-n", type=_nonnegative, required=True, help="rank")
        p.add_argument("--format", choices=("json", "table"), default="table")
        p.add_argument("--limit", type=_positive, default=grp.DEFAULT_LIMIT, help="enumeration limit")
        p.add_argument("--cache-dir", default=None, help=f"character-table cache (default ${CACHE_ENV})")

    p = sub.add_parser("rsk", help="generalized Robinson-Schensted image of a colored permutation")
    common(p, with_n=False)
    p.add_argument("window")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("classes", help="symmetric classes of absolute involutions")
    common(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("decompose", help="decompose M(c) into irreducibles")
    common(p)
    p.add_argument("--class", dest="class_label", help='class label such as "f=1,1;p=1,1"')
    p.add_argument("--all", action="store_true", help="every symmetric class")
    p.add_argument("--rep", choices=REPRESENTATIONS, default="rho", help="representation on M")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("chartable", help="character table of G(r, n)")
    common(p)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("verify", help="run invariant suites")
    common(p)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.cache_dir = _cache_dir(args.cache_dir)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except grp.EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT

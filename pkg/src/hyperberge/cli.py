"""Command-line entry point.

Reports are ``key=value`` lines unless ``--pretty`` is given. Exit status
is 0 on success, 1 when an assertion flag fails (or a witness precondition
is violated) and 2 on usage, parse and file errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .berge import find_berge_cycle_at_least, find_berge_path, verify_certificate
from .census import SearchConfig, enumerate_extremal, format_report, turan_census
from .constructions import (
    BlockTreeTemplate,
    ExtremalQuery,
    block_tree,
    extremal_value,
    r_star,
    recognize,
    regime,
)
from .core import Hypergraph, read_hgr, write_hgr
from .errors import HypergraphError, PreconditionViolated
from .witness import find_witness, verify_witness

GRAMMAR = """\
  check --file F (--min-cycle K | --path-len K) [--assert-free] [--certificate] [--verify]
  construct star --n N --r R [-o F]
  construct block-tree --r R --k K --blocks A [--s S] [--chain | --attach j:parent:slot ...] [--multi] [-o F]
  extremal --n N --r R --k K --variant (cycles|paths) [--multi]
  census --n N --r R --k K --variant (cycles|paths) [--multi --cap C] [--enumerate-extremal]
         [--workers W] [--max-nodes B] [--max-edges E]
  witness --file F --k K --m M [--trace] [--verify]
  recognize --file F
  (every verb accepts --pretty)"""


class UsageError(Exception):
    pass


def _emit(rows: list[tuple[str, object]], pretty: bool, prose: str | None = None) -> None:
    if pretty and prose is not None:
        print(prose)
        return
    sep = ": " if pretty else "="
    for k, v in rows:
        print(f"{k}{sep}{v}")


def _load(path: str) -> Hypergraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return read_hgr(text)


def _save(h: Hypergraph, path: str | None) -> None:
    text = write_hgr(h)
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def cmd_check(args) -> int:
    h = _load(args.file)
    if args.min_cycle is not None:
        k, what = args.min_cycle, "cycle"
        cert = find_berge_cycle_at_least(h, k)
        prose_absent = f"no Berge cycle of length >= {k}"
    else:
        k, what = args.path_len, "path"
        cert = find_berge_path(h, k)
        prose_absent = f"no Berge path of length {k}"
    rows: list[tuple[str, object]] = [("test", f"{what}{'>=' if what == 'cycle' else '='}{k}")]
    rows.append(("found", "yes" if cert else "no"))
    if cert is not None:
        if args.certificate:
            rows.append(("certificate", cert.to_line()))
        if args.verify:
            ok = verify_certificate(h, cert)
            rows.append(("verified", "yes" if ok else "no"))
            if not ok:
                _emit(rows, args.pretty)
                return 1
        prose = f"Berge {what} of length {cert.length} found"
        if args.certificate:
            prose += ": " + cert.to_line()
    else:
        prose = prose_absent
    _emit(rows, args.pretty, prose)
    return 1 if (cert is not None and args.assert_free) else 0


def _parse_attach(specs: list[str], a: int) -> BlockTreeTemplate:
    table: dict[int, tuple[int, int]] = {}
    for spec in specs:
        try:
            j, parent, slot = (int(x) for x in spec.split(":"))
        except ValueError:
            raise UsageError(f"bad --attach value {spec!r}, expected j:parent:slot") from None
        table[j] = (parent, slot)
    missing = [j for j in range(2, a + 1) if j not in table]
    if missing or set(table) - set(range(2, a + 1)):
        raise UsageError(f"--attach must give exactly the blocks 2..{a}")
    return BlockTreeTemplate(a, tuple(table[j] for j in range(2, a + 1)))


def cmd_construct(args) -> int:
    if args.family == "star":
        h = r_star(args.n, args.r)
    else:
        s = args.s if args.s is not None else (args.r if args.multi else args.r + 1)
        if args.attach:
            template = _parse_attach(args.attach, args.blocks)
        else:
            template = BlockTreeTemplate.chain(args.blocks, s)
        h = block_tree(template, s, args.r, args.k)
    _save(h, args.output)
    return 0


def _query(args) -> ExtremalQuery:
    return ExtremalQuery(args.n, args.r, args.k, args.variant, args.multi)


def cmd_extremal(args) -> int:
    q = _query(args)
    value = extremal_value(q)
    _emit(
        [("query", q.describe()), ("regime", regime(q)), ("value", value)],
        args.pretty,
        f"ex = {value} for {q.describe()}",
    )
    return 0


def cmd_census(args) -> int:
    q = _query(args)
    cap = args.cap if args.cap is not None else (max(q.k - 1, 1) if q.multi else 1)
    cfg = SearchConfig(args.max_nodes, args.workers, cap, args.max_edges)
    res = turan_census(q, cfg)
    sys.stdout.write(format_report(res, args.pretty))
    if args.enumerate_extremal:
        classes = enumerate_extremal(q, cfg)
        sep = ": " if args.pretty else "="
        print(f"classes{sep}{len(classes)}")
        for i, c in enumerate(classes, start=1):
            print(f"class {i}{sep}{c.recognition.describe()} labelled={c.labelled_count}")
            sys.stdout.write(write_hgr(c.graph))
    return 0


def cmd_witness(args) -> int:
    h = _load(args.file)
    try:
        w = find_witness(h, args.k, args.m)
    except PreconditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.cycle is not None:
            print(exc.cycle.to_line())
        return 1
    print(w.to_line())
    sep = ": " if args.pretty else "="
    print(f"guided{sep}{'yes' if w.guided else 'no'}")
    if args.trace:
        for line in w.trace:
            print(line)
    if args.verify:
        ok, why = verify_witness(h, args.k, args.m, w)
        print(f"verified{sep}{'yes' if ok else 'no'}")
        for v in why:
            print(f"violation{sep}{v}")
        if not ok:
            return 1
    return 0


def cmd_recognize(args) -> int:
    h = _load(args.file)
    rec = recognize(h)
    rows: list[tuple[str, object]] = [("kind", rec.kind)]
    if rec.kind == "r_star":
        rows.append(("center", ",".join(map(str, rec.center))))
    elif rec.kind == "block_tree":
        rows += [("s", rec.s), ("edges_per_block", rec.edges_per_block), ("blocks", rec.template.block_count)]
    _emit(rows, args.pretty, rec.describe())
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\nusage:\n{GRAMMAR}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable prose output")

    p = _Parser(prog="hyperberge", description="Berge paths and cycles in uniform hypergraphs.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="search for a long Berge cycle or a Berge path")
    c.add_argument("--file", required=True)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--min-cycle", type=int)
    g.add_argument("--path-len", type=int)
    c.add_argument("--assert-free", action="store_true")
    c.add_argument("--certificate", action="store_true")
    c.add_argument("--verify", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("construct", parents=[common], help="emit an extremal construction as HGR")
    fam = c.add_subparsers(dest="family", required=True, parser_class=_Parser)
    st = fam.add_parser("star", parents=[common])
    st.add_argument("--n", type=int, required=True)
    st.add_argument("--r", type=int, required=True)
    st.add_argument("-o", "--output")
    bt = fam.add_parser("block-tree", parents=[common])
    bt.add_argument("--r", type=int, required=True)
    bt.add_argument("--k", type=int, required=True)
    bt.add_argument("--blocks", type=int, required=True)
    bt.add_argument("--s", type=int)
    shape = bt.add_mutually_exclusive_group()
    shape.add_argument("--chain", action="store_true")
    shape.add_argument("--attach", nargs="+", metavar="j:parent:slot")
    bt.add_argument("--multi", action="store_true")
    bt.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    for name, func, helptext in (
        ("extremal", cmd_extremal, "closed-form Turán number"),
        ("census", cmd_census, "exhaustive Turán-number census"),
    ):
        c = sub.add_parser(name, parents=[common], help=helptext)
        c.add_argument("--n", type=int, required=True)
        c.add_argument("--r", type=int, required=True)
        c.add_argument("--k", type=int, required=True)
        c.add_argument("--variant", choices=["cycles", "paths"], required=True)
        c.add_argument("--multi", action="store_true")
        if name == "census":
            c.add_argument("--cap", type=int)
            c.add_argument("--enumerate-extremal", action="store_true")
            c.add_argument("--workers", type=int, default=1)
            c.add_argument("--max-nodes", type=int)
            c.add_argument("--max-edges", type=int)
        c.set_defaults(func=func)

    c = sub.add_parser("witness", parents=[common], help="structural witness for a long-cycle-free graph")
    c.add_argument("--file", required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--trace", action="store_true")
    c.add_argument("--verify", action="store_true")
    c.set_defaults(func=cmd_witness)

    c = sub.add_parser("recognize", parents=[common], help="classify as r-star, block tree or other")
    c.add_argument("--file", required=True)
    c.set_defaults(func=cmd_recognize)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "cap", None) is not None and not args.multi:
        print(f"hyperberge: error: --cap requires --multi\nusage:\n{GRAMMAR}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hyperberge: error: {exc}", file=sys.stderr)
        return 2
    except HypergraphError as exc:
        print(f"hyperberge: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

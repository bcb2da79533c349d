"""Command-line entry point for the EBOCA pipeline.

Every subcommand reads and writes files in-process; logs go to stderr and
primary output goes to ``--out`` or stdout.  Exit status is 0 on success,
1 when validation or scanning reports Error-severity findings, 2 on bad usage
and 3 when an input cannot be read or parsed.
"""

from __future__ import annotations

import argparse
import datetime as dt
import logging
import sys
from pathlib import Path

from eboca import synth
from eboca.evidence import annotate, read_jsonl
from eboca.mapping import MappingError, materialize, parse_mapping_doc
from eboca.query import CATALOG, QueryError, parse_query, run_cq, solve
from eboca.rdf import (
    Graph,
    NTriplesError,
    TermError,
    TurtleError,
    parse_ntriples,
    parse_turtle,
    serialize_ntriples,
    serialize_turtle,
)
from eboca.schema import TURTLE_PREFIXES, ValidationError, emit_ontology_axioms
from eboca.stats import graph_stats
from eboca.validate import has_errors, report_json, report_text, scan_pitfalls, validate_instances

log = logging.getLogger("eboca")

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class InputFailure(Exception):
    """An input or output path could not be used; the message names the path."""


def _read_bytes(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise InputFailure(f"{path}: {exc.strerror or exc}") from None


def _write(path: Path | None, data: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        path.write_bytes(data)
    except OSError as exc:
        raise InputFailure(f"{path}: {exc.strerror or exc}") from None
    log.info("wrote %s (%d bytes)", path, len(data))


def load_graph(path: Path) -> Graph:
    """Read N-Triples, or Turtle when the file name ends in ``.ttl``."""
    data = _read_bytes(path)
    try:
        if path.suffix.lower() == ".ttl":
            return parse_turtle(data)
        return parse_ntriples(data)
    except (NTriplesError, TurtleError, TermError, UnicodeDecodeError) as exc:
        raise InputFailure(f"{path}: {exc}") from None


def _date(value: str) -> dt.date:
    try:
        return dt.date.fromisoformat(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an ISO date (YYYY-MM-DD): {value!r}") from None


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"not a positive integer: {value!r}")
    return n


# --- subcommands -----------------------------------------------------------

def cmd_materialize(args) -> int:
    base_dir = args.base_dir or args.mapping.parent
    text = _read_bytes(args.mapping)
    try:
        doc = parse_mapping_doc(text, base_dir)
        g = materialize(doc, base_dir)
    except MappingError as exc:
        raise InputFailure(f"{args.mapping}: {exc}") from None
    log.info("materialized %d triples from %d rules", len(g), len(doc.rules))
    _write(args.out, serialize_ntriples(g))
    return EXIT_OK


def cmd_annotate(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            paragraphs = read_jsonl(fh)
    except OSError as exc:
        raise InputFailure(f"{args.input}: {exc.strerror or exc}") from None
    except (ValidationError, UnicodeDecodeError) as exc:
        raise InputFailure(f"{args.input}: {exc}") from None
    try:
        result = annotate(paragraphs, created_on=args.created_on)
    except ValidationError as exc:
        raise InputFailure(f"{args.input}: {exc}") from None
    log.info("%d paragraphs, %d associations, %d triples", len(paragraphs), result.associations, len(result.graph))
    _write(args.out, serialize_ntriples(result.graph))
    return EXIT_OK


def cmd_merge(args) -> int:
    g = Graph()
    for path in args.graphs:
        g.update(load_graph(path))
    log.info("merged %d graphs into %d triples", len(args.graphs), len(g))
    _write(args.out, serialize_ntriples(g))
    return EXIT_OK


def _report(findings, report_path: Path | None) -> int:
    if report_path is not None:
        _write(report_path, report_json(findings).encode("utf-8"))
    sys.stdout.write(report_text(findings))
    return EXIT_FINDINGS if has_errors(findings) else EXIT_OK


def cmd_validate(args) -> int:
    g = load_graph(args.graph)
    g.freeze()
    return _report(validate_instances(g), args.report)


def cmd_scan(args) -> int:
    g = load_graph(args.ontology)
    g.freeze()
    return _report(scan_pitfalls(g, include_reused=args.include_reused), args.report)


def cmd_query(args) -> int:
    g = load_graph(args.graph)
    g.freeze()
    if args.cq:
        if args.cq not in CATALOG:
            raise InputFailure(f"unknown competency question {args.cq!r}; see 'eboca catalog'")
        result = run_cq(g, args.cq)
    else:
        text = _read_bytes(args.query)
        try:
            result = solve(g, parse_query(text.decode("utf-8")))
        except (QueryError, TermError, UnicodeDecodeError) as exc:
            raise InputFailure(f"{args.query}: {exc}") from None
    log.info("%d rows", len(result))
    body = result.to_json() if args.format == "json" else result.to_tsv()
    _write(args.out, body.encode("utf-8"))
    return EXIT_OK


def cmd_stats(args) -> int:
    g = load_graph(args.graph)
    _write(args.out, graph_stats(g).to_text().encode("utf-8"))
    return EXIT_OK


def cmd_export_axioms(args) -> int:
    g = emit_ontology_axioms()
    if args.out is not None and args.out.suffix.lower() == ".nt":
        data = serialize_ntriples(g)
    else:
        data = serialize_turtle(g, TURTLE_PREFIXES)
    _write(args.out, data)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.show:
        if args.show not in CATALOG:
            raise InputFailure(f"unknown competency question {args.show!r}")
        sys.stdout.write(CATALOG[args.show].text.strip() + "\n")
        return EXIT_OK
    for cq in CATALOG.values():
        sys.stdout.write(f"{cq.id}\t{cq.module}\t{cq.intent}\n")
    return EXIT_OK


def cmd_synth(args) -> int:
    k = args.scale if args.scale is not None else synth.scale_for(args.triples)
    try:
        out = synth.generate(args.out_dir, k)
    except OSError as exc:
        raise InputFailure(f"{exc.filename or args.out_dir}: {exc.strerror or exc}") from None
    sys.stdout.write(f"scale\t{k}\nexpected_triples\t{synth.expected_triples(k)}\nmapping\t{out / 'sem-disnet.map'}\n")
    return EXIT_OK


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eboca", description="Evidence-based biomedical knowledge graph pipeline.")
    p.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")
    p.add_argument("-q", "--quiet", action="store_true", help="only log errors")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", required=True)

    s = sub.add_parser("materialize", help="run a mapping document over its sources")
    s.add_argument("--mapping", type=Path, required=True)
    s.add_argument("--base-dir", type=Path, help="directory source paths resolve against (default: mapping's)")
    s.add_argument("--out", type=Path)
    s.set_defaults(func=cmd_materialize)

    s = sub.add_parser("annotate", help="turn a JSON Lines extraction batch into evidence triples")
    s.add_argument("--input", type=Path, required=True)
    s.add_argument("--out", type=Path)
    s.add_argument("--created-on", type=_date, help="date for records without extracted_on")
    s.set_defaults(func=cmd_annotate)

    s = sub.add_parser("merge", help="set union of N-Triples or Turtle graphs")
    s.add_argument("graphs", nargs="+", type=Path)
    s.add_argument("--out", type=Path)
    s.set_defaults(func=cmd_merge)

    s = sub.add_parser("validate", help="instance checks E1-E5")
    s.add_argument("--graph", type=Path, required=True)
    s.add_argument("--report", type=Path, help="write findings as JSON")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("scan", help="ontology pitfall scan")
    s.add_argument("--ontology", type=Path, required=True)
    s.add_argument("--include-reused", action="store_true", help="also scan terms outside the EBOCA namespaces")
    s.add_argument("--report", type=Path)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("query", help="run a competency question or a query file")
    s.add_argument("--graph", type=Path, required=True)
    which = s.add_mutually_exclusive_group(required=True)
    which.add_argument("--cq", metavar="ID")
    which.add_argument("--query", type=Path, metavar="FILE")
    s.add_argument("--format", choices=("tsv", "json"), default="tsv")
    s.add_argument("--out", type=Path)
    s.set_defaults(func=cmd_query)

    s = sub.add_parser("stats", help="triple, term and per-class counts")
    s.add_argument("--graph", type=Path, required=True)
    s.add_argument("--out", type=Path)
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("export-axioms", help="write the created classes and properties")
    s.add_argument("--out", type=Path, help="Turtle, or N-Triples when the name ends in .nt")
    s.set_defaults(func=cmd_export_axioms)

    s = sub.add_parser("catalog", help="list the bundled competency questions")
    s.add_argument("--show", metavar="ID", help="print one question's query text")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("synth", help="write scaled-up synthetic fixture tables")
    s.add_argument("--out-dir", type=Path, required=True)
    size = s.add_mutually_exclusive_group(required=True)
    size.add_argument("--scale", type=_positive, help="rows per table unit")
    size.add_argument("--triples", type=_positive, help="smallest scale reaching this many triples")
    s.set_defaults(func=cmd_synth)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    level = logging.ERROR if args.quiet else (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr, force=True)

    try:
        return args.func(args)
    except InputFailure as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``tiltcount classify|count|table|oracle|selftest``.

Exit codes: 0 finite (or success), 1 infinite (or a failed check), 2 error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import re
import sys
import time
from dataclasses import asdict, dataclass, field

from . import checks
from . import closed_forms as cf
from .classifier import classify
from .counting import count_two_term_tilting, default_threads
from .dynkin import DynkinType, dynkin_tilt_count
from .graph import Graph, InputError, RefusedError, format_graph_text, graph_components, parse_graph_text
from .oracle import OrientedQuiver, all_orientations, count_tilting, dynkin_graph, orient

EXIT_FINITE, EXIT_INFINITE, EXIT_ERROR = 0, 1, 2


@dataclass
class RunReport:
    command: list
    input_digest: str | None = None
    verdict: str | None = None
    count: str | None = None
    family: str | None = None
    witnesses: list = field(default_factory=list)
    timing: float = 0.0
    mode: str = "enumeration"
    rows: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


def builtin_graph(name: str) -> Graph:
    """Named graphs: list families (``E8``, ``III``, ``D5``, ``AffineAOdd5``) and a few infinite ones."""
    m = re.fullmatch(r"cycle(\d+)", name)
    if m:
        return cf.cycle_graph(int(m.group(1)))
    special = {
        "kronecker": lambda: cf.cycle_graph(2),
        "Etilde6": lambda: Graph(tuple(range(1, 8)), ((1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7))),
        "Etilde7": lambda: Graph(tuple(range(1, 9)), ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (4, 8))),
        "Etilde8": lambda: Graph(tuple(range(1, 10)), ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (3, 9))),
        "bowtie": lambda: checks.witness_graphs()["two triangles sharing a vertex"],
    }
    if name in special:
        return special[name]()
    return cf.family_graph(cf.parse_family(name))


def _load_graph(args) -> Graph:
    if args.builtin:
        return builtin_graph(args.builtin)
    if not args.path:
        raise InputError("give a graph file or --builtin NAME")
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.path}: {exc.strerror}") from None
    return parse_graph_text(text)


def _digest(g: Graph) -> str:
    return hashlib.sha256(format_graph_text(g).encode()).hexdigest()[:16]


def _emit(report: RunReport, fmt: str, out) -> None:
    if fmt == "json":
        out.write(report.to_json() + "\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if report.rows:
            writer.writerow(list(report.rows[0].keys()))
            for row in report.rows:
                writer.writerow([row[k] for k in report.rows[0]])
        else:
            writer.writerow(["verdict", "count", "family", "mode", "digest"])
            writer.writerow([report.verdict, report.count, report.family, report.mode, report.input_digest])
        out.write(buf.getvalue())
        return
    for key in ("verdict", "count", "family", "mode"):
        value = getattr(report, key)
        if value is not None:
            out.write(f"{key}: {value}\n")
    for w in report.witnesses:
        out.write(f"witness: {w.get('kind', 'eps')} eps={w['eps']} "
                  f"component arrows={w['component']['arrows']}\n")
        if "subgraph" in w:
            out.write(f"  subgraph {w['extended_type']}: {w['subgraph']['edges']} ({w['detail']})\n")
    if report.rows:
        keys = list(report.rows[0].keys())
        widths = [max(len(k), *(len(str(r[k])) for r in report.rows)) for k in keys]
        out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
        for r in report.rows:
            out.write("  ".join(str(r[k]).ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
    for note in report.notes:
        out.write(f"note: {note}\n")


def cmd_classify(args, out) -> int:
    g = _load_graph(args)
    t0 = time.perf_counter()
    c = classify(g)
    report = RunReport(
        command=args.argv, input_digest=_digest(g), verdict="finite" if c.finite else "infinite",
        family=str(c.label), mode="classifier",
        witnesses=[c.witness.to_dict()] if c.witness else [],
        timing=round(time.perf_counter() - t0, 6),
    )
    if c.components:
        report.rows = [{"component": " ".join(map(str, part.vertices)), "family": str(comp.label)}
                       for comp, part in zip(c.components, graph_components(g))]
        report.notes.append("input is disconnected; classified per component")
    _emit(report, args.format, out)
    return EXIT_FINITE if c.finite else EXIT_INFINITE


def cmd_count(args, out) -> int:
    g = _load_graph(args)
    t0 = time.perf_counter()
    threads = args.threads if args.threads is not None else default_threads()
    r = count_two_term_tilting(g, per_eps=args.per_eps, threads=threads)
    report = RunReport(
        command=args.argv, input_digest=_digest(g), verdict="finite" if r.is_finite else "infinite",
        count=None if r.count is None else str(r.count), mode="enumeration",
        witnesses=[r.witness.to_dict()] if r.witness else [],
    )
    if not r.connected:
        report.notes.append("input is disconnected; counts multiply over components")
    if g.loops:
        report.notes.append(f"loops ignored: {dict((str(k), v) for k, v in g.loops.items())}")
    if r.per_eps is not None:
        report.rows = [{"eps": str(e), "count": "inf" if c is None else str(c)} for e, c in r.per_eps]
    status = EXIT_FINITE if r.is_finite else EXIT_INFINITE
    if args.verify_closed_form:
        c = classify(g)
        report.family = str(c.label)
        if c.finite != r.is_finite:
            report.notes.append("classifier and enumeration disagree on finiteness")
            status = EXIT_ERROR
        elif c.finite:
            parts = c.components or (c,)
            expected = 1
            for p in parts:
                expected *= cf.closed_form(p.label)
            if expected != r.count:
                report.notes.append(f"closed form {expected} differs from enumerated {r.count}")
                status = EXIT_ERROR
            else:
                report.notes.append(f"closed form {expected} matches")
    report.timing = round(time.perf_counter() - t0, 6)
    _emit(report, args.format, out)
    return status


def _parse_range(text: str):
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text or "")
    if not m or int(m.group(1)) > int(m.group(2)):
        raise InputError(f"bad --n-range {text!r}; expected a..b")
    return range(int(m.group(1)), int(m.group(2)) + 1)


def _table_labels(family: str, n_range):
    family = family.strip()
    if family in ("E6", "E7", "E8", "III", "IV", "V"):
        return [cf.FamilyLabel(family)]
    if family == "E":
        ns = n_range or range(6, 9)
        return [cf.FamilyLabel(f"E{n}") for n in ns]
    if n_range is None:
        raise InputError(f"family {family} needs --n-range")
    return [cf.parse_family(f"{family}{n}") for n in n_range]


def cmd_table(args, out) -> int:
    t0 = time.perf_counter()
    n_range = _parse_range(args.n_range) if args.n_range else None
    labels = _table_labels(args.family, n_range)
    rows, ok = [], True
    for f in labels:
        row = {"family": str(f), "closed_form": str(cf.closed_form(f))}
        if args.verify:
            g = cf.family_graph(f)
            got = count_two_term_tilting(g).count
            row["enumerated"] = str(got)
            row["match"] = "yes" if got == cf.closed_form(f) else "NO"
            ok &= got == cf.closed_form(f)
        rows.append(row)
    report = RunReport(command=args.argv, mode="closed-form", rows=rows,
                       timing=round(time.perf_counter() - t0, 6))
    _emit(report, args.format, out)
    return EXIT_FINITE if ok else EXIT_INFINITE


def cmd_oracle(args, out) -> int:
    t0 = time.perf_counter()
    t = DynkinType(args.type.upper(), args.rank)
    g = dynkin_graph(t)
    if args.all_orientations:
        quivers = list(all_orientations(g))
    else:
        bits = args.orientation or "0" * len(g.edges)
        quivers = [(bits, orient(g, bits))]
    rows = []
    for bits, q in quivers:
        n = count_tilting(OrientedQuiver.from_quiver(q), allow_large=args.allow_large)
        rows.append({"orientation": bits, "arrows": " ".join(f"{s}->{u}" for s, u in q.arrows), "count": str(n)})
    values = {r["count"] for r in rows}
    expected = dynkin_tilt_count(t)
    report = RunReport(command=args.argv, mode="oracle", rows=rows, family=str(t),
                       count=rows[0]["count"] if len(values) == 1 else None,
                       timing=round(time.perf_counter() - t0, 6))
    report.notes.append(f"table value {expected}")
    uniform = len(values) == 1
    if args.all_orientations:
        report.notes.append("uniform over orientations" if uniform else "orientations disagree")
    _emit(report, args.format, out)
    return EXIT_FINITE if uniform and values == {str(expected)} else EXIT_INFINITE


def cmd_selftest(args, out, closed_form=cf.closed_form) -> int:
    t0 = time.perf_counter()
    rows = checks.run_level(args.level, closed_form=closed_form)
    for r in rows:
        out.write(r.line() + "\n")
    failed = [r for r in rows if not r.ok]
    out.write(f"{len(rows) - len(failed)}/{len(rows)} checks passed in {time.perf_counter() - t0:.1f}s\n")
    return EXIT_FINITE if not failed else EXIT_INFINITE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tiltcount", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_input(sp):
        sp.add_argument("path", nargs="?", help="graph file (line format or JSON)")
        sp.add_argument("--builtin", help="named graph, e.g. E8, III, D5, AffineAOdd5, cycle4, kronecker")
        sp.add_argument("--format", choices=["text", "json", "csv"], default="text")

    sp = sub.add_parser("classify", help="decide finiteness from the structure of the graph")
    add_input(sp)
    sp = sub.add_parser("count", help="count two-term tilting complexes by enumeration")
    add_input(sp)
    sp.add_argument("--per-eps", action="store_true", help="list every sign map (disables early exit)")
    sp.add_argument("--threads", type=int, default=None, help="worker processes (default $TILTCOUNT_THREADS or 1)")
    sp.add_argument("--verify-closed-form", action="store_true")
    sp = sub.add_parser("table", help="closed-form counts for a family")
    sp.add_argument("--family", required=True)
    sp.add_argument("--n-range")
    sp.add_argument("--verify", action="store_true", help="also enumerate and compare")
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp = sub.add_parser("oracle", help="count tilting modules of a Dynkin quiver from representations")
    sp.add_argument("--type", required=True, choices=["A", "D", "E", "a", "d", "e"])
    sp.add_argument("--rank", type=int, required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--orientation", help="one 0/1 per edge; 1 reverses that edge")
    group.add_argument("--all-orientations", action="store_true")
    sp.add_argument("--allow-large", action="store_true", help="permit ranks 7 and 8")
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp = sub.add_parser("selftest", help="run the cross-validation checks")
    sp.add_argument("--level", choices=["quick", "full"], default="quick")
    return p


COMMANDS = {"classify": cmd_classify, "count": cmd_count, "table": cmd_table,
            "oracle": cmd_oracle, "selftest": cmd_selftest}


def main(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_FINITE
    args.argv = argv
    try:
        return COMMANDS[args.cmd](args, out)
    except RefusedError as exc:
        print(f"tiltcount: {exc}", file=sys.stderr)
        if args.cmd == "count":
            print("tiltcount: try 'tiltcount classify' for large graphs", file=sys.stderr)
        return EXIT_ERROR
    except InputError as exc:
        print(f"tiltcount: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

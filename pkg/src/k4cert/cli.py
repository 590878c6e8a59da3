"""Command line: certify, verify, generate, sweep.

Exit codes for ``certify``: 0 = 3-colourable, 10 = K4 minor, >= 64 = error.
"""

from __future__ import annotations

import argparse
import json
import logging
import signal
import sys
from contextlib import contextmanager
from pathlib import Path

from . import __version__
from .coloring import verify_coloring
from .critical import ProofViolation
from .extractor import audit_trace, extract_k4_minor
from .formats import (
    EDGE_LIST,
    FORMATS,
    FormatError,
    certificate_from_json,
    certificate_to_json,
    dumps,
    emit_dot,
    emit_graph,
    parse_graph,
    sniff_format,
)
from .generators import NAMED, generate
from .graph import GraphError
from .oracle import verify_k4_minor
from .sweep import DEFAULT_PS, EXHAUSTIVE_LIMIT, all_graphs, random_graphs, run_sweep

EXIT_COLORABLE = 0
EXIT_MINOR = 10
EX_USAGE = 64
EX_DATAERR = 65
EX_NOINPUT = 66
EX_SOFTWARE = 70
EX_TEMPFAIL = 75

log = logging.getLogger("k4cert")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


@contextmanager
def wall_clock(seconds):
    if not seconds:
        yield
        return

    def _expire(signum, frame):
        raise TimeoutError(f"gave up after {seconds} s")

    old = signal.signal(signal.SIGALRM, _expire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _read_graph(path: str, fmt: str):
    if path == "-":
        data = sys.stdin.buffer.read()
        source = None
    else:
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise FileNotFoundError(str(exc)) from exc
        source = path
    if fmt == "auto":
        fmt = sniff_format(data, source)
    doc = parse_graph(data, fmt)
    for warning in doc.warnings:
        log.warning("%s", warning)
    if doc.name is None and source is not None:
        doc.name = Path(source).stem
    return doc


def _write(text: str, dest):
    if dest in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _text_report(cert, g, name, trace: bool) -> str:
    rows = [("type", cert.kind), ("name", name or ""), ("n", g.n), ("m", g.m)]
    if cert.coloring is not None:
        rows.append(("coloring", " ".join(map(str, cert.coloring.colors))))
    else:
        for i, s in enumerate(cert.minor.sets, 1):
            rows.append((f"H{i}", " ".join(map(str, sorted(s)))))
        for key, (a, b) in sorted(cert.minor.witness_edges.items()):
            rows.append((f"edge.{key}", f"{a} {b}"))
        if trace and cert.trace is not None:
            t = cert.trace
            rows += [
                ("xy", f"{t.xy[0]} {t.xy[1]}"),
                ("pi", " ".join(map(str, t.pi.class_of))),
                ("rho", " ".join(map(str, t.rho.class_of))),
                ("u", t.linkage.u), ("v", t.linkage.v),
                ("P", " ".join(map(str, t.linkage.p))),
                ("C2", " ".join(map(str, t.c2))),
                ("C3", " ".join(map(str, t.c3))),
                ("Q", " ".join(map(str, t.carving.q))),
                ("w", t.carving.w), ("z", t.carving.z),
                ("e", f"{t.e[0]} {t.e[1]}"),
            ]
    rows.append(("verified", "yes"))
    return "".join(f"{k}\t{v}\n" for k, v in rows)


def cmd_certify(args) -> int:
    doc = _read_graph(args.input, args.format)
    g = doc.graph
    with wall_clock(args.timeout):
        cert = extract_k4_minor(g)
    # emission is gated on the independent verifier
    if cert.coloring is not None:
        if not verify_coloring(g, cert.coloring):
            raise ProofViolation("emitted colouring is not proper")
    else:
        report = verify_k4_minor(g, cert.minor)
        if not report.ok:
            raise ProofViolation(f"emitted minor fails verification: {report.failures}")
        if args.trace:
            problems = audit_trace(cert.trace, cert.minor)
            if problems:
                raise ProofViolation(f"trace audit failed: {problems}")
    if args.json:
        _write(dumps(certificate_to_json(cert, g, doc.name, trace=args.trace)), args.output)
    else:
        _write(_text_report(cert, g, doc.name, args.trace), args.output)
    if args.dot:
        Path(args.dot).write_text(emit_dot(g, cert, doc.name))
    if args.plot:
        from .plotting import plot_certificate

        plot_certificate(g, cert, args.plot, title=doc.name)
    return EXIT_COLORABLE if cert.coloring is not None else EXIT_MINOR


def cmd_verify(args) -> int:
    doc = _read_graph(args.graph, args.format)
    try:
        cert = certificate_from_json(json.loads(Path(args.certificate).read_text()))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad certificate document: {exc}") from exc
    g = doc.graph
    problems = []
    if cert.coloring is not None:
        if len(cert.coloring) != g.n or not verify_coloring(g, cert.coloring):
            problems.append("coloring is not a proper 3-colouring of the graph")
    else:
        problems += [f"{c}: {d}" for c, d in verify_k4_minor(g, cert.minor).failures]
        if cert.trace is not None:
            if not cert.trace.h.edges <= g.edges:
                problems.append("trace H is not a subgraph of the graph")
            problems += audit_trace(cert.trace, cert.minor)
    for p in problems:
        print(f"FAIL\t{p}")
    print("valid" if not problems else "invalid")
    return 0 if not problems else 1


def cmd_generate(args) -> int:
    try:
        g = generate(args.family, n=args.n, p=args.p, seed=args.seed,
                     base=args.base, base_n=args.base_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    name = args.name or args.family
    _write(emit_graph(g, args.out_format, name), args.output)
    return 0


def cmd_sweep(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    if args.mode == "exhaustive":
        if args.max_n > EXHAUSTIVE_LIMIT:
            raise UsageError(f"exhaustive mode needs --max-n <= {EXHAUSTIVE_LIMIT}")
        graphs = all_graphs(args.max_n)
        label = f"all labelled graphs on {args.max_n} vertices"
    else:
        min_n = args.min_n if args.min_n is not None else args.max_n
        if not 1 <= min_n <= args.max_n or args.count < 0:
            raise UsageError("need 1 <= --min-n <= --max-n and --count >= 0")
        ps = tuple(args.p) if args.p else DEFAULT_PS
        if any(not 0 <= p <= 1 for p in ps):
            raise UsageError("--p values must lie in [0, 1]")
        graphs = random_graphs(args.seed, args.count, min_n, args.max_n, ps)
        label = f"{args.count} random graphs, n in [{min_n}, {args.max_n}], seed {args.seed}"
    summary = run_sweep(graphs, workers=args.workers)
    print(f"# {label}")
    for key, value in summary.rows():
        print(f"{key}\t{value}")
    for index, text, failures in summary.counterexamples:
        print(f"# counterexample {index}: {failures}")
        for line in text.splitlines():
            print(f"#   {line}")
    if args.plot_dir:
        from .plotting import plot_sweep

        out = Path(args.plot_dir)
        out.mkdir(parents=True, exist_ok=True)
        plot_sweep(summary, out / f"sweep_{args.mode}.png", title=label)
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="k4cert", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt_choices = ("auto",) + FORMATS

    p = sub.add_parser("certify", help="emit a 3-colouring or a K4 minor for a graph file")
    p.add_argument("input", help="graph file, or - for stdin")
    p.add_argument("--format", choices=fmt_choices, default="auto")
    p.add_argument("--trace", action="store_true", help="include pi, rho, C2, C3, u, v, P, Q, w, z, e")
    p.add_argument("--json", action="store_true", help="emit the JSON certificate document")
    p.add_argument("--dot", metavar="PATH", help="write a DOT rendering")
    p.add_argument("--plot", metavar="PATH", help="write a matplotlib figure (png/pdf/svg)")
    p.add_argument("--timeout", type=float, default=None, metavar="SECONDS")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="check a JSON certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--format", choices=fmt_choices, default="auto")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a corpus graph")
    p.add_argument("family", choices=("complete", "cycle", "wheel", "mycielski-of", "gnp") + tuple(NAMED))
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base", default="cycle", help="base family for mycielski-of")
    p.add_argument("--base-n", type=int, default=5)
    p.add_argument("--name", default=None)
    p.add_argument("--out-format", choices=FORMATS, default=EDGE_LIST)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sweep", help="run oracle cross-checks over many graphs")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int, default=None)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, action="append", help="edge probability (repeatable)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--plot-dir", default=None, help="write summary figures here")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"k4cert: {exc}", file=sys.stderr)
        return EX_USAGE
    except FileNotFoundError as exc:
        print(f"k4cert: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except (FormatError, GraphError) as exc:
        print(f"k4cert: {exc}", file=sys.stderr)
        return EX_DATAERR
    except TimeoutError as exc:
        print(f"k4cert: {exc}", file=sys.stderr)
        return EX_TEMPFAIL
    except ProofViolation as exc:
        print(f"k4cert: internal error: {exc}", file=sys.stderr)
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())

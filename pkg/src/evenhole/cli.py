"""Command-line interface.

Exit codes: 0 success / hole found, 1 no even hole (``detect``,
``shortest``) or a bench disagreement, 2 usage or input errors,
3 ``shortest`` left unresolved.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__, holes, oracle, pipeline
from .generators import GenSpec, render_spec
from .graph import GraphFormatError, read_graph, validate_hole
from .lemma4 import run_lemma4
from .lemma5 import NotLongError, run_lemma5

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR, EXIT_UNRESOLVED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _hole_list(h):
    return None if h is None else h.one_indexed()


def _load(path):
    try:
        return read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except (GraphFormatError, UnicodeDecodeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def verdict_report(v: pipeline.Verdict, timings: dict | None = None) -> dict:
    """JSON-ready report; ``hole`` appears only when a hole was found."""
    diag = {
        "stage": v.stage,
        "long_certificate": v.long_certificate,
        "subgraphs": [r.as_dict() for r in v.runs],
    }
    if v.reason:
        diag["reason"] = v.reason
    if timings is not None:
        diag["timings_ms"] = timings
    report = {
        "status": v.status.value,
        "length": v.length,
        "diagnostics": diag,
        "version": __version__,
    }
    if v.hole is not None:
        report["hole"] = v.hole.one_indexed()
    return report


# --------------------------------------------------------------------------
# subcommands


def cmd_detect(args) -> int:
    G = _load(args.file)
    found = oracle.has_even_hole(G)
    if args.json:
        print(_dump({"has_even_hole": found, "version": __version__}))
    else:
        print("even hole" if found else "no even hole")
    return EXIT_OK if found else EXIT_NEGATIVE


def _provider(spec):
    try:
        return pipeline.make_provider(spec)
    except pipeline.ProviderError as exc:
        raise UsageError(str(exc)) from None


def run_shortest(G, provider_spec="trivial", bound=oracle.LONG_THRESHOLD, threads=1, timings=False):
    provider = _provider(provider_spec)
    t0 = time.perf_counter()
    try:
        v = pipeline.shortest_even_hole(G, provider, bound, workers=threads)
    except pipeline.ProviderError as exc:
        raise UsageError(str(exc)) from None
    t = {"total": round((time.perf_counter() - t0) * 1000, 3)} if timings else None
    return v, verdict_report(v, t)


def cmd_shortest(args) -> int:
    if args.bound < 4:
        raise UsageError("--bound must be at least 4")
    G = _load(args.file)
    v, report = run_shortest(G, args.provider, args.bound, args.threads, args.timings)
    if args.json:
        print(_dump(report))
    elif v.status is pipeline.Status.FOUND:
        print(f"shortest even hole, length {v.length}: {' '.join(map(str, report['hole']))}")
    elif v.status is pipeline.Status.NO_EVEN_HOLE:
        print("no even hole")
    else:
        print(f"unresolved: {v.reason}")
    return {
        pipeline.Status.FOUND: EXIT_OK,
        pipeline.Status.NO_EVEN_HOLE: EXIT_NEGATIVE,
        pipeline.Status.UNRESOLVED: EXIT_UNRESOLVED,
    }[v.status]


def _emit_hole(args, key, h, extra=None) -> int:
    out = {key: _hole_list(h), "length": None if h is None else h.length, "version": __version__}
    out.update(extra or {})
    if args.json:
        print(_dump(out))
    elif h is None:
        print(f"{key}: no hole reported")
    else:
        print(f"{key}: length {h.length}: {' '.join(map(str, h.one_indexed()))}")
    return EXIT_OK


def cmd_lemma4(args) -> int:
    return _emit_hole(args, "lemma4", run_lemma4(_load(args.file)))


def cmd_lemma5(args) -> int:
    G = _load(args.file)
    try:
        h = run_lemma5(G, long_certificate=True if args.assume_long else None)
    except NotLongError as exc:
        raise UsageError(f"{args.file}: {exc} (it has an even hole on at most 22 vertices)") from None
    return _emit_hole(args, "lemma5", h)


def _parse_hole(text: str, n: int) -> list[int]:
    try:
        ids = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise UsageError(f"malformed hole ids {text!r}") from None
    if not ids or any(not 1 <= v <= n for v in ids):
        raise UsageError(f"hole ids must be in 1..{n}")
    return [v - 1 for v in ids]


def certify_report(G, seq) -> dict:
    h = validate_hole(G, seq)
    out = {"valid_hole": h is not None, "version": __version__}
    if h is None:
        return out
    out["length"] = h.length
    out["even"] = h.is_even
    out["hole"] = h.one_indexed()
    if not h.is_even:
        return out
    best = oracle.shortest_even_hole_brute(G)
    out["shortest"] = best is not None and best.length == h.length
    out["shortest_even_length"] = None if best is None else best.length
    bad = holes.enumerate_bad_shortcuts(G, h)
    worst = holes.worst_shortcuts(G, h, bad)

    def rec(r):
        return {
            "path": [v + 1 for v in r.path],
            "length": r.length,
            "hole_distance": r.hole_distance,
            "shallow": r.is_shallow,
        }

    out["good"] = not bad
    out["bad_shortcuts"] = [rec(r) for r in bad]
    out["worst_shortcuts"] = [rec(r) for r in worst]
    return out


def cmd_certify(args) -> int:
    G = _load(args.file)
    report = certify_report(G, _parse_hole(args.hole, G.n))
    if args.json:
        print(_dump(report))
    else:
        if not report["valid_hole"]:
            print("not a hole")
        else:
            print(f"valid hole, length {report['length']}, {'even' if report['even'] else 'odd'}")
            if report["even"]:
                print(f"shortest even hole: {report['shortest']}")
                print(f"good={str(report['good']).lower()}")
                for r in report["worst_shortcuts"]:
                    tag = "shallow" if r["shallow"] else "not shallow"
                    print(f"worst shortcut {'-'.join(map(str, r['path']))} ({tag})")
    return EXIT_OK


def cmd_status(args) -> int:
    G = _load(args.file)
    try:
        st = oracle.graph_status(G, force=args.force)
    except oracle.OracleGuardError as exc:
        raise UsageError(f"{exc}; pass --force") from None
    out = st.as_dict()
    out["version"] = __version__
    if args.json:
        print(_dump(out))
    else:
        for k, val in st.as_dict().items():
            print(f"{k}: {val}")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        spec = GenSpec.parse(args.model)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = render_spec(spec)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="ascii")
    return EXIT_OK


def bench_row(path: Path) -> dict:
    row = {"file": path.name}
    t0 = time.perf_counter()
    try:
        G = read_graph(path)
    except (OSError, GraphFormatError, UnicodeDecodeError) as exc:
        row.update(status="error", error=str(exc), agree=None)
        return row
    v = pipeline.shortest_even_hole(G)
    t1 = time.perf_counter()
    ref = oracle.shortest_even_hole_brute(G)
    t2 = time.perf_counter()
    if v.status is pipeline.Status.UNRESOLVED:
        agree = None
    else:
        agree = v.length == (None if ref is None else ref.length)
    row.update(
        n=G.n,
        m=G.num_edges,
        status=v.status.value,
        length=v.length,
        oracle_length=None if ref is None else ref.length,
        stage=v.stage,
        agree=agree,
        pipeline_ms=round((t1 - t0) * 1000, 3),
        oracle_ms=round((t2 - t1) * 1000, 3),
    )
    return row


def bench_corpus(directory, threads: int = 1) -> list[dict]:
    d = Path(directory)
    if not d.is_dir():
        raise UsageError(f"corpus directory {directory} not found")
    files = sorted(p for p in d.iterdir() if p.is_file())
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(bench_row, files))
    return [bench_row(p) for p in files]


def cmd_bench(args) -> int:
    rows = bench_corpus(args.corpus, args.threads)
    if args.json:
        print(_dump({"rows": rows, "version": __version__}))
    else:
        print(f"{'file':32} {'status':13} {'len':>4} {'oracle':>6} {'agree':>6} {'ms':>10}")
        for r in rows:
            if r["status"] == "error":
                print(f"{r['file']:32} error: {r['error']}")
                continue
            print(
                f"{r['file']:32} {r['status']:13} {str(r['length']):>4} {str(r['oracle_length']):>6}"
                f" {str(r['agree']):>6} {r['pipeline_ms']:>10.1f}"
            )
        print(f"{len(rows)} files, {sum(r['agree'] is False for r in rows)} disagreements")
    if any(r["status"] == "error" for r in rows):
        return EXIT_ERROR
    if any(r["agree"] is False for r in rows):
        return EXIT_NEGATIVE
    return EXIT_OK


# --------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="evenhole", description="Shortest even holes in graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("detect", cmd_detect, "does the graph contain an even hole?")
    sp.add_argument("file")

    sp = add("shortest", cmd_shortest, "find a shortest even hole")
    sp.add_argument("file")
    sp.add_argument("--provider", default="trivial", help="trivial | subsets[:<max_n>] | file:<path>")
    sp.add_argument("--bound", type=int, default=oracle.LONG_THRESHOLD, help="direct search bound (default 22)")
    sp.add_argument("--threads", type=_positive, default=1)
    sp.add_argument("--timings", action="store_true", help="include wall-clock timings in the JSON report")

    sp = add("lemma4", cmd_lemma4, "run the quadruple search alone")
    sp.add_argument("file")

    sp = add("lemma5", cmd_lemma5, "run the eight-anchor search alone (long graphs)")
    sp.add_argument("file")
    sp.add_argument("--assume-long", action="store_true", help="skip the long-graph check")

    sp = add("certify", cmd_certify, "classify a given hole and its shortcuts")
    sp.add_argument("file")
    sp.add_argument("--hole", required=True, help="comma-separated 1-indexed vertex ids")

    sp = add("status", cmd_status, "oracle classification (exponential)")
    sp.add_argument("file")
    sp.add_argument("--force", action="store_true", help=f"allow n > {oracle.STATUS_MAX_N}")

    sp = add("gen", cmd_gen, "write a generated graph")
    sp.add_argument("--model", required=True, help="e.g. cycle:26, er:12:1/3:7, theta:2:2:3")
    sp.add_argument("-o", "--output", required=True, help="output file, '-' for stdout")

    sp = add("bench", cmd_bench, "pipeline vs oracle over a corpus directory")
    sp.add_argument("--corpus", required=True)
    sp.add_argument("--threads", type=_positive, default=1)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"evenhole: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: generate, classify, cover, verify, oracle, search.

Commands read a graph from stdin (or --in FILE) and compose through pipes:
`cover` emits the graph, a separator line, and the certificate on stdout, and
`verify` accepts that combined stream. Exit codes: 0 success or accept,
1 verification reject or predicate counterexample, 2 usage or input error,
3 budget or size limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .classify import DiamPattern, classify_complete
from .covers import (
    ProofAssertionError,
    cover_alpha2,
    cover_general,
    cover_stars,
    cover_via_cliques,
    detect_near_split,
    cover_near_split,
    two_clique_cover,
)
from .generators import InstanceSpec
from .graph import (
    ColoredGraph,
    CoverCertificate,
    LimitExceeded,
    format_certificate,
    format_combined,
    format_graph,
    parse_certificate,
    parse_combined,
    parse_graph,
    verify_cover,
)
from .oracle import exists_bounds_cover, min_cover_exact
from .search import (
    ConstructiveMatchesOracle,
    HasBoundsCover,
    MinCoverAtMost,
    enumerate_colorings,
    format_report,
    min_cover_distribution,
)

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Argparse that reports usage problems via exception, not sys.exit."""

    def error(self, message):
        raise _UsageError(message)


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(path: str | None) -> ColoredGraph:
    return parse_graph(_read_text(path))


def _fmt_set(vertices) -> str:
    return ",".join(map(str, sorted(vertices)))


# -- gen ------------------------------------------------------------------


def _cmd_gen(args) -> int:
    params: dict = {}
    family = args.family
    if family in ("p42", "k7triple"):
        params["copies"] = args.copies
    elif family == "antihole":
        params["k"] = args.k
        params["scheme"] = args.scheme
    elif family == "matching-complement":
        params["n"] = args.n
    elif family == "random-alpha2":
        params.update(n=args.n, p=args.p, seed=args.seed)
        print(f"seed = {args.seed}", file=sys.stderr)
    elif family == "substitution":
        params["sizes"] = [int(s) for s in args.sizes.split(",")]
        params["free_color"] = args.free_color
    G = InstanceSpec(family, params).build()
    detail = " ".join(f"{k}={v}" for k, v in params.items())
    _write_text(args.out, format_graph(G, comments=[f"gen {family} {detail}".rstrip()]))
    return EXIT_OK


# -- classify ----------------------------------------------------------------


def _cmd_classify(args) -> int:
    G = _load_graph(getattr(args, "in"))
    verdict = classify_complete(G)
    d1, d2 = verdict.diameters
    lines = [
        f"case = {verdict.case.value}",
        f"diameters = {d1},{d2}",
        f"role_swap = {int(verdict.role_swap)}",
    ]
    if verdict.case is DiamPattern.OVER_THREE:
        h = verdict.house
        lines += [
            f"house_color = {h.house_color}",
            f"house_x1 = {h.x1}",
            f"house_x2 = {h.x2}",
            f"house_a3 = {_fmt_set(h.a3)}",
            f"house_a4 = {_fmt_set(h.a4)}",
            f"house_a5 = {_fmt_set(h.a5)}",
        ]
    elif verdict.case is DiamPattern.BOTH_THREE:
        b1, b2 = verdict.bases
        lines += [f"base_color1 = {b1[0]},{b1[1]}", f"base_color2 = {b2[0]},{b2[1]}"]
    elif verdict.case is DiamPattern.THREE_TWO:
        u, v = verdict.double_star_base
        lines += [
            f"double_star_color = {verdict.double_star_color}",
            f"double_star_base = {u},{v}",
        ]
    print("\n".join(lines))
    return EXIT_OK


# -- cover --------------------------------------------------------------------


def _run_cover(G: ColoredGraph, method: str, max_n: int) -> CoverCertificate:
    if method == "alpha2":
        return cover_alpha2(G)
    if method == "near-split":
        s = detect_near_split(G)
        if s is None:
            raise ValueError("no near-split structure found in the input graph")
        return cover_near_split(G, s)
    if method == "general":
        return cover_general(G)
    if method == "stars":
        return cover_stars(G)
    if method == "cliques":
        return cover_via_cliques(G, max_n=max_n)
    if method == "two-clique":
        return two_clique_cover(G)
    raise ValueError(f"unknown cover method {method!r}")


def _cmd_cover(args) -> int:
    G = _load_graph(getattr(args, "in"))
    cert = _run_cover(G, args.method, args.max_n)
    bounds = ",".join(map(str, cert.bounds()))
    print(f"components = {len(cert)}; bounds = {bounds}", file=sys.stderr)
    if args.out:
        Path(args.out).write_text(format_certificate(cert))
    else:
        sys.stdout.write(format_combined(G, cert))
    return EXIT_OK


# -- verify ----------------------------------------------------------------


def _cmd_verify(args) -> int:
    if args.cert:
        G = _load_graph(getattr(args, "in"))
        cert = parse_certificate(Path(args.cert).read_text())
    else:
        G, cert = parse_combined(_read_text(getattr(args, "in")))
    verdict = verify_cover(G, cert)
    if verdict:
        bounds = ",".join(map(str, cert.bounds()))
        print(f"accepted: {len(cert)} components, bounds {bounds}")
        return EXIT_OK
    print(f"rejected: {verdict.reason}", file=sys.stderr)
    return EXIT_REJECT


# -- oracle ----------------------------------------------------------------


def _cmd_oracle(args) -> int:
    G = _load_graph(getattr(args, "in"))
    if args.min_cover is not None:
        k, cert = min_cover_exact(G, args.min_cover, max_n=args.max_n)
        print(k)
        if args.out:
            Path(args.out).write_text(format_certificate(cert))
        return EXIT_OK
    bounds = _parse_int_list(args.bounds, "--bounds")
    cert = exists_bounds_cover(G, bounds, max_n=args.max_n)
    if cert is None:
        print(f"no cover with bounds {args.bounds}", file=sys.stderr)
        return EXIT_REJECT
    _write_text(args.out, format_certificate(cert))
    return EXIT_OK


# -- search ----------------------------------------------------------------


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise ValueError(f"{flag} expects a comma-separated integer list, got {text!r}")


def _parse_predicate(text: str):
    """Predicate syntax: name[:comma-separated-args]."""
    name, _, arg = text.partition(":")
    if name == "has-bounds-cover":
        bounds = _parse_int_list(arg, "--predicate")
        if not bounds:
            raise ValueError("has-bounds-cover needs bounds, e.g. has-bounds-cover:3,3")
        return HasBoundsCover(tuple(bounds))
    if name == "min-cover-atmost":
        vals = _parse_int_list(arg, "--predicate")
        if len(vals) != 2:
            raise ValueError("min-cover-atmost needs d,k, e.g. min-cover-atmost:2,1")
        return MinCoverAtMost(vals[0], vals[1])
    if name == "constructive-matches-oracle":
        if arg:
            (d,) = _parse_int_list(arg, "--predicate")
            return ConstructiveMatchesOracle(d)
        return ConstructiveMatchesOracle()
    if name == "min-cover-distribution":
        (d,) = _parse_int_list(arg, "--predicate")
        return ("distribution", d)
    raise ValueError(
        f"unknown predicate {name!r}; use has-bounds-cover:D1,..,Dk, "
        "min-cover-atmost:D,K, constructive-matches-oracle[:D], "
        "or min-cover-distribution:D"
    )


def _cmd_search(args) -> int:
    host = _load_graph(args.host)
    predicate = _parse_predicate(args.predicate)
    if isinstance(predicate, tuple):
        _hist, report = min_cover_distribution(
            host, args.colors, predicate[1], budget=args.budget, jobs=args.jobs
        )
    else:
        report = enumerate_colorings(
            host,
            args.colors,
            predicate,
            mode=args.mode,
            samples=args.samples,
            seed=args.seed,
            budget=args.budget,
            jobs=args.jobs,
        )
    print(format_report(report))
    if report.partial:
        return EXIT_LIMIT
    if report.fail_count > 0:
        return EXIT_REJECT
    return EXIT_OK


# -- wiring ---------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="monocover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named instance family")
    gen.add_argument(
        "--family",
        required=True,
        choices=[
            "p42",
            "antihole",
            "k7triple",
            "matching-complement",
            "random-alpha2",
            "substitution",
        ],
    )
    gen.add_argument("--copies", type=int, default=1, help="disjoint copies (p42, k7triple)")
    gen.add_argument("--k", type=int, default=3, help="antihole parameter: 2k+1 vertices")
    gen.add_argument(
        "--scheme",
        default="distance-split",
        help="antihole coloring: distance-split or uniform:C",
    )
    gen.add_argument("--n", type=int, default=8, help="vertex count (matching-complement, random-alpha2)")
    gen.add_argument("--p", type=float, default=0.3, help="non-edge density target (random-alpha2)")
    gen.add_argument("--seed", type=int, default=0, help="RNG seed; the value used is printed")
    gen.add_argument("--sizes", default="1,1,1,1,1", help="block sizes per base vertex (substitution)")
    gen.add_argument("--free-color", type=int, default=2, help="color for the free house edges (substitution)")
    gen.add_argument("--out", help="output file (default: stdout)")
    gen.set_defaults(func=_cmd_gen)

    classify = sub.add_parser("classify", help="diameter classification of a 2-colored complete graph")
    classify.add_argument("--in", help="graph file (default: stdin)")
    classify.set_defaults(func=_cmd_classify)

    cover = sub.add_parser("cover", help="build a monochromatic-component cover certificate")
    cover.add_argument(
        "--method",
        required=True,
        choices=["alpha2", "near-split", "general", "stars", "cliques", "two-clique"],
    )
    cover.add_argument("--in", help="graph file (default: stdin)")
    cover.add_argument(
        "--out",
        help="write the bare certificate here instead of the combined stream on stdout",
    )
    cover.add_argument("--max-n", type=int, default=24, help="size limit for --method cliques")
    cover.set_defaults(func=_cmd_cover)

    verify = sub.add_parser("verify", help="check a certificate against a graph")
    verify.add_argument("--in", help="combined stream or graph file (default: stdin)")
    verify.add_argument("--cert", help="certificate file when --in holds a bare graph")
    verify.set_defaults(func=_cmd_verify)

    oracle = sub.add_parser("oracle", help="exact brute-force cover questions")
    group = oracle.add_mutually_exclusive_group(required=True)
    group.add_argument("--min-cover", type=int, metavar="D", help="minimum cover size at diameter bound D")
    group.add_argument("--bounds", metavar="D1,D2,...", help="find a cover with these exact per-component bounds")
    oracle.add_argument("--in", help="graph file (default: stdin)")
    oracle.add_argument("--out", help="certificate output file")
    oracle.add_argument("--max-n", type=int, default=18, help="exact-solver size limit")
    oracle.add_argument("--jobs", type=int, default=1, help="accepted for interface symmetry; the exact solver is single-threaded")
    oracle.set_defaults(func=_cmd_oracle)

    search = sub.add_parser("search", help="evaluate a predicate over the colorings of a host graph")
    search.add_argument("--host", default="-", help="host graph file (default: stdin)")
    search.add_argument("--colors", type=int, required=True, metavar="R", help="number of colors")
    search.add_argument("--predicate", required=True, help="e.g. has-bounds-cover:3,3")
    search.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
    search.add_argument("--samples", type=int, default=0, help="sample count for --mode sample")
    search.add_argument("--seed", type=int, default=0, help="sampling seed")
    search.add_argument("--budget", type=int, default=1 << 26, help="max predicate evaluations")
    search.add_argument("--jobs", type=int, default=1, help="worker processes")
    search.set_defaults(func=_cmd_search)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ValueError, OSError, ProofAssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

import itertools
import random

import pytest

from monocover.generators import gen_antihole, gen_matching_complement, gen_p42
from monocover.graph import build_graph
from monocover.oracle import exists_bounds_cover, min_cover_exact
from monocover.search import (
    ConstructiveMatchesOracle,
    HasBoundsCover,
    MinCoverAtMost,
    apply_coloring,
    count_canonical,
    enumerate_colorings,
    format_report,
    min_cover_distribution,
)
from monocover.search import _rgs_next, _rgs_unrank, _rgs_ways


def complete_host(n):
    return build_graph(n, 2, [(u, v, 1) for u in range(n) for v in range(u + 1, n)])


def brute_canonical(m, r):
    """All canonical color strings by exhaustive relabeling, lexicographically."""
    seen = set()
    for raw in itertools.product(range(r), repeat=m):
        relabel = {}
        canon = []
        for d in raw:
            if d not in relabel:
                relabel[d] = len(relabel)
            canon.append(relabel[d])
        seen.add(tuple(canon))
    return sorted(seen)


def test_count_canonical_values():
    assert count_canonical(0, 2) == 1
    assert count_canonical(6, 2) == 32
    assert count_canonical(14, 2) == 8192
    assert count_canonical(5, 1) == 1
    assert count_canonical(3, 3) == 5  # set-partition count of 3 items
    for m in range(0, 7):
        for r in (1, 2, 3):
            assert count_canonical(m, r) == len(brute_canonical(m, r))


def test_unrank_and_successor_agree():
    for m, r in ((3, 2), (5, 2), (4, 3), (3, 4)):
        ways = _rgs_ways(m, r)
        ref = brute_canonical(m, r)
        digits = _rgs_unrank(0, m, r, ways)
        walked = [tuple(digits)]
        while _rgs_next(digits, r):
            walked.append(tuple(digits))
        assert walked == ref
        for i, want in enumerate(ref):
            assert tuple(_rgs_unrank(i, m, r, ways)) == want
        with pytest.raises(ValueError):
            _rgs_unrank(len(ref), m, r, ways)


def test_exhaustive_k4_min_cover_counts():
    host = complete_host(4)
    report = enumerate_colorings(host, 2, MinCoverAtMost(2, 1))
    assert report.space == 32 and report.total == 32
    assert not report.partial
    assert report.ok_count + report.fail_count == 32
    assert report.worst_badness == 2

    # independent recount over all 64 colorings; swap symmetry halves exactly
    pairs = sorted(host.edge_color)
    fails = 0
    for raw in itertools.product((1, 2), repeat=6):
        G = build_graph(4, 2, [(u, v, c) for (u, v), c in zip(pairs, raw)])
        if min_cover_exact(G, 2)[0] > 1:
            fails += 1
    assert fails == 2 * report.fail_count


def test_min_cover_distribution_k4_and_single_vertex():
    host = complete_host(4)
    hist, report = min_cover_distribution(host, 2, 2)
    assert hist == {1: 26, 2: 6}
    assert max(hist) == 2
    assert report.histogram == ((1, 26), (2, 6))
    assert report.ok_count == 32

    single = build_graph(1, 2, [])
    hist, report = min_cover_distribution(single, 2, 0)
    assert hist == {1: 1}
    assert report.space == 1


def test_parallel_reports_identical():
    host = gen_matching_complement(4)  # 4 edges -> 8 canonical colorings
    a = enumerate_colorings(host, 2, HasBoundsCover((2, 2)), jobs=1)
    b = enumerate_colorings(host, 2, HasBoundsCover((2, 2)), jobs=3)
    assert a == b
    host2 = complete_host(5)
    c = enumerate_colorings(host2, 2, MinCoverAtMost(2, 1), jobs=1)
    d = enumerate_colorings(host2, 2, MinCoverAtMost(2, 1), jobs=4)
    assert c == d
    h1, r1 = min_cover_distribution(host2, 2, 2, jobs=1)
    h2, r2 = min_cover_distribution(host2, 2, 2, jobs=4)
    assert h1 == h2 and r1 == r2


def test_budget_cuts_run_partial():
    host = complete_host(5)  # 512 canonical colorings
    report = enumerate_colorings(host, 2, HasBoundsCover((3, 3)), budget=100)
    assert report.partial and report.total == 100 and report.space == 512
    assert report.ok_count + report.fail_count == 100
    zero = enumerate_colorings(host, 2, HasBoundsCover((3, 3)), budget=0)
    assert zero.partial and zero.total == 0 and zero.witness_ordinal is None


def test_sample_mode_deterministic():
    host = gen_antihole(3)
    a = enumerate_colorings(host, 2, HasBoundsCover((3, 3)), mode="sample", samples=50, seed=5)
    b = enumerate_colorings(host, 2, HasBoundsCover((3, 3)), mode="sample", samples=50, seed=5)
    assert a == b
    c = enumerate_colorings(host, 2, HasBoundsCover((3, 3)), mode="sample", samples=50, seed=6)
    assert c.mode == "sample" and c.total == 50
    assert a.ok_count + a.fail_count == 50
    par = enumerate_colorings(host, 2, HasBoundsCover((3, 3)), mode="sample", samples=50, seed=5, jobs=2)
    assert par == a
    with pytest.raises(ValueError):
        enumerate_colorings(host, 2, HasBoundsCover((3, 3)), mode="sample", samples=0)
    with pytest.raises(ValueError):
        enumerate_colorings(host, 2, HasBoundsCover((3, 3)), mode="nope")


def test_witness_reverifies():
    host = complete_host(4)
    report = enumerate_colorings(host, 2, MinCoverAtMost(2, 1))
    G = apply_coloring(host, report.witness_colors)
    ok, badness = MinCoverAtMost(2, 1).evaluate(G)
    assert not ok and badness == report.worst_badness
    with pytest.raises(ValueError):
        apply_coloring(host, (1, 2))


def test_swap_symmetry_of_predicates():
    rng = random.Random(31)
    host = gen_antihole(2)
    pairs = sorted(host.edge_color)
    predicates = [HasBoundsCover((3, 3)), MinCoverAtMost(2, 2), ConstructiveMatchesOracle(4)]
    for _ in range(25):
        colors = tuple(rng.randrange(1, 3) for _ in pairs)
        swapped = tuple(3 - c for c in colors)
        G1 = apply_coloring(host, colors)
        G2 = apply_coloring(host, swapped)
        for pred in predicates:
            assert pred.evaluate(G1)[0] == pred.evaluate(G2)[0]


def test_constructive_matches_oracle_runs():
    host = complete_host(4)
    report = enumerate_colorings(host, 2, ConstructiveMatchesOracle(4))
    assert report.total == 32
    assert report.worst_badness >= 0
    if report.fail_count:
        G = apply_coloring(host, report.witness_colors)
        built = ConstructiveMatchesOracle(4).evaluate(G)
        assert built[1] == report.worst_badness


def test_has_bounds_cover_matches_oracle_directly():
    host = gen_matching_complement(6)
    report = enumerate_colorings(host, 2, HasBoundsCover((2, 2)))
    recount = 0
    pairs = sorted(host.edge_color)
    from monocover.search import _rgs_ways as ways_of

    ways = ways_of(len(pairs), 2)
    for i in range(report.space):
        digits = _rgs_unrank(i, len(pairs), 2, ways)
        G = apply_coloring(host, tuple(d + 1 for d in digits))
        if exists_bounds_cover(G, [2, 2]) is not None:
            recount += 1
    assert recount == report.ok_count


def test_format_report_round_values():
    host = complete_host(4)
    report = enumerate_colorings(host, 2, MinCoverAtMost(2, 1))
    text = format_report(report)
    assert "ok_count = 26" in text
    assert "fail_count = 6" in text
    assert "worst_badness = 2" in text
    assert "symmetry_factor = 2" in text
    hist_text = format_report(min_cover_distribution(host, 2, 2)[1])
    assert "histogram = 1:26,2:6" in hist_text

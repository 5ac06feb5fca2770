"""Acceptance gate: one test per criterion, summarised as PASS/FAIL lines."""

import itertools
import subprocess
import sys
import time
from pathlib import Path

from sizeramsey.cli import main
from sizeramsey.factory import construct, coverage_sweep
from sizeramsey.formats import coloring_to_text
from sizeramsey.graph import Shape, is_regular
from sizeramsey.oracle import arrows_bruteforce, arrows_oracle, min_arrowing_s
from sizeramsey.ramsey import (
    coloring_is_good,
    lower_bound,
    size_ramsey,
    special_branch_applies,
    upper_bound,
    witness_coloring,
)

GRID = list(itertools.product(range(3, 6), range(3, 7), range(3, 7)))


def test_criterion_1_sweep(criterion):
    criterion(1, "construction sweep j 3..6, s 1..6 validates, < 10 s")
    t0 = time.perf_counter()
    entries = coverage_sweep(range(3, 7), range(1, 7))
    elapsed = time.perf_counter() - t0
    failures = [e for e in entries if not e.ok]
    print(f"sweep: {len(entries)} requests, {len(failures)} exceptions, {elapsed:.2f}s")
    for e in failures:
        print(f"  {e}")
    assert not failures
    assert elapsed < 10


def test_criterion_2_reference_constructions(criterion):
    criterion(2, "reference constructions are exactly d-regular")
    for j, s, d in [(3, 5, 6), (3, 5, 4), (4, 3, 3), (4, 4, 5), (3, 4, 5)]:
        g, report = construct(j, s, d)
        assert report.valid and is_regular(g, d)
        assert 2 * len(g) == j * s * d


def test_criterion_3_closed_form_vs_oracle(criterion):
    criterion(3, "closed form equals oracle minimum on 48 cells, < 5 min")
    t0 = time.perf_counter()
    mismatches = []
    for j, n, m in GRID:
        value = size_ramsey((j, n, m)).value
        found = min_arrowing_s(j, n, m, upper_bound((j, n, m)) + 1)
        if found != value:
            mismatches.append((j, n, m, value, found))
    elapsed = time.perf_counter() - t0
    print(f"grid: {len(GRID)} cells in {elapsed:.2f}s")
    assert len(GRID) == 48
    assert not mismatches, mismatches
    assert elapsed < 300
    assert size_ramsey((3, 3, 3)).value == 1
    assert size_ramsey((3, 3, 4)).value == 2
    assert size_ramsey((3, 5, 5)).value == 3


def test_criterion_4_oracle_vs_bruteforce(criterion):
    criterion(4, "pruned search agrees with brute force, j=3, s<=2, n,m<=6")
    checked = 0
    for s, n, m in itertools.product((1, 2), range(2, 7), range(2, 7)):
        fast = arrows_oracle(3, s, n, m)
        slow = arrows_bruteforce(3, s, n, m)
        assert fast.arrows == slow.arrows, (s, n, m)
        assert fast.certificate == slow.certificate, (s, n, m)
        checked += 1
    assert checked == 50


def test_criterion_5_bounds(criterion):
    criterion(5, "lower <= value <= upper, equalities where they must hold")
    for j, n, m in GRID:
        q = (j, n, m)
        lo, value, hi = lower_bound(q), size_ramsey(q).value, upper_bound(q)
        assert lo <= value <= hi, q
        if (n + m - 4) % (j - 1):
            assert lo == value == hi, q
        if special_branch_applies(q):
            assert value == lo, q


def test_criterion_6_witness_round_trip(criterion, tmp_path, capsys):
    criterion(6, "witness below the threshold is good and verify accepts it")
    count = 0
    for j, n, m in GRID:
        value = size_ramsey((j, n, m)).value
        if value < 2:
            continue
        c = witness_coloring(Shape(j, value - 1), n, m)
        assert coloring_is_good(c, n, m), (j, n, m)
        path = tmp_path / f"w_{j}_{n}_{m}.coloring"
        path.write_text(coloring_to_text(c))
        assert main(["verify", str(path), "-n", str(n), "-m", str(m)]) == 0, (j, n, m)
        count += 1
    capsys.readouterr()
    assert count > 0


def test_criterion_7_property_suites(criterion):
    criterion(7, "property suites pass standalone in < 5 s")
    suite = Path(__file__).with_name("test_properties.py")
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(suite)],
        capture_output=True,
        text=True,
    )
    elapsed = time.perf_counter() - t0
    print(proc.stdout[-400:])
    assert proc.returncode == 0
    assert elapsed < 5


def test_criterion_8_monotonicity(criterion):
    criterion(8, "oracle verdict is monotone in s up to upper_bound + 1")
    for j, n, m in GRID:
        verdicts = [arrows_oracle(j, s, n, m).arrows for s in range(1, upper_bound((j, n, m)) + 2)]
        assert verdicts == sorted(verdicts), (j, n, m, verdicts)
        assert verdicts[-1]

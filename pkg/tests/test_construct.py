import json
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sizeramsey import factory
from sizeramsey.factory import (
    CaseTag,
    Decomposition,
    adjacency_rule,
    construct,
    coverage_sweep,
    decompose,
    matching_parts,
    near_regular_subgraph,
    regular_subgraph,
    window_violation,
)
from sizeramsey.errors import ConstructionInvalid, DegreeTooLarge, NoDecomposition, ParityInfeasible
from sizeramsey.graph import Shape, is_regular


def _degrees(g):
    deg = Counter()
    for a, b in g.edges:
        deg[a] += 1
        deg[b] += 1
    return [deg[x] for x in range(g.shape.order)]


@pytest.mark.parametrize(
    "jsd, tag, k1, k2",
    [
        ((3, 5, 6), CaseTag.L1_EVEN_QUOTIENT, 1, 1),
        ((3, 5, 4), CaseTag.L1_ODD_QUOTIENT, 0, 1),
        ((4, 3, 3), CaseTag.C1_ODD_SIMPLE, 0, 1),
        ((4, 4, 5), CaseTag.C2_ODD, 0, 2),
        ((3, 4, 5), CaseTag.C4_ODD, 1, 0),
        ((6, 3, 6), CaseTag.C1_ODD_QUOTIENT, 0, 0),
    ],
)
def test_decompose_reference_cases(jsd, tag, k1, k2):
    dec = decompose(*jsd)
    assert (dec.case_tag, dec.k1, dec.k2) == (tag, k1, k2)
    assert dec.degree(jsd[0]) == jsd[2]


def test_odd_quotient_remainder():
    # j=6 reference case: d = (2*0+1)(6-1) + 1, remainder m = 1
    dec = decompose(6, 3, 6)
    assert dec.rem == 1 and dec.w_quot == 1


def test_decompose_errors():
    with pytest.raises(DegreeTooLarge):
        decompose(3, 2, 5)
    with pytest.raises(ParityInfeasible):
        decompose(3, 3, 3)
    with pytest.raises(NoDecomposition):
        decompose(3, 3, 0)


def test_window_violation_reports_bad_coefficients():
    bad = Decomposition(CaseTag.L1_ODD_QUOTIENT, 1, 1, 2, 1)  # 2k1 <= s-3 fails for s=3
    assert window_violation(bad, 3, 3) == "2k1 <= s-3"
    wrong_case = Decomposition(CaseTag.C1_EVEN, 0, 1, 2)
    assert "does not match" in window_violation(wrong_case, 3, 5)


@st.composite
def feasible_requests(draw):
    j = draw(st.integers(3, 9))
    s = draw(st.integers(1, 8))
    d = draw(st.integers(1, (j - 1) * s))
    if (j * s * d) % 2:
        d -= 1
    return j, s, max(d, 0)


@given(feasible_requests())
def test_decomposition_reconstructs_d_within_windows(req):
    j, s, d = req
    if d == 0:
        return
    dec = decompose(j, s, d)
    assert dec.degree(j) == d
    assert window_violation(dec, j, s) is None


@given(feasible_requests())
def test_regular_subgraph_is_regular(req):
    j, s, d = req
    g = regular_subgraph(j, s, d)
    assert set(_degrees(g)) == {d}
    assert all(a // s != b // s for a, b in g.edges)


def test_regular_subgraph_examples():
    g = regular_subgraph(3, 5, 6)
    assert g.shape.order == 15 and len(g) == 45
    assert len(regular_subgraph(4, 3, 0)) == 0
    with pytest.raises(ParityInfeasible):
        regular_subgraph(3, 3, 3)


def test_near_regular_examples():
    g = near_regular_subgraph(3, 3, 3)
    assert set(_degrees(g)) == {2}
    assert near_regular_subgraph(3, 5, 6) == regular_subgraph(3, 5, 6)
    assert near_regular_subgraph(4, 3, 3) == regular_subgraph(4, 3, 3)
    with pytest.raises(DegreeTooLarge):
        near_regular_subgraph(3, 2, 5)


def test_adjacency_rule_examples():
    dec = decompose(3, 5, 6)
    shape = Shape(3, 5)
    assert adjacency_rule(dec, shape, (0, 0), (1, 1))
    assert matching_parts(dec, shape, (0, 0), (1, 1)) == ["a"]
    assert not adjacency_rule(dec, shape, (0, 0), (0, 1))
    assert adjacency_rule(dec, shape, (0, 0), (1, 0))
    assert matching_parts(dec, shape, (0, 0), (1, 0)) == ["b"]


def test_graph_equals_rule_predicate():
    for j, s, d in [(4, 4, 5), (3, 4, 5), (5, 3, 6), (6, 5, 13)]:
        dec, shape = decompose(j, s, d), Shape(j, s)
        g = regular_subgraph(j, s, d)
        verts = list(shape.vertices())
        expected = {
            (shape.flat(u), shape.flat(v))
            for u, v in combinations(verts, 2)
            if adjacency_rule(dec, shape, u, v)
        }
        assert g.edges == expected


def test_case_four_directional_pairs():
    # each vertex gets exactly one neighbour through the half-turn slot
    dec, shape = decompose(5, 4, 1), Shape(5, 4)
    assert dec.case_tag is CaseTag.C4_ODD and dec.k2 == 0
    g = regular_subgraph(5, 4, 1)
    for a, b in g.edges:
        (i, l), (p, r) = shape.vertex(a), shape.vertex(b)
        assert abs(l - r) == 2
        assert (p - i) % 5 == (1 if r > l else 4)


def test_report_and_trace():
    g, report = construct(3, 5, 6)
    assert report.valid and report.histogram == {6: 15}
    assert dict(report.rule_trace) == {"a": 30, "b": 15}
    assert sum(n for _, n in report.rule_trace) == len(g)
    payload = json.loads(json.dumps(report.to_dict()))
    assert set(payload) == {"requested_d", "histogram", "valid", "rule_trace"}
    assert payload["histogram"] == {"6": 15}


def test_near_report_keeps_requested_degree():
    _, report = construct(3, 3, 3, near=True)
    assert report.requested_d == 3 and report.histogram == {2: 9} and report.valid


def test_broken_rules_raise_construction_invalid(monkeypatch):
    real = factory.rule_parts

    def drop_last(dec, shape):
        return real(dec, shape)[:-1]

    monkeypatch.setattr(factory, "rule_parts", drop_last)
    with pytest.raises(ConstructionInvalid) as info:
        construct(3, 5, 6)
    assert not info.value.report.valid
    assert info.value.report.histogram == {4: 15}
    entries = coverage_sweep([3], [5])
    assert {e.status for e in entries if e.d} == {"ConstructionInvalid"}


def test_sweep_lists_every_feasible_request():
    entries = coverage_sweep([3, 4], [1, 2, 3])
    expected = sum(
        1 for j in (3, 4) for s in (1, 2, 3) for d in range((j - 1) * s + 1) if (j * s * d) % 2 == 0
    )
    assert len(entries) == expected
    assert all(e.ok for e in entries)


def test_constructions_are_deterministic():
    assert regular_subgraph(5, 4, 9) == regular_subgraph(5, 4, 9)
    assert is_regular(regular_subgraph(5, 4, 9), 9)

import json

import pytest

from eccspectra import verify
from eccspectra.errors import EvenDiameter, ParameterOutOfRange
from eccspectra.families import double_broom, path, spider_h, star
from eccspectra.formats import graph6_decode, graph6_encode
from eccspectra.graph import ahu_canonical, graph_from_edges


def test_sig12_rounding():
    assert verify.sig12({"x": 1 / 3, "y": [2.0, (0.1 + 0.2)]}) == {"x": 0.333333333333, "y": [2.0, 0.3]}


def test_summary_examples():
    s = verify.summarize(graph6_encode(star(7)))
    assert s.eps_n == pytest.approx(-2.0, abs=1e-12)
    s = verify.summarize(graph6_encode(path(6)))
    assert s.eps_n == pytest.approx(-8.0902, abs=5e-5) and s.eps_n <= -5


def test_basic_bounds_small():
    rep = verify.verify_basic_bounds(7, domination_samples=20)
    assert rep.ok and rep.status == "verified"
    assert rep.instances == 1 + 2 + 3 + 6 + 11
    assert rep.counts["stars"] == 5
    assert rep.counts["domination_checked"] == 20
    with pytest.raises(ParameterOutOfRange):
        verify.verify_basic_bounds(15)


def test_diam3_max():
    for n, (a, b) in [(6, (1, 1)), (7, (1, 2))]:
        rep = verify.verify_diam3_max(n)
        assert rep.ok
        got = ahu_canonical(graph6_decode(rep.witness["graph6"]))
        assert got == ahu_canonical(double_broom(n, 3, a, b))
    rep = verify.verify_diam3_max(4)
    assert rep.ok and rep.instances == 1 and rep.witness["runner_up_gap"] is None


def test_odd_diam_max():
    rep = verify.verify_odd_diam_max(8, 5)
    assert rep.ok
    allowed = {ahu_canonical(double_broom(8, 5, 0, 2)), ahu_canonical(double_broom(8, 5, 1, 1))}
    assert {ahu_canonical(graph6_decode(c)) for c in rep.witness["argmax"]} <= allowed
    rep = verify.verify_odd_diam_max(6, 5)
    assert rep.ok and rep.instances == 1
    assert [ahu_canonical(graph6_decode(c)) for c in rep.witness["argmax"]] == [ahu_canonical(path(6))]
    with pytest.raises(EvenDiameter):
        verify.verify_odd_diam_max(10, 6)


def test_least_interval_examples():
    assert verify.in_least_interval(-4.0)
    assert verify.in_least_interval(verify.LOWER)
    assert not verify.in_least_interval(verify.UPPER)
    rep = verify.verify_least_interval(9)
    assert rep.ok and rep.counts["members"] == 8


def test_least_interval_falsified_witness(monkeypatch):
    members = verify.least_interval_members()
    monkeypatch.setattr(verify, "least_interval_members", lambda: [m for m in members if m[0] != "H_2,2"])
    rep = verify.verify_least_interval(7)
    assert rep.status == "falsified"
    assert rep.witness["extra"][0]["graph6"] == graph6_encode(graph6_decode(rep.witness["extra"][0]["graph6"]))
    assert ahu_canonical(graph6_decode(rep.witness["extra"][0]["graph6"])) == ahu_canonical(spider_h(2, 2))


def test_transform_instances_cases():
    # pendant on v2 moved to v1 of a 9-vertex caterpillar with d = 5
    cat = graph_from_edges(9, [(i, i + 1) for i in range(5)] + [(2, 6), (2, 7), (3, 8)])
    kinds = {k for k, _, _ in verify.transform_instances(cat)}
    assert "pendant" in kinds
    rep_spec = verify.summarize(graph6_encode(cat))
    for kind, h, _ in verify.transform_instances(cat):
        if kind == "pendant":
            assert verify.summarize(graph6_encode(h)).eps1 > rep_spec.eps1 + 1e-8

    # branch of depth i = 2 at v2: moving its deepest vertex onto v1 is a tie
    tie = graph_from_edges(8, [(i, i + 1) for i in range(5)] + [(2, 6), (6, 7)])
    cases = [(h, eq) for k, h, eq in verify.transform_instances(tie) if k == "branch"]
    assert cases and all(eq for _, eq in cases)
    base = verify.summarize(graph6_encode(tie)).eps1
    for h, _ in cases:
        assert verify.summarize(graph6_encode(h)).eps1 == pytest.approx(base, abs=1e-8)

    assert list(verify.transform_instances(path(6))) == []


def test_verify_transforms_small():
    rep = verify.verify_transforms(9, 5)
    assert rep.ok
    assert rep.counts["pendant_strict"] > 0 and rep.counts["branch_equal"] > 0
    assert rep.counts["vacuous_trees"] >= 1
    rep = verify.verify_transforms(6, 5)
    assert rep.ok and rep.instances == 0 and rep.counts["vacuous_trees"] == 1


def test_closed_forms_report():
    rep = verify.verify_closed_forms()
    assert rep.ok
    assert rep.counts["monotone_violations"] == 0
    assert rep.counts["condition"] == 99


def test_interlacing_report():
    rep = verify.verify_interlacing(50, seed=1)
    assert rep.ok and rep.instances == 50
    with pytest.raises(ParameterOutOfRange):
        verify.verify_interlacing(0)


def test_multiset_within():
    assert verify.multiset_within([1.0, 1.0], [1.0, 2.0, 1.0 + 1e-9], 1e-8)
    assert not verify.multiset_within([1.0, 1.0], [1.0, 2.0], 1e-8)


def test_reports_are_deterministic_and_job_independent():
    a = verify.verify_basic_bounds(9, jobs=1, domination_samples=10).to_json(timing=False)
    b = verify.verify_basic_bounds(9, jobs=2, domination_samples=10).to_json(timing=False)
    assert a == b
    rec = json.loads(a)
    assert rec["check_id"] == "bounds" and "elapsed" not in rec
    assert "elapsed" in json.loads(verify.verify_interlacing(3).to_json())


def test_summarize_all_preserves_order():
    from eccspectra.enumerate import free_trees

    trees = list(free_trees(10))
    assert verify.summarize_all(trees, jobs=2) == verify.summarize_all(trees, jobs=1)

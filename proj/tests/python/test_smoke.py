import json
import pathlib

import pytest

import nabcoh

SCENARIOS = pathlib.Path(__file__).resolve().parents[2] / "scenarios"


def test_groups_and_subgroups():
    s3 = nabcoh.Group.named("S3")
    assert s3.order == 6 and not s3.is_abelian()
    assert [h.order for h in s3.subgroups(up_to_conjugacy=True)] == sorted(
        h.order for h in s3.subgroups(up_to_conjugacy=True)
    )
    assert len(s3.subgroups()) == 6
    assert len(s3.subgroups(up_to_conjugacy=True)) == 4
    v4 = nabcoh.Group.parse({"kind": "perm", "degree": 4, "generators": ["(1,2)(3,4)", "(1,3)(2,4)"]})
    assert v4.order == 4 and all(v4.element_order(x) <= 2 for x in range(4))


def test_h1_of_c2_on_c3():
    c2, c3 = nabcoh.Group.named("C2"), nabcoh.Group.named("C3")
    actions = nabcoh.all_actions(c2, c3)
    assert len(actions) == 2
    counts = sorted(nabcoh.h1(a)["values"]["classes"] for a in actions)
    # trivial action: Hom(C2, C3) = 1; inversion: H^1 = 0 as well
    assert counts == [1, 1]
    assert nabcoh.h1(nabcoh.Action.trivial(c3, c3))["values"]["classes"] == 3


def test_shapiro1_and_sections():
    c4 = nabcoh.Group.named("C4")
    h = next(h for h in c4.subgroups() if h.order == 2)
    for a in nabcoh.all_actions(h.group, nabcoh.Group.named("S3")):
        out = nabcoh.shapiro1(h, a)
        assert out["holds"], out["violations"]
        assert nabcoh.h1_sections(a)["holds"]


def test_extensions_of_c2_by_c2():
    c2 = nabcoh.Group.named("C2")
    exts = nabcoh.extensions(c2, c2)
    assert len(exts) == 2
    assert sorted(e.splits() for e in exts) == [False, True]
    out = nabcoh.prop_ext(c2, c2)
    assert out["holds"] and out["values"]["classes"] == 2


def test_transport_and_holt():
    d4 = nabcoh.Group.named("D4")
    h = next(h for h in d4.subgroups() if h.order == 4 and h.group.is_abelian())
    for e in nabcoh.extensions(h.group, nabcoh.Group.named("C2")):
        out = nabcoh.transport(e, h)
        assert out["holds"], out["violations"]
    assert nabcoh.holt(h, nabcoh.Group.named("C2"))["holds"]


def test_scenario_and_suite_reports():
    code, rep = nabcoh.run_scenario((SCENARIOS / "shapiro1_C4.json").read_text())
    assert code == 0 and rep["schema"] == "nabc-report/1"
    code, _ = nabcoh.run_scenario(json.loads((SCENARIOS / "wrong_expectation.json").read_text()))
    assert code == 1
    code, rep = nabcoh.verify("anabelian", max_group_order=6)
    assert code == 0 and rep == nabcoh.verify("anabelian", max_group_order=6, jobs=2)[1]
    assert "prop-ext" in nabcoh.suite_names()


def test_errors():
    with pytest.raises(ValueError):
        nabcoh.Group.named("nonsense")
    with pytest.raises(ValueError):
        nabcoh.run_scenario("{not json")
    c6 = nabcoh.Group.named("C6")
    trivial = next(h for h in c6.subgroups() if h.order == 1)
    s3 = nabcoh.Group.named("S3")
    with pytest.raises(nabcoh.BoundExceeded):
        nabcoh.shapiro1(trivial, nabcoh.Action.trivial(trivial.group, s3))

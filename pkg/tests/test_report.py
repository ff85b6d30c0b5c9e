import json
from fractions import Fraction as Q

import pytest

from orbifold24.report import DISCREPANCY, FAIL, INFO, PASS, Report, render_value


def test_render_values():
    assert render_value(Q(3)) == 3
    assert render_value(Q(-2, 3)) == "-2/3"
    assert render_value([Q(1, 2), 4, "x"]) == ["1/2", 4, "x"]
    assert render_value({"a": Q(7, 12)}) == {"a": "7/12"}
    with pytest.raises(TypeError):
        render_value(0.5)


def test_verdicts_and_exit_codes():
    rep = Report("t")
    rep.check("a", Q(2), Q(2))
    assert rep.steps[-1].verdict == PASS
    rep.note("b", 5)
    assert rep.steps[-1].verdict == INFO
    assert rep.verdict == PASS and rep.exit_code == 0
    rep.check("c", 1, 2)
    assert rep.steps[-1].verdict == FAIL
    assert rep.verdict == FAIL and rep.exit_code == 1


def test_documented_discrepancy_does_not_fail():
    rep = Report("t")
    rep.check("known", 54, 66, documented=True)
    assert rep.steps[-1].verdict == DISCREPANCY
    assert rep.verdict == PASS
    # an honest pass is never downgraded to a discrepancy
    rep.check("exact", 54, 54, documented=True)
    assert rep.steps[-1].verdict == PASS


def test_rational_vs_int_equality():
    rep = Report("t")
    rep.check("mixed", Q(312), 312)
    assert rep.steps[-1].verdict == PASS


def test_json_round_trip_stable():
    rep = Report("t", assumptions=["x"])
    rep.check("a", Q(1, 3), Q(1, 3))
    first = rep.to_json()
    assert json.loads(first)["verdict"] == "pass"
    assert rep.to_json() == first


def test_extend_merges_assumptions():
    a = Report("a", assumptions=["one"])
    b = Report("b", assumptions=["one", "two"])
    a.extend(b)
    assert a.assumptions == ["one", "two"]

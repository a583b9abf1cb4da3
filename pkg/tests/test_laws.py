import pytest

from freeccc import GenConfig, Report, law_suite, laws, type_of
from freeccc.laws import law_names, with_point
from freeccc.syntax import Bang, Comp, Const, Id, Pair, T

SMALL = GenConfig(max_depth=3, case_count=12, seed=7)


@pytest.fixture(scope="module")
def small_report(sig):
    return law_suite(sig, SMALL)


def test_every_law_runs_and_passes(small_report):
    assert [r.name for r in small_report.results] == law_names()
    assert all(r.cases == SMALL.case_count for r in small_report.results)
    assert small_report.passed, small_report.to_text()


def test_groups_cover_the_theory(small_report):
    groups = {r.group for r in small_report.results}
    assert groups == {"equality", "bijection", "adjunction", "composite", "universal"}


def test_report_text_round_trip(small_report):
    text = small_report.to_text()
    again = Report.from_text(text)
    assert again.to_text() == text
    assert again.seed == 7 and again.case_count == 12


def test_deterministic(sig):
    only = {"abstraction_respects_equality", "right_beta"}
    a = law_suite(sig, SMALL, only=only).to_text()
    b = law_suite(sig, SMALL, only=only).to_text()
    assert a == b


def test_point_added_only_when_needed(sig):
    pointed, name = with_point(sig)
    assert name == "pt" and pointed.arrows[name].source == T
    assert with_point(pointed) == (pointed, None)


def test_detects_a_wrong_application(sig, monkeypatch):
    # applying to some other point of D instead of x is well typed but breaks the abstract-then-apply round trip
    pointed, name = with_point(sig)

    def wrong(f, s):
        a = type_of(f, s).source.right
        return Comp(f, Pair(Comp(Const(name), Bang(a)), Id(a)))

    monkeypatch.setattr(laws, "gamma_prime", wrong)
    report = law_suite(pointed, GenConfig(max_depth=3, case_count=30, seed=1), only={"apply_after_abstract"})
    assert report["apply_after_abstract"].failures > 0
    assert report["apply_after_abstract"].counterexamples

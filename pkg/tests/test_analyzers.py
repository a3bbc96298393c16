import pytest
from rich.console import Console

from dsl_algebra.analyzers.component_analyzer import component, compute_component
from dsl_algebra.analyzers.exactness_analyzer import exactness_dataframe
from dsl_algebra.analyzers.report_builder import print_report, report_to_dataframe, summary_dataframe
from dsl_algebra.analyzers.theta_analyzer import ihara_degree_pairs, theta_suite
from dsl_algebra.analyzers.unified_analyzer import SUITE_RUNNERS, aggregate, run_suite, unified_verification
from dsl_algebra.models.report_models import VerificationReport


@pytest.mark.parametrize("name", sorted(SUITE_RUNNERS))
def test_suite_passes(name, settings):
    report = run_suite(name, settings)
    assert report.suite == name
    assert report.entries
    assert report.passed, [entry.name for entry in report.failures()]


def test_ihara_degree_pairs_are_ordered():
    assert ihara_degree_pairs(3) == []
    assert ihara_degree_pairs(6) == [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)]


def test_theta_suite_checks_ihara_compatibility(settings, cache):
    report = theta_suite(6, settings, cache)
    names = [entry.name for entry in report.entries]
    assert "lie_theta respects the Ihara bracket (3,3)" in names
    assert "Θ(g⊛h) = Θ(g)⊛Θ(h)" in names
    assert report.passed, [entry.name for entry in report.failures()]


def test_unknown_suite(settings):
    with pytest.raises(ValueError):
        run_suite("nope", settings)


@pytest.mark.parametrize("name,n,dim,ambient", [
    ("dmr0", 3, 1, 2),
    ("dmr0", 4, 0, 3),
    ("ginert", 3, 1, 2),
    ("ds", 3, 1, 2),
    ("ds", 5, 1, 6),
])
def test_compute_component(name, n, dim, ambient, cache):
    result = compute_component(name, n, cache)
    assert (result["dim"], result["ambient_dim"]) == (dim, ambient)
    assert len(result["lyndon_words"]) == ambient
    assert len(result["basis"]) == dim


def test_component_uses_cache(cache):
    first = component("dmr0", 3, cache)
    assert component("dmr0", 3, cache) == first
    assert (cache.hits, cache.misses) == (1, 1)
    with pytest.raises(ValueError):
        component("dmr0", 1, cache)
    with pytest.raises(ValueError):
        component("zeta", 3, cache)


def test_aggregate_prefixes_names(settings):
    first = VerificationReport(suite="push", max_degree=4, seed=1)
    first.add("a", True)
    second = VerificationReport(suite="kv", max_degree=4, seed=1, notes=["n"])
    second.add("b", False, degree=3, expected=1, actual=0)
    combined = aggregate([first, second], settings)
    assert [e.name for e in combined.entries] == ["push: a", "kv: b"]
    assert combined.notes == ["kv: n"]
    assert not combined.passed
    assert combined.model_dump()["passed"] is False


def test_unified_verification_single(settings):
    report, reports = unified_verification("exactness", settings)
    assert reports == [report]
    assert report.passed


def test_dataframes(capsys):
    report = VerificationReport(suite="push", max_degree=3, seed=1, notes=["checked"])
    report.add("dim dmr0", True, degree=3, expected=1, actual=1)
    df = report_to_dataframe(report)
    assert list(df.columns) == ["Check", "Degree", "Expected", "Actual", "Pass"]
    assert df.iloc[0]["Pass"] == "yes"
    summary = summary_dataframe([report])
    assert summary.iloc[0]["Checks"] == 1
    assert summary.iloc[0]["Failed"] == 0
    print_report(report, console=Console(width=120))
    out = capsys.readouterr().out
    assert "dim dmr0" in out
    assert "checked" in out


def test_exactness_dataframe():
    df = exactness_dataframe(2)
    assert len(df) == 6
    assert df["exact"].all()

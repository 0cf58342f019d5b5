import pytest

from qpa import verify


@pytest.mark.parametrize(
    "name,kwargs",
    [
        ("normalization", dict(max_n=5, max_d=3)),
        ("f-symbols", dict(max_n=5)),
        ("majorization", dict(max_n=5)),
        ("monotonicity", dict(cases=150)),
        ("log-convexity", dict(cases=80)),
        ("splitting", dict(cases=60)),
        ("occupancy-monotonicity", dict(max_n=4)),
        ("concentration", dict(samples=2000, n=100)),
        ("optimality", dict(max_n=8, depolarizing_max_n=4)),
        ("oracle-consistency", dict(schur_cases=25)),
    ],
)
def test_suite_passes(name, kwargs):
    verdict = verify.run_suite(name, **kwargs)
    assert verdict.passed, verdict.counterexample
    assert verdict.cases > 0
    assert verdict.violations == 0
    assert verdict.counterexample is None


def test_randomized_suites_are_seed_deterministic():
    a = verify.run_suite("monotonicity", cases=50, seed=5)
    b = verify.run_suite("monotonicity", cases=50, seed=5)
    assert a.to_json_dict() == b.to_json_dict()
    assert a.seed == 5


def test_unknown_suite_rejected():
    with pytest.raises(KeyError):
        verify.run_suite("no-such-suite")


def test_verdict_serializes():
    verdict = verify.run_suite("normalization", max_n=3, max_d=2)
    payload = verdict.to_json_dict()
    assert payload["suite"] == "normalization"
    assert payload["passed"] is True
    assert "params" in payload

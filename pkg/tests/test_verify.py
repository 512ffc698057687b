import pytest

from nglab.enumeration import enumerate_graphs
from nglab.generators import cycle
from nglab.recognition import recognize_ng
from nglab.verify import (
    VerificationReport, check_ngd_decision, check_recognizer_batch, recognizer_sample_keys, run_verification,
)


def test_report_bookkeeping():
    rep = VerificationReport()
    rep.record("s", True)
    rep.record("s", False, cycle(5), "claim")
    assert not rep.ok and rep.failures == 1
    assert rep.counterexamples == [{"suite": "s", "claim": "claim", "graph6": "Dhc"}]
    assert rep.summary_lines()[0].startswith("FAIL s: 1/2")
    assert rep.to_dict()["suites"]["s"] == {"checked": 2, "failed": 1, "seconds": 0.0}


@pytest.mark.parametrize("n", [0, 4])
def test_small_runs_pass(n):
    rep = run_verification(n)
    assert rep.ok
    if n == 4:
        assert rep.suites["ngd_decision_matches_oracle"].checked >= 1


def test_mode_limits():
    with pytest.raises(ValueError):
        run_verification(7)
    with pytest.raises(ValueError):
        run_verification(8, recognizer_only=True)


def test_sample_is_reproducible():
    a = recognizer_sample_keys(7, size=50)
    b = recognizer_sample_keys(7, size=50)
    assert (a == b).all() and (a < 1 << 21).all()


def test_ngd_decision_on_eight_vertex_classes():
    rep = VerificationReport()
    for g in enumerate_graphs(8, dedup=True):
        cls = recognize_ng(g)
        if cls.is_ng:
            check_ngd_decision(rep, g, cls)
    assert rep.ok, rep.counterexamples
    assert rep.suites["ngd_decision_matches_oracle"].checked == 266


@pytest.mark.slow
def test_recognizer_sample_at_eight():
    rep = VerificationReport()
    check_recognizer_batch(rep, 8, recognizer_sample_keys(8))
    assert rep.ok, rep.counterexamples
    assert rep.suites["recognizer_matches_oracle"].checked == 100_000

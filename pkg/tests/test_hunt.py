from mptcycles.digraph import build, parse
from mptcycles.hunt import HuntResult, hunt, run_hunt


def test_hunt_k111():
    res = run_hunt([1, 1, 1])
    assert (res.scanned, res.strong, res.certified) == (8, 2, 2)
    assert res.min_count == 3 and res.findings == []
    assert res.ledger().splitlines()[-1] == "end"


def test_hunt_random_deterministic():
    a = run_hunt([1, 2, 2], exhaustive=False, random_n=30, seed=11, keep_certificates=True)
    b = run_hunt([1, 2, 2], exhaustive=False, random_n=30, seed=11, keep_certificates=True)
    assert a.ledger() == b.ledger() and a.certificates == b.certificates
    assert a.strong == a.scanned == 30


def test_hunt_workers_match_serial():
    serial = run_hunt([1, 2, 2])
    parallel = run_hunt([1, 2, 2], workers=2)
    assert serial.ledger() == parallel.ledger()


def test_findings_serialized_in_full(monkeypatch):
    # force low counts to exercise the finding/critical paths
    from mptcycles import hunt as hunt_mod
    from mptcycles.oracle import ConjectureReport

    monkeypatch.setattr(hunt_mod, "conjecture_report", lambda D: ConjectureReport(2, True, False))
    res = run_hunt([1, 1, 1])
    assert [f.count for f in res.findings] == [2, 2]
    assert not res.critical and not res.aborted
    text = res.ledger()
    block = [ln[2:] for ln in text.splitlines() if ln.startswith("| ")]
    assert parse("\n".join(block[:5])).c == 3

    monkeypatch.setattr(hunt_mod, "conjecture_report", lambda D: ConjectureReport(1, False, False))
    res = run_hunt([1, 1, 1])
    assert len(res.critical) == 1 and res.aborted
    assert res.ledger().splitlines()[-1] == "aborted"


def test_nonstrong_only():
    D = build([1, 1, 1], [(0, 1), (0, 2), (1, 2)])
    res = hunt([1, 1, 1], [D], "custom")
    assert (res.scanned, res.strong, res.min_count) == (1, 0, None)
    assert "min_count -" in res.ledger()
    assert isinstance(res, HuntResult)

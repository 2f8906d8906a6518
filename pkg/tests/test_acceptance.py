"""Exit criteria.  Each test records one PASS/FAIL line in the terminal summary."""

import hashlib
import random
import time

import pytest

from mptcycles.constructor import two_pancyclic_arcs
from mptcycles.digraph import cross_pairs, is_strong
from mptcycles.generator import enumerate_orientations, fuzz_instances
from mptcycles.hunt import run_hunt
from mptcycles.oracle import conjecture_report, cycle_lengths_through_arc
from mptcycles.witness import CycleChain, TwoArcCertificate, verify_certificate

from brute import subset_spectrum

FUZZ_SEED = 20240601
FUZZ_COUNT = 1000
FUZZ_SECONDS = 10.0
EXHAUSTIVE_SECONDS = 60.0
SMALL = {"K111": [1, 1, 1], "K1111": [1, 1, 1, 1], "K112": [1, 1, 2], "K122": [1, 2, 2], "K222": [2, 2, 2]}


def run_fuzz():
    out = []
    for _, D in fuzz_instances(FUZZ_COUNT, seed=FUZZ_SEED):
        cert = two_pancyclic_arcs(D)
        out.append((D, cert, verify_certificate(D, cert)))
    return out


@pytest.fixture(scope="module")
def fuzz():
    t0 = time.perf_counter()
    runs = run_fuzz()
    return runs, time.perf_counter() - t0


@pytest.fixture(scope="module")
def exhaustive():
    t0 = time.perf_counter()
    hunts = {name: run_hunt(sizes, keep_certificates=True) for name, sizes in SMALL.items()}
    return hunts, time.perf_counter() - t0


def test_1_fuzzed_certificates(fuzz, acceptance_line):
    runs, elapsed = fuzz
    cs = {D.c for D, _, _ in runs}
    shape_ok = (
        len(runs) == FUZZ_COUNT
        and cs == {3, 4, 5, 6}
        and all(D.n <= 12 and max(D.part_sizes) <= 3 and is_strong(D) for D, _, _ in runs)
    )
    failures = sum(bool(issues) for _, _, issues in runs)
    ok = shape_ok and failures == 0 and elapsed < FUZZ_SECONDS
    acceptance_line(1, "fuzzed two-arc certificates", ok, f"{failures} failures / {len(runs)}, {elapsed:.2f}s")
    assert shape_ok
    assert failures == 0
    assert elapsed < FUZZ_SECONDS


def test_2_oracle_cross_check(fuzz, acceptance_line):
    runs, _ = fuzz
    picked = [(D, cert) for D, cert, _ in runs if D.n <= 10][:200]
    misses = [
        (D, arc)
        for D, cert in picked
        for arc in cert.arcs
        if not set(range(3, D.c + 1)) <= cycle_lengths_through_arc(D, arc, D.c)
    ]
    ok = len(picked) == 200 and not misses
    acceptance_line(2, "oracle contains 3..c for certificate arcs", ok, f"{len(misses)} misses over {len(picked)} instances")
    assert len(picked) == 200
    assert not misses


def _certify_all(sizes):
    all_ = list(enumerate_orientations(sizes))
    strong = [D for D in all_ if is_strong(D)]
    failed = [D for D in strong if verify_certificate(D, two_pancyclic_arcs(D))]
    counts = [conjecture_report(D).count for D in strong]
    return all_, strong, failed, counts


def test_3_exhaustive_k111(acceptance_line):
    all_, strong, failed, counts = _certify_all([1, 1, 1])
    ok = len(all_) == 8 and len(strong) == 2 and not failed and counts == [3, 3]
    acceptance_line(3, "K_{1,1,1} exhaustive", ok, f"{len(all_)} orientations, {len(strong)} strong, counts {counts}")
    assert (len(all_), len(strong)) == (8, 2)
    assert not failed
    assert counts == [3, 3]


def test_4_exhaustive_k1111(acceptance_line):
    all_, strong, failed, counts = _certify_all([1, 1, 1, 1])
    findings = counts.count(2)
    ok = len(all_) == 64 and len(strong) == 24 and not failed and min(counts) >= 2
    detail = f"{len(strong)} strong, min count {min(counts)}, count-2 findings {findings}"
    if min(counts) < 3:
        detail += " (below the tournament expectation of 3)"
    acceptance_line(4, "K_{1,1,1,1} exhaustive", ok, detail)
    assert (len(all_), len(strong)) == (64, 24)
    assert not failed
    assert min(counts) >= 2


def test_5_exhaustive_small_multipartite(exhaustive, acceptance_line):
    hunts, elapsed = exhaustive
    # 2^(cross pairs): 5, 8 and 12 pairs
    totals = {"K112": 32, "K122": 256, "K222": 4096}
    assert all(total == 2 ** len(cross_pairs(SMALL[name])) for name, total in totals.items())
    parts = []
    ok = elapsed < EXHAUSTIVE_SECONDS
    for name, total in totals.items():
        res = hunts[name]
        good = (
            res.scanned == total
            and res.strong + res.nonstrong == total
            and res.certified == res.strong
            and not res.critical
            and res.min_count >= 2
        )
        ok &= good
        parts.append(f"{name}: {res.strong}/{total} strong, min count {res.min_count}")
    acceptance_line(5, "K_{1,1,2}, K_{1,2,2}, K_{2,2,2} exhaustive", ok, "; ".join(parts) + f"; {elapsed:.2f}s")
    for name, total in totals.items():
        res = hunts[name]
        assert res.scanned == total and res.certified == res.strong
        assert not res.critical
        assert res.min_count >= 2
    assert elapsed < EXHAUSTIVE_SECONDS


def reference_valid(D, cert):
    """Direct restatement of the certificate conditions, independent of the verifier."""
    if cert.c != D.c or cert.chain1.arc == cert.chain2.arc:
        return False
    for ch in (cert.chain1, cert.chain2):
        if len(ch.cycles) != cert.c - 2:
            return False
        prev = None
        for j, cy in enumerate(ch.cycles, 3):
            if len(cy) != j or len(set(cy)) != j or not all(0 <= v < D.n for v in cy):
                return False
            steps = set(zip(cy, cy[1:] + cy[:1]))
            if tuple(ch.arc) not in steps or not all(D.dominates(a, b) for a, b in steps):
                return False
            if prev is not None and not prev < set(cy):
                return False
            prev = set(cy)
    return True


def mutations(D, cert, rng):
    """Single-field corruptions of a valid certificate."""
    for k in (1, 2):
        ch = getattr(cert, f"chain{k}")
        other = cert.chain2 if k == 1 else cert.chain1

        def put(new_ch):
            return TwoArcCertificate(new_ch, other, cert.c) if k == 1 else TwoArcCertificate(other, new_ch, cert.c)

        for j, cy in enumerate(ch.cycles):
            # vertex swap: transpose two positions
            a, b = rng.sample(range(len(cy)), 2)
            sw = list(cy)
            sw[a], sw[b] = sw[b], sw[a]
            yield "swap", put(CycleChain(ch.arc, ch.cycles[:j] + (tuple(sw),) + ch.cycles[j + 1 :]))
            # dropped cycle
            yield "drop", put(CycleChain(ch.arc, ch.cycles[:j] + ch.cycles[j + 1 :]))
            # de-nesting: replace a non-arc vertex of C_j by one absent from C_{j+1}
            if j + 1 < len(ch.cycles):
                nxt = set(ch.cycles[j + 1])
                spare = [v for v in range(D.n) if v not in nxt]
                inner = [p for p in range(2, len(cy))]
                if spare and inner:
                    dn = list(cy)
                    dn[rng.choice(inner)] = rng.choice(spare)
                    yield "denest", put(CycleChain(ch.arc, ch.cycles[:j] + (tuple(dn),) + ch.cycles[j + 1 :]))
        # arc field
        alt = rng.choice([a for a in D.arcs() if a != ch.arc])
        yield "arc", put(CycleChain(alt, ch.cycles))
    yield "c", TwoArcCertificate(cert.chain1, cert.chain2, cert.c + 1)


def test_6_verifier_mutations(fuzz, acceptance_line):
    runs, _ = fuzz
    rng = random.Random(6)
    false_accepts = 0
    disagreements = 0
    invalid = 0
    by_kind = {}
    for D, cert, issues in runs[:100]:
        assert not issues and reference_valid(D, cert)
        for kind, mut in mutations(D, cert, rng):
            truth = reference_valid(D, mut)
            accepted = not verify_certificate(D, mut)
            if not truth:
                invalid += 1
                by_kind[kind] = by_kind.get(kind, 0) + 1
                false_accepts += accepted
            disagreements += truth != accepted
    ok = false_accepts == 0 and disagreements == 0 and {"swap", "drop", "denest"} <= set(by_kind)
    acceptance_line(6, "verifier mutation testing", ok, f"{invalid} invalid mutants {by_kind}, {false_accepts} false accepts")
    assert {"swap", "drop", "denest"} <= set(by_kind)
    assert false_accepts == 0
    assert disagreements == 0


def test_7_oracle_self_consistency(acceptance_line):
    compared = 0
    mismatches = []
    for sizes in SMALL.values():
        for D in enumerate_orientations(sizes):
            if D.n > 8:
                continue
            for arc in D.arcs():
                compared += 1
                if cycle_lengths_through_arc(D, arc, D.n) != subset_spectrum(D, arc):
                    mismatches.append((D, arc))
    ok = not mismatches
    acceptance_line(7, "path oracle == subset enumeration", ok, f"{compared} arc spectra, {len(mismatches)} mismatches")
    assert not mismatches


def _digest_all():
    h = hashlib.sha256()
    for _, D in fuzz_instances(FUZZ_COUNT, seed=FUZZ_SEED):
        h.update(two_pancyclic_arcs(D).dumps().encode())
    for sizes in SMALL.values():
        res = run_hunt(sizes, keep_certificates=True)
        h.update(res.ledger().encode())
        for text in res.certificates:
            h.update(text.encode())
    return h.hexdigest()


def test_8_determinism(fuzz, exhaustive, acceptance_line):
    first = hashlib.sha256()
    for _, cert, _ in fuzz[0]:
        first.update(cert.dumps().encode())
    for name in SMALL:
        res = exhaustive[0][name]
        first.update(res.ledger().encode())
        for text in res.certificates:
            first.update(text.encode())
    a, b = first.hexdigest(), _digest_all()
    ok = a == b
    acceptance_line(8, "byte-identical reruns", ok, a[:16])
    assert a == b

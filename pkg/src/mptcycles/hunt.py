"""Scan many instances for arcs on every cycle length 3..c and keep a ledger.

Every strong instance is certified, the certificate verified, and the
full-spectrum arc count taken by brute force.  Counts below 3 are recorded
in full; counts below 2 (or a failed certificate) are flagged CRITICAL
because they would contradict the two-arc guarantee, i.e. indicate a bug.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .constructor import ConstructionError, two_pancyclic_arcs
from .digraph import MultipartiteTournament, is_strong, serialize
from .generator import GenSpec, enumerate_orientations, random_strong_mpt
from .oracle import conjecture_report
from .witness import verify_certificate

LEDGER_HEADER = "# mptcycles hunt ledger v1"


@dataclass
class Finding:
    index: int
    count: int
    critical: bool
    instance: str
    note: str = ""


@dataclass
class HuntResult:
    parts: tuple[int, ...]
    mode: str
    scanned: int = 0
    strong: int = 0
    certified: int = 0
    histogram: Counter = field(default_factory=Counter)
    findings: list[Finding] = field(default_factory=list)
    certificates: list[str] = field(default_factory=list)
    aborted: bool = False

    @property
    def nonstrong(self) -> int:
        return self.scanned - self.strong

    @property
    def min_count(self) -> int | None:
        return min(self.histogram) if self.histogram else None

    @property
    def critical(self) -> list[Finding]:
        return [f for f in self.findings if f.critical]

    def ledger(self) -> str:
        lines = [
            LEDGER_HEADER,
            f"run parts={','.join(map(str, self.parts))} mode={self.mode}",
            f"scanned {self.scanned}",
            f"strong {self.strong}",
            f"nonstrong {self.nonstrong}",
            f"certified {self.certified}",
            f"min_count {'-' if self.min_count is None else self.min_count}",
            "histogram " + " ".join(f"{k}:{v}" for k, v in sorted(self.histogram.items())),
        ]
        for f in self.findings:
            tag = "critical" if f.critical else "finding"
            lines.append(f"{tag} index={f.index} count={f.count}" + (f" note={f.note}" if f.note else ""))
            lines.extend("| " + ln for ln in f.instance.splitlines())
        lines.append("aborted" if self.aborted else "end")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "parts": list(self.parts),
            "mode": self.mode,
            "scanned": self.scanned,
            "strong": self.strong,
            "nonstrong": self.nonstrong,
            "certified": self.certified,
            "min_count": self.min_count,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "findings": [
                {"index": f.index, "count": f.count, "critical": f.critical, "note": f.note}
                for f in self.findings
            ],
            "aborted": self.aborted,
        }


def examine(item: tuple[int, MultipartiteTournament]):
    """Process one instance; returns ``(index, strong, count, cert_text, note)``."""
    index, D = item
    if not is_strong(D):
        return index, False, None, None, ""
    try:
        cert = two_pancyclic_arcs(D)
    except ConstructionError as exc:
        return index, True, None, None, f"construction-failed:{type(exc).__name__}"
    issues = verify_certificate(D, cert)
    count = conjecture_report(D).count
    note = "verify-failed:" + ",".join(i.kind for i in issues) if issues else ""
    return index, True, count, cert.dumps(), note


def random_instances(parts: Sequence[int], n: int, seed: int) -> Iterator[MultipartiteTournament]:
    for i in range(n):
        sub = int(np.random.SeedSequence([seed, i]).generate_state(1, np.uint64)[0])
        yield random_strong_mpt(GenSpec(tuple(parts), sub))


def hunt(
    parts: Sequence[int],
    instances: Iterable[MultipartiteTournament],
    mode: str,
    workers: int = 1,
    keep_certificates: bool = False,
) -> HuntResult:
    res = HuntResult(tuple(parts), mode)
    items = enumerate(instances)
    if workers > 1:
        pool = ProcessPoolExecutor(workers)
        stream = pool.map(examine, items, chunksize=64)
    else:
        pool = None
        stream = map(examine, items)
    try:
        for index, strong, count, cert_text, note in stream:
            res.scanned += 1
            if not strong:
                continue
            res.strong += 1
            if count is not None:
                res.histogram[count] += 1
            if cert_text is not None and not note:
                res.certified += 1
                if keep_certificates:
                    res.certificates.append(cert_text)
            bad = bool(note) or count is None or count < 2
            if bad or count < 3:
                # re-materialize only the flagged instance
                res.findings.append(Finding(index, -1 if count is None else count, bad, "", note))
            if bad:
                res.aborted = True
                break
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return res


def attach_instances(res: HuntResult, instances: Iterable[MultipartiteTournament]) -> None:
    """Fill in serialized instances for findings, by index."""
    wanted = {f.index: f for f in res.findings}
    if not wanted:
        return
    last = max(wanted)
    for i, D in enumerate(instances):
        if i in wanted:
            wanted[i].instance = serialize(D)
        if i >= last:
            break


def run_hunt(
    parts: Sequence[int],
    exhaustive: bool = True,
    random_n: int = 0,
    seed: int = 0,
    workers: int = 1,
    keep_certificates: bool = False,
) -> HuntResult:
    if exhaustive:
        source = lambda: enumerate_orientations(parts)
        mode = "exhaustive"
    else:
        source = lambda: random_instances(parts, random_n, seed)
        mode = f"random n={random_n} seed={seed}"
    res = hunt(parts, source(), mode, workers, keep_certificates)
    attach_instances(res, source())
    return res

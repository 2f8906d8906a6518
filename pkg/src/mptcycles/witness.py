"""Cycle chains, two-arc certificates, and a clause-by-clause verifier.

A chain for an arc ``t->h`` is a list of cycles of lengths 3, 4, ..., L, each
passing through the arc and each vertex set strictly contained in the next.
Cycles are stored rotated so they start at ``t``.

Verifier functions return a list of :class:`Issue`; an empty list means ok.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .digraph import Arc, MultipartiteTournament

Cycle = tuple[int, ...]


@dataclass(frozen=True)
class Issue:
    kind: str
    length: int | None = None
    detail: str = ""
    sub: tuple[Issue, ...] = ()

    def __str__(self) -> str:
        s = self.kind if self.length is None else f"{self.kind}({self.length})"
        if self.detail:
            s += f": {self.detail}"
        if self.sub:
            s += " [" + "; ".join(map(str, self.sub)) + "]"
        return s

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.length is not None:
            d["length"] = self.length
        if self.detail:
            d["detail"] = self.detail
        if self.sub:
            d["sub"] = [i.to_dict() for i in self.sub]
        return d


def rotate_to(cycle: Sequence[int], start: int) -> Cycle:
    k = list(cycle).index(start)
    return tuple(cycle[k:]) + tuple(cycle[:k])


def reverse_cycle(cycle: Sequence[int]) -> Cycle:
    """Reverse orientation, keeping the arc out of ``cycle[1]`` canonical.

    ``[t, h, x3, .., xj]`` becomes ``[h, t, xj, .., x3]``, i.e. the reversed
    cycle rotated to start at the tail of the reversed chain arc.
    """
    return (cycle[1], cycle[0]) + tuple(reversed(cycle[2:]))


@dataclass(frozen=True)
class CycleChain:
    arc: Arc
    cycles: tuple[Cycle, ...] = field(default_factory=tuple)

    @property
    def length(self) -> int:
        """Length of the longest cycle, or 2 for an empty chain."""
        return 2 + len(self.cycles)

    @property
    def top(self) -> Cycle:
        return self.cycles[-1]

    def cycle(self, j: int) -> Cycle:
        return self.cycles[j - 3]

    def extended(self, cycle: Sequence[int]) -> CycleChain:
        return CycleChain(self.arc, self.cycles + (rotate_to(cycle, self.arc.tail),))

    def trimmed(self, max_len: int) -> CycleChain:
        return CycleChain(self.arc, self.cycles[: max(0, max_len - 2)])

    def reversed(self) -> CycleChain:
        return CycleChain(self.arc.reversed(), tuple(reverse_cycle(cy) for cy in self.cycles))

    @classmethod
    def from_cycles(cls, arc: tuple[int, int], cycles: Sequence[Sequence[int]]) -> CycleChain:
        arc = Arc(*arc)
        return cls(arc, tuple(rotate_to(cy, arc.tail) for cy in cycles))


@dataclass(frozen=True)
class TwoArcCertificate:
    chain1: CycleChain
    chain2: CycleChain
    c: int

    @property
    def arcs(self) -> tuple[Arc, Arc]:
        return (self.chain1.arc, self.chain2.arc)

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "arcs": [list(self.chain1.arc), list(self.chain2.arc)],
            "chains": [[list(cy) for cy in ch.cycles] for ch in (self.chain1, self.chain2)],
        }

    def dumps(self) -> str:
        """Canonical JSON text: one cycle per line, keys in schema order."""
        arcs = ", ".join(json.dumps(list(a)) for a in self.arcs)
        chains = []
        for ch in (self.chain1, self.chain2):
            body = ",\n".join("    " + json.dumps(list(cy)) for cy in ch.cycles)
            chains.append("  [\n" + body + "\n  ]" if body else "  []")
        return (
            "{\n"
            f'"c": {self.c},\n'
            f'"arcs": [{arcs}],\n'
            '"chains": [\n' + ",\n".join(chains) + "\n]\n}\n"
        )

    @classmethod
    def from_dict(cls, d: dict) -> TwoArcCertificate:
        try:
            c = d["c"]
            arcs = d["arcs"]
            chains = d["chains"]
            if len(arcs) != 2 or len(chains) != 2:
                raise ValueError("expected exactly two arcs and two chains")
            ch = [
                CycleChain(Arc(int(a[0]), int(a[1])), tuple(tuple(int(v) for v in cy) for cy in cycles))
                for a, cycles in zip(arcs, chains)
            ]
            return cls(ch[0], ch[1], int(c))
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"malformed certificate: {exc!r}") from None

    @classmethod
    def loads(cls, text: str) -> TwoArcCertificate:
        return cls.from_dict(json.loads(text))


# -- verification ------------------------------------------------------------


def verify_cycle(D: MultipartiteTournament, cycle: Sequence[int]) -> list[Issue]:
    issues = []
    cycle = list(cycle)
    if len(cycle) < 3:
        issues.append(Issue("TooShort", detail=f"{len(cycle)} vertices"))
    bad = [v for v in cycle if not isinstance(v, int) or not 0 <= v < D.n]
    if bad:
        return issues + [Issue("BadVertexId", detail=f"{bad}")]
    seen = set()
    for v in cycle:
        if v in seen:
            issues.append(Issue("DuplicateVertex", detail=str(v)))
        seen.add(v)
    for k, x in enumerate(cycle):
        y = cycle[(k + 1) % len(cycle)]
        if x != y and not D.has_arc(x, y):
            issues.append(Issue("MissingArc", detail=f"{x}->{y}"))
    return issues


def arc_on_cycle(cycle: Sequence[int], arc: tuple[int, int]) -> bool:
    t, h = arc
    m = len(cycle)
    return any(cycle[k] == t and cycle[(k + 1) % m] == h for k in range(m))


def verify_chain(D: MultipartiteTournament, chain: CycleChain, required_max: int) -> list[Issue]:
    """Check lengths 3..required_max of ``chain``; longer cycles are ignored."""
    issues = []
    prev: set[int] | None = None
    for j in range(3, required_max + 1):
        if j - 3 >= len(chain.cycles):
            issues.append(Issue("MissingLength", j))
            prev = None
            continue
        cy = chain.cycles[j - 3]
        sub = verify_cycle(D, cy)
        if sub:
            issues.append(Issue("BadCycle", j, sub=tuple(sub)))
        if len(cy) != j:
            issues.append(Issue("WrongLength", j, detail=f"cycle has {len(cy)} vertices"))
        if not arc_on_cycle(cy, chain.arc):
            issues.append(Issue("ArcNotOnCycle", j, detail=str(chain.arc)))
        vs = set(cy)
        if prev is not None and not (prev < vs):
            issues.append(Issue("NotNested", j))
        prev = vs
    return issues


def verify_certificate(D: MultipartiteTournament, cert: TwoArcCertificate) -> list[Issue]:
    issues = []
    if cert.c != D.c:
        issues.append(Issue("WrongC", detail=f"certificate c={cert.c}, instance c={D.c}"))
    if cert.chain1.arc == cert.chain2.arc:
        issues.append(Issue("SameArc", detail=str(cert.chain1.arc)))
    for k, ch in enumerate((cert.chain1, cert.chain2), 1):
        for i in verify_chain(D, ch, cert.c):
            issues.append(Issue(f"Chain{k}.{i.kind}", i.length, i.detail, i.sub))
        if ch.length > cert.c:
            issues.append(Issue(f"Chain{k}.ExtraLength", ch.length))
    return issues

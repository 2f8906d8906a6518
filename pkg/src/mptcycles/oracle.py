"""Brute-force cycle-length spectra through arcs.

Independent of the constructor: a cycle of length ``l`` through ``t->h`` is a
simple path ``h ~> t`` on ``l`` vertices, found by depth-bounded DFS.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructor import NotStrong, TooFewParts
from .digraph import Arc, MultipartiteTournament, iter_bits, is_strong


class ArcNotPresent(ValueError):
    pass


@dataclass(frozen=True)
class ArcSpectrum:
    arc: Arc
    lengths: frozenset[int]
    witnesses: dict[int, tuple[int, ...]] = field(default_factory=dict, compare=False, repr=False)


def arc_spectrum(D: MultipartiteTournament, arc, max_len: int | None = None, witnesses: bool = False) -> ArcSpectrum:
    t, h = arc
    if not (0 <= t < D.n and 0 <= h < D.n) or not D.has_arc(t, h):
        raise ArcNotPresent(f"{t}->{h} is not an arc of the instance")
    if max_len is None:
        max_len = D.n
    max_len = min(max_len, D.n)
    wanted = set(range(3, max_len + 1))
    found: dict[int, tuple[int, ...]] = {}
    out = D.out_masks
    path = [t, h]

    # visited bitmask; early exit once every wanted length is seen
    def dfs(x: int, visited: int) -> bool:
        k = len(path)
        if k >= max_len:
            return False
        for y in iter_bits(out[x] & ~visited):
            path.append(y)
            if out[y] >> t & 1 and k + 1 >= 3 and (k + 1) not in found:
                found[k + 1] = tuple(path)
                if len(found) == len(wanted):
                    return True
            if dfs(y, visited | 1 << y):
                return True
            path.pop()
        return False

    if wanted:
        dfs(h, (1 << t) | (1 << h))
    lengths = frozenset(found)
    return ArcSpectrum(Arc(t, h), lengths, dict(found) if witnesses else {})


def cycle_lengths_through_arc(D: MultipartiteTournament, arc, max_len: int | None = None) -> set[int]:
    return set(arc_spectrum(D, arc, max_len).lengths)


def full_spectrum_arcs(D: MultipartiteTournament) -> list[Arc]:
    need = set(range(3, D.c + 1))
    return [a for a in D.arcs() if need <= cycle_lengths_through_arc(D, a, D.c)]


@dataclass(frozen=True)
class ConjectureReport:
    count: int
    meets_theorem3: bool
    meets_conjecture1: bool


def conjecture_report(D: MultipartiteTournament) -> ConjectureReport:
    if D.c < 3:
        raise TooFewParts(f"need at least 3 parts, got {D.c}")
    if not is_strong(D):
        raise NotStrong("instance is not strongly connected")
    count = len(full_spectrum_arcs(D))
    return ConjectureReport(count, count >= 2, count >= 3)

"""Build two arcs on nested 3..c cycle chains in a strong c-partite tournament.

The procedure grows two chains level by level.  At level ``m`` each chain's
top cycle ``C_m = u_1 u_2 ... u_m`` (with ``u_1 u_2`` the chain arc) is
extended by one of:

* insertion: an outside vertex ``w`` with ``u- -> w -> u+`` for a consecutive
  pair other than ``(u_1, u_2)`` is spliced in;
* switch rebuild: the only such pair for ``w`` is ``(u_1, u_2)``, and two new
  arcs are certified from scratch;
* escape-path rebuild: every outside vertex dominates, or is dominated by,
  the whole cycle, and a shortest path back to the cycle yields two new arcs.

Scan orders are fixed so the output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import (
    Arc,
    MultipartiteTournament,
    iter_bits,
    is_strong,
    outside_part_vertices,
    reverse,
)
from .witness import Cycle, CycleChain, TwoArcCertificate, rotate_to, verify_chain


class ConstructionError(RuntimeError):
    pass


class NotStrong(ConstructionError):
    pass


class TooFewParts(ConstructionError):
    pass


class NoThreeCycle(ConstructionError):
    pass


class Unreachable(ConstructionError):
    pass


class InternalInvariantViolation(ConstructionError):
    pass


@dataclass(frozen=True)
class InsertionPoint:
    w: int
    pos: int  # index of u- on the cycle; u+ is at pos + 1 (mod m)


@dataclass(frozen=True)
class SwitchData:
    w: int
    i: int  # 1-based: w -> u_2..u_i and u_{i+1}..u_m, u_1 -> w
    v: int


@dataclass(frozen=True)
class SPartition:
    S1: frozenset[int]  # dominated by every cycle vertex
    S2: frozenset[int]  # dominate every cycle vertex


@dataclass(frozen=True)
class Mixed:
    candidates: tuple[tuple[int, InsertionPoint | None], ...]


@dataclass(frozen=True)
class EscapePath:
    vertices: tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.vertices)


@dataclass
class ExtensionState:
    chains: list[CycleChain]
    m: int


def _require_arc(D: MultipartiteTournament, x: int, y: int, what: str) -> None:
    if not D.has_arc(x, y):
        raise InternalInvariantViolation(f"expected arc {x}->{y} ({what})")


def find_three_cycle(D: MultipartiteTournament) -> Cycle:
    """First directed triangle ``(a, b, c)`` in lexicographic triple order."""
    n = D.n
    for a in range(n):
        for b in iter_bits(D.out_masks[a]):
            common = D.out_masks[b] & D.in_masks[a]
            if common:
                # smallest c closing the triangle; b ascending keeps lex order
                return (a, b, (common & -common).bit_length() - 1)
    raise NoThreeCycle("no 3-cycle: instance is not strong or has fewer than 3 parts")


def _insertion_point(D: MultipartiteTournament, cycle: Cycle, w: int) -> InsertionPoint | None:
    m = len(cycle)
    for pos in range(1, m):
        if D.has_arc(cycle[pos], w) and D.has_arc(w, cycle[(pos + 1) % m]):
            return InsertionPoint(w, pos)
    return None


def classify_outside(D: MultipartiteTournament, cycle: Sequence[int]) -> Mixed | SPartition:
    """Split the outside set of ``cycle`` into mixed vertices or S1/S2."""
    cycle = tuple(cycle)
    S = sorted(outside_part_vertices(D, cycle))
    cmask = sum(1 << x for x in cycle)
    mixed = []
    S1, S2 = [], []
    for w in S:
        ins = D.in_masks[w] & cmask
        outs = D.out_masks[w] & cmask
        if ins and outs:
            mixed.append((w, _insertion_point(D, cycle, w)))
        elif ins == cmask:
            S1.append(w)
        elif outs == cmask:
            S2.append(w)
        else:
            raise InternalInvariantViolation(f"outside vertex {w} not adjacent to the whole cycle")
    if mixed:
        return Mixed(tuple(mixed))
    return SPartition(frozenset(S1), frozenset(S2))


def try_insertion(D: MultipartiteTournament, chain: CycleChain) -> CycleChain | None:
    cycle = chain.top
    for w in sorted(outside_part_vertices(D, cycle)):
        pt = _insertion_point(D, cycle, w)
        if pt is not None:
            new = cycle[: pt.pos + 1] + (w,) + cycle[pt.pos + 1 :]
            return chain.extended(new)
    return None


def switch_data(D: MultipartiteTournament, chain: CycleChain, w: int) -> SwitchData:
    cycle = chain.top
    m = len(cycle)
    _require_arc(D, cycle[0], w, "u_1 -> w")
    _require_arc(D, w, cycle[1], "w -> u_2")
    i = 2
    while i < m and D.has_arc(w, cycle[i]):
        i += 1
    # cycle[1..i-1] are u_2..u_i; the rest must dominate w
    for p in range(i, m):
        _require_arc(D, cycle[p], w, f"u_{p + 1} -> w after switch index {i}")
    v = chain.cycle(3)[2]
    return SwitchData(w, i, v)


def rebuild_case1b(D: MultipartiteTournament, chain: CycleChain, w: int) -> tuple[CycleChain, CycleChain]:
    """Two fresh chains of length m+1 when ``w``'s only switch is at the chain arc."""
    cycle = chain.top
    m = len(cycle)
    sd = switch_data(D, chain, w)
    i, v = sd.i, sd.v
    u = lambda k: cycle[(k - 1) % m]  # 1-based, cyclic

    # f1 = u_i u_{i+1}
    f1 = CycleChain(Arc(u(i), u(i + 1)))
    for j in range(1, m + 2 - i):
        f1 = f1.extended([u(i + t) for t in range(j + 1)] + [w])
    for k in range(1, i - 1):
        f1 = f1.extended([u(t) for t in range(i - k, m + 1)] + [u(1), w])

    u1, u2 = cycle[0], cycle[1]
    if D.has_arc(w, v):
        f2 = CycleChain(Arc(u1, w)).extended([u1, w, v])
    elif D.has_arc(v, w):
        f2 = CycleChain(Arc(w, u2)).extended([w, u2, v])
    else:
        raise InternalInvariantViolation(f"w={w} and v={v} are in the same part")
    f2 = f2.extended([u1, w, u2, v])
    for j in range(4, m + 1):
        cj = chain.cycle(j)
        f2 = f2.extended((u1, w) + cj[1:])
    return f1, f2


def shortest_escape_path(D: MultipartiteTournament, cycle: Sequence[int], S1) -> EscapePath:
    """Lexicographically least shortest path from ``S1`` to ``cycle``."""
    cycle = tuple(cycle)
    if not S1:
        raise ValueError("S1 is empty")
    target = sum(1 << x for x in cycle)
    # distance to the cycle, by backward BFS
    dist = {x: 0 for x in cycle}
    frontier = list(cycle)
    seen = target
    while frontier:
        nxt = 0
        for x in frontier:
            nxt |= D.in_masks[x]
        nxt &= ~seen
        seen |= nxt
        d = dist[frontier[0]] + 1
        frontier = list(iter_bits(nxt))
        for x in frontier:
            dist[x] = d
    reachable = [s for s in S1 if s in dist]
    if not reachable:
        raise Unreachable("no path from S1 back to the cycle")
    best = min(dist[s] for s in reachable)
    path = [min(s for s in reachable if dist[s] == best)]
    while dist[path[-1]] > 0:
        d = dist[path[-1]]
        path.append(next(y for y in iter_bits(D.out_masks[path[-1]]) if dist.get(y) == d - 1))
    return EscapePath(tuple(path))


def rebuild_case2(
    D: MultipartiteTournament, chain: CycleChain, part: SPartition
) -> tuple[CycleChain, CycleChain]:
    """Two fresh chains of length >= m+1 when the outside set is S1/S2-split."""
    if not part.S1:
        if not part.S2:
            raise InternalInvariantViolation("outside set is empty; cycle already spans all parts")
        dual = SPartition(part.S2, part.S1)
        g1, g2 = rebuild_case2(reverse(D), chain.reversed(), dual)
        return g1.reversed(), g2.reversed()

    cycle = chain.top
    m = len(cycle)
    path = shortest_escape_path(D, cycle, part.S1).vertices
    q = len(path)
    if q < 3:
        raise InternalInvariantViolation(f"escape path {path} shorter than 3")
    pos = {x: k for k, x in enumerate(cycle)}

    if path[-2] in part.S2:
        a, b = path[-3], path[-2]
        uz = min((x for x in cycle if not D.same_part(x, a)), default=None)
        if uz is None:
            raise InternalInvariantViolation(f"no cycle vertex outside the part of {a}")
        _require_arc(D, uz, a, "u_z -> y_{q-2}")
        z = pos[uz]
        wj = lambda j: cycle[(z + j - 1) % m]  # wj(1) = u_z
        f1 = CycleChain(Arc(uz, a))
        # j = m+1 closes straight back to u_z; each smaller j adds one cycle vertex
        for j in range(m + 1, 2, -1):
            f1 = f1.extended([uz, a, b] + [wj(t) for t in range(j, m + 1)])
        f2 = CycleChain(Arc(a, b), tuple(rotate_to(cy, a) for cy in f1.cycles))
        return f1, f2

    y1 = path[0]
    for t in range(2, q):
        _require_arc(D, path[t], y1, f"y_{t + 1} -> y_1")
    f1 = CycleChain(Arc(path[0], path[1]))
    for t in range(3, q + 1):
        f1 = f1.extended(path[:t])
    zq = pos[path[-1]]
    for r in range(1, m):
        f1 = f1.extended(path + tuple(cycle[(zq + s) % m] for s in range(1, r + 1)))
    f2 = CycleChain(Arc(path[1], path[2]), tuple(rotate_to(cy, path[1]) for cy in f1.cycles))
    return f1, f2


def _rebuild(D: MultipartiteTournament, chain: CycleChain) -> tuple[CycleChain, CycleChain]:
    kind = classify_outside(D, chain.top)
    if isinstance(kind, Mixed):
        w, pt = kind.candidates[0]
        if pt is not None:
            raise InternalInvariantViolation(f"insertion available for {w} but not taken")
        return rebuild_case1b(D, chain, w)
    return rebuild_case2(D, chain, kind)


def _check_state(D: MultipartiteTournament, state: ExtensionState) -> None:
    a, b = state.chains
    if a.arc == b.arc:
        raise InternalInvariantViolation(f"both chains use arc {a.arc}")
    for ch in state.chains:
        issues = verify_chain(D, ch, state.m)
        if issues:
            raise InternalInvariantViolation(f"chain {ch.arc} at m={state.m}: " + "; ".join(map(str, issues)))


def two_pancyclic_arcs(D: MultipartiteTournament, check: bool = False) -> TwoArcCertificate:
    """Certificate of two arcs each on nested cycles of every length 3..c.

    With ``check=True`` both chains are re-verified after every level.
    """
    if D.c < 3:
        raise TooFewParts(f"need at least 3 parts, got {D.c}")
    if not is_strong(D):
        raise NotStrong("instance is not strongly connected")

    u1, u2, u3 = find_three_cycle(D)
    base = (u1, u2, u3)
    state = ExtensionState(
        [CycleChain(Arc(u1, u2)).extended(base), CycleChain(Arc(u2, u3)).extended(base)], 3
    )
    while state.m < D.c:
        for k in (0, 1):
            ch = state.chains[k]
            if ch.length > state.m:
                continue
            ext = try_insertion(D, ch)
            if ext is not None:
                state.chains[k] = ext
                continue
            state.chains = list(_rebuild(D, ch))
            break
        state.m = min(ch.length for ch in state.chains)
        if check:
            _check_state(D, state)

    c1, c2 = (ch.trimmed(D.c) for ch in state.chains)
    return TwoArcCertificate(c1, c2, D.c)

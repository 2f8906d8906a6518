"""Multipartite tournaments: data model, validation, reachability, text format.

Vertices are numbered ``0..n-1`` contiguously part by part, so part 0 owns
``0..s_0-1``, part 1 the next ``s_1`` ids, and so on.  Out-neighbourhoods are
stored as integer bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence


class InstanceError(ValueError):
    """Base class for malformed instances."""


class IntraPartArc(InstanceError):
    pass


class DoubleArc(InstanceError):
    pass


class MissingPair(InstanceError):
    pass


class BadVertexId(InstanceError):
    pass


class InstanceSyntaxError(InstanceError):
    pass


class InvalidCycle(ValueError):
    pass


class Arc(NamedTuple):
    tail: int
    head: int

    def reversed(self) -> Arc:
        return Arc(self.head, self.tail)

    def __str__(self) -> str:
        return f"{self.tail}->{self.head}"


def _part_index(part_sizes: Sequence[int]) -> tuple[int, ...]:
    out = []
    for p, s in enumerate(part_sizes):
        out.extend([p] * s)
    return tuple(out)


@dataclass(frozen=True)
class MultipartiteTournament:
    """An orientation of a complete multipartite graph.

    Use :func:`build` (or :func:`parse`) rather than the constructor; they
    validate the orientation.
    """

    part_sizes: tuple[int, ...]
    out_masks: tuple[int, ...]
    part_of: tuple[int, ...] = field(init=False, repr=False, compare=False)
    in_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "part_of", _part_index(self.part_sizes))
        n = len(self.out_masks)
        ins = [0] * n
        for x, mask in enumerate(self.out_masks):
            for y in iter_bits(mask):
                ins[y] |= 1 << x
        object.__setattr__(self, "in_masks", tuple(ins))

    @property
    def n(self) -> int:
        return len(self.out_masks)

    @property
    def c(self) -> int:
        return len(self.part_sizes)

    def check_vertex(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.n:
            raise BadVertexId(f"vertex {x!r} not in 0..{self.n - 1}")

    def dominates(self, x: int, y: int) -> bool:
        self.check_vertex(x)
        self.check_vertex(y)
        return bool(self.out_masks[x] >> y & 1)

    def has_arc(self, x: int, y: int) -> bool:
        # unchecked variant for hot loops
        return bool(self.out_masks[x] >> y & 1)

    def out_neighbors(self, x: int) -> list[int]:
        return list(iter_bits(self.out_masks[x]))

    def in_neighbors(self, x: int) -> list[int]:
        return list(iter_bits(self.in_masks[x]))

    def arcs(self) -> list[Arc]:
        """All arcs sorted by (tail, head)."""
        return [Arc(x, y) for x in range(self.n) for y in iter_bits(self.out_masks[x])]

    def cross_pairs(self) -> list[tuple[int, int]]:
        return cross_pairs(self.part_sizes)

    def same_part(self, x: int, y: int) -> bool:
        return self.part_of[x] == self.part_of[y]

    def __str__(self) -> str:
        sizes = ",".join(map(str, self.part_sizes))
        return f"MPT(c={self.c}, parts=[{sizes}], n={self.n})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def cross_pairs(part_sizes: Sequence[int]) -> list[tuple[int, int]]:
    """Unordered cross-part pairs ``(x, y)`` with ``x < y``, sorted."""
    part_of = _part_index(part_sizes)
    n = len(part_of)
    return [(x, y) for x in range(n) for y in range(x + 1, n) if part_of[x] != part_of[y]]


def build(part_sizes: Sequence[int], arcs: Iterable[tuple[int, int]]) -> MultipartiteTournament:
    """Validate ``arcs`` against ``part_sizes`` and return the tournament."""
    sizes = tuple(int(s) for s in part_sizes)
    if not sizes:
        raise InstanceError("at least one part is required")
    if any(s < 1 for s in sizes):
        raise InstanceError(f"part sizes must be positive, got {list(sizes)}")
    part_of = _part_index(sizes)
    n = len(part_of)
    out = [0] * n
    for a in arcs:
        x, y = a
        for v in (x, y):
            if not isinstance(v, int) or not 0 <= v < n:
                raise BadVertexId(f"arc {x}->{y}: vertex {v!r} not in 0..{n - 1}")
        if part_of[x] == part_of[y]:
            raise IntraPartArc(f"arc {x}->{y} joins two vertices of part {part_of[x]}")
        if out[x] >> y & 1 or out[y] >> x & 1:
            raise DoubleArc(f"pair {{{x},{y}}} oriented more than once")
        out[x] |= 1 << y
    for x, y in cross_pairs(sizes):
        if not (out[x] >> y & 1 or out[y] >> x & 1):
            raise MissingPair(f"pair {{{x},{y}}} is not oriented")
    return MultipartiteTournament(sizes, tuple(out))


def _reach(masks: Sequence[int], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= masks[x]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strong(D: MultipartiteTournament) -> bool:
    if D.n <= 1:
        return True
    full = (1 << D.n) - 1
    return _reach(D.out_masks, 0) == full and _reach(D.in_masks, 0) == full


def reverse(D: MultipartiteTournament) -> MultipartiteTournament:
    return MultipartiteTournament(D.part_sizes, D.in_masks)


def outside_part_vertices(D: MultipartiteTournament, cycle: Sequence[int]) -> set[int]:
    """Vertices whose part has no representative on ``cycle``."""
    from .witness import verify_cycle

    issues = verify_cycle(D, cycle)
    if issues:
        raise InvalidCycle("; ".join(str(i) for i in issues))
    used = {D.part_of[x] for x in cycle}
    return {x for x in range(D.n) if D.part_of[x] not in used}


# -- text format -------------------------------------------------------------


def serialize(D: MultipartiteTournament) -> str:
    lines = [f"mpt {D.c}", "parts " + " ".join(map(str, D.part_sizes))]
    lines.extend(f"arc {a.tail} {a.head}" for a in D.arcs())
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InstanceSyntaxError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse(text: str) -> MultipartiteTournament:
    header: int | None = None
    sizes: list[int] | None = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if header is None:
            if key != "mpt" or len(rest) != 1:
                raise InstanceSyntaxError(f"line {lineno}: expected 'mpt <c>'")
            header = _ints(rest, lineno)[0]
        elif sizes is None:
            if key != "parts":
                raise InstanceSyntaxError(f"line {lineno}: expected 'parts <s_0> ... <s_c-1>'")
            sizes = _ints(rest, lineno)
            if len(sizes) != header:
                raise InstanceSyntaxError(f"line {lineno}: 'mpt {header}' but {len(sizes)} part sizes given")
        elif key == "arc":
            if len(rest) != 2:
                raise InstanceSyntaxError(f"line {lineno}: expected 'arc <tail> <head>'")
            t, h = _ints(rest, lineno)
            arcs.append((t, h))
        else:
            raise InstanceSyntaxError(f"line {lineno}: unknown directive {key!r}")
    if sizes is None:
        raise InstanceSyntaxError("missing 'mpt' or 'parts' line")
    return build(sizes, arcs)


def load(path) -> MultipartiteTournament:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())

"""Combinatorial Legendrian front diagrams.

A front is stored as an ordered word of Morse events, read left to right
across the plane of the diagram:

* ``L i`` -- a left cusp inserting two new strands at heights ``i`` and
  ``i + 1`` (0 = topmost strand),
* ``R i`` -- a right cusp merging the strands at heights ``i`` and ``i + 1``,
* ``X i`` -- a transverse crossing swapping the strands at ``i`` and ``i + 1``.

Any word that keeps the strand count non-negative and ends with zero strands
describes a geometrically realizable front, so no slope or coordinate data
is stored. All arithmetic is exact integer arithmetic.

Orientation convention: each component is canonically oriented so that the
upper strand of its first-created left cusp points rightward; components
listed in ``orientation_flips`` are reversed. Orientation reverses across
every cusp and is preserved through crossings.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

from .errors import (
    ComponentOutOfRange,
    EmptyDiagram,
    InvalidInsertionPoint,
    InvalidParams,
    InvalidPosition,
    MalformedToken,
    SameComponent,
    OddInterCrossingCount,
    UnbalancedDiagram,
)

LEFT_CUSP = "L"
RIGHT_CUSP = "R"
CROSSING = "X"

UP = "up"
DOWN = "down"


@dataclass(frozen=True)
class FrontEvent:
    kind: str  # one of LEFT_CUSP, RIGHT_CUSP, CROSSING
    position: int

    def __post_init__(self):
        if self.kind not in (LEFT_CUSP, RIGHT_CUSP, CROSSING):
            raise MalformedToken(f"unknown event kind {self.kind!r}")
        if self.position < 0:
            raise InvalidPosition(f"negative position {self.position}")


@dataclass(frozen=True)
class LegendrianInvariants:
    tb: int
    r: int


@dataclass(frozen=True)
class StabilizationSchedule:
    """Counts of upward and downward zig-zags.

    Effect on invariants: tb -> tb - up - down, r -> r - up + down.
    """

    up: int
    down: int

    def __post_init__(self):
        if self.up < 0 or self.down < 0:
            raise InvalidParams("schedule counts must be non-negative")


@dataclass(frozen=True)
class TorusKnotParams:
    p: int
    q: int

    def __post_init__(self):
        if not (2 <= self.p < self.q):
            raise InvalidParams(f"need 2 <= p < q, got ({self.p}, {self.q})")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidParams(f"({self.p}, {self.q}) not coprime")

    @property
    def l(self) -> int:
        # (p-1)(q-1) is even because p, q are coprime.
        return (self.p - 1) * (self.q - 1) // 2

    @property
    def genus(self) -> int:
        return self.l


@dataclass(frozen=True)
class FrontDiagram:
    events: tuple[FrontEvent, ...]
    orientation_flips: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        object.__setattr__(
            self, "orientation_flips", frozenset(self.orientation_flips)
        )
        if not self.events:
            raise EmptyDiagram("front has no events")
        strands = 0
        lefts = rights = 0
        for k, ev in enumerate(self.events):
            if ev.kind == LEFT_CUSP:
                if ev.position > strands:
                    raise InvalidPosition(
                        f"event {k}: L {ev.position} with {strands} strands"
                    )
                strands += 2
                lefts += 1
            else:
                if ev.position > strands - 2:
                    raise InvalidPosition(
                        f"event {k}: {ev.kind} {ev.position} with {strands} strands"
                    )
                if ev.kind == RIGHT_CUSP:
                    strands -= 2
                    rights += 1
        if strands != 0:
            raise UnbalancedDiagram(f"{strands} strands left open")
        assert lefts == rights
        ncomp = len(_trace(self).components)
        for c in self.orientation_flips:
            if not 0 <= c < ncomp:
                raise ComponentOutOfRange(
                    f"flip {c} with {ncomp} components"
                )


@dataclass(frozen=True)
class Component:
    """One link component: its index, creating event and strand segments."""

    index: int
    created_at: int  # index of the left-cusp event that first creates it
    segments: tuple[tuple[int, int], ...]  # (gap, slot) pairs, sorted


class _Trace:
    """Traversal data for one diagram: segments, components, orientations.

    A *segment* is a horizontal piece of strand between two consecutive
    events, identified by (gap, slot): gap g lies between events g-1 and g,
    slot 0 is the topmost strand in that gap. Every segment has exactly two
    incident connections (its two ends), so segments decompose into cycles,
    one per link component.
    """

    def __init__(self, diagram: FrontDiagram):
        events = diagram.events
        adj: dict[tuple[int, int], list[tuple[tuple[int, int], bool]]] = {}

        def link(a, b, is_cusp):
            adj.setdefault(a, []).append((b, is_cusp))
            adj.setdefault(b, []).append((a, is_cusp))

        # cusp/crossing records as (event_index, upper_segment, lower_segment)
        self.left_cusps: list[tuple[int, tuple[int, int], tuple[int, int]]] = []
        self.right_cusps: list[tuple[int, tuple[int, int], tuple[int, int]]] = []
        self.crossings: list[tuple[int, tuple[int, int], tuple[int, int]]] = []

        strands = 0
        for g, ev in enumerate(events):
            i = ev.position
            if ev.kind == LEFT_CUSP:
                for j in range(strands):
                    link((g, j), (g + 1, j if j < i else j + 2), False)
                link((g + 1, i), (g + 1, i + 1), True)
                self.left_cusps.append((g, (g + 1, i), (g + 1, i + 1)))
                strands += 2
            elif ev.kind == RIGHT_CUSP:
                link((g, i), (g, i + 1), True)
                self.right_cusps.append((g, (g, i), (g, i + 1)))
                for j in range(strands):
                    if j == i or j == i + 1:
                        continue
                    link((g, j), (g + 1, j if j < i else j - 2), False)
                strands -= 2
            else:
                self.crossings.append((g, (g, i), (g, i + 1)))
                for j in range(strands):
                    tgt = i + 1 if j == i else i if j == i + 1 else j
                    link((g, j), (g + 1, tgt), False)

        # Discover components in order of their creating left cusp; orient by
        # pointing the upper branch of that cusp rightward, then propagate
        # (direction flips across cusps, survives crossings and gaps).
        self.comp_of: dict[tuple[int, int], int] = {}
        self.direction: dict[tuple[int, int], int] = {}
        self.components: list[Component] = []
        for event_index, upper, _lower in self.left_cusps:
            if upper in self.comp_of:
                continue
            idx = len(self.components)
            stack = [upper]
            self.comp_of[upper] = idx
            self.direction[upper] = 1
            segs = [upper]
            while stack:
                u = stack.pop()
                for v, is_cusp in adj[u]:
                    d = -self.direction[u] if is_cusp else self.direction[u]
                    if v in self.comp_of:
                        assert self.comp_of[v] == idx
                        assert self.direction[v] == d, "front does not close up"
                        continue
                    self.comp_of[v] = idx
                    self.direction[v] = d
                    segs.append(v)
                    stack.append(v)
            self.components.append(
                Component(idx, event_index, tuple(sorted(segs)))
            )
        assert len(self.comp_of) == len(adj), "untraced strands"

        for c in diagram.orientation_flips:
            if c < len(self.components):
                for seg in self.components[c].segments:
                    self.direction[seg] = -self.direction[seg]


@functools.lru_cache(maxsize=256)
def _trace(diagram: FrontDiagram) -> _Trace:
    return _Trace(diagram)


def components(diagram: FrontDiagram) -> list[Component]:
    """Components in canonical order (earliest creating event first)."""
    return list(_trace(diagram).components)


def _check_component(diagram: FrontDiagram, c: int) -> _Trace:
    tr = _trace(diagram)
    if not 0 <= c < len(tr.components):
        raise ComponentOutOfRange(
            f"component {c} with {len(tr.components)} components"
        )
    return tr


def invariants(diagram: FrontDiagram, c: int) -> LegendrianInvariants:
    """Thurston-Bennequin invariant and rotation number of component ``c``.

    tb is the signed count of self-crossings minus the count of left cusps;
    the sign of a crossing is the product of the two strands' horizontal
    orientation signs (+1 rightward). r is half the signed cusp count,
    counting a cusp positively when traversed downward.
    """
    tr = _check_component(diagram, c)
    signed_crossings = 0
    for _g, a, b in tr.crossings:
        if tr.comp_of[a] == c and tr.comp_of[b] == c:
            signed_crossings += tr.direction[a] * tr.direction[b]
    left_cusps = sum(1 for _g, u, _lo in tr.left_cusps if tr.comp_of[u] == c)
    # A left cusp is traversed downward iff its upper branch points leftward;
    # a right cusp iff its upper branch points rightward.
    down = up = 0
    for _g, u, _lo in tr.left_cusps:
        if tr.comp_of[u] == c:
            if tr.direction[u] < 0:
                down += 1
            else:
                up += 1
    for _g, u, _lo in tr.right_cusps:
        if tr.comp_of[u] == c:
            if tr.direction[u] > 0:
                down += 1
            else:
                up += 1
    assert (down - up) % 2 == 0
    return LegendrianInvariants(tb=signed_crossings - left_cusps, r=(down - up) // 2)


def linking_number(diagram: FrontDiagram, c1: int, c2: int) -> int:
    """Half the signed count of crossings between two distinct components."""
    if c1 == c2:
        raise SameComponent(f"component {c1} given twice")
    tr = _check_component(diagram, c1)
    _check_component(diagram, c2)
    signed = 0
    for _g, a, b in tr.crossings:
        if {tr.comp_of[a], tr.comp_of[b]} == {c1, c2}:
            signed += tr.direction[a] * tr.direction[b]
    if signed % 2 != 0:
        raise OddInterCrossingCount(
            f"odd inter-component crossing count {signed}"
        )
    return signed // 2


def stabilize_invariants(
    inv: LegendrianInvariants, schedule: StabilizationSchedule
) -> LegendrianInvariants:
    """Apply a zig-zag schedule at the invariant level."""
    return LegendrianInvariants(
        tb=inv.tb - schedule.up - schedule.down,
        r=inv.r - schedule.up + schedule.down,
    )


def reachable(
    source: LegendrianInvariants, target: LegendrianInvariants
) -> StabilizationSchedule | None:
    """Zig-zag schedule from ``source`` to ``target``, or None.

    tb can only decrease; each zig-zag moves r by exactly 1, so the target
    is reachable iff the tb-drop dominates |Delta r| with matching parity.
    """
    dtb = source.tb - target.tb
    dr = target.r - source.r
    if (dtb - dr) % 2 != 0:
        return None
    up = (dtb - dr) // 2
    down = (dtb + dr) // 2
    if up < 0 or down < 0:
        return None
    return StabilizationSchedule(up=up, down=down)


def stabilize_diagram(
    diagram: FrontDiagram, c: int, direction: str, at: int
) -> FrontDiagram:
    """Insert one zig-zag on component ``c``.

    ``at`` indexes into the component's strand segments, ordered by
    (gap, slot); the two-event rewrite is inserted at that point. A down
    zig-zag yields tb - 1, r + 1; an up zig-zag yields tb - 1, r - 1.
    """
    if direction not in (UP, DOWN):
        raise InvalidParams(f"direction must be 'up' or 'down', got {direction!r}")
    tr = _check_component(diagram, c)
    segments = tr.components[c].segments
    if not 0 <= at < len(segments):
        raise InvalidInsertionPoint(
            f"insertion point {at} with {len(segments)} segments"
        )
    gap, slot = segments[at]
    rightward = tr.direction[(gap, slot)] > 0
    # On a rightward strand a down zig-zag dips below (left cusp under the
    # strand, right cusp merging into it); on a leftward strand the roles swap.
    if (direction == DOWN) == rightward:
        inserted = (
            FrontEvent(LEFT_CUSP, slot + 1),
            FrontEvent(RIGHT_CUSP, slot),
        )
    else:
        inserted = (
            FrontEvent(LEFT_CUSP, slot),
            FrontEvent(RIGHT_CUSP, slot + 1),
        )
    events = diagram.events[:gap] + inserted + diagram.events[gap:]
    return FrontDiagram(events, diagram.orientation_flips)


def torus_knot_front(params: TorusKnotParams) -> FrontDiagram:
    """Standard front of the right-handed (p, q) torus knot.

    p left cusps, then q blocks of the positive braid word, then p right
    cusps: exactly (p-1)q crossings, all positive, with tb = (p-1)q - p
    and r = 0.
    """
    p, q = params.p, params.q
    events = [FrontEvent(LEFT_CUSP, i) for i in range(p)]
    for _ in range(q):
        events.extend(FrontEvent(CROSSING, i) for i in range(p - 1))
    events.extend(FrontEvent(RIGHT_CUSP, i) for i in range(p - 1, -1, -1))
    return FrontDiagram(tuple(events))


def parse_front(text: str) -> FrontDiagram:
    """Parse the front file format.

    One event per line (``L i``, ``R i`` or ``X i``), optionally followed by
    ``flip k`` lines; ``#`` starts a comment, blank lines are ignored.
    """
    events: list[FrontEvent] = []
    flips: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedToken(f"line {lineno}: {raw.strip()!r}")
        tag, arg = parts
        if not arg.lstrip("-").isdigit():
            raise MalformedToken(f"line {lineno}: bad integer {arg!r}")
        value = int(arg)
        if tag == "flip":
            if value < 0:
                raise MalformedToken(f"line {lineno}: negative flip index")
            flips.add(value)
        elif tag in (LEFT_CUSP, RIGHT_CUSP, CROSSING):
            if flips:
                raise MalformedToken(
                    f"line {lineno}: event after flip lines"
                )
            if value < 0:
                raise InvalidPosition(f"line {lineno}: negative position")
            events.append(FrontEvent(tag, value))
        else:
            raise MalformedToken(f"line {lineno}: unknown tag {tag!r}")
    if not events:
        raise EmptyDiagram("no events in front file")
    return FrontDiagram(tuple(events), frozenset(flips))


def serialize_front(diagram: FrontDiagram) -> str:
    """Inverse of parse_front, up to comments and whitespace."""
    lines = [f"{ev.kind} {ev.position}" for ev in diagram.events]
    lines.extend(f"flip {c}" for c in sorted(diagram.orientation_flips))
    return "\n".join(lines) + "\n"

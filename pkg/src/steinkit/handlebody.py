"""Stein Kirby data: linking forms of Stein handle decompositions.

A handlebody is recorded as a 1-handle count plus one record per 2-handle
(tb, r, framing) together with the symmetric linking matrix. The Stein
condition pins framing = tb - 1 on every 2-handle; with no 1-handles the
rotation numbers form a characteristic vector of the linking form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import fronts, linalg
from .brieskorn import BrieskornTriple, OrientedBrieskorn
from .errors import (
    AsymmetricLinking,
    ExcludedCase,
    FramingMismatch,
    InvalidParams,
    MalformedToken,
    ParityViolation,
    ScheduleInfeasible,
)


@dataclass(frozen=True)
class TwoHandle:
    tb: int
    r: int
    framing: int


@dataclass(frozen=True)
class SteinKirbyData:
    one_handles: int
    two_handles: tuple[TwoHandle, ...]
    linking: tuple[tuple[int, ...], ...]  # symmetric, diagonal = framings

    def __post_init__(self):
        object.__setattr__(self, "two_handles", tuple(self.two_handles))
        object.__setattr__(
            self, "linking", tuple(tuple(row) for row in self.linking)
        )
        if self.one_handles < 0:
            raise InvalidParams("negative 1-handle count")
        k = len(self.two_handles)
        if len(self.linking) != k or any(len(row) != k for row in self.linking):
            raise AsymmetricLinking(
                f"linking matrix shape does not match {k} 2-handles"
            )
        for i, h in enumerate(self.two_handles):
            if h.framing != h.tb - 1:
                raise FramingMismatch(
                    f"handle {i}: framing {h.framing} != tb - 1 = {h.tb - 1}"
                )
            if self.linking[i][i] != h.framing:
                raise AsymmetricLinking(
                    f"diagonal entry {self.linking[i][i]} != framing {h.framing}"
                )
            for j in range(i):
                if self.linking[i][j] != self.linking[j][i]:
                    raise AsymmetricLinking(f"entries ({i},{j}) and ({j},{i}) differ")
            if self.one_handles == 0 and (h.r - self.linking[i][i]) % 2 != 0:
                raise ParityViolation(
                    f"handle {i}: r = {h.r} and framing {h.framing} differ in parity"
                )


@dataclass(frozen=True)
class FormAnalysis:
    chi: int
    b2: int
    det: int
    signature: int
    c1_squared: Fraction | None  # present iff no 1-handles and det != 0
    theta_boundary: int | None  # present iff no 1-handles and |det| = 1


@dataclass(frozen=True)
class NucleusData:
    kirby: SteinKirbyData
    l: int
    fiber_genus: int
    singular_fibers: int
    c1_pd: tuple[int, int]  # coefficients on the section and fiber classes
    c1_squared: int
    boundary: OrientedBrieskorn


def from_front(diagram: fronts.FrontDiagram) -> SteinKirbyData:
    """Kirby data of the Stein handlebody on a front: one 2-handle per
    component with framing tb - 1, linking matrix from the front."""
    comps = fronts.components(diagram)
    handles = []
    for c in comps:
        inv = fronts.invariants(diagram, c.index)
        handles.append(TwoHandle(tb=inv.tb, r=inv.r, framing=inv.tb - 1))
    k = len(comps)
    linking = [[0] * k for _ in range(k)]
    for i in range(k):
        linking[i][i] = handles[i].framing
        for j in range(i + 1, k):
            lk = fronts.linking_number(diagram, i, j)
            linking[i][j] = linking[j][i] = lk
    return SteinKirbyData(
        one_handles=0,
        two_handles=tuple(handles),
        linking=tuple(tuple(row) for row in linking),
    )


def analyze(data: SteinKirbyData) -> FormAnalysis:
    """Euler characteristic, determinant, signature, and (when defined)
    c1^2 and the boundary theta invariant of the handlebody."""
    k = len(data.two_handles)
    chi = 1 - data.one_handles + k
    q = [list(row) for row in data.linking]
    det = linalg.determinant(q)
    sig = linalg.signature(q)
    c1_squared = None
    theta = None
    if data.one_handles == 0 and det != 0:
        rot = [h.r for h in data.two_handles]
        solution = linalg.solve(q, rot)
        assert solution is not None
        c1_squared = sum(Fraction(ri) * xi for ri, xi in zip(rot, solution))
        if abs(det) == 1:
            assert c1_squared.denominator == 1
            assert (c1_squared - sig) % 8 == 0
            theta = int(c1_squared) - 2 * chi - 3 * sig
    return FormAnalysis(
        chi=chi, b2=k, det=det, signature=sig,
        c1_squared=c1_squared, theta_boundary=theta,
    )


def nucleus(p: int, q: int, n: int) -> NucleusData:
    """Nucleus of the compactified (p, q, npq-1) Milnor fibration.

    For n >= 2 this is the handlebody on T(p,q) with framing 0 plus a
    -n-framed Legendrian meridian; for n = 1 the section is blown down,
    leaving a single +1-framed handle on T(p,q). The boundary is
    -Sigma(p, q, npq - 1).
    """
    if not (2 <= p < q) or math.gcd(p, q) != 1:
        raise InvalidParams(f"bad torus knot parameters ({p}, {q})")
    if n < 1:
        raise InvalidParams(f"n must be positive, got {n}")
    l = (p - 1) * (q - 1) // 2
    if n == 1:
        if (p, q) == (2, 3):
            raise ExcludedCase(
                "Sigma(2,3,5) admits no negative tight contact structure"
            )
        if 2 * l - 3 < 0:
            raise ScheduleInfeasible(f"2l - 3 = {2 * l - 3} < 0")
        kirby = SteinKirbyData(
            one_handles=0,
            two_handles=(TwoHandle(tb=2, r=3 - 2 * l, framing=1),),
            linking=((1,),),
        )
    else:
        kirby = SteinKirbyData(
            one_handles=0,
            two_handles=(
                TwoHandle(tb=1, r=2 - 2 * l, framing=0),
                TwoHandle(tb=1 - n, r=2 - n, framing=-n),
            ),
            linking=((0, 1), (1, -n)),
        )
    c1_pd = (2 - 2 * l, 2 + n * (1 - 2 * l))
    c1_squared = (2 - 2 * l) * (4 - 2 * n * l)
    # Cross-check c1^2 against the pairing in the (section, fiber) basis:
    # section^2 = -n, fiber^2 = 0, section.fiber = 1.
    a, b = c1_pd
    assert -n * a * a + 2 * a * b == c1_squared
    return NucleusData(
        kirby=kirby,
        l=l,
        fiber_genus=l,
        singular_fibers=n * p * q,
        c1_pd=c1_pd,
        c1_squared=c1_squared,
        boundary=OrientedBrieskorn(
            triple=BrieskornTriple(p, q, n * p * q - 1), sign=-1
        ),
    )


def parse_kirby(text: str) -> SteinKirbyData:
    """Parse the kirby file format.

    ``1-handles <n>``, then ``handle tb=<int> r=<int> framing=<int>`` lines,
    then ``lk <i> <j> <int>`` lines for i < j; ``#`` starts a comment.
    Diagonal linking entries are implied by the framings.
    """
    one_handles = None
    handles: list[TwoHandle] = []
    links: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "1-handles" and len(parts) == 2:
                if one_handles is not None:
                    raise MalformedToken(f"line {lineno}: duplicate 1-handles line")
                one_handles = int(parts[1])
            elif parts[0] == "handle" and len(parts) == 4:
                fields = {}
                for part in parts[1:]:
                    key, _, value = part.partition("=")
                    fields[key] = int(value)
                if set(fields) != {"tb", "r", "framing"}:
                    raise MalformedToken(f"line {lineno}: {raw.strip()!r}")
                handles.append(
                    TwoHandle(tb=fields["tb"], r=fields["r"], framing=fields["framing"])
                )
            elif parts[0] == "lk" and len(parts) == 4:
                i, j, value = int(parts[1]), int(parts[2]), int(parts[3])
                if not 0 <= i < j:
                    raise MalformedToken(f"line {lineno}: need 0 <= i < j")
                links.append((i, j, value))
            else:
                raise MalformedToken(f"line {lineno}: {raw.strip()!r}")
        except ValueError:
            raise MalformedToken(f"line {lineno}: {raw.strip()!r}") from None
    if one_handles is None:
        one_handles = 0
    k = len(handles)
    linking = [[0] * k for _ in range(k)]
    for i in range(k):
        linking[i][i] = handles[i].framing
    for i, j, value in links:
        if j >= k:
            raise MalformedToken(f"lk {i} {j} out of range for {k} handles")
        linking[i][j] = linking[j][i] = value
    return SteinKirbyData(
        one_handles=one_handles,
        two_handles=tuple(handles),
        linking=tuple(tuple(row) for row in linking),
    )


def serialize_kirby(data: SteinKirbyData) -> str:
    """Inverse of parse_kirby, up to comments and whitespace."""
    lines = [f"1-handles {data.one_handles}"]
    lines.extend(
        f"handle tb={h.tb} r={h.r} framing={h.framing}" for h in data.two_handles
    )
    k = len(data.two_handles)
    for i in range(k):
        for j in range(i + 1, k):
            if data.linking[i][j] != 0:
                lines.append(f"lk {i} {j} {data.linking[i][j]}")
    return "\n".join(lines) + "\n"

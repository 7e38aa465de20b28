"""Decision procedures for embedding and filling criteria.

All checks work at the level of (tb, r) pairs: the hypotheses quantify over
Legendrian representatives, so a caller supplies a known representative
(e.g. via ``fronts.invariants``) and the procedures decide whether zig-zag
stabilization reaches the required target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .brieskorn import BrieskornTriple, OrientedBrieskorn, milnor_invariants
from .errors import ExcludedCase, InvalidParams
from .fronts import (
    LegendrianInvariants,
    StabilizationSchedule,
    reachable,
    stabilize_invariants,
)


@dataclass(frozen=True)
class HirzQuery:
    """Can the n-framed handlebody on a knot with Legendrian representative
    ``inv0`` embed in the ruled surface of parity ``m`` as a section?"""

    inv0: LegendrianInvariants
    n: int
    m: int


@dataclass(frozen=True)
class HirzVerdict:
    embeddable: bool
    schedule: StabilizationSchedule | None


@dataclass(frozen=True)
class EmbedPlan:
    source: LegendrianInvariants
    target: LegendrianInvariants
    framing: int
    schedule: StabilizationSchedule
    boundary: OrientedBrieskorn
    split_forms: tuple[str, str] = ("<+1>", "<-1>")


@dataclass(frozen=True)
class ThetaReport:
    theta_embed: int  # always -2
    theta_milnor: int
    homotopic: bool
    b2_mod3: int


@dataclass(frozen=True)
class CaveVerdict:
    feasible: bool
    target: LegendrianInvariants | None


@dataclass(frozen=True)
class FlipVerdict:
    feasible: bool
    flips: int | None


def hirz_check(query: HirzQuery) -> HirzVerdict:
    """Section embedding criterion: parity m = n mod 2 plus a Legendrian
    representative with tb = n + 1 and r = n + 2."""
    if (query.m - query.n) % 2 != 0:
        return HirzVerdict(embeddable=False, schedule=None)
    schedule = reachable(
        query.inv0, LegendrianInvariants(tb=query.n + 1, r=query.n + 2)
    )
    return HirzVerdict(embeddable=schedule is not None, schedule=schedule)


def brieskorn_embed_plan(p: int, q: int, eps: int) -> EmbedPlan:
    """Stabilization schedule splitting a ruled surface along
    Sigma(p, q, pq + eps).

    eps = +1: stabilize the maximal torus-knot front to (0, 1) and frame
    with -1; eps = -1: stabilize to (2, 3) and frame with +1. The two
    excluded cases are Sigma(2,3,5) and Sigma(2,5,9).
    """
    if not (2 <= p < q) or math.gcd(p, q) != 1:
        raise InvalidParams(f"bad torus knot parameters ({p}, {q})")
    if eps not in (1, -1):
        raise InvalidParams(f"eps must be +-1, got {eps}")
    l = (p - 1) * (q - 1) // 2
    source = LegendrianInvariants(tb=(p - 1) * q - p, r=0)
    if eps == 1:
        schedule = StabilizationSchedule(up=l - 1, down=l)
        target = LegendrianInvariants(tb=0, r=1)
        framing = -1
        boundary_sign = 1
    else:
        if (p, q) in ((2, 3), (2, 5)):
            raise ExcludedCase(f"Sigma({p},{q},{p * q - 1}) is excluded")
        schedule = StabilizationSchedule(up=l - 3, down=l)
        target = LegendrianInvariants(tb=2, r=3)
        framing = 1
        boundary_sign = -1
    assert stabilize_invariants(source, schedule) == target
    assert framing == target.tb - 1
    return EmbedPlan(
        source=source,
        target=target,
        framing=framing,
        schedule=schedule,
        boundary=OrientedBrieskorn(
            triple=BrieskornTriple(p, q, p * q + eps), sign=boundary_sign
        ),
    )


def prop_theta_check(p: int, q: int, eps: int) -> ThetaReport:
    """Compare the plane field induced by the ruled-surface embedding
    (theta = -2) with the one induced by the Milnor fiber."""
    brieskorn_embed_plan(p, q, eps)  # validates args and exclusions
    inv = milnor_invariants(BrieskornTriple(p, q, p * q + eps))
    return ThetaReport(
        theta_embed=-2,
        theta_milnor=inv.theta_boundary,
        homotopic=inv.theta_boundary == -2,
        b2_mod3=inv.b2 % 3,
    )


def cave_check(inv_mirror: LegendrianInvariants, k: int) -> CaveVerdict:
    """Pseudoconcave filling criterion for k-surgery: the mirror needs a
    representative with tb = 1 - k and r = +-(2 - k)."""
    for r_sign in (1, -1):
        target = LegendrianInvariants(tb=1 - k, r=r_sign * (2 - k))
        if reachable(inv_mirror, target) is not None:
            return CaveVerdict(feasible=True, target=target)
    return CaveVerdict(feasible=False, target=None)


def mirror_pair_check(tb1: int, tb2: int) -> bool:
    """Whether (tb1, tb2) is feasible for Legendrian representatives of a
    mirror pair: tb(K) + tb(-K) <= -2 always."""
    return tb1 + tb2 <= -2


def flip_reach(r0: int, up: int, down: int, r_target: int) -> FlipVerdict:
    """Can flipping zig-zags move r from r0 to r_target?

    Flipping one up zig-zag to down changes r by +2; down to up by -2, so
    the reachable values are r0 - 2*down .. r0 + 2*up in steps of 2.
    """
    if up < 0 or down < 0:
        raise InvalidParams("zig-zag counts must be non-negative")
    delta = r_target - r0
    if delta % 2 != 0 or not -2 * down <= delta <= 2 * up:
        return FlipVerdict(feasible=False, flips=None)
    return FlipVerdict(feasible=True, flips=delta // 2)


def slice_genus_check(inv: LegendrianInvariants, g: int) -> bool:
    """Slice-genus inequality tb + |r| <= 2g - 1."""
    if g < 0:
        raise InvalidParams("genus must be non-negative")
    return inv.tb + abs(inv.r) <= 2 * g - 1

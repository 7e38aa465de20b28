"""Brieskorn homology spheres and Milnor fiber invariants.

Everything here is exact integer arithmetic: the lattice-point signature
count uses only integer comparisons, and the closed forms assert exact
divisibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateThirdMultiplicity,
    InternalIntegralSum,
    InvalidParams,
    NonIntegralResult,
)


@dataclass(frozen=True)
class BrieskornTriple:
    p1: int
    p2: int
    p3: int

    def __post_init__(self):
        ps = (self.p1, self.p2, self.p3)
        if any(p < 2 for p in ps):
            raise InvalidParams(f"multiplicities must be >= 2, got {ps}")
        for a, b in ((self.p1, self.p2), (self.p1, self.p3), (self.p2, self.p3)):
            if math.gcd(a, b) != 1:
                raise InvalidParams(f"multiplicities {ps} not pairwise coprime")

    def sorted(self) -> "BrieskornTriple":
        return BrieskornTriple(*sorted((self.p1, self.p2, self.p3)))


@dataclass(frozen=True)
class OrientedBrieskorn:
    """A Brieskorn sphere with a sign: +1 is the link-of-singularity orientation."""

    triple: BrieskornTriple
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidParams(f"sign must be +-1, got {self.sign}")

    def __str__(self):
        t = self.triple
        prefix = "+" if self.sign == 1 else "-"
        return f"{prefix}Sigma({t.p1},{t.p2},{t.p3})"


@dataclass(frozen=True)
class SeifertData:
    q1: int
    q2: int
    q3: int


@dataclass(frozen=True)
class MilnorInvariants:
    b2: int
    chi: int
    sigma: int
    theta_boundary: int
    c1: int = 0


@dataclass(frozen=True)
class SurgeryDescription:
    """+-1/n surgery on the right-handed (p, q) torus knot."""

    p: int
    q: int
    n: int
    sign: int

    def __post_init__(self):
        if not (2 <= self.p < self.q) or math.gcd(self.p, self.q) != 1:
            raise InvalidParams(f"bad torus knot parameters ({self.p}, {self.q})")
        if self.n < 1:
            raise InvalidParams(f"n must be positive, got {self.n}")
        if self.sign not in (1, -1):
            raise InvalidParams(f"sign must be +-1, got {self.sign}")


def _min_abs_residues(residue: int, modulus: int) -> list[int]:
    """Representatives of ``residue`` mod ``modulus`` of minimal absolute
    value, positive one first when both signs achieve it."""
    r = residue % modulus
    candidates = sorted({r, r - modulus}, key=lambda v: (abs(v), v < 0))
    best = abs(candidates[0])
    return [v for v in candidates if abs(v) == best]


def seifert_data(t: BrieskornTriple) -> SeifertData:
    """Minimal solution of q1*p2*p3 + p1*q2*p3 + p1*p2*q3 = +1.

    Among all solutions, q1 and q2 are pinned modulo p1 and p2 respectively,
    so the lexicographic minimum of (|q1|, |q2|, |q3|) (positive entries
    preferred at ties) ranges over at most four candidates.
    """
    p1, p2, p3 = t.p1, t.p2, t.p3
    solutions = []
    for q1 in _min_abs_residues(pow(p2 * p3, -1, p1), p1):
        for q2 in _min_abs_residues(pow(p1 * p3, -1, p2), p2):
            remainder = 1 - q1 * p2 * p3 - q2 * p1 * p3
            assert remainder % (p1 * p2) == 0
            solutions.append((q1, q2, remainder // (p1 * p2)))
    best = min(
        solutions,
        key=lambda s: (abs(s[0]), s[0] < 0, abs(s[1]), s[1] < 0, abs(s[2]), s[2] < 0),
    )
    out = SeifertData(*best)
    assert out.q1 * p2 * p3 + p1 * out.q2 * p3 + p1 * p2 * out.q3 == 1
    return out


def surgery_to_brieskorn(s: SurgeryDescription) -> OrientedBrieskorn:
    """+1/n surgery on T(p,q) yields -Sigma(p,q,npq-1); -1/n yields +Sigma(p,q,npq+1)."""
    third = s.n * s.p * s.q - s.sign
    if third < 2:
        raise DegenerateThirdMultiplicity(
            f"third multiplicity {third} for {s}"
        )
    return OrientedBrieskorn(
        triple=BrieskornTriple(s.p, s.q, third), sign=-s.sign
    )


def sigma_lattice(t: BrieskornTriple) -> int:
    """Signature of the Milnor fiber by signed lattice-point count.

    Over integer points 0 < x_i < p_i, with T = x1*p2*p3 + x2*p1*p3 +
    x3*p1*p2 and A = p1*p2*p3: points with T in (0, A) or (2A, 3A) count
    +1, points with T in (A, 2A) count -1. T is never a multiple of A.
    """
    p1, p2, p3 = t.p1, t.p2, t.p3
    a23 = p2 * p3
    a13 = p1 * p3
    a12 = p1 * p2
    total_volume = p1 * p2 * p3
    positive = negative = 0
    for x1 in range(1, p1):
        t1 = x1 * a23
        for x2 in range(1, p2):
            t12 = t1 + x2 * a13
            for x3 in range(1, p3):
                total = t12 + x3 * a12
                if total % total_volume == 0:
                    raise InternalIntegralSum(
                        f"T = {total} divisible by {total_volume} at "
                        f"({x1}, {x2}, {x3})"
                    )
                if total_volume < total < 2 * total_volume:
                    negative += 1
                else:
                    positive += 1
    return positive - negative


def sigma_closed_form(p: int, q: int, n: int) -> int:
    """Signature -n(p^2-1)(q^2-1)/3 of the (p, q, npq-1) Milnor fiber."""
    _check_pqn(p, q, n)
    numerator = -n * (p * p - 1) * (q * q - 1)
    if numerator % 3 != 0:
        raise NonIntegralResult(f"{numerator} not divisible by 3")
    return numerator // 3


def theta_closed_form(p: int, q: int, n: int) -> int:
    """Plane-field invariant (p-1)(q-1)(4 - n(pq-p-q-1)) - 2 of the
    (p, q, npq-1) Milnor fiber boundary."""
    _check_pqn(p, q, n)
    value = (p - 1) * (q - 1) * (4 - n * (p * q - p - q - 1)) - 2
    assert value % 4 == 2
    return value


def _check_pqn(p: int, q: int, n: int) -> None:
    if not (2 <= p < q) or math.gcd(p, q) != 1:
        raise InvalidParams(f"bad torus knot parameters ({p}, {q})")
    if n < 1:
        raise InvalidParams(f"n must be positive, got {n}")


def milnor_invariants(t: BrieskornTriple) -> MilnorInvariants:
    """b2, chi, sigma and boundary theta of the Milnor fiber of ``t``.

    When the triple has the form (p, q, npq - 1), sigma and theta are
    cross-checked against the closed forms.
    """
    b2 = (t.p1 - 1) * (t.p2 - 1) * (t.p3 - 1)
    chi = b2 + 1
    sigma = sigma_lattice(t)
    theta = -2 * chi - 3 * sigma
    p, q, third = t.sorted().p1, t.sorted().p2, t.sorted().p3
    if (third + 1) % (p * q) == 0:
        n = (third + 1) // (p * q)
        assert sigma == sigma_closed_form(p, q, n)
        assert theta == theta_closed_form(p, q, n)
    assert abs(sigma) <= b2
    assert theta % 4 == 2
    return MilnorInvariants(b2=b2, chi=chi, sigma=sigma, theta_boundary=theta)


def casson_harer_families(p_max: int, n_max: int) -> list[BrieskornTriple]:
    """Brieskorn triples bounding contractible 4-manifolds.

    Families: Sigma(p, np+e, np+2e) for p odd and e = +-1;
    Sigma(p, np-1, np+1) for p even and n odd; plus the sporadic
    Sigma(2, 3, 13). Entries sorted within each triple, output
    deduplicated and lexicographically ordered.
    """
    if p_max < 2 or n_max < 2:
        raise InvalidParams("need p_max, n_max >= 2")
    raw: set[tuple[int, int, int]] = {(2, 3, 13)}
    for p in range(2, p_max + 1):
        for n in range(1, n_max + 1):
            if p % 2 == 1:
                for eps in (1, -1):
                    raw.add(tuple(sorted((p, n * p + eps, n * p + 2 * eps))))
            elif n % 2 == 1:
                raw.add(tuple(sorted((p, n * p - 1, n * p + 1))))
    out = []
    for entry in sorted(raw):
        if entry[0] < 2:
            continue
        try:
            out.append(BrieskornTriple(*entry))
        except InvalidParams:
            continue
    return out

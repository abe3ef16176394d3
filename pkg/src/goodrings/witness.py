"""Good-point witness search, verification, refutation, and unit quotients.

A witness for a pair (a, b) is (N, lam, eps, eps_inv) with b^N + lam*a = eps
a unit; the pair is good when such data exists. Searches are exact: a Refuted
outcome carries a machine-checkable reason, and Exhausted is an admission
that the bound ran out, never a claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

from . import polyuniv as pu
from .core import (
    InfiniteRingError,
    PreconditionError,
    Ring,
    UnsupportedRingError,
    is_primitive,
    require_primitive,
)
from .rings import RationalPoly


@dataclass(frozen=True)
class GoodPointWitness:
    N: int
    lam: object
    epsilon: object
    epsilon_inverse: object


@dataclass(frozen=True)
class CycleWithoutUnit:
    """The residues b^N mod aA closed a cycle containing no unit class."""

    period: int
    residues_visited: int


@dataclass(frozen=True)
class RationalEvaluation:
    """A rational root of a where b evaluates off the unit circle of Z."""

    root: Fraction
    value: Fraction
    reason: str


@dataclass(frozen=True)
class RatioCriterion:
    """Root evaluations of b whose ratio is not +/-1, blocking any witness."""

    roots: tuple
    ratio: Fraction


@dataclass(frozen=True)
class Witness:
    witness: GoodPointWitness


@dataclass(frozen=True)
class Refuted:
    evidence: object


@dataclass(frozen=True)
class Exhausted:
    bound: int


SearchOutcome = Union[Witness, Refuted, Exhausted]


def verify_witness(ring: Ring, a, b, w: GoodPointWitness) -> bool:
    """Check b^N + lam*a == eps and eps*eps_inv == 1. Pure recomputation."""
    if not isinstance(w.N, int) or w.N < 1:
        return False
    if not ring.eq(ring.mul(w.epsilon, w.epsilon_inverse), ring.one()):
        return False
    lhs = ring.add(ring.pow(b, w.N), ring.mul(w.lam, a))
    return ring.eq(lhs, w.epsilon)


def find_good_witness(ring: Ring, a, b, bound: int = 10000) -> SearchOutcome:
    """Scan N = 1..bound for a unit in the class of b^N mod aA.

    Returns the minimal-N witness, a cycle refutation when the residues
    provably repeat without a unit, or Exhausted.
    """
    require_primitive(ring, (a, b))
    if ring.eq(a, ring.zero()):
        inv = ring.unit_inverse(b)
        assert inv is not None, "primitive (0, b) forces b to be a unit"
        return Witness(GoodPointWitness(1, ring.zero(), b, inv))
    seen: dict = {}
    r = ring.one()
    for N in range(1, bound + 1):
        r = ring.reduce_mod(a, ring.mul(b, r))
        hit = ring.unit_residue_witness(a, r)
        if hit is not None:
            eps, _ = hit
            inv = ring.unit_inverse(eps)
            lam = ring.divide_exact(ring.sub(eps, ring.pow(b, N)), a)
            assert inv is not None and lam is not None
            w = GoodPointWitness(N, lam, eps, inv)
            assert verify_witness(ring, a, b, w)
            return Witness(w)
        if r in seen:
            if ring.unit_residue_complete:
                return Refuted(
                    CycleWithoutUnit(period=N - seen[r], residues_visited=len(seen))
                )
            # the per-class unit search is a bounded heuristic here, so a
            # closed cycle proves nothing
            return Exhausted(bound=N)
        seen[r] = N
    return Exhausted(bound=bound)


@dataclass(frozen=True)
class UnitQuotientReport:
    status: str  # "finite" | "infinite" | "unknown"
    order: Optional[int] = None
    carrier: Optional[int] = None
    generator: Optional[object] = None
    reason: Optional[str] = None


def unit_quotient_group(ring: Ring, a, limit: int = 20000) -> UnitQuotientReport:
    """The group (A/aA)^x / image(A^x), when the quotient is enumerable.

    carrier is the number of unit residues; order divides it by the image
    size. Quotient-unit membership is certified through bezout against a.
    """
    if ring.eq(a, ring.zero()):
        # reduction mod (0) is the identity, so the units map onto themselves
        return UnitQuotientReport("finite", order=1, carrier=ring.units_count())
    size = ring.quotient_size(a)
    if size is None:
        return UnitQuotientReport(
            "unknown",
            reason=f"the quotient of {ring.spec_string()} by this element is not enumerable",
        )
    if size > limit:
        return UnitQuotientReport(
            "unknown",
            reason=f"quotient has {size} residues, above the limit {limit}",
        )
    carrier = 0
    for r in ring.quotient_residues(a):
        if ring.bezout((r, a)) is not None:
            carrier += 1
    image = ring.unit_image_in_quotient(a)
    if image is None:
        return UnitQuotientReport(
            "unknown", reason="unit image in the quotient is not computable"
        )
    assert carrier % len(image) == 0, "unit image must be a subgroup"
    return UnitQuotientReport("finite", order=carrier // len(image), carrier=carrier)


@dataclass(frozen=True)
class GoodRingReport:
    pairs_checked: int
    all_good: bool
    max_N_seen: int
    failures: tuple


def check_good_ring_exhaustive(ring: Ring) -> GoodRingReport:
    """Test every pair (a, b) in A^2 of a finite ring for goodness."""
    if not ring.is_finite():
        raise InfiniteRingError(
            f"exhaustive check would not terminate on {ring.spec_string()}"
        )
    elts = list(ring.elements())
    bound = ring.size()
    pairs = 0
    max_n = 0
    failures = []
    for a in elts:
        for b in elts:
            pairs += 1
            if is_primitive(ring, (a, b)) is None:
                continue
            outcome = find_good_witness(ring, a, b, bound=bound)
            if isinstance(outcome, Witness):
                assert verify_witness(ring, a, b, outcome.witness)
                max_n = max(max_n, outcome.witness.N)
            else:
                failures.append((a, b, outcome))
    return GoodRingReport(pairs, not failures, max_n, tuple(failures))


def decide_good_point_rational_split(ring: Ring, a, b) -> SearchOutcome:
    """Decide goodness of a Q[T] pair whose first entry is squarefree and
    splits over Q.

    The root evaluations of b decide everything: all ratios 1 give N = 1,
    ratios in {1, -1} give N = 2, anything else refutes.
    """
    if not isinstance(ring, RationalPoly):
        raise UnsupportedRingError("the rational-split decision works over Q[T]")
    require_primitive(ring, (a, b))
    if not a:
        inv = ring.unit_inverse(b)
        assert inv is not None
        return Witness(GoodPointWitness(1, ring.zero(), b, inv))
    if len(a) == 1:
        lam = ring.divide_exact(ring.sub(ring.one(), b), a)
        return Witness(GoodPointWitness(1, lam, ring.one(), ring.one()))
    field = ring.field
    roots = pu.rational_roots(a)
    lin_prod: tuple = (Fraction(1),)
    for th in roots:
        lin_prod = pu.mul(field, lin_prod, (-th, Fraction(1)))
    if lin_prod != pu.monic(field, a):
        raise PreconditionError(
            "the coefficient polynomial must be squarefree with all roots rational"
        )
    vals = [pu.eval_at(field, b, th) for th in roots]
    assert all(v != 0 for v in vals), "a primitive pair cannot share a root"
    base = vals[0]
    N = 1
    for v in vals:
        ratio = v / base
        if ratio == 1:
            continue
        if ratio == -1:
            N = 2
            continue
        return Refuted(RatioCriterion(roots=tuple(roots), ratio=ratio))
    c = base**N
    eps = (c,)
    lam = ring.divide_exact(ring.sub(eps, ring.pow(b, N)), a)
    assert lam is not None, "b^N - c must vanish on the roots of a"
    w = GoodPointWitness(N, lam, eps, ring.unit_inverse(eps))
    assert verify_witness(ring, a, b, w)
    return Witness(w)


def refute_integer_poly_point(ring: Ring, a, b) -> Optional[RationalEvaluation]:
    """Refutation for integer-coefficient pairs: a rational root of a where
    |b| is not 1 rules out any witness over the integer polynomial ring.
    None is inconclusive, not a claim of goodness."""
    if not isinstance(ring, RationalPoly):
        raise UnsupportedRingError(
            "integer-coefficient refutation uses the Q[T] representation"
        )
    for coeff in (*a, *b):
        if coeff.denominator != 1:
            raise PreconditionError("both polynomials must have integer coefficients")
    # necessary primitivity checks: coprimality over Q[T], joint content 1
    require_primitive(ring, (a, b))
    content = 0
    for coeff in (*a, *b):
        content = gcd(content, int(coeff))
    if content != 1:
        raise PreconditionError(
            f"coefficients share the integer factor {content}, so the pair "
            "cannot generate the unit ideal over the integers"
        )
    if len(a) <= 1:
        return None
    for th in pu.rational_roots(a):
        val = pu.eval_at(ring.field, b, th)
        if val != 1 and val != -1:
            return RationalEvaluation(
                root=th,
                value=val,
                reason=(
                    f"b({th}) = {val} has absolute value different from 1, and "
                    "evaluation at a root of a sends every b^N + lam*a there"
                ),
            )
    return None

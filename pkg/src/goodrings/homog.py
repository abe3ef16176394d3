"""Homogeneous polynomials and the inductive unit-valued constructor.

A construction run leaves a full trace: the minor values, the combination
certificates, the degree-1 forms, the witness used at each extension, and
each intermediate result. replay_trace recomputes every identity from the
raw data, so a trace is evidence rather than a narration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb, gcd
from typing import Iterator, Optional, Sequence

from .core import (
    GoodRingsError,
    ParseError,
    PreconditionError,
    PrimitivePoint,
    Ring,
    UnsupportedRingError,
    verify_certificate,
)
from .rings import Integers, PrimeField, _split_top_level
from .rings import _int_chain, _int_xgcd
from .witness import (
    Exhausted,
    GoodPointWitness,
    Witness,
    find_good_witness,
    verify_witness,
)

_VAR_RE = re.compile(r"^x([0-9]+)(\^([0-9]+))?$")


def monomial_exponents(n_vars: int, degree: int) -> Iterator[tuple]:
    """All exponent tuples of the given total degree, lex descending."""
    if n_vars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in monomial_exponents(n_vars - 1, degree - e):
            yield (e,) + rest


def _compound(text: str) -> bool:
    """True when a formatted coefficient needs parentheses inside a term."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
    return False


class HomogeneousPolynomial:
    """Homogeneous polynomial in x1..xn with exact ring coefficients.

    terms maps exponent tuples summing to the degree to nonzero
    coefficients. No terms is the zero polynomial, a distinct sentinel that
    compares equal across degrees.
    """

    def __init__(self, ring: Ring, n_vars: int, degree: int, terms: dict):
        if n_vars < 1:
            raise ValueError("a polynomial needs at least one variable")
        if degree < 0:
            raise ValueError("negative degree")
        clean = {}
        zero = ring.zero()
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != n_vars or any(e < 0 for e in exps) or sum(exps) != degree:
                raise ValueError(
                    f"exponents {exps} do not fit degree {degree} in {n_vars} variables"
                )
            if not ring.eq(c, zero):
                clean[exps] = c
        self.ring = ring
        self.n_vars = n_vars
        self.degree = degree
        self.terms = clean

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @classmethod
    def zero(cls, ring: Ring, n_vars: int, degree: int = 0) -> "HomogeneousPolynomial":
        return cls(ring, n_vars, degree, {})

    @classmethod
    def constant(cls, ring: Ring, n_vars: int, c) -> "HomogeneousPolynomial":
        return cls(ring, n_vars, 0, {(0,) * n_vars: c})

    @classmethod
    def monomial(cls, ring: Ring, n_vars: int, exps, coeff) -> "HomogeneousPolynomial":
        exps = tuple(exps)
        return cls(ring, n_vars, sum(exps), {exps: coeff})

    @classmethod
    def linear(cls, ring: Ring, coeffs: Sequence) -> "HomogeneousPolynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            exps = [0] * n
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(ring, n, 1, terms)

    def _require_compatible(self, other: "HomogeneousPolynomial") -> None:
        if (
            self.n_vars != other.n_vars
            or self.ring.spec_string() != other.ring.spec_string()
        ):
            raise ValueError("polynomials live in different polynomial rings")

    def add(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        self._require_compatible(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add homogeneous polynomials of different degree")
        ring = self.ring
        merged = dict(self.terms)
        for exps, c in other.terms.items():
            if exps in merged:
                merged[exps] = ring.add(merged[exps], c)
            else:
                merged[exps] = c
        return HomogeneousPolynomial(ring, self.n_vars, self.degree, merged)

    def neg(self) -> "HomogeneousPolynomial":
        ring = self.ring
        return HomogeneousPolynomial(
            ring,
            self.n_vars,
            self.degree,
            {e: ring.neg(c) for e, c in self.terms.items()},
        )

    def sub(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        return self.add(other.neg())

    def scale(self, c) -> "HomogeneousPolynomial":
        ring = self.ring
        return HomogeneousPolynomial(
            ring,
            self.n_vars,
            self.degree,
            {e: ring.mul(c, v) for e, v in self.terms.items()},
        )

    def mul(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        self._require_compatible(other)
        degree = self.degree + other.degree
        if self.is_zero or other.is_zero:
            return HomogeneousPolynomial.zero(self.ring, self.n_vars, degree)
        ring = self.ring
        acc: dict = {}
        if isinstance(ring, Integers):
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    acc[key] = acc.get(key, 0) + c1 * c2
            return HomogeneousPolynomial(ring, self.n_vars, degree, acc)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                prod = ring.mul(c1, c2)
                if key in acc:
                    acc[key] = ring.add(acc[key], prod)
                else:
                    acc[key] = prod
        return HomogeneousPolynomial(ring, self.n_vars, degree, acc)

    def pow(self, n: int) -> "HomogeneousPolynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        if (
            n > 1
            and self.degree == 1
            and not self.is_zero
            and isinstance(self.ring, Integers)
        ):
            return self._int_linear_power(n)
        if n >= 4 and 0 < len(self.terms) <= 16:
            # for a sparse base the dense intermediates of repeated squaring
            # cost more than multiplying the running product term by term
            acc = self
            for _ in range(n - 1):
                acc = acc.mul(self)
            return acc
        acc = HomogeneousPolynomial.constant(self.ring, self.n_vars, self.ring.one())
        base = self
        while n:
            if n & 1:
                acc = acc.mul(base)
            n >>= 1
            if n:
                base = base.mul(base)
        return acc

    def _int_linear_power(self, n: int) -> "HomogeneousPolynomial":
        """(c_1 x_1 + ... )^n by the multinomial theorem; integers only."""
        support = [
            (idx, c)
            for idx, c in (
                (e.index(1), c) for e, c in self.terms.items()
            )
        ]
        acc: dict = {}
        for split in monomial_exponents(len(support), n):
            coeff = 1
            rest = n
            key = [0] * self.n_vars
            for (idx, c), e in zip(support, split):
                coeff *= comb(rest, e) * c**e
                rest -= e
                key[idx] = e
            acc[tuple(key)] = coeff
        return HomogeneousPolynomial(self.ring, self.n_vars, n, acc)

    def eval(self, coords: Sequence):
        if len(coords) != self.n_vars:
            raise ValueError("wrong number of coordinates")
        ring = self.ring
        if isinstance(ring, Integers):
            caches: list = [{0: 1, 1: x} for x in coords]
            total = 0
            for exps, c in self.terms.items():
                term = c
                for cache, x, e in zip(caches, coords, exps):
                    if e:
                        p = cache.get(e)
                        if p is None:
                            p = x**e
                            cache[e] = p
                        term *= p
                total += term
            return total
        total = ring.zero()
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(coords, exps):
                if e:
                    term = ring.mul(term, ring.pow(x, e))
            total = ring.add(total, term)
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        return (
            self.n_vars == other.n_vars
            and self.ring.spec_string() == other.ring.spec_string()
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"<HomogeneousPolynomial {self.format()} over {self.ring.spec_string()}>"

    def format(self) -> str:
        """Canonical text: terms in graded-lex descending order, coefficient
        1 elided, compound coefficients parenthesized."""
        if self.is_zero:
            return "0"
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            cs = self.ring.format_element(self.terms[exps])
            var = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if not var:
                pieces.append(f"({cs})" if _compound(cs) else cs)
            elif cs == "1":
                pieces.append(var)
            elif cs == "-1":
                pieces.append("-" + var)
            elif _compound(cs):
                pieces.append(f"({cs})*{var}")
            else:
                pieces.append(f"{cs}*{var}")
        out = pieces[0]
        for piece in pieces[1:]:
            out += piece if piece.startswith("-") else "+" + piece
        return out

    @classmethod
    def parse(cls, ring: Ring, n_vars: int, text: str) -> "HomogeneousPolynomial":
        """Parse the term grammar; accepts any term order and whitespace."""
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty polynomial literal")
        if s == "0":
            return cls.zero(ring, n_vars)
        raw_terms = []
        depth = 0
        start = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    raise ParseError("unbalanced parentheses", i)
            elif ch in "+-" and depth == 0 and i > start:
                raw_terms.append(s[start:i])
                start = i
        if depth != 0:
            raise ParseError("unbalanced parentheses")
        raw_terms.append(s[start:])
        terms: dict = {}
        degree: Optional[int] = None
        for term in raw_terms:
            negate = False
            if term and term[0] == "+":
                term = term[1:]
            elif term and term[0] == "-":
                negate = True
                term = term[1:]
            if not term:
                raise ParseError(f"malformed term in {text!r}")
            exps = [0] * n_vars
            coeff = ring.one()
            for factor in _split_top_level(term, "*"):
                m = _VAR_RE.match(factor)
                if m:
                    idx = int(m.group(1)) - 1
                    if not 0 <= idx < n_vars:
                        raise ParseError(f"variable {factor!r} out of range")
                    exps[idx] += int(m.group(3)) if m.group(3) else 1
                    continue
                try:
                    c = ring.parse_element(factor)
                except ParseError:
                    if factor.startswith("(") and factor.endswith(")"):
                        c = ring.parse_element(factor[1:-1])
                    else:
                        raise
                coeff = ring.mul(coeff, c)
            if negate:
                coeff = ring.neg(coeff)
            d = sum(exps)
            if degree is None:
                degree = d
            elif d != degree:
                raise ParseError(f"terms of mixed total degree in {text!r}")
            key = tuple(exps)
            terms[key] = ring.add(terms.get(key, ring.zero()), coeff)
        assert degree is not None
        return cls(ring, n_vars, degree, terms)


def linear_form_for_point(ring: Ring, point: PrimitivePoint) -> HomogeneousPolynomial:
    """The degree-1 form with the certificate coefficients, taking the value
    1 at the point."""
    if not verify_certificate(ring, point.coordinates, point.certificate):
        raise PreconditionError("primitivity certificate does not verify")
    form = HomogeneousPolynomial.linear(ring, point.certificate.coefficients)
    assert ring.eq(form.eval(point.coordinates), ring.one())
    return form


@dataclass(frozen=True)
class SectionIdeal:
    point: PrimitivePoint
    generators: tuple


def section_ideal_generators(ring: Ring, point: PrimitivePoint) -> SectionIdeal:
    """Degree-1 forms a_i*x_j - a_j*x_i over index pairs i < j, dropping
    forms that are identically zero."""
    coords = point.coordinates
    n = len(coords)
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            coeffs = [ring.zero()] * n
            coeffs[j] = coords[i]
            coeffs[i] = ring.neg(coords[j])
            form = HomogeneousPolynomial.linear(ring, coeffs)
            if not form.is_zero:
                gens.append(form)
    return SectionIdeal(point, tuple(gens))


def _rank_mod_p(rows: list, p: int) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def ideal_slice_dimension(ring: Ring, generators: Sequence, degree: int) -> int:
    """Dimension of the degree-d slice of the ideal spanned by degree-1
    forms, over a prime field."""
    if not isinstance(ring, PrimeField):
        raise UnsupportedRingError("slice dimension is computed over GF(p)")
    if degree < 1:
        raise ValueError("the slice degree must be at least 1")
    gens = list(generators)
    if not gens:
        return 0
    n = gens[0].n_vars
    basis = list(monomial_exponents(n, degree))
    index = {e: i for i, e in enumerate(basis)}
    rows = []
    for gen in gens:
        if gen.degree != 1:
            raise ValueError("generators must be degree-1 forms")
        for mono in monomial_exponents(n, degree - 1):
            shifted = gen.mul(
                HomogeneousPolynomial.monomial(ring, n, mono, ring.one())
            )
            row = [0] * len(basis)
            for exps, c in shifted.terms.items():
                row[index[exps]] = c
            rows.append(row)
    return _rank_mod_p(rows, ring.n)


# ---------------------------------------------------------------------------
# inductive constructor


class WitnessSearchExhausted(GoodRingsError):
    """An extension step could not find its witness within the scan bound."""

    def __init__(self, bound: int):
        super().__init__(f"witness search exhausted at bound {bound}")
        self.bound = bound


@dataclass(frozen=True)
class ExtensionStep:
    new_point: PrimitivePoint
    covered: tuple  # points already covered, in order, defining the index t
    minors: tuple  # per t: tuple of ((i, j), minor value), i < j lex
    cofactors: tuple  # per t: (c, w) with 1 = P(q)*c + w*B_t(q)
    combiners: tuple  # per t: the u coefficients, aligned with minors
    forms: tuple  # per t: the degree-1 form B_t
    alpha: int
    witness: GoodPointWitness  # for the pair (prod B_t(q), P(q)^alpha)
    linear_form: HomogeneousPolynomial  # W with W(q) = 1
    filler_exponent: int  # N*alpha*deg(P) - k
    result: HomogeneousPolynomial


@dataclass(frozen=True)
class ConstructionTrace:
    base_point: PrimitivePoint
    base_form: HomogeneousPolynomial
    steps: tuple


_STEER_SCAN_CAP = 200000


def extend_unit_valued(
    ring: Ring,
    poly: HomogeneousPolynomial,
    covered: Sequence[PrimitivePoint],
    new_point: PrimitivePoint,
    witness_bound: int = 10000,
) -> tuple:
    """One inductive step: from P unit-valued on the covered points, build R
    unit-valued on covered + new, together with the step record.

    R = (P^alpha)^N + lam * prod(B_t) * W^e, where the B_t are degree-1
    forms vanishing at their covered point, (N, lam, eps) is a witness for
    (prod B_t(q), P(q)^alpha), W(q) = 1, and e pads the degree.
    """
    pts = list(covered)
    k = len(pts)
    if k == 0:
        raise PreconditionError("at least one covered point is required")
    if poly.is_zero or poly.degree < 1:
        raise PreconditionError("the polynomial must be homogeneous of degree >= 1")
    if not verify_certificate(
        ring, new_point.coordinates, new_point.certificate
    ):
        raise PreconditionError("primitivity certificate does not verify")
    n = poly.n_vars
    if len(new_point.coordinates) != n or any(len(p) != n for p in pts):
        raise PreconditionError("points and polynomial disagree on dimension")
    for p in pts:
        if not ring.is_unit(poly.eval(p.coordinates)):
            raise PreconditionError(
                "the polynomial is not unit-valued on a covered point"
            )
    q = new_point.coordinates
    pq = poly.eval(q)
    d = poly.degree
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    minors_per_t = []
    for p in pts:
        pc = p.coordinates
        minors_per_t.append(
            tuple(
                ring.sub(ring.mul(pc[i], q[j]), ring.mul(pc[j], q[i]))
                for i, j in pairs
            )
        )

    steered = False
    if ring.is_unit(pq):
        # q is projectively on top of the covered set as far as P can see;
        # take the trivial identity 1 = P(q) * P(q)^-1 and zero forms
        inv = ring.unit_inverse(pq)
        cofactors = [(inv, ring.zero())] * k
        combiners = [tuple(ring.zero() for _ in pairs) for _ in range(k)]
    else:
        chains = None
        if isinstance(ring, Integers):
            # steer every target to the minor gcd itself: the witness then
            # runs modulo prod(g_t), which keeps both the scan and the final
            # degree small, unlike targets of the shape 1 - P(q)^n whose
            # pairwise common factors blow the reachable exponent up
            chains = [_int_chain(m) for m in minors_per_t]
            if not all(g > 0 and gcd(g, pq) == 1 for g, _ in chains):
                chains = None
        if chains is not None:
            steered = True
            cofactors = []
            combiners = []
            for g, cs in chains:
                combiners.append(tuple(cs))
                g0, s, t = _int_xgcd(pq, g)
                assert g0 == 1
                cofactors.append((s, t))
        else:
            cofactors = []
            combiners = []
            for m in minors_per_t:
                coeffs = ring.bezout((pq,) + m)
                if coeffs is None:
                    raise GoodRingsError(
                        "could not certify 1 in (P(q), minors); the covered-point "
                        "precondition does not hold"
                    )
                cofactors.append((coeffs[0], ring.one()))
                combiners.append(tuple(coeffs[1:]))

    forms = []
    values = []
    for t in range(k):
        pc = pts[t].coordinates
        lin = [ring.zero()] * n
        for (i, j), u in zip(pairs, combiners[t]):
            lin[j] = ring.add(lin[j], ring.mul(u, pc[i]))
            lin[i] = ring.sub(lin[i], ring.mul(u, pc[j]))
        form = HomogeneousPolynomial.linear(ring, lin)
        v = form.eval(q)
        c_t, w_t = cofactors[t]
        identity = ring.add(ring.mul(pq, c_t), ring.mul(w_t, v))
        if not ring.eq(identity, ring.one()):
            raise GoodRingsError("combination certificate failed verification")
        assert ring.eq(form.eval(pc), ring.zero())
        forms.append(form)
        values.append(v)

    prod_b = HomogeneousPolynomial.constant(ring, n, ring.one())
    a_val = ring.one()
    for form, v in zip(forms, values):
        prod_b = prod_b.mul(form)
        a_val = ring.mul(a_val, v)

    scan_bound = max(witness_bound, _STEER_SCAN_CAP) if steered else witness_bound
    alpha = 1
    rounds = 0
    while True:
        rounds += 1
        if rounds > 64:
            raise GoodRingsError("witness exponent adjustment failed to settle")
        b_val = ring.pow(pq, alpha)
        outcome = find_good_witness(ring, a_val, b_val, bound=scan_bound)
        if isinstance(outcome, Witness):
            w = outcome.witness
            if w.N * alpha * d >= k:
                break
            alpha = -(-k // (w.N * d))
            continue
        if isinstance(outcome, Exhausted):
            raise WitnessSearchExhausted(outcome.bound)
        raise GoodRingsError(f"extension witness search was refuted: {outcome}")

    e = w.N * alpha * d - k
    w_form = linear_form_for_point(ring, new_point)
    head = poly.pow(alpha * w.N)
    tail = prod_b.mul(w_form.pow(e)).scale(w.lam)
    result = head.add(tail)

    assert ring.eq(result.eval(q), w.epsilon)
    for p in pts:
        expected = ring.pow(poly.eval(p.coordinates), alpha * w.N)
        assert ring.eq(result.eval(p.coordinates), expected)
        assert ring.is_unit(expected)

    step = ExtensionStep(
        new_point=new_point,
        covered=tuple(pts),
        minors=tuple(
            tuple(zip(pairs, m)) for m in minors_per_t
        ),
        cofactors=tuple(cofactors),
        combiners=tuple(combiners),
        forms=tuple(forms),
        alpha=alpha,
        witness=w,
        linear_form=w_form,
        filler_exponent=e,
        result=result,
    )
    return result, step


def construct_unit_valued(
    ring: Ring, points: Sequence[PrimitivePoint], witness_bound: int = 10000
) -> tuple:
    """Build a homogeneous polynomial taking unit values at all the given
    primitive points, plus the full construction trace."""
    pts = list(points)
    if not pts:
        raise PreconditionError("at least one point is required")
    n = len(pts[0].coordinates)
    if n < 2:
        raise PreconditionError("points need at least two coordinates")
    seen = set()
    for p in pts:
        if len(p.coordinates) != n:
            raise PreconditionError("points must share one dimension")
        if not verify_certificate(ring, p.coordinates, p.certificate):
            raise PreconditionError("primitivity certificate does not verify")
        if p.coordinates in seen:
            shown = ", ".join(ring.format_element(c) for c in p.coordinates)
            raise PreconditionError(f"duplicate point ({shown})")
        seen.add(p.coordinates)
    base = pts[0]
    current = linear_form_for_point(ring, base)
    base_form = current
    steps = []
    covered = [base]
    for q in pts[1:]:
        current, step = extend_unit_valued(ring, current, covered, q, witness_bound)
        steps.append(step)
        covered.append(q)
    for p in pts:
        assert ring.is_unit(current.eval(p.coordinates))
    return current, ConstructionTrace(base, base_form, tuple(steps))


def replay_trace(ring: Ring, trace: ConstructionTrace) -> HomogeneousPolynomial:
    """Recompute every identity in a construction trace from its raw data.

    Returns the final polynomial on success and raises GoodRingsError at the
    first mismatch. Nothing is trusted: minors, combination identities, the
    forms, the witness, the filler exponent, and each intermediate result
    are all rebuilt or checked independently.
    """

    def ensure(cond: bool, message: str) -> None:
        if not cond:
            raise GoodRingsError(f"trace replay failed: {message}")

    base = trace.base_point
    ensure(
        verify_certificate(ring, base.coordinates, base.certificate),
        "base certificate invalid",
    )
    rebuilt = HomogeneousPolynomial.linear(ring, base.certificate.coefficients)
    ensure(trace.base_form == rebuilt, "base form does not match its certificate")
    ensure(
        ring.eq(trace.base_form.eval(base.coordinates), ring.one()),
        "base form does not evaluate to 1",
    )
    poly = trace.base_form
    covered = [base]
    n = poly.n_vars
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for step in trace.steps:
        ensure(step.covered == tuple(covered), "covered-point list out of order")
        q_pt = step.new_point
        ensure(
            verify_certificate(ring, q_pt.coordinates, q_pt.certificate),
            "extension point certificate invalid",
        )
        q = q_pt.coordinates
        k = len(covered)
        d = poly.degree
        pq = poly.eval(q)
        a_val = ring.one()
        for t, p in enumerate(covered):
            pc = p.coordinates
            minors = tuple(
                ring.sub(ring.mul(pc[i], q[j]), ring.mul(pc[j], q[i]))
                for i, j in pairs
            )
            recorded = step.minors[t]
            ensure(
                tuple(idx for idx, _ in recorded) == tuple(pairs),
                "minor index set altered",
            )
            ensure(
                all(ring.eq(v, m) for (_, v), m in zip(recorded, minors)),
                "recorded minors disagree with the points",
            )
            vsum = ring.zero()
            for u, m in zip(step.combiners[t], minors):
                vsum = ring.add(vsum, ring.mul(u, m))
            c_t, w_t = step.cofactors[t]
            combo = ring.add(ring.mul(pq, c_t), ring.mul(w_t, vsum))
            ensure(ring.eq(combo, ring.one()), "combination identity broken")
            lin = [ring.zero()] * n
            for (i, j), u in zip(pairs, step.combiners[t]):
                lin[j] = ring.add(lin[j], ring.mul(u, pc[i]))
                lin[i] = ring.sub(lin[i], ring.mul(u, pc[j]))
            form = HomogeneousPolynomial.linear(ring, lin)
            ensure(form == step.forms[t], "recorded form differs from combiners")
            ensure(
                ring.eq(form.eval(pc), ring.zero()),
                "form does not vanish at its point",
            )
            v = form.eval(q)
            ensure(
                ring.eq(v, vsum),
                "form value at q disagrees with the combination",
            )
            a_val = ring.mul(a_val, v)
        w = step.witness
        alpha = step.alpha
        ensure(alpha >= 1, "alpha must be positive")
        b_val = ring.pow(pq, alpha)
        ensure(
            verify_witness(ring, a_val, b_val, w),
            "step witness does not verify",
        )
        ensure(w.N * alpha * d >= k, "witness power too small for the filler")
        ensure(
            step.filler_exponent == w.N * alpha * d - k,
            "filler exponent inconsistent",
        )
        w_form = step.linear_form
        ensure(
            w_form == HomogeneousPolynomial.linear(
                ring, q_pt.certificate.coefficients
            ),
            "linear form differs from the point certificate",
        )
        ensure(
            ring.eq(w_form.eval(q), ring.one()),
            "linear form does not take value 1 at q",
        )
        prod_b = HomogeneousPolynomial.constant(ring, n, ring.one())
        for form in step.forms:
            prod_b = prod_b.mul(form)
        head = poly.pow(alpha * w.N)
        tail = prod_b.mul(w_form.pow(step.filler_exponent)).scale(w.lam)
        result = head.add(tail)
        ensure(result == step.result, "recorded result differs from the formula")
        ensure(
            ring.eq(result.eval(q), w.epsilon),
            "result does not take the witness unit at q",
        )
        for p in covered:
            expected = ring.pow(poly.eval(p.coordinates), alpha * w.N)
            ensure(
                ring.eq(result.eval(p.coordinates), expected),
                "result value drifted at a covered point",
            )
            ensure(ring.is_unit(expected), "covered value is no longer a unit")
        poly = result
        covered.append(q_pt)
    return poly

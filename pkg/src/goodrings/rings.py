"""Concrete ring instances and the ring-spec / element-literal grammars.

Ring specs: Z | Z/<n> | GF(<p>) | GF(<p>)[T] | Q[T] | prod(<spec>,...) | locQ(<p>).
Element literals: integers; rationals a/b; polynomials in T such as T^2-3/2*T+1;
tuples (e1,e2,...); localized elements (<poly>)/(<poly>). Formatting inverts
parsing on canonical forms.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence

from . import polyuniv as pu
from .core import InfiniteRingError, ParseError, Ring

_INT_RE = re.compile(r"^[+-]?[0-9]+$")


def _int_xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _int_chain(xs: Sequence[int]) -> tuple[int, list[int]]:
    """Running extended gcd over a list: (g, coeffs) with sum(c*x) = g >= 0."""
    g = 0
    coeffs: list[int] = []
    for x in xs:
        g2, s, t = _int_xgcd(g, x)
        coeffs = [c * s for c in coeffs]
        coeffs.append(t)
        g = g2
    return g, coeffs


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _split_top_level(text: str, sep: str) -> list[str]:
    """Split on sep at parenthesis depth 0."""
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses", i)
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ParseError("unbalanced parentheses", len(text) - 1)
    parts.append(text[start:])
    return parts


# ---------------------------------------------------------------------------
# shared univariate-in-T element grammar


def _poly_parse_T(text: str, parse_coeff, field) -> tuple:
    """Parse a polynomial literal in T into an ascending coefficient tuple."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial literal")
    # split into signed terms at depth-0 +/- (not in leading position)
    terms = []
    depth = 0
    start = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start:
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    coeffs: dict[int, object] = {}
    for term in terms:
        if term in ("+", "-") or not term:
            raise ParseError(f"malformed term in {text!r}")
        sign = 1
        if term[0] == "+":
            term = term[1:]
        elif term[0] == "-":
            sign = -1
            term = term[1:]
        exp = 0
        coeff = field.one()
        saw_coeff = False
        for factor in term.split("*"):
            m = re.match(r"^T(\^([0-9]+))?$", factor)
            if m:
                exp += int(m.group(2)) if m.group(2) else 1
            else:
                try:
                    c = parse_coeff(factor)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad coefficient {factor!r} in {text!r}") from exc
                coeff = field.mul(coeff, c)
                saw_coeff = True
        if exp == 0 and not saw_coeff:
            raise ParseError(f"malformed term in {text!r}")
        if sign < 0:
            coeff = field.neg(coeff)
        prev = coeffs.get(exp, field.zero())
        coeffs[exp] = field.add(prev, coeff)
    out = [field.zero()] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return pu.trim(field, out)


def _poly_format_T(poly: tuple, fmt_coeff, field) -> str:
    if not poly:
        return "0"
    pieces = []
    for e in range(len(poly) - 1, -1, -1):
        c = poly[e]
        if field.is_zero(c):
            continue
        cs = fmt_coeff(c)
        if e == 0:
            pieces.append(cs)
        else:
            var = "T" if e == 1 else f"T^{e}"
            if cs == "1":
                pieces.append(var)
            elif cs == "-1":
                pieces.append("-" + var)
            else:
                pieces.append(f"{cs}*{var}")
    out = pieces[0]
    for piece in pieces[1:]:
        out += piece if piece.startswith("-") else "+" + piece
    return out


# ---------------------------------------------------------------------------
# the integers


class Integers(Ring):
    """Arbitrary-precision integers."""

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def unit_inverse(self, x):
        return x if x in (1, -1) else None

    def bezout(self, xs):
        g, coeffs = _int_chain(xs)
        return tuple(coeffs) if g == 1 else None

    def reduce_mod(self, a, x):
        return x % abs(a) if a else x

    def unit_residue_witness(self, a, r):
        m = abs(a)
        if m == 0:
            return (r, 0) if r in (1, -1) else None
        for eps in (1, -1):
            if (r - eps) % m == 0:
                return eps, (eps - r) // a
        return None

    def divide_exact(self, y, x):
        if x == 0:
            return 0 if y == 0 else None
        q, rem = divmod(y, x)
        return q if rem == 0 else None

    def units_count(self):
        return 2

    def quotient_size(self, a):
        return abs(a) if a else None

    def quotient_residues(self, a):
        if a == 0:
            raise InfiniteRingError("Z/0 is infinite")
        return iter(range(abs(a)))

    def unit_image_in_quotient(self, a):
        m = abs(a)
        if m == 0:
            return {1, -1}
        return {1 % m, (m - 1) % m}

    def parse_element(self, text):
        t = text.replace(" ", "")
        if not _INT_RE.match(t):
            raise ParseError(f"not an integer literal: {text!r}")
        return int(t)

    def format_element(self, x):
        return str(x)

    def spec_string(self):
        return "Z"


# ---------------------------------------------------------------------------
# Z/n and GF(p)


class IntegersMod(Ring):
    """Residues mod n >= 1, least nonnegative representatives. n = 1 is the
    zero ring, where 0 is a unit."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("modulus must be at least 1")
        self.n = n
        self._unit_map_cache: dict[int, dict[int, int]] = {}

    def zero(self):
        return 0

    def one(self):
        return 1 % self.n

    def add(self, x, y):
        return (x + y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def unit_inverse(self, x):
        if gcd(x, self.n) != 1:
            return None
        return pow(x, -1, self.n)

    def bezout(self, xs):
        g, coeffs = _int_chain(list(xs) + [self.n])
        if g != 1:
            return None
        return tuple(c % self.n for c in coeffs[:-1])

    def reduce_mod(self, a, x):
        return x % gcd(a, self.n)

    def _preferred_units(self) -> list[int]:
        n = self.n
        first = [1 % n]
        if (n - 1) % n not in first:
            first.append((n - 1) % n)
        rest = [u for u in range(n) if gcd(u, n) == 1 and u not in first]
        return first + rest

    def unit_residue_witness(self, a, r):
        n = self.n
        if a == 0:
            return (r, 0) if gcd(r, n) == 1 else None
        g = gcd(a, n)
        umap = self._unit_map_cache.get(a)
        if umap is None:
            umap = {}
            for eps in self._preferred_units():
                umap.setdefault(eps % g, eps)
            self._unit_map_cache[a] = umap
        eps = umap.get(r % g)
        if eps is None:
            return None
        # solve a*shift = eps - r (mod n); solvable since g | eps - r
        shift = (((eps - r) // g) * pow(a // g, -1, n // g)) % (n // g)
        assert (r + shift * a) % n == eps
        return eps, shift

    def divide_exact(self, y, x):
        n = self.n
        if x == 0:
            return 0 if y % n == 0 else None
        g = gcd(x, n)
        if y % g:
            return None
        z = ((y // g) * pow(x // g, -1, n // g)) % n
        assert (x * z - y) % n == 0
        return z

    def is_finite(self):
        return True

    def size(self):
        return self.n

    def elements(self):
        return iter(range(self.n))

    def parse_element(self, text):
        t = text.replace(" ", "")
        if not _INT_RE.match(t):
            raise ParseError(f"not an integer literal: {text!r}")
        return int(t) % self.n

    def format_element(self, x):
        return str(x)

    def spec_string(self):
        return f"Z/{self.n}"


class PrimeField(IntegersMod):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        super().__init__(p)

    def spec_string(self):
        return f"GF({self.n})"


# ---------------------------------------------------------------------------
# GF(p)[T]


class PolyOverPrimeField(Ring):
    """Univariate polynomials over GF(p): ascending coefficient tuples with
    no trailing zeros, () the zero polynomial."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.field = pu.FpField(p)

    def zero(self):
        return ()

    def one(self):
        return (1,)

    def add(self, x, y):
        return pu.add(self.field, x, y)

    def neg(self, x):
        return pu.neg(self.field, x)

    def mul(self, x, y):
        return pu.mul(self.field, x, y)

    def unit_inverse(self, x):
        if len(x) != 1:
            return None
        return (pow(x[0], -1, self.p),)

    def _chain(self, xs):
        g: tuple = ()
        coeffs: list[tuple] = []
        for f in xs:
            g2, s, t = pu.xgcd(self.field, g, f)
            coeffs = [pu.mul(self.field, c, s) for c in coeffs]
            coeffs.append(t)
            g = g2
        return g, coeffs

    def bezout(self, xs):
        g, coeffs = self._chain(xs)
        return tuple(coeffs) if g == self.one() else None

    def reduce_mod(self, a, x):
        if not a:
            return x
        if len(a) == 1:
            return ()
        _, r = pu.divmod_poly(self.field, x, a)
        return r

    def unit_residue_witness(self, a, r):
        if not a:
            inv = self.unit_inverse(r)
            return (r, ()) if inv is not None else None
        if len(a) == 1:
            # every class is the whole ring; land on 1
            shift = self.mul(self.sub(self.one(), r), self.unit_inverse(a))
            return self.one(), shift
        if len(r) == 1:
            return r, ()
        return None

    def divide_exact(self, y, x):
        if not x:
            return () if not y else None
        q, rem = pu.divmod_poly(self.field, y, x)
        return q if not rem else None

    def units_count(self):
        return self.p - 1

    def quotient_size(self, a):
        if not a:
            return None
        return self.p ** pu.deg(a) if len(a) > 1 else 1

    def quotient_residues(self, a):
        if not a:
            raise InfiniteRingError("quotient by zero is infinite here")
        d = pu.deg(a)
        for tup in itertools.product(range(self.p), repeat=d):
            yield pu.trim(self.field, tup)

    def unit_image_in_quotient(self, a):
        if not a:
            return None
        if len(a) == 1:
            return {()}
        return {(c,) for c in range(1, self.p)}

    def parse_element(self, text):
        def coeff(tok: str) -> int:
            if not _INT_RE.match(tok):
                raise ValueError(tok)
            return int(tok) % self.p

        return _poly_parse_T(text, coeff, self.field)

    def format_element(self, x):
        return _poly_format_T(x, str, self.field)

    def spec_string(self):
        return f"GF({self.p})[T]"


# ---------------------------------------------------------------------------
# Q[T]


def _parse_fraction(tok: str) -> Fraction:
    if not re.match(r"^[+-]?[0-9]+(/[0-9]+)?$", tok):
        raise ValueError(tok)
    return Fraction(tok)


class RationalPoly(Ring):
    """Univariate polynomials over Q: ascending Fraction tuples."""

    def __init__(self):
        self.field = pu.QField()

    def zero(self):
        return ()

    def one(self):
        return (Fraction(1),)

    def add(self, x, y):
        return pu.add(self.field, x, y)

    def neg(self, x):
        return pu.neg(self.field, x)

    def mul(self, x, y):
        return pu.mul(self.field, x, y)

    def unit_inverse(self, x):
        if len(x) != 1:
            return None
        return (1 / x[0],)

    def _chain(self, xs):
        g: tuple = ()
        coeffs: list[tuple] = []
        for f in xs:
            g2, s, t = pu.xgcd(self.field, g, f)
            coeffs = [pu.mul(self.field, c, s) for c in coeffs]
            coeffs.append(t)
            g = g2
        return g, coeffs

    def bezout(self, xs):
        g, coeffs = self._chain(xs)
        return tuple(coeffs) if g == self.one() else None

    def reduce_mod(self, a, x):
        if not a:
            return x
        if len(a) == 1:
            return ()
        _, r = pu.divmod_poly(self.field, x, a)
        return r

    def unit_residue_witness(self, a, r):
        if not a:
            return (r, ()) if len(r) == 1 else None
        if len(a) == 1:
            shift = self.mul(self.sub(self.one(), r), self.unit_inverse(a))
            return self.one(), shift
        if len(r) == 1:
            return r, ()
        return None

    def divide_exact(self, y, x):
        if not x:
            return () if not y else None
        q, rem = pu.divmod_poly(self.field, y, x)
        return q if not rem else None

    def quotient_size(self, a):
        return 1 if len(a) == 1 else None

    def unit_image_in_quotient(self, a):
        return {()} if len(a) == 1 else None

    def parse_element(self, text):
        return _poly_parse_T(text, _parse_fraction, self.field)

    def format_element(self, x):
        return _poly_format_T(x, str, self.field)

    def spec_string(self):
        return "Q[T]"


# ---------------------------------------------------------------------------
# finite products


class ProductRing(Ring):
    """Componentwise product of factor rings; elements are tuples."""

    def __init__(self, factors: Sequence[Ring]):
        if not factors:
            raise ValueError("product of no rings")
        self.factors = tuple(factors)
        self.unit_residue_complete = all(f.unit_residue_complete for f in self.factors)

    def _map(self, op, *elts):
        return tuple(op(f, *parts) for f, *parts in zip(self.factors, *elts))

    def zero(self):
        return tuple(f.zero() for f in self.factors)

    def one(self):
        return tuple(f.one() for f in self.factors)

    def add(self, x, y):
        return self._map(lambda f, a, b: f.add(a, b), x, y)

    def neg(self, x):
        return self._map(lambda f, a: f.neg(a), x)

    def mul(self, x, y):
        return self._map(lambda f, a, b: f.mul(a, b), x, y)

    def unit_inverse(self, x):
        invs = []
        for f, c in zip(self.factors, x):
            inv = f.unit_inverse(c)
            if inv is None:
                return None
            invs.append(inv)
        return tuple(invs)

    def bezout(self, xs):
        per_factor = []
        for i, f in enumerate(self.factors):
            cert = f.bezout([x[i] for x in xs])
            if cert is None:
                return None
            per_factor.append(cert)
        return tuple(tuple(cert[j] for cert in per_factor) for j in range(len(xs)))

    def reduce_mod(self, a, x):
        return self._map(lambda f, m, v: f.reduce_mod(m, v), a, x)

    def unit_residue_witness(self, a, r):
        eps_parts, shift_parts = [], []
        for f, m, v in zip(self.factors, a, r):
            hit = f.unit_residue_witness(m, v)
            if hit is None:
                return None
            eps_parts.append(hit[0])
            shift_parts.append(hit[1])
        return tuple(eps_parts), tuple(shift_parts)

    def divide_exact(self, y, x):
        parts = []
        for f, num, den in zip(self.factors, y, x):
            z = f.divide_exact(num, den)
            if z is None:
                return None
            parts.append(z)
        return tuple(parts)

    def is_finite(self):
        return all(f.is_finite() for f in self.factors)

    def size(self):
        n = 1
        for f in self.factors:
            n *= f.size()
        return n

    def elements(self):
        return itertools.product(*(f.elements() for f in self.factors))

    def units_count(self):
        n = 1
        for f in self.factors:
            c = f.units_count()
            if c is None:
                return None
            n *= c
        return n

    def quotient_size(self, a):
        n = 1
        for f, m in zip(self.factors, a):
            s = f.quotient_size(m)
            if s is None:
                return None
            n *= s
        return n

    def quotient_residues(self, a):
        its = [f.quotient_residues(m) for f, m in zip(self.factors, a)]
        return itertools.product(*its)

    def unit_image_in_quotient(self, a):
        images = []
        for f, m in zip(self.factors, a):
            img = f.unit_image_in_quotient(m)
            if img is None:
                return None
            images.append(sorted(img, key=repr))
        return set(itertools.product(*images))

    def parse_element(self, text):
        t = text.replace(" ", "")
        if not (t.startswith("(") and t.endswith(")")):
            raise ParseError(f"tuple literal must be parenthesized: {text!r}")
        parts = _split_top_level(t[1:-1], ",")
        if len(parts) != len(self.factors):
            raise ParseError(
                f"expected {len(self.factors)} components, got {len(parts)}"
            )
        return tuple(f.parse_element(p) for f, p in zip(self.factors, parts))

    def format_element(self, x):
        return "(" + ",".join(f.format_element(c) for f, c in zip(self.factors, x)) + ")"

    def spec_string(self):
        return "prod(" + ",".join(f.spec_string() for f in self.factors) + ")"


# ---------------------------------------------------------------------------
# Q[T] localized away from {0} and the powers of p


class LocalizedRationalPoly(Ring):
    """Fractions num/den of rational polynomials with den in the
    multiplicative set S of polynomials with no root in {0} union {p^k, k>=1}.
    Canonical form: den monic, gcd(num, den) = 1."""

    unit_residue_complete = False

    def __init__(self, p: int, search_limit: int = 400):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.field = pu.QField()
        # witness search tries eps = r + c*a over this many scalar candidates
        self.search_limit = search_limit

    # -- canonical form helpers

    def _is_forbidden_value(self, z: Fraction) -> bool:
        if z == 0:
            return True
        if z.denominator != 1 or z < self.p:
            return False
        m = int(z)
        while m % self.p == 0:
            m //= self.p
        return m == 1

    def _in_S(self, f: tuple) -> bool:
        if not f:
            return False
        if f[0] == 0:
            return False
        return not any(self._is_forbidden_value(z) for z in pu.rational_roots(f))

    def _reduced(self, num: tuple, den: tuple) -> tuple:
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (Fraction(1),))
        g, _, _ = pu.xgcd(self.field, num, den)
        if pu.deg(g) >= 1:
            num, _ = pu.divmod_poly(self.field, num, g)
            den, _ = pu.divmod_poly(self.field, den, g)
        lc = den[-1]
        den = pu.monic(self.field, den)
        num = pu.scale(self.field, 1 / lc, num)
        return num, den

    def _make(self, num: tuple, den: tuple):
        num, den = self._reduced(num, den)
        assert self._in_S(den), "denominator left the multiplicative set"
        return (num, den)

    def _z_part(self, f: tuple) -> tuple:
        """Monic product of (T - z)^e over the roots z of f lying in
        {0} union {p^k}."""
        v = 0
        while v < len(f) and f[v] == 0:
            v += 1
        g = tuple([Fraction(0)] * v + [Fraction(1)])
        body = f[v:]
        if pu.deg(body) >= 1:
            for z in pu.rational_roots(body):
                if z != 0 and self._is_forbidden_value(z):
                    lin = (-z, Fraction(1))
                    while True:
                        q, r = pu.divmod_poly(self.field, body, lin)
                        if r:
                            break
                        body = q
                        g = pu.mul(self.field, g, lin)
        return g

    # -- ring operations

    def zero(self):
        return ((), (Fraction(1),))

    def one(self):
        return ((Fraction(1),), (Fraction(1),))

    def add(self, x, y):
        (n1, d1), (n2, d2) = x, y
        num = pu.add(
            self.field,
            pu.mul(self.field, n1, d2),
            pu.mul(self.field, n2, d1),
        )
        return self._make(num, pu.mul(self.field, d1, d2))

    def neg(self, x):
        return (pu.neg(self.field, x[0]), x[1])

    def mul(self, x, y):
        (n1, d1), (n2, d2) = x, y
        return self._make(
            pu.mul(self.field, n1, n2), pu.mul(self.field, d1, d2)
        )

    def unit_inverse(self, x):
        num, den = x
        if not self._in_S(num):
            return None
        return self._make(den, num)

    def bezout(self, xs):
        nums = [x[0] for x in xs]
        g: tuple = ()
        coeffs: list[tuple] = []
        for f in nums:
            g2, s, t = pu.xgcd(self.field, g, f)
            coeffs = [pu.mul(self.field, c, s) for c in coeffs]
            coeffs.append(t)
            g = g2
        if not g:
            return None
        if self._z_part(g) != (Fraction(1),):
            return None
        # sum c_i * num_i = g, so sum (c_i d_i / g) x_i = 1; g is in S
        return tuple(
            self._make(pu.mul(self.field, c, x[1]), g)
            for c, x in zip(coeffs, xs)
        )

    def reduce_mod(self, a, x):
        if self.eq(a, self.zero()):
            return x
        g = self._z_part(a[0])
        if g == (Fraction(1),):
            return self.zero()
        num, den = x
        gg, s, _ = pu.xgcd(self.field, den, g)
        assert gg == (Fraction(1),), "denominator not invertible mod the ideal"
        _, res = pu.divmod_poly(
            self.field, pu.mul(self.field, num, s), g
        )
        return (res, (Fraction(1),))

    def _scalar_candidates(self) -> Iterator[Fraction]:
        yield Fraction(0)
        produced = 1
        s = 2
        while produced < self.search_limit:
            for den in range(1, s):
                num = s - den
                if gcd(num, den) != 1:
                    continue
                yield Fraction(num, den)
                yield Fraction(-num, den)
                produced += 2
                if produced >= self.search_limit:
                    return
            s += 1

    def unit_residue_witness(self, a, r):
        if self.eq(a, self.zero()):
            return (r, self.zero()) if self.unit_inverse(r) is not None else None
        if self.unit_inverse(a) is not None:
            shift = self.mul(self.sub(self.one(), r), self.unit_inverse(a))
            return self.one(), shift
        # bounded deterministic search over scalar shifts
        for c in self._scalar_candidates():
            shift = ((c,) if c else (), (Fraction(1),))
            shift = self._make(shift[0], shift[1])
            eps = self.add(r, self.mul(shift, a))
            if self.unit_inverse(eps) is not None:
                return eps, shift
        return None

    def divide_exact(self, y, x):
        if self.eq(x, self.zero()):
            return self.zero() if self.eq(y, self.zero()) else None
        num, den = self._reduced(
            pu.mul(self.field, y[0], x[1]),
            pu.mul(self.field, y[1], x[0]),
        )
        if not self._in_S(den):
            return None
        return (num, den)

    def quotient_size(self, a):
        if self.eq(a, self.zero()):
            return None
        return 1 if self._z_part(a[0]) == (Fraction(1),) else None

    def unit_image_in_quotient(self, a):
        if self.quotient_size(a) == 1:
            return {self.zero()}
        return None

    def parse_element(self, text):
        t = text.replace(" ", "")
        if t.startswith("("):
            parts = _split_top_level(t, "/")
            if (
                len(parts) == 2
                and parts[0].startswith("(")
                and parts[0].endswith(")")
                and parts[1].startswith("(")
                and parts[1].endswith(")")
            ):
                num = _poly_parse_T(parts[0][1:-1], _parse_fraction, self.field)
                den = _poly_parse_T(parts[1][1:-1], _parse_fraction, self.field)
                if not den:
                    raise ParseError("zero denominator")
                num, den = self._reduced(num, den)
                if not self._in_S(den):
                    raise ParseError(
                        f"denominator not in the multiplicative set: {text!r}"
                    )
                return (num, den)
            if len(parts) != 1:
                raise ParseError(f"malformed localized element: {text!r}")
        num = _poly_parse_T(t, _parse_fraction, self.field)
        return (num, (Fraction(1),))

    def format_element(self, x):
        num, den = x
        return (
            "("
            + _poly_format_T(num, str, self.field)
            + ")/("
            + _poly_format_T(den, str, self.field)
            + ")"
        )

    def spec_string(self):
        return f"locQ({self.p})"


# ---------------------------------------------------------------------------
# ring-spec parser


def parse_ring(spec: str) -> Ring:
    s = spec.strip()
    ring, pos = _parse_ring_at(s, 0)
    if pos != len(s):
        raise ParseError(f"unexpected trailing text in ring spec {spec!r}", pos)
    return ring


def _scan_int(s: str, i: int) -> tuple[int, int]:
    j = i
    while j < len(s) and s[j].isdigit():
        j += 1
    if j == i:
        raise ParseError("expected an integer in ring spec", i)
    return int(s[i:j]), j


def _expect(s: str, i: int, token: str) -> int:
    if not s.startswith(token, i):
        raise ParseError(f"expected {token!r} in ring spec", i)
    return i + len(token)


def _parse_ring_at(s: str, i: int) -> tuple[Ring, int]:
    if s.startswith("prod(", i):
        i += len("prod(")
        factors = []
        while True:
            ring, i = _parse_ring_at(s, i)
            factors.append(ring)
            if i < len(s) and s[i] == ",":
                i += 1
                continue
            i = _expect(s, i, ")")
            return ProductRing(factors), i
    if s.startswith("locQ(", i):
        start = i + len("locQ(")
        p, j = _scan_int(s, start)
        j = _expect(s, j, ")")
        if not _is_prime(p):
            raise ParseError(f"{p} is not prime", start)
        return LocalizedRationalPoly(p), j
    if s.startswith("GF(", i):
        start = i + len("GF(")
        p, j = _scan_int(s, start)
        j = _expect(s, j, ")")
        if not _is_prime(p):
            raise ParseError(f"{p} is not prime", start)
        if s.startswith("[T]", j):
            return PolyOverPrimeField(p), j + 3
        return PrimeField(p), j
    if s.startswith("Q[T]", i):
        return RationalPoly(), i + 4
    if s.startswith("Z/", i):
        start = i + 2
        n, j = _scan_int(s, start)
        if n < 1:
            raise ParseError("modulus must be at least 1", start)
        return IntegersMod(n), j
    if s.startswith("Z", i):
        return Integers(), i + 1
    raise ParseError(f"unrecognized ring spec {s!r}", i)

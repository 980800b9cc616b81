"""Exact univariate polynomial and rational-function arithmetic over Q.

Polynomials are kept in the formal variable ``m`` with Fraction
coefficients throughout; nothing here ever rounds.  Rational roots are
extracted exactly (rational root theorem plus synthetic deflation) and
only the root-free residual factor is handed to floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

RationalLike = int | Fraction


class NonZeroRemainder(ValueError):
    """Exact polynomial division left a remainder."""


class NotConstant(ValueError):
    """A rational function expected to be constant is not."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Poly:
    """Univariate polynomial with Fraction coefficients, ascending degree.

    Immutable; trailing zero coefficients are stripped so the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c) -> "Poly":
        return Poly([_as_fraction(c)])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    @staticmethod
    def linear(a, b) -> "Poly":
        """The polynomial a*x + b."""
        return Poly([_as_fraction(b), _as_fraction(a)])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = _as_fraction(scalar)
        return Poly([c / s for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int input."""
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else float(c))
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)) by Horner over polynomials."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.const(c)
        return acc

    def shifted_arg(self, delta) -> "Poly":
        """self(x + delta)."""
        return self.compose(Poly([_as_fraction(delta), 1]))

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.leading()

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        den = other.coeffs
        dq = len(rem) - len(den)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            if len(rem) < len(den) + k:
                continue
            c = rem[len(den) + k - 1] / den[-1]
            quo[k] = c
            if c:
                for j, d in enumerate(den):
                    rem[j + k] -= c * d
        return Poly(quo), Poly(rem)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if i == 0 else (f"{c}*m^{i}" if i > 1 else f"{c}*m"))
        return "Poly(" + " + ".join(terms) + ")"

    def serialize(self) -> list[str]:
        """Coefficient list as "p/q" strings, ascending degree."""
        return [format_fraction(c) for c in self.coeffs]


ZERO = Poly()
ONE = Poly.const(1)
X = Poly.x()


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def poly_shift(p: Poly) -> Poly:
    """p(x - 1), the substitution behind the h-polynomial."""
    return p.shifted_arg(-1)


def poly_divide_exact(p: Poly, q: Poly) -> Poly:
    """p / q, raising NonZeroRemainder unless the division is exact."""
    quo, rem = p.divmod(q)
    if not rem.is_zero():
        raise NonZeroRemainder(f"{p!r} not divisible by {q!r}")
    return quo


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over Q."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def binomial_poly(p: Poly, k: int) -> Poly:
    """binom(p, k) expanded as the falling factorial p(p-1)...(p-k+1)/k!."""
    if k < 0:
        return ZERO
    out = ONE
    fact = 1
    for t in range(k):
        out = out * (p - t)
        fact *= t + 1
    return out / fact


class RatFun:
    """Quotient of two Polys, reduced by gcd, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if not g.is_zero() and g.degree >= 1:
            num = poly_divide_exact(num, g)
            den = poly_divide_exact(den, g)
        lead = den.leading()
        object.__setattr__(self, "num", num / lead)
        object.__setattr__(self, "den", den / lead)

    def __setattr__(self, *a):
        raise AttributeError("RatFun is immutable")

    def constant_value(self) -> Fraction:
        """The constant this function equals, else NotConstant."""
        if self.num.is_zero():
            return Fraction(0)
        if self.den.degree == 0 and self.num.degree == 0:
            return self.num.coeffs[0] / self.den.coeffs[0]
        raise NotConstant(f"{self.num!r} / {self.den!r} is not constant")

    def is_constant(self) -> bool:
        try:
            self.constant_value()
            return True
        except NotConstant:
            return False

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"


def _divisors(n: int) -> list[int]:
    """All positive divisors, via trial-division factoring.

    Values here come from cleared-denominator forms of the face-count
    polynomials, so any prime factor beyond the trial bound is left as
    a single large prime.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of zero")
    factors: dict[int, int] = {}
    rem = n
    p = 2
    while p * p <= rem and p < 1_000_000:
        while rem % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rem //= p
        p += 1 if p == 2 else 2
    if rem > 1:
        factors[rem] = factors.get(rem, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [d * prime**e for d in divs for e in range(mult + 1)]
    return sorted(divs)


def _primitive_int_coeffs(p: Poly) -> list[int]:
    """Integer coefficient list of p scaled by a positive rational."""
    from math import lcm

    denls = lcm(*[c.denominator for c in p.coeffs]) if p.coeffs else 1
    ints = [int(c * denls) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return [c // g for c in ints]


@dataclass(frozen=True)
class RootSet:
    """Exact rational roots plus a root-free residual factor.

    rational: (root, multiplicity) pairs, roots ascending.
    residual: primitive integer-coefficient Poly without rational roots
        (None when the input splits over Q).
    residual_approx: real roots of the residual to ~1e-9, ascending.
    """

    rational: tuple[tuple[Fraction, int], ...]
    residual: Poly | None
    residual_approx: tuple[float, ...]

    def rational_multiset(self) -> list[Fraction]:
        out = []
        for r, mult in self.rational:
            out.extend([r] * mult)
        return out

    def all_real_approx(self) -> list[float]:
        vals = [float(r) for r in self.rational_multiset()]
        vals.extend(self.residual_approx)
        return sorted(vals)


def _real_roots_numeric(p: Poly, tol: float = 1e-9) -> list[float]:
    """Real roots of p via companion matrix, Newton-polished."""
    coeffs = [float(c) for c in p.coeffs]
    roots = np.roots(coeffs[::-1])
    dp = p.derivative()
    out = []
    for z in roots:
        if abs(z.imag) > 1e-6 * (1 + abs(z.real)):
            continue
        r = float(z.real)
        for _ in range(50):
            fr = p(r)
            dfr = dp(r)
            if dfr == 0:
                break
            step = fr / dfr
            r -= step
            if abs(step) < tol * (1 + abs(r)):
                break
        out.append(r)
    return sorted(out)


def rational_roots(p: Poly) -> RootSet:
    """Factor out every rational root of p, exactly.

    Candidates come from the rational root theorem applied to the
    primitive integer form; each is deflated with multiplicity.  The
    returned factorization is re-multiplied and checked against the
    input before returning.
    """
    if p.is_zero():
        raise ValueError("rational_roots of the zero polynomial")
    found: list[tuple[Fraction, int]] = []
    work = Poly(_primitive_int_coeffs(p))

    # root 0 first: factor out x^k
    k0 = 0
    while not work.is_zero() and work.coeffs[0] == 0:
        work = Poly(work.coeffs[1:])
        k0 += 1
    if k0:
        found.append((Fraction(0), k0))

    if work.degree >= 1:
        a0 = int(work.coeffs[0])
        an = int(work.leading())
        cands = sorted(
            {Fraction(s * pnum, pden) for pnum in _divisors(a0)
             for pden in _divisors(an) for s in (1, -1)}
        )
        for r in cands:
            mult = 0
            while work.degree >= 1 and work(r) == 0:
                work = poly_divide_exact(work, Poly([-r, 1]))
                mult += 1
            if mult:
                found.append((r, mult))

    found.sort(key=lambda t: t[0])
    if work.degree >= 1:
        residual = Poly(_primitive_int_coeffs(work))
        approx = tuple(_real_roots_numeric(residual))
    else:
        residual = None
        approx = ()

    # exact audit: product of found factors times residual matches input
    rebuilt = residual if residual is not None else ONE
    for r, mult in found:
        for _ in range(mult):
            rebuilt = rebuilt * Poly([-r, 1])
    scale = p.leading() / rebuilt.leading()
    assert rebuilt * scale == p, "root extraction lost a factor"

    return RootSet(tuple(found), residual, approx)

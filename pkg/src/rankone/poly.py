"""Exact univariate polynomials, Sturm sequences, and derivative-sign tests.

Coefficients are Fractions, stored low degree first.  The zero polynomial
has degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import NotMonicError, ZeroPolynomialError


def _trim(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial with exact rational coefficients.

    >>> f = UniPoly.from_coeffs([-2, 0, 1])   # t^2 - 2
    >>> f.degree
    2
    >>> f(Fraction(3, 2))
    Fraction(1, 4)
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", _trim(tuple(Fraction(c) for c in self.coeffs))
        )

    @classmethod
    def from_coeffs(cls, coeffs) -> UniPoly:
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls) -> UniPoly:
        return cls(())

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> UniPoly:
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def from_roots(cls, roots) -> UniPoly:
        """Monic polynomial with the given (rational) roots."""
        f = cls.constant(1)
        for r in roots:
            f = f * cls((-Fraction(r), Fraction(1)))
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: UniPoly) -> UniPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(tuple(out))

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 1)
        r = list(self.coeffs)
        d = other.degree
        lc = other.coeffs[-1]
        while len(r) - 1 >= d and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for i in range(d + 1):
                r[k + i] -= f * other.coeffs[i]
            r.pop()
        return UniPoly(tuple(q)), UniPoly(tuple(r))

    def __mod__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[1]

    def derivative(self) -> UniPoly:
        return UniPoly(tuple(c * i for i, c in enumerate(self.coeffs) if i > 0))

    def monic(self) -> UniPoly:
        return self * (1 / self.leading_coefficient)

    def primitive_int_coeffs(self) -> tuple[int, ...]:
        """Integer coefficients after clearing denominators and content."""
        if self.is_zero:
            return ()
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, abs(c))
        return tuple(c // g for c in ints)

    def to_text(self, var: str = "t") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                pw = var if i == 1 else f"{var}^{i}"
                body = pw if mag == 1 else f"{mag}*{pw}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"UniPoly({self.to_text()!r})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q (Euclid)."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def squarefree_part(f: UniPoly) -> UniPoly:
    """f divided by gcd(f, f'): same roots, all simple."""
    if f.is_zero:
        raise ZeroPolynomialError("squarefree part of the zero polynomial")
    g = poly_gcd(f, f.derivative())
    if g.degree <= 0:
        return f
    q, r = divmod(f, g)
    assert r.is_zero
    return q


@dataclass(frozen=True)
class SturmSequence:
    """The canonical remainder sequence f, f', -rem(f, f'), ..."""

    polys: tuple[UniPoly, ...]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]


def sturm_sequence(f: UniPoly) -> SturmSequence:
    """Sturm sequence of f; the remainders are not rescaled."""
    if f.is_zero:
        raise ZeroPolynomialError("Sturm sequence of the zero polynomial")
    chain = [f]
    if f.degree >= 1:
        chain.append(f.derivative())
        while chain[-1].degree >= 1:
            r = -(chain[-2] % chain[-1])
            if r.is_zero:
                break
            chain.append(r)
    return SturmSequence(tuple(chain))


def sign_at_right(p: UniPoly, x: Fraction) -> int:
    """Sign of p just right of x (sign of the first nonvanishing derivative)."""
    g = p
    while not g.is_zero:
        v = g(x)
        if v != 0:
            return 1 if v > 0 else -1
        g = g.derivative()
    return 0


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def count_real_roots(f: UniPoly, a, b) -> int:
    """Number of distinct real roots of f in the half-open interval (a, b].

    Sturm's theorem applied to the squarefree part, with sign sequences
    evaluated as right limits so endpoints at roots need no perturbation.
    """
    if f.is_zero:
        raise ZeroPolynomialError("root counting for the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    g = squarefree_part(f)
    if g.degree == 0:
        return 0
    chain = sturm_sequence(g)
    va = _variations([sign_at_right(p, a) for p in chain])
    vb = _variations([sign_at_right(p, b) for p in chain])
    return va - vb


def cauchy_root_bound(f: UniPoly) -> Fraction:
    """B with all complex roots of f strictly inside |z| < B."""
    if f.is_zero or f.degree == 0:
        return Fraction(1)
    lc = abs(f.coeffs[-1])
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def rational_roots(f: UniPoly) -> list[Fraction]:
    """All rational roots of f (without multiplicity), sorted."""
    if f.is_zero:
        raise ZeroPolynomialError("rational roots of the zero polynomial")
    coeffs = list(f.primitive_int_coeffs())
    roots = set()
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return sorted(roots)
    c0, cn = coeffs[0], coeffs[-1]
    g = UniPoly.from_coeffs(coeffs)
    for p in _divisors(c0):
        for q in _divisors(cn):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and g(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def min_threshold_all_derivs_nonneg(f: UniPoly, width=Fraction(1, 2**32)):
    """Left endpoint of {eps : f^(i)(eps) >= 0 for i = 0..deg-1}, f monic.

    The set is a closed unbounded interval [m, oo).  Returns m as an exact
    Fraction when m is a rational root of some derivative of f, otherwise
    an isolating (lo, hi) pair of Fractions with hi - lo <= width; hi is
    always inside the interval and lo outside.
    """
    if f.is_zero or not f.is_monic:
        raise NotMonicError("threshold test needs a monic polynomial")
    d = f.degree
    if d < 1:
        raise ValueError("need degree >= 1")
    derivs = [f]
    for _ in range(d - 1):
        derivs.append(derivs[-1].derivative())

    def inside(eps: Fraction) -> bool:
        return all(p(eps) >= 0 for p in derivs)

    # m is the largest real root among all derivatives, so if m is rational
    # it is a rational root of some derivative, and it is the only rational
    # root lying inside the interval.
    cands = set()
    for p in derivs:
        cands.update(rational_roots(p))
    for r in sorted(cands, reverse=True):
        if inside(r):
            return r

    bound = cauchy_root_bound(f)
    lo, hi = -bound - 1, bound
    # Gauss-Lucas keeps every derivative's roots inside |z| < bound.
    while hi - lo > width:
        mid = (lo + hi) / 2
        if inside(mid):
            hi = mid
        else:
            lo = mid
    return (lo, hi)

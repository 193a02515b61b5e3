"""Arithmetic in Z[zeta_n]: integer polynomials reduced mod the n-th
cyclotomic polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import UniPoly


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial: divide x^n - 1 by the ones of the
    proper divisors of n.

    >>> cyclotomic_poly(4).to_text('x')
    'x^2 + 1'
    """
    if n < 1:
        raise ValueError("n must be positive")
    f = UniPoly.from_coeffs([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            q, r = divmod(f, cyclotomic_poly(d))
            assert r.is_zero
            f = q
    return f


def _phi_int_coeffs(n: int) -> tuple[int, ...]:
    return tuple(int(c) for c in cyclotomic_poly(n).coeffs)


def _reduce(coeffs: list[int], n: int) -> tuple[int, ...]:
    phi = _phi_int_coeffs(n)
    d = len(phi) - 1
    out = list(coeffs)
    for i in range(len(out) - 1, d - 1, -1):
        c = out[i]
        if c:
            # phi is monic: subtract c * x^(i-d) * phi
            for j, pc in enumerate(phi):
                out[i - d + j] -= c * pc
    del out[d:]
    while out and out[-1] == 0 and len(out) > d:
        out.pop()
    out += [0] * (d - len(out))
    return tuple(out)


@dataclass(frozen=True)
class CyclotomicInt:
    """An element of Z[zeta_n], stored as coefficients of 1, zeta, ...,
    zeta^(deg Phi_n - 1)."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        d = cyclotomic_poly(self.n).degree
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != d:
            coeffs = _reduce(list(coeffs), self.n)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def integer(cls, n: int, value: int) -> CyclotomicInt:
        d = cyclotomic_poly(n).degree
        return cls(n, (int(value),) + (0,) * (d - 1))

    @classmethod
    def zeta_power(cls, n: int, k: int) -> CyclotomicInt:
        k %= n
        return cls(n, tuple(1 if i == k else 0 for i in range(max(k + 1, 1))))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def _binop(self, other, fn) -> CyclotomicInt:
        if isinstance(other, int):
            other = CyclotomicInt.integer(self.n, other)
        if self.n != other.n:
            raise ValueError("mixed cyclotomic orders")
        return CyclotomicInt(
            self.n, tuple(fn(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __neg__(self):
        return CyclotomicInt(self.n, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.n, tuple(c * other for c in self.coeffs))
        if self.n != other.n:
            raise ValueError("mixed cyclotomic orders")
        prod = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        return CyclotomicInt(self.n, _reduce(prod, self.n))

    __rmul__ = __mul__

    def __repr__(self):
        return f"CyclotomicInt(n={self.n}, coeffs={self.coeffs})"

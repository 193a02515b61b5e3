"""Exact semialgebraic description of completable diagonals.

A nonnegative diagonal (x_1, ..., x_d) extends to a rank-one probability
tensor of order n iff sum x_i^(1/n) <= 1.  That region is cut out by
polynomial inequalities: expand the product of t - sum zeta^(s_i) x_i over
all root-of-unity twists, compress the n-divisible exponents, and take
t-derivatives at t = 1.  For odd n the zeroth inequality suffices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .completion import fraction_nthroot, int_nthroot
from .cyclotomic import CyclotomicInt
from .errors import (
    CapExceededError,
    NegativeInputError,
    NonDivisibleExponentError,
    NonRationalCoefficientError,
)
from .multipoly import MultiPoly

EXPANSION_CAP = 64  # on n^d; the product expansion is exponential


@dataclass(frozen=True)
class DiagonalDescription:
    """The polynomial data cutting out the completable diagonal region.

    ``product_poly`` is the full expanded product (rational coefficients),
    ``compressed`` its exponent-compressed form of t-degree n^(d-1), and
    ``inequalities[i]`` the i-th t-derivative of the compressed polynomial
    at t = 1, in the diagonal variables only.
    """

    n: int
    d: int
    product_poly: MultiPoly
    compressed: MultiPoly
    inequalities: tuple


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multinomial(total: int, ks) -> int:
    out = 1
    rem = total
    for k in ks:
        out *= comb(rem, k)
        rem -= k
    return out


def _cyc_mul(a: dict, b: dict, n: int) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            prod = c1 * c2
            if e in out:
                out[e] = out[e] + prod
            else:
                out[e] = prod
    return {e: c for e, c in out.items() if not c.is_zero}


def _twist_factor(n: int, d: int, sigma) -> dict:
    """Terms of (t - x_sigma)^n - x_d^n with cyclotomic coefficients.

    Exponent tuples run over (t, x_1, ..., x_d); sigma twists the first
    d-1 diagonal variables by powers of zeta_n.
    """
    nv = d + 1
    terms: dict = {}
    for m in range(n + 1):
        base = comb(n, m) * (-1) ** m
        for ks in _compositions(m, d - 1):
            coeff = base * _multinomial(m, ks)
            zp = sum(s * k for s, k in zip(sigma, ks)) % n
            e = [0] * nv
            e[0] = n - m
            for i, k in enumerate(ks):
                e[1 + i] = k
            c = CyclotomicInt.zeta_power(n, zp) * coeff
            e = tuple(e)
            if e in terms:
                terms[e] = terms[e] + c
            else:
                terms[e] = c
    e_last = tuple([0] * d + [n])
    c = CyclotomicInt.integer(n, -1)
    terms[e_last] = terms[e_last] + c if e_last in terms else c
    return {e: c for e, c in terms.items() if not c.is_zero}


@lru_cache(maxsize=None)
def build_description(n: int, d: int) -> DiagonalDescription:
    """Expand the twisted product for order n, diagonal length d.

    Raises CapExceededError when n^d exceeds the expansion cap.  The
    rationality and exponent-divisibility assertions are internal
    consistency checks; they can only fire on an implementation bug.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n**d > EXPANSION_CAP:
        raise CapExceededError(f"n^d = {n**d} exceeds the expansion cap {EXPANSION_CAP}")
    variables = ("t",) + tuple(f"x{i}" for i in range(1, d + 1))
    if d == 1:
        product: dict = {
            (n, 0): CyclotomicInt.integer(n, 1),
            (0, n): CyclotomicInt.integer(n, -1),
        }
    else:
        product = {(0,) * (d + 1): CyclotomicInt.integer(n, 1)}
        for sigma in itertools.product(range(n), repeat=d - 1):
            product = _cyc_mul(product, _twist_factor(n, d, sigma), n)
    rational_terms = {}
    for e, c in product.items():
        if not c.is_rational:
            raise NonRationalCoefficientError(
                f"coefficient of {e} did not reduce to a rational: {c}"
            )
        if any(x % n for x in e):
            raise NonDivisibleExponentError(f"exponent {e} not divisible by {n}")
        rational_terms[e] = c.to_fraction()
    product_poly = MultiPoly(variables, rational_terms)
    compressed = MultiPoly(
        variables,
        {tuple(x // n for x in e): c for e, c in rational_terms.items()},
    )
    count = n ** (d - 1)
    ineqs = []
    g = compressed
    for i in range(count):
        if i > 0:
            g = g.derivative("t")
        ineqs.append(g.eliminate("t", 1))
    return DiagonalDescription(
        n=n,
        d=d,
        product_poly=product_poly,
        compressed=compressed,
        inequalities=tuple(ineqs),
    )


def diagonal_membership(n: int, d: int, x) -> bool:
    """Whether the nonnegative diagonal x extends to a rank-one probability
    tensor of order n.  Uses all n^(d-1) derivative inequalities for even
    n and only the zeroth for odd n."""
    x = [Fraction(v) for v in x]
    if len(x) != d:
        raise ValueError(f"expected {d} diagonal values")
    if any(v < 0 for v in x):
        raise NegativeInputError("diagonal values must be nonnegative")
    desc = build_description(n, d)
    point = {f"x{i+1}": v for i, v in enumerate(x)}
    if n % 2 == 1:
        return desc.inequalities[0].evaluate(point) >= 0
    return all(p.evaluate(point) >= 0 for p in desc.inequalities)


class RootSumVerdict(Enum):
    BELOW_ONE = "below-one"
    ABOVE_ONE = "above-one"
    UNDECIDED = "within-eps"


def nth_root_sum_oracle(
    n: int, x, precision_bits: int = 64, max_doublings: int = 4
) -> RootSumVerdict:
    """Rigorous comparison of sum x_i^(1/n) with 1.

    Perfect n-th powers are detected exactly (so exact-boundary points are
    decided, boundary counting as BELOW_ONE); otherwise outward-rounded
    dyadic intervals are summed, doubling the precision up to a cap.
    """
    x = [Fraction(v) for v in x]
    if any(v < 0 for v in x):
        raise NegativeInputError("values must be nonnegative")
    exact_sum = Fraction(0)
    inexact: list[Fraction] = []
    for v in x:
        r = fraction_nthroot(v, n)
        if r is not None:
            exact_sum += r
        else:
            inexact.append(v)
    if not inexact:
        return (
            RootSumVerdict.BELOW_ONE if exact_sum <= 1 else RootSumVerdict.ABOVE_ONE
        )
    prec = precision_bits
    for _ in range(max_doublings + 1):
        scale = 1 << prec
        lo_sum = exact_sum
        hi_sum = exact_sum
        for v in inexact:
            num = v.numerator * (1 << (n * prec))
            den = v.denominator
            lo_r, _ = int_nthroot(num // den, n)
            hi_v = -((-num) // den)  # ceil
            hi_r, exact = int_nthroot(hi_v, n)
            if not exact:
                hi_r += 1
            lo_sum += Fraction(lo_r, scale)
            hi_sum += Fraction(hi_r, scale)
        if hi_sum < 1:
            return RootSumVerdict.BELOW_ONE
        if lo_sum > 1:
            return RootSumVerdict.ABOVE_ONE
        prec *= 2
    return RootSumVerdict.UNDECIDED

"""Sparse multivariate polynomials with exact rational coefficients.

Terms map exponent tuples (one slot per variable in the roster) to
Fractions.  The canonical text form sorts terms by total degree, then
lexicographically by exponent vector, both descending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class MultiPoly:
    variables: tuple[str, ...]
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        nv = len(self.variables)
        for exps, c in self.terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nv:
                raise ValueError("exponent tuple length mismatch")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = Fraction(c)
            if c != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        clean = {e: c for e, c in clean.items() if c != 0}
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "terms", clean)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables) -> MultiPoly:
        return cls(tuple(variables), {})

    @classmethod
    def constant(cls, variables, c) -> MultiPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(c)})

    @classmethod
    def variable(cls, variables, name) -> MultiPoly:
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exps: Fraction(1)})

    # -- predicates / views -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    # -- arithmetic ----------------------------------------------------------

    def _require_same_roster(self, other: MultiPoly):
        if self.variables != other.variables:
            raise ValueError("variable rosters differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.variables, other)
        self._require_same_roster(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        self._require_same_roster(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def derivative(self, name: str) -> MultiPoly:
        i = self.variables.index(name)
        out: dict = {}
        for exps, c in self.terms.items():
            if exps[i] == 0:
                continue
            e = list(exps)
            k = e[i]
            e[i] = k - 1
            e = tuple(e)
            out[e] = out.get(e, Fraction(0)) + c * k
        return MultiPoly(self.variables, out)

    def evaluate(self, point: dict) -> Fraction:
        """Exact evaluation; ``point`` maps every variable name to a rational."""
        vals = [Fraction(point[v]) for v in self.variables]
        powers: list[list[Fraction]] = []
        for i, v in enumerate(vals):
            maxe = max((e[i] for e in self.terms), default=0)
            row = [Fraction(1)]
            for _ in range(maxe):
                row.append(row[-1] * v)
            powers.append(row)
        acc = Fraction(0)
        for exps, c in self.terms.items():
            t = c
            for i, e in enumerate(exps):
                if e:
                    t *= powers[i][e]
            acc += t
        return acc

    def eliminate(self, name: str, value) -> MultiPoly:
        """Substitute an exact value for one variable and drop it from the roster."""
        i = self.variables.index(name)
        value = Fraction(value)
        rest = self.variables[:i] + self.variables[i + 1 :]
        out: dict = {}
        for exps, c in self.terms.items():
            e = exps[:i] + exps[i + 1 :]
            out[e] = out.get(e, Fraction(0)) + c * value ** exps[i]
        return MultiPoly(rest, out)

    def with_variables(self, variables) -> MultiPoly:
        """Re-embed into a larger roster containing the current variables."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.variables]
        out = {}
        for exps, c in self.terms.items():
            e = [0] * len(variables)
            for p, x in zip(pos, exps):
                e[p] = x
            out[tuple(e)] = c
        return MultiPoly(variables, out)

    # -- canonical text ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in canonical order: graded lex, both descending."""
        return sorted(
            self.terms.items(),
            key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])),
        )

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mag = abs(c)
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"

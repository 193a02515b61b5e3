"""Combinatorics of the rank-one parametrization: the 0/1 incidence matrix
of grid indices versus per-axis parameters, its restrictions, lattice
saturation indices, matroid closure, and circuits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import TooLargeError
from .linalg import (
    rank,
    rational_kernel_basis,
    smith_normal_form,
    solve_rational,
)
from .tensor import IndexDomain

# Circuit enumeration is exponential in the number of observed entries.
CIRCUIT_COLUMN_CAP = 24


def parameter_index(domain: IndexDomain):
    """Row labels (axis j, level k) in order: axis-major, level-minor."""
    return [
        (j + 1, k) for j, d in enumerate(domain.dims) for k in range(1, d + 1)
    ]


def _row_offsets(domain: IndexDomain) -> list[int]:
    offs = [0]
    for d in domain.dims:
        offs.append(offs[-1] + d)
    return offs


def column_for_index(domain: IndexDomain, idx) -> np.ndarray:
    """The 0/1 column of an index tuple: one 1 per axis at row (j, i_j)."""
    offs = _row_offsets(domain)
    col = np.zeros(offs[-1], dtype=object)
    col[:] = 0
    for j, i in enumerate(idx):
        col[offs[j] + i - 1] = 1
    return col


@dataclass(frozen=True)
class SegreMatrix:
    """The incidence matrix A with sum(d_j) rows and one column per grid index."""

    domain: IndexDomain
    matrix: np.ndarray
    columns: tuple[tuple[int, ...], ...]


def segre_matrix(domain: IndexDomain) -> SegreMatrix:
    cols = tuple(domain.tuples())
    offs = _row_offsets(domain)
    m = np.zeros((offs[-1], len(cols)), dtype=object)
    m[:, :] = 0
    for c, idx in enumerate(cols):
        for j, i in enumerate(idx):
            m[offs[j] + i - 1, c] = 1
    return SegreMatrix(domain=domain, matrix=m, columns=cols)


def restricted_matrix(domain: IndexDomain, indices) -> np.ndarray:
    """A_E: the columns of the incidence matrix at the given indices (sorted)."""
    indices = sorted(indices)
    offs = _row_offsets(domain)
    m = np.zeros((offs[-1], len(indices)), dtype=object)
    m[:, :] = 0
    for c, idx in enumerate(indices):
        if idx not in domain:
            raise ValueError(f"index {idx} outside domain {domain.dims}")
        for j, i in enumerate(idx):
            m[offs[j] + i - 1, c] = 1
    return m


def saturation_index(a_e: np.ndarray) -> int:
    """Product of the nonzero Smith diagonal entries (1 for an empty matrix).

    Measures the index of the lattice spanned by the columns inside its
    saturation; 1 means saturated, odd governs real completability.
    """
    if a_e.shape[1] == 0:
        return 1
    snf = smith_normal_form(a_e)
    out = 1
    for d in snf.elementary_divisors:
        out *= d
    return out


@lru_cache(maxsize=None)
def _saturation_index_cached(dims: tuple[int, ...], indices) -> int:
    return saturation_index(restricted_matrix(IndexDomain(dims), indices))


def saturation_index_of(domain: IndexDomain, indices) -> int:
    return _saturation_index_cached(domain.dims, tuple(sorted(indices)))


@lru_cache(maxsize=None)
def _closure_cached(dims, indices):
    domain = IndexDomain(dims)
    a_e = restricted_matrix(domain, indices)
    closure = set(indices)
    for idx in domain.tuples():
        if idx in closure:
            continue
        if solve_rational(a_e, column_for_index(domain, idx)) is not None:
            closure.add(idx)
    return frozenset(closure)


def matroid_closure(domain: IndexDomain, indices) -> frozenset:
    """cl(E): the grid indices whose column lies in the rational span of A_E.

    This is the closure in the column matroid of the incidence matrix; for
    a generic tensor these are exactly the finitely determined entries.
    Special (non-generic) tensors may determine more; that refinement is
    out of scope.
    """
    indices = tuple(sorted(indices))
    for idx in indices:
        if idx not in domain:
            raise ValueError(f"index {idx} outside domain {domain.dims}")
    return _closure_cached(domain.dims, indices)


@dataclass(frozen=True)
class Circuit:
    """A minimal dependent set of observed indices with its kernel vector.

    The vector is primitive (gcd 1), first nonzero entry positive, and
    satisfies A_support @ vector == 0; it encodes the binomial equation
    prod T_e^{vector_e^+} == prod T_e^{vector_e^-} on the entries.
    """

    support: tuple[tuple[int, ...], ...]
    vector: tuple[int, ...]


def circuits_of_matrix(m: np.ndarray) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All circuits of the column matroid of an integer matrix.

    Returns (column positions, primitive kernel vector) pairs.  Enumerates
    column subsets of size at most rank+1; a subset is a circuit iff its
    kernel is one-dimensional with full support.
    """
    ncols = m.shape[1]
    if ncols > CIRCUIT_COLUMN_CAP:
        raise TooLargeError(
            f"{ncols} columns exceed the circuit enumeration cap of {CIRCUIT_COLUMN_CAP}"
        )
    r = rank(m)
    out = []
    for size in range(2, r + 2):
        for combo in itertools.combinations(range(ncols), size):
            sub = m[:, list(combo)]
            basis = rational_kernel_basis(sub)
            if len(basis) == 1 and all(x != 0 for x in basis[0]):
                out.append((combo, tuple(int(x) for x in basis[0])))
    return out


@lru_cache(maxsize=None)
def _circuits_cached(dims, indices):
    domain = IndexDomain(dims)
    m = restricted_matrix(domain, indices)
    return tuple(
        Circuit(
            support=tuple(indices[c] for c in combo),
            vector=vec,
        )
        for combo, vec in circuits_of_matrix(m)
    )


def circuits(domain: IndexDomain, indices) -> tuple[Circuit, ...]:
    """All circuits among the given observed indices, with index labels."""
    return _circuits_cached(domain.dims, tuple(sorted(indices)))

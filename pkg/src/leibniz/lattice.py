"""Exhaustive subspace and subalgebra enumeration over small prime fields.

Subspaces of GF(p)^n are enumerated exactly once each through their RREF
canonical form: choose pivot columns, then fill the free positions (entries
to the right of a pivot in a non-pivot column) with arbitrary field
elements.  The count per dimension is the Gaussian binomial coefficient,
which the tests pin down.

Over the rationals no enumeration is possible; the restricted report walks
the finitely many coordinate-aligned hyperplanes containing [L, L] (every
codimension-1 ideal contains [L, L], and any subspace containing it is an
ideal), deciding cyclicity by the nilpotent criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .core import (
    LeibnizAlgebra,
    full_space,
    is_ideal,
    is_subalgebra,
    nilpotency_class,
    product_subspace,
    restrict_to_subalgebra,
)
from .cyclic import cyclic_generator_by_criterion, cyclic_generator_by_scan
from .linalg import GF, Subspace, Vector, basis_vector

MAX_ENUM_DIM = 6
LATTICE_PRIMES = (2, 3, 5)
MAX_LATTICE_DIM = 5


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of GF(p)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    assert num % den == 0
    return num // den


def enumerate_subspaces(ambient: int, p: int):
    """Yield every subspace of GF(p)^ambient exactly once, in canonical order.

    Ordered by dimension, then pivot pattern, then free-entry assignment;
    every yielded basis is already in RREF.
    """
    if ambient > MAX_ENUM_DIM:
        raise ValueError(f"ambient dimension {ambient} exceeds the enumeration limit {MAX_ENUM_DIM}")
    field = GF(p)
    yield Subspace.zero(field, ambient)
    for k in range(1, ambient + 1):
        for pivots in combinations(range(ambient), k):
            pivot_set = set(pivots)
            free = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, ambient)
                if c not in pivot_set
            ]
            for values in product(range(p), repeat=len(free)):
                rows = [[field.zero] * ambient for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = field.one
                for (r, c), v in zip(free, values):
                    rows[r][c] = v
                yield Subspace.from_vectors(field, ambient, rows)


@dataclass(frozen=True)
class LatticeEntry:
    subspace: Subspace
    is_ideal: bool
    is_maximal: bool
    generator: Vector | None  # a cyclic generator, when one exists

    @property
    def is_cyclic(self) -> bool:
        return self.generator is not None


@dataclass(frozen=True)
class SubalgebraLattice:
    algebra: LeibnizAlgebra
    entries: tuple[LatticeEntry, ...]  # graded by dimension

    def maximal(self) -> tuple[LatticeEntry, ...]:
        return tuple(e for e in self.entries if e.is_maximal)


def subalgebra_lattice(algebra: LeibnizAlgebra) -> SubalgebraLattice:
    """All subalgebras with ideal, maximality and cyclicity flags."""
    p = algebra.field.characteristic
    if p not in LATTICE_PRIMES:
        raise ValueError(f"lattice enumeration supports GF(p) for p in {LATTICE_PRIMES}")
    if algebra.dim > MAX_LATTICE_DIM:
        raise ValueError(f"lattice enumeration limited to dimension {MAX_LATTICE_DIM}")
    algebra.ensure_checked()
    subalgebras = [
        s for s in enumerate_subspaces(algebra.dim, p) if is_subalgebra(algebra, s)
    ]
    entries = []
    for s in subalgebras:
        proper = s.dim < algebra.dim
        maximal = proper and not any(
            t.dim > s.dim and t.dim < algebra.dim and s <= t for t in subalgebras
        )
        generator = cyclic_generator_by_scan(algebra, s) if s.dim else None
        entries.append(
            LatticeEntry(
                subspace=s,
                is_ideal=is_ideal(algebra, s),
                is_maximal=maximal,
                generator=generator,
            )
        )
    entries.sort(key=lambda e: (e.subspace.dim, e.subspace.rows))
    return SubalgebraLattice(algebra, tuple(entries))


@dataclass(frozen=True)
class MaximalCyclicReport:
    """Cyclicity verdict for every maximal subalgebra, plus the ideal cross-check."""

    nilpotent: bool
    entries: tuple[LatticeEntry, ...]
    all_maximal_are_ideals: bool | None  # evaluated only when nilpotent

    @property
    def has_maximal_cyclic(self) -> bool:
        return any(e.is_cyclic for e in self.entries)


def maximal_cyclic_report(algebra: LeibnizAlgebra) -> MaximalCyclicReport:
    lattice = subalgebra_lattice(algebra)
    maximal = lattice.maximal()
    nilpotent = nilpotency_class(algebra) is not None
    all_ideals = all(e.is_ideal for e in maximal) if nilpotent else None
    return MaximalCyclicReport(nilpotent, maximal, all_ideals)


@dataclass(frozen=True)
class RationalCandidate:
    subspace: Subspace
    nilpotent: bool
    generator: Vector | None | str  # vector, None, or UNKNOWN


@dataclass(frozen=True)
class RationalCodim1Report:
    """Cyclicity of coordinate-aligned codimension-1 ideals over Q.

    Complete lattice enumeration is impossible over an infinite field, so
    only hyperplanes spanned by [L, L] together with all but one of the
    complementary standard coordinates are examined.
    """

    candidates: tuple[RationalCandidate, ...]


def rational_codim1_report(algebra: LeibnizAlgebra) -> RationalCodim1Report:
    if algebra.field.characteristic != 0:
        raise ValueError("this path is the rational-field fallback")
    algebra.ensure_checked()
    field = algebra.field
    n = algebra.dim
    derived = product_subspace(algebra, full_space(algebra), full_space(algebra))
    complement = [i for i in range(n) if i not in set(derived.pivot_columns())]
    seen = set()
    candidates = []
    for drop in complement:
        vectors = list(derived.rows) + [
            basis_vector(field, n, i) for i in complement if i != drop
        ]
        s = Subspace.from_vectors(field, n, vectors)
        if s.dim != n - 1 or s in seen:
            continue
        seen.add(s)
        if not is_subalgebra(algebra, s):
            continue
        nilpotent = nilpotency_class(restrict_to_subalgebra(algebra, s)) is not None
        generator = cyclic_generator_by_criterion(algebra, s)
        candidates.append(RationalCandidate(s, nilpotent, generator))
    candidates.sort(key=lambda c: c.subspace.rows)
    return RationalCodim1Report(tuple(candidates))

"""Left-normed commutators and single-generator subalgebras.

The chain ln_1(a) = a, ln_{k+1}(a) = [a, ln_k(a)] spans the subalgebra
generated by a.  Cyclicity of a subspace is decided by exhaustive generator
scan over a prime field; over the rationals a nilpotent subalgebra is
cyclic iff its quotient by the derived subspace is one-dimensional (the
derived subspace is contained in every maximal subalgebra, so any preimage
of a quotient generator works).  The non-nilpotent rational case is
reported as `UNKNOWN` rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import (
    LeibnizAlgebra,
    is_subalgebra,
    lower_central_series,
    nilpotency_class,
    product_subspace,
    restrict_to_subalgebra,
)
from .linalg import Field, Scalar, Subspace, Vector, vec_add, vec_is_zero, vec_scale

UNKNOWN = "unknown"


def left_normed(algebra: LeibnizAlgebra, a: Sequence[Scalar], k: int) -> Vector:
    """ln_k(a): ln_1 = a, ln_{k+1} = [a, ln_k]."""
    if k < 1:
        raise ValueError("the commutator index must be >= 1")
    algebra.ensure_checked()
    v = tuple(algebra.field.of(x) for x in a)
    out = v
    for _ in range(k - 1):
        out = algebra.bracket(v, out)
    return out


@dataclass(frozen=True)
class CyclicProbe:
    """Generator, its independent ln-chain, and the subalgebra they span."""

    generator: Vector
    chain: tuple[Vector, ...]
    span: Subspace


def generated_subalgebra(algebra: LeibnizAlgebra, a: Sequence[Scalar]) -> CyclicProbe:
    """The subalgebra <a> = span{ln_k(a)}, with bracket closure verified."""
    algebra.ensure_checked()
    field = algebra.field
    n = algebra.dim
    v = tuple(field.of(x) for x in a)
    chain: list[Vector] = []
    span = Subspace.zero(field, n)
    w = v
    while not span.contains(w):
        chain.append(w)
        span = span.sum(Subspace.from_vectors(field, n, [w]))
        w = algebra.bracket(v, w)
    if not product_subspace(algebra, span, span) <= span:
        raise AssertionError("ln-chain span failed to close under the bracket")
    return CyclicProbe(v, tuple(chain), span)


def generated_by(algebra: LeibnizAlgebra, vectors: Sequence[Sequence[Scalar]]) -> Subspace:
    """Smallest bracket-closed subspace containing the given vectors."""
    algebra.ensure_checked()
    span = Subspace.from_vectors(algebra.field, algebra.dim, vectors)
    while True:
        bigger = span.sum(product_subspace(algebra, span, span))
        if bigger == span:
            return span
        span = bigger


def _ln_tail_span(algebra: LeibnizAlgebra, a: Vector, k: int) -> Subspace:
    """span{ln_t(a) : t >= k}; stabilizes within ambient-dimension further steps."""
    field = algebra.field
    n = algebra.dim
    vecs = []
    w = left_normed(algebra, a, k)
    for _ in range(n + 1):
        vecs.append(w)
        w = algebra.bracket(a, w)
    return Subspace.from_vectors(field, n, vecs)


@dataclass(frozen=True)
class PropositionReport:
    """Pass/fail for the single-generator structure facts, keyed i..vii."""

    results: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.results.values())


def _all_bracketings(algebra: LeibnizAlgebra, a: Vector, copies: int) -> list[Vector]:
    memo: dict[int, list[Vector]] = {1: [a]}

    def rec(k: int) -> list[Vector]:
        if k not in memo:
            out = []
            for split in range(1, k):
                for x in rec(split):
                    for y in rec(k - split):
                        out.append(algebra.bracket(x, y))
            memo[k] = out
        return memo[k]

    return rec(copies)


def proposition_check(
    algebra: LeibnizAlgebra, a: Sequence[Scalar], max_copies: int = 5
) -> PropositionReport:
    """Verify the ln-chain structure facts for one generator.

    (i) products of chain elements with the left factor beyond ln_1 vanish;
    (ii) every bracketing of up to `max_copies` copies of a collapses to the
    matching ln or to zero; (iii)-(vi) the span statements for <a>, its
    derived subalgebra and its lower central series; (vii) [[x, y], z] = 0
    for x, y in <a> and z anywhere.
    """
    algebra.ensure_checked()
    field = algebra.field
    n = algebra.dim
    probe = generated_subalgebra(algebra, a)
    a = probe.generator
    chain = probe.chain
    results: dict[str, bool] = {}

    results["i"] = all(
        vec_is_zero(field, algebra.bracket(x, y))
        for ki, x in enumerate(chain, start=1)
        if ki > 1
        for y in chain
    )

    ok = True
    for copies in range(2, max_copies + 1):
        ln_k = left_normed(algebra, a, copies)
        for w in _all_bracketings(algebra, a, copies):
            if not (vec_is_zero(field, w) or w == ln_k):
                ok = False
    results["ii"] = ok

    results["iii"] = probe.span == generated_by(algebra, [a])

    derived = product_subspace(algebra, probe.span, probe.span)
    results["iv"] = derived == _ln_tail_span(algebra, a, 2)

    if probe.span.dim == 0:
        results["v"] = results["vi"] = True
    else:
        from .core import leibniz_kernel

        restricted = restrict_to_subalgebra(algebra, probe.span)

        def lift(sub: Subspace) -> Subspace:
            vecs = []
            for row in sub.rows:
                w = (field.zero,) * n
                for c, basis_row in zip(row, probe.span.rows):
                    w = vec_add(field, w, vec_scale(field, c, basis_row))
                vecs.append(w)
            return Subspace.from_vectors(field, n, vecs)

        results["v"] = derived == lift(leibniz_kernel(restricted))

        series = lower_central_series(restricted)
        ok = True
        for k in range(1, len(chain) + 2):
            term = series[k - 1] if k <= len(series) else series[-1]
            if lift(term) != _ln_tail_span(algebra, a, k):
                ok = False
        results["vi"] = ok

    ok = True
    for x in chain:
        for y in chain:
            w = algebra.bracket(x, y)
            for z in range(n):
                ez = tuple(field.one if i == z else field.zero for i in range(n))
                if not vec_is_zero(field, algebra.bracket(w, ez)):
                    ok = False
    results["vii"] = ok

    return PropositionReport(results)


# -- cyclicity decisions -----------------------------------------------------

def cyclic_generator_by_scan(algebra: LeibnizAlgebra, s: Subspace) -> Vector | None:
    """Exhaustive generator search over a prime field.

    Scans the p^dim - 1 nonzero coefficient tuples against the canonical
    basis in lexicographic order and returns the first generator found.
    """
    field = algebra.field
    if field.characteristic == 0:
        raise ValueError("exhaustive scan needs a finite field")
    if not is_subalgebra(algebra, s):
        raise ValueError("subspace is not a subalgebra")
    n = algebra.dim
    for coeffs in product(range(field.characteristic), repeat=s.dim):
        if not any(coeffs):
            continue
        v = (field.zero,) * n
        for c, row in zip(coeffs, s.rows):
            if c:
                v = vec_add(field, v, vec_scale(field, c, row))
        if generated_subalgebra(algebra, v).span == s:
            return v
    return None


def cyclic_generator_by_criterion(algebra: LeibnizAlgebra, s: Subspace):
    """Nilpotent criterion: cyclic iff dim(S / [S, S]) = 1.

    Candidate generators are the canonical basis rows outside the derived
    subspace, each verified by chain generation.  Returns a generator, None
    when S is nilpotent and not cyclic, or UNKNOWN when S is not nilpotent
    (no enumeration is possible there over an infinite field).
    """
    if not is_subalgebra(algebra, s):
        raise ValueError("subspace is not a subalgebra")
    if s.dim == 0:
        return None
    if nilpotency_class(restrict_to_subalgebra(algebra, s)) is None:
        return UNKNOWN
    derived = product_subspace(algebra, s, s)
    if s.dim - derived.dim != 1:
        return None
    for row in s.rows:
        if not derived.contains(row):
            if generated_subalgebra(algebra, row).span == s:
                return row
    return None


def is_cyclic_subalgebra(algebra: LeibnizAlgebra, s: Subspace):
    """A generator of S when S is cyclic; None when it is not; UNKNOWN when undecided.

    Over GF(p) the decision is the exhaustive scan; over Q the nilpotent
    criterion is used and the non-nilpotent case is UNKNOWN.
    """
    algebra.ensure_checked()
    if not is_subalgebra(algebra, s):
        raise ValueError("subspace is not a subalgebra")
    if s.dim == 0:
        return None
    if algebra.field.characteristic != 0:
        return cyclic_generator_by_scan(algebra, s)
    return cyclic_generator_by_criterion(algebra, s)


def canonical_cyclic_basis(algebra: LeibnizAlgebra, a: Sequence[Scalar]) -> tuple[Vector, ...]:
    """The ln-chain of a as an ordered basis of <a>, verified canonical.

    In this basis the table is [a1, a_j] = a_{j+1}, [a1, a_m] = 0 and
    [a_i, a_j] = 0 for i >= 2.  Raises when <a> is not of that shape
    (in particular when <a> is not nilpotent).
    """
    algebra.ensure_checked()
    field = algebra.field
    probe = generated_subalgebra(algebra, a)
    chain = probe.chain
    if not chain:
        raise ValueError("the zero vector generates nothing")
    m = len(chain)
    tail = algebra.bracket(probe.generator, chain[-1])
    if not vec_is_zero(field, tail):
        raise ValueError("<a> is not nilpotent: the ln-chain does not terminate at zero")
    for i in range(1, m):
        for j in range(m):
            if not vec_is_zero(field, algebra.bracket(chain[i], chain[j])):
                raise ValueError("<a> does not have the canonical cyclic table")
    return chain

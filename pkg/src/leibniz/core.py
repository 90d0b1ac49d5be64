"""Leibniz algebra values and their structural invariants.

An algebra is a structure tensor c[i][j][k] over an exact field, defining
[e_i, e_j] = sum_k c[i][j][k] e_k.  The left Leibniz identity

    [[a, b], c] = [a, [b, c]] - [b, [a, c]]

holds on the whole algebra iff it holds on all basis triples, because the
defect is trilinear; `check_left_leibniz` therefore tests exactly the n^3
basis triples.  The check result is cached on the value, so the invariant
computations (which require a verified algebra) can demand it cheaply.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import Field, Matrix, Scalar, Subspace, Vector


@dataclass(frozen=True)
class IdentityViolation:
    """A basis triple (1-based) where the left Leibniz identity fails."""

    indices: tuple[int, int, int]
    residual: Vector


class LeibnizAlgebra:
    """Finite-dimensional algebra given by its structure tensor."""

    __slots__ = ("field", "dim", "tensor", "labels", "_violations", "_nonzero")

    def __init__(
        self,
        field: Field,
        tensor: Sequence[Sequence[Sequence[Scalar]]],
        labels: Sequence[str] | None = None,
        *,
        _assume_checked: bool = False,
    ):
        n = len(tensor)
        if n == 0:
            raise ValueError("algebra dimension must be positive")
        self.field = field
        self.dim = n
        rows = []
        for plane in tensor:
            if len(plane) != n:
                raise ValueError("structure tensor is not n x n x n")
            row = []
            for vec in plane:
                if len(vec) != n:
                    raise ValueError("structure tensor is not n x n x n")
                row.append(tuple(field.of(v) for v in vec))
            rows.append(tuple(row))
        self.tensor: tuple[tuple[Vector, ...], ...] = tuple(rows)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("label count differs from dimension")
        self.labels = labels
        self._violations: tuple[IdentityViolation, ...] | None = (
            () if _assume_checked else None
        )
        self._nonzero: tuple[tuple[tuple[tuple[int, Scalar], ...], ...], ...] | None = None

    @classmethod
    def from_brackets(
        cls,
        field: Field,
        dim: int,
        brackets: dict[tuple[int, int], dict[int, Scalar]],
        labels: Sequence[str] | None = None,
    ) -> "LeibnizAlgebra":
        """Build from sparse 0-based bracket data {(i, j): {k: coefficient}}."""
        tensor = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in brackets.items():
            for k, c in terms.items():
                tensor[i][j][k] = field.of(c)
        return cls(field, tensor, labels)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LeibnizAlgebra)
            and other.field == self.field
            and other.tensor == self.tensor
        )

    def __hash__(self) -> int:
        return hash((self.field, self.tensor))

    def __repr__(self) -> str:
        return f"LeibnizAlgebra({self.field}, dim {self.dim})"

    # -- bracket ---------------------------------------------------------

    def _nz(self):
        if self._nonzero is None:
            is_zero = self.field.is_zero
            self._nonzero = tuple(
                tuple(
                    tuple((k, c) for k, c in enumerate(vec) if not is_zero(c))
                    for vec in plane
                )
                for plane in self.tensor
            )
        return self._nonzero

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self.tensor[i][j]

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        """Bilinear extension of the structure tensor."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError("vector length differs from the algebra dimension")
        field = self.field
        is_zero = field.is_zero
        acc = [0] * n
        nz = self._nz()
        for i, xi in enumerate(x):
            if is_zero(xi):
                continue
            nz_i = nz[i]
            for j, yj in enumerate(y):
                if is_zero(yj):
                    continue
                c = xi * yj
                for k, w in nz_i[j]:
                    acc[k] += c * w
        reduce = field.reduce
        return tuple(reduce(v) for v in acc)

    # -- identity check ----------------------------------------------------

    def check_left_leibniz(self) -> tuple[IdentityViolation, ...]:
        """Violations of [[a,b],c] - [a,[b,c]] + [b,[a,c]] = 0 on basis triples.

        Returned in lexicographic (i, j, k) order with 1-based indices.
        """
        if self._violations is not None:
            return self._violations
        n = self.dim
        field = self.field
        reduce = field.reduce
        is_zero = field.is_zero
        nz = self._nz()
        violations = []
        for i in range(n):
            for j in range(n):
                nz_ij = nz[i][j]
                for k in range(n):
                    acc = [0] * n
                    for m, c in nz_ij:
                        for l, w in nz[m][k]:
                            acc[l] += c * w
                    for m, c in nz[j][k]:
                        for l, w in nz[i][m]:
                            acc[l] -= c * w
                    for m, c in nz[i][k]:
                        for l, w in nz[j][m]:
                            acc[l] += c * w
                    residual = tuple(reduce(v) for v in acc)
                    if not all(is_zero(v) for v in residual):
                        violations.append(
                            IdentityViolation((i + 1, j + 1, k + 1), residual)
                        )
        self._violations = tuple(violations)
        return self._violations

    @property
    def checked(self) -> bool:
        return self._violations is not None and not self._violations

    def ensure_checked(self) -> None:
        violations = self.check_left_leibniz()
        if violations:
            first = violations[0]
            raise ValueError(
                f"left Leibniz identity fails on {len(violations)} basis triples, "
                f"first at {first.indices}"
            )


def check_left_leibniz(algebra: LeibnizAlgebra) -> tuple[IdentityViolation, ...]:
    return algebra.check_left_leibniz()


# -- subspace-level operations -------------------------------------------

def full_space(algebra: LeibnizAlgebra) -> Subspace:
    return Subspace.full(algebra.field, algebra.dim)


def product_subspace(algebra: LeibnizAlgebra, s: Subspace, t: Subspace) -> Subspace:
    """span{[x, y] : x in basis(S), y in basis(T)}; bilinearity makes this the full product span."""
    products = [algebra.bracket(x, y) for x in s.rows for y in t.rows]
    return Subspace.from_vectors(algebra.field, algebra.dim, products)


def is_subalgebra(algebra: LeibnizAlgebra, s: Subspace) -> bool:
    return product_subspace(algebra, s, s) <= s


def is_left_ideal(algebra: LeibnizAlgebra, s: Subspace) -> bool:
    return product_subspace(algebra, full_space(algebra), s) <= s


def is_right_ideal(algebra: LeibnizAlgebra, s: Subspace) -> bool:
    return product_subspace(algebra, s, full_space(algebra)) <= s


def is_ideal(algebra: LeibnizAlgebra, s: Subspace) -> bool:
    return is_left_ideal(algebra, s) and is_right_ideal(algebra, s)


# -- structural invariants -----------------------------------------------

def leibniz_kernel(algebra: LeibnizAlgebra) -> Subspace:
    """Span of all squares [x, x].

    Polarization [x+y, x+y] = [x,x] + [y,y] + [x,y] + [y,x] shows the span
    is generated by {[e_i, e_i]} together with {[e_i, e_j] + [e_j, e_i]},
    in every characteristic.
    """
    algebra.ensure_checked()
    field = algebra.field
    n = algebra.dim
    gens = [algebra.tensor[i][i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            gens.append(
                tuple(
                    field.add(a, b)
                    for a, b in zip(algebra.tensor[i][j], algebra.tensor[j][i])
                )
            )
    return Subspace.from_vectors(field, n, gens)


def _annihilator_constraints(algebra: LeibnizAlgebra, side: str) -> list[Vector]:
    """Constraint rows for {x : [x, e_j] = 0 for all j} (side='left') or [e_j, x] = 0."""
    n = algebra.dim
    tensor = algebra.tensor
    rows = []
    for j in range(n):
        for l in range(n):
            if side == "left":
                rows.append(tuple(tensor[i][j][l] for i in range(n)))
            else:
                rows.append(tuple(tensor[j][i][l] for i in range(n)))
    return rows


def left_center(algebra: LeibnizAlgebra) -> Subspace:
    algebra.ensure_checked()
    return Matrix(algebra.field, _annihilator_constraints(algebra, "left")).kernel()


def right_center(algebra: LeibnizAlgebra) -> Subspace:
    algebra.ensure_checked()
    return Matrix(algebra.field, _annihilator_constraints(algebra, "right")).kernel()


def center(algebra: LeibnizAlgebra) -> Subspace:
    algebra.ensure_checked()
    rows = _annihilator_constraints(algebra, "left") + _annihilator_constraints(algebra, "right")
    return Matrix(algebra.field, rows).kernel()


def lower_central_series(algebra: LeibnizAlgebra) -> tuple[Subspace, ...]:
    """Terms of L = g_1 >= g_2 >= ..., g_{k+1} = [L, g_k], up to stabilization.

    The stabilized value appears once as the final term; for a nilpotent
    algebra the final term is the zero subspace.
    """
    algebra.ensure_checked()
    full = full_space(algebra)
    terms = [full]
    while True:
        nxt = product_subspace(algebra, full, terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return tuple(terms)


def nilpotency_class(algebra: LeibnizAlgebra) -> int | None:
    series = lower_central_series(algebra)
    if series[-1].dim == 0:
        return len(series) - 1
    return None


def _center_modulo(algebra: LeibnizAlgebra, z: Subspace) -> Subspace:
    """{x : [x, e_j] in Z and [e_j, x] in Z for all j}."""
    n = algebra.dim
    tensor = algebra.tensor
    rows = []
    for j in range(n):
        reduced_right = [z.reduce(tensor[i][j]) for i in range(n)]
        reduced_left = [z.reduce(tensor[j][i]) for i in range(n)]
        for l in range(n):
            rows.append(tuple(reduced_right[i][l] for i in range(n)))
            rows.append(tuple(reduced_left[i][l] for i in range(n)))
    return Matrix(algebra.field, rows).kernel()


def upper_central_series(algebra: LeibnizAlgebra) -> tuple[Subspace, ...]:
    """Terms z_1 <= z_2 <= ... up to stabilization; the last term is the hypercenter."""
    algebra.ensure_checked()
    prev = Subspace.zero(algebra.field, algebra.dim)
    terms: list[Subspace] = []
    while True:
        nxt = _center_modulo(algebra, prev)
        if nxt == prev:
            break
        terms.append(nxt)
        prev = nxt
    if not terms:
        terms.append(prev)
    return tuple(terms)


def hypercenter(algebra: LeibnizAlgebra) -> Subspace:
    return upper_central_series(algebra)[-1]


# -- derived algebra values ------------------------------------------------

def restrict_to_subalgebra(algebra: LeibnizAlgebra, s: Subspace) -> LeibnizAlgebra:
    """The algebra induced on a subalgebra, in the coordinates of its canonical basis."""
    if not is_subalgebra(algebra, s):
        raise ValueError("subspace is not closed under the bracket")
    pivots = s.pivot_columns()
    tensor = []
    for x in s.rows:
        plane = []
        for y in s.rows:
            w = algebra.bracket(x, y)
            # w lies in S, whose basis is RREF: coordinates are the pivot entries
            plane.append([w[p] for p in pivots])
        tensor.append(plane)
    if not tensor:
        raise ValueError("cannot restrict to the zero subspace")
    return LeibnizAlgebra(
        algebra.field, tensor, _assume_checked=algebra.checked
    )


def algebra_in_basis(algebra: LeibnizAlgebra, rows: Sequence[Vector]) -> LeibnizAlgebra:
    """The same algebra expressed in a new basis (rows = new basis in old coordinates)."""
    n = algebra.dim
    if len(rows) != n:
        raise ValueError("need exactly dim basis vectors")
    p = Matrix(algebra.field, rows)
    coords = p.transpose().inverse()
    tensor = []
    for x in rows:
        plane = []
        for y in rows:
            plane.append(coords.apply(algebra.bracket(x, y)))
        tensor.append(plane)
    return LeibnizAlgebra(algebra.field, tensor, _assume_checked=algebra.checked)


# -- the aggregated invariant profile --------------------------------------

@dataclass(frozen=True)
class AlgebraReport:
    """Invariant profile used as an isomorphism-coarse fingerprint."""

    field_label: str
    dim: int
    leibniz_kernel_dim: int
    left_center_dim: int
    right_center_dim: int
    center_dim: int
    lower_central_series_dims: tuple[int, ...]
    upper_central_series_dims: tuple[int, ...]
    nilpotency_class: int | None
    is_lie: bool
    derivation_dim: int | None
    right_derivation_dim: int | None

    def as_dict(self) -> dict:
        return {
            "field": self.field_label,
            "dim": self.dim,
            "leibniz_kernel_dim": self.leibniz_kernel_dim,
            "left_center_dim": self.left_center_dim,
            "right_center_dim": self.right_center_dim,
            "center_dim": self.center_dim,
            "lower_central_series_dims": list(self.lower_central_series_dims),
            "upper_central_series_dims": list(self.upper_central_series_dims),
            "nilpotency_class": self.nilpotency_class,
            "is_lie": self.is_lie,
            "derivation_dim": self.derivation_dim,
            "right_derivation_dim": self.right_derivation_dim,
        }


def invariant_profile(algebra: LeibnizAlgebra, with_derivations: bool = True) -> AlgebraReport:
    """Deterministically fill every report field."""
    algebra.ensure_checked()
    from . import derivations  # local import; derivations depends on this module

    leib = leibniz_kernel(algebra)
    lower = lower_central_series(algebra)
    upper = upper_central_series(algebra)
    der_dim = rder_dim = None
    if with_derivations:
        der_dim = derivations.derivation_space(algebra).dim
        rder_dim = derivations.right_derivation_space(algebra).dim
    return AlgebraReport(
        field_label=algebra.field.label,
        dim=algebra.dim,
        leibniz_kernel_dim=leib.dim,
        left_center_dim=left_center(algebra).dim,
        right_center_dim=right_center(algebra).dim,
        center_dim=center(algebra).dim,
        lower_central_series_dims=tuple(s.dim for s in lower),
        upper_central_series_dims=tuple(s.dim for s in upper),
        nilpotency_class=nilpotency_class(algebra),
        is_lie=leib.dim == 0,
        derivation_dim=der_dim,
        right_derivation_dim=rder_dim,
    )

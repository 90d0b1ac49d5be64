"""Derivation and right-derivation spaces as kernels of linear systems.

A linear map f is a derivation when f([a,b]) = [f(a), b] + [a, f(b)], and a
right derivation when g([x,y]) = [x, g(y)] - [y, g(x)].  Both identities are
bilinear in (a, b), so imposing them on basis pairs gives an n^3 x n^2
linear system in the matrix entries; its kernel is the derivation space.
Constraint rows are ordered by (i, j) basis pair then output coordinate,
and unknowns by matrix entry in row-major order, which fixes the canonical
kernel basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    LeibnizAlgebra,
    center,
    leibniz_kernel,
    left_center,
    right_center,
    upper_central_series,
)
from .linalg import Field, Matrix, Scalar, Subspace, Vector


def left_mult_matrix(algebra: LeibnizAlgebra, a: Sequence[Scalar]) -> Matrix:
    """Matrix of x -> [a, x] in the standard basis."""
    algebra.ensure_checked()
    n = algebra.dim
    field = algebra.field
    reduce = field.reduce
    t = algebra.tensor
    rows = [
        [reduce(sum(a[i] * t[i][m][l] for i in range(n))) for m in range(n)]
        for l in range(n)
    ]
    return Matrix(field, rows)


def right_mult_matrix(algebra: LeibnizAlgebra, a: Sequence[Scalar]) -> Matrix:
    """Matrix of x -> [x, a] in the standard basis."""
    algebra.ensure_checked()
    n = algebra.dim
    field = algebra.field
    reduce = field.reduce
    t = algebra.tensor
    rows = [
        [reduce(sum(a[j] * t[m][j][l] for j in range(n))) for m in range(n)]
        for l in range(n)
    ]
    return Matrix(field, rows)


@dataclass(frozen=True)
class DerivationBasis:
    """Canonical kernel basis of a derivation constraint system."""

    kind: str  # "left-derivation" | "right-derivation"
    basis: tuple[Matrix, ...]
    dim: int


def _constraint_rows(algebra: LeibnizAlgebra, kind: str) -> list[list[Scalar]]:
    n = algebra.dim
    field = algebra.field
    t = algebra.tensor
    zero = field.zero
    rows = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                row = [zero] * (n * n)
                for m in range(n):
                    row[l * n + m] = field.add(row[l * n + m], t[i][j][m])
                if kind == "left-derivation":
                    for m in range(n):
                        row[m * n + i] = field.sub(row[m * n + i], t[m][j][l])
                        row[m * n + j] = field.sub(row[m * n + j], t[i][m][l])
                else:
                    for m in range(n):
                        row[m * n + j] = field.sub(row[m * n + j], t[i][m][l])
                        row[m * n + i] = field.add(row[m * n + i], t[j][m][l])
                rows.append(row)
    return rows


def _kernel_basis(algebra: LeibnizAlgebra, kind: str) -> DerivationBasis:
    algebra.ensure_checked()
    n = algebra.dim
    field = algebra.field
    kern = Matrix(field, _constraint_rows(algebra, kind)).kernel()
    mats = tuple(
        Matrix(field, [row[r * n : (r + 1) * n] for r in range(n)]) for row in kern.rows
    )
    return DerivationBasis(kind, mats, kern.dim)


def derivation_space(algebra: LeibnizAlgebra) -> DerivationBasis:
    return _kernel_basis(algebra, "left-derivation")


def right_derivation_space(algebra: LeibnizAlgebra) -> DerivationBasis:
    return _kernel_basis(algebra, "right-derivation")


def is_derivation(algebra: LeibnizAlgebra, m: Matrix) -> bool:
    """Exact check of f([a,b]) = [f(a), b] + [a, f(b)] on all basis pairs."""
    return _satisfies(algebra, m, "left-derivation")


def is_right_derivation(algebra: LeibnizAlgebra, m: Matrix) -> bool:
    """Exact check of g([x,y]) = [x, g(y)] - [y, g(x)] on all basis pairs."""
    return _satisfies(algebra, m, "right-derivation")


def _satisfies(algebra: LeibnizAlgebra, m: Matrix, kind: str) -> bool:
    n = algebra.dim
    field = algebra.field
    if m.field != field or (m.nrows, m.ncols) != (n, n):
        raise ValueError("matrix shape or field differs from the algebra")
    algebra.ensure_checked()
    cols = [m.column(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = m.apply(algebra.basis_bracket(i, j))
            if kind == "left-derivation":
                rhs = _vec_add(
                    field,
                    algebra.bracket(cols[i], _basis(field, n, j)),
                    algebra.bracket(_basis(field, n, i), cols[j]),
                )
            else:
                rhs = _vec_sub(
                    field,
                    algebra.bracket(_basis(field, n, i), cols[j]),
                    algebra.bracket(_basis(field, n, j), cols[i]),
                )
            if lhs != rhs:
                return False
    return True


def _basis(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def _vec_add(field: Field, x: Vector, y: Vector) -> Vector:
    return tuple(field.add(a, b) for a, b in zip(x, y))


def _vec_sub(field: Field, x: Vector, y: Vector) -> Vector:
    return tuple(field.sub(a, b) for a, b in zip(x, y))


# -- structure of derivations of the canonical cyclic algebra ---------------

@dataclass(frozen=True)
class CyclicDerivationProfile:
    """Banded lower-triangular shape of a derivation of the canonical cyclic algebra.

    The matrix is determined by its first column (gamma_1 .. gamma_n): the
    diagonal is (gamma_1, 2 gamma_1, ..., n gamma_1) and each lower band is
    constant, f(a_k) = k gamma_1 a_k + sum_{t>=2} gamma_t a_{t+k-1}.
    """

    gammas: tuple[Scalar, ...]


@dataclass(frozen=True)
class CyclicRightDerivationProfile:
    """Right derivations of the canonical cyclic algebra: free on a_1, zero beyond.

    g(a_1) = rho_1 a_1 + ... + rho_n a_n and g(a_j) = 0 for j >= 2.
    """

    rhos: tuple[Scalar, ...]


def is_canonical_cyclic(algebra: LeibnizAlgebra) -> bool:
    """Whether the tensor is exactly the canonical cyclic nilpotent table."""
    n = algebra.dim
    field = algebra.field
    for i in range(n):
        for j in range(n):
            expected_k = j + 1 if i == 0 and j + 1 < n else None
            for k, v in enumerate(algebra.tensor[i][j]):
                want = field.one if k == expected_k else field.zero
                if v != want:
                    return False
    return True


def _require_canonical_cyclic(algebra: LeibnizAlgebra) -> None:
    if not is_canonical_cyclic(algebra):
        raise ValueError("algebra is not the canonical cyclic nilpotent table")


def extract_cyclic_derivation_profile(
    algebra: LeibnizAlgebra, m: Matrix
) -> CyclicDerivationProfile | None:
    """Read gammas off the first column and verify the banded pattern; None on mismatch."""
    _require_canonical_cyclic(algebra)
    if not is_derivation(algebra, m):
        raise ValueError("matrix is not a derivation")
    field = algebra.field
    n = algebra.dim
    gammas = m.column(0)
    for k in range(1, n + 1):
        expected = [field.zero] * n
        expected[k - 1] = field.mul(field.of(k), gammas[0])
        for t in range(2, n - k + 2):
            expected[t + k - 2] = field.add(expected[t + k - 2], gammas[t - 1])
        if list(m.column(k - 1)) != expected:
            return None
    return CyclicDerivationProfile(tuple(gammas))


def extract_cyclic_right_derivation_profile(
    algebra: LeibnizAlgebra, m: Matrix
) -> CyclicRightDerivationProfile | None:
    """Read rhos off the first column; columns 2..n must vanish.  None on mismatch."""
    _require_canonical_cyclic(algebra)
    if not is_right_derivation(algebra, m):
        raise ValueError("matrix is not a right derivation")
    field = algebra.field
    n = algebra.dim
    for k in range(1, n):
        if any(not field.is_zero(v) for v in m.column(k)):
            return None
    return CyclicRightDerivationProfile(tuple(m.column(0)))


# -- invariance of the distinguished subspaces ------------------------------

@dataclass(frozen=True)
class InvarianceReport:
    """Containment checks for the image of a (right) derivation."""

    kind: str
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def _image(m: Matrix, s: Subspace) -> Subspace:
    return Subspace.from_vectors(m.field, s.ambient, [m.apply(r) for r in s.rows])


def check_invariance(algebra: LeibnizAlgebra, m: Matrix, kind: str) -> InvarianceReport:
    """Verify the invariance theorems for one derivation of the given kind.

    Left derivations must preserve the left/right centers, the center and
    every upper central series term; right derivations must map the left
    center into the right center and annihilate the Leibniz kernel.
    """
    algebra.ensure_checked()
    checks: list[tuple[str, bool]] = []
    if kind == "left-derivation":
        if not is_derivation(algebra, m):
            raise ValueError("matrix is not a derivation")
        checks.append(("left_center", _image(m, left_center(algebra)) <= left_center(algebra)))
        checks.append(("right_center", _image(m, right_center(algebra)) <= right_center(algebra)))
        checks.append(("center", _image(m, center(algebra)) <= center(algebra)))
        for k, term in enumerate(upper_central_series(algebra), start=1):
            checks.append((f"upper_series_{k}", _image(m, term) <= term))
    elif kind == "right-derivation":
        if not is_right_derivation(algebra, m):
            raise ValueError("matrix is not a right derivation")
        checks.append(
            ("left_center_into_right_center", _image(m, left_center(algebra)) <= right_center(algebra))
        )
        leib = leibniz_kernel(algebra)
        checks.append(("leibniz_kernel_annihilated", _image(m, leib).dim == 0))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return InvarianceReport(kind, tuple(checks))

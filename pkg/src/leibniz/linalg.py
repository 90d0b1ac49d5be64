"""Exact dense linear algebra over Q and GF(p).

Scalars are `fractions.Fraction` over the rationals and reduced ``int``
residues over a prime field; nothing here ever touches floating point.
Matrices and subspaces are immutable values.  A subspace is stored as the
reduced row echelon basis of its span with zero rows removed, so two
subspaces are equal as sets exactly when their stored bases are equal
entry-wise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Scalar = Union[Fraction, int]
Vector = tuple[Scalar, ...]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Coefficient domain: the rationals (characteristic 0) or GF(p)."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0:
            if not isinstance(characteristic, int) or characteristic >= 1 << 31:
                raise ValueError(f"characteristic out of range: {characteristic!r}")
            if not _is_prime(characteristic):
                raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __repr__(self) -> str:
        return self.label

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("Field", self.characteristic))

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.characteristic == 0 else 1

    def of(self, value) -> Scalar:
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.characteristic == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.characteristic == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.label}")
            return (value.numerator * pow(value.denominator, -1, self.characteristic)) % self.characteristic
        return int(value) % self.characteristic

    def reduce(self, raw) -> Scalar:
        """Normalize the result of raw +/* arithmetic on field scalars."""
        if self.characteristic == 0:
            return raw if isinstance(raw, Fraction) else Fraction(raw)
        return raw % self.characteristic

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.reduce(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.reduce(a - b)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.reduce(a * b)

    def neg(self, a: Scalar) -> Scalar:
        return self.reduce(-a)

    def inv(self, a: Scalar) -> Scalar:
        if self.characteristic == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / a
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.characteristic - 2, self.characteristic)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0 if self.characteristic == 0 else a % self.characteristic == 0

    def elements(self) -> Iterator[Scalar]:
        """All field elements; only available over a prime field."""
        if self.characteristic == 0:
            raise ValueError("cannot enumerate the rationals")
        return iter(range(self.characteristic))

    def parse(self, text: str) -> Scalar:
        """Parse scalar text: ``a/b`` or ``a`` over Q, a residue in [0, p) over GF(p)."""
        text = text.strip()
        if self.characteristic == 0:
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad rational scalar {text!r}") from exc
        try:
            value = int(text)
        except ValueError as exc:
            raise ValueError(f"bad {self.label} scalar {text!r}") from exc
        if not 0 <= value < self.characteristic:
            raise ValueError(f"{self.label} scalar must lie in [0, {self.characteristic}), got {text!r}")
        return value

    def render(self, a: Scalar) -> str:
        return str(a)


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# -- vector helpers -----------------------------------------------------------

def zero_vector(field: Field, n: int) -> Vector:
    return (field.zero,) * n


def basis_vector(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(field: Field, x: Vector, y: Vector) -> Vector:
    return tuple(field.add(a, b) for a, b in zip(x, y, strict=True))


def vec_sub(field: Field, x: Vector, y: Vector) -> Vector:
    return tuple(field.sub(a, b) for a, b in zip(x, y, strict=True))


def vec_scale(field: Field, c: Scalar, x: Vector) -> Vector:
    return tuple(field.mul(c, a) for a in x)


def vec_is_zero(field: Field, x: Vector) -> bool:
    return all(field.is_zero(a) for a in x)


def render_vector(field: Field, x: Vector) -> str:
    return "(" + ", ".join(field.render(a) for a in x) + ")"


def _rref_in_place(field: Field, rows: list[list[Scalar]]) -> list[int]:
    """Gauss-Jordan to reduced row echelon form; returns the pivot columns."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = -1
        for i in range(r, nrows):
            if not field.is_zero(rows[i][c]):
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][c])
        if inv != field.one:
            rows[r] = [field.mul(inv, v) for v in rows[r]]
        row_r = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if field.is_zero(f):
                continue
            rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], row_r)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


class Matrix:
    """Immutable dense matrix over a fixed field."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, rows: Iterable[Iterable]):
        self.field = field
        self.data: tuple[Vector, ...] = tuple(
            tuple(field.of(v) for v in row) for row in rows
        )
        if self.data:
            width = len(self.data[0])
            if any(len(row) != width for row in self.data):
                raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [basis_vector(field, n, i) for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [zero_vector(field, ncols)] * nrows)

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def ncols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.data == self.data
        )

    def __hash__(self) -> int:
        return hash((self.field, self.data))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(self.field.render(v) for v in row) for row in self.data)
        return f"Matrix({self.field}, [{body}])"

    def entry(self, i: int, j: int) -> Scalar:
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.data)) if self.data else Matrix(self.field, [])

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch in matrix-vector product")
        reduce = self.field.reduce
        return tuple(reduce(sum(a * b for a, b in zip(row, v))) for row in self.data)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.transpose().data
        reduce = self.field.reduce
        return Matrix(
            self.field,
            [
                [reduce(sum(a * b for a, b in zip(row, col))) for col in cols]
                for row in self.data
            ],
        )

    def add(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or self.data and (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch in matrix sum")
        return Matrix(self.field, [vec_add(self.field, r, s) for r, s in zip(self.data, other.data)])

    def sub(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or self.data and (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch in matrix difference")
        return Matrix(self.field, [vec_sub(self.field, r, s) for r, s in zip(self.data, other.data)])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or (self.data and other.data and self.ncols != other.ncols):
            raise ValueError("dimension mismatch in vstack")
        return Matrix(self.field, list(self.data) + list(other.data))

    def rref(self) -> "Matrix":
        rows = [list(r) for r in self.data]
        _rref_in_place(self.field, rows)
        return Matrix(self.field, rows)

    def rank(self) -> int:
        rows = [list(r) for r in self.data]
        return len(_rref_in_place(self.field, rows))

    def kernel(self) -> "Subspace":
        """Right null space {x : A x = 0} as a canonical subspace."""
        field = self.field
        n = self.ncols
        rows = [list(r) for r in self.data if not vec_is_zero(field, r)]
        pivots = _rref_in_place(field, rows)
        pivot_set = set(pivots)
        basis = []
        for free in range(n):
            if free in pivot_set:
                continue
            v = [field.zero] * n
            v[free] = field.one
            for r, pc in enumerate(pivots):
                v[pc] = field.neg(rows[r][free])
            basis.append(v)
        return Subspace.from_vectors(field, n, basis)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices are invertible")
        field = self.field
        n = self.nrows
        aug = [list(row) + list(basis_vector(field, n, i)) for i, row in enumerate(self.data)]
        pivots = _rref_in_place(field, aug)
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(field, [row[n:] for row in aug])


def solve(a: Matrix, b: Sequence[Scalar]) -> Vector | None:
    """One solution of A x = b (free variables zero), or None if inconsistent."""
    if len(b) != a.nrows:
        raise ValueError("right-hand side length must equal the row count")
    field = a.field
    n = a.ncols
    aug = [list(row) + [field.of(v)] for row, v in zip(a.data, b)]
    pivots = _rref_in_place(field, aug)
    if pivots and pivots[-1] == n:
        return None
    x = [field.zero] * n
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][n]
    return tuple(x)


class Subspace:
    """Subspace of F^n in canonical form: RREF basis with zero rows removed."""

    __slots__ = ("field", "ambient", "rows", "_pivots")

    def __init__(self, field: Field, ambient: int, rows: tuple[Vector, ...], *, _canonical: bool = False):
        if not _canonical:
            raise ValueError("use Subspace.from_vectors")
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self._pivots = tuple(
            next(c for c, v in enumerate(row) if not field.is_zero(v)) for row in rows
        )

    @classmethod
    def from_vectors(cls, field: Field, ambient: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        rows = [[field.of(v) for v in vec] for vec in vectors]
        for row in rows:
            if len(row) != ambient:
                raise ValueError("vector length differs from ambient dimension")
        _rref_in_place(field, rows)
        basis = tuple(tuple(row) for row in rows if not all(field.is_zero(v) for v in row))
        return cls(field, ambient, basis, _canonical=True)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), _canonical=True)

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        rows = tuple(basis_vector(field, ambient, i) for i in range(ambient))
        return cls(field, ambient, rows, _canonical=True)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and other.field == self.field
            and other.ambient == self.ambient
            and other.rows == self.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(render_vector(self.field, r) for r in self.rows)
        return f"Subspace({self.field}, dim {self.dim} of {self.ambient}: {body})"

    def _check_compatible(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")

    def pivot_columns(self) -> tuple[int, ...]:
        return self._pivots

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Residual of v after subtracting its projection onto the basis rows."""
        if len(v) != self.ambient:
            raise ValueError("vector length differs from ambient dimension")
        field = self.field
        residual = [field.of(x) for x in v]
        for row, pc in zip(self.rows, self._pivots):
            c = residual[pc]
            if field.is_zero(c):
                continue
            residual = [field.sub(a, field.mul(c, b)) for a, b in zip(residual, row)]
        return tuple(residual)

    def contains(self, v: Sequence[Scalar]) -> bool:
        return vec_is_zero(self.field, self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(r) for r in other.rows)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_vectors(self.field, self.ambient, self.rows + other.rows)

    def annihilator(self) -> "Subspace":
        """{x : <b, x> = 0 for all basis rows b}, under the standard pairing."""
        if not self.rows:
            return Subspace.full(self.field, self.ambient)
        return Matrix(self.field, self.rows).kernel()

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.rows)

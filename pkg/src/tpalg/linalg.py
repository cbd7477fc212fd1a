"""Exact dense linear algebra over Q(i).

Elimination runs on sparse row dictionaries internally (the systems built by
the derivation and TP solvers are very sparse), but the public surface is
the dense :class:`Matrix` and the canonical :class:`SubspaceBasis`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Matrix",
    "SubspaceBasis",
    "rref",
    "rank",
    "kernel_basis",
    "kernel_of_equations",
    "span",
    "span_equal",
    "member_of",
    "inverse",
    "as_vector",
]

SparseRow = dict  # column index -> nonzero Scalar


def as_vector(v: Iterable) -> tuple[Scalar, ...]:
    return tuple(as_scalar(x) for x in v)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows*cols

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [as_vector(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[tuple[Scalar, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, tuple(x for j in range(self.cols) for x in self.column(j)))

    def apply(self, v: Sequence) -> tuple[Scalar, ...]:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        v = as_vector(v)
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, b in zip(self.row(i), v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
        return Matrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.entries)


@dataclass(frozen=True)
class SubspaceBasis:
    """Canonical basis of a subspace: the nonzero rows of an RREF matrix.

    Build these with :func:`span` or :func:`kernel_basis`; the constructor
    only checks that ``vectors`` already is in reduced echelon form.
    """

    ambient_dim: int
    vectors: tuple  # tuple of coordinate tuples

    def __post_init__(self):
        last = -1
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise DimensionError("basis vector length differs from ambient dimension")
            p = next((c for c, x in enumerate(v) if x), None)
            if p is None or p <= last or v[p] != ONE:
                raise ValueError("vectors are not the rows of a reduced echelon form")
            if any(w[p] for w in self.vectors if w is not v):
                raise ValueError("pivot column is not cleared in other rows")
            last = p

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(c for c, x in enumerate(v) if x) for v in self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


# -- elimination core ----------------------------------------------------

def _reduce_against(row: SparseRow, pivots: dict[int, SparseRow]) -> SparseRow:
    """Eliminate every pivot column from ``row`` (in place, returns it)."""
    while row:
        hit = [c for c in row if c in pivots]
        if not hit:
            return row
        c = min(hit)
        f = row[c]
        for k, v in pivots[c].items():
            x = row.get(k, ZERO) - f * v
            if x:
                row[k] = x
            else:
                row.pop(k, None)
    return row


def _echelon(rows: Iterable[SparseRow]) -> dict[int, SparseRow]:
    """Fully reduced echelon form of the span of ``rows``, keyed by pivot column.

    Pivot of each stored row is its smallest column with coefficient 1, and
    that column is zero in every other stored row.
    """
    pivots: dict[int, SparseRow] = {}
    for r in rows:
        row = {c: as_scalar(x) for c, x in r.items() if x}
        _reduce_against(row, pivots)
        if not row:
            continue
        p = min(row)
        inv = row[p].inverse()
        if inv != ONE:
            row = {c: x * inv for c, x in row.items()}
        # keep the stored set reduced: clear p from the existing rows
        for other in pivots.values():
            f = other.get(p)
            if f:
                for k, v in row.items():
                    x = other.get(k, ZERO) - f * v
                    if x:
                        other[k] = x
                    else:
                        other.pop(k, None)
        pivots[p] = row
    return pivots


def _dense_rows(m: Matrix) -> list[SparseRow]:
    out = []
    for i in range(m.rows):
        out.append({j: x for j, x in enumerate(m.row(i)) if x})
    return out


def _basis_from_pivots(pivots: dict[int, SparseRow], ncols: int) -> SubspaceBasis:
    vectors = []
    for p in sorted(pivots):
        r = pivots[p]
        vectors.append(tuple(r.get(c, ZERO) for c in range(ncols)))
    return SubspaceBasis(ncols, tuple(vectors))


# -- public operations ---------------------------------------------------

def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form, same shape as ``m`` (zero rows at the bottom)."""
    pivots = _echelon(_dense_rows(m))
    rows = [tuple(pivots[p].get(c, ZERO) for c in range(m.cols)) for p in sorted(pivots)]
    rows += [(ZERO,) * m.cols] * (m.rows - len(rows))
    return Matrix(m.rows, m.cols, tuple(x for r in rows for x in r))


def rank(m: Matrix) -> int:
    return len(_echelon(_dense_rows(m)))


def _kernel_from_pivots(pivots: dict[int, SparseRow], ncols: int) -> SubspaceBasis:
    free = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for f in free:
        v = {f: ONE}
        for p, r in pivots.items():
            x = r.get(f)
            if x:
                v[p] = -x
        vecs.append(v)
    return _basis_from_pivots(_echelon(vecs), ncols)


def kernel_basis(m: Matrix) -> SubspaceBasis:
    """Canonical basis of {v : m v = 0}.

    Free variables are set to 1 one at a time in increasing column order and
    the resulting vectors are passed through RREF, so the output is unique.
    """
    return _kernel_from_pivots(_echelon(_dense_rows(m)), m.cols)


def kernel_of_equations(equations: Iterable[SparseRow], ncols: int) -> SubspaceBasis:
    """Kernel of a linear system given as sparse rows ``{column: coefficient}``."""
    return _kernel_from_pivots(_echelon(equations), ncols)


def span(ambient_dim: int, vectors: Iterable[Sequence]) -> SubspaceBasis:
    rows = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        rows.append({c: x for c, x in enumerate(as_vector(v)) if x})
    return _basis_from_pivots(_echelon(rows), ambient_dim)


def span_equal(a: SubspaceBasis, b: SubspaceBasis) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    return a.vectors == b.vectors


def member_of(v: Sequence, s: SubspaceBasis) -> bool:
    if len(v) != s.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in ambient dimension {s.ambient_dim}")
    pivots = {}
    for vec in s.vectors:
        row = {c: x for c, x in enumerate(vec) if x}
        pivots[min(row)] = row
    row = {c: x for c, x in enumerate(as_vector(v)) if x}
    return not _reduce_against(row, pivots)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse via RREF of [m | I]; raises ZeroDivisionError if singular."""
    if m.rows != m.cols:
        raise DimensionError("only square matrices are invertible")
    n = m.rows
    aug = []
    for i in range(n):
        row = {j: x for j, x in enumerate(m.row(i)) if x}
        row[n + i] = ONE
        aug.append(row)
    pivots = _echelon(aug)
    if any(p not in pivots for p in range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix(n, n, tuple(pivots[i].get(n + j, ZERO) for i in range(n) for j in range(n)))

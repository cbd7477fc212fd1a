"""Lie algebras, commutative products and linear maps as structure constants.

Vectors are tuples of :class:`~tpalg.scalar.Scalar` in basis coordinates.
Sparse coefficient vectors (``{basis index: coefficient}``) are used for the
stored structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import DimensionError, JacobiError
from .linalg import (
    Matrix,
    SubspaceBasis,
    as_vector,
    kernel_of_equations,
    span,
)
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "LieAlgebra",
    "BilinearMap",
    "LinearMap",
    "bracket",
    "jacobi_check",
    "jacobi_violation",
    "require_lie",
    "derived_subalgebra",
    "annihilator",
    "center",
    "full_space",
    "ad_map",
    "is_associative",
    "associativity_violation",
    "left_multiplication",
    "permute_basis",
    "basis_vector",
]

Sparse = Mapping[int, Scalar]


def _clean(coeffs: Mapping) -> dict[int, Scalar]:
    out = {}
    for k, c in coeffs.items():
        c = as_scalar(c)
        if c:
            out[int(k)] = c
    return out


def _add_entry(acc: dict, key, c: Scalar) -> None:
    x = acc.get(key, ZERO) + c
    if x:
        acc[key] = x
    else:
        acc.pop(key, None)


def _add_into(acc: dict, coeffs: Mapping, factor: Scalar) -> None:
    for k, c in coeffs.items():
        x = acc.get(k, ZERO) + factor * c
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


def _dense(acc: Mapping, dim: int) -> tuple[Scalar, ...]:
    return tuple(acc.get(k, ZERO) for k in range(dim))


def _check_len(v: Sequence, dim: int) -> tuple[Scalar, ...]:
    if len(v) != dim:
        raise DimensionError(f"vector of length {len(v)}, expected {dim}")
    return as_vector(v)


def basis_vector(dim: int, i: int) -> tuple[Scalar, ...]:
    return tuple(ONE if k == i else ZERO for k in range(dim))


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Antisymmetric bracket given by structure constants.

    ``brackets`` maps pairs ``(i, j)`` with ``i < j`` to the sparse coefficient
    vector of ``[e_i, e_j]``; ``[e_j, e_i]`` is its negative by construction and
    omitted pairs bracket to zero.  Use :meth:`from_table` to build from pairs
    in either order.
    """

    dim: int
    brackets: Mapping
    basis: tuple = ()
    name: str = ""
    _full: dict = field(init=False, repr=False, compare=False)
    _jacobi: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionError("negative dimension")
        basis = tuple(self.basis) or tuple(f"e{i}" for i in range(self.dim))
        if len(basis) != self.dim:
            raise DimensionError(f"{len(basis)} basis labels for dimension {self.dim}")
        stored = {}
        for (i, j), coeffs in self.brackets.items():
            if not (0 <= i < j < self.dim):
                raise DimensionError(f"bracket pair {(i, j)} must satisfy 0 <= left < right < dim")
            for k in coeffs:
                if not 0 <= int(k) < self.dim:
                    raise DimensionError(f"bracket {(i, j)} has output index {k} out of range")
            c = _clean(coeffs)
            if c:
                stored[(i, j)] = MappingProxyType(c)
        full = {}
        for (i, j), c in stored.items():
            full[(i, j)] = c
            full[(j, i)] = MappingProxyType({k: -x for k, x in c.items()})
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "brackets", MappingProxyType(stored))
        object.__setattr__(self, "_full", full)
        object.__setattr__(self, "_jacobi", [])

    @classmethod
    def from_table(cls, dim: int, table: Mapping, basis: Sequence[str] = (), name: str = "") -> LieAlgebra:
        """Build from ``{(i, j): {k: c}}`` with pairs in any order.

        A pair listed both ways must agree up to sign; ``(i, i)`` must be zero.
        """
        acc: dict = {}
        for (i, j), coeffs in table.items():
            c = _clean(coeffs)
            if i == j:
                if c:
                    raise ValueError(f"[e_{i}, e_{i}] must vanish")
                continue
            key, sign = ((i, j), ONE) if i < j else ((j, i), -ONE)
            val = {k: sign * x for k, x in c.items()}
            if key in acc and acc[key] != val:
                raise ValueError(f"inconsistent entries for pair {key}")
            acc[key] = val
        return cls(dim, acc, tuple(basis), name)

    def structure(self, i: int, j: int) -> Sparse:
        """Sparse ``[e_i, e_j]`` for any ordered pair."""
        return self._full.get((i, j), {})

    def structure_constant(self, i: int, j: int, k: int) -> Scalar:
        return self._full.get((i, j), {}).get(k, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and dict(self.brackets) == dict(other.brackets)

    def __hash__(self):
        return hash((self.dim, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.brackets.items()))))


def _bracket_sparse(L: LieAlgebra, x: Sparse, y: Sparse) -> dict:
    acc: dict = {}
    for i, a in x.items():
        for j, b in y.items():
            c = L._full.get((i, j))
            if c:
                _add_into(acc, c, a * b)
    return acc


def _sparse(v: Sequence) -> dict:
    return {k: x for k, x in enumerate(v) if x}


def bracket(L: LieAlgebra, x: Sequence, y: Sequence) -> tuple[Scalar, ...]:
    x = _check_len(x, L.dim)
    y = _check_len(y, L.dim)
    return _dense(_bracket_sparse(L, _sparse(x), _sparse(y)), L.dim)


def jacobi_violation(L: LieAlgebra) -> tuple[tuple[int, int, int], int] | None:
    """First basis triple ``(i, j, k)``, ``i<j<k``, and output index where Jacobi fails.

    Triples with a repeated index satisfy Jacobi automatically once the
    bracket is antisymmetric.  The result is cached on the algebra.
    """
    if L._jacobi:
        return L._jacobi[0]
    found = None
    for i, j, k in combinations(range(L.dim), 3):
        acc: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            _add_into(acc, _bracket_sparse(L, L.structure(a, b), {c: ONE}), ONE)
        if acc:
            found = ((i, j, k), min(acc))
            break
    L._jacobi.append(found)
    return found


def jacobi_check(L: LieAlgebra) -> bool:
    return jacobi_violation(L) is None


def require_lie(L: LieAlgebra) -> None:
    bad = jacobi_violation(L)
    if bad is not None:
        raise JacobiError(bad[0])


def full_space(dim: int) -> SubspaceBasis:
    return span(dim, [basis_vector(dim, i) for i in range(dim)])


def derived_subalgebra(L: LieAlgebra) -> SubspaceBasis:
    return span(L.dim, [_dense(c, L.dim) for c in L.brackets.values()])


def annihilator(L: LieAlgebra, inside: SubspaceBasis, of: SubspaceBasis) -> SubspaceBasis:
    """``{v in inside : [v, w] = 0 for all w in of}``."""
    if inside.ambient_dim != L.dim or of.ambient_dim != L.dim:
        raise DimensionError("subspaces must live in the algebra")
    # v = sum_a t_a u_a; each (w, output k) gives one linear equation in t
    products = [
        [_bracket_sparse(L, _sparse(u), _sparse(w)) for u in inside.vectors]
        for w in of.vectors
    ]
    equations = []
    for per_w in products:
        for k in range(L.dim):
            row = {a: p[k] for a, p in enumerate(per_w) if k in p}
            if row:
                equations.append(row)
    coeffs = kernel_of_equations(equations, inside.dim)
    vectors = []
    for t in coeffs.vectors:
        acc: dict = {}
        for a, ta in enumerate(t):
            if ta:
                _add_into(acc, _sparse(inside.vectors[a]), ta)
        vectors.append(_dense(acc, L.dim))
    return span(L.dim, vectors)


def center(L: LieAlgebra) -> SubspaceBasis:
    everything = full_space(L.dim)
    return annihilator(L, everything, everything)


@dataclass(frozen=True)
class LinearMap:
    """Endomorphism of a ``dim``-dimensional space; column j is the image of e_j."""

    dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.dim or self.matrix.cols != self.dim:
            raise DimensionError(f"LinearMap of dim {self.dim} needs a square {self.dim}x{self.dim} matrix")

    @classmethod
    def identity(cls, dim: int) -> LinearMap:
        return cls(dim, Matrix.identity(dim))

    @classmethod
    def zero(cls, dim: int) -> LinearMap:
        return cls(dim, Matrix.zeros(dim, dim))

    @classmethod
    def from_images(cls, dim: int, images: Mapping[int, Mapping]) -> LinearMap:
        """Map sending ``e_j`` to the sparse vector ``images[j]`` (missing: zero)."""
        cols = {j: _clean(v) for j, v in images.items()}
        entries = tuple(cols.get(j, {}).get(k, ZERO) for k in range(dim) for j in range(dim))
        return cls(dim, Matrix(dim, dim, entries))

    @classmethod
    def from_flat(cls, dim: int, flat: Sequence) -> LinearMap:
        """Inverse of :meth:`flatten` (row-major: output index, then argument index)."""
        if len(flat) != dim * dim:
            raise DimensionError(f"need {dim * dim} coordinates, got {len(flat)}")
        return cls(dim, Matrix(dim, dim, as_vector(flat)))

    def flatten(self) -> tuple[Scalar, ...]:
        return self.matrix.entries

    def image(self, j: int) -> tuple[Scalar, ...]:
        return self.matrix.column(j)

    def __call__(self, v: Sequence) -> tuple[Scalar, ...]:
        return self.matrix.apply(_check_len(v, self.dim))

    def __matmul__(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.dim, self.matrix @ other.matrix)

    def scaled(self, c) -> LinearMap:
        c = as_scalar(c)
        return LinearMap(self.dim, Matrix(self.dim, self.dim, tuple(c * x for x in self.matrix.entries)))


def ad_map(L: LieAlgebra, w: Sequence) -> LinearMap:
    """The map ``x -> [x, w]``."""
    w = _sparse(_check_len(w, L.dim))
    images = {j: _bracket_sparse(L, {j: ONE}, w) for j in range(L.dim)}
    return LinearMap.from_images(L.dim, images)


def _pair_index(i: int, j: int, dim: int) -> int:
    """Position of (i, j), i <= j, in the lexicographic list of such pairs."""
    return i * dim - i * (i - 1) // 2 + (j - i)


@dataclass(frozen=True, eq=False)
class BilinearMap:
    """Commutative product given by ``products[(i, j)] = e_i . e_j`` for ``i <= j``."""

    dim: int
    products: Mapping
    _full: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        stored = {}
        for (i, j), coeffs in self.products.items():
            if not (0 <= i <= j < self.dim):
                raise DimensionError(f"product pair {(i, j)} must satisfy 0 <= left <= right < dim")
            for k in coeffs:
                if not 0 <= int(k) < self.dim:
                    raise DimensionError(f"product {(i, j)} has output index {k} out of range")
            c = _clean(coeffs)
            if c:
                stored[(i, j)] = MappingProxyType(c)
        full = dict(stored)
        full.update({(j, i): c for (i, j), c in stored.items()})
        object.__setattr__(self, "products", MappingProxyType(stored))
        object.__setattr__(self, "_full", full)

    @classmethod
    def zero(cls, dim: int) -> BilinearMap:
        return cls(dim, {})

    @classmethod
    def from_table(cls, dim: int, table: Mapping) -> BilinearMap:
        """Build from ``{(i, j): {k: c}}`` with pairs in either order (must agree)."""
        acc: dict = {}
        for (i, j), coeffs in table.items():
            key = (min(i, j), max(i, j))
            c = _clean(coeffs)
            if key in acc and acc[key] != c:
                raise ValueError(f"inconsistent entries for pair {key}")
            acc[key] = c
        return cls(dim, acc)

    @property
    def flat_dim(self) -> int:
        return self.dim * self.dim * (self.dim + 1) // 2

    @classmethod
    def from_flat(cls, dim: int, flat: Sequence) -> BilinearMap:
        """Inverse of :meth:`flatten`."""
        npairs = dim * (dim + 1) // 2
        if len(flat) != npairs * dim:
            raise DimensionError(f"need {npairs * dim} coordinates, got {len(flat)}")
        flat = as_vector(flat)
        table = {}
        for i in range(dim):
            for j in range(i, dim):
                base = _pair_index(i, j, dim) * dim
                table[(i, j)] = {k: flat[base + k] for k in range(dim) if flat[base + k]}
        return cls(dim, table)

    def flatten(self) -> tuple[Scalar, ...]:
        """Coordinates ordered by pair (i <= j, lexicographic), then output index."""
        out = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                c = self._full.get((i, j), {})
                out.extend(c.get(k, ZERO) for k in range(self.dim))
        return tuple(out)

    def structure(self, i: int, j: int) -> Sparse:
        return self._full.get((i, j), {})

    def multiply(self, x: Sequence, y: Sequence) -> tuple[Scalar, ...]:
        x = _check_len(x, self.dim)
        y = _check_len(y, self.dim)
        return _dense(_product_sparse(self, _sparse(x), _sparse(y)), self.dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return self.dim == other.dim and dict(self.products) == dict(other.products)

    def __hash__(self):
        return hash(self.flatten())


def _product_sparse(d: BilinearMap, x: Sparse, y: Sparse) -> dict:
    acc: dict = {}
    for i, a in x.items():
        for j, b in y.items():
            c = d._full.get((i, j))
            if c:
                _add_into(acc, c, a * b)
    return acc


def associativity_violation(d: BilinearMap) -> tuple[tuple[int, int, int], int] | None:
    """First ``((i, j, k), l)`` with ``((e_i e_j) e_k - e_i (e_j e_k))_l != 0``."""
    n = d.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = _product_sparse(d, d.structure(i, j), {k: ONE})
                right = _product_sparse(d, {i: ONE}, d.structure(j, k))
                _add_into(left, right, -ONE)
                if left:
                    return (i, j, k), min(left)
    return None


def is_associative(d: BilinearMap) -> bool:
    return associativity_violation(d) is None


def left_multiplication(d: BilinearMap, z: Sequence) -> LinearMap:
    """The map ``x -> z . x``."""
    z = _sparse(_check_len(z, d.dim))
    return LinearMap.from_images(d.dim, {j: _product_sparse(d, z, {j: ONE}) for j in range(d.dim)})


def permute_basis(L: LieAlgebra, perm: Sequence[int]) -> LieAlgebra:
    """Relabel so that old basis vector ``i`` becomes new basis vector ``perm[i]``."""
    if sorted(perm) != list(range(L.dim)):
        raise ValueError("perm must be a permutation of range(dim)")
    table = {}
    for (i, j), c in L.brackets.items():
        table[(perm[i], perm[j])] = {perm[k]: x for k, x in c.items()}
    labels = [""] * L.dim
    for i, lab in enumerate(L.basis):
        labels[perm[i]] = lab
    return LieAlgebra.from_table(L.dim, table, labels, L.name)

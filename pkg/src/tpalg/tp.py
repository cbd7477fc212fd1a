"""Transposed Poisson structures on a fixed Lie algebra.

A commutative product ``·`` is compatible with the bracket when
``2 z·[x, y] = [z·x, y] + [x, z·y]`` for all z, x, y; it is a transposed
Poisson structure when it is, in addition, associative.  Coordinates on the
space of symmetric products follow :meth:`BilinearMap.flatten`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product as iproduct

from .derivations import check_dim
from .errors import AutomorphismError, DimensionError
from .lie import (
    BilinearMap,
    LieAlgebra,
    LinearMap,
    _add_entry,
    _add_into,
    _bracket_sparse,
    _pair_index,
    _product_sparse,
    _sparse,
    associativity_violation,
    require_lie,
)
from .linalg import SubspaceBasis, inverse, kernel_of_equations, rank
from .scalar import ONE, ZERO, Scalar, format_scalar

__all__ = [
    "TPCandidateSpace",
    "TPReport",
    "QuadraticForm",
    "compatibility_equations",
    "tp_candidate_space",
    "compatibility_violation",
    "leibniz_violation",
    "verify_tp",
    "verify_poisson_leibniz",
    "associator_constraints",
    "quadratic_forms_json",
    "is_automorphism",
    "transport_product",
]


@dataclass(frozen=True)
class TPCandidateSpace:
    algebra_dim: int
    basis: SubspaceBasis

    @property
    def dim(self) -> int:
        return self.basis.dim

    def products(self) -> list[BilinearMap]:
        return [BilinearMap.from_flat(self.algebra_dim, v) for v in self.basis.vectors]

    def member(self, coords) -> BilinearMap:
        """The product with coordinates ``coords`` on :attr:`basis`."""
        if len(coords) != self.dim:
            raise DimensionError(f"need {self.dim} coordinates, got {len(coords)}")
        flat = [ZERO] * self.basis.ambient_dim
        for t, v in zip(coords, self.basis.vectors):
            if t:
                flat = [a + t * b for a, b in zip(flat, v)]
        return BilinearMap.from_flat(self.algebra_dim, flat)


@dataclass(frozen=True)
class TPReport:
    associative: bool
    compatible: bool
    poisson_leibniz: bool
    commutative: bool = True
    # first failing identity, as ((basis indices), output index), when any
    associativity_failure: tuple | None = None
    compatibility_failure: tuple | None = None
    leibniz_failure: tuple | None = None

    @property
    def is_tp(self) -> bool:
        return self.associative and self.compatible

    @property
    def is_poisson(self) -> bool:
        return self.associative and self.poisson_leibniz

    def flags(self) -> dict:
        return {
            "commutative": self.commutative,
            "associative": self.associative,
            "compatible": self.compatible,
            "poisson_leibniz": self.poisson_leibniz,
        }


def _var(z: int, m: int, k: int, n: int) -> int:
    """Column of the unknown ``(e_z · e_m)_k``."""
    a, b = (z, m) if z <= m else (m, z)
    return _pair_index(a, b, n) * n + k


def compatibility_equations(L: LieAlgebra) -> list[dict]:
    """Rows of ``2 z·[x,y] - [z·x, y] - [x, z·y] = 0`` for every z, x < y and output k."""
    n = L.dim
    rows = []
    for z in range(n):
        for x in range(n):
            for y in range(x + 1, n):
                cxy = L.structure(x, y)
                for k in range(n):
                    row: dict = {}
                    for m, c in cxy.items():
                        _add_entry(row, _var(z, m, k, n), 2 * c)
                    for m in range(n):
                        c = L.structure(m, y).get(k)
                        if c:
                            _add_entry(row, _var(z, x, m, n), -c)
                        c = L.structure(x, m).get(k)
                        if c:
                            _add_entry(row, _var(z, y, m, n), -c)
                    if row:
                        rows.append(row)
    return rows


def tp_candidate_space(L: LieAlgebra) -> TPCandidateSpace:
    """All symmetric products whose left multiplications are ½-derivations."""
    require_lie(L)
    check_dim(L.dim)
    n = L.dim
    basis = kernel_of_equations(compatibility_equations(L), n * n * (n + 1) // 2)
    return TPCandidateSpace(n, basis)


def _same_dim(L: LieAlgebra, d: BilinearMap) -> None:
    if L.dim != d.dim:
        raise DimensionError(f"algebra has dimension {L.dim}, product has dimension {d.dim}")


def compatibility_violation(L: LieAlgebra, d: BilinearMap):
    """First ``((z, x, y), k)`` where the compatibility identity fails, else None."""
    _same_dim(L, d)
    n = L.dim
    for z in range(n):
        ez = {z: ONE}
        for x in range(n):
            for y in range(x + 1, n):
                acc = _product_sparse(d, ez, L.structure(x, y))
                acc = {k: 2 * v for k, v in acc.items()}
                _add_into(acc, _bracket_sparse(L, d.structure(z, x), {y: ONE}), -ONE)
                _add_into(acc, _bracket_sparse(L, {x: ONE}, d.structure(z, y)), -ONE)
                if acc:
                    return (z, x, y), min(acc)
    return None


def leibniz_violation(L: LieAlgebra, d: BilinearMap):
    """First ``((x, y, z), k)`` where ``[x·y, z] = x·[y,z] + [x,z]·y`` fails, else None."""
    _same_dim(L, d)
    n = L.dim
    for x, y, z in iproduct(range(n), repeat=3):
        acc = _bracket_sparse(L, d.structure(x, y), {z: ONE})
        _add_into(acc, _product_sparse(d, {x: ONE}, L.structure(y, z)), -ONE)
        _add_into(acc, _product_sparse(d, L.structure(x, z), {y: ONE}), -ONE)
        if acc:
            return (x, y, z), min(acc)
    return None


def verify_tp(L: LieAlgebra, d: BilinearMap) -> TPReport:
    _same_dim(L, d)
    a = associativity_violation(d)
    c = compatibility_violation(L, d)
    p = leibniz_violation(L, d)
    return TPReport(
        associative=a is None,
        compatible=c is None,
        poisson_leibniz=p is None,
        associativity_failure=a,
        compatibility_failure=c,
        leibniz_failure=p,
    )


def verify_poisson_leibniz(L: LieAlgebra, d: BilinearMap) -> bool:
    return leibniz_violation(L, d) is None


@dataclass(frozen=True)
class QuadraticForm:
    """Associator coefficient ``((e_i e_j) e_k - e_i (e_j e_k))_out`` as ``tᵀ Q t``."""

    triple: tuple
    out: int
    Q: tuple  # symmetric r x r, rows of Scalars

    def evaluate(self, t) -> Scalar:
        acc = ZERO
        for a, row in enumerate(self.Q):
            for b, q in enumerate(row):
                if q and t[a] and t[b]:
                    acc = acc + t[a] * q * t[b]
        return acc

    def to_json(self) -> dict:
        return {
            "triple": list(self.triple),
            "out": self.out,
            "Q": [[format_scalar(x) for x in row] for row in self.Q],
        }


def associator_constraints(space: TPCandidateSpace) -> list[QuadraticForm]:
    """Nonzero quadratic forms whose common zero set is the associative part of ``space``.

    Forms are listed by triple (lexicographic over all ordered triples), then
    output index.
    """
    n = space.algebra_dim
    prods = space.products()
    r = len(prods)
    half = Scalar(1, 0) / 2
    out = []
    for i, j, k in iproduct(range(n), repeat=3):
        # raw[l][(a, b)]: coefficient of t_a t_b in the l-th output
        raw: dict = {}
        for a, da in enumerate(prods):
            for b, db in enumerate(prods):
                acc = _product_sparse(da, db.structure(i, j), {k: ONE})
                _add_into(acc, _product_sparse(da, {i: ONE}, db.structure(j, k)), -ONE)
                for l, v in acc.items():
                    raw.setdefault(l, {})[(a, b)] = v
        for l in sorted(raw):
            m = raw[l]
            Q = tuple(
                tuple((m.get((a, b), ZERO) + m.get((b, a), ZERO)) * half for b in range(r))
                for a in range(r)
            )
            if any(x for row in Q for x in row):
                out.append(QuadraticForm((i, j, k), l, Q))
    return out


def quadratic_forms_json(forms: list[QuadraticForm]) -> str:
    return "[\n" + ",\n".join("  " + json.dumps(f.to_json(), ensure_ascii=False) for f in forms) + "\n]\n" if forms else "[]\n"


def is_automorphism(L: LieAlgebra, phi: LinearMap) -> bool:
    if phi.dim != L.dim:
        raise DimensionError(f"map of dimension {phi.dim} on algebra of dimension {L.dim}")
    if rank(phi.matrix) != L.dim:
        return False
    n = L.dim
    cols = [_sparse(phi.image(j)) for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs: dict = {}
            for m, c in L.structure(i, j).items():
                _add_into(lhs, cols[m], c)
            _add_into(lhs, _bracket_sparse(L, cols[i], cols[j]), -ONE)
            if lhs:
                return False
    return True


def transport_product(L: LieAlgebra, phi: LinearMap, d: BilinearMap) -> BilinearMap:
    """``x * y = φ(φ⁻¹x · φ⁻¹y)`` for an automorphism φ."""
    _same_dim(L, d)
    if not is_automorphism(L, phi):
        raise AutomorphismError("transport needs a Lie algebra automorphism")
    n = L.dim
    inv = inverse(phi.matrix)
    pre = [_sparse(inv.column(j)) for j in range(n)]
    img = [_sparse(phi.image(j)) for j in range(n)]
    table = {}
    for i in range(n):
        for j in range(i, n):
            prod = _product_sparse(d, pre[i], pre[j])
            acc: dict = {}
            for m, c in prod.items():
                _add_into(acc, img[m], c)
            table[(i, j)] = acc
    return BilinearMap(n, table)


"""δ-derivations as the kernel of an explicit linear system.

A linear map φ is a δ-derivation when ``φ[x, y] = δ([φx, y] + [x, φy])``.
Unknowns are the matrix entries of φ flattened row-major, i.e. coordinate
``k * n + m`` is the coefficient of ``e_k`` in ``φ(e_m)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DimensionError
from .lie import (
    LieAlgebra,
    LinearMap,
    _add_entry,
    basis_vector,
    bracket,
    center,
    derived_subalgebra,
    require_lie,
)
from .linalg import SubspaceBasis, kernel_of_equations, member_of, span, span_equal
from .scalar import Scalar, as_scalar

__all__ = [
    "DerivationSpace",
    "max_dim",
    "check_dim",
    "derivation_equations",
    "delta_derivation_space",
    "is_delta_derivation",
    "is_trivial_space",
    "maps_subspace_into",
    "check_invariance",
    "matches_paper_form",
]

HALF = as_scalar("1/2")


def max_dim() -> int:
    """Dimension guard, overridable through ``TPALG_MAX_DIM``."""
    return int(os.environ.get("TPALG_MAX_DIM", "64"))


def check_dim(dim: int) -> None:
    limit = max_dim()
    if dim > limit:
        raise DimensionError(
            f"algebra dimension {dim} exceeds the solver limit {limit} (set TPALG_MAX_DIM to override)"
        )


@dataclass(frozen=True)
class DerivationSpace:
    delta: Scalar
    algebra_dim: int
    basis: SubspaceBasis

    @property
    def dim(self) -> int:
        return self.basis.dim

    def maps(self) -> list[LinearMap]:
        return [LinearMap.from_flat(self.algebra_dim, v) for v in self.basis.vectors]


def derivation_equations(L: LieAlgebra, delta) -> list[dict]:
    """One sparse row per pair ``i < j`` and output index ``k``, in that order."""
    delta = as_scalar(delta)
    n = L.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = L.structure(i, j)
            for k in range(n):
                row: dict = {}
                # φ[e_i, e_j] at k
                for m, c in cij.items():
                    _add_entry(row, k * n + m, c)
                # -δ [φ e_i, e_j] at k  and  -δ [e_i, φ e_j] at k
                for m in range(n):
                    c = L.structure(m, j).get(k)
                    if c:
                        _add_entry(row, m * n + i, -delta * c)
                    c = L.structure(i, m).get(k)
                    if c:
                        _add_entry(row, m * n + j, -delta * c)
                if row:
                    rows.append(row)
    return rows


def delta_derivation_space(L: LieAlgebra, delta=HALF) -> DerivationSpace:
    require_lie(L)
    check_dim(L.dim)
    delta = as_scalar(delta)
    basis = kernel_of_equations(derivation_equations(L, delta), L.dim * L.dim)
    return DerivationSpace(delta, L.dim, basis)


def is_delta_derivation(L: LieAlgebra, phi: LinearMap, delta=HALF) -> bool:
    """Direct check of the identity on all basis pairs (independent of the solver)."""
    delta = as_scalar(delta)
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            ei, ej = basis_vector(n, i), basis_vector(n, j)
            lhs = phi(bracket(L, ei, ej))
            rhs1 = bracket(L, phi(ei), ej)
            rhs2 = bracket(L, ei, phi(ej))
            if any(a - delta * (b + c) for a, b, c in zip(lhs, rhs1, rhs2)):
                return False
    return True


def is_trivial_space(s: DerivationSpace) -> bool:
    """True iff the space is exactly the line of scalar multiples of the identity."""
    if s.delta != HALF:
        raise ValueError("triviality is defined for ½-derivations")
    ident = LinearMap.identity(s.algebra_dim).flatten()
    return span_equal(s.basis, span(len(ident), [ident]))


def maps_subspace_into(phi: LinearMap, source: SubspaceBasis, target: SubspaceBasis) -> bool:
    return all(member_of(phi(v), target) for v in source.vectors)


def check_invariance(L: LieAlgebra, s: DerivationSpace) -> bool:
    """Every basis map preserves ``[L, L]`` and the center."""
    if s.algebra_dim != L.dim:
        raise DimensionError("derivation space belongs to an algebra of another dimension")
    derived = derived_subalgebra(L)
    z = center(L)
    return all(
        maps_subspace_into(phi, derived, derived) and maps_subspace_into(phi, z, z)
        for phi in s.maps()
    )


def matches_paper_form(L: LieAlgebra, s: DerivationSpace, family_forms: SubspaceBasis) -> bool:
    if family_forms.ambient_dim != L.dim * L.dim or s.algebra_dim != L.dim:
        raise DimensionError("closed-form basis lives in a different space of maps")
    return span_equal(s.basis, family_forms)


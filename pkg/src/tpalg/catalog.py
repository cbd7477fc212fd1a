"""Constructors for the algebra families and their closed-form fixtures.

Basis orders (0-based indices in that order):

* ``oscillator``: e_{-1}, e_0, e_1..e_n, ě_1..ě_n
* ``s_n2``: e_1..e_n, x_1, x_2
* ``heis_solvable`` (L_{n,n+1}): e_1..e_{2n+1}, x_1..x_{n+1}
* ``abelian_solvable`` (L_n): e_1..e_n, x_1..x_n
* ``sl2_module`` (sl_2 ⋉ V_m, ``n`` is m): e, f, h, x_0..x_m
* ``heisenberg`` (H_n): e_1..e_{2n+1}
* ``filiform_graded`` (n_{n,1}): e_1..e_n
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CatalogError
from .lie import BilinearMap, LieAlgebra, LinearMap
from .linalg import SubspaceBasis, span
from .scalar import ONE, Scalar, as_scalar

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "build",
    "is_generic_oscillator",
    "oscillator_flags",
    "paper_halfder_basis",
    "paper_tp_product",
    "tp_param_names",
    "oscillator_automorphism",
    "scaling_automorphism",
]

FAMILIES = (
    "oscillator",
    "s_n2",
    "heis_solvable",
    "abelian_solvable",
    "sl2_module",
    "heisenberg",
    "filiform_graded",
)

_MIN_SIZE = {
    "oscillator": 1,
    "s_n2": 3,
    "heis_solvable": 1,
    "abelian_solvable": 1,
    "sl2_module": 2,
    "heisenberg": 1,
    "filiform_graded": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    lambdas: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise CatalogError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.n < _MIN_SIZE[self.family]:
            raise CatalogError(f"{self.family} needs n >= {_MIN_SIZE[self.family]}, got {self.n}")
        lambdas = tuple(as_scalar(x) for x in self.lambdas)
        if self.family == "oscillator":
            if len(lambdas) != self.n:
                raise CatalogError(f"oscillator with n={self.n} needs {self.n} lambdas, got {len(lambdas)}")
            if not all(lambdas):
                raise CatalogError("oscillator lambdas must be nonzero")
        elif lambdas:
            raise CatalogError(f"{self.family} takes no lambda parameters")
        object.__setattr__(self, "lambdas", lambdas)

    @property
    def dim(self) -> int:
        n = self.n
        return {
            "oscillator": 2 * n + 2,
            "s_n2": n + 2,
            "heis_solvable": 3 * n + 2,
            "abelian_solvable": 2 * n,
            "sl2_module": n + 4,
            "heisenberg": 2 * n + 1,
            "filiform_graded": n,
        }[self.family]


# -- index helpers -------------------------------------------------------

def _osc(n: int):
    """Indices of e_{-1}, e_0, e_j (1-based j) and ě_j in the oscillator basis."""
    return 0, 1, (lambda j: 1 + j), (lambda j: 1 + n + j)


def _labels(spec: FamilySpec) -> list[str]:
    n = spec.n
    f = spec.family
    if f == "oscillator":
        return ["e-1", "e0"] + [f"e{j}" for j in range(1, n + 1)] + [f"ě{j}" for j in range(1, n + 1)]
    if f == "s_n2":
        return [f"e{i}" for i in range(1, n + 1)] + ["x1", "x2"]
    if f == "heis_solvable":
        return [f"e{i}" for i in range(1, 2 * n + 2)] + [f"x{i}" for i in range(1, n + 2)]
    if f == "abelian_solvable":
        return [f"e{i}" for i in range(1, n + 1)] + [f"x{i}" for i in range(1, n + 1)]
    if f == "sl2_module":
        return ["e", "f", "h"] + [f"x{k}" for k in range(n + 1)]
    if f == "heisenberg":
        return [f"e{i}" for i in range(1, 2 * n + 2)]
    return [f"e{i}" for i in range(1, n + 1)]


def _name(spec: FamilySpec) -> str:
    if spec.family == "oscillator":
        return f"oscillator_n{spec.n}_lambda_" + ",".join(str(x) for x in spec.lambdas)
    return f"{spec.family}_n{spec.n}"


# -- build ---------------------------------------------------------------

def build(spec: FamilySpec) -> LieAlgebra:
    n = spec.n
    t: dict = {}
    f = spec.family
    if f == "oscillator":
        em1, e0, e, ec = _osc(n)
        for j, lam in enumerate(spec.lambdas, start=1):
            t[(em1, e(j))] = {ec(j): lam}
            t[(em1, ec(j))] = {e(j): -lam}
            t[(e(j), ec(j))] = {e0: ONE}
    elif f == "s_n2":
        x1, x2 = n, n + 1
        for i in range(2, n):
            t[(i - 1, 0)] = {i: 1}  # [e_i, e_1] = e_{i+1}
        t[(0, x1)] = {0: 1}
        for i in range(3, n + 1):
            t[(i - 1, x1)] = {i - 1: i - 2}
        for i in range(2, n + 1):
            t[(i - 1, x2)] = {i - 1: 1}
    elif f in ("heis_solvable", "heisenberg"):
        top = 2 * n  # e_{2n+1}
        for i in range(1, n + 1):
            t[(n + i - 1, i - 1)] = {top: 1}  # [e_{n+i}, e_i] = e_{2n+1}
        if f == "heis_solvable":
            x = lambda k: 2 * n + k  # noqa: E731  x_k, 1-based
            for i in range(1, n + 1):
                t[(i - 1, x(i))] = {i - 1: 1}
                t[(n + i - 1, x(i))] = {n + i - 1: -1}
                t[(i - 1, x(n + 1))] = {i - 1: 1}
            t[(top, x(n + 1))] = {top: 1}
    elif f == "abelian_solvable":
        for i in range(n):
            t[(i, n + i)] = {i: 1}
    elif f == "sl2_module":
        m = n
        E, F, H = 0, 1, 2
        x = lambda k: 3 + k  # noqa: E731
        t[(E, F)] = {H: 1}
        t[(H, E)] = {E: 2}
        t[(F, H)] = {F: 2}
        for k in range(m + 1):
            if 2 * k - m:
                t[(x(k), H)] = {x(k): 2 * k - m}
        for k in range(m):
            t[(x(k), F)] = {x(k + 1): 1}
        for k in range(1, m + 1):
            t[(x(k), E)] = {x(k - 1): k * (m + 1 - k)}
    elif f == "filiform_graded":
        for i in range(2, n):
            t[(i - 1, 0)] = {i: 1}
    return LieAlgebra.from_table(spec.dim, t, _labels(spec), _name(spec))


# -- oscillator parameter conventions ------------------------------------

def is_generic_oscillator(lambdas: Sequence) -> bool:
    """Positive, strictly increasing and ``λ_i + λ_j != λ_k`` for ``i < j < k``."""
    lam = [as_scalar(x) for x in lambdas]
    if any(not x.is_real for x in lam):
        raise CatalogError("genericity is only defined for real lambdas")
    r = [x.re for x in lam]
    if not r or r[0] <= 0 or any(a >= b for a, b in zip(r, r[1:])):
        return False
    n = len(r)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if r[i] + r[j] == r[k]:
                    return False
    return True


def oscillator_flags(lambdas: Sequence) -> list[str]:
    """Departures from the ``0 < λ_1 <= ... <= λ_n`` convention (advisory only)."""
    lam = [as_scalar(x) for x in lambdas]
    flags = []
    if any(not x.is_real for x in lam):
        flags.append("non-real lambda")
        return flags
    if any(x.re <= 0 for x in lam):
        flags.append("non-positive lambda")
    if any(a.re > b.re for a, b in zip(lam, lam[1:])):
        flags.append("lambdas not non-decreasing")
    return flags


# -- closed-form ½-derivations -------------------------------------------

def _flat_map(dim: int, images: dict) -> tuple[Scalar, ...]:
    return LinearMap.from_images(dim, images).flatten()


def _identity_images(dim: int) -> dict:
    return {j: {j: 1} for j in range(dim)}


def paper_halfder_basis(spec: FamilySpec) -> SubspaceBasis:
    """Flattened closed-form ½-derivation basis, one map per free parameter."""
    n, dim, f = spec.n, spec.dim, spec.family
    maps = [_identity_images(dim)]
    if f == "oscillator":
        em1, e0, e, ec = _osc(n)
        maps.append({em1: {e0: 1}})
        for j, lam in enumerate(spec.lambdas, start=1):
            maps.append({em1: {e(j): -2 * lam}, e(j): {e0: 1}})
            maps.append({em1: {ec(j): -2 * lam}, ec(j): {e0: 1}})
    elif f == "s_n2":
        maps.append({n: {n - 1: n - 2}, n + 1: {n - 1: 1}})
    elif f == "heis_solvable":
        maps.append({3 * n + 1: {2 * n: 1}})
    elif f == "abelian_solvable":
        maps = []
        for i in range(n):
            maps.append({i: {i: 1}, n + i: {n + i: 1}})
            maps.append({n + i: {i: 1}})
    elif f == "sl2_module":
        if n == 2:
            maps.append({0: {3: -2}, 1: {5: 1}, 2: {4: -2}})
    else:
        raise CatalogError(f"no closed-form ½-derivations recorded for {f}")
    return span(dim * dim, [_flat_map(dim, m) for m in maps])


# -- closed-form TP products ---------------------------------------------

def tp_param_names(spec: FamilySpec) -> list[str]:
    n, f = spec.n, spec.family
    if f == "oscillator":
        return ["gamma", "mu"] + [f"alpha{j}" for j in range(1, n + 1)] + [f"beta{j}" for j in range(1, n + 1)]
    if f in ("s_n2", "heis_solvable"):
        return ["gamma"]
    if f == "abelian_solvable":
        return [name for i in range(1, n + 1) for name in (f"mu{i}", f"tau{i}")]
    raise CatalogError(f"no transposed Poisson table recorded for {f}")


def paper_tp_product(spec: FamilySpec, params: Sequence) -> BilinearMap:
    """The TP product table recorded for the family.

    ``params`` follows :func:`tp_param_names`.
    """
    names = tp_param_names(spec)
    p = [as_scalar(x) for x in params]
    if len(p) != len(names):
        raise CatalogError(f"{spec.family} expects {len(names)} parameters ({', '.join(names)}), got {len(p)}")
    n, dim, f = spec.n, spec.dim, spec.family
    t: dict = {}
    if f == "oscillator":
        em1, e0, e, ec = _osc(n)
        gamma, mu = p[0], p[1]
        alpha, beta = p[2:2 + n], p[2 + n:]
        sq = {em1: gamma, e0: mu}
        for k, lam in enumerate(spec.lambdas, start=1):
            sq[e(k)] = -2 * lam * alpha[k - 1]
            sq[ec(k)] = -2 * lam * beta[k - 1]
        t[(em1, em1)] = sq
        t[(em1, e0)] = {e0: gamma}
        for j, lam in enumerate(spec.lambdas, start=1):
            t[(em1, e(j))] = {e0: alpha[j - 1], e(j): gamma}
            t[(em1, ec(j))] = {e0: beta[j - 1], ec(j): gamma}
            t[(e(j), e(j))] = {e0: -gamma / (2 * lam)}
            t[(ec(j), ec(j))] = {e0: -gamma / (2 * lam)}
    elif f == "s_n2":
        gamma = p[0]
        x1, x2, en = n, n + 1, n - 1
        t[(x1, x1)] = {en: (n - 2) ** 2 * gamma}
        t[(x1, x2)] = {en: (n - 2) * gamma}
        t[(x2, x2)] = {en: gamma}
    elif f == "heis_solvable":
        t[(3 * n + 1, 3 * n + 1)] = {2 * n: p[0]}
    elif f == "abelian_solvable":
        mu, tau = p[0::2], p[1::2]
        for i in range(n):
            t[(i, n + i)] = {i: mu[i]}
            t[(n + i, n + i)] = {n + i: mu[i], i: tau[i]}
    return BilinearMap.from_table(dim, t)


# -- automorphisms -------------------------------------------------------

def oscillator_automorphism(
    lambdas: Sequence,
    sign: int,
    nu,
    nus: Sequence,
    nu_checks: Sequence,
    mus: Sequence,
    mu_checks: Sequence,
) -> LinearMap:
    """Automorphism of the oscillator algebra from translation data ``ν`` and rotations ``μ``.

    ``sign`` is +1 or -1.  All ``μ_i² + μ̌_i²`` must agree (their common value
    ξ scales e_0) and be nonzero.
    """
    lam = [as_scalar(x) for x in lambdas]
    n = len(lam)
    if sign not in (1, -1):
        raise CatalogError("sign must be +1 or -1")
    nus, nu_checks = [as_scalar(x) for x in nus], [as_scalar(x) for x in nu_checks]
    mus, mu_checks = [as_scalar(x) for x in mus], [as_scalar(x) for x in mu_checks]
    if not all(len(v) == n for v in (nus, nu_checks, mus, mu_checks)):
        raise CatalogError(f"expected {n} values for each of nu_i, nǔ_i, mu_i, mǔ_i")
    xis = [m * m + mc * mc for m, mc in zip(mus, mu_checks)]
    if any(x != xis[0] for x in xis):
        raise CatalogError("mu_i^2 + mǔ_i^2 differs between indices: " + ", ".join(str(x) for x in xis))
    xi = xis[0]
    if not xi:
        raise CatalogError("mu_i^2 + mǔ_i^2 vanishes; the map would be singular")
    s = as_scalar(sign)
    em1, e0, e, ec = _osc(n)
    images = {em1: {em1: s, e0: as_scalar(nu)}, e0: {e0: s * xi}}
    for i in range(1, n + 1):
        v, vc, m, mc, li = nus[i - 1], nu_checks[i - 1], mus[i - 1], mu_checks[i - 1], lam[i - 1]
        images[em1][e(i)] = v
        images[em1][ec(i)] = vc
        images[e(i)] = {e0: (vc * mc - s * v * m) / li, e(i): m, ec(i): -s * mc}
        images[ec(i)] = {e0: -(s * v * mc + vc * m) / li, e(i): mc, ec(i): s * m}
    return LinearMap.from_images(2 * n + 2, images)


def scaling_automorphism(spec: FamilySpec, gamma) -> LinearMap:
    """The normalising automorphism that sends the γ-family of TP products to γ = 1.

    ``s_n2``: e_1, x_j fixed, e_i -> e_i/γ for i >= 2.
    ``heis_solvable``: e_i (i <= n), x_k fixed, e_j -> e_j/γ for j > n.
    """
    g = as_scalar(gamma)
    if not g:
        raise CatalogError("gamma must be nonzero")
    n, dim = spec.n, spec.dim
    if spec.family == "s_n2":
        scaled = range(1, n)
    elif spec.family == "heis_solvable":
        scaled = range(n, 2 * n + 1)
    else:
        raise CatalogError(f"no scaling automorphism recorded for {spec.family}")
    inv = g.inverse()
    images = {j: {j: 1} for j in range(dim)}
    for j in scaled:
        images[j] = {j: inv}
    return LinearMap.from_images(dim, images)

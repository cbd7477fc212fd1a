"""Seeded reproduction of the classification results for one family.

Each sample redraws the family parameters (λ for oscillators) and the
theorem-table parameters, rebuilds everything and records one
:class:`CheckResult` per assertion.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .catalog import (
    FamilySpec,
    build,
    oscillator_automorphism,
    paper_halfder_basis,
    paper_tp_product,
    scaling_automorphism,
    tp_param_names,
)
from .derivations import (
    check_invariance,
    delta_derivation_space,
    is_delta_derivation,
    is_trivial_space,
    matches_paper_form,
)
from .errors import CatalogError
from .lie import jacobi_violation
from .linalg import member_of
from .sampling import make_rng, random_lambdas, random_rational, random_rationals
from .scalar import ONE, ZERO
from .tp import tp_candidate_space, transport_product, verify_poisson_leibniz, verify_tp

__all__ = ["CheckResult", "CHECKABLE", "expected_halfder_dim", "expected_tp_dim", "run_paper_check"]

CHECKABLE = ("oscillator", "s_n2", "heis_solvable", "abelian_solvable", "sl2_module")


@dataclass(frozen=True)
class CheckResult:
    sample: int
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  sample={self.sample}  {self.name}: {self.detail}"


def expected_halfder_dim(spec: FamilySpec) -> int:
    n = spec.n
    return {
        "oscillator": 2 * n + 2,
        "s_n2": 2,
        "heis_solvable": 2,
        "abelian_solvable": 2 * n,
        "sl2_module": 2 if n == 2 else 1,
    }[spec.family]


def expected_tp_dim(spec: FamilySpec) -> int:
    n = spec.n
    return {
        "oscillator": 2 * n + 2,
        "s_n2": 1,
        "heis_solvable": 1,
        "abelian_solvable": 2 * n,
        "sl2_module": 0,
    }[spec.family]


def _fmt_failure(report) -> str:
    for label in ("compatibility", "associativity"):
        f = getattr(report, f"{label}_failure")
        if f is not None:
            return f"{label} fails at basis {f[0]}, output {f[1]}"
    return "compatible and associative"


def _structural(spec: FamilySpec, sample: int):
    """Parameter-free checks; returns the results and the TP candidate space."""
    out = []
    L = build(spec)
    bad = jacobi_violation(L)
    where = f" (lambda={','.join(str(x) for x in spec.lambdas)})" if spec.lambdas else ""
    out.append(CheckResult(sample, "jacobi", bad is None,
                           ("holds" if bad is None else f"fails at triple {bad[0]}") + where))
    if bad is not None:
        return out, None
    D = delta_derivation_space(L)
    want = expected_halfder_dim(spec)
    out.append(CheckResult(sample, "halfder_dim", D.dim == want, f"expected {want}, got {D.dim}"))
    same = matches_paper_form(L, D, paper_halfder_basis(spec))
    out.append(CheckResult(sample, "halfder_span", same,
                           "solver basis equals closed form" if same else "solver basis differs from closed form"))
    bad_maps = [a for a, phi in enumerate(D.maps()) if not is_delta_derivation(L, phi)]
    out.append(CheckResult(sample, "halfder_identity", not bad_maps,
                           "every basis map satisfies the identity" if not bad_maps
                           else f"basis maps {bad_maps} violate the identity"))
    inv = check_invariance(L, D)
    out.append(CheckResult(sample, "invariance", inv, "[L,L] and center preserved" if inv else "not preserved"))
    trivial = is_trivial_space(D)
    want_trivial = spec.family == "sl2_module" and spec.n > 2
    out.append(CheckResult(sample, "halfder_trivial", trivial == want_trivial,
                           f"trivial={trivial}, expected {want_trivial}"))
    T = tp_candidate_space(L)
    want = expected_tp_dim(spec)
    out.append(CheckResult(sample, "tp_space_dim", T.dim == want, f"expected {want}, got {T.dim}"))
    return out, T


def _with_tables(spec: FamilySpec, rng, sample: int, T) -> list[CheckResult]:
    out = []
    f = spec.family
    if f == "sl2_module":
        return out
    L = build(spec)
    params = random_rationals(rng, len(tp_param_names(spec)))
    d = paper_tp_product(spec, params)
    member = member_of(d.flatten(), T.basis)
    out.append(CheckResult(sample, "tp_table_member", member,
                           "table lies in the candidate space" if member else "table outside candidate space"))
    rep = verify_tp(L, d)
    out.append(CheckResult(sample, "tp_table_verify", rep.is_tp, _fmt_failure(rep)))

    if f == "oscillator":
        n = spec.n
        gamma, alpha, beta = params[0], params[2:2 + n], params[2 + n:]
        want = not (gamma or any(alpha) or any(beta))
        got = verify_poisson_leibniz(L, d)
        out.append(CheckResult(sample, "poisson_iff", got == want, f"poisson={got}, expected {want}"))
        mu_only = [ZERO, random_rational(rng, nonzero=True)] + [ZERO] * (2 * n)
        got = verify_poisson_leibniz(L, paper_tp_product(spec, mu_only))
        out.append(CheckResult(sample, "poisson_mu_only", got, f"poisson={got}, expected True"))
        g = random_rational(rng, nonzero=True)
        fam = paper_tp_product(spec, [g] + [ZERO] * (2 * n + 1))
        neg = paper_tp_product(spec, [-g] + [ZERO] * (2 * n + 1))
        phi = oscillator_automorphism(spec.lambdas, -1, 0, [0] * n, [0] * n, [1] * n, [0] * n)
        moved = transport_product(L, phi, fam)
        ok = moved == neg and verify_tp(L, moved).flags() == verify_tp(L, fam).flags()
        out.append(CheckResult(sample, "transport_gamma_sign", ok,
                               f"gamma={g} carried to {-g}" if ok else f"gamma={g} not carried to {-g}"))
    elif f in ("s_n2", "heis_solvable"):
        one = paper_tp_product(spec, [ONE])
        got = verify_poisson_leibniz(L, one)
        out.append(CheckResult(sample, "non_poisson", not got, f"poisson={got}, expected False"))
        g = random_rational(rng, nonzero=True)
        moved = transport_product(L, scaling_automorphism(spec, g), paper_tp_product(spec, [g]))
        ok = moved == one
        out.append(CheckResult(sample, "transport_to_gamma_1", ok,
                               f"gamma={g} normalised to 1" if ok else f"gamma={g} not normalised"))
    return out


def run_paper_check(family: str, n: int, samples: int, seed: int, lambdas=None) -> list[CheckResult]:
    """Run every recorded assertion for ``samples`` seeded draws."""
    if family not in CHECKABLE:
        raise CatalogError(f"no recorded results to check for family {family!r}")
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = make_rng(seed)
    cache: dict = {}
    results: list[CheckResult] = []
    for s in range(samples):
        if family == "oscillator":
            lam = tuple(lambdas) if lambdas else tuple(random_lambdas(rng, n))
            spec = FamilySpec(family, n, lam)
        else:
            spec = FamilySpec(family, n)
        if spec not in cache:
            cache[spec] = _structural(spec, s)
        structural, T = cache[spec]
        results.extend(CheckResult(s, r.name, r.passed, r.detail) for r in structural)
        if T is not None:
            results.extend(_with_tables(spec, rng, s, T))
    return results

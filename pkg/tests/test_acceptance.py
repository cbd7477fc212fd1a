"""Acceptance criteria, one exact check per criterion.

Run under pytest (a summary section lists one PASS/FAIL line per criterion)
or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
from functools import cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tpalg.catalog import (  # noqa: E402
    FamilySpec,
    build,
    oscillator_automorphism,
    paper_halfder_basis,
    paper_tp_product,
    scaling_automorphism,
    tp_param_names,
)
from tpalg.derivations import check_invariance, delta_derivation_space, matches_paper_form  # noqa: E402
from tpalg.lie import BilinearMap  # noqa: E402
from tpalg.linalg import Matrix, kernel_basis, member_of, rank, rref  # noqa: E402
from tpalg.sampling import make_rng, random_lambdas, random_rational, random_rationals  # noqa: E402
from tpalg.scalar import ONE, ZERO, Scalar  # noqa: E402
from tpalg.tp import (  # noqa: E402
    compatibility_violation,
    tp_candidate_space,
    transport_product,
    verify_poisson_leibniz,
    verify_tp,
)

SEED = 20240611


def _count(label: str, ok: int, total: int, failures: list) -> tuple[bool, str]:
    detail = f"{ok}/{total} {label} pass"
    if failures:
        detail += f"; first failure {failures[0]}"
    return ok == total, detail


# -- shared fixtures -----------------------------------------------------------

@cache
def halfder_cases():
    """(spec, expected dimension) for every instance named in criterion 1."""
    rng = make_rng(SEED)
    cases = []
    for n in (1, 2, 3):
        for _ in range(20):
            lam = tuple(random_lambdas(rng, n))
            cases.append((FamilySpec("oscillator", n, lam), 2 * n + 2))
    cases += [(FamilySpec("s_n2", n), 2) for n in range(4, 8)]
    cases += [(FamilySpec("heis_solvable", n), 2) for n in (1, 2, 3)]
    cases += [(FamilySpec("abelian_solvable", n), 2 * n) for n in (1, 2, 3, 4)]
    cases += [(FamilySpec("sl2_module", m), 1) for m in (3, 4, 5)]
    cases.append((FamilySpec("sl2_module", 2), 2))
    return cases


@cache
def halfder_space(spec: FamilySpec):
    L = build(spec)
    return L, delta_derivation_space(L)


def _label(spec: FamilySpec) -> str:
    if spec.lambdas:
        return f"{spec.family} n={spec.n} lambda=({','.join(str(x) for x in spec.lambdas)})"
    return f"{spec.family} n={spec.n}"


TP_SPACE_CASES = (
    [(FamilySpec("oscillator", n, tuple(Scalar(k) for k in range(1, n + 1))), 2 * n + 2) for n in (1, 2)]
    + [(FamilySpec("s_n2", n), 1) for n in (4, 5)]
    + [(FamilySpec("heis_solvable", n), 1) for n in (1, 2)]
    + [(FamilySpec("abelian_solvable", n), 2 * n) for n in (1, 2, 3)]
    + [(FamilySpec("sl2_module", m), 0) for m in (2, 3, 4)]
)


@cache
def tp_space(spec: FamilySpec):
    L = build(spec)
    return L, tp_candidate_space(L)


def random_symmetric(rng, dim: int, density: float = 0.3) -> BilinearMap:
    """Sparse random symmetric product with at least one nonzero entry."""
    table = {}
    for i in range(dim):
        for j in range(i, dim):
            if rng.random() < density:
                table[(i, j)] = {rng.randrange(dim): random_rational(rng, nonzero=True)
                                 for _ in range(rng.randint(1, 2))}
    if not table:
        i = rng.randrange(dim)
        table[(i, rng.randrange(i, dim))] = {rng.randrange(dim): random_rational(rng, nonzero=True)}
    return BilinearMap.from_table(dim, table)


def _add(a: BilinearMap, b: BilinearMap) -> BilinearMap:
    return BilinearMap.from_flat(a.dim, [x + y for x, y in zip(a.flatten(), b.flatten())])


# -- criteria --------------------------------------------------------------------

def criterion_1():
    fails = []
    cases = halfder_cases()
    for spec, want in cases:
        got = halfder_space(spec)[1].dim
        if got != want:
            fails.append(f"{_label(spec)} expected {want} got {got}")
    return _count("cases", len(cases) - len(fails), len(cases), fails)


def criterion_2():
    fails = []
    cases = halfder_cases()
    for spec, _ in cases:
        L, D = halfder_space(spec)
        if not matches_paper_form(L, D, paper_halfder_basis(spec)):
            fails.append(_label(spec))
    return _count("cases", len(cases) - len(fails), len(cases), fails)


def criterion_3():
    fails = []
    for spec, want in TP_SPACE_CASES:
        got = tp_space(spec)[1].dim
        if got != want:
            fails.append(f"{_label(spec)} expected {want} got {got}")
    return _count("cases", len(TP_SPACE_CASES) - len(fails), len(TP_SPACE_CASES), fails)


def _l_n_params(rng, n: int, kind: str) -> list:
    if kind == "general":
        return random_rationals(rng, 2 * n)
    if kind == "tp1":
        return [x for _ in range(n) for x in (random_rational(rng), ZERO)]
    return [x for _ in range(n) for x in (ZERO, ONE)]


def criterion_4():
    rng = make_rng(SEED + 4)
    fails, total = [], 0
    for family in ("oscillator", "s_n2", "heis_solvable", "L_n", "TP1", "TP2"):
        for draw in range(50):
            if family == "oscillator":
                n = 1 + draw % 3
                spec = FamilySpec("oscillator", n, tuple(random_lambdas(rng, n)))
                params = random_rationals(rng, len(tp_param_names(spec)))
            elif family in ("s_n2", "heis_solvable"):
                n = 4 + draw % 4 if family == "s_n2" else 1 + draw % 3
                spec = FamilySpec(family, n)
                params = [random_rational(rng)]
            else:
                n = 1 + draw % 4
                spec = FamilySpec("abelian_solvable", n)
                params = _l_n_params(rng, n, {"L_n": "general", "TP1": "tp1", "TP2": "tp2"}[family])
            total += 1
            rep = verify_tp(build(spec), paper_tp_product(spec, params))
            if not (rep.compatible and rep.associative):
                fails.append(f"{family} draw {draw} {_label(spec)}")
    return _count("draws", total - len(fails), total, fails)


def criterion_5():
    rng = make_rng(SEED + 5)
    fails, total = [], 0
    for n in (1, 2, 3):
        spec = FamilySpec("oscillator", n, tuple(random_lambdas(rng, n)))
        L = build(spec)
        for draw in range(30):
            kind = draw % 3
            mu = random_rational(rng)
            rest = [ZERO] * (2 * n + 1)  # gamma, alpha_1..n, beta_1..n
            if kind == 1:
                rest = random_rationals(rng, 2 * n + 1)
            elif kind == 2:
                rest[rng.randrange(2 * n + 1)] = random_rational(rng, nonzero=True)
            params = [rest[0], mu] + rest[1:]
            want = not any(rest)
            total += 1
            if verify_poisson_leibniz(L, paper_tp_product(spec, params)) != want:
                fails.append(f"{_label(spec)} params {params} expected poisson={want}")
    for spec in [FamilySpec("s_n2", n) for n in range(4, 8)] + [FamilySpec("heis_solvable", n) for n in (1, 2, 3)]:
        total += 1
        if verify_poisson_leibniz(build(spec), paper_tp_product(spec, [ONE])):
            fails.append(f"{_label(spec)} gamma=1 satisfies Leibniz")
    return _count("products", total - len(fails), total, fails)


def criterion_6():
    fails = []
    cases = halfder_cases()
    for spec, _ in cases:
        L, D = halfder_space(spec)
        if not check_invariance(L, D):
            fails.append(_label(spec))
    return _count("cases", len(cases) - len(fails), len(cases), fails)


def _random_oscillator_automorphism(rng, lambdas):
    n = len(lambdas)
    while True:
        mu, mu_c = random_rational(rng), random_rational(rng)
        if mu or mu_c:
            break
    mus, mu_cs = [mu], [mu_c]
    for _ in range(1, n):
        # a rational rotation keeps mu^2 + mǔ^2 fixed
        mu, mu_c = (3 * mu - 4 * mu_c) / 5, (4 * mu + 3 * mu_c) / 5
        mus.append(mu)
        mu_cs.append(mu_c)
    sign = rng.choice((1, -1))
    return oscillator_automorphism(lambdas, sign, random_rational(rng), random_rationals(rng, n),
                                   random_rationals(rng, n), mus, mu_cs)


def criterion_7():
    rng = make_rng(SEED + 7)
    fails, total = [], 0
    # gamma-family of s_n2 normalised to gamma = 1
    for n in (4, 5, 6):
        spec = FamilySpec("s_n2", n)
        L = build(spec)
        for _ in range(5):
            g = random_rational(rng, nonzero=True)
            total += 1
            moved = transport_product(L, scaling_automorphism(spec, g), paper_tp_product(spec, [g]))
            if moved != paper_tp_product(spec, [ONE]):
                fails.append(f"s_n2 n={n} gamma={g}")
    # oscillator gamma-family carried to -gamma by the negative automorphism
    for lam in ((1,), (1, 3), (1, 3, 7)):
        lam = tuple(Scalar(x) for x in lam)
        spec = FamilySpec("oscillator", len(lam), lam)
        n, L = len(lam), build(spec)
        phi = oscillator_automorphism(lam, -1, 0, [0] * n, [0] * n, [1] * n, [0] * n)
        for _ in range(5):
            g = random_rational(rng, nonzero=True)
            zeros = [ZERO] * (2 * n + 1)
            total += 1
            moved = transport_product(L, phi, paper_tp_product(spec, [g] + zeros))
            if moved != paper_tp_product(spec, [-g] + zeros):
                fails.append(f"oscillator {lam} gamma={g}")
    # flags invariant on random (automorphism, product) pairs
    for k in range(50):
        which = k % 3
        if which < 2:
            lam = tuple(random_lambdas(rng, which + 1))
            spec = FamilySpec("oscillator", which + 1, lam)
            phi = _random_oscillator_automorphism(rng, lam)
        else:
            spec = FamilySpec("s_n2", 4)
            phi = scaling_automorphism(spec, random_rational(rng, nonzero=True))
        L, T = tp_space(spec)
        if k % 2:
            d = T.member(random_rationals(rng, T.dim))
        else:
            d = random_symmetric(rng, L.dim)
        total += 1
        before = verify_tp(L, d).flags()
        after = verify_tp(L, transport_product(L, phi, d)).flags()
        if before != after:
            fails.append(f"pair {k} {_label(spec)}: {before} vs {after}")
    return _count("checks", total - len(fails), total, fails)


def criterion_8():
    rng = make_rng(SEED + 8)
    fails, total, members = [], 0, 0
    for spec, _ in TP_SPACE_CASES:
        L, T = tp_space(spec)
        for k in range(100):
            d = T.member(random_rationals(rng, T.dim)) if T.dim else BilinearMap.zero(L.dim)
            if k % 2:
                d = _add(d, random_symmetric(rng, L.dim, density=0.05))
            inside = member_of(d.flatten(), T.basis)
            compatible = compatibility_violation(L, d) is None
            members += inside
            total += 1
            if inside != compatible:
                fails.append(f"{_label(spec)} product {k}: member={inside} compatible={compatible}")
    ok, detail = _count("products", total - len(fails), total, fails)
    return ok, f"{detail} ({members} members, {total - members} non-members)"


def _random_matrix(rng) -> Matrix:
    rows, cols = rng.randint(1, 12), rng.randint(1, 18)
    gaussian = rng.random() < 0.2

    def entry():
        if rng.random() < 0.4:
            return ZERO
        x = random_rational(rng)
        return x + random_rational(rng) * Scalar(0, 1) if gaussian else x

    if rng.random() < 0.4:
        k = rng.randint(1, min(rows, cols))
        a = Matrix.from_rows([[entry() for _ in range(k)] for _ in range(rows)])
        b = Matrix.from_rows([[entry() for _ in range(cols)] for _ in range(k)])
        return a @ b
    return Matrix.from_rows([[entry() for _ in range(cols)] for _ in range(rows)])


def criterion_9():
    rng = make_rng(SEED + 9)
    fails = []
    for k in range(200):
        m = _random_matrix(rng)
        r, K = rank(m), kernel_basis(m)
        red = rref(m)
        if r + K.dim != m.cols:
            fails.append(f"matrix {k}: rank {r} + nullity {K.dim} != {m.cols}")
        elif any(any(x for x in m.apply(v)) for v in K.vectors):
            fails.append(f"matrix {k}: nonzero kernel residual")
        elif rref(red) != red:
            fails.append(f"matrix {k}: rref not idempotent")
        elif rank(m.transpose()) != r:
            fails.append(f"matrix {k}: row rank differs from column rank")
    return _count("matrices", 200 - len(fails), 200, fails)


CRITERIA = {
    1: ("half-derivation dimensions", criterion_1),
    2: ("span equality with closed forms", criterion_2),
    3: ("TP candidate-space dimensions", criterion_3),
    4: ("TP product tables verify", criterion_4),
    5: ("Poisson iff-criterion", criterion_5),
    6: ("invariance of [L,L] and center", criterion_6),
    7: ("transport checks", criterion_7),
    8: ("solver/verifier cross-oracle", criterion_8),
    9: ("linear-algebra substrate", criterion_9),
}


def report_line(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    ok, detail = fn()
    return ok, f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({title}): {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    from conftest import ACCEPTANCE_LINES

    ok, line = report_line(number)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [report_line(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

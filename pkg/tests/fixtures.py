"""Small hand-built algebras used across test modules."""

from tpalg.catalog import FamilySpec, build
from tpalg.lie import LieAlgebra
from tpalg.scalar import Scalar

E, F, H = 0, 1, 2


def sl2(he: int = 2) -> LieAlgebra:
    """sl_2 on (e, f, h) with [e,f]=h, [h,e]=he*e, [f,h]=2f; ``he=2`` is the real thing."""
    return LieAlgebra.from_table(3, {(E, F): {H: 1}, (H, E): {E: he}, (F, H): {F: 2}}, ("e", "f", "h"), "sl2")


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, name=f"abelian{n}")


def oscillator(*lambdas) -> LieAlgebra:
    return build(FamilySpec("oscillator", len(lambdas), tuple(Scalar(x) for x in lambdas)))


def family(name: str, n: int) -> LieAlgebra:
    return build(FamilySpec(name, n))

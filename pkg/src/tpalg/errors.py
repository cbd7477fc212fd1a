"""Exception hierarchy shared by every tpalg module."""

from __future__ import annotations


class TpalgError(Exception):
    """Base class for all library errors."""


class FormatError(TpalgError, ValueError):
    """Malformed scalar text or algebra/product/map file."""


class DimensionError(TpalgError, ValueError):
    """Operands of incompatible size, or a system above the dimension guard."""


class JacobiError(TpalgError):
    """A bracket table that violates the Jacobi identity."""

    def __init__(self, triple: tuple[int, int, int], message: str | None = None):
        self.triple = triple
        super().__init__(message or f"Jacobi identity fails on basis triple {triple}")


class AutomorphismError(TpalgError, ValueError):
    """A linear map that is singular or does not preserve the bracket."""


class CatalogError(TpalgError, ValueError):
    """Invalid family, size or parameter list for a catalog constructor."""

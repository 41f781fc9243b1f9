"""Point types for quotient surfaces built from products of C, C^x, and tori."""

from __future__ import annotations

from dataclasses import dataclass

from .numeric import close, lattice_contains


@dataclass(frozen=True)
class TorusPoint:
    """Point of C modulo the lattice spanned by (w1, w2); stored via a representative."""

    value: complex
    w1: complex
    w2: complex

    def same_lattice(self, other):
        return close(self.w1, other.w1) and close(self.w2, other.w2)

    def __eq__(self, other):
        if not isinstance(other, TorusPoint) or not self.same_lattice(other):
            return NotImplemented
        return lattice_contains(self.value - other.value, self.w1, self.w2)

    def shifted(self, t):
        return TorusPoint(self.value + t, self.w1, self.w2)


@dataclass(frozen=True)
class CylinderPoint:
    """Point of C modulo the rank-one group delta*Z, via the exponential chart."""

    value: complex  # the invariant exp(2 pi i w / delta)
    delta: complex


def component_equal(a, b, tol=None):
    """Equality of product-surface components: complex values or TorusPoints."""
    if isinstance(a, TorusPoint) or isinstance(b, TorusPoint):
        return isinstance(a, TorusPoint) and isinstance(b, TorusPoint) and bool(a == b)
    return close(complex(a), complex(b), tol=tol)


def product_equal(p, q, tol=None):
    if len(p) != len(q):
        return False
    return all(component_equal(a, b, tol=tol) for a, b in zip(p, q))

"""Elliptic-curve bundles over the punctured plane and their biholomorphisms.

The deck group on C^2 is generated by (z, w) -> (z + 1, c w) and the
w-translations by a lattice preserved by c; the quotient fibers over C^x with
elliptic-curve fibers.  The biholomorphism families of the quotient depend on
whether c is 1, -1, or another root of unity; each family row is an explicit
map on C^2, and normalizing the deck group (conjugation sends generators to
deck elements) is the checkable half of the classification, verified here by
sampling.

Holomorphic data on the base is restricted to Laurent polynomials in
e^{2 pi i z} of bounded degree: a dense subfamily that suffices for the
verifiable direction.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .numeric import close, lattice_contains, rational_reconstruct

LAURENT_DEGREE_CAP = 8


def _is_unit_of(b, w1, w2, tol=1e-8):
    if abs(b) == 0:
        return False
    return all(
        lattice_contains(x, w1, w2, tol=tol)
        for x in (b * w1, b * w2, w1 / b, w2 / b)
    )


@dataclass(frozen=True)
class SCData:
    """Lattice basis (w1, w2) and a multiplier c with c Lambda = Lambda."""

    w1: complex
    w2: complex
    c: complex

    def __post_init__(self):
        if not _is_unit_of(self.c, self.w1, self.w2):
            raise ValueError("c must satisfy c Lambda = Lambda")

    @property
    def case(self):
        """'one', 'minus-one', or 'root' (c = e^{2 pi i p / q}, q > 2)."""
        if close(self.c, 1.0):
            return "one"
        if close(self.c, -1.0):
            return "minus-one"
        frac = rational_reconstruct(cmath.phase(self.c) / (2 * math.pi), max_denominator=1000)
        if frac is None or not close(abs(self.c), 1.0):
            raise ValueError("c must be a root of unity")
        return "root"

    def root_fraction(self):
        frac = rational_reconstruct(cmath.phase(self.c) / (2 * math.pi), max_denominator=1000)
        return frac.numerator, frac.denominator

    def to_json(self):
        return {
            "lattice": [
                {"re": self.w1.real, "im": self.w1.imag},
                {"re": self.w2.real, "im": self.w2.imag},
            ],
            "c": {"re": self.c.real, "im": self.c.imag},
        }

    @classmethod
    def from_json(cls, data):
        w1, w2 = (complex(v["re"], v["im"]) for v in data["lattice"])
        return cls(w1, w2, complex(data["c"]["re"], data["c"]["im"]))


@dataclass(frozen=True)
class DeckElement:
    """(z, w) -> (z + k, c^k w + lam) for integer k and lam in the lattice."""

    data: SCData
    k: int
    lam: complex

    def __call__(self, z, w):
        return (z + self.k, self.data.c**self.k * w + self.lam)

    def inverse_apply(self, z, w):
        return (z - self.k, (w - self.lam) / self.data.c**self.k)


def deck_generators(data):
    """The three generating deck transformations (two when the twist is trivial)."""
    return [
        DeckElement(data, 1, 0j),
        DeckElement(data, 0, data.w1),
        DeckElement(data, 0, data.w2),
    ]


def _laurent_eval(coeffs, u):
    return sum(c * u**k for k, c in coeffs.items())


@dataclass(frozen=True)
class SCBiholomorphism:
    """A member of the biholomorphism family for the matching value of c.

    sign is +-1 (forced to +1 unless c = +-1); b satisfies b Lambda = Lambda;
    lam0 lies in the lattice; f is a Laurent polynomial in e^{2 pi i z} given
    as a dict exponent -> coefficient with |exponent| <= LAURENT_DEGREE_CAP.
    """

    data: SCData
    sign: int = 1
    z0: complex = 0j
    b: complex = 1.0 + 0j
    lam0: complex = 0j
    f: tuple = ()  # pairs (exponent, coefficient)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        case = self.data.case
        if case == "root" and self.sign == -1:
            raise ValueError("only c = +-1 admits the reflection")
        if not _is_unit_of(self.b, self.data.w1, self.data.w2):
            raise ValueError("b must satisfy b Lambda = Lambda")
        if case != "one" and not lattice_contains(self.lam0, self.data.w1, self.data.w2):
            raise ValueError("lam0 must lie in the lattice")
        for k, _ in self.f:
            if abs(int(k)) > LAURENT_DEGREE_CAP:
                raise ValueError("Laurent degree exceeds the cap")

    def fdict(self):
        return {int(k): complex(v) for k, v in self.f}


def biholo_apply(phi, z, w):
    """Evaluate the family row for phi's case at a point of C^2."""
    data = phi.data
    case = data.case
    znew = phi.sign * z + phi.z0
    u = cmath.exp(2j * math.pi * z)
    fval = _laurent_eval(phi.fdict(), u)
    if case == "one":
        return (znew, phi.b * w + fval)
    if case == "minus-one":
        return (znew, phi.b * w + phi.lam0 / 2 + cmath.exp(1j * math.pi * z) * fval)
    p, q = data.root_fraction()
    shear = phi.lam0 / (1 - data.c) + cmath.exp(2j * math.pi * p * z / q) * fval
    return (znew, phi.b * w + shear)


def biholo_inverse_apply(phi, z, w):
    z1 = phi.sign * (z - phi.z0)
    _, w_of_z1 = biholo_apply(phi, z1, 0j)
    return (z1, (w - w_of_z1) / phi.b)


@dataclass(frozen=True)
class PlaneMap:
    """A biholomorphism of C^2 given by forward/backward callables."""

    forward: object
    backward: object

    def __call__(self, z, w):
        return self.forward(z, w)

    def compose(self, other):
        return PlaneMap(
            lambda z, w: self.forward(*other.forward(z, w)),
            lambda z, w: other.backward(*self.backward(z, w)),
        )


def as_map(phi):
    return PlaneMap(
        lambda z, w: biholo_apply(phi, z, w),
        lambda z, w: biholo_inverse_apply(phi, z, w),
    )


def _sample_points(rng, count):
    # imaginary parts stay small so the Laurent data keeps a tame magnitude
    for _ in range(count):
        yield (
            complex(rng.uniform(-1, 1), rng.uniform(-0.15, 0.15)),
            complex(rng.normal(), rng.normal()),
        )


def map_normalizes_deck(fmap, data, rng, samples=50, tol=1e-7):
    """Whether conjugation by the map sends every deck generator into the deck group.

    The conjugate is sampled; it must have the deck form (z + k, c^k w + lam)
    with k a constant integer and lam a constant lattice element.
    """
    pts = list(_sample_points(rng, samples))
    for g in deck_generators(data):
        ks = []
        lams = []
        for z, w in pts:
            z2, w2 = fmap.backward(z, w)
            z3, w3 = g(z2, w2)
            z4, w4 = fmap.forward(z3, w3)
            ks.append(z4 - z)
            lams.append((z4 - z, w4, w))
        k0 = ks[0]
        kint = round(k0.real)
        if abs(k0 - kint) > tol * max(1.0, abs(k0)):
            return False
        scale = max([abs(w) for _, w, _ in lams] + [1.0])
        lam_vals = []
        for dk, w4, w in lams:
            if abs(dk - k0) > tol * max(1.0, abs(k0), scale):
                return False
            lam_vals.append(w4 - data.c**kint * w)
        lam0 = lam_vals[0]
        if any(abs(v - lam0) > tol * max(1.0, scale) for v in lam_vals):
            return False
        if not lattice_contains(lam0, data.w1, data.w2, tol=1e-6):
            return False
    return True


def normalizes_deck(phi, data=None, rng=None, samples=50):
    """Sample-verify that a family member normalizes the deck group."""
    import numpy as np

    data = data or phi.data
    rng = rng or np.random.default_rng(0)
    return map_normalizes_deck(as_map(phi), data, rng, samples=samples)

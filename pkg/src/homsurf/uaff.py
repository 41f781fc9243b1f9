"""The universal cover of the complex affine group of C, and its discrete subgroups.

Elements are pairs (a, b) with (a, b)(a', b') = (a + a', b + e^a b'), the
simply connected nonabelian complex Lie group of dimension two.  The module
implements the group arithmetic and its 3x3 matrix model, the automorphism
group (a, b) -> (a, gamma (1 - e^a) + beta b), the classifier of discrete
subgroups into the fourteen normal forms D2_1 .. D2_14, the intersection of
each subgroup with the center 2 pi i Z x {0}, and the explicit product-cover
maps that exist exactly when the subgroup is abelian.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .numeric import (
    NonDiscreteError,
    c2r,
    canonical_sign,
    close,
    lattice_coords,
    lattice_reduce_tau,
    rational_reconstruct,
    zmodule_basis,
    zmodule_contains,
    zmodule_coords,
)
from .surfaces import TorusPoint

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class UAffElement:
    a: complex
    b: complex

    def __iter__(self):
        yield self.a
        yield self.b


IDENTITY = UAffElement(0j, 0j)


def uaff_multiply(g, h):
    return UAffElement(g.a + h.a, g.b + cmath.exp(g.a) * h.b)


def uaff_inverse(g):
    return UAffElement(-g.a, -cmath.exp(-g.a) * g.b)


def uaff_power(g, n):
    """g^n with the geometric-sum closed form for the b component."""
    n = int(n)
    if n == 0:
        return IDENTITY
    if n < 0:
        return uaff_inverse(uaff_power(g, -n))
    q = cmath.exp(g.a)
    if abs(q - 1.0) > 1e-8:
        s = (q**n - 1.0) / (q - 1.0)
    else:
        s = sum(q**j for j in range(n))
    return UAffElement(n * g.a, g.b * s)


def uaff_is_identity(g, tol=None, scale=0.0):
    return close(g.a, 0, tol=tol, scale=scale) and close(g.b, 0, tol=tol, scale=scale)


def uaff_close(g, h, tol=None, scale=0.0):
    return close(g.a, h.a, tol=tol, scale=scale) and close(g.b, h.b, tol=tol, scale=scale)


def uaff_matrix(g):
    """3x3 matrix model; matrix(g) @ matrix(h) = matrix(g h)."""
    ea = cmath.exp(g.a)
    return np.array([[ea, 0, g.b], [0, 1, g.a], [0, 0, 1]], dtype=complex)


def uaff_from_matrix(m):
    return UAffElement(complex(m[1, 2]), complex(m[0, 2]))


def commutator(g, h):
    return uaff_multiply(uaff_multiply(g, h), uaff_multiply(uaff_inverse(g), uaff_inverse(h)))


@dataclass(frozen=True)
class UAffAutomorphism:
    """(a, b) -> (a, gamma (1 - e^a) + beta b); these are all the automorphisms."""

    gamma: complex = 0j
    beta: complex = 1.0 + 0j

    def __post_init__(self):
        if abs(self.beta) == 0:
            raise ValueError("beta must be nonzero")


def aut_apply(phi, g):
    return UAffElement(g.a, phi.gamma * (1 - cmath.exp(g.a)) + phi.beta * g.b)


def aut_compose(phi2, phi1):
    """phi2 after phi1."""
    return UAffAutomorphism(phi2.gamma + phi2.beta * phi1.gamma, phi2.beta * phi1.beta)


@dataclass(frozen=True)
class D2Label:
    """Normal form of a discrete subgroup, with its table parameters."""

    name: str
    k: int = None
    b: complex = None
    tau: complex = None
    a: complex = None
    a1: complex = None
    a2: complex = None
    generators: tuple = ()
    warnings: tuple = ()

    def params(self):
        out = {}
        for key in ("k", "b", "tau", "a", "a1", "a2"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


def normal_form_generators(label):
    """Generator list of the table row with the label's parameters."""
    n, k, b, tau, a = label.name, label.k, label.b, label.tau, label.a
    w = TWO_PI_I
    rows = {
        "D2": [],
        "D2_1": [UAffElement(0, 1)],
        "D2_2": [UAffElement(0, 1), UAffElement(0, tau)],
        "D2_3": [UAffElement(w * k, 1)],
        "D2_4": [UAffElement(w * k, b), UAffElement(0, 1)],
        "D2_5": [UAffElement(w * k, b), UAffElement(0, 1), UAffElement(0, tau)],
        "D2_6": [UAffElement(a, 0)],
        "D2_7": [UAffElement(w * (k + 0.5), 0), UAffElement(0, 1)],
        "D2_8": [UAffElement(w * (k + 0.5), 0), UAffElement(0, 1), UAffElement(0, tau)],
        "D2_9": [UAffElement(1j * math.pi * (k + 0.5), 0), UAffElement(0, 1), UAffElement(0, 1j)],
        "D2_10": [UAffElement(w * (k + 1.0 / 6), 0), UAffElement(0, 1), UAffElement(0, _OMEGA)],
        "D2_11": [UAffElement(w * (k + 2.0 / 6), 0), UAffElement(0, 1), UAffElement(0, _OMEGA)],
        "D2_12": [UAffElement(w * (k + 4.0 / 6), 0), UAffElement(0, 1), UAffElement(0, _OMEGA)],
        "D2_13": [UAffElement(w * (k + 5.0 / 6), 0), UAffElement(0, 1), UAffElement(0, _OMEGA)],
        "D2_14": [UAffElement(label.a1, 0), UAffElement(label.a2, 0)],
    }
    return rows[n]


_OMEGA = cmath.exp(1j * math.pi / 3)

NONABELIAN_LABELS = {"D2_7", "D2_8", "D2_9", "D2_10", "D2_11", "D2_12", "D2_13"}

# rows presenting the same subgroups with the generator inverted; the
# classifier only ever reports the canonical member of each pair
CANONICAL_ROW = {name: name for name in ("D2",) + tuple(f"D2_{i}" for i in range(1, 15))}
CANONICAL_ROW["D2_12"] = "D2_11"
CANONICAL_ROW["D2_13"] = "D2_10"


def _phase_fraction(a, tol=1e-8):
    """a as 2 pi i (k + s): requires Re a ~ 0; returns (k, s) with s in [0, 1)."""
    if abs(a.real) > tol * max(1.0, abs(a)):
        return None
    x = a.imag / (2 * math.pi)
    k = math.floor(x + tol)
    s = x - k
    if s > 1 - tol:
        k, s = k + 1, 0.0
    if s < tol:
        s = 0.0
    return k, s


def _realize(gens, combo):
    g = IDENTITY
    for gen, c in zip(gens, combo):
        if c:
            g = uaff_multiply(g, uaff_power(gen, c))
    return g


def _saturate_kernel(b_values, a_values, scale, max_rounds=16):
    """Close a set of b-translations under conjugation by the a-generators."""
    basis, _, _ = zmodule_basis([c2r(b) for b in b_values])
    for _ in range(max_rounds):
        if len(basis) > 2:
            raise NonDiscreteError("kernel closure exceeds rank two")
        new = []
        for bv in basis:
            b = complex(bv[0], bv[1])
            for a in a_values:
                for sgn in (1, -1):
                    img = cmath.exp(sgn * a) * b
                    if not zmodule_contains(c2r(img), basis, scale=scale):
                        new.append(img)
        if not new:
            return basis
        basis, _, _ = zmodule_basis(basis + [c2r(b) for b in new])
    raise NonDiscreteError("kernel closure does not stabilize")


def classify_subgroup(gens, max_denominator=None):
    """Normal form of the discrete subgroup generated by gens.

    Returns (D2Label, UAffAutomorphism): the label with its parameters and an
    automorphism carrying the input generators onto the table row.  Raises
    NonDiscreteError (a ValueError) when the generators do not span one of
    the tabulated discrete subgroups.
    """
    gens = [g for g in gens if not uaff_is_identity(g)]
    scale = max([abs(g.a) + abs(g.b) for g in gens] + [1.0])
    if not gens:
        return D2Label("D2"), UAffAutomorphism()

    try:
        a_basis, combos, _ = zmodule_basis(
            [c2r(g.a) for g in gens], max_denominator=max_denominator
        )
    except NonDiscreteError as e:
        raise NonDiscreteError(f"not a tabulated subgroup: {e}") from e
    L = [_realize(gens, combo) for combo in combos]

    kernel_b = []
    for g in gens:
        coords = zmodule_coords(c2r(g.a), a_basis)
        if coords is None:
            raise NonDiscreteError("not a tabulated subgroup: inconsistent a-components")
        h = g
        for elem, c in zip(L, coords):
            if c:
                h = uaff_multiply(uaff_power(elem, -c), h)
        if abs(h.a) > 1e-7 * scale:
            raise NonDiscreteError("not a tabulated subgroup: kernel reduction failed")
        if abs(h.b) > 1e-9 * scale:
            kernel_b.append(h.b)
    for i in range(len(L)):
        for j in range(i + 1, len(L)):
            c = commutator(L[i], L[j])
            if abs(c.b) > 1e-9 * scale:
                kernel_b.append(c.b)

    try:
        pi0 = _saturate_kernel(kernel_b, [e.a for e in L], scale) if kernel_b else []
    except NonDiscreteError as e:
        raise NonDiscreteError(f"not a tabulated subgroup: {e}") from e

    rbar = len(L)
    if rbar == 0:
        return _classify_kernel_only(pi0)
    if rbar == 1:
        return _classify_rank_one(L[0], pi0, scale)
    if rbar == 2:
        return _classify_rank_two(L, pi0, scale)
    raise NonDiscreteError("not a tabulated subgroup: a-components have rank > 2")


def _pi0_pair(pi0):
    return [complex(v[0], v[1]) for v in pi0]


def _classify_kernel_only(pi0):
    vals = _pi0_pair(pi0)
    if not vals:
        return D2Label("D2"), UAffAutomorphism()
    if len(vals) == 1:
        beta = 1.0 / vals[0]
        return D2Label("D2_1", generators=(UAffElement(0, 1),)), UAffAutomorphism(0, beta)
    v1, v2, tau, _ = lattice_reduce_tau(vals[0], vals[1])
    beta = 1.0 / v1
    label = D2Label("D2_2", tau=tau, generators=(UAffElement(0, 1), UAffElement(0, tau)))
    return label, UAffAutomorphism(0, beta)


def _kill_b(A, B, beta):
    """Gamma with gamma (1 - e^A) + beta B = 0; requires e^A != 1."""
    return -beta * B / (1 - cmath.exp(A))


def _classify_rank_one(g, pi0, scale):
    # canonicalize the generator sign: inversion flips the phase s to 1 - s,
    # so rows that only differ that way (e.g. phases 2/6 and 4/6) present the
    # same subgroup; we keep the representative with s <= 1/2 and k >= 0
    frac0 = _phase_fraction(g.a)
    if frac0 is not None:
        k0, s0 = frac0
        if s0 > 0.5 + 1e-9 or (k0 < 0 and (s0 == 0.0 or close(s0, 0.5, tol=1e-8))):
            g = uaff_inverse(g)
    A, B = g.a, g.b
    vals = _pi0_pair(pi0)
    if not vals:
        frac = _phase_fraction(A)
        if frac is not None and frac[1] == 0.0:
            k = frac[0]
            if abs(B) <= 1e-9 * scale:
                a = canonical_sign(A)
                return D2Label("D2_6", a=a, generators=(UAffElement(a, 0),)), UAffAutomorphism()
            return (
                D2Label("D2_3", k=k, generators=(UAffElement(TWO_PI_I * k, 1),)),
                UAffAutomorphism(0, 1.0 / B),
            )
        gamma = _kill_b(A, B, 1.0)
        a = canonical_sign(A)
        return D2Label("D2_6", a=a, generators=(UAffElement(a, 0),)), UAffAutomorphism(gamma, 1.0)

    if len(vals) == 1:
        beta = 1.0 / vals[0]
        frac = _phase_fraction(A)
        if frac is None:
            raise NonDiscreteError("not a tabulated subgroup: e^a does not preserve the kernel")
        k, s = frac
        if close(s, 0.0, tol=1e-8):
            b = beta * B
            b = b - round(b.real)
            gens = (UAffElement(TWO_PI_I * k, b), UAffElement(0, 1))
            return D2Label("D2_4", k=k, b=b, generators=gens), UAffAutomorphism(0, beta)
        if close(s, 0.5, tol=1e-8):
            gamma = _kill_b(A, B, beta)
            gens = (UAffElement(TWO_PI_I * (k + 0.5), 0), UAffElement(0, 1))
            return D2Label("D2_7", k=k, generators=gens), UAffAutomorphism(gamma, beta)
        raise NonDiscreteError("not a tabulated subgroup: e^a is not +-1 on a rank-one kernel")

    v1, v2, tau, _ = lattice_reduce_tau(vals[0], vals[1])
    beta = 1.0 / v1
    frac = _phase_fraction(A)
    if frac is None:
        raise NonDiscreteError("not a tabulated subgroup: e^a does not fix the kernel lattice")
    k, s = frac
    sq = close(tau, 1j, tol=1e-6)
    hexa = close(tau, _OMEGA, tol=1e-6)
    if close(s, 0.0, tol=1e-8):
        b = beta * B
        x, y = lattice_coords(b, 1.0 + 0j, tau)
        b = b - round(x) - round(y) * tau
        gens = (UAffElement(TWO_PI_I * k, b), UAffElement(0, 1), UAffElement(0, tau))
        return D2Label("D2_5", k=k, b=b, tau=tau, generators=gens), UAffAutomorphism(0, beta)
    gamma = _kill_b(A, B, beta)
    phi = UAffAutomorphism(gamma, beta)
    if close(s, 0.5, tol=1e-8):
        gens = (UAffElement(TWO_PI_I * (k + 0.5), 0), UAffElement(0, 1), UAffElement(0, tau))
        return D2Label("D2_8", k=k, tau=tau, generators=gens), phi
    if sq and (close(s, 0.25, tol=1e-8) or close(s, 0.75, tol=1e-8)):
        kk = 2 * k if close(s, 0.25, tol=1e-8) else 2 * k + 1
        gens = (UAffElement(1j * math.pi * (kk + 0.5), 0), UAffElement(0, 1), UAffElement(0, 1j))
        return D2Label("D2_9", k=kk, tau=1j, generators=gens), phi
    if hexa:
        for name, frac6 in (("D2_10", 1), ("D2_11", 2), ("D2_12", 4), ("D2_13", 5)):
            if close(s, frac6 / 6.0, tol=1e-8):
                gens = (
                    UAffElement(TWO_PI_I * (k + frac6 / 6.0), 0),
                    UAffElement(0, 1),
                    UAffElement(0, _OMEGA),
                )
                return D2Label(name, k=k, tau=_OMEGA, generators=gens), phi
    raise NonDiscreteError("not a tabulated subgroup: e^a is not a unit of the kernel lattice")


def _classify_rank_two(L, pi0, scale):
    if pi0:
        raise NonDiscreteError("not a tabulated subgroup: rank-two image with nontrivial kernel")
    (a1, b1), (a2, b2) = (L[0].a, L[0].b), (L[1].a, L[1].b)
    e1, e2 = 1 - cmath.exp(a1), 1 - cmath.exp(a2)
    if abs(b1) <= 1e-9 * scale and abs(b2) <= 1e-9 * scale:
        phi = UAffAutomorphism()
    elif abs(e1) > abs(e2):
        if abs(e1) <= 1e-9:
            raise NonDiscreteError("not a tabulated subgroup: cannot remove b-components")
        phi = UAffAutomorphism(-b1 / e1, 1.0)
        r = aut_apply(phi, L[1])
        if abs(r.b) > 1e-6 * scale:
            raise NonDiscreteError("not a tabulated subgroup: b-components are not removable")
    else:
        if abs(e2) <= 1e-9:
            raise NonDiscreteError("not a tabulated subgroup: cannot remove b-components")
        phi = UAffAutomorphism(-b2 / e2, 1.0)
        r = aut_apply(phi, L[0])
        if abs(r.b) > 1e-6 * scale:
            raise NonDiscreteError("not a tabulated subgroup: b-components are not removable")
    v1, v2, _, _ = lattice_reduce_tau(a1, a2)
    gens = (UAffElement(v1, 0), UAffElement(v2, 0))
    return D2Label("D2_14", a1=v1, a2=v2, generators=gens), phi


def center_intersection(label, max_denominator=None):
    """Generator of pi intersect Z(G) = 2 pi i Z x 0; (0,0) when trivial."""
    name = label.name
    if name in ("D2", "D2_1", "D2_2", "D2_3"):
        return IDENTITY
    if name in ("D2_4", "D2_5"):
        b = label.b
        if name == "D2_4":
            if abs(b.imag) > 1e-9 * max(1.0, abs(b)):
                return IDENTITY
            frac = rational_reconstruct(b.real, max_denominator=max_denominator)
        else:
            x, y = _tau_coords(b, label.tau)
            fx = rational_reconstruct(x, max_denominator=max_denominator)
            fy = rational_reconstruct(y, max_denominator=max_denominator)
            if fx is None or fy is None:
                return IDENTITY
            q = fx.denominator * fy.denominator // math.gcd(fx.denominator, fy.denominator)
            return UAffElement(TWO_PI_I * label.k * q, 0)
        if frac is None:
            return IDENTITY
        return UAffElement(TWO_PI_I * label.k * frac.denominator, 0)
    if name == "D2_6":
        x = label.a / TWO_PI_I
        if abs(x.imag) > 1e-9 * max(1.0, abs(x)):
            return IDENTITY
        frac = rational_reconstruct(x.real, max_denominator=max_denominator)
        if frac is None:
            return IDENTITY
        return UAffElement(TWO_PI_I * frac.numerator, 0)
    if name in NONABELIAN_LABELS or name == "D2_14":
        if name == "D2_14":
            out = []
            for v in _center_lattice(label):
                out.append(v)
            return out[0] if out else IDENTITY
        gen = normal_form_generators(label)[0]
        x = gen.a / TWO_PI_I
        frac = rational_reconstruct(x.real, max_denominator=max_denominator)
        return UAffElement(TWO_PI_I * frac.numerator, 0)
    return IDENTITY


def _tau_coords(b, tau):
    y = b.imag / tau.imag
    x = b.real - y * tau.real
    return x, y


def _center_lattice(label):
    """Generators of (Lambda' intersect 2 pi i Z) x 0 for the D2_14 row."""
    out = []
    for coeffs in _integer_combos_on_axis(label.a1, label.a2):
        out.append(UAffElement(coeffs, 0))
    return out


def _integer_combos_on_axis(a1, a2):
    """Smallest positive element of (Z a1 + Z a2) intersect i R, if any, as 2 pi i k."""
    from .numeric import lattice_coords

    # solve x*a1 + y*a2 purely imaginary with value in 2 pi i Z: search small combos
    best = None
    for m in range(-30, 31):
        for n in range(-30, 31):
            if m == 0 and n == 0:
                continue
            v = m * a1 + n * a2
            if abs(v.real) <= 1e-9 * max(1.0, abs(v)):
                k = v.imag / (2 * math.pi)
                if abs(k - round(k)) <= 1e-8 * max(1.0, abs(k)) and round(k) != 0:
                    if best is None or abs(v) < abs(best):
                        best = TWO_PI_I * round(k)
    return [best] if best is not None else []


ABELIAN_COVER_LABELS = {"D2", "D2_1", "D2_2", "D2_3", "D2_4", "D2_5", "D2_6", "D2_14"}


def product_cover(label, point):
    """Map a point of the group to the product surface X' for an abelian row.

    The map is constant on right cosets of the subgroup; nonabelian rows have
    no such map (the bundle is nontrivial) and raise ValueError.
    """
    if label.name in NONABELIAN_LABELS:
        raise ValueError("bundle is nontrivial")
    if label.name not in ABELIAN_COVER_LABELS:
        raise ValueError(f"unknown label {label.name}")
    a, b = point.a, point.b
    name = label.name
    if name == "D2":
        return (a, b)
    if name == "D2_1":
        return (a, cmath.exp(TWO_PI_I * cmath.exp(-a) * b))
    if name == "D2_2":
        return (a, TorusPoint(cmath.exp(-a) * b, 1.0, label.tau))
    if name == "D2_3":
        k = label.k
        return (cmath.exp(a / k), cmath.exp(-a) * b - a / (TWO_PI_I * k))
    if name == "D2_4":
        k, bp = label.k, label.b
        return (cmath.exp(a / k), cmath.exp(TWO_PI_I * cmath.exp(-a) * b - a * bp / k))
    if name == "D2_5":
        k, bp = label.k, label.b
        val = cmath.exp(-a) * b - a * bp / (TWO_PI_I * k)
        return (cmath.exp(a / k), TorusPoint(val, 1.0, label.tau))
    if name == "D2_6":
        return (cmath.exp(TWO_PI_I * a / label.a), b)
    if name == "D2_14":
        return (TorusPoint(a, label.a1, label.a2), b)
    raise AssertionError(name)

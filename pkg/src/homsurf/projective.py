"""Projective-line machinery: Moebius actions, symmetric powers, the affine
quadric and its double cover, and the line-bundle surfaces O(n).

Points of the projective line are homogeneous pairs; equality is projective
(vanishing cross product).  A point of O(n) is carried in one of two affine
charts glued by (Z, W) = (1/z, w/z^n); the group action is computed on a
homogeneous carrier (v, q(v)) so chart switching near the gluing locus is
automatic.  Binary forms of degree n are coefficient vectors indexed by
descending powers of the first variable, matching the monomial basis used by
sym_power_rep.

Convention fixed here (checked against the root-transformation oracle in the
tests): a matrix g acts on root pairs by Moebius transformation and on the
quadratic coefficient vector [a : b : c] by substituting g^{-1} into the
binary form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numeric import EPS, close


# ---------------------------------------------------------------------------
# projective points


@dataclass(frozen=True)
class ProjPoint:
    """Point of the projective line, normalized so the largest coordinate is 1."""

    coords: tuple

    def __init__(self, z1, z2=None):
        if z2 is None:
            z1, z2 = complex(z1), 1.0 + 0j
        v = np.array([z1, z2], dtype=complex)
        m = np.abs(v)
        if m.max() == 0:
            raise ValueError("projective point needs a nonzero representative")
        v = v / v[int(m.argmax())]
        object.__setattr__(self, "coords", (complex(v[0]), complex(v[1])))

    @classmethod
    def infinity(cls):
        return cls(1.0, 0.0)

    @property
    def is_infinity(self):
        return abs(self.coords[1]) <= EPS * abs(self.coords[0])

    @property
    def affine(self):
        if self.is_infinity:
            raise ValueError("point at infinity has no affine value")
        return self.coords[0] / self.coords[1]

    def vec(self):
        return np.array(self.coords, dtype=complex)


def proj_equal(p, q, tol=None):
    a1, a2 = p.coords
    b1, b2 = q.coords
    cross = a1 * b2 - a2 * b1
    scale = max(abs(a1), abs(a2)) * max(abs(b1), abs(b2))
    return abs(cross) <= (EPS if tol is None else tol) * max(scale, 1e-300)


@dataclass(frozen=True)
class Proj2Point:
    """Point of the projective plane, normalized like ProjPoint."""

    coords: tuple

    def __init__(self, coords):
        v = np.array(list(coords), dtype=complex)
        if v.shape != (3,):
            raise ValueError("need three homogeneous coordinates")
        m = np.abs(v)
        if m.max() == 0:
            raise ValueError("projective point needs a nonzero representative")
        v = v / v[int(m.argmax())]
        object.__setattr__(self, "coords", tuple(complex(c) for c in v))


def proj2_equal(p, q, tol=None):
    a = np.array(p.coords)
    b = np.array(q.coords)
    cross = np.cross(a, b)
    scale = max(1e-300, float(np.abs(a).max() * np.abs(b).max()))
    return float(np.abs(cross).max()) <= (EPS if tol is None else tol) * scale


def proj2_act(g3, p, tol=None):
    """Linear action of an invertible 3x3 matrix on the projective plane."""
    g3 = np.asarray(g3, dtype=complex)
    return Proj2Point(g3 @ np.array(p.coords))


def mobius_act(g, p):
    """Moebius action of an invertible 2x2 matrix on the projective line."""
    g = np.asarray(g, dtype=complex)
    if abs(np.linalg.det(g)) <= EPS * max(1.0, float(np.abs(g).max()) ** 2):
        raise ValueError("singular matrix")
    w = g @ p.vec()
    return ProjPoint(w[0], w[1])


# ---------------------------------------------------------------------------
# symmetric powers and binary forms


def _pair_power(u, v, k):
    """Coefficients of (u*Z1 + v*Z2)^k over Z1^{k-j} Z2^j."""
    out = np.zeros(k + 1, dtype=complex)
    for j in range(k + 1):
        out[j] = math.comb(k, j) * u ** (k - j) * v**j
    return out


def sym_power_rep(g, n):
    """Matrix of g acting on Sym^n C^2 in the basis e1^n, e1^{n-1}e2, ..., e2^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = np.asarray(g, dtype=complex)
    a, c = g[0, 0], g[1, 0]
    b, d = g[0, 1], g[1, 1]
    cols = []
    for k in range(n + 1):
        # image of e1^{n-k} e2^k is (a e1 + c e2)^{n-k} (b e1 + d e2)^k
        col = np.convolve(_pair_power(a, c, n - k), _pair_power(b, d, k))
        cols.append(col)
    return np.stack(cols, axis=1)


def binary_form_eval(coeffs, z1, z2):
    n = len(coeffs) - 1
    return sum(c * z1 ** (n - j) * z2**j for j, c in enumerate(coeffs))


def binary_form_substitute(coeffs, m):
    """Coefficients of q(M Z) for a binary form q of degree n."""
    m = np.asarray(m, dtype=complex)
    n = len(coeffs) - 1
    out = np.zeros(n + 1, dtype=complex)
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        term = np.convolve(
            _pair_power(m[0, 0], m[0, 1], n - j), _pair_power(m[1, 0], m[1, 1], j)
        )
        out += c * term
    return tuple(out)


# ---------------------------------------------------------------------------
# the affine quadric (ordered distinct point pairs) and its double cover


@dataclass(frozen=True)
class QuadricPoint:
    """Ordered pair of distinct points of the projective line."""

    alpha: ProjPoint
    beta: ProjPoint

    def __post_init__(self):
        if proj_equal(self.alpha, self.beta):
            raise ValueError("quadric points need distinct entries")

    def swapped(self):
        return QuadricPoint(self.beta, self.alpha)


def quadric_equal(p, q, tol=None):
    return proj_equal(p.alpha, q.alpha, tol) and proj_equal(p.beta, q.beta, tol)


def quadric_act(g, p):
    return QuadricPoint(mobius_act(g, p.alpha), mobius_act(g, p.beta))


def quadric_embed(p):
    """Embedding into the affine quadric y^2 - 4 x z = 1 in C^3."""
    a1, a2 = p.alpha.coords
    b1, b2 = p.beta.coords
    den = a1 * b2 - a2 * b1
    if abs(den) <= EPS * max(1.0, abs(a1) + abs(a2)) * max(1.0, abs(b1) + abs(b2)):
        raise ValueError("quadric points need distinct entries")
    return (a2 * b2 / den, (a1 * b2 + a2 * b1) / den, a1 * b1 / den)


def quadric_double_cover(p):
    """Coefficients [a : b : c] of a quadratic with roots alpha, beta."""
    a1, a2 = p.alpha.coords
    b1, b2 = p.beta.coords
    return Proj2Point((a2 * b2, -(a1 * b2 + a2 * b1), a1 * b1))


def quadric_preimages(p2):
    """Both ordered root pairs over a point of P^2 minus the conic b^2 = 4ac."""
    a, b, c = p2.coords
    scale = max(abs(a), abs(b), abs(c))
    disc = b * b - 4 * a * c
    if abs(disc) <= EPS * max(1.0, scale) ** 2:
        raise ValueError("point lies on the branch conic")
    if abs(a) > 1e-8 * scale:
        s = np.sqrt(complex(disc))
        top = -(b + s) if abs(b + s) >= abs(b - s) else -(b - s)
        q = top / 2
        alpha = ProjPoint(q / a)
        beta = ProjPoint(c / q) if abs(q) > 0 else ProjPoint(0.0)
    else:
        alpha = ProjPoint.infinity()
        beta = ProjPoint(-c, b)
    pt = QuadricPoint(alpha, beta)
    return pt, pt.swapped()


def conic_complement_act(g, p2):
    """The induced action on quadratic coefficients: substitute g^{-1}."""
    g = np.asarray(g, dtype=complex)
    return Proj2Point(binary_form_substitute(p2.coords, np.linalg.inv(g)))


# ---------------------------------------------------------------------------
# O(n): total space of the n-th power of the hyperplane bundle


@dataclass(frozen=True)
class BundlePoint:
    """Point of O(n) in an affine chart; charts glued by (1/z, w/z^n)."""

    n: int
    chart: int
    z: complex
    w: complex

    def carrier(self):
        """Homogeneous representative (v, value) with value = section(v)."""
        if self.chart == 0:
            return np.array([self.z, 1.0], dtype=complex), complex(self.w)
        return np.array([1.0, self.z], dtype=complex), complex(self.w)

    def to_chart(self, chart):
        if chart == self.chart:
            return self
        if abs(self.z) == 0:
            raise ValueError("point is not on the chart overlap")
        return BundlePoint(self.n, chart, 1 / self.z, self.w / self.z**self.n)


def _from_carrier(n, v, val):
    if abs(v[0]) <= abs(v[1]):
        return BundlePoint(n, 0, complex(v[0] / v[1]), complex(val / v[1] ** n))
    return BundlePoint(n, 1, complex(v[1] / v[0]), complex(val / v[0] ** n))


def bundle_equal(p, q, tol=None):
    if p.n != q.n:
        return False
    if p.chart == q.chart:
        return close(p.z, q.z, tol=tol) and close(p.w, q.w, tol=tol)
    if abs(q.z) <= EPS:
        return False
    q2 = q.to_chart(p.chart)
    return close(p.z, q2.z, tol=tol) and close(p.w, q2.w, tol=tol)


def _zn_scalar(g, n):
    """n-th root of unity placing the reference entry's argument in [0, 2pi/n)."""
    order = [(1, 1), (0, 0), (0, 1), (1, 0)]
    scale = float(np.abs(g).max())
    ref = None
    for i, j in order:
        if abs(g[i, j]) > 1e-12 * scale:
            ref = g[i, j]
            break
    theta = np.angle(ref) % (2 * math.pi)
    k = int(theta // (2 * math.pi / n))
    return np.exp(-2j * math.pi * k / n)


@dataclass(frozen=True)
class OnGroupElement:
    """Element (g, p) of (GL(2,C)/Z_n) acting on O(n), p a degree-n binary form.

    The matrix is stored canonicalized modulo scalar n-th roots of unity.
    """

    n: int
    matrix: tuple
    poly: tuple

    def __init__(self, n, matrix, poly):
        n = int(n)
        g = np.asarray(matrix, dtype=complex)
        if g.shape != (2, 2):
            raise ValueError("matrix must be 2x2")
        if abs(np.linalg.det(g)) <= EPS * max(1.0, float(np.abs(g).max()) ** 2):
            raise ValueError("matrix must be invertible")
        p = tuple(complex(c) for c in poly)
        if len(p) != n + 1:
            raise ValueError("polynomial must have degree n")
        g = g * _zn_scalar(g, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "matrix", tuple(tuple(complex(x) for x in row) for row in g))
        object.__setattr__(self, "poly", p)

    def mat(self):
        return np.array(self.matrix, dtype=complex)


def on_identity(n):
    return OnGroupElement(n, np.eye(2), (0.0,) * (n + 1))


def on_multiply(e0, e1):
    """(g0, p0)(g1, p1) = (g0 g1, p0 + p1 o g0^{-1})."""
    if e0.n != e1.n:
        raise ValueError("mixed bundle degrees")
    g0, g1 = e0.mat(), e1.mat()
    comp = binary_form_substitute(e1.poly, np.linalg.inv(g0))
    p = tuple(a + b for a, b in zip(e0.poly, comp))
    return OnGroupElement(e0.n, g0 @ g1, p)


def on_inverse(e):
    gi = np.linalg.inv(e.mat())
    p = tuple(-c for c in binary_form_substitute(e.poly, e.mat()))
    return OnGroupElement(e.n, gi, p)


def on_matrix_distance(e0, e1):
    """Relative distance of the matrix parts modulo scalar n-th roots of unity."""
    a, b = e0.mat(), e1.mat()
    scale = max(1.0, float(np.abs(a).max()), float(np.abs(b).max()))
    best = math.inf
    for j in range(e0.n):
        zeta = np.exp(2j * math.pi * j / e0.n)
        best = min(best, float(np.abs(a - zeta * b).max()) / scale)
    return best


def on_equal(e0, e1, tol=None):
    if e0.n != e1.n:
        return False
    mat_ok = on_matrix_distance(e0, e1) <= (EPS if tol is None else tol)
    ps = max([abs(c) for c in e0.poly + e1.poly] + [1.0])
    pol_ok = all(close(x, y, tol=tol, scale=ps) for x, y in zip(e0.poly, e1.poly))
    return mat_ok and pol_ok


def on_act(e, x):
    """Action on O(n); chart switching handled through the homogeneous carrier."""
    if e.n != x.n:
        raise ValueError("element and point live on different bundles")
    v, val = x.carrier()
    v2 = e.mat() @ v
    s = float(np.abs(v2).max())
    v2 = v2 / s
    val = val / s**e.n
    val = val + binary_form_eval(e.poly, v2[0], v2[1])
    return _from_carrier(e.n, v2, val)


# ---------------------------------------------------------------------------
# the Bgamma subgroups acting on the affine chart C^2 of O(n)


@dataclass(frozen=True)
class BGamma12Element:
    """Element of the subgroup C^n_c x| Sym^n(C^2)^*, coordinates (lam, b, p).

    The matrix part is exp(lam(1 - c/n)), b over 0, exp(-lam c/n) modulo
    n-th roots of unity; c = 0 is the family with central w-translations.
    """

    n: int
    c: complex
    lam: complex
    b: complex
    poly: tuple

    def __post_init__(self):
        if len(self.poly) != self.n + 1:
            raise ValueError("polynomial must have degree n")


def bg12_identity(n, c):
    return BGamma12Element(n, complex(c), 0j, 0j, (0j,) * (n + 1))


def _bg12_matrix(e):
    a = np.exp(e.lam * (1 - e.c / e.n))
    d = np.exp(-e.lam * e.c / e.n)
    return np.array([[a, e.b], [0.0, d]], dtype=complex)


def bg12_multiply(e0, e1):
    if (e0.n, e0.c) != (e1.n, e1.c):
        raise ValueError("mixed subgroup parameters")
    n, c = e0.n, e0.c
    lam = e0.lam + e1.lam
    b = np.exp(e0.lam * (1 - c / n)) * e1.b + np.exp(-e1.lam * c / n) * e0.b
    comp = binary_form_substitute(e1.poly, np.linalg.inv(_bg12_matrix(e0)))
    p = tuple(x + y for x, y in zip(e0.poly, comp))
    return BGamma12Element(n, c, lam, complex(b), p)


def bg12_inverse(e):
    n, c = e.n, e.c
    lam = -e.lam
    b = -e.b * np.exp(-e.lam * (1 - 2 * c / n))
    p = tuple(-x for x in binary_form_substitute(e.poly, _bg12_matrix(e)))
    return BGamma12Element(n, c, lam, complex(b), p)


def bg12_equal(e0, e1, tol=None):
    ps = max([abs(x) for x in e0.poly + e1.poly] + [1.0])
    return (
        close(e0.lam, e1.lam, tol=tol)
        and close(e0.b, e1.b, tol=tol)
        and all(close(x, y, tol=tol, scale=ps) for x, y in zip(e0.poly, e1.poly))
    )


def bg12_act(e, zw):
    z, w = zw
    z1 = np.exp(e.lam) * z + e.b * np.exp(e.lam * e.c / e.n)
    w1 = np.exp(e.lam * e.c) * w + binary_form_eval(e.poly, z1, 1.0)
    return (complex(z1), complex(w1))


@dataclass(frozen=True)
class BGamma3Element:
    """Element ((1, b; 0, e^{-lam}), lam Z1^n + Z2 r) of the coupled subgroup."""

    n: int
    lam: complex
    b: complex
    r: tuple  # degree n-1 form coefficients

    def __post_init__(self):
        if len(self.r) != self.n:
            raise ValueError("r must have degree n - 1")

    def poly(self):
        # lam Z1^n + Z2 * r(Z1, Z2)
        return (complex(self.lam),) + tuple(complex(x) for x in self.r)


def bg3_identity(n):
    return BGamma3Element(n, 0j, 0j, (0j,) * n)


def _bg3_matrix(e):
    return np.array([[1.0, e.b], [0.0, np.exp(-e.lam)]], dtype=complex)


def bg3_multiply(e0, e1):
    if e0.n != e1.n:
        raise ValueError("mixed subgroup parameters")
    lam = e0.lam + e1.lam
    b = e1.b + e0.b * np.exp(-e1.lam)
    comp = binary_form_substitute(e1.poly(), np.linalg.inv(_bg3_matrix(e0)))
    full = tuple(x + y for x, y in zip(e0.poly(), comp))
    return BGamma3Element(e0.n, lam, complex(b), full[1:])


def bg3_inverse(e):
    lam = -e.lam
    b = -e.b * np.exp(e.lam)
    full = tuple(-x for x in binary_form_substitute(e.poly(), _bg3_matrix(e)))
    return BGamma3Element(e.n, lam, complex(b), full[1:])


def bg3_equal(e0, e1, tol=None):
    ps = max([abs(x) for x in e0.r + e1.r] + [1.0])
    return (
        close(e0.lam, e1.lam, tol=tol)
        and close(e0.b, e1.b, tol=tol)
        and all(close(x, y, tol=tol, scale=ps) for x, y in zip(e0.r, e1.r))
    )


def bg3_act(e, zw):
    z, w = zw
    z1 = np.exp(e.lam) * (z + e.b)
    w1 = np.exp(e.lam * e.n) * w + binary_form_eval(e.poly(), z1, 1.0)
    return (complex(z1), complex(w1))


def bgamma_act(sub, e, zw):
    """Dispatch for the four Bgamma families; sub is 1, 2, 3 or 4."""
    if sub in (1, 2):
        return bg12_act(e, zw)
    if sub == 3:
        return bg3_act(e, zw)
    if sub == 4:
        g = e.mat()
        if abs(g[1, 0]) > EPS * max(1.0, float(np.abs(g).max())):
            raise ValueError("Bgamma4 elements must fix infinity")
        z, w = zw
        out = on_act(e, BundlePoint(e.n, 0, complex(z), complex(w)))
        out = out.to_chart(0)
        return (out.z, out.w)
    raise ValueError(f"unknown Bgamma subfamily {sub}")


# ---------------------------------------------------------------------------
# Bdelta: linear actions on C^2 minus the origin, and their Hopf quotients


def bdelta_act(g, x):
    """Linear action on C^2 \\ 0."""
    x = np.asarray(x, dtype=complex)
    if float(np.abs(x).max()) <= 1e-12:
        raise ValueError("the origin is not a point of the surface")
    return tuple(np.asarray(g, dtype=complex) @ x)


@dataclass(frozen=True)
class HopfQuotient:
    """The identification z ~ lam z on C^2 \\ 0, |lam| < 1."""

    lam: complex

    def __post_init__(self):
        if not 0 < abs(self.lam) < 1:
            raise ValueError("|lam| must lie in (0, 1)")

    def reduce(self, x):
        """Representative with |lam| < |x| <= 1 (max-norm)."""
        x = np.asarray(x, dtype=complex)
        m = float(np.abs(x).max())
        if m <= 1e-300:
            raise ValueError("the origin is not a point of the surface")
        k = -math.floor(math.log(m) / math.log(abs(self.lam)))
        return tuple(x * self.lam**k)

    def equal(self, x, y, tol=None):
        x = np.asarray(x, dtype=complex)
        y = np.asarray(y, dtype=complex)
        i = int(np.abs(x).argmax())
        if abs(y[i]) <= 1e-300:
            return False
        s = y[i] / x[i]
        k = round(math.log(abs(s)) / math.log(abs(self.lam))) if abs(s) > 0 else 0
        if not close(s, self.lam**k, tol=tol):
            return False
        return bool(np.all(np.abs(y - s * x) <= (EPS if tol is None else tol) * max(1.0, float(np.abs(y).max()))))

"""Exact arithmetic for exponential polynomials.

An exponential polynomial is a finite sum  sum_j e^{lam_j z} q_j(z)  with
polynomial coefficients q_j and pairwise distinct frequencies lam_j.  These
are exactly the holomorphic solutions of constant-coefficient linear ODEs:
the solution space attached to an effective divisor D (points = frequencies,
multiplicities = polynomial degree bounds) is spanned by basis_of(D) and is
annihilated by the monic operator monic_polynomial(D).

Representation: frequencies are floats compared with relative tolerance EPS;
coefficients stay exact under the symbolic operations here (translation is a
binomial expansion, never sampling), and canonicalization drops terms whose
coefficients cancel below the absolute chop COEFF_CHOP.  Annihilation by an
operator built from its root divisor cancels structurally, with no residual.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .numeric import COEFF_CHOP, EPS, close


def _trim(coeffs):
    cs = [complex(c) for c in coeffs]
    while cs and abs(cs[-1]) <= COEFF_CHOP:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over C; coeffs[k] multiplies z^k, trailing zeros trimmed."""

    coeffs: tuple

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def const(cls, c):
        return cls((complex(c),))

    @classmethod
    def monomial(cls, k, c=1.0):
        return cls((0.0,) * k + (complex(c),))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)])

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c):
        return Polynomial([c * a for a in self.coeffs])

    def derivative(self, order=1):
        cs = list(self.coeffs)
        for _ in range(order):
            cs = [k * cs[k] for k in range(1, len(cs))]
        return Polynomial(cs)

    def shifted(self, t):
        """The polynomial z -> p(z - t), expanded exactly by binomials."""
        t = complex(t)
        n = len(self.coeffs)
        out = [0j] * n
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j in range(k + 1):
                out[j] += c * math.comb(k, j) * (-t) ** (k - j)
        return Polynomial(out)

    def __call__(self, z):
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def max_abs(self):
        return max((abs(c) for c in self.coeffs), default=0.0)


def poly_close(p, q, tol=None, scale=0.0):
    s = max(p.max_abs(), q.max_abs(), scale)
    d = p - q
    return all(abs(c) <= (EPS if tol is None else tol) * max(1.0, s) for c in d.coeffs)


def _canonical_terms(pairs):
    pairs = [(complex(lam), poly) for lam, poly in pairs if not poly.is_zero]
    pairs.sort(key=lambda tp: (tp[0].real, tp[0].imag))
    merged = []
    for lam, poly in pairs:
        if merged and close(merged[-1][0], lam):
            merged[-1][1] = merged[-1][1] + poly
        else:
            merged.append([lam, poly])
    return tuple((lam, poly) for lam, poly in merged if not poly.is_zero)


@dataclass(frozen=True)
class ExpPoly:
    """Finite sum of e^{lam z} * polynomial terms in canonical form."""

    terms: tuple

    def __init__(self, terms=()):
        object.__setattr__(self, "terms", _canonical_terms(terms))

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def exponential(cls, lam, poly=None):
        return cls(((lam, Polynomial.const(1.0) if poly is None else poly),))

    @classmethod
    def from_poly(cls, poly):
        return cls(((0.0, poly),))

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        return ExpPoly(self.terms + other.terms)

    def __neg__(self):
        return ExpPoly(tuple((lam, -p) for lam, p in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = complex(c)
        return ExpPoly(tuple((lam, p.scale(c)) for lam, p in self.terms))

    def modulate(self, a):
        """Multiply by e^{a z}: shift every frequency by a."""
        a = complex(a)
        return ExpPoly(tuple((lam + a, p) for lam, p in self.terms))

    def scale_argument(self, mu):
        """The function z -> f(mu z)."""
        mu = complex(mu)
        out = []
        for lam, p in self.terms:
            out.append((lam * mu, Polynomial([c * mu**k for k, c in enumerate(p.coeffs)])))
        return ExpPoly(tuple(out))

    def max_abs(self):
        return max((p.max_abs() for _, p in self.terms), default=0.0)

    def to_json(self):
        return {
            "terms": [
                {
                    "lambda": {"re": lam.real, "im": lam.imag},
                    "coeffs": [{"re": c.real, "im": c.imag} for c in p.coeffs],
                }
                for lam, p in self.terms
            ]
        }

    @classmethod
    def from_json(cls, data):
        terms = []
        for t in data["terms"]:
            lam = complex(t["lambda"]["re"], t["lambda"]["im"])
            poly = Polynomial([complex(c["re"], c["im"]) for c in t["coeffs"]])
            terms.append((lam, poly))
        return cls(tuple(terms))


def evaluate(f, z):
    """Value of the exponential polynomial at z."""
    z = complex(z)
    return sum((cmath.exp(lam * z) * p(z) for lam, p in f.terms), 0j)


def translate(f, t):
    """The function z -> f(z - t), computed symbolically.

    Frequencies are unchanged; each coefficient polynomial is binomially
    shifted and scaled by e^{-lam t}.
    """
    t = complex(t)
    out = []
    for lam, p in f.terms:
        out.append((lam, p.shifted(t).scale(cmath.exp(-lam * t))))
    return ExpPoly(tuple(out))


def exppoly_close(f, g, tol=None, scale=0.0):
    """Structural near-equality of canonical forms."""
    d = f - g
    s = max(f.max_abs(), g.max_abs(), scale, 1.0)
    return all(p.max_abs() <= (EPS if tol is None else tol) * s for _, p in d.terms)


@dataclass(frozen=True)
class DiffOperator:
    """Monic constant-coefficient operator p(d/dz).

    When built from a divisor the root multiset is kept, so that applying the
    operator to a member of its own solution space cancels structurally.
    """

    coeffs: tuple
    roots: tuple = None

    def __init__(self, coeffs, roots=None):
        cs = _trim(coeffs)
        if not cs:
            raise ValueError("operator must be nonzero")
        lead = cs[-1]
        if abs(lead - 1.0) > 1e-9:
            raise ValueError("operator must be monic")
        cs = cs[:-1] + (1.0 + 0j,)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "roots", None if roots is None else tuple(roots))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def monic(self):
        return Polynomial(self.coeffs)


def monic_polynomial(D):
    """Monic polynomial with zero locus D, counting multiplicities."""
    if D.degree == 0:
        raise ValueError("degenerate divisor")
    p = Polynomial.const(1.0)
    for lam, mult in D.points:
        factor = Polynomial((-lam, 1.0))
        for _ in range(mult):
            p = p * factor
    return DiffOperator(p.coeffs, roots=D.points)


def _taylor_shift_coeffs(coeffs, lam):
    """Coefficients c_m of p(X + lam), so p(d/dz) = sum c_m d^m on e^{lam z} terms."""
    n = len(coeffs)
    cs = [0j] * n
    for m in range(n):
        acc = 0j
        for k in range(m, n):
            acc += coeffs[k] * math.comb(k, m) * lam ** (k - m)
        cs[m] = acc
    return cs


def apply_operator(op, f):
    """Apply p(d/dz) to f symbolically; result is in canonical form.

    With the operator's roots available, each factor (d/dz - mu) acting on
    e^{lam z} q(z) with lam == mu kills a degree exactly, so annihilation of
    basis members produces an exactly empty result.
    """
    out = []
    for lam, p in f.terms:
        q = p
        if op.roots is not None:
            for mu, mult in op.roots:
                if q.is_zero:
                    break
                d = lam - complex(mu)
                if close(lam, complex(mu)):
                    q = q.derivative(mult)
                else:
                    for _ in range(mult):
                        q = q.derivative() + q.scale(d)
        else:
            cs = _taylor_shift_coeffs(op.coeffs, lam)
            acc = Polynomial.zero()
            deriv = q
            for m, c in enumerate(cs):
                if m > 0:
                    deriv = deriv.derivative()
                acc = acc + deriv.scale(c)
            q = acc
        if not q.is_zero:
            out.append((lam, q))
    return ExpPoly(tuple(out))


def basis_of(D):
    """The functions e^{lam_j z} z^k, 0 <= k < n_j, spanning the solution space."""
    if D.degree == 0:
        raise ValueError("degenerate divisor")
    out = []
    for lam, mult in D.points:
        for k in range(mult):
            out.append(ExpPoly.exponential(lam, Polynomial.monomial(k)))
    return out


def contains(D, f):
    """Membership of f in the solution space of D's annihilator."""
    if D.degree == 0:
        raise ValueError("degenerate divisor")
    return apply_operator(monic_polynomial(D), f).is_zero


def random_member(D, rng, scale=1.0):
    """Random element of the solution space, coefficients ~ scale."""
    f = ExpPoly.zero()
    for b in basis_of(D):
        c = complex(rng.normal(), rng.normal()) * scale
        f = f + b.scale(c)
    return f

"""Seeded property suites behind `homsurf verify`.

Each family label gets a suite: the group and action axioms at randomly
sampled elements, a faithfulness probe, and whatever family-specific checks
apply (matrix oracle and subgroup classification for the affine group,
annihilator exactness and covering equivariance for the divisor families,
quadric geometry for the point-pair surface, chart consistency for the line
bundles, and so on).  Suites are deterministic given (seed, family).
"""

from __future__ import annotations

import cmath
import math
import zlib
from dataclasses import dataclass

import numpy as np

from . import bbeta, bundles, exppoly, families, projective, uaff
from .divisor import Divisor, equivalent_mod_affine, equivalent_mod_rescaling, quasiperiod_group, weight
from .exppoly import ExpPoly, apply_operator, basis_of, evaluate, monic_polynomial, random_member, translate
from .numeric import close, lattice_coords
from .surfaces import TorusPoint

TWO_PI_I = 2j * math.pi


# ---------------------------------------------------------------------------
# distances and the report


def distance(a, b):
    """Relative distance between structurally matching values."""
    if isinstance(a, (int, float, complex)) and isinstance(b, (int, float, complex)):
        return abs(a - b) / max(1.0, abs(a), abs(b))
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        a = np.asarray(a, dtype=complex)
        b = np.asarray(b, dtype=complex)
        s = max(1.0, float(np.abs(a).max()), float(np.abs(b).max()))
        return float(np.abs(a - b).max()) / s
    if isinstance(a, uaff.UAffElement):
        return max(distance(a.a, b.a), distance(a.b, b.b))
    if isinstance(a, exppoly.ExpPoly):
        d = a - b
        s = max(1.0, a.max_abs(), b.max_abs())
        return max((p.max_abs() for _, p in d.terms), default=0.0) / s
    if isinstance(a, bbeta.GDElement):
        return max(distance(a.t, b.t), distance(a.f, b.f))
    if isinstance(a, bbeta.RGDElement):
        return max(distance(a.t, b.t), distance(a.lam, b.lam), distance(a.f, b.f))
    if isinstance(a, projective.ProjPoint):
        a1, a2 = a.coords
        b1, b2 = b.coords
        return abs(a1 * b2 - a2 * b1) / max(1.0, abs(a1), abs(a2)) / max(1.0, abs(b1), abs(b2))
    if isinstance(a, projective.Proj2Point):
        av, bv = np.array(a.coords), np.array(b.coords)
        s = max(1.0, float(np.abs(av).max())) * max(1.0, float(np.abs(bv).max()))
        return float(np.abs(np.cross(av, bv)).max()) / s
    if isinstance(a, projective.QuadricPoint):
        return max(distance(a.alpha, b.alpha), distance(a.beta, b.beta))
    if isinstance(a, projective.BundlePoint):
        if a.chart != b.chart:
            b = b.to_chart(a.chart)
        return max(distance(a.z, b.z), distance(a.w, b.w))
    if isinstance(a, projective.OnGroupElement):
        return max(
            projective.on_matrix_distance(a, b), distance(np.array(a.poly), np.array(b.poly))
        )
    if isinstance(a, projective.BGamma12Element):
        return max(
            distance(a.lam, b.lam), distance(a.b, b.b), distance(np.array(a.poly), np.array(b.poly))
        )
    if isinstance(a, projective.BGamma3Element):
        return max(
            distance(a.lam, b.lam), distance(a.b, b.b), distance(np.array(a.r), np.array(b.r))
        )
    if isinstance(a, TorusPoint):
        x, y = lattice_coords(a.value - b.value, a.w1, a.w2)
        dx, dy = x - round(x), y - round(y)
        return abs(dx * a.w1 + dy * a.w2) / max(1.0, abs(a.value), abs(b.value))
    if isinstance(a, (tuple, list)):
        return max((distance(x, y) for x, y in zip(a, b)), default=0.0)
    raise TypeError(f"no distance for {type(a)}")


def proj_element_distance(g, h):
    """Distance between matrices modulo a scalar."""
    g = np.asarray(g, dtype=complex)
    h = np.asarray(h, dtype=complex)
    i = int(np.abs(g).argmax())
    if abs(h.flat[i]) == 0:
        return 1.0
    return distance(g, (g.flat[i] / h.flat[i]) * h)


_PROJECTIVE_ELEMENTS = {"A1", "C5", "C6", "C7", "C9"}


def element_distance(label, g, h):
    if label in ("A1", "C9"):
        return proj_element_distance(g, h)
    if label in ("C5", "C6"):
        return max(proj_element_distance(g[0], h[0]), distance(g[1], h[1]))
    if label == "C7":
        return max(proj_element_distance(g[0], h[0]), proj_element_distance(g[1], h[1]))
    return distance(g, h)


@dataclass
class VerificationReport:
    family: str
    checks: tuple
    samples: int
    max_error: float
    passed: bool
    failures: tuple = ()

    def to_json(self):
        return {
            "family": self.family,
            "checks": list(self.checks),
            "samples": self.samples,
            "max_error": self.max_error,
            "passed": self.passed,
            "failures": list(self.failures),
        }


class Recorder:
    def __init__(self):
        self.checks = []
        self.max_error = 0.0
        self.failures = []

    def value(self, name, err, tol):
        if name not in self.checks:
            self.checks.append(name)
        self.max_error = max(self.max_error, float(err))
        if err > tol:
            self.failures.append(f"{name}: error {err:.3e} > {tol:.1e}")

    def boolean(self, name, ok, detail=""):
        if name not in self.checks:
            self.checks.append(name)
        if not ok:
            self.failures.append(f"{name}: {detail or 'failed'}")


# ---------------------------------------------------------------------------
# shared random data


def rng_for(seed, family):
    return np.random.default_rng([int(seed), zlib.crc32(family.encode())])


def random_line_divisor(rng, lam=None, max_k=4, n_extra=None):
    """Divisor [lam] + sum [lam + 2 pi i k_j] with coprime positive k_j."""
    if lam is None:
        lam = complex(rng.normal(), rng.normal()) * 0.5
    count = int(n_extra if n_extra is not None else rng.integers(1, 3))
    while True:
        ks = sorted(set(int(k) for k in rng.integers(1, max_k + 1, size=count)))
        g = 0
        for k in ks:
            g = math.gcd(g, k)
        if g == 1:
            break
    return Divisor([(lam, 1)] + [(lam + TWO_PI_I * k, 1) for k in ks]), lam, ks


def random_simple_divisor(rng, deg):
    pts = []
    while len(pts) < deg:
        p = complex(rng.normal(), rng.normal()) * 1.2
        if all(abs(p - q) > 0.2 for q in pts):
            pts.append(p)
    return Divisor([(p, 1) for p in pts])


def random_divisor(rng, max_deg=6):
    deg = int(rng.integers(2, max_deg + 1))
    pts = []
    total = 0
    while total < deg:
        p = complex(rng.normal(), rng.normal()) * 1.2
        if all(abs(p - q) > 0.25 for q, _ in pts):
            m = int(rng.integers(1, min(3, deg - total) + 1))
            pts.append((p, m))
            total += m
    return Divisor(pts)


def random_tau(rng):
    return complex(rng.uniform(-0.45, 0.45), rng.uniform(0.9, 1.6))


# ---------------------------------------------------------------------------
# axioms common to every family


def axioms_suite(label, handler, rng, samples, rec, tol=1e-9):
    ident = handler.identity()
    for _ in range(samples):
        g = handler.random_element(rng)
        h = handler.random_element(rng)
        k = handler.random_element(rng)
        lhs = handler.multiply(handler.multiply(g, h), k)
        rhs = handler.multiply(g, handler.multiply(h, k))
        rec.value("associativity", element_distance(label, lhs, rhs), tol)
        rec.value(
            "identity", element_distance(label, handler.multiply(g, ident), g), tol
        )
        gi = handler.inverse(g)
        rec.value(
            "inverse",
            element_distance(label, handler.multiply(g, gi), ident),
            tol,
        )
        x = handler.random_point(rng)
        rec.value(
            "action", distance(handler.act(handler.multiply(g, h), x), handler.act(g, handler.act(h, x))), tol
        )
    for _ in range(max(1, samples // 50)):
        g = handler.random_element(rng)
        if element_distance(label, g, ident) < 1e-6:
            continue
        moved = any(
            distance(handler.act(g, p), p) > 1e-6
            for p in (handler.random_point(rng) for _ in range(20))
        )
        rec.boolean("faithfulness", moved, "non-identity element fixed all probes")


# ---------------------------------------------------------------------------
# family-specific suites


def suite_exppoly(rng, samples, rec):
    for _ in range(max(5, samples // 10)):
        D = random_divisor(rng)
        op = monic_polynomial(D)
        for f in basis_of(D):
            out = apply_operator(op, f)
            rec.boolean("annihilator-exact", out.is_zero, "basis member not annihilated")
        f = random_member(D, rng)
        g = random_member(D, rng)
        a = complex(rng.normal(), rng.normal())
        lin = apply_operator(op, f.scale(a) + g)
        rhs = apply_operator(op, f).scale(a) + apply_operator(op, g)
        rec.value("operator-linearity", distance(lin, rhs), 1e-9)
        s = complex(rng.normal(), rng.normal()) * 0.5
        t = complex(rng.normal(), rng.normal()) * 0.5
        rec.value(
            "translation-flow", distance(translate(translate(f, s), t), translate(f, s + t)), 1e-9
        )
        z = complex(rng.normal(), rng.normal()) * 0.5
        rec.value(
            "translate-evaluate", distance(evaluate(translate(f, t), z), evaluate(f, z - t)), 1e-9
        )


def suite_divisor(rng, samples, rec):
    for _ in range(max(5, samples // 10)):
        D, lam, ks = random_line_divisor(rng)
        qg = quasiperiod_group(D)
        rec.boolean("quasiperiod-rank1", qg.kind == "rank1" and close(qg.generator, 1.0, tol=1e-8))
        shift = complex(rng.normal(), rng.normal())
        qg2 = quasiperiod_group(D.translated(shift))
        rec.boolean("quasiperiod-translation-invariant", qg2.kind == "rank1" and close(qg2.generator, qg.generator, tol=1e-8))
        mu = cmath.exp(complex(rng.normal(), rng.normal()) * 0.5)
        qg3 = quasiperiod_group(D.scaled(mu))
        err = min(
            distance(qg3.generator, qg.generator / mu),
            distance(qg3.generator, -qg.generator / mu),
        )
        rec.value("quasiperiod-rescaling", err, 1e-8)
        w1 = float(rng.integers(1, 4))
        w2 = float(rng.integers(1, 4))
        rec.value(
            "weight-multiplicative",
            distance(weight(D, w1 + w2), weight(D, w1) * weight(D, w2)),
            1e-9,
        )
        E = random_divisor(rng, max_deg=5)
        mu = cmath.exp(complex(rng.normal(), rng.normal()) * 0.5)
        a = complex(rng.normal(), rng.normal())
        got = equivalent_mod_rescaling(E, E.scaled(mu))
        ok = got is not None and equivalent_mod_rescaling(E.scaled(got), E.scaled(mu)) is not None
        rec.boolean("rescaling-detected", ok)
        F = E.scaled(mu).translated(a)
        got2 = equivalent_mod_affine(E, F)
        ok2 = got2 is not None and all(
            any(close(q, got2[0] * p + got2[1], tol=1e-6) and mm == m for q, mm in F.points)
            for p, m in E.points
        )
        rec.boolean("affine-detected", ok2)
        rec.boolean("rescaling-reflexive", equivalent_mod_rescaling(E, E) is not None)


def suite_uaff_extra(rng, samples, rec):
    for _ in range(samples):
        g = uaff.UAffElement(complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal()))
        h = uaff.UAffElement(complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal()))
        m = uaff.uaff_matrix(g) @ uaff.uaff_matrix(h)
        rec.value("matrix-oracle", distance(uaff.uaff_matrix(uaff.uaff_multiply(g, h)), m), 1e-10)
        phi = uaff.UAffAutomorphism(complex(rng.normal(), rng.normal()), cmath.exp(complex(rng.normal(), rng.normal())))
        lhs = uaff.aut_apply(phi, uaff.uaff_multiply(g, h))
        rhs = uaff.uaff_multiply(uaff.aut_apply(phi, g), uaff.aut_apply(phi, h))
        rec.value("automorphism-homomorphism", distance(lhs, rhs), 1e-10)
        com = uaff.commutator(g, uaff.UAffElement(0, 1))
        rec.value(
            "commutator-identity",
            distance(com, uaff.UAffElement(0, cmath.exp(g.a) - 1)),
            1e-10,
        )
    _uaff_classify_stability(rng, max(3, samples // 20), rec)
    _uaff_product_covers(rng, max(3, samples // 10), rec)


def random_d2_generators(rng, name):
    k = int(rng.integers(1, 4))
    tau = random_tau(rng)
    b = complex(rng.normal(), rng.normal())
    a = complex(rng.normal(), rng.normal())
    if abs(a) < 0.2:
        a = a + 0.5
    label = uaff.D2Label(
        name,
        k=k,
        b=b,
        tau=tau,
        a=a,
        a1=1.0 + 0j if name == "D2_14" else None,
        a2=complex(rng.uniform(-0.4, 0.4), rng.uniform(0.9, 1.5)) if name == "D2_14" else None,
    )
    return list(uaff.normal_form_generators(label)), label


D2_NAMES = tuple(f"D2_{i}" for i in range(1, 15))


def _shuffle_generators(gens, rng, mult, inv, ident):
    gens = list(gens)
    for _ in range(6):
        op = int(rng.integers(3))
        i = int(rng.integers(len(gens)))
        j = int(rng.integers(len(gens)))
        if op == 0 and i != j:
            gens[i] = mult(gens[i], gens[j])
        elif op == 1:
            gens[i] = inv(gens[i])
        else:
            gens[i], gens[j] = gens[j], gens[i]
    return gens


def _uaff_classify_stability(rng, trials, rec):
    for _ in range(trials):
        name = D2_NAMES[int(rng.integers(len(D2_NAMES)))]
        gens, _ = random_d2_generators(rng, name)
        phi = uaff.UAffAutomorphism(
            complex(rng.normal(), rng.normal()), cmath.exp(complex(rng.normal(), rng.normal()) * 0.5)
        )
        gens = [uaff.aut_apply(phi, g) for g in gens]
        gens = _shuffle_generators(gens, rng, uaff.uaff_multiply, uaff.uaff_inverse, uaff.IDENTITY)
        try:
            got, _ = uaff.classify_subgroup(gens)
            rec.boolean(
                "classify-stability",
                got.name == uaff.CANONICAL_ROW[name],
                f"{name} -> {got.name}",
            )
        except Exception as e:  # noqa: BLE001
            rec.boolean("classify-stability", False, f"{name}: {e}")
        nonabelian = name in uaff.NONABELIAN_LABELS
        base, _ = random_d2_generators(rng, name)
        some = any(
            not uaff.uaff_is_identity(uaff.commutator(x, y)) for x in base for y in base
        )
        rec.boolean("nonabelian-detection", some == nonabelian, name)


def _uaff_product_covers(rng, trials, rec):
    for _ in range(trials):
        name = ("D2_1", "D2_2", "D2_3", "D2_4", "D2_5", "D2_6", "D2_14")[int(rng.integers(7))]
        gens, label = random_d2_generators(rng, name)
        pt = uaff.UAffElement(complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal()))
        img = uaff.product_cover(label, pt)
        for g in gens:
            img2 = uaff.product_cover(label, uaff.uaff_multiply(pt, g))
            rec.value("product-cover-coset", distance(img, img2), 1e-7)


def suite_d1_extra(rng, samples, rec):
    labels = ("D1", "D1_1", "D1_2", "D1_3", "D1_4", "D1_5", "D1_6")
    for _ in range(max(3, samples // 10)):
        name = labels[int(rng.integers(len(labels)))]
        gens, _ = random_d1_generators(rng, name)
        m = _random_gl2(rng)
        gens = [tuple(m @ np.array(g)) for g in gens]
        if gens:
            order = rng.permutation(len(gens))
            gens = [gens[i] for i in order]
        try:
            got = families.classify_D1_subgroup(gens)
            rec.boolean("classify-stability", got.label == name, f"{name} -> {got.label}")
        except Exception as e:  # noqa: BLE001
            rec.boolean("classify-stability", False, f"{name}: {e}")


def _random_gl2(rng):
    while True:
        m = np.array(
            [
                [complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal())],
                [complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal())],
            ]
        )
        if abs(np.linalg.det(m)) > 0.3:
            return m


def random_d1_generators(rng, name):
    tau = random_tau(rng)
    if name == "D1":
        return [], {}
    if name == "D1_1":
        return [(1, 0)], {}
    if name == "D1_2":
        return [(1, 0), (0, 1)], {}
    if name == "D1_3":
        return [(1, 0), (tau, 0)], {"tau": tau}
    if name == "D1_4":
        return [(1, 0), (tau, 0), (0, 1)], {"tau": tau}
    if name == "D1_5":
        if rng.integers(2):
            sigma = complex(rng.normal(), rng.normal())
            if abs(sigma.imag) < 0.1:
                sigma += 0.3j
        else:
            sigma = math.sqrt(2) * (1 + float(rng.integers(1, 4)))
        return [(1, 0), (tau, sigma), (0, 1)], {"tau": tau, "sigma": sigma}
    if name == "D1_6":
        t2 = random_tau(rng)
        return [(1, 0), (tau, 0), (0, 1), (0, t2)], {"tau": tau}
    raise ValueError(name)


def suite_bbeta1_extra(rng, samples, rec):
    suite_exppoly(rng, samples, rec)
    _quasiperiod_oracle(rng, max(4, samples // 25), rec)
    _weight_consistency(rng, max(4, samples // 25), rec)
    _gd_structure(rng, max(10, samples // 4), rec)
    _covers_suite(rng, max(10, samples // 2), rec)
    _classify_pi_stability(rng, max(4, samples // 20), rec)


def _gd_structure(rng, samples, rec):
    from .exppoly import contains

    D, _, _ = random_line_divisor(rng, max_k=2)
    E = random_divisor(rng, max_deg=4)
    for _ in range(samples):
        g = bbeta.random_gd(E, rng, scale=0.5)
        h = bbeta.random_gd(E, rng, scale=0.5)
        rec.boolean("vd-closure-exact", contains(E, bbeta.gd_multiply(g, h).f))
        gg = bbeta.random_gd(D, rng, scale=0.4)
        k = int(rng.integers(-2, 3))
        c = bbeta.CentralizerElement(D, k, complex(rng.normal(), rng.normal()))
        x = (complex(rng.normal(), rng.normal()) * 0.4, complex(rng.normal(), rng.normal()) * 0.4)
        lhs = bbeta.cent_act(c, bbeta.gd_act(gg, x))
        rhs = bbeta.gd_act(gg, bbeta.cent_act(c, x))
        rec.value("centralizer-commutes", distance(lhs, rhs), 1e-9)


def _quasiperiod_oracle(rng, trials, rec):
    for _ in range(trials):
        D, lam, ks = random_line_divisor(rng)
        qg = quasiperiod_group(D)
        rec.boolean("quasiperiod-shape", qg.kind == "rank1" and close(qg.generator, 1.0, tol=1e-8))
        pts = D.support
        c1 = complex(rng.normal(), rng.normal()) + 2.0
        c2 = complex(rng.normal(), rng.normal()) + 2.0
        i, j = 0, int(rng.integers(1, len(pts)))
        la, lb = pts[i], pts[j]
        root = (cmath.log(-c2 / c1)) / (la - lb)
        f = ExpPoly.exponential(la).scale(c1) + ExpPoly.exponential(lb).scale(c2)
        rec.value("oracle-root", abs(evaluate(f, root)) / max(1.0, abs(c1) + abs(c2)), 1e-8)
        rec.value(
            "oracle-translated-root",
            abs(evaluate(f, root + qg.generator)) / max(1.0, abs(c1) + abs(c2)),
            1e-8,
        )
        M = random_divisor(rng)
        if all(m == 1 for _, m in M.points):
            M = M.plus_point(M.support[0])
        rec.boolean("multiplicity-trivial", quasiperiod_group(M).is_trivial)


def _weight_consistency(rng, trials, rec):
    for _ in range(trials):
        D, lam, ks = random_line_divisor(rng)
        w = float(rng.integers(1, 4))
        gw = weight(D, w)
        for _ in range(5):
            f = random_member(D, rng)
            f0 = evaluate(f, 0.0)
            if abs(f0) < 1e-3:
                continue
            rec.value("weight-vs-ratio", distance(evaluate(f, w) / f0, gw), 1e-9)
        rec.value("weight-multiplicative", distance(weight(D, w + 1), gw * weight(D, 1.0)), 1e-9)


def sample_cover_labels(rng):
    """One label instance per quotient example B..I, with admissible parameters."""
    out = []
    n = int(rng.integers(1, 4))
    tau = random_tau(rng)
    lam_gen = complex(rng.normal(), rng.normal()) * 0.4
    D, _, _ = random_line_divisor(rng, lam=lam_gen, max_k=2)
    out.append(bbeta.BBeta1Label("B", D, n=n))
    m = int(rng.integers(1, 3))
    DC, _, _ = random_line_divisor(rng, lam=TWO_PI_I * m / n, max_k=2)
    out.append(bbeta.BBeta1Label("C", DC, n=n))
    D0, _, _ = random_line_divisor(rng, lam=0.0, max_k=2)
    out.append(bbeta.BBeta1Label("D", D0, n=n))
    s = complex(rng.normal(), rng.normal()) * 0.4
    out.append(bbeta.BBeta1Label("E", DC, n=n, s=s))
    DF, _, _ = random_line_divisor(rng, lam=1j * math.pi * (2 * m + 1) / n, max_k=2)
    out.append(bbeta.BBeta1Label("F", DF, n=n))
    out.append(bbeta.BBeta1Label("G", D0, n=n, tau=tau))
    out.append(bbeta.BBeta1Label("H", DC, n=n, s=s, tau=tau))
    DI, _, _ = random_line_divisor(rng, lam=1j * math.pi * (2 * m + 1) / n, max_k=2)
    out.append(bbeta.BBeta1Label("I", DI, n=n, tau=tau))
    return out


def _cover_sample(rng, D):
    """A bounded sample (g, (z, w)) keeping the exponential covers in range."""
    for _ in range(64):
        z = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.25, 0.25))
        w = complex(rng.normal(), rng.normal()) * 0.5
        g = bbeta.random_gd(D, rng, scale=0.25)
        y = bbeta.gd_act(g, (z, w))
        if abs(y[1]) < 12 and abs(y[0].imag) < 0.8:
            return g, (z, w)
    raise AssertionError("could not sample a bounded cover point")


def _covers_suite(rng, samples, rec):
    for label in sample_cover_labels(rng):
        cov = bbeta.quotient_cover(label)
        D = label.divisor
        for _ in range(max(3, samples // 8)):
            g, (z, w) = _cover_sample(rng, D)
            lhs = cov.cover(*bbeta.gd_act(g, (z, w)))
            rhs = cov.act(g, cov.cover(z, w))
            rec.boolean(
                f"cover-equivariance-{label.name}", cov.equal(lhs, rhs, tol=1e-9), label.name
            )
            for pg in cov.pi_generators():
                moved = bbeta.cent_act(pg, (z, w))
                rec.boolean(
                    f"cover-invariance-{label.name}",
                    cov.equal(cov.cover(*moved), cov.cover(z, w), tol=1e-9),
                    label.name,
                )
            rec.boolean(f"cover-jacobian-{label.name}", cov.jacobian_ok(z, w), label.name)


def _classify_pi_stability(rng, trials, rec):
    for _ in range(trials):
        labels = sample_cover_labels(rng)
        label = labels[int(rng.integers(len(labels)))]
        cov = bbeta.quotient_cover(label)
        gens = cov.pi_generators()
        D = label.divisor
        conj = bbeta.table_automorphism(
            D,
            nu=cmath.exp(complex(rng.normal(), rng.normal()) * 0.5),
            t=complex(rng.normal(), rng.normal()),
        )
        gens = [conj(g) for g in gens]
        gens = _shuffle_generators(
            gens, rng, bbeta.cent_multiply, bbeta.cent_inverse, bbeta.cent_identity(D)
        )
        try:
            got = bbeta.classify_pi(gens, D)
            rec.boolean("classify-pi-stability", got.label.name == label.name, f"{label.name} -> {got.label.name}")
        except Exception as e:  # noqa: BLE001
            rec.boolean("classify-pi-stability", False, f"{label.name}: {e}")


def suite_bbeta2_extra(rng, samples, rec):
    D0, _, _ = random_line_divisor(rng, lam=0.0, max_k=3)
    n = int(rng.integers(1, 4))
    cov = bbeta.rgd_quotients(D0, n)
    for _ in range(max(5, samples // 4)):
        z = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.35, 0.35))
        w = complex(rng.normal(), rng.normal()) * 0.7
        g = bbeta.random_rgd(D0, rng, scale=0.4)
        lhs = cov.cover(*bbeta.rgd_act(g, (z, w)))
        rhs = cov.act(g, cov.cover(z, w))
        rec.boolean("rgd-cover-equivariance", cov.equal(lhs, rhs, tol=1e-9))
        rec.boolean(
            "rgd-cover-invariance",
            cov.equal(cov.cover(z + n, w), cov.cover(z, w), tol=1e-9),
        )
    _morphism_suite(rng, max(5, samples // 4), rec)


def _morphism_suite(rng, samples, rec):
    D = random_divisor(rng, max_deg=4)
    for group in ("gd", "rgd"):
        rand = bbeta.random_gd if group == "gd" else bbeta.random_rgd
        act = bbeta.gd_act if group == "gd" else bbeta.rgd_act
        g0 = rand(D, rng, scale=0.5)
        morphs = [
            bbeta.morphism_family(1, group, D, g=g0),
            bbeta.morphism_family(
                2,
                group,
                D,
                mu=cmath.exp(complex(rng.normal(), rng.normal()) * 0.4),
                nu=cmath.exp(complex(rng.normal(), rng.normal()) * 0.4),
            ),
        ]
        if group == "gd":
            f0 = random_member(D.plus_point(0j), rng, scale=0.5)
            morphs.append(bbeta.morphism_family(3, group, D, f0=f0))
        else:
            morphs.append(bbeta.morphism_family(3, group, D, a=complex(rng.normal(), rng.normal()) * 0.4))
        for kind, mor in enumerate(morphs, start=1):
            tact = bbeta.gd_act if group == "gd" else bbeta.rgd_act
            for _ in range(max(3, samples // 6)):
                g = rand(D, rng, scale=0.5)
                x = (complex(rng.normal(), rng.normal()) * 0.5, complex(rng.normal(), rng.normal()) * 0.5)
                lhs = mor.delta(act(g, x))
                rhs = tact(mor.h(g), mor.delta(x))
                rec.value(f"morphism-{group}-kind{kind}", distance(lhs, rhs), 1e-8)


def suite_c9_extra(rng, samples, rec):
    handler = families.build_family("C9")
    for _ in range(samples):
        x = handler.random_point(rng)
        ex, ey, ez = projective.quadric_embed(x)
        rec.value("quadric-identity", abs(ey * ey - 4 * ex * ez - 1.0), 1e-9)
        c = projective.quadric_double_cover(x)
        cs = projective.quadric_double_cover(x.swapped())
        rec.boolean("double-cover-swap", projective.proj2_equal(c, cs, tol=1e-9))
        p1, p2 = projective.quadric_preimages(c)
        ok = (projective.quadric_equal(p1, x, tol=1e-6) or projective.quadric_equal(p2, x, tol=1e-6))
        rec.boolean("double-cover-preimages", ok)
        g = handler.random_element(rng)
        lhs = projective.quadric_double_cover(projective.quadric_act(g, x))
        rhs = projective.conic_complement_act(g, projective.quadric_double_cover(x))
        rec.boolean("c9-equivariance", projective.proj2_equal(lhs, rhs, tol=1e-8))


def suite_bundle_charts(rng, samples, rec, n):
    handler = families.build_family("Bδ4", n=n)
    for _ in range(samples):
        e = handler.random_element(rng)
        z = complex(rng.normal(), rng.normal())
        if abs(z) < 0.05:
            z += 0.3
        w = complex(rng.normal(), rng.normal())
        p0 = projective.BundlePoint(n, 0, z, w)
        p1 = p0.to_chart(1)
        r0 = projective.on_act(e, p0)
        r1 = projective.on_act(e, p1)
        rec.value("chart-consistency", distance(r0, r1), 1e-8)


def suite_sc(rng, samples, rec):
    lam1, lam2 = 1.0 + 0j, 1j
    for c in (1.0 + 0j, -1.0 + 0j, 1j):
        data = bundles.SCData(lam1, lam2, c)
        for _ in range(max(3, samples // 10)):
            phi = random_sc_biholo(rng, data)
            rec.boolean(f"sc-normalizes-c={c}", bundles.normalizes_deck(phi, rng=rng), str(c))
        for _ in range(max(2, samples // 25)):
            bad = corrupt_sc_map(rng, data)
            rec.boolean(
                f"sc-corrupt-fails-c={c}",
                not bundles.map_normalizes_deck(bad, data, rng),
                str(c),
            )
        for _ in range(max(2, samples // 33)):
            f1 = bundles.as_map(random_sc_biholo(rng, data))
            f2 = bundles.as_map(random_sc_biholo(rng, data))
            rec.boolean(
                f"sc-composition-c={c}",
                bundles.map_normalizes_deck(f1.compose(f2), data, rng),
                str(c),
            )


def random_sc_biholo(rng, data):
    case = data.case
    units = [1, -1, 1j, -1j] if abs(data.w2 - 1j) < 1e-9 and abs(data.w1 - 1) < 1e-9 else [1, -1]
    b = units[int(rng.integers(len(units)))]
    sign = 1 if case == "root" else int(rng.choice([1, -1]))
    lam0 = float(rng.integers(-2, 3)) * data.w1 + float(rng.integers(-2, 3)) * data.w2
    deg = int(rng.integers(0, 3))
    f = tuple((k, complex(rng.normal(), rng.normal()) * 0.5) for k in range(-deg, deg + 1))
    z0 = complex(rng.normal() * 0.4, rng.uniform(-0.15, 0.15))
    return bundles.SCBiholomorphism(data, sign=sign, z0=z0, b=b, lam0=lam0, f=f)


def corrupt_sc_map(rng, data):
    kind = int(rng.integers(3))
    phi = random_sc_biholo(rng, data)
    if kind == 0:
        bad_b = phi.b * (1.3 + 0.1 * float(rng.uniform()))

        def fwd(z, w):
            zn, wn = bundles.biholo_apply(phi, z, w)
            return (zn, wn + (bad_b - phi.b) * w)

        def bwd(z, w):
            z1 = phi.sign * (z - phi.z0)
            _, f0 = bundles.biholo_apply(phi, z1, 0j)
            return (z1, (w - f0) / bad_b)

        return bundles.PlaneMap(fwd, bwd)
    if kind == 1:
        if close(data.c, 1.0):
            # constant w-offsets are honest biholomorphisms when c = 1;
            # corrupt the base coordinate instead
            s = 1.5 + 0.2 * float(rng.uniform())

            def fwd(z, w):
                zn, wn = bundles.biholo_apply(phi, z, w)
                return (s * zn, wn)

            def bwd(z, w):
                return bundles.biholo_inverse_apply(phi, z / s, w)

            return bundles.PlaneMap(fwd, bwd)
        off = (0.37 + 0.11 * float(rng.uniform())) * data.w1

        def fwd(z, w):
            zn, wn = bundles.biholo_apply(phi, z, w)
            return (zn, wn + off)

        def bwd(z, w):
            return bundles.biholo_inverse_apply(phi, z, w - off)

        return bundles.PlaneMap(fwd, bwd)
    # wrong fiberwise twist: anti-periodic term for c = 1, untwisted for c != 1
    amp = 0.5 + float(rng.uniform())
    freq = 1j * math.pi if close(data.c, 1.0) else 2j * math.pi

    def extra(z):
        return amp * cmath.exp(freq * z)

    def fwd(z, w):
        zn, wn = bundles.biholo_apply(phi, z, w)
        return (zn, wn + extra(z))

    def bwd(z, w):
        z1 = phi.sign * (z - phi.z0)
        _, f0 = bundles.biholo_apply(phi, z1, 0j)
        return (z1, (w - f0 - extra(z1)) / phi.b)

    return bundles.PlaneMap(fwd, bwd)


def suite_bgamma2_center(rng, samples, rec):
    handler = families.build_family("Bγ2")
    n = handler.n
    for _ in range(max(3, samples // 10)):
        s = complex(rng.normal(), rng.normal())
        shift = projective.BGamma12Element(n, 0.0, 0j, 0j, (0j,) * n + (s,))
        g = handler.random_element(rng)
        x = handler.random_point(rng)
        lhs = handler.act(g, handler.act(shift, x))
        rhs = handler.act(shift, handler.act(g, x))
        rec.value("central-w-translations", distance(lhs, rhs), 1e-9)


# ---------------------------------------------------------------------------
# the runner


EXTRA_SUITES = {
    "D2": suite_uaff_extra,
    "D1": suite_d1_extra,
    "Bβ1": suite_bbeta1_extra,
    "Bβ2": suite_bbeta2_extra,
    "C9": suite_c9_extra,
    "Bδ3": lambda rng, samples, rec: suite_bundle_charts(rng, samples, rec, 2),
    "Bδ4": lambda rng, samples, rec: suite_bundle_charts(rng, samples, rec, 3),
    "Bγ2": suite_bgamma2_center,
}

PSEUDO_SUITES = {
    "exppoly": suite_exppoly,
    "divisor": suite_divisor,
    "SC": suite_sc,
}


def suite_names():
    return list(families.BASE_FAMILY_LABELS) + list(PSEUDO_SUITES)


def run_suite(name, samples=100, seed=0):
    rec = Recorder()
    rng = rng_for(seed, name)
    if name in PSEUDO_SUITES:
        PSEUDO_SUITES[name](rng, samples, rec)
    else:
        handler = families.build_family(name)
        axioms_suite(name, handler, rng, samples, rec)
        extra = EXTRA_SUITES.get(name)
        if extra:
            extra(rng, samples, rec)
    return VerificationReport(
        family=name,
        checks=tuple(rec.checks),
        samples=samples,
        max_error=rec.max_error,
        passed=not rec.failures,
        failures=tuple(rec.failures[:8]),
    )


def run_verification(target="all", samples=100, seed=0):
    """Reports for one suite or all of them; deterministic given the seed."""
    if target == "all":
        names = suite_names()
    else:
        ascii_map = {f.replace("β", "b").replace("γ", "g").replace("δ", "d"): f for f in suite_names()}
        name = target if target in suite_names() else ascii_map.get(target)
        if name is None:
            raise ValueError(f"unknown verification suite {target}")
        names = [name]
    return [run_suite(n, samples=samples, seed=seed) for n in names]

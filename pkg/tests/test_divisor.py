import cmath
import math

import pytest

from homsurf.divisor import (
    Divisor,
    equivalent_mod_affine,
    equivalent_mod_rescaling,
    quasiperiod_group,
    weight,
)
from homsurf.numeric import close

TWO_PI_I = 2j * math.pi


def two_term_roots(c1, l1, c2, l2, ks=range(-2, 3)):
    """Closed-form roots of c1 e^{l1 z} + c2 e^{l2 z}, one per branch."""
    base = cmath.log(-c2 / c1) / (l1 - l2)
    return [base + TWO_PI_I * k / (l1 - l2) for k in ks]


def normalized_two_term(c1, l1, c2, l2):
    """z -> e^{-l1 z} f(z), numerically tame for root checks."""
    return lambda z: c1 + c2 * cmath.exp((l2 - l1) * z)


def test_quasiperiod_examples():
    assert quasiperiod_group(Divisor([(5.0, 1)])).kind == "all"
    assert quasiperiod_group(Divisor([(0.0, 2)])).kind == "trivial"
    qg = quasiperiod_group(Divisor([(0.0, 1), (TWO_PI_I, 1)]))
    assert qg.kind == "rank1" and close(qg.generator, 1.0)


def test_quasiperiod_bruteforce_oracle():
    # D = [0] + [1]: roots of c1 + c2 e^z differ by 2 pi i k
    D = Divisor([(0.0, 1), (1.0, 1)])
    qg = quasiperiod_group(D)
    assert qg.kind == "rank1"
    roots = two_term_roots(1.3 + 0.2j, 0.0, 0.7 - 0.4j, 1.0)
    diffs = {round((r - roots[0]).imag / (2 * math.pi)) for r in roots}
    assert close(qg.generator, TWO_PI_I) or close(qg.generator, -TWO_PI_I)
    f = normalized_two_term(1.3 + 0.2j, 0.0, 0.7 - 0.4j, 1.0)
    for r in roots:
        assert abs(f(r)) < 1e-10
        assert abs(f(r + qg.generator)) < 1e-10
    # consecutive roots differ by exactly one generator
    assert diffs in ({0, 1, 2, 3, 4}, {0, -1, -2, -3, -4})


def test_quasiperiod_zero_set_invariance(rng):
    for _ in range(10):
        lam = complex(rng.normal(), rng.normal()) * 0.4
        ks = sorted({1, int(rng.integers(2, 5))})
        D = Divisor([(lam, 1)] + [(lam + TWO_PI_I * k, 1) for k in ks])
        qg = quasiperiod_group(D)
        assert qg.kind == "rank1" and close(qg.generator, 1.0)
        pts = D.support
        c1 = complex(rng.normal(), rng.normal()) + 1.5
        c2 = complex(rng.normal(), rng.normal()) + 1.5
        f = normalized_two_term(c1, pts[0], c2, pts[1])
        for r in two_term_roots(c1, pts[0], c2, pts[1]):
            assert abs(f(r)) < 1e-9
            assert abs(f(r + 1.0)) < 1e-9


def test_weight_examples():
    D = Divisor([(0.0, 1), (TWO_PI_I, 1)])
    assert close(weight(D, 1.0), 1.0)
    assert close(weight(D, 0.0), 1.0)
    E = Divisor([(1j * math.pi, 1), (3j * math.pi, 1)])
    assert close(weight(E, 1.0), -1.0)


def test_weight_matches_function_ratio(rng):
    E = Divisor([(1j * math.pi, 1), (3j * math.pi, 1)])
    for _ in range(5):
        c1 = complex(rng.normal(), rng.normal()) + 1.0
        c2 = complex(rng.normal(), rng.normal()) + 1.0

        def f(z):
            return c1 * cmath.exp(1j * math.pi * z) + c2 * cmath.exp(3j * math.pi * z)

        assert abs(f(1.0) / f(0.0) - weight(E, 1.0)) < 1e-9 * max(1.0, abs(f(1.0)))


def test_weight_rejects_non_quasiperiod():
    D = Divisor([(0.0, 1), (TWO_PI_I, 1)])
    with pytest.raises(ValueError, match="quasiperiod"):
        weight(D, 0.5)


def test_weight_multiplicative(rng):
    D = Divisor([(0.3j, 1), (0.3j + TWO_PI_I, 1)])
    for _ in range(20):
        a = float(rng.integers(-3, 4))
        b = float(rng.integers(-3, 4))
        assert close(weight(D, a + b), weight(D, a) * weight(D, b))


def test_equivalent_mod_rescaling_examples():
    assert close(equivalent_mod_rescaling(Divisor.from_points(1, 2), Divisor.from_points(2, 4)), 2.0)
    assert close(equivalent_mod_rescaling(Divisor.from_points(0, 1), Divisor.from_points(0, 1)), 1.0)
    assert equivalent_mod_rescaling(Divisor.from_points(1, 2), Divisor.from_points(1, 3)) is None


def test_equivalent_mod_affine_examples():
    mu, a = equivalent_mod_affine(Divisor.from_points(0, 1), Divisor.from_points(5, 7))
    assert close(mu, 2.0) and close(a, 5.0)
    mu, a = equivalent_mod_affine(Divisor.from_points(0.3, 1j), Divisor.from_points(0.3, 1j))
    assert close(mu, 1.0) and close(a, 0.0)
    assert equivalent_mod_affine(Divisor([(0, 2)]), Divisor([(0, 1), (1, 1)])) is None


def test_rescaling_equivalence_relation(rng):
    for _ in range(10):
        pts = [(complex(rng.normal(), rng.normal()) * 1.2, int(rng.integers(1, 3))) for _ in range(3)]
        try:
            D = Divisor(pts)
        except ValueError:
            continue
        mu1 = cmath.exp(complex(rng.normal(), rng.normal()) * 0.5)
        mu2 = cmath.exp(complex(rng.normal(), rng.normal()) * 0.5)
        E = D.scaled(mu1)
        F = E.scaled(mu2)
        m_de = equivalent_mod_rescaling(D, E)
        m_ed = equivalent_mod_rescaling(E, D)
        m_df = equivalent_mod_rescaling(D, F)
        assert m_de is not None and m_ed is not None and m_df is not None
        # symmetric with mu -> 1/mu and transitive with mu-products, up to
        # the candidate search picking another valid representative
        assert equivalent_mod_rescaling(D.scaled(m_de), E) is not None
        assert equivalent_mod_rescaling(E.scaled(m_ed), D) is not None
        assert equivalent_mod_rescaling(D.scaled(m_df), F) is not None


def test_quasiperiod_translation_and_rescaling(rng):
    D = Divisor([(0.2 + 0.1j, 1), (0.2 + 0.1j + TWO_PI_I, 1), (0.2 + 0.1j + 3 * TWO_PI_I, 1)])
    qg = quasiperiod_group(D)
    assert qg.kind == "rank1"
    for _ in range(10):
        t = complex(rng.normal(), rng.normal())
        qt = quasiperiod_group(D.translated(t))
        assert qt.kind == "rank1" and close(qt.generator, qg.generator)
        mu = cmath.exp(complex(rng.normal(), rng.normal()) * 0.4)
        qs = quasiperiod_group(D.scaled(mu))
        assert qs.kind == "rank1"
        assert close(qs.generator, qg.generator / mu) or close(qs.generator, -qg.generator / mu)


def test_divisor_json_and_cap():
    D = Divisor([(0.5 - 0.25j, 2), (1.0, 1)])
    assert Divisor.from_json(D.to_json()) == D
    with pytest.raises(ValueError, match="cap"):
        Divisor([(float(k), 1) for k in range(40)])

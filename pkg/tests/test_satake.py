"""Laurent coefficient polynomials and their numeric evaluation."""

import cmath
import math
import random

import pytest

from lfcheck.chargroup import standard_group
from lfcheck.ingest import satake_from_ap, tau
from lfcheck.repalg import (
    VirtualRep,
    ad_atom,
    char_atom,
    rs_product,
    sym_atom,
)
from lfcheck.satake import (
    VARS,
    CoefficientError,
    coeff_poly,
    satake_point,
)
from lfcheck.repalg import opaque_atom


G = standard_group()
chi = G.gen("chi")


def unitary_point(rng):
    """Random point on the unitary locus respecting declared orders."""
    a1 = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
    a2 = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
    chars = {
        "chi": cmath.exp(1j * rng.uniform(0, 2 * math.pi)),
        "mu_pi": cmath.exp(2j * math.pi * rng.randrange(3) / 3),
        "mu_pi'": cmath.exp(2j * math.pi * rng.randrange(3) / 3),
        "eta_pi": float(rng.choice([1, -1])),
        "eta_pi'": float(rng.choice([1, -1])),
        "xiF_pi": cmath.exp(1j * rng.uniform(0, 2 * math.pi)),
        "xiF_pi'": cmath.exp(1j * rng.uniform(0, 2 * math.pi)),
    }
    return satake_point(a1, a1.conjugate(), a2, a2.conjugate(), chars)


def test_vars_cover_the_lattice_without_central_slots():
    assert "a_pi" in VARS and "b_pi'" in VARS
    assert "om_pi" not in VARS  # central characters fold into a*b
    assert "chi" in VARS


def test_adjoint_coefficient_at_delta_p2():
    # tau(2) = -24, weight 12: a_Ad(2) = tau(2)^2 / 2^11 - 1
    alpha, beta = satake_from_ap(tau(2), 2, 12)
    pt = satake_point(alpha, beta, 1.0, 1.0, {})
    val = coeff_poly(VirtualRep.of(ad_atom("pi"))).eval(pt)
    assert abs(val.imag) < 1e-12
    assert abs(val.real - (tau(2) ** 2 / 2**11 - 1)) < 1e-12
    assert abs(val.real - (-0.71875)) < 1e-12


def test_standard_coefficient_is_trace():
    rng = random.Random(777)
    for _ in range(20):
        pt = unitary_point(rng)
        v = coeff_poly(VirtualRep.of(sym_atom("pi", 1))).eval(pt)
        assert abs(v - (pt["a_pi"] + pt["b_pi"])) < 1e-12


def test_multiplicativity_seeded():
    # pair coefficient = product of member coefficients, prime powers too
    rng = random.Random(24601)
    A = VirtualRep.of(ad_atom("pi"))
    B = VirtualRep.of(ad_atom("pi'", chi))
    PA, PB = coeff_poly(A), coeff_poly(B)
    PP = coeff_poly(rs_product(A, B))
    for _ in range(100):
        pt = unitary_point(rng)
        for ell in range(1, 5):
            pl = {k: v**ell for k, v in pt.items()}
            lhs = PP.eval(pl)
            rhs = PA.eval(pl) * PB.eval(pl)
            assert abs(lhs - rhs) < 1e-9


def test_power_substitute_matches_pointwise_powers():
    rng = random.Random(515)
    P = coeff_poly(
        VirtualRep.of(sym_atom("pi", 3, chi)) + VirtualRep.of(char_atom(chi))
    )
    for _ in range(20):
        pt = unitary_point(rng)
        for ell in (2, 3):
            pl = {k: v**ell for k, v in pt.items()}
            assert abs(P.power_substitute(ell).eval(pt) - P.eval(pl)) < 1e-12


def test_conjugation_on_unitary_locus():
    rng = random.Random(31415)
    P = coeff_poly(VirtualRep.of(sym_atom("pi", 2, chi * G.gen("om_pi", -1))))
    for _ in range(30):
        pt = unitary_point(rng)
        lhs = P.conj().eval(pt)
        rhs = P.eval(pt).conjugate()
        assert abs(lhs - rhs) < 1e-12


def test_duality_matches_conjugation():
    rng = random.Random(2718)
    V = VirtualRep.of(sym_atom("pi", 3, chi)) + VirtualRep.of(ad_atom("pi'"))
    P, PD = coeff_poly(V), coeff_poly(V.dual())
    for _ in range(30):
        pt = unitary_point(rng)
        assert abs(PD.eval(pt) - P.eval(pt).conjugate()) < 1e-12


def test_arithmetic_ring_axioms():
    x = coeff_poly(VirtualRep.of(sym_atom("pi", 1)))
    y = coeff_poly(VirtualRep.of(char_atom(chi)))
    assert (x + y) - y == x
    assert x * y == y * x
    assert (x - x).is_zero


def test_opaque_atom_has_no_polynomial():
    with pytest.raises(CoefficientError):
        coeff_poly(VirtualRep.of(opaque_atom("nu_pi")))


def test_satake_point_validates_modulus():
    with pytest.raises(ValueError):
        satake_point(2.0, 0.5, 1.0, 1.0, {})


def test_satake_point_validates_declared_orders():
    with pytest.raises(ValueError):
        satake_point(1.0, 1.0, 1.0, 1.0, {"mu_pi": -1.0})  # not a cube root
    pt = satake_point(1.0, 1.0, 1.0, 1.0, {"eta_pi": -1.0})
    assert pt["eta_pi"] == -1.0


def test_eval_requires_all_variables():
    P = coeff_poly(VirtualRep.of(sym_atom("pi", 1)))
    with pytest.raises(CoefficientError):
        P.eval({"a_pi": 1.0})

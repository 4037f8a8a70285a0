"""The degree-324 auxiliary product: construction, the sum-of-squares
identity for its prime-power coefficients, and a numeric positivity scan.

The product has fifteen factors.  Writing A, A' for the two adjoints, S4,
S4' for the omega-normalized fourth symmetric powers, and chi for the
auxiliary character, the factors and multiplicities are

    zeta^6, (A x A'chi)^4, (A x A'chibar)^4, A^7, A'^2, (A'chi)^2,
    (A'chibar)^2, S4^5, S4'^2, (A x A')^3, (A x S4')^3, (A' x S4),
    (A' x S4chi)^2, (A' x S4chibar)^2, (S4 x S4').

At an unramified prime the coefficient equals |2x + xz + z|^2 with
x the adjoint coefficient of the first form (real) and z the chi-twisted
adjoint coefficient of the second.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .chargroup import standard_group
from .repalg import VirtualRep, ad_atom, rs_product, sym_atom, char_atom
from .satake import LaurentPoly, coeff_poly, satake_point


def _om2bar(base: str):
    G = standard_group()
    return G.gen("om_pi" if base == "pi" else "om_pi'") ** (-2)


def aux_factors() -> list[tuple[str, VirtualRep, int]]:
    """The fifteen factors in display order as (label, value, multiplicity)."""
    G = standard_group()
    chi = G.gen("chi")
    A = VirtualRep.of(ad_atom("pi"))
    A2 = VirtualRep.of(ad_atom("pi'"))
    A2chi = VirtualRep.of(ad_atom("pi'", chi))
    A2chibar = VirtualRep.of(ad_atom("pi'", chi.inv()))
    S4 = VirtualRep.of(sym_atom("pi", 4, _om2bar("pi")))
    S42 = VirtualRep.of(sym_atom("pi'", 4, _om2bar("pi'")))
    S4chi = VirtualRep.of(sym_atom("pi", 4, chi * _om2bar("pi")))
    S4chibar = VirtualRep.of(sym_atom("pi", 4, chi.inv() * _om2bar("pi")))
    one = VirtualRep.of(char_atom(G.one()))
    out = [
        ("zeta", one, 6),
        ("A x A'(chi)", rs_product(A, A2chi), 4),
        ("A x A'(chibar)", rs_product(A, A2chibar), 4),
        ("A", A, 7),
        ("A'", A2, 2),
        ("A'(chi)", A2chi, 2),
        ("A'(chibar)", A2chibar, 2),
        ("S4", S4, 5),
        ("S4'", S42, 2),
        ("A x A'", rs_product(A, A2), 3),
        ("A x S4'", rs_product(A, S42), 3),
        ("A' x S4", rs_product(A2, S4), 1),
        ("A' x S4(chi)", rs_product(A2, S4chi), 2),
        ("A' x S4(chibar)", rs_product(A2, S4chibar), 2),
        ("S4 x S4'", rs_product(S4, S42), 1),
    ]
    return out


def build_D() -> VirtualRep:
    """The full auxiliary product as one multiset; degree 324."""
    total = VirtualRep.build([])
    for _label, V, mult in aux_factors():
        total = total + V.scale(mult)
    assert total.degree == 324, total.degree
    return total


_CACHE: dict[str, LaurentPoly] = {}


def _polys() -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """(full coefficient polynomial, x, z), cached."""
    if "P" not in _CACHE:
        G = standard_group()
        _CACHE["P"] = coeff_poly(build_D())
        _CACHE["x"] = coeff_poly(VirtualRep.of(ad_atom("pi")))
        _CACHE["z"] = coeff_poly(VirtualRep.of(ad_atom("pi'", G.gen("chi"))))
    return _CACHE["P"], _CACHE["x"], _CACHE["z"]


def sos_closed_form() -> LaurentPoly:
    _P, x, z = _polys()
    two = LaurentPoly.one() + LaurentPoly.one()
    w = two * x + x * z + z
    return w * w.conj()


def verify_sos() -> list[tuple[str, bool, str]]:
    """Check the square identity and its supporting relations exactly.

    Returns (name, ok, detail) per sub-check.
    """
    P, x, z = _polys()
    checks = []

    checks.append(
        ("adjoint coefficient is real", (x.conj() - x).is_zero, "conj(x) = x")
    )

    for base, xx in (("pi", x), ("pi'", coeff_poly(VirtualRep.of(ad_atom("pi'"))))):
        s4 = coeff_poly(VirtualRep.of(sym_atom(base, 4, _om2bar(base))))
        lhs = xx * xx
        rhs = LaurentPoly.one() + xx + s4
        checks.append(
            (
                f"square relation over {base}",
                (lhs - rhs).is_zero,
                "x^2 = 1 + x + s4",
            )
        )

    Q = sos_closed_form()
    diff = P - Q
    checks.append(
        (
            "coefficient equals |2x + xz + z|^2",
            diff.is_zero,
            "0 residual" if diff.is_zero else f"{diff.n_terms} residual terms",
        )
    )

    ones = satake_point(1, 1, 1, 1)
    v324 = P.eval(ones)
    checks.append(
        (
            "degree check at the trivial point",
            abs(v324 - 324) < 1e-9,
            f"value {v324.real:.12g}",
        )
    )

    vneg = P.eval(satake_point(1, 1, 1, 1, {"chi": -1}))
    checks.append(
        (
            "quadratic character point",
            abs(vneg - 36) < 1e-9,
            f"value {vneg.real:.12g}",
        )
    )

    chibar = {"chi": 0.6 + 0.8j}
    pt = satake_point(1j, -1j, 0.8 + 0.6j, 0.8 - 0.6j, chibar)
    sym = P.eval(pt)
    swapped = P.eval({**pt, "chi": pt["chi"].conjugate()})
    checks.append(
        (
            "conjugate-character symmetry",
            abs(sym - swapped) < 1e-9,
            f"|difference| {abs(sym - swapped):.3g}",
        )
    )
    return checks


def a_D_value(point: dict[str, complex]) -> complex:
    """Direct evaluation of the full coefficient polynomial."""
    P, _x, _z = _polys()
    return P.eval(point)


def sos_value(point: dict[str, complex]) -> float:
    _P, x, z = _polys()
    xv = x.eval(point)
    zv = z.eval(point)
    return abs(2 * xv + xv * zv + zv) ** 2


@dataclass
class ScanResult:
    rows: list[tuple[int, int, float, float]] = field(default_factory=list)
    checked: int = 0
    min_value: float = float("inf")
    max_abs_delta: float = 0.0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.violations


def _eval_block(args) -> list[tuple[int, int, float, float, str]]:
    items, lmax, tol = args
    out = []
    for p, (a1, b1, a2, b2, cv) in items:
        base = satake_point(a1, b1, a2, b2, {"chi": cv}, tol=1e-6)
        for ell in range(1, lmax + 1):
            pt = {k: v**ell for k, v in base.items()}
            direct = a_D_value(pt)
            sos = sos_value(pt)
            err = ""
            if abs(direct.imag) > tol:
                err = f"p={p} l={ell}: coefficient not real ({direct.imag:.3g})"
            elif direct.real < -tol:
                err = f"p={p} l={ell}: negative coefficient ({direct.real:.3g})"
            elif abs(direct.real - sos) > tol:
                err = (
                    f"p={p} l={ell}: direct/square mismatch "
                    f"({direct.real:.12g} vs {sos:.12g})"
                )
            out.append((p, ell, direct.real, abs(direct.real - sos), err))
    return out


def resolve_threads(threads: int | None = None) -> int:
    if threads is not None:
        return max(1, threads)
    try:
        return max(1, int(os.environ.get("LCALC_THREADS", "1")))
    except ValueError:
        return 1


def scan_positivity(
    points: dict[int, tuple[complex, complex, complex, complex, complex]],
    lmax: int = 3,
    tol: float = 1e-9,
    threads: int | None = None,
) -> ScanResult:
    """Check non-negativity and the square identity for each prepared prime
    point and each prime-power exponent up to lmax.

    points maps p to (alpha1, beta1, alpha2, beta2, chi(p)).  Work is split
    over processes when more than one thread is requested; results merge in
    (p, l) order either way.
    """
    res = ScanResult()
    items = sorted(points.items())
    if not items:
        return res
    nthreads = resolve_threads(threads)
    if nthreads > 1:
        nblocks = min(len(items), nthreads * 4)
        blocks = [
            (items[i::nblocks], lmax, tol) for i in range(nblocks)
        ]
        with ProcessPoolExecutor(max_workers=nthreads) as ex:
            chunks = list(ex.map(_eval_block, blocks))
        rows = [r for chunk in chunks for r in chunk]
        rows.sort(key=lambda r: (r[0], r[1]))
    else:
        rows = _eval_block((items, lmax, tol))
    for p, ell, val, delta, err in rows:
        res.rows.append((p, ell, val, delta))
        res.checked += 1
        res.min_value = min(res.min_value, val)
        res.max_abs_delta = max(res.max_abs_delta, delta)
        if err:
            res.violations.append(err)
    return res

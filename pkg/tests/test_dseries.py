"""Auxiliary degree-324 product: assembly, square identity, scanning."""

import cmath
import random

from lfcheck.dseries import (
    ScanResult,
    a_D_value,
    aux_factors,
    build_D,
    resolve_threads,
    scan_positivity,
    sos_value,
    verify_sos,
)
from lfcheck.ingest import builtin_form, parse_char_spec, prepare_scan_points
from lfcheck.satake import satake_point


# display-order multiplicities of the fifteen factors
PROFILE = (6, 4, 4, 7, 2, 2, 2, 5, 2, 3, 3, 1, 2, 2, 1)


def test_factor_roster():
    facs = aux_factors()
    assert len(facs) == 15
    assert tuple(m for _l, _v, m in facs) == PROFILE
    assert sum(V.degree * m for _l, V, m in facs) == 324


def test_total_degree():
    assert build_D().degree == 324


def test_square_identity_suite():
    checks = verify_sos()
    assert len(checks) == 7
    for name, ok, detail in checks:
        assert ok, (name, detail)


def _unitary(rng):
    t1, t2 = rng.uniform(0, 2 * cmath.pi), rng.uniform(0, 2 * cmath.pi)
    a1 = cmath.exp(1j * t1)
    a2 = cmath.exp(1j * t2)
    cv = cmath.exp(1j * rng.uniform(0, 2 * cmath.pi))
    return satake_point(a1, a1.conjugate(), a2, a2.conjugate(), {"chi": cv})


def test_three_route_agreement_seeded():
    # direct coefficient, closed square form, and a by-hand trace formula
    # must agree at unitary points
    rng = random.Random(30103)
    for _ in range(40):
        pt = _unitary(rng)
        x = pt["a_pi"] / pt["b_pi"] + 1 + pt["b_pi"] / pt["a_pi"]
        z = pt["chi"] * (pt["a_pi'"] / pt["b_pi'"] + 1 + pt["b_pi'"] / pt["a_pi'"])
        hand = abs(2 * x + x * z + z) ** 2
        direct = a_D_value(pt)
        assert abs(direct.imag) < 1e-9
        assert abs(direct.real - sos_value(pt)) < 1e-9
        assert abs(direct.real - hand) < 1e-9


def test_conjugate_character_symmetry_seeded():
    rng = random.Random(77003)
    for _ in range(20):
        pt = _unitary(rng)
        flipped = {**pt, "chi": pt["chi"].conjugate()}
        assert abs(a_D_value(pt) - a_D_value(flipped)) < 1e-9


def _small_points():
    char = parse_char_spec("kronecker:-4")
    f1 = builtin_form("delta", 60)
    f2 = builtin_form("11a", 60)
    points, skipped = prepare_scan_points(f1, f2, char, 60)
    assert skipped == [2, 11]
    return points


def test_scan_rows_sorted_and_clean():
    points = _small_points()
    res = scan_positivity(points, lmax=2, tol=1e-9, threads=1)
    assert res.ok
    assert res.checked == 2 * len(points)
    assert res.rows == sorted(res.rows, key=lambda r: (r[0], r[1]))
    assert res.min_value >= -1e-9
    assert res.max_abs_delta <= 1e-9


def test_scan_parallel_matches_serial():
    points = _small_points()
    serial = scan_positivity(points, lmax=2, threads=1)
    parallel = scan_positivity(points, lmax=2, threads=3)
    assert serial.rows == parallel.rows
    assert serial.violations == parallel.violations == []


def test_scan_empty_not_ok():
    res = scan_positivity({}, lmax=2)
    assert isinstance(res, ScanResult)
    assert res.checked == 0 and not res.ok


def test_resolve_threads(monkeypatch):
    monkeypatch.delenv("LCALC_THREADS", raising=False)
    assert resolve_threads(None) == 1
    assert resolve_threads(5) == 5
    assert resolve_threads(0) == 1
    monkeypatch.setenv("LCALC_THREADS", "4")
    assert resolve_threads(None) == 4
    assert resolve_threads(2) == 2  # explicit argument wins
    monkeypatch.setenv("LCALC_THREADS", "junk")
    assert resolve_threads(None) == 1

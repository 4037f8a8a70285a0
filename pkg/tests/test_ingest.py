"""Arithmetic inputs: eigenvalue tables, Satake data, character values."""

import random

import pytest

from lfcheck.ingest import (
    BoundError,
    IngestError,
    builtin_form,
    deligne_ok,
    delta_eigenvalues,
    eta24_series,
    kronecker,
    load_eigenvalue_file,
    naive_product_series,
    parse_char_spec,
    prepare_scan_points,
    satake_from_ap,
    sieve,
    tau,
    x0_11_ap,
    x0_11_eigenvalues,
)


# classical table, Ramanujan 1916
TAU = {1: 1, 2: -24, 3: 252, 4: -1472, 5: 4830, 6: -6048, 7: -16744, 11: 534612}

# 11a1 traces of Frobenius
AP_11A = {2: -2, 3: -1, 5: 1, 7: -2, 13: 4, 17: -2, 19: 0, 23: -1}


def test_tau_table():
    for n, v in TAU.items():
        assert tau(n) == v


def test_eta_power_vs_naive_product():
    # same q-expansion from the fast route and a direct product expansion,
    # computed at two different truncation orders
    for nmax in (30, 64):
        fast = eta24_series(nmax)
        slow = naive_product_series(nmax)
        assert list(fast) == list(slow)
    short = eta24_series(20)
    assert list(short) == list(eta24_series(50))[: len(short)]


def test_hecke_relation_at_prime_squares():
    for p in sieve(100):
        assert tau(p * p) == tau(p) ** 2 - p**11


def test_tau_multiplicative():
    rng = random.Random(5077)
    for _ in range(30):
        m = rng.randrange(2, 40)
        n = rng.randrange(2, 40)
        import math

        if math.gcd(m, n) == 1:
            assert tau(m * n) == tau(m) * tau(n)


def _count_points_naive(p):
    # affine points of y^2 + y = x^3 - x^2 - 10x - 20 over F_p, plus the
    # point at infinity
    count = 1
    for x in range(p):
        rhs = (x**3 - x * x - 10 * x - 20) % p
        for y in range(p):
            if (y * y + y - rhs) % p == 0:
                count += 1
    return count


def test_x0_11_against_point_counting():
    for p in sieve(40):
        if p == 11:
            continue
        assert x0_11_ap(p) == p + 1 - _count_points_naive(p)


def test_x0_11_known_values_and_hasse():
    for p, ap in AP_11A.items():
        assert x0_11_ap(p) == ap
    for p, ap in x0_11_eigenvalues(500).items():
        assert ap * ap <= 4 * p


def test_x0_11_conductor_prime_rejected():
    with pytest.raises(IngestError):
        x0_11_ap(11)


def test_deligne_exact():
    assert deligne_ok(tau(5), 5, 12)
    # 4 * 5^11 = 195312500; isqrt gives the edge
    assert deligne_ok(13975, 5, 12)
    assert not deligne_ok(13976, 5, 12)


def test_satake_pair():
    for p in (2, 3, 5, 7):
        a, b = satake_from_ap(tau(p), p, 12)
        assert abs(abs(a) - 1) < 1e-12 and abs(abs(b) - 1) < 1e-12
        assert abs(a * b - 1) < 1e-12
        assert abs((a + b) - tau(p) / p**5.5) < 1e-12
    with pytest.raises(BoundError):
        satake_from_ap(10**6, 2, 12)


def test_builtin_forms():
    f = builtin_form("delta", 50)
    assert f.weight == 12 and f.level == 1
    assert f.ap[7] == tau(7)
    g = builtin_form("11a", 50)
    assert g.weight == 2 and g.level == 11
    assert 11 not in g.ap
    with pytest.raises(IngestError):
        builtin_form("37b", 50)
    with pytest.raises(IngestError):
        builtin_form("delta", 50).satake(101)


def _legendre_naive(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if any(x * x % p == a for x in range(1, p)) else -1


def test_kronecker_vs_legendre():
    for p in sieve(60):
        if p == 2:
            continue
        for a in range(-10, 25):
            assert kronecker(a, p) == _legendre_naive(a, p), (a, p)


def test_kronecker_multiplicative():
    rng = random.Random(88011)
    for _ in range(100):
        a = rng.randrange(-30, 31)
        m = rng.randrange(1, 30)
        n = rng.randrange(1, 30)
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_load_eigenvalue_file(tmp_path):
    p = tmp_path / "form.tsv"
    p.write_text("#weight 12 level 1\n2\t-24\n3\t252\n\n# comment\n5\t4830\n")
    f = load_eigenvalue_file(str(p))
    assert (f.weight, f.level) == (12, 1)
    assert f.ap == {2: -24, 3: 252, 5: 4830}


def test_loader_error_lines(tmp_path):
    cases = [
        ("#weights 12 level 1\n2\t-24\n", 1, "header"),
        ("#weight twelve level 1\n2\t-24\n", 1, "non-integer weight"),
        ("#weight 12 level 1\n2 -24\n", 2, "expected"),
        ("#weight 12 level 1\n2\tx\n", 2, "non-integer entry"),
        ("#weight 12 level 1\n4\t-24\n", 2, "not prime"),
        ("#weight 12 level 1\n2\t-24\n2\t-24\n", 3, "duplicate"),
        ("", 0, "empty file"),
        ("#weight 12 level 1\n", 0, "no eigenvalue rows"),
    ]
    for text, lineno, frag in cases:
        f = tmp_path / "bad.tsv"
        f.write_text(text)
        with pytest.raises(IngestError) as e:
            load_eigenvalue_file(str(f))
        assert frag in str(e.value), text
        if lineno:
            assert f":{lineno}:" in str(e.value), text


def test_loader_bound_violation_is_typed(tmp_path):
    f = tmp_path / "huge.tsv"
    f.write_text("#weight 12 level 1\n2\t-10000\n")
    with pytest.raises(BoundError) as e:
        load_eigenvalue_file(str(f))
    assert "violates the eigenvalue bound at p=2" in str(e.value)
    # ramified primes are exempt from the bound
    g = tmp_path / "ram.tsv"
    g.write_text("#weight 2 level 14\n7\t-100\n")
    assert load_eigenvalue_file(str(g)).ap[7] == -100


def test_parse_char_spec(tmp_path):
    assert parse_char_spec("trivial").value(7) == 1
    ch = parse_char_spec("kronecker:-4")
    assert ch.modulus == 16
    assert ch.value(5) == 1 and ch.value(7) == -1
    t = tmp_path / "char.tsv"
    t.write_text("3\t0.0\t1.0\n5\t-1.0\t0.0\n")
    tab = parse_char_spec(str(t))
    assert tab.value(3) == 1j and tab.value(5) == -1
    with pytest.raises(IngestError):
        tab.value(7)
    for bad in ("kronecker:x", "kronecker:0", str(tmp_path / "missing")):
        with pytest.raises(IngestError):
            parse_char_spec(bad)
    t.write_text("3\t2.0\t0.0\n")
    with pytest.raises(IngestError):
        parse_char_spec(str(t))


def test_prepare_scan_points():
    f1 = builtin_form("delta", 100)
    f2 = builtin_form("11a", 100)
    points, skipped = prepare_scan_points(f1, f2, parse_char_spec("kronecker:-4"), 100)
    assert skipped == [2, 11]
    assert set(points) == {p for p in sieve(100) if p not in (2, 11)}
    a1, b1, a2, b2, cv = points[3]
    assert abs(a1 * b1 - 1) < 1e-12 and abs(a2 * b2 - 1) < 1e-12
    assert cv == kronecker(-4, 3)
    # a truncated form table surfaces as a missing-eigenvalue error
    short = builtin_form("delta", 10)
    with pytest.raises(IngestError):
        prepare_scan_points(short, f2, parse_char_spec("trivial"), 100)

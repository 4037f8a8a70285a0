"""Hecke eigenvalue sources for the numeric scan: two built-in classical
forms computed from scratch, a TSV loader for user data, and character
value tables.

Built-ins: the weight-12 level-1 cusp form via its product expansion
(computed through the cube of the pentagonal-type theta identity, so the
built-in and the naive-product oracle in the tests are independent), and
the weight-2 form of the conductor-11 elliptic curve y^2 + y = x^3 - x^2
- 10x - 20 via point counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache


class IngestError(ValueError):
    pass


class BoundError(IngestError):
    """Data that parsed fine but violates the exact eigenvalue bound."""


def sieve(n: int) -> list[int]:
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


@lru_cache(maxsize=8)
def _eta_cube(nmax: int) -> tuple[int, ...]:
    # prod (1-q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}
    c = [0] * (nmax + 1)
    k = 0
    while k * (k + 1) // 2 <= nmax:
        c[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    return tuple(c)


@lru_cache(maxsize=8)
def eta24_series(nmax: int) -> tuple[int, ...]:
    """Coefficients of prod_{n>=1} (1-q^n)^24 through q^nmax."""
    cube = _eta_cube(nmax)
    sparse = [(i, v) for i, v in enumerate(cube) if v]
    acc = list(cube)
    for _ in range(7):
        out = [0] * (nmax + 1)
        for i, v in sparse:
            for j in range(nmax + 1 - i):
                if acc[j]:
                    out[i + j] += v * acc[j]
        acc = out
    return tuple(acc)


def tau(n: int) -> int:
    """Ramanujan tau."""
    if n < 1:
        raise IngestError("tau is defined for n >= 1")
    return eta24_series(n - 1)[n - 1]


def naive_product_series(nmax: int, power: int = 24) -> list[int]:
    """Oracle: expand prod_{n=1}^{nmax} (1-q^n)^power term by term."""
    acc = [0] * (nmax + 1)
    acc[0] = 1
    for n in range(1, nmax + 1):
        for _ in range(power):
            for j in range(nmax, n - 1, -1):
                acc[j] -= acc[j - n]
    return acc


def delta_eigenvalues(xmax: int) -> dict[int, int]:
    """a_p of the weight-12 level-1 form for primes p <= xmax."""
    series = eta24_series(xmax)
    return {p: series[p - 1] for p in sieve(xmax)}


def _legendre_table(p: int) -> bytearray:
    sq = bytearray(p)
    for i in range(1, (p + 1) // 2 + 1):
        sq[i * i % p] = 1
    return sq


def x0_11_ap(p: int) -> int:
    """Trace of Frobenius at p for y^2 + y = x^3 - x^2 - 10x - 20."""
    if p == 2:
        count = 0
        for x in range(2):
            for y in range(2):
                if (y * y + y - (x**3 - x * x - 10 * x - 20)) % 2 == 0:
                    count += 1
        return p + 1 - (count + 1)
    if p == 11:
        raise IngestError("p = 11 is the conductor; no good reduction")
    # complete the square: y^2 + y = c has 1 + legendre(4c + 1) solutions
    sq = _legendre_table(p)
    total = 0
    for x in range(p):
        c = (4 * (x * x * x - x * x - 10 * x - 20) + 1) % p
        if c:
            total += 1 if sq[c] else -1
    return -total


def x0_11_eigenvalues(xmax: int) -> dict[int, int]:
    return {p: x0_11_ap(p) for p in sieve(xmax) if p != 11}


def deligne_ok(ap: int, p: int, k: int) -> bool:
    """Exact integer check a_p^2 <= 4 p^(k-1)."""
    return ap * ap <= 4 * p ** (k - 1)


def satake_from_ap(ap: int, p: int, k: int) -> tuple[complex, complex]:
    """Unit-modulus Satake pair for a weight-k eigenvalue with trivial
    nebentypus normalization (alpha * beta = 1)."""
    if not deligne_ok(ap, p, k):
        raise BoundError(f"eigenvalue bound fails at p={p}: |a_p| too large")
    t = ap / math.sqrt(p ** (k - 1))
    disc = max(0.0, 1.0 - t * t / 4.0)
    alpha = complex(t / 2.0, math.sqrt(disc))
    return alpha, alpha.conjugate()


@dataclass
class NewformData:
    weight: int
    level: int
    ap: dict[int, int] = field(default_factory=dict)
    source: str = ""

    def satake(self, p: int) -> tuple[complex, complex]:
        if p not in self.ap:
            raise IngestError(f"no eigenvalue stored for p={p} ({self.source})")
        return satake_from_ap(self.ap[p], p, self.weight)


def builtin_form(name: str, xmax: int) -> NewformData:
    if name == "delta":
        return NewformData(12, 1, delta_eigenvalues(xmax), "builtin:delta")
    if name == "11a":
        return NewformData(2, 11, x0_11_eigenvalues(xmax), "builtin:11a")
    raise IngestError(f"unknown builtin form {name!r} (use delta or 11a)")


def load_eigenvalue_file(path: str) -> NewformData:
    """TSV loader.  First non-blank line: '#weight <k> level <N>'; data
    lines: '<p>\\t<a_p>'.  Validates primality, duplicates, and the exact
    eigenvalue bound."""
    form = None
    seen = set()
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            if form is None:
                parts = line.split()
                if (
                    len(parts) != 4
                    or parts[0] != "#weight"
                    or parts[2] != "level"
                ):
                    raise IngestError(
                        f"{path}:{lineno}: expected header "
                        f"'#weight <k> level <N>', got {line!r}"
                    )
                try:
                    k, N = int(parts[1]), int(parts[3])
                except ValueError:
                    raise IngestError(
                        f"{path}:{lineno}: non-integer weight or level"
                    ) from None
                if k < 1 or N < 1:
                    raise IngestError(f"{path}:{lineno}: weight and level must be >= 1")
                form = NewformData(k, N, {}, path)
                continue
            if line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise IngestError(
                    f"{path}:{lineno}: expected '<p>\\t<a_p>', got {line!r}"
                )
            try:
                p, ap = int(fields[0]), int(fields[1])
            except ValueError:
                raise IngestError(f"{path}:{lineno}: non-integer entry") from None
            if p < 2 or any(p % q == 0 for q in sieve(int(p**0.5))):
                raise IngestError(f"{path}:{lineno}: {p} is not prime")
            if p in seen:
                raise IngestError(f"{path}:{lineno}: duplicate prime {p}")
            if form.level % p != 0 and not deligne_ok(ap, p, form.weight):
                raise BoundError(
                    f"{path}:{lineno}: a_p={ap} violates the eigenvalue "
                    f"bound at p={p} for weight {form.weight}"
                )
            seen.add(p)
            form.ap[p] = ap
    if form is None:
        raise IngestError(f"{path}: empty file")
    if not form.ap:
        raise IngestError(f"{path}: no eigenvalue rows")
    return form


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # factor out twos of n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # quadratic reciprocity loop on odd n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


@dataclass
class CharacterData:
    modulus: int
    spec: str
    _table: dict[int, complex] | None = None

    def value(self, p: int) -> complex:
        if self._table is not None:
            if p not in self._table:
                raise IngestError(f"no character value stored for p={p}")
            return self._table[p]
        if self.spec == "trivial":
            return 1.0 + 0j
        d = int(self.spec.split(":", 1)[1])
        return complex(kronecker(d, p))


def parse_char_spec(spec: str) -> CharacterData:
    """'trivial', 'kronecker:<d>', or a path to a '<p>\\t<re>\\t<im>' table."""
    if spec == "trivial":
        return CharacterData(1, "trivial")
    if spec.startswith("kronecker:"):
        try:
            d = int(spec.split(":", 1)[1])
        except ValueError:
            raise IngestError(f"bad discriminant in {spec!r}") from None
        if d == 0:
            raise IngestError("kronecker discriminant must be nonzero")
        return CharacterData(abs(4 * d), spec)
    table: dict[int, complex] = {}
    try:
        fh = open(spec)
    except OSError:
        raise IngestError(
            f"character spec {spec!r} is neither 'trivial', 'kronecker:<d>', "
            "nor a readable file"
        ) from None
    with fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise IngestError(
                    f"{spec}:{lineno}: expected '<p>\\t<re>\\t<im>'"
                )
            try:
                p = int(fields[0])
                v = complex(float(fields[1]), float(fields[2]))
            except ValueError:
                raise IngestError(f"{spec}:{lineno}: bad number") from None
            if abs(abs(v) - 1) > 1e-6:
                raise IngestError(
                    f"{spec}:{lineno}: character value not unit modulus"
                )
            table[p] = v
    if not table:
        raise IngestError(f"{spec}: no character rows")
    return CharacterData(1, spec, table)


def prepare_scan_points(
    form1: NewformData,
    form2: NewformData,
    char: CharacterData,
    xmax: int,
) -> tuple[dict[int, tuple[complex, complex, complex, complex, complex]], list[int]]:
    """Satake and character values at primes up to xmax with good reduction
    everywhere; returns (points, skipped ramified primes)."""
    points = {}
    skipped = []
    bad = form1.level * form2.level * char.modulus
    for p in sieve(xmax):
        if bad % p == 0:
            skipped.append(p)
            continue
        if p not in form1.ap or p not in form2.ap:
            raise IngestError(f"missing eigenvalue at unramified p={p}")
        a1, b1 = form1.satake(p)
        a2, b2 = form2.satake(p)
        points[p] = (a1, b1, a2, b2, char.value(p))
    return points, skipped

"""Pole-order bookkeeping at s = 1 for products of standard and
Rankin-Selberg L-functions of cuspidal data.

Inputs must be fully decomposed: a factor that the declared shape data
rewrites as a smaller isobaric sum has no cuspidal pole theory of its own
and is rejected.  For cuspidal data the rules are: a trivial character
contributes a simple pole, any other cuspidal standard L-function none,
and a pair contributes a simple pole exactly when the second member twisted
by the pooled character is the contragredient of the first.  Three-valued
answers about character triviality and dual matching propagate to interval
bounds [lo, hi] on the total order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypotheses import GL2Type, Hypotheses, Tri, is_trivial
from .repalg import (
    Entry,
    RepAtom,
    RSPair,
    VirtualRep,
    _decompose_atom,
    atom_equal,
    opaque_info,
)


class PoleError(ValueError):
    pass


class NonCuspidalError(PoleError):
    """Raised for factors the declared hypotheses decompose further."""


@dataclass(frozen=True)
class PoleInterval:
    lo: int
    hi: int

    def __post_init__(self):
        if not (0 <= self.lo <= self.hi):
            raise PoleError(f"bad pole interval [{self.lo}, {self.hi}]")

    def __add__(self, other: "PoleInterval") -> "PoleInterval":
        return PoleInterval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, n: int) -> "PoleInterval":
        return PoleInterval(self.lo * n, self.hi * n)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


ZERO = PoleInterval(0, 0)
ONE = PoleInterval(1, 1)
MAYBE = PoleInterval(0, 1)


def cuspidality(atom: RepAtom, hyp: Hypotheses) -> Tri:
    """Whether the atom names a cuspidal representation under the declared
    shapes.  Characters count as cuspidal on GL(1)."""
    if atom.kind == "char":
        return Tri.YES
    if atom.kind == "op":
        return Tri.YES if opaque_info(atom.label).cuspidal else Tri.UNKNOWN
    t = hyp.type_of(atom.base)
    if t is GL2Type.DIHEDRAL:
        return Tri.YES if atom.m == 1 else Tri.NO
    if atom.m in (1, 2):
        return Tri.YES
    if atom.m == 3:
        return Tri.NO if t is GL2Type.TETRAHEDRAL else Tri.YES
    if atom.m == 4:
        return Tri.YES if t is GL2Type.GENERAL else Tri.NO
    return Tri.UNKNOWN


def _entry_pole(key: Entry, hyp: Hypotheses) -> tuple[PoleInterval, str]:
    if isinstance(key, RepAtom):
        if _decompose_atom(key, hyp) is not None:
            raise NonCuspidalError(
                f"{key.pretty()} decomposes under the declared shapes; "
                "decompose before taking pole orders"
            )
        if key.kind == "char":
            t = is_trivial(key.twist, hyp)
            if t is Tri.YES:
                return ONE, f"{key.pretty()}: zeta factor, simple pole"
            if t is Tri.NO:
                return ZERO, f"{key.pretty()}: nontrivial character, entire"
            return MAYBE, f"{key.pretty()}: character triviality undecided"
        c = cuspidality(key, hyp)
        if c is Tri.NO:
            raise NonCuspidalError(
                f"{key.pretty()} is non-cuspidal under the declared shapes"
            )
        if c is Tri.UNKNOWN:
            return MAYBE, f"{key.pretty()}: cuspidality undeclared"
        return ZERO, f"{key.pretty()}: cuspidal standard L-function, entire"
    assert isinstance(key, RSPair)
    dec = any(_decompose_atom(c, hyp) is not None for c in (key.a, key.b))
    if dec:
        raise NonCuspidalError(
            f"{key.pretty()} has a decomposable member; decompose first"
        )
    for c in (key.a, key.b):
        cc = cuspidality(c, hyp)
        if cc is Tri.NO:
            raise NonCuspidalError(
                f"{key.pretty()}: member {c.pretty()} is non-cuspidal"
            )
        if cc is Tri.UNKNOWN:
            return MAYBE, f"{key.pretty()}: member cuspidality undeclared"
    eq = atom_equal(key.b.twisted(key.twist), key.a.dual(), hyp)
    if eq is Tri.YES:
        return ONE, f"{key.pretty()}: dual pair, simple pole"
    if eq is Tri.NO:
        return ZERO, f"{key.pretty()}: members not dual, entire"
    return MAYBE, f"{key.pretty()}: dual matching undecided"


def pole_order(V: VirtualRep, hyp: Hypotheses) -> tuple[PoleInterval, list[str]]:
    """Interval bound on the order of the pole at s = 1 of the product over
    all entries, with one reason line per entry.  The (s-1) bookkeeping
    exponent is not applied here."""
    total = ZERO
    reasons = []
    for key, mult in V.entries:
        iv, why = _entry_pole(key, hyp)
        total = total + iv.scale(mult)
        reasons.append(f"x{mult} {why} -> {iv.scale(mult)}")
    return total, reasons


def isobaric_pair_pole(
    A: VirtualRep, B: VirtualRep, hyp: Hypotheses
) -> tuple[PoleInterval, list[str]]:
    """Order at s = 1 of the pairing of two isobaric sums: one simple pole
    per constituent pair in which the second is the contragredient of the
    first, counted with multiplicity.  This needs no cuspidality knowledge
    beyond the constituents themselves, so it stays sharp where the fully
    multiplied-out product would contain high symmetric powers of
    undeclared cuspidality."""
    for V in (A, B):
        if not V.is_isobaric():
            raise PoleError("pair pole rule needs isobaric operands")
    total = ZERO
    reasons = []
    for ka, ma in A.entries:
        for kb, mb in B.entries:
            eq = atom_equal(kb, ka.dual(), hyp)
            if eq is Tri.YES:
                iv = ONE
            elif eq is Tri.NO:
                iv = ZERO
            else:
                iv = MAYBE
            if iv != ZERO:
                reasons.append(
                    f"x{ma * mb} {ka.pretty()} against {kb.pretty()} "
                    f"-> {iv.scale(ma * mb)}"
                )
            total = total + iv.scale(ma * mb)
    return total, reasons


def self_dual_abelian_entries(V: VirtualRep, hyp: Hypotheses) -> list[str]:
    """Character entries whose square is declared trivial (the obstruction
    class in the zero-repulsion statement); informational."""
    out = []
    for key, mult in V.entries:
        if isinstance(key, RepAtom) and key.kind == "char":
            if is_trivial(key.twist * key.twist, hyp) is Tri.YES:
                out.append(f"x{mult} {key.pretty()}")
    return out


def entirety_check(
    V: VirtualRep, hyp: Hypotheses, k: int
) -> tuple[bool, PoleInterval, list[str]]:
    """Whether (s-1)^k times the product is certified entire at s = 1:
    the pole-order upper bound must not exceed k."""
    iv, reasons = pole_order(V, hyp)
    return iv.hi <= k, iv, reasons

"""Cuspidal Levi types, cuspidal object counts, and the full
parametrizing set of (Levi, relative character, cuspidal index)
triples.

Counts are characteristic-independent data.  Cuspidal objects are
abstract indices 0..N-1; classical cuspidal Levi types carry a single
cuspidal object whose dimension invariant is opaque (d=None).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanType
from .labels import CharacterLabel, relative_character_labels


class CuspidalError(ValueError):
    pass


@dataclass(frozen=True)
class CuspidalLevi:
    """A cuspidal Levi, recorded by Weyl types.

    levi_weyl_type None means the empty subset (maximal torus); then the
    relative group is the full Weyl group.  relative_weyl_type None
    means the trivial group (full-type Levi).
    """

    ambient: CartanType
    levi_weyl_type: CartanType | None
    relative_weyl_type: CartanType | None

    @property
    def is_empty(self) -> bool:
        return self.levi_weyl_type is None

    @property
    def is_full(self) -> bool:
        return self.levi_weyl_type == self.ambient or (
            self.ambient.is_torus and self.is_empty
        )

    @property
    def levi_name(self) -> str:
        return "-" if self.is_empty else self.levi_weyl_type.name


def _relative_b_type(m: int) -> CartanType | None:
    """Weyl type B_m with low-rank normalization; None for m=0."""
    if m == 0:
        return None
    if m == 1:
        return CartanType("A", 1)
    return CartanType("B", m)


@lru_cache(maxsize=None)
def cuspidal_levis(t: CartanType) -> tuple[CuspidalLevi, ...]:
    """Cuspidal Levi types of t, empty subset first, full type last."""
    if t.is_torus:
        return (CuspidalLevi(t, None, None),)
    out = [CuspidalLevi(t, None, t)]
    if t.series in ("B", "C"):
        k = 1
        while k * (k + 1) <= t.rank:
            m = k * (k + 1)
            out.append(CuspidalLevi(t, CartanType("B", m), _relative_b_type(t.rank - m)))
            k += 1
    elif t.series == "D":
        k = 1
        while 4 * k * k <= t.rank:
            m = 4 * k * k
            out.append(CuspidalLevi(t, CartanType("D", m), _relative_b_type(t.rank - m)))
            k += 1
    elif t.series == "G":
        out.append(CuspidalLevi(t, t, None))
    elif t.series == "F":
        out.append(CuspidalLevi(t, CartanType("B", 2), CartanType("B", 2)))
        out.append(CuspidalLevi(t, t, None))
    elif t.series == "E":
        if t.rank == 6:
            out.append(CuspidalLevi(t, CartanType("D", 4), CartanType("A", 2)))
        elif t.rank == 7:
            out.append(CuspidalLevi(t, CartanType("D", 4), CartanType("B", 3)))
            out.append(CuspidalLevi(t, CartanType("E", 6), CartanType("A", 1)))
        else:
            out.append(CuspidalLevi(t, CartanType("D", 4), CartanType("F", 4)))
            out.append(CuspidalLevi(t, CartanType("E", 6), CartanType("G", 2)))
            out.append(CuspidalLevi(t, CartanType("E", 7), CartanType("A", 1)))
        out.append(CuspidalLevi(t, t, None))
    # A series: the empty subset only.
    return tuple(out)


def _is_classical_cuspidal(t: CartanType) -> bool:
    if t.series in ("B", "C"):
        k = 1
        while k * (k + 1) <= t.rank:
            if k * (k + 1) == t.rank:
                return True
            k += 1
        return False
    if t.series == "D":
        k = 1
        while 4 * k * k <= t.rank:
            if 4 * k * k == t.rank:
                return True
            k += 1
        return False
    return False


@dataclass(frozen=True)
class CuspidalCounts:
    """d -> number of cuspidal objects with that dimension invariant.

    Classical cuspidal types use the single opaque key None.
    """

    ambient: CartanType
    counts: tuple[tuple[int | None, int], ...]  # (d, count), d descending

    def as_dict(self) -> dict[int | None, int]:
        return dict(self.counts)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)


_EXCEPTIONAL_COUNTS: dict[str, tuple[tuple[int, int], ...]] = {
    "G2": ((1, 1), (0, 3)),
    "F4": ((4, 1), (2, 1), (1, 1), (0, 4)),
    "E6": ((0, 2),),
    "E7": ((0, 2),),
    "E8": ((16, 1), (7, 1), (6, 1), (3, 2), (1, 2), (0, 6)),
}


@lru_cache(maxsize=None)
def cuspidal_counts(t: CartanType) -> CuspidalCounts:
    if t.is_torus:
        return CuspidalCounts(t, ((0, 1),))
    if t.is_exceptional:
        return CuspidalCounts(t, _EXCEPTIONAL_COUNTS[t.name])
    if _is_classical_cuspidal(t):
        return CuspidalCounts(t, ((None, 1),))
    return CuspidalCounts(t, ())


@dataclass(frozen=True)
class SheafTriple:
    """One point of the parametrizing set: cuspidal Levi, character of
    the relative group, dimension invariant d (None = opaque), and an
    index below the cuspidal count for that d."""

    levi: CuspidalLevi
    character: CharacterLabel
    d: int | None
    index: int

    @property
    def key(self) -> tuple:
        return (self.levi.levi_name, self.character.text, self.d)

    def describe(self) -> str:
        if self.levi.is_empty and not self.levi.ambient.is_torus:
            return self.character.text
        d = "*" if self.d is None else str(self.d)
        return f"({self.levi.levi_name},{self.character.text},{d})[{self.index}]"


@lru_cache(maxsize=None)
def enumerate_cs_prime(t: CartanType) -> tuple[SheafTriple, ...]:
    """All triples for type t, in deterministic order: Levis as listed,
    characters in registry order, d descending, index ascending."""
    out: list[SheafTriple] = []
    for levi in cuspidal_levis(t):
        if levi.is_empty and not t.is_torus:
            for lab in relative_character_labels(t, levi.relative_weyl_type):
                out.append(SheafTriple(levi, lab, 0, 0))
            continue
        counts = cuspidal_counts(t if levi.is_empty else levi.levi_weyl_type)
        chars = relative_character_labels(t, levi.relative_weyl_type)
        for lab in chars:
            for d, n in counts.counts:
                for i in range(n):
                    out.append(SheafTriple(levi, lab, d, i))
    return tuple(out)


# ---------------------------------------------------------------------------
# Case classification of (type, d): where the cuspidal objects with
# dimension invariant d are unipotently supported.


@dataclass(frozen=True)
class SupportCase:
    """tag:
    'unique-prime': unipotently supported in exactly one characteristic r0;
    'all-primes'  : unipotently supported in every characteristic;
    'torus'       : the torus case (d=0);
    'no-prime'    : never entirely unipotently supported (unit stratum);
    'mixed'       : no characteristic covers all objects but some cover a
                    part (handled like 'no-prime' by the strata map).
    """

    tag: str
    r0: int | None = None


_UNIQUE_PRIME: dict[tuple[str, int], int] = {
    ("F4", 2): 2,
    ("F4", 1): 2,
    ("E6", 0): 3,
    ("E7", 0): 2,
    ("E8", 7): 2,
    ("E8", 6): 2,
    ("E8", 3): 3,
    ("E8", 1): 2,
}

_ALL_PRIMES = {("E8", 16), ("F4", 4), ("G2", 1)}
_NO_PRIME = {("E8", 0), ("F4", 0)}


def support_case(t: CartanType, d: int | None) -> SupportCase:
    counts = cuspidal_counts(t).as_dict()
    if d not in counts or counts[d] == 0:
        raise CuspidalError(f"{t} has no cuspidal objects with d={d}")
    if t.is_torus:
        return SupportCase("torus")
    if d is None:  # classical cuspidal type
        return SupportCase("unique-prime", 2)
    key = (t.name, d)
    if key in _ALL_PRIMES:
        return SupportCase("all-primes")
    if key in _NO_PRIME:
        return SupportCase("no-prime")
    if key == ("G2", 0):
        return SupportCase("mixed")
    return SupportCase("unique-prime", _UNIQUE_PRIME[key])

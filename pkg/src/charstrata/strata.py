"""The surjection from cuspidal-support triples onto strata, its
fibers, the per-stratum group collections, and the counting witness
that ties fiber sizes to representation inventories.

The map is realized by row lookup in the strata tables; the
enumeration side is produced independently by the cuspidal-support
module, so table placement is a falsifiable statement, checked by the
resolver below.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cartan import CartanType, datum
from .cuspidal import SheafTriple, enumerate_cs_prime
from .groups import (
    faithful_cyclic_inventory,
    inventory,
    pullback_inventory,
)
from .labels import CharacterLabel, TrivialLabel, enumerate_irr, unit_label
from .tables import (
    DEFAULT_STORE,
    FiberEntry,
    StrataRow,
    TableStore,
    UnknownStratum,
    find_row,
)


class TripleNotFound(LookupError):
    pass


class PlacementMismatch(ValueError):
    """A table's fiber entries do not match the enumerated triples."""

    def __init__(self, message: str, offending: str | None = None) -> None:
        super().__init__(message)
        self.offending = offending


@dataclass(frozen=True)
class Placement:
    """Result of matching a table against the enumeration.

    resolved maps (row index, fiber position) to the character text the
    entry stands for; for entries printed with a duplicated label this
    may differ from the printed text (the assignment is the documented
    row-order/registry-order convention, recorded in notes).
    """

    type_name: str
    total: int
    resolved: dict[tuple[int, int], str]
    notes: tuple[str, ...] = ()


def _family_key(levi_name: str, d) -> tuple:
    return (levi_name, d)


def resolve_placement(t: CartanType, rows: tuple[StrataRow, ...]) -> Placement:
    """Match every fiber entry to enumerated triples, or raise
    PlacementMismatch naming the first offending entry."""
    enum = enumerate_cs_prime(t)
    enum_families: dict[tuple, dict[str, int]] = {}
    label_order: dict[tuple, list[str]] = {}
    for tr in enum:
        key = _family_key(tr.levi.levi_name, tr.d)
        fam = enum_families.setdefault(key, {})
        txt = tr.character.text
        if txt not in fam:
            fam[txt] = 0
            label_order.setdefault(key, []).append(txt)
        fam[txt] += 1

    table_families: dict[tuple, list[tuple[int, int, FiberEntry]]] = {}
    for ri, row in enumerate(rows):
        for pi, en in enumerate(row.fiber):
            table_families.setdefault(_family_key(en.levi_name, en.d_semantic), []).append(
                (ri, pi, en)
            )

    extra = set(table_families) - set(enum_families)
    if extra:
        key = sorted(extra)[0]
        raise PlacementMismatch(
            f"table for {t.name} places entries with Levi/d {key} "
            "outside the cuspidal-support enumeration",
            offending=str(key),
        )

    resolved: dict[tuple[int, int], str] = {}
    notes: list[str] = []
    for key, fam in enum_families.items():
        remaining = dict(fam)
        entries = table_families.get(key, [])
        deferred: list[tuple[int, int, FiberEntry]] = []
        for ri, pi, en in entries:
            txt = en.character.text
            if remaining.get(txt, 0) >= en.mult:
                remaining[txt] -= en.mult
                resolved[(ri, pi)] = txt
            else:
                deferred.append((ri, pi, en))
        leftovers = [txt for txt in label_order[key] if remaining.get(txt, 0) > 0]
        for ri, pi, en in deferred:
            if en.disamb is None:
                raise PlacementMismatch(
                    f"entry {en.describe()} in row {rows[ri].stratum.text!r} does not "
                    f"match the enumeration for {t.name}",
                    offending=en.describe(),
                )
            match = next(
                (txt for txt in leftovers if remaining[txt] == en.mult), None
            )
            if match is None:
                raise PlacementMismatch(
                    f"duplicated entry {en.describe()} in row {rows[ri].stratum.text!r} "
                    "cannot be assigned a remaining character",
                    offending=en.describe(),
                )
            remaining[match] -= en.mult
            leftovers.remove(match)
            resolved[(ri, pi)] = match
            if match != en.character.text:
                notes.append(
                    f"entry {en.describe()} in row {rows[ri].stratum.text!r} "
                    f"stands for character {match!r}"
                )
        missing = {txt: c for txt, c in remaining.items() if c}
        if missing:
            txt = next(iter(missing))
            raise PlacementMismatch(
                f"table for {t.name} misses {missing[txt]} triple(s) "
                f"({key[0]}, {txt}, d={key[1]})",
                offending=f"({key[0]},{txt},{key[1]})",
            )
    total = sum(en.mult for _, _, en in
                (x for fam in table_families.values() for x in fam))
    if total != len(enum):
        raise PlacementMismatch(
            f"table for {t.name} places {total} triples, enumeration has {len(enum)}"
        )
    return Placement(t.name, total, resolved, tuple(notes))


_PLACEMENT_CACHE: dict[tuple, Placement] = {}


def placement(t: CartanType, store: TableStore = DEFAULT_STORE) -> Placement:
    rows = store.table(t)
    key = (t.name, rows)
    got = _PLACEMENT_CACHE.get(key)
    if got is None:
        got = resolve_placement(t, rows)
        _PLACEMENT_CACHE[key] = got
    return got


# ---------------------------------------------------------------------------
# The map itself.


def _triple_key(tr: SheafTriple) -> tuple:
    return (tr.levi.levi_name, tr.character.text, tr.d)


def tau(
    t: CartanType, triple: SheafTriple, store: TableStore = DEFAULT_STORE
) -> CharacterLabel:
    """The stratum of a cuspidal-support triple."""
    if t.is_torus:
        return TrivialLabel()
    valid = {_triple_key(x) for x in enumerate_cs_prime(t)}
    if _triple_key(triple) not in valid:
        raise TripleNotFound(f"{triple.describe()} is not a triple of {t.name}")
    if t.series == "A":
        return triple.character
    rows = store.table(t)
    pl = placement(t, store)
    for (ri, pi), txt in pl.resolved.items():
        en = rows[ri].fiber[pi]
        if (
            en.levi_name == triple.levi.levi_name
            and txt == triple.character.text
            and en.d_semantic == triple.d
        ):
            return rows[ri].stratum
    raise TripleNotFound(f"{triple.describe()} not placed in the table for {t.name}")


def find_triple(
    t: CartanType,
    levi_name: str,
    character_text: str,
    d: int | None = None,
    index: int = 0,
) -> SheafTriple:
    """Locate an enumerated triple by its printable coordinates."""
    matches = [
        tr
        for tr in enumerate_cs_prime(t)
        if tr.levi.levi_name == levi_name
        and tr.character.text == character_text
        and (d is None or tr.d == d)
        and tr.index == index
    ]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise TripleNotFound(
            f"no triple ({levi_name},{character_text},d={d},i={index}) in {t.name}"
        )
    raise TripleNotFound(
        f"({levi_name},{character_text}) is ambiguous in {t.name}; give --d"
    )


def fiber(
    t: CartanType,
    stratum: CharacterLabel | str,
    store: TableStore = DEFAULT_STORE,
    expand: bool = False,
) -> list[tuple[SheafTriple, int]]:
    """The fiber over a stratum as (triple, multiplicity) pairs; the
    first pair is the stratum's own empty-Levi triple.  With expand,
    one pair per cuspidal index."""
    text = stratum if isinstance(stratum, str) else stratum.text
    if t.is_torus:
        if text != "1":
            raise UnknownStratum(f"torus has a single stratum '1', got {text!r}")
        return [(enumerate_cs_prime(t)[0], 1)]
    if t.series == "A":
        lab = enumerate_irr(t).by_text(text)
        tr = next(x for x in enumerate_cs_prime(t) if x.character == lab)
        return [(tr, 1)]
    rows = store.table(t)
    pl = placement(t, store)
    row = find_row(t, text, store)
    ri = rows.index(row)
    by_key = {}
    for tr in enumerate_cs_prime(t):
        by_key.setdefault(_triple_key(tr), []).append(tr)
    out: list[tuple[SheafTriple, int]] = []
    for pi, en in enumerate(row.fiber):
        resolved_text = pl.resolved[(ri, pi)]
        triples = by_key[(en.levi_name, resolved_text, en.d_semantic)]
        if expand:
            out.extend((tr, 1) for tr in triples)
        else:
            out.append((triples[0], en.mult))
    return out


def strata(t: CartanType, store: TableStore = DEFAULT_STORE) -> list[CharacterLabel]:
    """All strata of t, in table order (classical types need a table;
    for the A series every character is a stratum)."""
    if t.is_torus:
        return [TrivialLabel()]
    if t.series == "A":
        return list(enumerate_irr(t).labels)
    return [row.stratum for row in store.table(t)]


# ---------------------------------------------------------------------------
# Group collections and their representation inventories.


_ALLOWED_PAIRS = {("C2", "C3"), ("C4", "C3"), ("C2xC2", "C2xC3")}
_TRIPLE = ("C4", "C3", "C5")


@dataclass(frozen=True)
class GroupCollection:
    """c(E): a single group, the deviating pair, or the full cyclic
    triple of the unit stratum in E8."""

    kind: str  # "single" | "pair" | "triple"
    tags: tuple[str, ...]
    quotient: str | None = None  # characteristic-0 group under a pair

    @property
    def text(self) -> str:
        body = ",".join(self.tags)
        return body if self.kind == "single" else f"({body})"


def c_collection(
    t: CartanType, stratum: CharacterLabel | str, store: TableStore = DEFAULT_STORE
) -> GroupCollection:
    if t.is_torus:
        return GroupCollection("single", ("1",))
    if t.series == "A":
        enumerate_irr(t).by_text(stratum if isinstance(stratum, str) else stratum.text)
        return GroupCollection("single", ("1",))
    row = find_row(t, stratum, store)
    g = dict(row.groups)
    if row.membership.kind == "singleton":
        return GroupCollection("single", (g[row.membership.r0],))
    deviating = [r for r in (2, 3, 5) if row.group_at(r) != g[0]]
    if not deviating:
        return GroupCollection("single", (g[0],))
    tags = tuple(row.group_at(r) for r in deviating)
    if len(tags) == 1:
        return GroupCollection("single", tags)
    if len(tags) == 2:
        if tags not in _ALLOWED_PAIRS:
            raise ValueError(f"unexpected deviating pair {tags} at {row.stratum.text}")
        return GroupCollection("pair", tags, quotient=g[0])
    if tags != _TRIPLE:
        raise ValueError(f"unexpected deviating triple {tags} at {row.stratum.text}")
    return GroupCollection("triple", tags)


@dataclass(frozen=True)
class CStarElement:
    group: str
    irrep: str
    origin: str  # "single" | "first" | "second" | "faithful-Cm"


def c_star(
    t: CartanType, stratum: CharacterLabel | str, store: TableStore = DEFAULT_STORE
) -> list[CStarElement]:
    """The label set attached to a stratum: inventories of c(E), with
    the pulled-back part of a pair's second group removed, or the
    faithful cyclic characters for the triple case."""
    coll = c_collection(t, stratum, store)
    if coll.kind == "single":
        g = coll.tags[0]
        return [CStarElement(g, name, "single") for name in inventory(g)]
    if coll.kind == "pair":
        first, second = coll.tags
        excluded = set(pullback_inventory(second, coll.quotient))
        out = [CStarElement(first, name, "first") for name in inventory(first)]
        out.extend(
            CStarElement(second, name, "second")
            for name in inventory(second)
            if name not in excluded
        )
        return out
    out = []
    for m in range(1, 7):
        g = "1" if m == 1 else f"C{m}"
        out.extend(
            CStarElement(g, name, f"faithful-C{m}")
            for name in faithful_cyclic_inventory(m)
        )
    return out


def bijection_witness(
    t: CartanType, store: TableStore = DEFAULT_STORE
) -> list[tuple[str, int, int]]:
    """Per stratum: (head, fiber size, inventory size).  The counting
    content of the parametrization is that the two sizes agree row by
    row."""
    out = []
    for row in store.table(t):
        out.append(
            (row.stratum.text, row.fiber_size, len(c_star(t, row.stratum, store)))
        )
    return out


def bijection_pairing(
    t: CartanType, stratum: CharacterLabel | str, store: TableStore = DEFAULT_STORE
) -> list[tuple[SheafTriple, CStarElement]]:
    """A concrete matching for one stratum: expanded fiber in row order
    against the inventory in its canonical order.  Only the existence
    of some matching is asserted by the theory; this one is the
    deterministic representative."""
    expanded = [tr for tr, _ in fiber(t, stratum, store, expand=True)]
    elements = c_star(t, stratum, store)
    if len(expanded) != len(elements):
        raise ValueError(
            f"fiber over {stratum} has {len(expanded)} triples but the "
            f"inventory has {len(elements)} elements"
        )
    return list(zip(expanded, elements))


# ---------------------------------------------------------------------------
# The regular stratum and roots of unity.


@dataclass(frozen=True)
class RootOfUnityLabel:
    m: int
    k: int

    @property
    def text(self) -> str:
        return f"e({self.k}/{self.m})"


def regular_fiber_labels(t: CartanType) -> list[RootOfUnityLabel]:
    """Primitive m-th roots of unity for m up to the largest
    highest-root coefficient; they index the fiber over the stratum of
    regular elements."""
    if t.is_torus:
        return [RootOfUnityLabel(1, 1)]
    z = datum(t).z_value
    out = []
    for m in range(1, z + 1):
        for k in range(1, m + 1):
            if gcd(k, m) == 1:
                out.append(RootOfUnityLabel(m, k))
    return out


def unit_stratum_fiber_size(t: CartanType, store: TableStore = DEFAULT_STORE) -> int:
    if t.is_torus or t.series == "A":
        return 1
    return find_row(t, unit_label(t), store).fiber_size

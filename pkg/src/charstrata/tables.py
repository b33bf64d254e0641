"""Typed access to the strata tables: rows, component-group
annotations, centralizer profiles, and the session table store that
holds plug-in tables for classical types.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import tabledata
from .cartan import CartanType, Subsystem, CartanError, parse_type, simple_type
from .cuspidal import CuspidalLevi, cuspidal_levis, cuspidal_counts
from .groups import normalize_tag
from .labels import (
    CharacterLabel,
    enumerate_irr,
    relative_character_labels,
    unit_label,
)


class NoTableAvailable(LookupError):
    """No strata table embedded or registered for the requested type."""


class UnknownStratum(LookupError):
    pass


class TableFormatError(ValueError):
    pass


PRIME_SLOTS = (0, 2, 3, 5)


@dataclass(frozen=True)
class Membership:
    """Which characteristics the stratum's class exists in: all of them,
    or a single prime r0."""

    kind: str  # "full" | "singleton"
    r0: int | None = None

    @property
    def text(self) -> str:
        return "full" if self.kind == "full" else f"singleton:{self.r0}"

    @staticmethod
    def parse(text: str) -> "Membership":
        if text == "full":
            return Membership("full")
        if text.startswith("singleton:"):
            r0 = int(text.split(":", 1)[1])
            if r0 not in (2, 3, 5):
                raise TableFormatError(f"bad singleton characteristic {r0}")
            return Membership("singleton", r0)
        raise TableFormatError(f"bad membership {text!r}")


def _split_annotation(ann: str) -> list[str]:
    tokens, depth, cur = [], 0, []
    for ch in ann:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "," and depth == 0:
            tokens.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tokens.append("".join(cur).strip())
    return tokens


def parse_annotation(ann: str) -> tuple[dict[int, str], frozenset, Membership]:
    """Parse the printed group datum into (groups by characteristic,
    boxed flags, membership).  Boxed flags are primes, or {'single'}
    for the constant case."""
    tokens = _split_annotation(ann)
    if len(tokens) == 1:
        tok = tokens[0]
        if not (tok.startswith("[") and tok.endswith("]")):
            raise TableFormatError(f"constant annotation must be boxed: {ann!r}")
        g = normalize_tag(tok[1:-1])
        return {2: g, 3: g, 0: g}, frozenset({"single"}), Membership("full")
    first = tokens[0]
    if first.startswith("[") and "," in first:
        # boxed pair or triple, then the parenthesized characteristic-0 group
        names = [normalize_tag(x) for x in first[1:-1].split(",")]
        last = tokens[-1]
        if len(tokens) != 2 or not (last.startswith("(") and last.endswith(")")):
            raise TableFormatError(f"bad boxed-collection annotation: {ann!r}")
        g0 = normalize_tag(last[1:-1])
        if len(names) == 2:
            groups = {2: names[0], 3: names[1], 0: g0}
            return groups, frozenset({2, 3}), Membership("full")
        if len(names) == 3:
            groups = {2: names[0], 3: names[1], 5: names[2], 0: g0}
            return groups, frozenset({2, 3, 5}), Membership("full")
        raise TableFormatError(f"boxed collection of size {len(names)}: {ann!r}")
    if len(tokens) != 3:
        raise TableFormatError(f"expected 3 entries: {ann!r}")
    groups: dict[int, str] = {}
    boxed: set[int] = set()
    for slot, tok in zip((2, 3, 0), tokens):
        if tok in ("-", "(-)"):
            continue
        inner = tok
        if slot == 0:
            if not (inner.startswith("(") and inner.endswith(")")):
                raise TableFormatError(f"characteristic-0 entry must be (..): {ann!r}")
            inner = inner[1:-1]
        if inner.startswith("[") and inner.endswith("]"):
            boxed.add(slot)
            inner = inner[1:-1]
        groups[slot] = normalize_tag(inner)
    defined = set(groups)
    if defined == {2, 3, 0}:
        if not boxed:
            raise TableFormatError(f"no boxed entry: {ann!r}")
        return groups, frozenset(boxed), Membership("full")
    if len(defined) == 1:
        (r0,) = defined
        if r0 == 0 or boxed != {r0}:
            raise TableFormatError(f"bad singleton annotation: {ann!r}")
        return groups, frozenset(boxed), Membership("singleton", r0)
    raise TableFormatError(f"partial annotation is neither full nor singleton: {ann!r}")


def format_annotation(groups: dict[int, str], boxed: frozenset, mem: Membership) -> str:
    """Inverse of parse_annotation, for display."""
    if boxed == frozenset({"single"}):
        return f"[{groups[2]}]"
    if boxed >= {2, 3}:
        names = [groups[2], groups[3]] + ([groups[5]] if 5 in groups else [])
        return f"[{','.join(names)}],({groups[0]})"
    toks = []
    for slot in (2, 3, 0):
        if slot not in groups:
            toks.append("(-)" if slot == 0 else "-")
            continue
        g = groups[slot]
        if slot in boxed:
            g = f"[{g}]"
        toks.append(f"({g})" if slot == 0 else g)
    return ",".join(toks)


@dataclass(frozen=True)
class FiberEntry:
    """One printed fiber symbol: Levi (None = empty subset), character of
    the relative group, the printed d, its multiplicity, and the
    occurrence disambiguator for labels printed identically in two rows."""

    levi: CartanType | None
    character: CharacterLabel
    d_printed: int
    mult: int
    disamb: str | None = None

    @property
    def d_semantic(self) -> int | None:
        if self.levi is not None and self.levi.is_classical:
            return None
        return self.d_printed

    @property
    def levi_name(self) -> str:
        return "-" if self.levi is None else self.levi.name

    @property
    def key(self) -> tuple:
        return (self.levi_name, self.character.text, self.d_semantic)

    def describe(self) -> str:
        if self.levi is None:
            return self.character.text
        s = f"({self.levi.name},{self.character.text},{self.d_printed})"
        if self.mult != 1:
            s += f"#{self.mult}"
        if self.disamb:
            s += f"@{self.disamb}"
        return s


@dataclass(frozen=True)
class StrataRow:
    stratum: CharacterLabel
    fiber: tuple[FiberEntry, ...]  # first entry is (empty, stratum, 0, 1)
    groups: tuple[tuple[int, str], ...]  # (characteristic, group tag)
    boxed: frozenset
    membership: Membership

    def group_at(self, r: int) -> str | None:
        """Annotation at characteristic r; full-membership rows repeat
        the characteristic-0 group at r=5 unless 5 is explicit."""
        g = dict(self.groups)
        if r in g:
            return g[r]
        if self.membership.kind == "full" and r == 5:
            return g[0]
        return None

    @property
    def fiber_size(self) -> int:
        return sum(en.mult for en in self.fiber)


def _relative_map(t: CartanType) -> dict[str, CuspidalLevi]:
    return {levi.levi_name: levi for levi in cuspidal_levis(t)}


def _parse_fiber_character(
    t: CartanType, levi: CuspidalLevi, text: str
) -> CharacterLabel:
    for lab in relative_character_labels(t, levi.relative_weyl_type):
        if lab.text == text:
            return lab
    raise TableFormatError(
        f"{text!r} is not a character of the relative group of {levi.levi_name} in {t.name}"
    )


def validate_row_annotation(
    groups: dict[int, str], boxed: frozenset, mem: Membership
) -> None:
    defined = set(groups)
    if not boxed:
        raise TableFormatError("a row must box at least one group")
    if mem.kind == "singleton":
        if defined != {mem.r0} or boxed != {mem.r0}:
            raise TableFormatError(
                f"singleton row must define and box exactly characteristic {mem.r0}"
            )
        return
    if not {0, 2, 3} <= defined:
        raise TableFormatError("full-membership row must define characteristics 0, 2, 3")
    if boxed == frozenset({"single"}):
        if len({groups[r] for r in defined}) != 1:
            raise TableFormatError("constant row carries differing groups")
        return
    if not boxed <= {2, 3, 5}:
        raise TableFormatError(f"bad boxed flags {sorted(map(str, boxed))}")


def _assemble_row(
    t: CartanType,
    head: str | CharacterLabel,
    entries,
    groups: dict[int, str],
    boxed: frozenset,
    mem: Membership,
) -> StrataRow:
    registry = enumerate_irr(t)
    relatives = _relative_map(t)
    head_label = registry.by_text(head) if isinstance(head, str) else head
    fiber = [FiberEntry(None, head_label, 0, 1)]
    for levi_name, char, d, mult, disamb in entries:
        if levi_name in ("", "-"):
            fiber.append(FiberEntry(None, registry.by_text(char), int(d), int(mult), disamb))
            continue
        levi = relatives.get(parse_type(levi_name).name)
        if levi is None or levi.levi_weyl_type is None:
            raise TableFormatError(f"{levi_name} is not a cuspidal Levi of {t.name}")
        lab = _parse_fiber_character(t, levi, char)
        fiber.append(FiberEntry(levi.levi_weyl_type, lab, int(d), int(mult), disamb))
    validate_row_annotation(groups, boxed, mem)
    groups = {r: normalize_tag(g) for r, g in groups.items()}
    return StrataRow(head_label, tuple(fiber), tuple(sorted(groups.items())), boxed, mem)


def build_rows(t: CartanType, raw_rows) -> tuple[StrataRow, ...]:
    """Typed rows from raw (head, entries, annotation) triples."""
    rows: list[StrataRow] = []
    for head, entries, ann in raw_rows:
        groups, boxed, mem = parse_annotation(ann)
        rows.append(_assemble_row(t, head, entries, groups, boxed, mem))
    _validate_rows(t, rows)
    return tuple(rows)


def assemble_rows(t: CartanType, structured) -> tuple[StrataRow, ...]:
    """Typed rows from structured (head, entries, groups, boxed,
    membership) tuples, as produced by the JSON loader."""
    rows = [_assemble_row(t, *item) for item in structured]
    _validate_rows(t, rows)
    return tuple(rows)


def _validate_rows(t: CartanType, rows: list[StrataRow]) -> None:
    heads = [r.stratum.text for r in rows]
    if len(set(heads)) != len(heads):
        dup = next(h for h in heads if heads.count(h) > 1)
        raise TableFormatError(f"duplicate stratum head {dup!r} in table for {t.name}")
    unit = unit_label(t).text
    for r in rows:
        first = r.fiber[0]
        if first.levi is not None or first.character != r.stratum or first.mult != 1:
            raise TableFormatError(
                f"first fiber entry of {r.stratum.text} must be its own empty-Levi entry"
            )
        if any(slot == 5 for slot, _ in r.groups) and r.stratum.text != unit:
            raise TableFormatError(
                f"characteristic-5 annotation outside the unit stratum ({r.stratum.text})"
            )


@lru_cache(maxsize=None)
def embedded_table(t: CartanType) -> tuple[StrataRow, ...]:
    if t.name not in tabledata.TABLES:
        raise NoTableAvailable(f"no embedded table for {t.name}")
    return build_rows(t, tabledata.TABLES[t.name])


class TableStore:
    """Embedded tables plus any tables registered for classical types.

    Registration is expected at startup, before queries; lookups never
    mutate the store.
    """

    def __init__(self) -> None:
        self._registered: dict[str, tuple[StrataRow, ...]] = {}

    def has_table(self, t: CartanType) -> bool:
        return t.name in tabledata.TABLES or t.name in self._registered

    def table(self, t: CartanType) -> tuple[StrataRow, ...]:
        if t.name in tabledata.TABLES:
            return embedded_table(t)
        if t.name in self._registered:
            return self._registered[t.name]
        raise NoTableAvailable(
            f"no strata table for {t.name}; register one for classical types"
        )

    def install(self, t: CartanType, rows: tuple[StrataRow, ...]) -> None:
        if t.name in tabledata.TABLES:
            raise TableFormatError(f"{t.name} is embedded; external copies are only checked")
        self._registered[t.name] = rows


DEFAULT_STORE = TableStore()


def component_group(
    t: CartanType, stratum: CharacterLabel | str, r: int, store: TableStore = DEFAULT_STORE
) -> str | None:
    """The component-group annotation at characteristic r (0,2,3,5);
    None where the table prints a dash."""
    if r not in PRIME_SLOTS:
        raise TableFormatError(f"characteristic must be one of {PRIME_SLOTS}")
    row = find_row(t, stratum, store)
    return row.group_at(r)


def find_row(
    t: CartanType, stratum: CharacterLabel | str, store: TableStore = DEFAULT_STORE
) -> StrataRow:
    text = stratum if isinstance(stratum, str) else stratum.text
    for row in store.table(t):
        if row.stratum.text == text:
            return row
    raise UnknownStratum(f"{text!r} is not a stratum of {t.name}")


# ---------------------------------------------------------------------------
# Centralizer profiles.


@dataclass(frozen=True)
class CentralizerProfile:
    ambient: CartanType
    d: int | None
    characteristic_class: str  # "generic" or the prime as a string
    entries: tuple[tuple[Subsystem | None, int], ...]  # None = full group
    note: str | None = None

    @property
    def total(self) -> int:
        return sum(c for _, c in self.entries)

    def describe_entries(self) -> str:
        return ", ".join(
            f"{'full' if s is None else s.name} x{c}" for s, c in self.entries
        )


def _classical_profiles(t: CartanType) -> list[CentralizerProfile]:
    n = t.rank
    if t.series == "C":
        half = n // 2
        sub = Subsystem.of(*(simple_type("C", half),) * 2) if half > 1 else Subsystem.parse("A1xA1")
        generic = ((sub, 1),)
    elif t.series == "B":
        k = next(k for k in range(1, n) if k * (k + 1) == n)
        if k % 2 == 0:
            a, b = ((k + 1) ** 2 - 1) // 2, k * k // 2
        else:
            a, b = (k * k - 1) // 2, (k + 1) ** 2 // 2
        factors = []
        if a == 1:
            factors.append(CartanType("A", 1))
        elif a >= 2:
            factors.append(CartanType("B", a))
        if b == 2:
            factors.extend([CartanType("A", 1), CartanType("A", 1)])
        elif b == 3:
            factors.append(CartanType("A", 3))
        elif b >= 4:
            factors.append(CartanType("D", b))
        generic = ((Subsystem.of(*factors), 1),)
    else:  # D series
        half = n // 2
        if half == 2:
            factors = [CartanType("A", 1)] * 4
        else:
            factors = [CartanType("D", half), CartanType("D", half)]
        generic = ((Subsystem.of(*factors), 1),)
    return [
        CentralizerProfile(t, None, "generic", generic),
        CentralizerProfile(t, None, "2", ((None, 1),)),
    ]


def centralizer_profiles(t: CartanType) -> tuple[CentralizerProfile, ...]:
    """All recorded profiles for t (every cuspidal d, every class)."""
    if t.is_torus or t.series == "A":
        return ()
    if t.is_exceptional:
        out = []
        for (name, d), classes in tabledata.CENTRALIZER_PROFILES.items():
            if name != t.name:
                continue
            for char_class, entries in classes:
                typed = tuple(
                    (None if s == tabledata.FULL else Subsystem.parse(s), c)
                    for s, c in entries
                )
                note = tabledata.E8_D0_NOTE if (name, d) == ("E8", 0) else None
                out.append(
                    CentralizerProfile(t, d, str(char_class), typed, note)
                )
        return tuple(out)
    if cuspidal_counts(t).counts:
        return tuple(_classical_profiles(t))
    return ()


def centralizer_profile(
    t: CartanType, d: int | None, r: int | str
) -> CentralizerProfile:
    """The profile for (t, d) in characteristic r; r may be 0, a prime,
    or 'generic'."""
    candidates = [p for p in centralizer_profiles(t) if p.d == d]
    if not candidates:
        raise CartanError(f"no centralizer data for {t.name} with d={d}")
    wanted = "generic" if r in (0, "0", "generic") else str(r)
    for p in candidates:
        if p.characteristic_class == wanted:
            return p
    for p in candidates:
        if p.characteristic_class == "generic":
            return p
    raise CartanError(f"no centralizer profile for {t.name}, d={d}, r={r}")

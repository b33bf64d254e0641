"""Canonical JSON documents: the strata-table/1 schema shared by the
embedded tables and classical plug-ins, plus exports for triples,
strata, and verification reports.

Exports are byte-stable: fixed key order, two-space indent, LF line
endings, trailing newline.  import(export(x)) reproduces x exactly.
"""

from __future__ import annotations

import json

from .cartan import CartanType, parse_type, CartanError
from .cuspidal import enumerate_cs_prime
from .groups import GroupError, normalize_tag
from .labels import LabelError
from .strata import strata
from .tables import (
    DEFAULT_STORE,
    Membership,
    StrataRow,
    TableFormatError,
    TableStore,
    assemble_rows,
)

TABLE_SCHEMA = "strata-table/1"
TRIPLES_SCHEMA = "cs-triples/1"
STRATA_SCHEMA = "strata-list/1"
REPORT_SCHEMA = "verification-report/1"


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def table_document(t: CartanType, store: TableStore = DEFAULT_STORE) -> dict:
    rows_out = []
    for row in store.table(t):
        fiber = []
        for en in row.fiber:
            item: dict = {
                "levi": en.levi_name,
                "character": en.character.text,
                "d": en.d_printed,
                "mult": en.mult,
            }
            if en.disamb is not None:
                item["disamb"] = en.disamb
            fiber.append(item)
        groups = {str(r): g for r, g in sorted(row.groups)}
        boxed = sorted((str(b) for b in row.boxed), key=lambda s: (s != "single", s))
        rows_out.append(
            {
                "stratum": row.stratum.text,
                "fiber": fiber,
                "groups": groups,
                "boxed": boxed,
                "membership": row.membership.text,
            }
        )
    return {"schema": TABLE_SCHEMA, "type": t.name, "rows": rows_out}


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise TableFormatError(message)


def parse_table_document(doc: dict) -> tuple[CartanType, tuple[StrataRow, ...]]:
    """Validate a strata-table/1 document and build typed rows.

    Raises TableFormatError on any schema violation; label and
    annotation problems carry the offending text.
    """
    _expect(isinstance(doc, dict), "document must be a JSON object")
    _expect(doc.get("schema") == TABLE_SCHEMA, f"schema must be {TABLE_SCHEMA!r}")
    try:
        t = parse_type(str(doc.get("type", "")))
    except CartanError as exc:
        raise TableFormatError(f"bad type field: {exc}") from exc
    rows_raw = doc.get("rows")
    _expect(isinstance(rows_raw, list) and rows_raw, "rows must be a nonempty list")
    structured = []
    for i, row in enumerate(rows_raw):
        _expect(isinstance(row, dict), f"row {i} must be an object")
        extra = set(row) - {"stratum", "fiber", "groups", "boxed", "membership"}
        _expect(not extra, f"row {i} has unknown keys {sorted(extra)}")
        head = row.get("stratum")
        _expect(isinstance(head, str), f"row {i}: stratum must be a string")
        fiber = row.get("fiber")
        _expect(isinstance(fiber, list) and fiber, f"row {i}: fiber must be nonempty")
        entries = []
        for j, en in enumerate(fiber):
            _expect(isinstance(en, dict), f"row {i} entry {j} must be an object")
            extra = set(en) - {"levi", "character", "d", "mult", "disamb"}
            _expect(not extra, f"row {i} entry {j} has unknown keys {sorted(extra)}")
            levi = en.get("levi")
            char = en.get("character")
            d = en.get("d")
            mult = en.get("mult")
            _expect(isinstance(levi, str), f"row {i} entry {j}: levi must be a string")
            _expect(isinstance(char, str), f"row {i} entry {j}: character must be a string")
            _expect(isinstance(d, int) and d >= 0, f"row {i} entry {j}: d must be >= 0")
            _expect(isinstance(mult, int) and mult >= 1, f"row {i} entry {j}: mult must be >= 1")
            disamb = en.get("disamb")
            _expect(
                disamb is None or (isinstance(disamb, str) and disamb),
                f"row {i} entry {j}: disamb must be a nonempty string",
            )
            entries.append((levi, char, d, mult, disamb))
        _expect(
            entries and entries[0][0] == "-" and entries[0][1] == head
            and entries[0][2] == 0 and entries[0][3] == 1,
            f"row {i}: first fiber entry must be ('-', {head!r}, d=0, mult=1)",
        )
        groups_raw = row.get("groups")
        _expect(isinstance(groups_raw, dict), f"row {i}: groups must be an object")
        groups: dict[int, str] = {}
        for key, val in groups_raw.items():
            _expect(key in ("0", "2", "3", "5"), f"row {i}: bad groups key {key!r}")
            try:
                groups[int(key)] = normalize_tag(str(val))
            except GroupError as exc:
                raise TableFormatError(f"row {i}: {exc}") from exc
        boxed_raw = row.get("boxed")
        _expect(isinstance(boxed_raw, list) and boxed_raw, f"row {i}: boxed must be nonempty")
        boxed: set = set()
        for b in boxed_raw:
            _expect(b in ("single", "2", "3", "5"), f"row {i}: bad boxed flag {b!r}")
            boxed.add(b if b == "single" else int(b))
        mem = Membership.parse(str(row.get("membership", "")))
        structured.append((head, entries[1:], groups, frozenset(boxed), mem))
    try:
        rows = assemble_rows(t, structured)
    except (LabelError, GroupError) as exc:
        raise TableFormatError(str(exc)) from exc
    return t, rows


def triples_document(t: CartanType) -> dict:
    records = []
    for tr in enumerate_cs_prime(t):
        records.append(
            {
                "levi": tr.levi.levi_name,
                "character": tr.character.text,
                "d": tr.d if tr.d is not None else "opaque",
                "index": tr.index,
            }
        )
    return {"schema": TRIPLES_SCHEMA, "type": t.name, "triples": records}


def strata_document(t: CartanType, store: TableStore = DEFAULT_STORE) -> dict:
    return {
        "schema": STRATA_SCHEMA,
        "type": t.name,
        "strata": [lab.text for lab in strata(t, store)],
    }


def report_document(report) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "type": report.type_name,
        "checks": [
            {"id": cid, "status": status, "detail": detail}
            for cid, status, detail in report.checks
        ],
        "errata": list(report.errata),
    }

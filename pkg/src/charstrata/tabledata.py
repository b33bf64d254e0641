"""Embedded strata tables for G2, F4, E6, E7, E8, centralizer profiles,
and the anomaly log.

Each table row is (head, fiber-tail, annotation).  The head is the
stratum label; its own cuspidal-support entry (empty Levi, the head
itself, d=0, multiplicity 1) is implicit and always first.  The fiber
tail lists the remaining entries as (levi, character, d, mult, disamb)
with levi "" meaning the empty subset.  d is stored as printed in the
source rows; for classical Levi types it is an opaque placeholder (the
enumeration side never keys on it).

The annotation string mirrors the printed component-group datum:
comma-separated groups for characteristics 2, 3 and (parenthesized) 0,
with square brackets marking the boxed entries and '-' for undefined.
A single bracketed group means the constant case.  The unit stratum of
E8 carries four groups (2, 3, 5, then 0).

disamb tags the two occurrences of a fiber label that is printed
identically in two different rows (see ERRATA).
"""

from __future__ import annotations


def e(char: str):
    """Fiber entry with empty Levi."""
    return ("", char, 0, 1, None)


def t(levi: str, char: str, d: int, mult: int = 1, disamb: str | None = None):
    return (levi, char, d, mult, disamb)


Row = tuple  # (head, tuple(entries), annotation)


def row(head: str, *entries, ann: str) -> Row:
    return (head, tuple(entries), ann)


TABLE_G2: tuple[Row, ...] = (
    row("eps", ann="[1]"),
    row("eps_l", ann="-,[1],(-)"),
    row("eps_c", ann="[1]"),
    row("theta''", ann="[1]"),
    row("theta'", t("G2", "1", 1), ann="S3,[C2],(S3)"),
    row("1", t("G2", "1", 0, 3), ann="[C2,C3],(1)"),
)

TABLE_F4: tuple[Row, ...] = (
    row("chi_{1,4}", ann="[1]"),
    row("chi_{2,4}", ann="[1]"),
    row("chi_{2,2}", ann="[1],-,(-)"),
    row("chi_{4,4}", ann="[1],C2,(C2)"),
    row("chi_{9,4}", ann="[1]"),
    row("chi_{8,4}", e("chi_{1,2}"), ann="[C2]"),
    row("chi_{8,2}", e("chi_{1,3}"), ann="[C2],1,(1)"),
    row("chi_4", t("B2", "eps", 0), ann="[C2],-,(-)"),
    row("chi_{4,3}", ann="[1],-,(-)"),
    row("chi_{4,2}", ann="[1]"),
    row("chi_{9,3}", ann="[1],-,(-)"),
    row("chi_{9,2}", ann="[1],C2,(C2)"),
    row("chi_{6,1}", ann="[1]"),
    row("chi_{16}", ann="[1],C2,(C2)"),
    row("chi_{12}", e("chi_{6,2}"), t("F4", "1", 4), ann="[S3],S4,(S4)"),
    row("chi_{8,3}", t("B2", "eps_l", 0), ann="[C2],1,(1)"),
    row("chi_{8,1}", t("B2", "eps_c", 0), ann="[C2],1,(1)"),
    row("chi_{9,1}", e("chi_{2,1}"), e("chi_{2,3}"), t("B2", "theta", 0), t("F4", "1", 2),
        ann="[D8],C2,(C2)"),
    row("chi_{4,1}", t("F4", "1", 1), ann="[C2]"),
    row("chi_{1,1}", t("B2", "1", 0), t("F4", "1", 0, 4), ann="[C4,C3],(1)"),
)

TABLE_E6: tuple[Row, ...] = (
    row("1_36", ann="[1]"),
    row("6_25", ann="[1]"),
    row("20_20", ann="[1]"),
    row("15_16", ann="[1]"),
    row("30_15", e("15_17"), ann="[C2]"),
    row("64_13", ann="[1]"),
    row("24_12", ann="[1]"),
    row("60_11", ann="[1]"),
    row("81_10", ann="[1]"),
    row("10_9", ann="[1]"),
    row("60_8", ann="[1]"),
    row("80_7", e("90_8"), e("20_10"), ann="[S3]"),
    row("81_6", ann="[1]"),
    row("24_6", t("D4", "eps", 0), ann="[S2],1,(1)"),
    row("60_5", ann="[1]"),
    row("64_4", ann="[1]"),
    row("15_4", ann="[1]"),
    row("30_3", e("15_5"), ann="[C2]"),
    row("20_2", t("D4", "phi", 0), ann="[C2],1,(1)"),
    row("6_1", ann="[1]"),
    row("1_0", t("D4", "1", 0), t("E6", "1", 0, 2), ann="[C2,C3],(1)"),
)

TABLE_E7: tuple[Row, ...] = (
    row("1_63", ann="[1]"),
    row("7_46", ann="[1]"),
    row("27_37", ann="[1]"),
    row("21_36", ann="[1]"),
    row("35_31", ann="[1]"),
    row("56_30", e("21_33"), ann="[C2]"),
    row("15_28", ann="[1]"),
    row("120_25", e("105_28"), ann="[C2]"),
    row("189_22", ann="[1]"),
    row("105_21", ann="[1]"),
    row("168_21", ann="[1]"),
    row("210_21", ann="[1]"),
    row("189_20", ann="[1]"),
    row("70_18", ann="[1]"),
    row("280_17", ann="[1]"),
    row("315_16", e("280_18"), e("35_22"), ann="[S3]"),
    row("216_16", ann="[1]"),
    row("405_15", e("189_17"), ann="[C2]"),
    row("105_15", t("D4", "(|1,1,1)", 0), ann="[C2],1,(1)"),
    row("84_15", ann="[1],-,(-)"),
    row("378_14", ann="[1],C2,(C2)"),
    row("210_13", ann="[1]"),
    row("420_13", e("336_14"), ann="[C2]"),
    row("84_12", t("D4", "(1,1,1|)", 0), ann="[C2]"),
    row("105_12", ann="[1]"),
    row("512_11", e("512_12"), ann="[C2]"),
    row("210_10", ann="[1]"),
    row("420_10", e("336_11"), ann="[C2]"),
    row("378_9", ann="[1]"),
    row("216_9", ann="[1]"),
    row("70_9", ann="[1]"),
    row("280_8", ann="[1]"),
    row("405_8", e("189_10"), ann="[C2]"),
    row("189_7", t("D4", "(1|1,1)", 0), ann="[C2],1,(1)"),
    row("315_7", e("280_9"), e("35_13"), ann="[S3]"),
    row("168_6", t("D4", "(1,1|1)", 0), ann="[C2],1,(1)"),
    row("210_6", t("D4", "(|2,1)", 0), ann="[C2],1,(1)"),
    row("105_6", e("15_7"), ann="[C2],1,(1)"),
    row("189_5", ann="[1],C2,(C2)"),
    row("35_4", t("D4", "(2,1|)", 0), ann="[C2],1,(1)"),
    row("120_4", e("105_5"), ann="[C2]"),
    row("21_3", t("D4", "(1|2)", 0), t("E6", "1", 0, 2, "a"), ann="[C2,C3],(1)"),
    row("56_3", e("21_6"), ann="[C2]"),
    row("27_2", t("D4", "(2|1)", 0), ann="[C2],1,(1)"),
    row("7_1", t("D4", "(|3)", 0), ann="[C2],1,(1)"),
    row("1_0", t("D4", "(3|)", 0), t("E6", "1", 0, 2, "b"), t("E7", "1", 0, 2),
        ann="[C4,C3],(1)"),
)

TABLE_E8: tuple[Row, ...] = (
    row("1_120", ann="[1]"),
    row("8_91", ann="[1]"),
    row("35_74", ann="[1]"),
    row("112_63", e("28_68"), ann="[C2]"),
    row("50_56", ann="[1]"),
    row("210_52", e("160_55"), ann="[C2]"),
    row("560_47", ann="[1]"),
    row("567_46", ann="[1]"),
    row("400_43", ann="[1]"),
    row("700_42", e("300_44"), ann="[C2]"),
    row("448_39", ann="[1]"),
    row("1344_38", ann="[1]"),
    row("1400_37", e("1008_39"), e("56_49"), ann="[S3]"),
    row("175_36", ann="[1]"),
    row("525_36", t("D4", "chi_{1,4}", 0), ann="[C2],1,(1)"),
    row("1050_34", ann="[1]"),
    row("1400_32", e("1575_34"), e("350_38"), ann="[S3]"),
    row("972_32", ann="[1],-,(-)"),
    row("3240_31", ann="[1],C2,(C2)"),
    row("2268_30", e("1296_33"), ann="[C2]"),
    row("1400_29", ann="[1]"),
    row("2240_28", e("840_31"), ann="[C2]"),
    row("700_28", t("D4", "chi_{2,2}", 0), ann="[C2],1,(1)"),
    row("840_26", ann="[1]"),
    row("4096_26", e("4096_27"), ann="[C2]"),
    row("2800_25", e("2100_28"), ann="[C2]"),
    row("4200_24", e("3360_25"), ann="[C2]"),
    row("168_24", t("D4", "chi_{1,3}", 0), ann="[C2],-,(-)"),
    row("4536_23", ann="[1]"),
    row("2835_22", ann="[1]"),
    row("6075_22", ann="[1]"),
    row("3200_32", ann="[1]"),
    row("4200_21", ann="[1],C2,(C2)"),
    row("5600_21", e("2400_23"), ann="[C2]"),
    row("420_20", ann="[1]"),
    row("2100_20", t("D4", "chi_{4,4}", 0), ann="[C2],1,(1)"),
    row("1344_19", ann="[1]"),
    row("2016_19", ann="[1]"),
    row("3150_18", e("1134_20"), ann="[C2]"),
    row("4200_18", e("2688_20"), ann="[C2]"),
    row("7168_17", e("5600_19"), e("448_25"), ann="[S3]"),
    row("3200_16", t("D4", "chi_{8,2}", 0), ann="[C2],1,(1)"),
    row("4480_16", e("5670_18"), e("4536_18"), e("1400_20"), e("1680_22"), e("79_32"),
        t("E8", "1", 16), ann="[S5]"),
    row("5600_15", e("2400_17"), t("D4", "chi_{9,4}", 0), t("D4", "chi_{2,4}", 0),
        ann="[C2xC2],C2,(C2)"),
    row("4200_15", e("700_16"), ann="[C2],1,(1)"),
    row("2835_14", ann="[1]"),
    row("6075_14", ann="[1],C2,(C2)"),
    row("840_14", t("D4", "chi_{4,3}", 0), ann="[C2],-,(-)"),
    row("4536_13", ann="[1],C2,(C2)"),
    row("2800_13", e("2100_16"), ann="[C2]"),
    row("972_12", t("D4", "chi_{9,3}", 0), ann="[C2],1,(1)"),
    row("4200_12", e("3360_13"), ann="[C2]"),
    row("525_12", t("D4", "chi_{8,4}", 0), t("E6", "eps", 0, 2), ann="[C2,C3],(1)"),
    row("175_12", ann="-,[1],(-)"),
    row("1400_11", ann="[1]"),
    row("4096_11", e("4096_12"), ann="[C2]"),
    row("2268_10", e("1296_13"), ann="[C2]"),
    row("2240_10", e("840_13"), ann="S3,[C2],(S3)"),
    row("1050_10", t("D4", "chi_4", 0), ann="[C2],-,(-)"),
    row("3240_9", ann="[1],C2,(C2)"),
    row("448_9", t("D4", "chi_{6,1}", 0), t("E6", "eps_l", 0, 2), ann="[C2,C3],(1)"),
    row("1344_8", t("D4", "chi_{16}", 0), ann="[C2],1,(1)"),
    row("1400_8", e("1575_10"), e("350_14"), ann="[S3]"),
    row("1400_7", e("1008_9"), e("56_19"), t("D4", "chi_{12}", 0), t("D4", "chi_{6,2}", 0),
        t("E8", "1", 7), ann="[S3xC2],S3,(S3)"),
    row("400_7", t("D4", "chi_{2,3}", 0), ann="[C2],1,(1)"),
    row("700_6", e("300_8"), e("50_9"), t("D4", "chi_{8,3}", 0), t("E8", "1", 6),
        ann="[D8],C2,(C2)"),
    row("567_6", t("D4", "chi_{9,2}", 0), ann="[C2],1,(1)"),
    row("560_5", t("D4", "chi_{4,2}", 0), ann="[C2]"),
    row("210_4", e("160_3"), ann="[C2]"),
    row("84_4", t("D4", "chi_{9,1}", 0), t("E6", "theta''", 0, 2), t("E7", "1", 0, 2, "a"),
        ann="[C4,C3],(1)"),
    row("112_3", e("28_8"), t("D4", "chi_{8,1}", 0), t("D4", "chi_{1,2}", 0),
        t("E6", "theta'", 0, 2), t("E8", "1", 3, 2), ann="[C2xC2,C2xC3],(C2)"),
    row("35_2", t("D4", "chi_{4,1}", 0), ann="[C2],1,(1)"),
    row("8_1", t("D4", "chi_{2,1}", 0), t("E6", "eps_c", 0, 2), t("E8", "1", 1, 2),
        ann="[C4,C3],(1)"),
    row("1_0", t("D4", "chi_{1,1}", 0), t("E6", "1", 0, 2), t("E7", "1", 0, 2, "b"),
        t("E8", "1", 0, 6), ann="[C4,C3,C5],(1)"),
)

TABLES: dict[str, tuple[Row, ...]] = {
    "G2": TABLE_G2,
    "F4": TABLE_F4,
    "E6": TABLE_E6,
    "E7": TABLE_E7,
    "E8": TABLE_E8,
}

# Strata heads of the stratum of regular elements (the unit character).
UNIT_STRATUM: dict[str, str] = {
    "G2": "1",
    "F4": "chi_{1,1}",
    "E6": "1_0",
    "E7": "1_0",
    "E8": "1_0",
}


# ---------------------------------------------------------------------------
# Centralizer profiles: the type of the connected centralizer of the
# semisimple part of the support, per (ambient, d) and characteristic
# class.  "generic" covers every characteristic not listed explicitly;
# FULL means the centralizer is the whole group.  Counts are numbers of
# cuspidal objects with that centralizer type.

FULL = "FULL"

# (type, d) -> list of (char_class, ((subsystem-or-FULL, count), ...))
# char_class is "generic" or a prime.
CENTRALIZER_PROFILES: dict[tuple[str, int | None], tuple] = {
    ("G2", 1): (("generic", ((FULL, 1),)),),
    ("G2", 0): (
        ("generic", (("A2", 2), ("A1xA1", 1))),
        (2, (("A2", 2), (FULL, 1))),
        (3, ((FULL, 2), ("A1xA1", 1))),
    ),
    ("F4", 4): (("generic", ((FULL, 1),)),),
    ("F4", 2): (("generic", (("B4", 1),)), (2, ((FULL, 1),))),
    ("F4", 1): (("generic", (("C3xA1", 1),)), (2, ((FULL, 1),))),
    ("F4", 0): (
        ("generic", (("A2xA2", 2), ("A3xA1", 2))),
        (2, (("A2xA2", 2), (FULL, 2)))
        ,
        (3, (("A3xA1", 2), (FULL, 2))),
    ),
    ("E6", 0): (("generic", (("A2xA2xA2", 2),)), (3, ((FULL, 2),))),
    ("E7", 0): (("generic", (("A3xA3xA1", 2),)), (2, ((FULL, 2),))),
    ("E8", 16): (("generic", ((FULL, 1),)),),
    ("E8", 7): (("generic", (("E7xA1", 1),)), (2, ((FULL, 1),))),
    ("E8", 6): (("generic", (("D8", 1),)), (2, ((FULL, 1),))),
    ("E8", 3): (("generic", (("E6xA2", 2),)), (3, ((FULL, 2),))),
    ("E8", 1): (("generic", (("D5xA3", 2),)), (2, ((FULL, 2),))),
    ("E8", 0): (
        ("generic", (("A4xA4", 4), ("A5xA2xA1", 2))),
        (5, ((FULL, 4), ("A5xA2xA1", 2))),
        (3, (("A4xA4", 4), ("E7xA1", 2))),
        (2, (("A4xA4", 4), ("E6xA2", 2))),
    ),
}

# Note attached to the (E8, d=0) profile: for r=2 no semisimple element
# has connected centralizer of type A5xA2xA1, contradicting an earlier
# published claim; the profile above is authoritative here.
E8_D0_NOTE = (
    "for r=2 the type A5xA2xA1 does not occur as a connected centralizer; "
    "an earlier published statement asserting otherwise is contradicted"
)


# ---------------------------------------------------------------------------
# Anomaly log.  Entries record oddities of the embedded source tables;
# data above stores everything verbatim, flags live here.

ERRATA: tuple[dict, ...] = (
    {
        "id": "E8-3200_32",
        "type": "E8",
        "kind": "suspected-typo",
        "detail": "label 3200_32 sits among rows with b in 21..23; "
        "its sign-partner pairing suggests 3200_22; stored verbatim",
    },
    {
        "id": "E8-160_3",
        "type": "E8",
        "kind": "suspected-typo",
        "detail": "label 160_3 (paired with 210_4) is expected to read 160_7; "
        "stored verbatim",
    },
    {
        "id": "E8-79_32",
        "type": "E8",
        "kind": "suspected-typo",
        "detail": "label 79_32 matches no degree of the E8 reflection group; "
        "expected 70_32; stored verbatim",
    },
    {
        "id": "E8-50_9",
        "type": "E8",
        "kind": "suspected-typo",
        "detail": "label 50_9 is expected to read 50_8; stored verbatim",
    },
    {
        "id": "E7-dup-E6-entry",
        "type": "E7",
        "kind": "duplicate-label",
        "detail": "(E6,1,0) with multiplicity 2 is printed in two rows (21_3 and 1_0); "
        "the two occurrences are tagged a/b and presumably carry the two distinct "
        "characters 1 and eps of the relative A1",
    },
    {
        "id": "E8-dup-E7-entry",
        "type": "E8",
        "kind": "duplicate-label",
        "detail": "(E7,1,0) with multiplicity 2 is printed in two rows (84_4 and 1_0); "
        "occurrences tagged a/b, presumably the characters 1 and eps of the relative A1",
    },
    {
        "id": "E8-missing-112th",
        "type": "E8",
        "kind": "missing-row",
        "detail": "the E8 table carries 111 distinct empty-Levi labels while the "
        "reflection group has 112 irreducible characters; the absent one is 84_64 "
        "(sign partner of 84_4), whose row is forced by the fiber/column balance to "
        "be a singleton with a one-element group datum; the row is not reconstructed "
        "because its component-group annotation is not derivable",
    },
    {
        "id": "G2-d0-support-case",
        "type": "G2",
        "kind": "case-anomaly",
        "detail": "for d=0 no characteristic makes all three cuspidal objects "
        "unipotently supported, yet the stated classification names only E8 and F4 "
        "for that branch; the G2 table routes all three to the unit stratum exactly "
        "as that branch prescribes, so the case is tagged 'mixed' and handled like "
        "the no-prime branch",
    },
    {
        "id": "E8-full-levi-star",
        "type": "E8",
        "kind": "interpretation",
        "detail": "the cuspidal Levi list for E8 names the full member as 'E_*'; "
        "read here as E8 itself (trivial relative group)",
    },
    {
        "id": "E8-d0-centralizer-note",
        "type": "E8",
        "kind": "documentation",
        "detail": E8_D0_NOTE,
    },
)


def errata_for(type_name: str) -> list[dict]:
    return [dict(x) for x in ERRATA if x["type"] == type_name]

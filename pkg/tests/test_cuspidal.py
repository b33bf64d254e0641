import pytest

from charstrata.cartan import CartanType, TORUS, parse_type
from charstrata.cuspidal import (
    CuspidalError,
    cuspidal_counts,
    cuspidal_levis,
    enumerate_cs_prime,
    support_case,
)
from charstrata.labels import irr_count, relative_character_labels


def _levi_names(name):
    return [l.levi_name for l in cuspidal_levis(parse_type(name))]


def test_cuspidal_levi_lists():
    assert _levi_names("E7") == ["-", "D4", "E6", "E7"]
    assert _levi_names("E8") == ["-", "D4", "E6", "E7", "E8"]
    assert _levi_names("E6") == ["-", "D4", "E6"]
    assert _levi_names("F4") == ["-", "B2", "F4"]
    assert _levi_names("G2") == ["-", "G2"]
    assert _levi_names("A7") == ["-"]
    assert _levi_names("B30") == ["-", "B2", "B6", "B12", "B20", "B30"]
    assert _levi_names("C12") == ["-", "B2", "B6", "B12"]
    assert _levi_names("D4") == ["-", "D4"]
    assert _levi_names("D16") == ["-", "D4", "D16"]
    assert _levi_names("Torus") == ["-"]


def test_relative_weyl_types():
    relatives = {
        l.levi_name: (l.relative_weyl_type.name if l.relative_weyl_type else "1")
        for l in cuspidal_levis(parse_type("E8"))
    }
    assert relatives == {"-": "E8", "D4": "F4", "E6": "G2", "E7": "A1", "E8": "1"}
    e7 = {
        l.levi_name: (l.relative_weyl_type.name if l.relative_weyl_type else "1")
        for l in cuspidal_levis(parse_type("E7"))
    }
    assert e7 == {"-": "E7", "D4": "B3", "E6": "A1", "E7": "1"}
    b30 = {
        l.levi_name: (l.relative_weyl_type.name if l.relative_weyl_type else "1")
        for l in cuspidal_levis(parse_type("B30"))
    }
    assert b30["B2"] == "B28" and b30["B30"] == "1" and b30["B20"] == "B10"
    # rank-1 remainder normalizes to A1
    d5 = {l.levi_name: l.relative_weyl_type.name if l.relative_weyl_type else "1"
          for l in cuspidal_levis(parse_type("D5"))}
    assert d5["D4"] == "A1"


def test_count_tables():
    assert cuspidal_counts(parse_type("G2")).as_dict() == {1: 1, 0: 3}
    assert cuspidal_counts(parse_type("F4")).as_dict() == {4: 1, 2: 1, 1: 1, 0: 4}
    assert cuspidal_counts(parse_type("E6")).as_dict() == {0: 2}
    assert cuspidal_counts(parse_type("E7")).as_dict() == {0: 2}
    assert cuspidal_counts(parse_type("E8")).as_dict() == {
        16: 1, 7: 1, 6: 1, 3: 2, 1: 2, 0: 6,
    }
    assert cuspidal_counts(parse_type("A4")).as_dict() == {}
    assert cuspidal_counts(TORUS).as_dict() == {0: 1}
    for name in ["B2", "B6", "C2", "C6", "D4", "D16"]:
        assert cuspidal_counts(parse_type(name)).as_dict() == {None: 1}
    for name in ["B3", "B5", "C4", "D5", "D6"]:
        assert cuspidal_counts(parse_type(name)).as_dict() == {}


def _expected_total(t: CartanType) -> int:
    total = 0
    for levi in cuspidal_levis(t):
        chars = len(relative_character_labels(t, levi.relative_weyl_type))
        if levi.is_empty and not t.is_torus:
            total += chars
        else:
            inner = t if levi.is_empty else levi.levi_weyl_type
            total += chars * cuspidal_counts(inner).total
    return total


@pytest.mark.parametrize(
    "name,total",
    [("G2", 10), ("F4", 37), ("E6", 30), ("E7", 76), ("E8", 165), ("Torus", 1), ("A7", 22)],
)
def test_enumeration_totals(name, total):
    t = parse_type(name)
    triples = enumerate_cs_prime(t)
    assert len(triples) == total
    assert len(triples) == _expected_total(t)
    assert len({(x.levi.levi_name, x.character.text, x.d, x.index) for x in triples}) == total


def test_a_series_is_empty_levi_only():
    t = parse_type("A4")
    assert all(tr.levi.is_empty for tr in enumerate_cs_prime(t))
    assert len(enumerate_cs_prime(t)) == irr_count(t)


def test_full_levi_forces_trivial_character():
    for name in ["G2", "F4", "E6", "E7", "E8", "B6", "D4"]:
        for tr in enumerate_cs_prime(parse_type(name)):
            if tr.levi.is_full:
                assert tr.character.text == "1"


def test_indices_stay_below_counts():
    t = parse_type("E8")
    for tr in enumerate_cs_prime(t):
        if tr.levi.is_empty:
            assert tr.index == 0
            continue
        counts = cuspidal_counts(tr.levi.levi_weyl_type).as_dict()
        assert 0 <= tr.index < counts[tr.d]


def test_support_cases():
    assert support_case(parse_type("E6"), 0).r0 == 3
    assert support_case(parse_type("E7"), 0).r0 == 2
    assert support_case(parse_type("F4"), 4).tag == "all-primes"
    assert support_case(parse_type("F4"), 2).r0 == 2
    assert support_case(parse_type("E8"), 16).tag == "all-primes"
    assert support_case(parse_type("E8"), 3).r0 == 3
    assert support_case(parse_type("E8"), 0).tag == "no-prime"
    assert support_case(parse_type("G2"), 1).tag == "all-primes"
    assert support_case(parse_type("G2"), 0).tag == "mixed"
    assert support_case(TORUS, 0).tag == "torus"
    assert support_case(parse_type("B6"), None) .r0 == 2
    with pytest.raises(CuspidalError):
        support_case(parse_type("A4"), 0)
    with pytest.raises(CuspidalError):
        support_case(parse_type("E8"), 2)


def test_levi_relative_invariants():
    for name in ["A5", "B6", "C6", "D5", "G2", "F4", "E6", "E7", "E8", "Torus"]:
        t = parse_type(name)
        for levi in cuspidal_levis(t):
            if levi.is_empty:
                expected = None if t.is_torus else t
                assert levi.relative_weyl_type == expected
            if levi.levi_weyl_type == t:
                assert levi.relative_weyl_type is None

"""Static root-system data for the quasi-simple types, plus the
Borel-de Siebenthal subsystem enumerator.

Everything here is diagram-level combinatorics: types, Weyl group
orders, highest-root coefficients, extended Dynkin diagrams, and the
closure of a type under "extend a simple factor and delete nodes".
No root vectors or Weyl group elements are manipulated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

SERIES = ("A", "B", "C", "D", "E", "F", "G", "Torus")

# Enumeration of subsystems walks every node subset of an extended
# diagram; keep that exponential step within a sane budget.
MAX_ENUMERATION_RANK = 16


class CartanError(ValueError):
    """Invalid type, alias, or out-of-range request."""


@dataclass(frozen=True, order=True)
class CartanType:
    """A quasi-simple series/rank pair, or the torus."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in SERIES:
            raise CartanError(f"unknown series {self.series!r}")
        n = self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
            "Torus": n == 0,
        }[self.series]
        if not ok:
            raise CartanError(f"non-canonical type {self.series}{self.rank}")

    @property
    def is_torus(self) -> bool:
        return self.series == "Torus"

    @property
    def is_exceptional(self) -> bool:
        return self.series in ("E", "F", "G")

    @property
    def is_classical(self) -> bool:
        return self.series in ("B", "C", "D")

    @property
    def name(self) -> str:
        return "Torus" if self.is_torus else f"{self.series}{self.rank}"

    def __str__(self) -> str:  # pragma: no cover - repr helper
        return self.name


TORUS = CartanType("Torus", 0)


def simple_type(series: str, rank: int) -> CartanType:
    """Construct a type, normalizing the low-rank aliases
    B1/C1 -> A1, C2 -> B2, D2 -> A1 x A1 (rejected here), D3 -> A3.
    """
    if series == "B" and rank == 1:
        return CartanType("A", 1)
    if series == "C" and rank == 1:
        return CartanType("A", 1)
    if series == "C" and rank == 2:
        return CartanType("B", 2)
    if series == "D" and rank == 3:
        return CartanType("A", 3)
    if series == "D" and rank == 2:
        raise CartanError("D2 is not simple; use A1 x A1")
    return CartanType(series, rank)


def parse_type(text: str) -> CartanType:
    """Parse 'E8', 'e_8', 'B30', 'Torus', 'T' into a CartanType.

    Aliases other than the torus shortcuts are rejected: ambient types
    must be canonical.
    """
    s = text.strip().replace("_", "")
    if s.lower() in ("torus", "t"):
        return TORUS
    if not s or not s[0].isalpha():
        raise CartanError(f"cannot parse type {text!r}")
    series, digits = s[0].upper(), s[1:]
    if not digits.isdigit():
        raise CartanError(f"cannot parse type {text!r}")
    return CartanType(series, int(digits))


@dataclass(frozen=True)
class Subsystem:
    """A multiset of simple factors (the semisimple type of a subsystem).

    Factors are alias-normalized so comparisons against the names used
    for centralizer types are well defined.
    """

    factors: tuple[CartanType, ...]

    @staticmethod
    def of(*factors: CartanType) -> "Subsystem":
        return Subsystem(tuple(sorted(factors)))

    @staticmethod
    def parse(text: str) -> "Subsystem":
        """Parse 'A4xA4', 'E7xA1', 'C3xA1', '-' (empty)."""
        s = text.strip()
        if s in ("", "-", "0", "empty"):
            return Subsystem(())
        factors: list[CartanType] = []
        for part in s.replace("*", "x").split("x"):
            part = part.strip().replace("_", "")
            series, digits = part[0].upper(), part[1:]
            if not digits.isdigit():
                raise CartanError(f"cannot parse subsystem factor {part!r}")
            rank = int(digits)
            if series == "D" and rank == 2:
                factors.extend([CartanType("A", 1), CartanType("A", 1)])
            else:
                factors.append(simple_type(series, rank))
        return Subsystem(tuple(sorted(factors)))

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def name(self) -> str:
        if not self.factors:
            return "-"
        return "x".join(f.name for f in sorted(self.factors, key=lambda t: (-t.rank, t.series)))

    def __str__(self) -> str:  # pragma: no cover - repr helper
        return self.name


# ---------------------------------------------------------------------------
# Static per-type data.
#
# degrees: the invariant degrees of the reflection group (their product is
# the Weyl group order and their maximum is the Coxeter number).
# coeffs:  coefficients of the highest root on the simple roots.
# Extended diagrams are given explicitly as (u, v, multiplicity, short_node)
# edge lists on nodes {0..rank}, node 0 being the affine one.  short_node is
# meaningful only on edges of multiplicity >= 2 and names the short-root side.


def _degrees(t: CartanType) -> tuple[int, ...]:
    n = t.rank
    if t.series == "A":
        return tuple(range(2, n + 2))
    if t.series in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if t.series == "D":
        return tuple(range(2, 2 * n - 1, 2)) + (n,)
    return {
        ("G", 2): (2, 6),
        ("F", 4): (2, 6, 8, 12),
        ("E", 6): (2, 5, 6, 8, 9, 12),
        ("E", 7): (2, 6, 8, 10, 12, 14, 18),
        ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    }[(t.series, n)]


def _highest_root_coeffs(t: CartanType) -> tuple[int, ...]:
    n = t.rank
    if t.series == "A":
        return (1,) * n
    if t.series == "B":
        return (1,) + (2,) * (n - 1)
    if t.series == "C":
        return (2,) * (n - 1) + (1,)
    if t.series == "D":
        return (1,) + (2,) * (n - 3) + (1, 1)
    return {
        ("G", 2): (3, 2),
        ("F", 4): (2, 3, 4, 2),
        ("E", 6): (1, 2, 2, 3, 2, 1),
        ("E", 7): (2, 2, 3, 4, 3, 2, 1),
        ("E", 8): (2, 3, 4, 6, 5, 4, 3, 2),
    }[(t.series, n)]


Edge = tuple[int, int, int, int | None]


def _extended_edges(t: CartanType) -> tuple[Edge, ...]:
    n = t.rank
    if t.series == "A":
        if n == 1:
            # Affine A1: a single bond of multiplicity 4, no short side.
            return ((0, 1, 4, None),)
        cycle = [(i, i + 1, 1, None) for i in range(1, n)]
        cycle += [(0, 1, 1, None), (0, n, 1, None)]
        return tuple(cycle)
    if t.series == "B":
        if n == 2:
            return ((0, 2, 2, 2), (1, 2, 2, 2))
        edges = [(0, 2, 1, None), (1, 2, 1, None)]
        edges += [(i, i + 1, 1, None) for i in range(2, n - 1)]
        edges += [(n - 1, n, 2, n)]
        return tuple(edges)
    if t.series == "C":
        edges = [(0, 1, 2, 1)]
        edges += [(i, i + 1, 1, None) for i in range(1, n - 1)]
        edges += [(n - 1, n, 2, n - 1)]
        return tuple(edges)
    if t.series == "D":
        edges = [(0, 2, 1, None)]
        edges += [(i, i + 1, 1, None) for i in range(1, n - 2)]
        edges += [(n - 2, n - 1, 1, None), (n - 2, n, 1, None)]
        return tuple(edges)
    if t.series == "G":
        return ((0, 2, 1, None), (1, 2, 3, 1))
    if t.series == "F":
        return ((0, 1, 1, None), (1, 2, 1, None), (2, 3, 2, 3), (3, 4, 1, None))
    # E series: chain 1-3-4-...-n with node 2 hanging off node 4.
    chain = [(1, 3, 1, None)] + [(i, i + 1, 1, None) for i in range(3, n)]
    chain.append((2, 4, 1, None))
    affine = {6: (0, 2, 1, None), 7: (0, 1, 1, None), 8: (0, 8, 1, None)}[n]
    return tuple(chain) + (affine,)


@dataclass(frozen=True)
class CartanDatum:
    """The full static record for one type."""

    cartan_type: CartanType
    weyl_order: int
    degrees: tuple[int, ...]
    bad_primes: frozenset[int]
    highest_root_coeffs: tuple[int, ...]
    z_value: int
    extended_diagram: tuple[Edge, ...]

    @property
    def coxeter_number(self) -> int:
        return max(self.degrees) if self.degrees else 1


def _prime_divisors(n: int) -> set[int]:
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


@lru_cache(maxsize=None)
def datum(t: CartanType) -> CartanDatum:
    """The static record for a canonical type (torus allowed)."""
    if t.is_torus:
        return CartanDatum(t, 1, (), frozenset(), (), 1, ())
    degrees = _degrees(t)
    order = 1
    for d in degrees:
        order *= d
    coeffs = _highest_root_coeffs(t)
    bad = frozenset().union(*(_prime_divisors(c) for c in coeffs)) - {1}
    z = max(coeffs) if coeffs else 1
    return CartanDatum(t, order, degrees, frozenset(bad), coeffs, z, _extended_edges(t))


# ---------------------------------------------------------------------------
# Subsystem enumeration (extend-and-delete closure).


def _classify_component(nodes: tuple[int, ...], edges: list[Edge]) -> CartanType:
    """Recognize the finite type of a connected sub-diagram."""
    n = len(nodes)
    if n == 1:
        return CartanType("A", 1)
    deg: dict[int, int] = {v: 0 for v in nodes}
    for u, v, _, _ in edges:
        deg[u] += 1
        deg[v] += 1
    mult2 = [e for e in edges if e[2] == 2]
    mult3 = [e for e in edges if e[2] == 3]
    if mult3:
        if n != 2:
            raise CartanError("triple bond in a component of size != 2")
        return CartanType("G", 2)
    if mult2:
        if len(mult2) != 1 or max(deg.values()) > 2:
            raise CartanError("unrecognized multiply-laced component")
        u, v, _, short = mult2[0]
        if n == 2:
            return CartanType("B", 2)
        if deg[u] == 2 and deg[v] == 2:
            if n != 4:
                raise CartanError("interior double bond outside F4 shape")
            return CartanType("F", 4)
        tail = u if deg[u] == 1 else v
        return simple_type("B" if short == tail else "C", n)
    # Simply laced: path or a single-branch tree.
    branch_nodes = [v for v in nodes if deg[v] == 3]
    if not branch_nodes:
        if max(deg.values()) > 2:
            raise CartanError("unexpected node of degree > 3")
        return CartanType("A", n)
    if len(branch_nodes) != 1 or max(deg.values()) != 3:
        raise CartanError("unrecognized simply-laced component")
    center = branch_nodes[0]
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    for u, v, _, _ in edges:
        adj[u].append(v)
        adj[v].append(u)
    lengths = []
    for start in adj[center]:
        ln, prev, cur = 1, center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    a, b, c = sorted(lengths, reverse=True)
    if b == 1 and c == 1:
        return simple_type("D", a + 3)
    if (b, c) == (2, 1) and a in (2, 3, 4):
        return CartanType("E", a + 4)
    raise CartanError("unrecognized branched component")


@lru_cache(maxsize=None)
def _deletion_children(t: CartanType) -> frozenset[Subsystem]:
    """Semisimple types of the extended diagram of t minus any nonempty
    node subset.  Classification is memoized per connected-component
    bitmask, so the subset walk stays cheap.
    """
    edges = datum(t).extended_diagram
    n_nodes = t.rank + 1
    nbr = [0] * n_nodes
    edge_by_pair: dict[tuple[int, int], Edge] = {}
    for u, v, m, s in edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
        edge_by_pair[(min(u, v), max(u, v))] = (u, v, m, s)

    comp_type: dict[int, CartanType] = {}

    def classify(mask: int) -> CartanType:
        cached = comp_type.get(mask)
        if cached is not None:
            return cached
        nodes = tuple(i for i in range(n_nodes) if mask >> i & 1)
        comp_edges = [
            edge_by_pair[(u, v)]
            for u, v in itertools.combinations(nodes, 2)
            if (u, v) in edge_by_pair
        ]
        ct = _classify_component(nodes, comp_edges)
        comp_type[mask] = ct
        return ct

    results: set[Subsystem] = set()
    full = (1 << n_nodes) - 1
    for kept in range(full):  # every proper subset, including empty
        factors: list[CartanType] = []
        rest = kept
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                grown = 0
                f = frontier
                while f:
                    bit = f & -f
                    f ^= bit
                    grown |= nbr[bit.bit_length() - 1]
                grown &= rest & ~comp
                comp |= grown
                frontier = grown
            factors.append(classify(comp))
            rest &= ~comp
        results.add(Subsystem(tuple(sorted(factors))))
    return frozenset(results)


@lru_cache(maxsize=None)
def pseudo_levi_types(t: CartanType) -> frozenset[Subsystem]:
    """All semisimple types of connected-centralizer subsystems of t:
    the closure of {t} under extending any simple factor and deleting
    a nonempty node subset.  Contains t itself and the empty subsystem.
    """
    if t.is_torus:
        return frozenset({Subsystem(())})
    if t.rank > MAX_ENUMERATION_RANK:
        raise CartanError(
            f"subsystem enumeration capped at rank {MAX_ENUMERATION_RANK}; got {t.name}"
        )
    seen: set[Subsystem] = {Subsystem.of(t)}
    work = [Subsystem.of(t)]
    while work:
        sub = work.pop()
        counted = sorted(set(sub.factors))
        for f in counted:
            remainder = list(sub.factors)
            remainder.remove(f)
            for child in _deletion_children(f):
                nxt = Subsystem(tuple(sorted(remainder + list(child.factors))))
                if nxt not in seen:
                    seen.add(nxt)
                    work.append(nxt)
    return frozenset(seen)


def is_pseudo_levi(t: CartanType, s: Subsystem | str) -> bool:
    """Whether s occurs as the type of a connected centralizer in t."""
    if isinstance(s, str):
        s = Subsystem.parse(s)
    return s in pseudo_levi_types(t)


def levi_subsystems(t: CartanType) -> frozenset[Subsystem]:
    """Semisimple types of Levi subsystems: deletions from the plain
    (unextended) diagram.  Used as a sanity floor for the closure.
    """
    if t.is_torus:
        return frozenset({Subsystem(())})
    edges = [e for e in datum(t).extended_diagram if 0 not in (e[0], e[1])]
    nbr: dict[int, set[int]] = {i: set() for i in range(1, t.rank + 1)}
    pair: dict[tuple[int, int], Edge] = {}
    for u, v, m, s in edges:
        nbr[u].add(v)
        nbr[v].add(u)
        pair[(min(u, v), max(u, v))] = (u, v, m, s)
    out: set[Subsystem] = set()
    nodes = list(range(1, t.rank + 1))
    for r in range(len(nodes) + 1):
        for kept in itertools.combinations(nodes, r):
            keptset = set(kept)
            factors = []
            todo = set(kept)
            while todo:
                comp = {todo.pop()}
                frontier = set(comp)
                while frontier:
                    grown = set()
                    for x in frontier:
                        grown |= nbr[x] & (keptset - comp)
                    comp |= grown
                    frontier = grown
                todo -= comp
                cn = tuple(sorted(comp))
                ce = [pair[(u, v)] for u, v in itertools.combinations(cn, 2) if (u, v) in pair]
                factors.append(_classify_component(cn, ce))
            out.add(Subsystem(tuple(sorted(factors))))
    return frozenset(out)

"""Finitely presented unstable modules over the mod-2 Steenrod algebra.

A module is a graded basis with a sparse action of the squares Sq^k, and
optionally a cup product table. The axioms checked by validate():

  degree shift   Sq^k maps degree d to degree d + k
  instability    Sq^k u = 0 for k > deg(u)
  square rule    Sq^(deg u) u = u cup u            (needs the cup table)
  Cartan         Sq^i(x y) = sum_j Sq^j(x) Sq^(i-j)(y)   (needs the cup table)
  Adem           Sq^a Sq^b for a < 2b expands as the usual sum

When no cup table is stored the square rule and Cartan checks are skipped and
the report says so. A cup table, when present, is read as a complete
symmetric multiplication table: pairs that are not stored multiply to zero
(every product landing above the top degree vanishes regardless).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Mapping

from .gf2 import F2Vector
from .report import FAIL, NOTE, Report


class UnknownClass(KeyError):
    """A class name that is not part of the module basis."""


class Sq1NotZero(ValueError):
    """Raised when an operation requires Sq^1 = 0 and the module has Sq^1 != 0."""


@dataclass(frozen=True, eq=True)
class UnstableModule:
    """Graded basis, sparse Sq table, optional cup table, top nonzero degree.

    basis entries are (name, degree) in declaration order; sq maps
    k -> {source name -> frozenset of target names}; cup maps a normalized
    (name, name) pair to a frozenset of result names, or is None when the
    product structure is unknown.
    """

    basis: tuple
    sq: Mapping[int, Mapping[str, frozenset]]
    cup: Mapping[tuple, frozenset] | None
    top_degree: int

    @cached_property
    def _degree(self) -> dict[str, int]:
        return {name: deg for name, deg in self.basis}

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, (name, _) in enumerate(self.basis)}

    @cached_property
    def _by_degree(self) -> dict[int, tuple]:
        out: dict[int, list] = {}
        for name, deg in self.basis:
            out.setdefault(deg, []).append(name)
        return {d: tuple(names) for d, names in out.items()}

    def degree(self, name: str) -> int:
        try:
            return self._degree[name]
        except KeyError:
            raise UnknownClass(name) from None

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownClass(name) from None

    def classes_in_degree(self, d: int) -> tuple:
        return self._by_degree.get(d, ())

    def unit(self) -> str | None:
        names = self.classes_in_degree(0)
        return names[0] if names else None

    def zero(self, degree: int) -> F2Vector:
        return F2Vector(degree, frozenset())

    def basis_vector(self, name: str) -> F2Vector:
        return F2Vector(self.degree(name), frozenset({name}))

    def vector(self, names, degree: int | None = None) -> F2Vector:
        """Sum of basis classes; they must sit in one common degree."""
        names = frozenset(names)
        degrees = {self.degree(n) for n in names}
        if len(degrees) > 1:
            raise ValueError(f"mixed degrees {sorted(degrees)} in {sorted(names)}")
        if degrees:
            degree = degrees.pop()
        elif degree is None:
            degree = 0
        return F2Vector(degree, names)

    def _sq_class(self, k: int, name: str) -> frozenset:
        return self.sq.get(k, {}).get(name, frozenset())

    def cup_classes(self, x: str, y: str) -> frozenset:
        """Product of two basis classes under the stored table."""
        if self.cup is None:
            raise ValueError("module has no cup table")
        unit = self.unit()
        if x == unit:
            return frozenset({y})
        if y == unit:
            return frozenset({x})
        if self.degree(x) + self.degree(y) > self.top_degree:
            return frozenset()
        got = self.cup.get((x, y))
        if got is None:
            got = self.cup.get((y, x), frozenset())
        return got

    def cup_product(self, v: F2Vector, w: F2Vector) -> F2Vector:
        """Bilinear extension of cup_classes."""
        deg = v.degree + w.degree
        acc: set = set()
        for x in v.entries:
            for y in w.entries:
                acc ^= set(self.cup_classes(x, y))
        return F2Vector(deg, frozenset(acc))


def sq(m: UnstableModule, k: int, v: F2Vector) -> F2Vector:
    """Apply Sq^k to a homogeneous vector. Sq^0 is the identity and
    Sq^k v = 0 for k > deg(v) or k < 0.

    >>> m = UnstableModule((("1", 0), ("h", 2), ("h2", 4)),
    ...                    {2: {"h": frozenset({"h2"})}}, None, 4)
    >>> sorted(sq(m, 2, m.basis_vector("h")).entries)
    ['h2']
    >>> sq(m, 3, m.basis_vector("h")).is_zero()
    True
    """
    if k == 0:
        return v
    if k < 0 or k > v.degree:
        return F2Vector(v.degree + k, frozenset())
    acc: set = set()
    for name in v.entries:
        if name not in m._degree:
            raise UnknownClass(name)
        acc ^= set(m._sq_class(k, name))
    return F2Vector(v.degree + k, frozenset(acc))


def is_sq1_zero(m: UnstableModule) -> bool:
    """Whether Sq^1 vanishes identically (true for the empty module)."""
    return not any(m.sq.get(1, {}).values())


def adem_expand(a: int, b: int) -> list[tuple[int, int]]:
    """Adem expansion of Sq^a Sq^b for 1 <= a < 2b, as (x, y) pairs meaning
    Sq^x Sq^y with Sq^0 the identity; pairs with even coefficient are dropped.

    >>> adem_expand(1, 2)
    [(3, 0)]
    >>> adem_expand(1, 1)
    []
    >>> adem_expand(2, 2)
    [(3, 1)]
    """
    if a < 1 or a >= 2 * b:
        raise ValueError(f"Sq^{a} Sq^{b} is not an admissible left side (need 1 <= a < 2b)")
    out = []
    for c in range(a // 2 + 1):
        if comb(b - c - 1, a - 2 * c) % 2:
            out.append((a + b - c, c))
    return out


def _check_names(m: UnstableModule, rep: Report) -> bool:
    known = set(m._degree)
    bad = False
    for k, row in m.sq.items():
        for u, targets in row.items():
            for name in {u} | set(targets):
                if name not in known:
                    rep.add("unknown-class", FAIL,
                            f"sq({k}) entry mentions unknown class {name!r}")
                    bad = True
    for pair, result in (m.cup or {}).items():
        for name in set(pair) | set(result):
            if name not in known:
                rep.add("unknown-class", FAIL,
                        f"cup entry {pair} mentions unknown class {name!r}")
                bad = True
    return bad


def validate(m: UnstableModule) -> Report:
    """Check every axiom the presentation can express; see the module docstring.

    Pure and idempotent. The report carries one entry per violation, plus a
    note for each check that had to be skipped. No failures means valid.
    """
    rep = Report()
    if _check_names(m, rep):
        return rep  # later checks would only cascade

    for k in sorted(m.sq):
        if k < 1:
            rep.add("degree-shift", FAIL, f"sq({k}) stored; squares start at k = 1")
            continue
        for u in sorted(m.sq[k], key=m.index):
            targets = m.sq[k][u]
            du = m.degree(u)
            for t in sorted(targets, key=m.index):
                if m.degree(t) != du + k:
                    rep.add("degree-shift", FAIL,
                            f"Sq^{k} {u} contains {t} of degree {m.degree(t)}, "
                            f"expected degree {du + k}")
            if targets and k > du:
                rep.add("instability", FAIL,
                        f"Sq^{k} {u} is nonzero but k = {k} exceeds deg({u}) = {du}")

    if m.cup is None:
        rep.add("square-rule", NOTE, "no cup table stored; check skipped")
        rep.add("cartan", NOTE, "no cup table stored; check skipped")
    else:
        for name, deg in m.basis:
            if deg < 1:
                continue
            left = sq(m, deg, m.basis_vector(name))
            right = m.cup_product(m.basis_vector(name), m.basis_vector(name))
            if left != right:
                rep.add("square-rule", FAIL,
                        f"Sq^{deg} {name} = {set(left.entries) or 0} but "
                        f"{name} cup {name} = {set(right.entries) or 0}")
        for (x, y) in sorted(m.cup, key=lambda p: (m.index(p[0]), m.index(p[1]))):
            dx, dy = m.degree(x), m.degree(y)
            for t in sorted(m.cup[(x, y)], key=m.index):
                if m.degree(t) != dx + dy:
                    rep.add("degree-shift", FAIL,
                            f"{x} cup {y} contains {t} of degree {m.degree(t)}, "
                            f"expected degree {dx + dy}")
            prod = F2Vector(dx + dy, m.cup.get((x, y), frozenset()))
            for i in range(1, dx + dy + 1):
                left = sq(m, i, prod)
                right = F2Vector(dx + dy + i, frozenset())
                for j in range(i + 1):
                    right += m.cup_product(sq(m, j, m.basis_vector(x)),
                                           sq(m, i - j, m.basis_vector(y)))
                if left != right:
                    rep.add("cartan", FAIL,
                            f"Sq^{i}({x} cup {y}): table gives "
                            f"{set(left.entries) or 0}, Cartan sum gives "
                            f"{set(right.entries) or 0}")

    for b in range(1, m.top_degree + 1):
        for a in range(1, min(2 * b - 1, m.top_degree - b) + 1):
            expansion = adem_expand(a, b)
            for name, deg in m.basis:
                u = m.basis_vector(name)
                left = sq(m, a, sq(m, b, u))
                right = F2Vector(deg + a + b, frozenset())
                for x, y in expansion:
                    right += sq(m, x, sq(m, y, u))
                if left != right:
                    rep.add("adem", FAIL,
                            f"Sq^{a} Sq^{b} {name} = {set(left.entries) or 0} "
                            f"but the Adem expansion gives {set(right.entries) or 0}")
    return rep

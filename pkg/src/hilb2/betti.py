"""Betti numbers of the symmetric square, the configuration space, and the
Hilbert square, plus integral homology of the symmetric square.

All counts are driven by the degrees v_1, ..., v_N of the mod-2 basis of X
(pairs and ladder classes), except for the exact-sequence route to the
Hilbert square, which also uses the kernel computed from the Sq action:

  dim H^m(Hilb) = (E[m-2] - K[m-2]) + (C[m] - K[m-1])

where E, C are the tables for the exceptional divisor and the complement of
the diagonal in the symmetric square, and K is the kernel dimension. The
closed form (valid when Sq^1 = 0) instead counts unordered pairs i <= j,
skipping the diagonal in odd degrees, plus ladder classes v_i + 2p for
1 <= p <= n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from . import kernel, steenrod
from .exdiv import betti_exceptional
from .spaces import BettiTable, ManifoldDescriptor
from .steenrod import Sq1NotZero


class TorsionFlagRequired(ValueError):
    """The integral answer is only implemented for torsion-free input."""


class NegativeRank(ArithmeticError):
    """Exact-sequence bookkeeping produced a negative dimension; the
    descriptor's Sq data is inconsistent with the stated Betti numbers."""


@dataclass(frozen=True)
class GroupProfile:
    """Finitely generated 2-local homology: degree -> (free rank, Z/2 count)."""

    label: str
    top: int
    groups: Mapping[int, tuple]

    def __post_init__(self):
        clean = {k: (f, t) for k, (f, t) in self.groups.items() if f or t}
        object.__setattr__(self, "groups", clean)

    def free_rank(self, k: int) -> int:
        return self.groups.get(k, (0, 0))[0]

    def two_torsion(self, k: int) -> int:
        return self.groups.get(k, (0, 0))[1]

    def mod2_dims(self) -> dict[int, int]:
        """Mod-2 dimensions by universal coefficients: free + torsion from
        this degree and the one below."""
        out: dict[int, int] = {}
        for k in range(self.top + 1):
            v = self.free_rank(k) + self.two_torsion(k) + self.two_torsion(k - 1)
            if v:
                out[k] = v
        return out


@dataclass(frozen=True)
class Hilb2TorsionFlags:
    no_2_torsion: bool
    no_torsion: bool
    torsion_free_even: bool


def _degrees(d: ManifoldDescriptor) -> list[int]:
    return [deg for _, deg in d.module.basis]


def betti_config(d: ManifoldDescriptor) -> BettiTable:
    """The complement of the diagonal in the symmetric square: unordered
    pairs of distinct basis classes, plus one class in degree 2 v_i + j for
    each i and 0 <= j <= 2n - 1 - v_i."""
    degs = _degrees(d)
    dims: dict[int, int] = {}

    def bump(k: int) -> None:
        dims[k] = dims.get(k, 0) + 1

    for x, y in combinations(degs, 2):
        bump(x + y)
    for v in degs:
        for j in range(2 * d.n - v):
            bump(2 * v + j)
    return BettiTable("config", 4 * d.n - 1, dims, noncompact=not d.compact)


def betti_sym2_f2(d: ManifoldDescriptor) -> BettiTable:
    """Mod-2 homology of the symmetric square: unordered pairs of distinct
    classes, one class in every degree v_i + 2 .. 2 v_i for v_i > 0, and the
    diagonal point class for v_i = 0."""
    degs = _degrees(d)
    dims: dict[int, int] = {}

    def bump(k: int) -> None:
        dims[k] = dims.get(k, 0) + 1

    for x, y in combinations(degs, 2):
        bump(x + y)
    for v in degs:
        if v == 0:
            bump(0)
        else:
            for k in range(v + 2, 2 * v + 1):
                bump(k)
    return BettiTable("sym2", 4 * d.n, dims, noncompact=not d.compact)


def integral_sym2(d: ManifoldDescriptor) -> GroupProfile:
    """Integral homology of the symmetric square of a torsion-free X:
    a Z for every unordered pair i <= j except odd diagonals, and Z/2
    ladders below each diagonal square.

    >>> import json
    >>> from hilb2.spaces import load_descriptor
    >>> text = json.dumps({
    ...     "name": "s4", "complex_dimension": 2, "compact": True,
    ...     "classes": [{"name": "1", "degree": 0}, {"name": "v", "degree": 4}],
    ...     "integral": {"two_torsion_free": True, "torsion_free": True,
    ...                  "even_degrees_only": True}})
    >>> sorted(integral_sym2(load_descriptor(text)).groups.items())
    [(0, (1, 0)), (4, (1, 0)), (6, (0, 1)), (8, (1, 0))]
    """
    if not d.integral.torsion_free:
        raise TorsionFlagRequired(
            f"{d.name}: integral_sym2 needs integral.torsion_free = true")
    degs = _degrees(d)
    free: dict[int, int] = {}
    tors: dict[int, int] = {}
    for i, x in enumerate(degs):
        for y in degs[i + 1:]:
            free[x + y] = free.get(x + y, 0) + 1
    for v in degs:
        if v % 2 == 0:
            free[2 * v] = free.get(2 * v, 0) + 1
        stop = 2 * v - 2 if v % 2 == 0 else 2 * v - 1
        for k in range(v + 2, stop + 1, 2):
            tors[k] = tors.get(k, 0) + 1
    groups = {k: (free.get(k, 0), tors.get(k, 0))
              for k in set(free) | set(tors)}
    return GroupProfile("sym2", 4 * d.n, groups)


def betti_hilb2_exact(d: ManifoldDescriptor) -> BettiTable:
    """Hilbert-square Betti numbers assembled from the localization exact
    sequence; works for any valid descriptor."""
    E = betti_exceptional(d)
    C = betti_config(d)
    K = kernel.kernel_dimensions(d, "all")
    dims: dict[int, int] = {}
    for m in range(4 * d.n + 1):
        pushed = E.dim(m - 2) - K.get(m - 2, 0)
        restricted = C.dim(m) - K.get(m - 1, 0)
        if pushed < 0 or restricted < 0:
            raise NegativeRank(
                f"degree {m}: image ranks {pushed} and {restricted}; "
                "kernel dimensions exceed the ambient table")
        if pushed + restricted:
            dims[m] = pushed + restricted
    return BettiTable("hilb2", 4 * d.n, dims, noncompact=not d.compact)


def betti_hilb2_closed(d: ManifoldDescriptor) -> BettiTable:
    """Closed-form Hilbert-square Betti numbers; requires Sq^1 = 0.

    The gate really is Sq^1 = 0 on mod-2 cohomology, not the integral
    two_torsion_free flag: elliptic_y has Z/4 torsion (so the flag is false)
    yet Sq^1 = 0, and the closed form applies.
    """
    if not steenrod.is_sq1_zero(d.module):
        raise Sq1NotZero(f"{d.name}: closed form requires Sq^1 = 0")
    degs = _degrees(d)
    dims: dict[int, int] = {}

    def bump(k: int) -> None:
        dims[k] = dims.get(k, 0) + 1

    for i, x in enumerate(degs):
        for j, y in enumerate(degs[i:], start=i):
            if i == j and x % 2:
                continue
            bump(x + y)
    for v in degs:
        for p in range(1, d.n):
            bump(v + 2 * p)
    return BettiTable("hilb2", 4 * d.n, dims, noncompact=not d.compact)


def torsion_flags_hilb2(d: ManifoldDescriptor) -> Hilb2TorsionFlags:
    """Propagate integral statements from X to its Hilbert square:
    no 2-torsion and no torsion pass through; torsion-free with an
    even-degree basis on a compact X gives a torsion-free even Hilbert
    square."""
    even = all(deg % 2 == 0 for _, deg in d.module.basis)
    return Hilb2TorsionFlags(
        no_2_torsion=d.integral.two_torsion_free,
        no_torsion=d.integral.torsion_free,
        torsion_free_even=d.integral.torsion_free and even and d.compact,
    )

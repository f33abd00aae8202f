"""Built-in descriptors: p1, p2, p3, k3, enriques_x, elliptic_y.

The projective spaces carry their full cup tables and the one nonzero square
Sq^2 h = h^2. The K3 surface has an even intersection form, so Sq^2 vanishes
on H^2 and no cup table is needed for any output of this package.

enriques_x is an Enriques surface. Its integral cohomology (Z/2 in H^2 and
H^3, free elsewhere) forces rank Sq^1 = 1, 1, 0 on H^1, H^2, H^3, which the
basis realizes in normal form: Sq^1 t = t2 (the cup square of the degree-1
class) and Sq^1 x1 = s, all other values zero. Sq^2 on H^2 is stored as
zero; the true action is cup product with the canonical class mod 2, but for
a surface (n = 2) no output of this package depends on Sq^2 on H^2, and the
test suite pins that invariance down. elliptic_y has the same mod-2 Betti
numbers with every square zero; its integral torsion is Z/4 rather than Z/2,
so it is not two-torsion-free.

Descriptors are stored as canonical JSON objects; catalog_get parses them
through the ordinary loader, and exports reproduce these bytes exactly.
"""

from __future__ import annotations

import json
import os

from .spaces import ManifoldDescriptor, load_descriptor

CATALOG_DIR_ENV = "HILB2_CATALOG_DIR"


class UnknownCatalogName(KeyError):
    """Name without a built-in descriptor or an override file."""


def _projective(name: str, n: int) -> dict:
    h = ["1"] + [f"h{i}" if i > 1 else "h" for i in range(1, n + 1)]
    deg = {cls: 2 * i for i, cls in enumerate(h)}
    cup = [{"a": h[i], "b": h[j], "result": [h[i + j]]}
           for i in range(1, n + 1) for j in range(i, n + 1) if i + j <= n]
    entry: dict = {
        "name": name,
        "complex_dimension": n,
        "compact": True,
        "classes": [{"name": cls, "degree": deg[cls]} for cls in h],
    }
    # Sq^2 h^k = binom(k, 1) h^(k+1); only k = 1 survives mod 2 within reach
    if n >= 2:
        entry["sq"] = [{"k": 2, "from": "h", "to": ["h2"]}]
    if cup:
        entry["cup"] = cup
    entry["integral"] = {"two_torsion_free": True, "torsion_free": True,
                         "even_degrees_only": True}
    return entry


def _k3() -> dict:
    return {
        "name": "k3",
        "complex_dimension": 2,
        "compact": True,
        "classes": ([{"name": "1", "degree": 0}]
                    + [{"name": f"a{i}", "degree": 2} for i in range(1, 23)]
                    + [{"name": "top", "degree": 4}]),
        "integral": {"two_torsion_free": True, "torsion_free": True,
                     "even_degrees_only": True},
    }


def _surface_with_torsion(name: str, names2: list[str],
                          sq1: list[dict] | None) -> dict:
    entry: dict = {
        "name": name,
        "complex_dimension": 2,
        "compact": True,
        "classes": ([{"name": "1", "degree": 0}, {"name": "t", "degree": 1}]
                    + [{"name": c, "degree": 2} for c in names2]
                    + [{"name": "s", "degree": 3}, {"name": "top", "degree": 4}]),
    }
    if sq1:
        entry["sq"] = sq1
    entry["integral"] = {"two_torsion_free": False, "torsion_free": False,
                         "even_degrees_only": False}
    return entry


_CATALOG: dict[str, dict] = {
    "p1": _projective("p1", 1),
    "p2": _projective("p2", 2),
    "p3": _projective("p3", 3),
    "k3": _k3(),
    "enriques_x": _surface_with_torsion(
        "enriques_x",
        ["t2"] + [f"x{i}" for i in range(1, 12)],
        [{"k": 1, "from": "t", "to": ["t2"]},
         {"k": 1, "from": "x1", "to": ["s"]}]),
    "elliptic_y": _surface_with_torsion(
        "elliptic_y", [f"y{i}" for i in range(1, 13)], None),
}


def catalog_names() -> tuple:
    return tuple(_CATALOG)


def catalog_text(name: str) -> str:
    """The canonical JSON text for a catalog entry (override dir respected)."""
    override = os.environ.get(CATALOG_DIR_ENV)
    if override:
        path = os.path.join(override, f"{name}.json")
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                return fh.read()
    if name not in _CATALOG:
        raise UnknownCatalogName(name)
    return json.dumps(_CATALOG[name], indent=2) + "\n"


def catalog_get(name: str) -> ManifoldDescriptor:
    """Load a built-in space by name; HILB2_CATALOG_DIR overrides built-ins."""
    return load_descriptor(catalog_text(name))

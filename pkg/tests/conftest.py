"""Shared descriptor builders for the test suite."""

import json

from hilb2 import load_descriptor, parse_descriptor


def descriptor_obj(n, degrees=None, classes=None, sq=None, cup=None,
                   integral=None, compact=True, name="fixture"):
    """Assemble a descriptor dict.

    Either pass explicit class dicts, or a list of degrees to get
    auto-named classes c0, c1, ... in that order.
    """
    if classes is None:
        classes = [{"name": "c%d" % i, "degree": k}
                   for i, k in enumerate(degrees)]
    obj = {
        "name": name,
        "complex_dimension": n,
        "compact": compact,
        "classes": classes,
    }
    if sq is not None:
        obj["sq"] = sq
    if cup is not None:
        obj["cup"] = cup
    if integral is not None:
        obj["integral"] = integral
    return obj


def make_descriptor(**kw):
    return load_descriptor(json.dumps(descriptor_obj(**kw)))


def parse_only(**kw):
    """Structurally parsed descriptor, axiom checks deliberately skipped."""
    return parse_descriptor(json.dumps(descriptor_obj(**kw)))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one line per acceptance criterion at the end of the run."""
    rows = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if getattr(rep, "when", "call") != "call":
                continue
            name = rep.nodeid.rsplit("::", 1)[-1]
            if name.startswith("test_criterion_"):
                rows.append((name, rep.outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(rows):
        terminalreporter.write_line(
            "%s: %s" % (name, "PASS" if outcome == "passed" else "FAIL"))


def sphere(k, n, torsion_free=True):
    """One class in degree 0 and one in degree k.

    Compact only when k = 2n, so the unique top class sits where duality
    expects it.
    """
    integral = None
    if torsion_free:
        integral = {"two_torsion_free": True, "torsion_free": True,
                    "even_degrees_only": k % 2 == 0}
    return make_descriptor(n=n, degrees=[0, k], compact=(k == 2 * n),
                           integral=integral, name="sphere%d" % k)

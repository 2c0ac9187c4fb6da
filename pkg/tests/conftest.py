"""Shared builders for the test suite."""
from vafw.core import validate


def make_vaf(values, assignment, attacks=()):
    return validate({
        "values": list(values),
        "arguments": [{"id": a, "value": v} for a, v in sorted(assignment.items())],
        "attacks": [list(p) for p in attacks],
    })


def mono_cycle(n, value="v", prefix="x"):
    names = [f"{prefix}{i}" for i in range(n)]
    attacks = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return make_vaf([value], {a: value for a in names}, attacks)

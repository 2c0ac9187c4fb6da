"""Bundled example frameworks with pinned expected results.

The ``expected`` blocks are regression anchors: tests must recompute every
entry with the engine and compare, never echo these values back from
within the engine itself.  Each block carries a short provenance note per
field: "worked analysis" marks results fixed ahead of time by hand,
"solver" marks results first computed by the reference oracle and then
frozen.
"""
from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType

from .core import Vaf
from .docio import ArgumentSpec, FrameworkDocument, OrderSpec, build_vaf
from .errors import VafError


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    document: FrameworkDocument
    expected: MappingProxyType


def _doc(values, argument_values, attacks, orders=()):
    return FrameworkDocument(
        values=tuple(values),
        arguments=tuple(ArgumentSpec(id=a, value=v)
                        for a, v in sorted(argument_values.items())),
        attacks=tuple(sorted(attacks)),
        orders=tuple(OrderSpec(name=n, ranking=tuple(r)) for n, r in orders),
    )


_LIFE_PROPERTY_ORDERS = (("life-first", ("life", "property")),
                         ("property-first", ("property", "life")))

_RAW = []


def _fixture(name, description, document, expected):
    _RAW.append(Fixture(name=name, description=description, document=document,
                        expected=MappingProxyType(expected)))


_fixture(
    "hal-carla",
    "Two-audience dispute over six arguments and two values; the flagship "
    "worked example with one blocked attack per audience.",
    _doc(
        ("life", "property"),
        dict(a="life", b="property", c="life", d="property", e="life", f="life"),
        [("b", "a"), ("b", "e"), ("c", "b"), ("d", "c"),
         ("a", "d"), ("e", "a"), ("f", "c"), ("a", "f")],
        _LIFE_PROPERTY_ORDERS,
    ),
    {
        "extensions": [
            {"ranking": ["life", "property"], "members": ["b", "d", "e", "f"]},
            {"ranking": ["property", "life"], "members": ["b", "d", "f"]},
        ],
        "defeats": {
            "ranking": ["life", "property"],
            "edges": [["a", "d"], ["a", "f"], ["c", "b"], ["e", "a"], ["f", "c"]],
        },
        "statuses": {"a": "Indefensible", "b": "Objective", "c": "Indefensible",
                     "d": "Objective", "e": "Subjective", "f": "Objective"},
        "order_count": 2,
        "chains": [["a"], ["b"], ["c"], ["d"], ["e", "a"], ["f", "c"]],
        "provenance": {"extensions": "worked analysis",
                       "defeats": "solver; the blocked d->c attack is excluded",
                       "statuses": "worked analysis",
                       "chains": "solver"},
    },
)

_fixture(
    "hal-carla-4cycle",
    "Four arguments in a single attack cycle with strictly alternating "
    "values; every argument flips with the audience.",
    _doc(
        ("life", "property"),
        dict(a="life", b="property", c="life", d="property"),
        [("b", "a"), ("c", "b"), ("d", "c"), ("a", "d")],
        _LIFE_PROPERTY_ORDERS,
    ),
    {
        "extensions": [
            {"ranking": ["life", "property"], "members": ["a", "c"]},
            {"ranking": ["property", "life"], "members": ["b", "d"]},
        ],
        "statuses": {"a": "Subjective", "b": "Subjective",
                     "c": "Subjective", "d": "Subjective"},
        "order_count": 2,
        "provenance": {"extensions": "worked analysis",
                       "statuses": "worked analysis"},
    },
)

_fixture(
    "hal-carla-5cycle",
    "Five-argument cycle with a single off-colour member; the odd length "
    "makes the lone off-colour argument objectively acceptable.",
    _doc(
        ("life", "property"),
        dict(e="life", a="life", f="life", c="life", b="property"),
        [("e", "a"), ("a", "f"), ("f", "c"), ("c", "b"), ("b", "e")],
        _LIFE_PROPERTY_ORDERS,
    ),
    {
        "extensions": [
            {"ranking": ["life", "property"], "members": ["b", "e", "f"]},
            {"ranking": ["property", "life"], "members": ["a", "b", "c"]},
        ],
        "statuses": {"a": "Subjective", "b": "Objective", "c": "Subjective",
                     "e": "Subjective", "f": "Subjective"},
        "order_count": 2,
        "provenance": {"extensions": "worked analysis",
                       "statuses": "worked analysis"},
    },
)

_fixture(
    "pharmacist",
    "Five-argument variant of the flagship dispute with the insurance "
    "argument removed; nothing survives every audience.",
    _doc(
        ("life", "property"),
        dict(a="life", b="property", c="life", d="property", f="life"),
        [("b", "a"), ("c", "b"), ("d", "c"), ("a", "d"), ("f", "c"), ("a", "f")],
        _LIFE_PROPERTY_ORDERS,
    ),
    {
        "extensions": [
            {"ranking": ["life", "property"], "members": ["a", "c"]},
            {"ranking": ["property", "life"], "members": ["b", "d", "f"]},
        ],
        "statuses": {"a": "Subjective", "b": "Subjective", "c": "Subjective",
                     "d": "Subjective", "f": "Subjective"},
        "order_count": 2,
        "chains": [["a", "f", "c"], ["b"], ["c"], ["d"]],
        "provenance": {"extensions": "worked analysis",
                       "statuses": "worked analysis",
                       "chains": "worked analysis"},
    },
)

_fixture(
    "pharmacist-extended",
    "The five-argument dispute plus a three-argument chain attacking its "
    "strongest member; the addition settles every status.",
    _doc(
        ("life", "property"),
        dict(a="life", b="property", c="life", d="property", f="life",
             g="life", h="life", k="life"),
        [("b", "a"), ("c", "b"), ("d", "c"), ("a", "d"), ("f", "c"), ("a", "f"),
         ("g", "a"), ("h", "g"), ("k", "h")],
        _LIFE_PROPERTY_ORDERS,
    ),
    {
        "extensions": [
            {"ranking": ["life", "property"], "members": ["b", "d", "f", "g", "k"]},
            {"ranking": ["property", "life"], "members": ["b", "d", "f", "g", "k"]},
        ],
        "statuses": {"a": "Indefensible", "b": "Objective", "c": "Indefensible",
                     "d": "Objective", "f": "Objective", "g": "Objective",
                     "h": "Indefensible", "k": "Objective"},
        "order_count": 2,
        "chains": [["a"], ["b"], ["c"], ["d"], ["f", "c"], ["k", "h", "g", "a"]],
        "provenance": {"extensions": "solver",
                       "statuses": "worked analysis for a, b, c, d, f; "
                                   "solver for g, h, k",
                       "chains": "worked analysis"},
    },
)

_fixture(
    "converging-chains",
    "Seven arguments over a single value: two attack chains sharing a "
    "terminus plus one isolated argument.",
    _doc(
        ("grey",),
        {k: "grey" for k in "abcdefg"},
        [("a", "b"), ("b", "c"), ("c", "d"), ("e", "f"), ("f", "g"), ("g", "c")],
        (("grey-only", ("grey",)),),
    ),
    {
        "extensions": [
            {"ranking": ["grey"], "members": ["a", "d", "e", "g"]},
        ],
        "statuses": {"a": "Objective", "b": "Indefensible", "c": "Indefensible",
                     "d": "Objective", "e": "Objective", "f": "Indefensible",
                     "g": "Objective"},
        "order_count": 1,
        "chains": [["a", "b", "c"], ["d"], ["e", "f", "g", "c"]],
        "provenance": {"extensions": "worked analysis",
                       "statuses": "solver",
                       "chains": "worked analysis"},
    },
)

_fixture(
    "split-chains",
    "Two-value line of six arguments; a doubly attacked member splits the "
    "blue run into separate chains.",
    _doc(
        ("blue", "red"),
        dict(a="red", b="blue", c="blue", d="blue", e="blue", f="red"),
        [("a", "b"), ("b", "c"), ("f", "c"), ("c", "d"), ("d", "e")],
        (("blue-first", ("blue", "red")), ("red-first", ("red", "blue"))),
    ),
    {
        "extensions": [
            {"ranking": ["blue", "red"], "members": ["a", "b", "d", "f"]},
            {"ranking": ["red", "blue"], "members": ["a", "d", "f"]},
        ],
        "statuses": {"a": "Objective", "b": "Subjective", "c": "Indefensible",
                     "d": "Objective", "e": "Indefensible", "f": "Objective"},
        "order_count": 2,
        "chains": [["a"], ["b", "c"], ["c"], ["d", "e"], ["f"]],
        "provenance": {"extensions": "solver",
                       "statuses": "worked analysis",
                       "chains": "worked analysis"},
    },
)

_fixture(
    "seven-cycle",
    "Seven-argument cycle over three values in runs of 2, 3 and 2; shows a "
    "cycle member rejected by exactly one of the six audiences.",
    _doc(
        ("blue", "green", "red"),
        {"b1": "blue", "b2": "blue", "r1": "red", "r2": "red", "r3": "red",
         "g1": "green", "g2": "green"},
        [("b1", "b2"), ("b2", "r1"), ("r1", "r2"), ("r2", "r3"),
         ("r3", "g1"), ("g1", "g2"), ("g2", "b1")],
    ),
    {
        "statuses": {"b1": "Subjective", "b2": "Subjective",
                     "r1": "Objective", "r2": "Indefensible", "r3": "Objective",
                     "g1": "Subjective", "g2": "Subjective"},
        "order_count": 6,
        "b1_accepting_order_count": 5,
        "b1_rejecting_orders": [["red", "green", "blue"]],
        "provenance": {"statuses": "solver",
                       "b1_accepting_order_count": "worked analysis",
                       "b1_rejecting_orders": "solver"},
    },
)

_BY_NAME = {f.name: f for f in _RAW}

FIXTURE_NAMES = tuple(f.name for f in _RAW)


def get_fixture(name: str) -> Fixture:
    try:
        return _BY_NAME[name]
    except KeyError:
        known = ", ".join(FIXTURE_NAMES)
        raise VafError("UnknownFixture",
                       f"no fixture named {name!r}; known fixtures: {known}") from None


def fixture_vaf(name: str) -> Vaf:
    return build_vaf(get_fixture(name).document)


def all_fixtures() -> tuple:
    return tuple(_RAW)

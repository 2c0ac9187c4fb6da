"""Framework documents: JSON parsing, canonical serialization, APX import,
and Graphviz DOT export."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .core import Vaf, validate
from .errors import FrameworkSyntaxError, SchemaError, ValidationError

DOCUMENT_VERSION = 1

# Fill palette; assignment is by first appearance over sorted argument ids so
# recolouring is stable under attack edits.
PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
)


@dataclass(frozen=True)
class ArgumentSpec:
    id: str
    value: str
    label: str = ""


@dataclass(frozen=True)
class OrderSpec:
    name: str
    ranking: tuple


@dataclass(frozen=True)
class FrameworkDocument:
    values: tuple
    arguments: tuple
    attacks: tuple
    orders: tuple = ()
    version: int = DOCUMENT_VERSION


def _expect(cond: bool, fieldname: str, message: str):
    if not cond:
        raise SchemaError(fieldname, message)


def _string_list(raw, fieldname: str) -> tuple:
    _expect(isinstance(raw, list), fieldname, "must be an array")
    for i, item in enumerate(raw):
        _expect(isinstance(item, str), f"{fieldname}[{i}]", "must be a string")
    return tuple(raw)


def _parse_arguments(raw) -> tuple:
    _expect(isinstance(raw, list), "arguments", "must be an array")
    specs = []
    for i, item in enumerate(raw):
        where = f"arguments[{i}]"
        _expect(isinstance(item, dict), where, "must be an object")
        _expect("id" in item, f"{where}.id", "is required")
        _expect(isinstance(item["id"], str), f"{where}.id", "must be a string")
        _expect("value" in item, f"{where}.value", "is required")
        _expect(isinstance(item["value"], str), f"{where}.value", "must be a string")
        label = item.get("label", "")
        _expect(isinstance(label, str), f"{where}.label", "must be a string")
        specs.append(ArgumentSpec(id=item["id"], value=item["value"], label=label))
    return tuple(specs)


def _parse_attacks(raw) -> tuple:
    _expect(isinstance(raw, list), "attacks", "must be an array")
    pairs = []
    for i, item in enumerate(raw):
        where = f"attacks[{i}]"
        _expect(isinstance(item, list) and len(item) == 2, where,
                "must be a two-element array [attacker, target]")
        _expect(all(isinstance(x, str) for x in item), where,
                "attacker and target must be strings")
        pairs.append((item[0], item[1]))
    return tuple(pairs)


def _parse_orders(raw) -> tuple:
    _expect(isinstance(raw, list), "orders", "must be an array")
    specs = []
    for i, item in enumerate(raw):
        where = f"orders[{i}]"
        _expect(isinstance(item, dict), where, "must be an object")
        _expect("name" in item and isinstance(item["name"], str),
                f"{where}.name", "is required and must be a string")
        ranking = _string_list(item.get("ranking", None) or [], f"{where}.ranking")
        _expect(len(ranking) > 0, f"{where}.ranking", "is required and must be non-empty")
        specs.append(OrderSpec(name=item["name"], ranking=ranking))
    return tuple(specs)


def parse_framework(text: str) -> FrameworkDocument:
    """Parse a JSON framework document.

    Malformed JSON raises FrameworkSyntaxError with line and column; a
    well-formed JSON value of the wrong shape raises SchemaError naming the
    offending field.  Semantic problems (unknown ids and the like) are left
    to build_vaf.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrameworkSyntaxError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    _expect(isinstance(raw, dict), "$", "document must be a JSON object")
    _expect("version" in raw, "version", "is required")
    _expect(raw["version"] == DOCUMENT_VERSION, "version",
            f"must be {DOCUMENT_VERSION}")
    _expect("values" in raw, "values", "is required")
    _expect("arguments" in raw, "arguments", "is required")
    _expect("attacks" in raw, "attacks", "is required")
    return FrameworkDocument(
        values=_string_list(raw["values"], "values"),
        arguments=_parse_arguments(raw["arguments"]),
        attacks=_parse_attacks(raw["attacks"]),
        orders=_parse_orders(raw["orders"]) if "orders" in raw else (),
    )


def build_vaf(doc: FrameworkDocument) -> Vaf:
    return validate({
        "values": list(doc.values),
        "arguments": [
            {"id": a.id, "value": a.value, **({"label": a.label} if a.label else {})}
            for a in doc.arguments
        ],
        "attacks": [list(p) for p in doc.attacks],
    })


def document_from_vaf(vaf: Vaf, orders=()) -> FrameworkDocument:
    return FrameworkDocument(
        values=tuple(sorted(vaf.values)),
        arguments=tuple(ArgumentSpec(id=a, value=vaf.value_of(a),
                                     label=vaf.labels.get(a, ""))
                        for a in vaf.arguments),
        attacks=vaf.sorted_attacks,
        orders=tuple(OrderSpec(name=o.name, ranking=tuple(o.ranking))
                     for o in orders),
    )


def serialize_framework(doc: FrameworkDocument) -> str:
    """Canonical form: fixed key order, sorted entries, 2-space indent,
    trailing newline.  Serializing a parse of the output is byte-identical."""
    payload = {
        "version": doc.version,
        "values": sorted(doc.values),
        "arguments": [
            {"id": a.id, "value": a.value, **({"label": a.label} if a.label else {})}
            for a in sorted(doc.arguments, key=lambda a: a.id)
        ],
        "attacks": [list(p) for p in sorted(doc.attacks)],
    }
    if doc.orders:
        payload["orders"] = [
            {"name": o.name, "ranking": list(o.ranking)}
            for o in sorted(doc.orders, key=lambda o: o.name)
        ]
    return json.dumps(payload, indent=2) + "\n"


_APX_LINE = re.compile(
    r"^(?P<kind>arg|att)\(\s*(?P<first>[A-Za-z0-9_-]+)\s*"
    r"(?:,\s*(?P<second>[A-Za-z0-9_-]+)\s*)?\)\.$")


def parse_apx(text: str, assignments=None, default_value: str = "",
              extra_values=()) -> FrameworkDocument:
    """Import the common `arg(x). att(x,y).` text format.

    The format carries no value information, so a value map (and/or a
    default) must be supplied alongside.
    """
    assignments = dict(assignments or {})
    arguments, attacks, seen = [], [], set()
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.strip()
        if not line or line.startswith(("%", "#")):
            continue
        m = _APX_LINE.match(line)
        if m is None:
            col = rawline.index(rawline.strip()[0]) + 1
            raise FrameworkSyntaxError(
                f"expected 'arg(x).' or 'att(x,y).', got {line!r}",
                line=lineno, column=col)
        kind, first, second = m.group("kind", "first", "second")
        if kind == "arg":
            if second is not None:
                raise FrameworkSyntaxError("arg(...) takes one identifier",
                                           line=lineno, column=1)
            if first not in seen:
                seen.add(first)
                arguments.append(first)
        else:
            if second is None:
                raise FrameworkSyntaxError("att(...) takes two identifiers",
                                           line=lineno, column=1)
            attacks.append((first, second))
    issues = []
    specs = []
    for arg in arguments:
        value = assignments.get(arg, default_value)
        if not value:
            issues.append(("UnmappedArgumentValue",
                           f"no value assigned for argument {arg!r} and no default given"))
        specs.append(ArgumentSpec(id=arg, value=value))
    if issues:
        raise ValidationError(issues)
    values = sorted(set(a.value for a in specs) | set(extra_values))
    return FrameworkDocument(values=tuple(values), arguments=tuple(specs),
                             attacks=tuple(attacks))


def _value_colour_ranks(vaf: Vaf) -> dict:
    """Palette slots by first appearance over sorted argument ids, then any
    declared-but-unused values in name order."""
    ranks, k = {}, 0
    for arg in vaf.arguments:
        v = vaf.value_of(arg)
        if v not in ranks:
            ranks[v] = k
            k += 1
    for v in sorted(vaf.values):
        if v not in ranks:
            ranks[v] = k
            k += 1
    return ranks


_STATUS_STYLE = {
    "Objective": ', penwidth=2.4',
    "Subjective": ', style="filled,dashed"',
    "Indefensible": ', style="filled,dotted"',
}


def export_dot(vaf: Vaf, statuses=None, name: str = "framework") -> str:
    """Graphviz text: one node per argument filled by value colour, one edge
    per attack.  With a status map, border style and a label suffix mark each
    argument's acceptance across audiences."""
    ranks = _value_colour_ranks(vaf)
    lines = [f"digraph {name} {{",
             "  rankdir=LR;",
             '  node [shape=ellipse, style=filled, fontname="Helvetica"];']
    for arg in vaf.arguments:
        value = vaf.value_of(arg)
        colour = PALETTE[ranks[value] % len(PALETTE)]
        label = f"{arg}\\n{value}"
        extra = ""
        if statuses is not None:
            status = str(statuses[arg])
            label += f"\\n({status})"
            extra = _STATUS_STYLE[status]
        lines.append(f'  "{arg}" [label="{label}", fillcolor="{colour}"{extra}];')
    for attacker, target in vaf.sorted_attacks:
        lines.append(f'  "{attacker}" -> "{target}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r'^  "[^"]+" \[[^\[\]]*\];$')
_DOT_EDGE = re.compile(r'^  "[^"]+" -> "[^"]+";$')
_DOT_ATTR = re.compile(r"^  [a-z]+=[A-Za-z]+;$|^  [a-z]+ \[[^\[\]]*\];$")


def dot_lint(text: str) -> list:
    """Light structural check on exported DOT; empty list means well formed."""
    problems = []
    lines = text.splitlines()
    if not lines or not re.match(r"^digraph [A-Za-z_][A-Za-z0-9_]* \{$", lines[0]):
        problems.append("missing digraph header")
        return problems
    if lines[-1] != "}":
        problems.append("missing closing brace")
    for i, line in enumerate(lines[1:-1], start=2):
        if not (_DOT_NODE.match(line) or _DOT_EDGE.match(line) or _DOT_ATTR.match(line)):
            problems.append(f"line {i}: unrecognised statement {line!r}")
        if line.count('"') % 2 != 0:
            problems.append(f"line {i}: unbalanced quotes")
    if not text.endswith("\n"):
        problems.append("missing trailing newline")
    return problems

"""Document parsing, canonical serialization, APX import, DOT export."""
import json

import pytest

from conftest import make_vaf
from vafw.audience import status_map
from vafw.docio import (PALETTE, build_vaf, document_from_vaf, dot_lint,
                        export_dot, parse_apx, parse_framework,
                        serialize_framework)
from vafw.errors import FrameworkSyntaxError, SchemaError, ValidationError
from vafw.fixtures import FIXTURE_NAMES, get_fixture, fixture_vaf

MINIMAL = {"version": 1, "values": ["v"],
           "arguments": [{"id": "a", "value": "v"}], "attacks": []}


def test_round_trip_is_byte_stable_for_every_fixture():
    for name in FIXTURE_NAMES:
        text = serialize_framework(get_fixture(name).document)
        assert serialize_framework(parse_framework(text)) == text, name
        assert text.endswith("\n")


def test_serialization_sorts_and_orders_keys():
    doc = parse_framework(json.dumps({
        "version": 1, "values": ["w", "v"],
        "arguments": [{"id": "b", "value": "w"}, {"id": "a", "value": "v"}],
        "attacks": [["b", "a"], ["a", "b"]]}))
    text = serialize_framework(doc)
    payload = json.loads(text)
    assert list(payload) == ["version", "values", "arguments", "attacks"]
    assert payload["values"] == ["v", "w"]
    assert [a["id"] for a in payload["arguments"]] == ["a", "b"]
    assert payload["attacks"] == [["a", "b"], ["b", "a"]]


def test_labels_and_orders_survive_the_round_trip():
    raw = {"version": 1, "values": ["v"],
           "arguments": [{"id": "a", "value": "v", "label": "opening point"}],
           "attacks": [],
           "orders": [{"name": "only", "ranking": ["v"]}]}
    doc = parse_framework(json.dumps(raw))
    assert doc.arguments[0].label == "opening point"
    assert doc.orders[0].name == "only"
    vaf = build_vaf(doc)
    assert vaf.labels["a"] == "opening point"
    again = document_from_vaf(vaf, doc.orders)
    assert serialize_framework(again) == serialize_framework(doc)


def test_syntax_error_carries_line_and_column():
    with pytest.raises(FrameworkSyntaxError) as err:
        parse_framework('{"version": 1,\n  "values": [,]\n}')
    assert err.value.line == 2
    assert err.value.column > 0


@pytest.mark.parametrize("mutate, field", [
    (lambda d: d.pop("version"), "version"),
    (lambda d: d.update(version=2), "version"),
    (lambda d: d.pop("values"), "values"),
    (lambda d: d.update(values="v"), "values"),
    (lambda d: d.update(values=[1]), "values[0]"),
    (lambda d: d.update(arguments=[{"value": "v"}]), "arguments[0].id"),
    (lambda d: d.update(arguments=[{"id": "a"}]), "arguments[0].value"),
    (lambda d: d.update(attacks=[["a"]]), "attacks[0]"),
    (lambda d: d.update(attacks=[["a", 2]]), "attacks[0]"),
    (lambda d: d.update(orders=[{"ranking": ["v"]}]), "orders[0].name"),
    (lambda d: d.update(orders=[{"name": "x", "ranking": []}]), "orders[0].ranking"),
])
def test_schema_errors_name_the_field(mutate, field):
    raw = json.loads(json.dumps(MINIMAL))
    mutate(raw)
    with pytest.raises(SchemaError) as err:
        parse_framework(json.dumps(raw))
    assert err.value.field == field


def test_non_object_document_rejected():
    with pytest.raises(SchemaError) as err:
        parse_framework("[1, 2]")
    assert err.value.field == "$"


def test_build_vaf_surfaces_semantic_issues():
    doc = parse_framework(json.dumps({
        "version": 1, "values": ["v"],
        "arguments": [{"id": "a", "value": "v"}], "attacks": [["a", "zz"]]}))
    with pytest.raises(ValidationError):
        build_vaf(doc)


def test_apx_import_with_assignments_and_default():
    text = "% preamble\narg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\n"
    doc = parse_apx(text, assignments={"a": "red"}, default_value="blue")
    assert [(s.id, s.value) for s in doc.arguments] == [
        ("a", "red"), ("b", "blue"), ("c", "blue")]
    assert doc.attacks == (("a", "b"), ("b", "c"))
    assert doc.values == ("blue", "red")
    build_vaf(doc)


def test_apx_rejects_malformed_lines_with_position():
    with pytest.raises(FrameworkSyntaxError) as err:
        parse_apx("arg(a).\n  fact(b).\n", assignments={"a": "v"})
    assert err.value.line == 2
    assert err.value.column == 3


def test_apx_without_value_information_fails_closed():
    with pytest.raises(ValidationError) as err:
        parse_apx("arg(a).\narg(b).\n", assignments={"a": "v"})
    assert any(code == "UnmappedArgumentValue" for code, _ in err.value.issues)


def test_dot_export_lints_clean_with_and_without_statuses():
    vaf = fixture_vaf("hal-carla")
    plain = export_dot(vaf)
    decorated = export_dot(vaf, statuses=status_map(vaf).statuses)
    assert dot_lint(plain) == []
    assert dot_lint(decorated) == []
    assert '"b" -> "a";' in plain
    assert "(Objective)" in decorated and "(Objective)" not in plain


def test_dot_lint_flags_structural_problems():
    assert dot_lint("graph x {") != []
    problems = dot_lint('digraph x {\n  junk\n}')
    assert any("junk" in p for p in problems)


def test_value_colours_follow_first_appearance_of_sorted_ids():
    vaf = make_vaf(["v", "w"], {"a": "w", "b": "v"}, [])
    dot = export_dot(vaf)
    # 'a' sorts first and promotes w, so w takes the first palette slot
    assert f'"a" [label="a\\nw", fillcolor="{PALETTE[0]}"];' in dot
    assert f'"b" [label="b\\nv", fillcolor="{PALETTE[1]}"];' in dot


def test_more_values_than_palette_slots_wrap_around():
    values = [f"v{i:02}" for i in range(14)]
    assignment = {f"a{i:02}": values[i] for i in range(14)}
    dot = export_dot(make_vaf(values, assignment, []))
    assert dot_lint(dot) == []
    assert dot.count(PALETTE[0]) == 2     # slots 0 and 12 share a colour

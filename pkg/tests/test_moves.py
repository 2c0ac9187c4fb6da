"""Move templates: expansion, replay verification, and the two benchmarks."""
import pytest

from conftest import make_vaf
from vafw.audience import Status, status_of
from vafw.errors import VafError
from vafw.fixtures import fixture_vaf
from vafw.moves import (Move, apply_move, candidate_moves, fresh_argument_id,
                        suggest_moves, template_coverage_report)


def test_fresh_argument_id_skips_collisions():
    vaf = make_vaf(["v"], {"a": "v", "n1": "v", "n2": "v"})
    assert fresh_argument_id(vaf) == "n3"
    assert fresh_argument_id(make_vaf(["v"], {"a": "v"})) == "n1"


def test_apply_move_extends_the_framework():
    vaf = make_vaf(["v", "w"], {"a": "v"})
    out = apply_move(vaf, Move("n1", "w", "a"))
    assert out.arguments == ("a", "n1")
    assert ("n1", "a") in out.attacks
    assert out.value_of("n1") == "w"
    # the original framework is untouched
    assert vaf.arguments == ("a",)


def test_apply_move_guards():
    vaf = make_vaf(["v"], {"a": "v"})
    with pytest.raises(VafError) as err:
        apply_move(vaf, Move("a", "v", "a"))
    assert err.value.code == "DuplicateArgumentId"
    with pytest.raises(VafError) as err:
        apply_move(vaf, Move("n1", "gold", "a"))
    assert err.value.code == "UnknownValue"
    with pytest.raises(VafError) as err:
        apply_move(vaf, Move("n1", "v", "zz"))
    assert err.value.code == "UnknownArgument"


def test_pharmacist_b_objective_benchmark():
    vaf = fixture_vaf("pharmacist")
    moves = suggest_moves(vaf, "b", Status.OBJECTIVE)
    attacked = {(m.attack_target, m.new_value) for m in moves}
    assert ("a", "life") in attacked
    assert ("c", "life") in attacked
    assert all(m.template == "attack-attacking-chain-odd-member-either-colour"
               for m in moves)
    for m in moves:
        assert status_of(apply_move(vaf, m), "b") is Status.OBJECTIVE


def test_flagship_a_objective_is_out_of_reach():
    vaf = fixture_vaf("hal-carla")
    assert suggest_moves(vaf, "a", Status.OBJECTIVE) == ()
    assert suggest_moves(vaf, "a", Status.OBJECTIVE, exhaustive=True) == ()


def test_candidates_are_deterministic_and_deduplicated():
    vaf = fixture_vaf("pharmacist")
    first = candidate_moves(vaf, "b", Status.OBJECTIVE)
    second = candidate_moves(vaf, "b", Status.OBJECTIVE)
    assert first == second
    keys = [(m.attack_target, m.new_value) for m in first]
    assert len(keys) == len(set(keys))


def test_status_already_desired_is_rejected():
    vaf = fixture_vaf("pharmacist")
    with pytest.raises(VafError) as err:
        suggest_moves(vaf, "b", Status.SUBJECTIVE)
    assert err.value.code == "StatusAlreadyDesired"
    with pytest.raises(VafError):
        suggest_moves(vaf, "b", Status.SUBJECTIVE, exhaustive=True)


def test_templates_need_at_most_two_used_values():
    vaf = fixture_vaf("seven-cycle")
    with pytest.raises(VafError) as err:
        candidate_moves(vaf, "b2", Status.OBJECTIVE)
    assert err.value.code == "NotDichromatic"
    # the exhaustive route has no colour vocabulary and still works
    moves = suggest_moves(vaf, "r2", Status.SUBJECTIVE, exhaustive=True)
    for m in moves:
        assert status_of(apply_move(vaf, m), "r2") is Status.SUBJECTIVE


def test_unknown_target_rejected():
    with pytest.raises(VafError) as err:
        suggest_moves(fixture_vaf("pharmacist"), "zz", Status.OBJECTIVE)
    assert err.value.code == "UnknownArgument"


def test_template_verified_moves_are_a_subset_of_exhaustive():
    vaf = fixture_vaf("pharmacist")
    for target in vaf.arguments:
        current = status_of(vaf, target)
        for desired in Status:
            if desired is current:
                continue
            report = template_coverage_report(vaf, target, desired)
            template_keys = {(m.attack_target, m.new_value)
                             for m in report.template_moves}
            exhaustive_keys = {(m.attack_target, m.new_value)
                               for m in report.exhaustive_moves}
            assert template_keys <= exhaustive_keys, (target, desired)


def test_every_template_suggestion_replays_to_desired_status():
    vaf = fixture_vaf("split-chains")
    for target in vaf.arguments:
        current = status_of(vaf, target)
        for desired in Status:
            if desired is current:
                continue
            for move in suggest_moves(vaf, target, desired):
                assert status_of(apply_move(vaf, move), target) is desired

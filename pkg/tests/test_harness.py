"""Instance generators and the dual-route verification sweep."""
import pytest

import vafw.harness as harness
from vafw.errors import VafError
from vafw.fixtures import fixture_vaf
from vafw.harness import (GeneratorSpec, cross_check, dichromatic_cycle_specs,
                          generate, run_verification, sample_mono_free)


def test_generation_is_deterministic():
    spec = GeneratorSpec(family="random", seed=11, argument_count=6,
                         value_count=3, density=0.4)
    a, b = generate(spec), generate(spec)
    assert a.sorted_attacks == b.sorted_attacks
    assert a.argument_values == b.argument_values
    other = generate(GeneratorSpec(family="random", seed=12, argument_count=6,
                                   value_count=3, density=0.4))
    assert (other.sorted_attacks != a.sorted_attacks
            or other.argument_values != a.argument_values)


def test_cycle_generator_reproduces_the_bundled_seven_cycle():
    spec = GeneratorSpec(family="cycle", chain_lengths=(2, 3, 2),
                         chain_values=("blue", "red", "green"))
    vaf = generate(spec)
    bundled = fixture_vaf("seven-cycle")
    assert vaf.argument_values == bundled.argument_values
    assert vaf.attacks == bundled.attacks


def test_chain_of_chains_leaves_the_cycle_open():
    spec = GeneratorSpec(family="chain-of-chains", chain_lengths=(2, 2),
                         chain_values=("blue", "red"))
    vaf = generate(spec)
    assert vaf.sorted_attacks == (("b1", "b2"), ("b2", "r1"), ("r1", "r2"))


def test_generator_spec_guards():
    with pytest.raises(VafError) as err:
        generate(GeneratorSpec(family="tree"))
    assert err.value.code == "InvalidGeneratorSpec"
    with pytest.raises(VafError):
        generate(GeneratorSpec(family="cycle", chain_lengths=(2,),
                               chain_values=()))


def test_sample_mono_free_bumps_the_seed():
    spec = GeneratorSpec(family="random", seed=42, argument_count=6,
                         value_count=2, density=0.3)
    vaf, used = sample_mono_free(spec)
    assert used.seed >= spec.seed
    from vafw.core import has_monochromatic_cycle
    assert not has_monochromatic_cycle(vaf)


def test_sample_mono_free_gives_up_eventually():
    # a single-value cycle can never become monochromatic-cycle-free
    spec = GeneratorSpec(family="cycle", chain_lengths=(3,), chain_values=("v",))
    with pytest.raises(VafError) as err:
        sample_mono_free(spec, max_tries=3)
    assert err.value.code == "GenerationExhausted"


def test_cycle_space_size_up_to_rotation():
    specs = dichromatic_cycle_specs(8)
    assert len(specs) == 76
    lengths = {sum(s.chain_lengths) for s in specs}
    assert lengths == {3, 4, 5, 6, 7, 8}


def test_cross_check_passes_on_a_known_good_instance():
    spec = GeneratorSpec(family="cycle", chain_lengths=(1, 4),
                         chain_values=("red", "blue"))
    result = cross_check(generate(spec), spec)
    assert result.ok
    assert result.orders_checked == 2
    assert result.to_json()["problems"] == []


def test_cross_check_detects_a_faulty_fast_path(monkeypatch):
    spec = GeneratorSpec(family="cycle", chain_lengths=(1, 4),
                         chain_values=("red", "blue"))
    vaf = generate(spec)
    monkeypatch.setattr(harness, "extend_algorithm",
                        lambda v, o: frozenset())
    result = cross_check(vaf, spec)
    assert not result.ok
    assert any("one-pass" in p for p in result.problems)


def test_cross_check_detects_a_faulty_cycle_formula(monkeypatch):
    spec = GeneratorSpec(family="cycle", chain_lengths=(1, 4),
                         chain_values=("red", "blue"))
    vaf = generate(spec)
    monkeypatch.setattr(harness, "dichromatic_cycle_extension",
                        lambda v, o: frozenset(v.arguments))
    result = cross_check(vaf, spec)
    assert any("cycle formula" in p for p in result.problems)


def test_run_verification_report_shape():
    report = run_verification(count=25, seed=5, max_cycle_length=6)
    assert report.ok
    payload = report.to_json()
    assert payload["randomChecked"] == 25
    assert payload["cyclesChecked"] == 24     # lengths 3..6 up to rotation
    assert payload["failures"] == []
    assert isinstance(payload["predictorDisagreements"], list)
    assert payload["elapsedSeconds"] >= 0

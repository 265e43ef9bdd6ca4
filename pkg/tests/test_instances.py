import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbnb.instances import (GeneratorConfig, Instance, InstanceError, SplitMix64, format_instance,
                            format_instance_list, generate_instances, instances_from_csv,
                            instances_to_csv, parse_instance, parse_instance_list, splitmix64)


def test_parse_figure_one_instance():
    inst = parse_instance("3 5\n2 2 2")
    assert inst.n == 3
    assert inst.weights == (2, 2, 2)
    assert inst.capacity == 5
    assert inst.total_weight == 6


def test_parse_smallest():
    inst = parse_instance("1 1\n1")
    assert (inst.n, inst.weights, inst.capacity) == (1, (1,), 1)


def test_parse_sorts_and_records_perm():
    inst = parse_instance("3 10\n1 7 3")
    assert inst.weights == (7, 3, 1)
    # canonical 1,2,3 come from original positions 2,3,1
    assert [p + 1 for p in inst.perm] == [2, 3, 1]
    assert inst.original_weights == (1, 7, 3)


def test_ties_keep_input_order():
    inst = Instance.from_weights([4, 9, 4, 9], 10)
    assert inst.weights == (9, 9, 4, 4)
    assert inst.perm == (1, 3, 0, 2)


@pytest.mark.parametrize("text", [
    "3 5\n2 2",          # n mismatch
    "3 5\n2 2 0",        # zero weight
    "2 0\n1 1",          # zero capacity
    "2 5\n1 -1",         # negative weight
    "2 x\n1 1",          # bad token
    "2 5",               # missing line
    "2 5 1\n1 1",        # bad header
])
def test_parse_rejects(text):
    with pytest.raises(InstanceError):
        parse_instance(text)


def test_instance_rejects_unsorted_canonical():
    with pytest.raises(InstanceError):
        Instance((1, 2), 3, (0, 1))


weights_st = st.lists(st.integers(1, 1000), min_size=1, max_size=20)


@given(weights_st, st.integers(1, 10_000))
def test_round_trip(weights, cap):
    text = f"{len(weights)} {cap}\n{'  '.join(map(str, weights))}\n"
    inst = parse_instance(text)
    assert format_instance(inst) == f"{len(weights)} {cap}\n{' '.join(map(str, weights))}\n"
    assert parse_instance(format_instance(inst)) == inst
    assert inst.to_original(inst.weights) == tuple(weights)


def test_instance_list_round_trip():
    insts = [parse_instance("3 5\n2 2 2"), parse_instance("3 10\n1 7 3")]
    assert parse_instance_list(format_instance_list(insts)) == insts


def test_splitmix64_reference_vectors():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_generate_paper_shape():
    cfg = GeneratorConfig(n=15, weight_lo=1, weight_hi=100, master_seed=42, instance_count=1000)
    insts = generate_instances(cfg)
    assert len(insts) == 1000
    for inst in insts:
        assert inst.n == 15
        assert all(1 <= w <= 100 for w in inst.weights)
        assert 1 <= inst.capacity <= inst.total_weight


def test_generate_degenerate_range():
    (inst,) = generate_instances(GeneratorConfig(n=1, weight_lo=5, weight_hi=5, master_seed=0))
    assert inst.weights == (5,)
    assert 1 <= inst.capacity <= 5


def test_generate_is_deterministic():
    cfg = GeneratorConfig(n=8, master_seed=7, instance_count=50)
    assert instances_to_csv(cfg, generate_instances(cfg)) == instances_to_csv(cfg, generate_instances(cfg))


def test_generate_first_instance_frozen():
    # pins the generator contract: seed = splitmix64(master + i), then weights, then C
    cfg = GeneratorConfig(n=3, master_seed=1, instance_count=2)
    a, b = generate_instances(cfg)
    assert a.original_weights == (59, 47, 53) and a.capacity == 75
    assert b.original_weights == (37, 1, 13) and b.capacity == 27


def test_generate_matches_hand_derivation():
    cfg = GeneratorConfig(n=4, weight_lo=3, weight_hi=9, master_seed=123, instance_count=3)
    for i, inst in enumerate(generate_instances(cfg)):
        rng = SplitMix64(SplitMix64((123 + i) % 2**64).next_u64())
        ws = [3 + rng.next_u64() % 7 for _ in range(4)]
        assert inst.original_weights == tuple(ws)
        assert inst.capacity == 1 + rng.next_u64() % sum(ws)


@settings(max_examples=50)
@given(st.integers(0, 2**64 - 1), st.integers(1, 12), st.integers(1, 50), st.integers(0, 50))
def test_generated_instances_valid(seed, n, lo, span):
    cfg = GeneratorConfig(n=n, weight_lo=lo, weight_hi=lo + span, master_seed=seed, instance_count=5)
    for inst in generate_instances(cfg):
        assert list(inst.weights) == sorted(inst.weights, reverse=True)
        assert all(lo <= w <= lo + span for w in inst.weights)
        assert 1 <= inst.capacity <= inst.total_weight
        assert sorted(inst.perm) == list(range(n))


def test_csv_dump_round_trip():
    cfg = GeneratorConfig(n=5, master_seed=3, instance_count=4)
    insts = generate_instances(cfg)
    text = instances_to_csv(cfg, insts)
    assert text.splitlines()[0] == "id,seed,n,C,weights"
    assert instances_from_csv(text) == insts


@pytest.mark.parametrize("kw", [dict(n=0), dict(n=3, weight_lo=0), dict(n=3, weight_lo=5, weight_hi=4),
                                dict(n=3, instance_count=0)])
def test_config_validation(kw):
    with pytest.raises(InstanceError):
        GeneratorConfig(**kw)

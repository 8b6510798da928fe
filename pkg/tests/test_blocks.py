import pytest

from akblocks import (
    Block,
    BlockDescriptor,
    Caps,
    InputError,
    Multicharge,
    base_tuples,
    block_containing,
    block_of,
    core_block_of,
    d_min,
    delta_ij,
    enumerate_blocks,
    hub,
    is_core_block,
    k_value,
    level_hub,
    multipartitions_of,
    residue_counts,
    same_block,
    scopes_condition,
    to_multicore,
    weight,
    witness_offsets,
)

MC = Multicharge(4, (1, 0, 2))
LAM = ((1, 1), (2,), (2, 1))

EXK_MC = Multicharge(5, (0, -2, 1))
EXK = ((4, 3, 1), (4, 2, 2, 2), (3, 2))


def test_worked_example_counts_weight_hub():
    assert residue_counts(LAM, MC) == (2, 3, 1, 1)
    assert weight(LAM, MC) == 3
    assert hub(LAM, MC) == (-1, 2, -3, -1)


def test_same_block_requires_equal_size():
    with pytest.raises(InputError):
        same_block(LAM, ((1,), (), ()), MC)


def test_hub_determines_block():
    other = ((1,), (2, 1), (1, 1, 1))
    assert hub(other, MC) == hub(LAM, MC)
    assert same_block(LAM, other, MC)


def test_block_of_roundtrip():
    desc = block_of(LAM, MC)
    assert desc.n == 7 and desc.weight == 3
    assert BlockDescriptor.from_json(desc.to_json()) == desc


def test_enumerate_blocks_partitions_everything():
    mc = Multicharge(2, (0, 1))
    blocks = enumerate_blocks(4, mc)
    members = [mp for b in blocks for mp in b.members]
    assert len(members) == len(set(members)) == len(list(multipartitions_of(4, 2)))
    for b in blocks:
        assert list(b.members) == sorted(b.members, reverse=True)


def test_enumerate_blocks_respects_caps():
    mc = Multicharge(2, (0,))
    with pytest.raises(InputError):
        enumerate_blocks(4, mc, Caps(max_n=3, max_r=3, max_e=5, max_delta=6))


def test_level_hub_bridge_on_multicore():
    m, hooks = to_multicore(EXK, EXK_MC)
    assert hooks == 0
    assert level_hub(m) == hub(EXK, EXK_MC)
    for j in range(1, 4):
        for i in range(5):
            assert delta_ij(EXK, EXK_MC, i, j) == m.levels[j - 1][i] - m.levels[
                j - 1
            ][i - 1] - (1 if i == 0 else 0)


def test_exk_witnesses_and_invariants():
    m, _ = to_multicore(EXK, EXK_MC)
    assert m.levels[0] == (-1, 0, -2, 0, -2)
    assert witness_offsets(m) == ((0, 0, -1), (0, 0, 0))
    assert is_core_block(EXK, EXK_MC)
    assert k_value(m, 0) == -1
    assert k_value(m, 1) == 1
    assert k_value(m, 3) == 0


def test_exk_base_tuples():
    m, _ = to_multicore(EXK, EXK_MC)
    tuples = base_tuples(m)
    assert len(tuples) == 2
    a, b = tuples
    diffs = [i for i in range(5) if a[i] != b[i]]
    assert diffs == [1]
    assert abs(a[1] - b[1]) == 1


def test_k_value_requires_core_block():
    m, _ = to_multicore(((2,), ()), Multicharge(2, (0, 0)))
    if not is_core_block(m):
        with pytest.raises(InputError):
            k_value(m, 0)


def test_core_block_of_reaches_a_core_block():
    res = core_block_of(LAM, MC)
    assert res.core.is_core
    assert res.core.hub == hub(LAM, MC)
    assert res.core.weight <= weight(LAM, MC)
    assert is_core_block(res.core_multicore)
    # chain weights never increase
    ws = [st.weight_before for st in res.chain] + (
        [res.chain[-1].weight_after] if res.chain else []
    )
    assert all(a >= b for a, b in zip(ws, ws[1:]))


def test_core_block_weight_law_along_chain():
    mc = Multicharge(3, (0, 1))
    for mp in multipartitions_of(5, 2):
        res = core_block_of(mp, mc)
        for st in res.chain:
            assert st.weight_before - st.weight_after == mc.r * (
                st.gamma_difference - 2
            )


def test_is_core_block_false_for_non_multicore():
    assert not is_core_block(((2,),), Multicharge(2, (0,)))


def test_scopes_condition_literal():
    rep = scopes_condition(EXK, EXK_MC, 1)
    assert rep.holds and rep.k == 1 and rep.delta == 4
    assert rep.w_b <= rep.w_c + rep.k * EXK_MC.r
    j = rep.to_json()
    assert set(j) == {"holds", "wB", "wC", "K", "delta"}


def test_scopes_condition_can_fail_without_error():
    # a negative K with wB = wC makes the inequality fail; just probe the
    # desk grid until one shows up
    mc = Multicharge(2, (0, 1))
    found = False
    for n in range(7):
        for mp in multipartitions_of(n, 2):
            rep = scopes_condition(mp, mc, 0)
            if not rep.holds:
                found = True
                assert rep.w_b > rep.w_c + rep.k * mc.r
    assert found


def test_block_containing_members_share_residues():
    blk = block_containing(LAM, MC, Caps(max_n=8, max_r=3, max_e=5, max_delta=6))
    assert LAM in blk.members
    assert isinstance(blk, Block)
    for mp in blk.members:
        assert residue_counts(mp, MC) == residue_counts(LAM, MC)


def test_d_min_is_component_minimum():
    assert d_min(EXK, EXK_MC, 1) == min(
        delta_ij(EXK, EXK_MC, 1, j) for j in range(1, 4)
    )

import itertools

import pytest

from fintop.core import SizeLimit, example_space, space_from_partition
from fintop.separation import axiom_profile
from fintop.reflectors import NotPreHausdorff
from fintop.enumeration import (
    CensusTable,
    are_homeomorphic,
    bell_number,
    census,
    census_to_csv,
    count_preH_classes,
    enumerate_pre_hausdorff,
    enumerate_preorder_rows,
    enumerate_topologies,
    integer_partition_count,
    preH_invariant,
    restricted_growth_strings,
    set_partitions,
)
from conftest import all_spaces
from oracles import brute_force_topologies


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 4), (3, 29)])
def test_topology_counts_against_powerset_oracle(n, count):
    spaces = list(enumerate_topologies(n))
    assert len(spaces) == count
    assert {frozenset(s.opens) for s in spaces} == set(brute_force_topologies(n))


def test_no_duplicate_topologies():
    for n in range(5):
        spaces = list(enumerate_topologies(n))
        assert len({s.opens for s in spaces}) == len(spaces)


def test_enumeration_order_is_lexicographic():
    # first and last preorder matrices at n=2, documented order:
    # off-diagonal bits (0,1),(1,0) ascending
    rows = list(enumerate_preorder_rows(2))
    assert rows[0] == (0b01, 0b10)       # discrete
    assert rows[-1] == (0b11, 0b11)      # indiscrete
    assert rows == sorted(rows, key=lambda r: [(r[i] >> j) & 1 for i in range(2) for j in range(2) if i != j])


def test_enumerate_topologies_size_limit():
    with pytest.raises(SizeLimit):
        next(enumerate_topologies(8))


def test_restricted_growth_strings_order():
    assert list(restricted_growth_strings(3)) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert len(list(restricted_growth_strings(5))) == 52


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_pre_hausdorff_enumeration_counts(n):
    spaces = list(enumerate_pre_hausdorff(n))
    assert len(spaces) == bell_number(n)
    assert len({s.opens for s in spaces}) == len(spaces)
    for s in spaces:
        assert axiom_profile(s).t02


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pre_hausdorff_enumeration_is_complete(n):
    # two-sided: every t02 topology appears in the partition stream
    preh = {s.opens for s in enumerate_pre_hausdorff(n)}
    for s in enumerate_topologies(n):
        assert (s.opens in preh) == axiom_profile(s).t02


def test_bell_numbers():
    assert [bell_number(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    assert bell_number(3) == len(list(set_partitions(3)))
    assert bell_number(14) == 190899322


def test_integer_partition_counts():
    assert [integer_partition_count(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert integer_partition_count(4) == 5  # 4, 3+1, 2+2, 2+1+1, 1+1+1+1
    assert integer_partition_count(14) == 135
    assert integer_partition_count(100) == 190569292


def test_counting_size_limits():
    with pytest.raises(SizeLimit):
        bell_number(501)
    with pytest.raises(SizeLimit):
        integer_partition_count(10001)


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_census_matches_per_space_profiles(n):
    expected = {}
    for s in all_spaces(n):
        sig = axiom_profile(s).signature()
        expected[sig] = expected.get(sig, 0) + 1
    table = census(n)
    assert dict(table.rows) == expected
    assert table.total == len(all_spaces(n))
    assert table.pre_hausdorff_total == bell_number(n)


def test_census_requires_opt_in_at_seven():
    with pytest.raises(SizeLimit):
        census(7)
    with pytest.raises(SizeLimit):
        census(9)


def test_census_workers_identical():
    base = census(4, workers=1)
    assert census(4, workers=2) == base
    assert census_to_csv(census(4, workers=3)) == census_to_csv(base)


def test_census_csv_format():
    csv = census_to_csv(census(2))
    lines = csv.strip().split("\n")
    assert lines[0] == "n,t0,t1,t2,t01,t02,t12,regular,normal,zero_dim,sober,count"
    assert all(line.startswith("2,") for line in lines[1:])
    assert sum(int(line.split(",")[-1]) for line in lines[1:]) == 4
    sigs = [int("".join(line.split(",")[1:11]), 2) for line in lines[1:]]
    assert sigs == sorted(sigs)
    # discrete 2-point space: the only all-true row, count 1
    assert lines[-1] == "2,1,1,1,1,1,1,1,1,1,1,1"


def test_census_progress_callback():
    seen = []
    census(3, progress=lambda done, total: seen.append((done, total)))
    assert seen[-1][0] == seen[-1][1] == len(seen)


# ---------------------------------------------------------------------------
# homeomorphism classification
# ---------------------------------------------------------------------------

def test_preH_invariant_examples(sierpinski):
    assert preH_invariant(space_from_partition(3, [0b011, 0b100])) == (2, 1)
    assert preH_invariant(example_space("indiscrete:4")) == (4,)
    assert preH_invariant(example_space("discrete:3")) == (1, 1, 1)
    with pytest.raises(NotPreHausdorff):
        preH_invariant(sierpinski)


def test_are_homeomorphic_examples(sierpinski, indiscrete2):
    a = space_from_partition(3, [0b011, 0b100])
    b = space_from_partition(3, [0b110, 0b001])
    assert are_homeomorphic(a, b)
    assert not are_homeomorphic(sierpinski, indiscrete2)
    assert are_homeomorphic(sierpinski, sierpinski)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fast_path_agrees_with_general_path(n):
    from fintop.enumeration import _general_homeomorphic

    spaces = list(enumerate_pre_hausdorff(n))
    for a, b in itertools.combinations_with_replacement(spaces, 2):
        assert (preH_invariant(a) == preH_invariant(b)) == _general_homeomorphic(a, b)


def test_general_path_respects_relabeling(sierpinski):
    from fintop.core import build_space

    flipped = build_space(2, [0, 0b01, 0b11])  # Sierpinski with roles swapped
    assert are_homeomorphic(sierpinski, flipped)


def test_homeomorphism_invariant_class_counts():
    for n in range(1, 7):
        invs = {preH_invariant(s) for s in enumerate_pre_hausdorff(n)}
        assert len(invs) == integer_partition_count(n)
        assert count_preH_classes(n) == integer_partition_count(n)
    assert count_preH_classes(14) == 135

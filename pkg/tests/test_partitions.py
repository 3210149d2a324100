import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qagt.partitions import (
    BoxOutsideDiagram,
    MixedTupleLength,
    arm,
    box_stats,
    boxes,
    compare,
    conjugate,
    count_tuples,
    leg,
    n_stat,
    parse_partition,
    parse_tuple,
    partition_text,
    partition_tuples,
    partitions,
    partitions_upto,
    tuple_text,
)

E = ()


def test_box_stats_examples():
    assert box_stats((2,), (1, 1)) == (1, 0, 0, (1, 1))
    a, l, n, _ = box_stats((2, 1), (1, 1))
    assert (a, l, n) == (1, 1, 1)
    with pytest.raises(BoxOutsideDiagram):
        box_stats((), (1, 1))
    assert n_stat(()) == 0


def test_statistics_identities():
    for lam in partitions_upto(8):
        assert conjugate(conjugate(lam)) == lam
        assert n_stat(lam) == sum(leg(lam, b) for b in boxes(lam))
        assert n_stat(conjugate(lam)) == sum(arm(lam, b) for b in boxes(lam))


def test_compare_examples():
    assert compare("L", (E, (1,)), ((1,), E)) == "greater"
    assert compare("L", ((1,), (2,)), ((1,), (2,))) == "equal"
    assert compare("L", ((1,), (2,)), (E, (1, 1, 1))) == "incomparable"
    with pytest.raises(MixedTupleLength):
        compare("L", (E,), (E, E))


def test_enumeration():
    assert list(partition_tuples(1, 3)) == [((3,),), ((2, 1),), ((1, 1, 1),)]
    assert list(partition_tuples(2, 0)) == [(E, E)]
    assert list(partition_tuples(2, 2)) == [(E, (2,)), (E, (1, 1)), ((1,), (1,)), ((2,), E), ((1, 1), E)]
    for m in (1, 2, 3):
        for n in range(6):
            assert len(partition_tuples(m, n)) == count_tuples(m, n)


def test_enumeration_is_linear_extension():
    for n in range(5):
        tup = partition_tuples(2, n)
        for i, a in enumerate(tup):
            for b in tup[i + 1:]:
                assert compare("L", a, b) != "less"


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("kind", ["L", "R"])
def test_partial_order_axioms(m, kind):
    for n in range(5 if m < 3 else 4):
        tup = partition_tuples(m, n)
        rel = {(a, b): compare(kind, a, b) for a in tup for b in tup}
        for a in tup:
            assert rel[a, a] == "equal"
        for a, b in itertools.product(tup, tup):
            if a != b:
                assert rel[a, b] != "equal"
                flip = {"less": "greater", "greater": "less", "incomparable": "incomparable"}
                assert rel[b, a] == flip[rel[a, b]]
        for a, b, c in itertools.product(tup, tup, tup):
            if rel[a, b] in ("less", "equal") and rel[b, c] in ("less", "equal"):
                assert rel[a, c] in ("less", "equal")


tuples2 = st.integers(0, 5).flatmap(lambda n: st.sampled_from(partition_tuples(2, n)))
tuples3 = st.integers(0, 4).flatmap(lambda n: st.sampled_from(partition_tuples(3, n)))


@given(st.one_of(st.tuples(tuples2, tuples2), st.tuples(tuples3, tuples3)))
def test_L_R_reversal(pair):
    a, b = pair
    assert compare("L", a, b) == compare("R", a[::-1], b[::-1])


def test_dominance_single():
    assert compare("dominance", (2,), (1, 1)) == "greater"
    assert compare("dominance", (3, 3), (4, 1, 1)) == "incomparable"


def test_text_round_trip():
    for lam in partitions_upto(5):
        assert parse_partition(partition_text(lam)) == lam
    for lv in partition_tuples(3, 3):
        assert parse_tuple(tuple_text(lv)) == lv


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert all(sum(lam) == 6 and list(lam) == sorted(lam, reverse=True) for lam in partitions(6))

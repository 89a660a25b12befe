import pytest
from hypothesis import given, settings, strategies as st

from hilb3.partitions import (InfiniteColengthError, MonomialIdeal, PlanePartition,
                              enumerate_partitions, format_ideal, from_ideal, iter_ideals,
                              parse_ideal, partition_count, quotient_basis, to_ideal)
from oracles import macmahon_by_binomials, plane_partitions_by_boxes

N_TEST = 7


@st.composite
def plane_partitions(draw, max_side=4, max_h=4):
    rows = draw(st.integers(0, max_side))
    cols = draw(st.integers(0, max_side))
    m = [[draw(st.integers(0, max_h)) for _ in range(cols)] for _ in range(rows)]
    # running minima make the array weakly decreasing in both directions
    for i in range(rows):
        for j in range(cols):
            if i:
                m[i][j] = min(m[i][j], m[i - 1][j])
            if j:
                m[i][j] = min(m[i][j], m[i][j - 1])
    heights = tuple(t for t in (tuple(h for h in row if h) for row in m) if t)
    return PlanePartition(heights)


def test_empty_partition():
    assert enumerate_partitions(0) == [PlanePartition(())]
    assert PlanePartition(()).size == 0


def test_two_boxes_along_each_axis():
    pps = enumerate_partitions(2)
    assert {frozenset(p.boxes()) for p in pps} == {
        frozenset({(0, 0, 0), (1, 0, 0)}),
        frozenset({(0, 0, 0), (0, 1, 0)}),
        frozenset({(0, 0, 0), (0, 0, 1)}),
    }


def test_size_six_has_48():
    assert len(enumerate_partitions(6)) == 48


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (4, 13)])
def test_partition_count_small(n, expected):
    assert partition_count(n) == expected


def test_enumeration_matches_box_growth_oracle():
    for n in range(N_TEST + 1):
        ours = {frozenset(p.boxes()) for p in enumerate_partitions(n)}
        assert ours == plane_partitions_by_boxes(n)


def test_counts_agree_with_product_expansion():
    mac = macmahon_by_binomials(12)
    for n in range(13):
        assert partition_count(n) == mac[n]
    for n in range(N_TEST + 1):
        assert len(enumerate_partitions(n)) == mac[n]


def test_canonical_order_sorted_and_duplicate_free():
    for n in range(N_TEST + 1):
        pps = enumerate_partitions(n)
        keys = [p.heights for p in pps]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)


def test_invalid_height_maps_rejected():
    with pytest.raises(ValueError):
        PlanePartition(((1, 2),))
    with pytest.raises(ValueError):
        PlanePartition(((1,), (2,)))
    with pytest.raises(ValueError):
        PlanePartition(((1,), (1, 1)))
    with pytest.raises(ValueError):
        PlanePartition.from_boxes([(1, 0, 0)])


def test_to_ideal_examples():
    assert to_ideal(PlanePartition(())).generators == ((0, 0, 0),)
    single = to_ideal(PlanePartition(((1,),)))
    assert set(single.generators) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert single.colength == 1
    along_x = to_ideal(PlanePartition(((1,), (1,))))
    assert set(along_x.generators) == {(2, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert along_x.colength == 2


def test_from_ideal_examples():
    assert from_ideal(parse_ideal("x;y;z")).boxes() == [(0, 0, 0)]
    assert sorted(from_ideal(parse_ideal("x^2;y;z")).boxes()) == [(0, 0, 0), (1, 0, 0)]
    m2 = MonomialIdeal.generated_by([(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)])
    assert sorted(from_ideal(m2).boxes()) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_infinite_colength():
    with pytest.raises(InfiniteColengthError, match="infinite colength"):
        from_ideal(parse_ideal("x;y"))
    with pytest.raises(InfiniteColengthError):
        quotient_basis(parse_ideal("x^2;y*z"))


def test_quotient_basis_order():
    assert quotient_basis(parse_ideal("x;y;z")) == [(0, 0, 0)]
    assert quotient_basis(parse_ideal("x^2;y;z")) == [(0, 0, 0), (1, 0, 0)]
    m2 = parse_ideal("x^2;x*y;x*z;y^2;y*z;z^2")
    assert quotient_basis(m2) == [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_antichain_enforced():
    with pytest.raises(ValueError, match="not minimal"):
        MonomialIdeal(((1, 0, 0), (2, 0, 0)))
    assert MonomialIdeal.generated_by([(1, 0, 0), (2, 0, 0), (0, 1, 0)]).generators == ((0, 1, 0), (1, 0, 0))


def test_parse_formats_agree():
    assert parse_ideal("2,0,0;0,1,0;0,0,1") == parse_ideal("x^2;y;z")
    assert parse_ideal("1") == MonomialIdeal(((0, 0, 0),))
    I = parse_ideal("x^2*y;x^3;y^2;z")
    assert parse_ideal(format_ideal(I)) == I
    assert parse_ideal(format_ideal(I, "monomial")) == I


@pytest.mark.parametrize("bad", ["x^2;;z", "1,2", "a;b", "x^;y", "1,-1,0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_ideal(bad)


def test_json_record():
    # boxes 1, z, y: the ideal is (x, y^2, yz, z^2)
    rec = PlanePartition(((2, 1),)).to_json()
    assert rec == {"n": 3, "generators": [[0, 0, 2], [0, 1, 1], [0, 2, 0], [1, 0, 0]],
                   "heights": [[2, 1]]}


@given(plane_partitions())
@settings(max_examples=200, deadline=None)
def test_round_trip_property(pp):
    ideal = to_ideal(pp)
    assert from_ideal(ideal) == pp
    assert ideal.colength == pp.size
    assert ideal.is_finite_colength
    gens = ideal.generators
    for g in gens:
        for h in gens:
            assert g == h or not all(a <= b for a, b in zip(g, h))


def test_round_trip_on_all_enumerated_ideals():
    for n in range(N_TEST + 1):
        for ideal in iter_ideals(n):
            assert to_ideal(from_ideal(ideal)) == ideal

import pytest

from oracles import OSuzuki
from zmoufang import (
    INF,
    FieldSpec,
    PartitionTag,
    RootGroup,
    build_projective_line,
    build_report,
    build_suzuki,
    norm,
    norm0,
    partition_classify,
    partition_sizes,
    recompose,
    suzuki_tau,
)

T8 = FieldSpec.tits_field(3)
O3 = OSuzuki(3)


def fe(x):
    return T8.element(x)


def test_norm_frozen():
    assert int(norm(fe(0), fe(2))) == 6 == T8.theta(2)
    assert int(norm(fe(1), fe(1))) == 1
    assert int(norm(fe(2), fe(3))) == 4


def test_norm0_frozen():
    assert int(norm0(fe(2), fe(3))) == 6
    assert T8.theta(6) == int(norm(fe(2), fe(3)))
    for b in range(8):
        assert int(norm0(fe(0), fe(b))) == b
    for a in range(8):
        assert int(norm0(fe(a), fe(0))) == T8.one_plus_theta(a)


@pytest.mark.parametrize("n", [3, 5])
def test_norm_matches_oracle_and_is_anisotropic(n):
    f, O = FieldSpec.tits_field(n), OSuzuki(n)
    for a in range(f.order):
        for b in range(f.order):
            N = int(norm(f.element(a), f.element(b)))
            assert N == O.norm(a, b)
            assert (N == 0) == (a == b == 0)
            assert f.theta(int(norm0(f.element(a), f.element(b)))) == N


def test_tau_frozen(msuz8):
    U = msuz8.U
    assert suzuki_tau(U, U.element(0, 2)) == U.element(6, 0)
    assert suzuki_tau(U, U.element(2, 0)) == U.element(0, 4)
    assert suzuki_tau(U, U.element(1, 1)) == U.element(1, 1)
    assert suzuki_tau(U, U.zero) is INF
    assert suzuki_tau(U, INF) == U.zero


def test_tau_matches_oracle(msuz8):
    U = msuz8.U
    for x in range(1, U.size):
        assert U.coords(msuz8.tau(x)) == O3.tau(U.coords(x))


def test_norm_rejects_mixed_fields():
    with pytest.raises(ValueError):
        norm(fe(1), FieldSpec(3).element(1))


def test_builders(mf4, mf8, msuz8, msuz32):
    assert mf4.npoints == 5 and mf8.npoints == 9
    assert msuz8.npoints == 65 and msuz32.npoints == 1025
    t = msuz32.tau.images
    assert (t[t] == range(1025)).all()
    for bad in (6, 1, 0):
        with pytest.raises(ValueError):
            build_projective_line(bad)
    for bad in (4, 16, 2, 12):
        with pytest.raises(ValueError):
            build_suzuki(bad)
    with pytest.raises(ValueError):
        build_projective_line(2)


def test_build_report(msuz8):
    rep = build_report(msuz8)
    assert rep["points"] == 65
    assert rep["center_order"] == 8
    assert rep["involutions"] == 7
    assert rep["hua_order"] == 7
    assert rep["field"]["modulus"] == 0b1011
    assert list(rep["partition"].values()) == [1, 7, 7, 7, 42]


def test_partition_examples(msuz8):
    U = msuz8.U
    assert partition_classify(msuz8, U.element(0, 5)).tag is PartitionTag.CENTER
    assert partition_classify(msuz8, U.element(1, 1)).tag is PartitionTag.SIM_Z
    assert partition_classify(msuz8, U.element(1, 0)).tag is PartitionTag.NEG_SIM_Z
    assert partition_classify(msuz8, 0).tag is PartitionTag.ZERO
    cls = partition_classify(msuz8, U.element(6, 2))
    assert cls.tag is PartitionTag.MIXED and cls.decomposition == (4, 2)
    assert msuz8.sim_table[U.index(0, T8.one_plus_theta(2))] == U.index(2, 7)
    assert U.add(U.index(4, 0), U.index(2, 7)) == U.index(6, 2)
    assert recompose(msuz8, 4, 2) == U.index(6, 2)


def test_partition_tags_agree_with_moufang_operations(msuz8):
    U, s = msuz8.U, msuz8.sim_table
    Zs = [z for z in U.center if z]
    sim_z = {int(s[z]) for z in Zs}
    neg_sim_z = {U.neg(int(s[z])) for z in Zs}
    for x in range(1, U.size):
        tag = partition_classify(msuz8, x).tag
        assert (tag is PartitionTag.CENTER) == (x in U.center)
        assert (tag is PartitionTag.SIM_Z) == (x in sim_z)
        assert (tag is PartitionTag.NEG_SIM_Z) == (x in neg_sim_z)


@pytest.mark.parametrize("name, sizes", [("msuz8", [1, 7, 7, 7, 42]), ("msuz32", [1, 31, 31, 31, 930])])
def test_partition_sizes(name, sizes, request):
    M = request.getfixturevalue(name)
    assert list(partition_sizes(M).values()) == sizes
    q = M.U.spec.order
    assert sizes[-1] == (q - 1) * (q - 2)


def test_partition_needs_suzuki(mf8):
    with pytest.raises(ValueError):
        partition_classify(mf8, 3)


def test_suzuki_tau_table_needs_pairs():
    from zmoufang.constructions import suzuki_tau_table

    with pytest.raises(ValueError):
        suzuki_tau_table(RootGroup.abelian(FieldSpec(3)))

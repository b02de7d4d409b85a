import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import closure_size
from zmoufang import ClosureCapExceeded, Permutation, StabilizerChain
from zmoufang.perm import closure, format_permutations, group_order, parse_permutations


def test_composition_is_left_to_right():
    p = Permutation([1, 2, 0])
    q = Permutation([0, 2, 1])
    # x(pq) = (xp)q
    assert all((p * q)(x) == q(p(x)) for x in range(3))
    assert (p * q).images.tolist() == [2, 1, 0]


def test_conjugation_and_inverse():
    p = Permutation([1, 2, 0, 3])
    h = Permutation([3, 1, 2, 0])
    assert p.conj(h) == h.inverse() * p * h
    assert (p * p.inverse()).is_identity()
    assert p**3 == Permutation.identity(4)
    assert p**-1 == p.inverse()


def test_cycles_order_fixed_points():
    p = Permutation([1, 0, 3, 4, 2, 5])
    assert p.order() == 6
    assert p.fixed_points() == [5]
    assert sorted(p.cycles()) == [(0, 1), (2, 3, 4)]


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_closure_cap():
    gens = [Permutation([1, 2, 3, 4, 5, 0]), Permutation([1, 0, 2, 3, 4, 5])]
    assert len(closure(gens)) == 720
    with pytest.raises(ClosureCapExceeded):
        closure(gens, cap=100)


perms = st.integers(3, 8).flatmap(lambda n: st.lists(st.permutations(range(n)), min_size=1, max_size=3))


@settings(max_examples=60, deadline=None)
@given(perms)
def test_schreier_sims_matches_closure(gens):
    ps = [Permutation(g) for g in gens]
    expected = closure_size([tuple(g) for g in gens])
    assert group_order(ps, "naive") == expected
    assert group_order(ps, "schreier") == expected
    chain = StabilizerChain(ps)
    assert all(chain.contains(g) for g in closure(ps))


def test_chain_membership_rejects_outsiders():
    # A_5 inside S_5
    a5 = [Permutation([1, 2, 0, 3, 4]), Permutation([0, 1, 3, 4, 2]), Permutation([1, 2, 3, 4, 0])]
    chain = StabilizerChain(a5)
    assert chain.order() == 60
    assert not chain.contains(Permutation([1, 0, 2, 3, 4]))


def test_export_round_trip():
    ps = [Permutation([2, 0, 1, 3]), Permutation([0, 1, 3, 2])]
    text = format_permutations(ps, {"points": 4, "note": "x"})
    header, back = parse_permutations(text)
    assert header == {"points": "4", "note": "x"}
    assert back == ps


def test_parse_rejects_bad_length():
    with pytest.raises(ValueError):
        parse_permutations("#points=5\n0 1 2 3\n")

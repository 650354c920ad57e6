import random

import pytest

from posetdet.arith import mobius
from posetdet.identities import incidence_matrix
from posetdet.matrix import SquareMatrix
from posetdet.poset import (
    IncidenceFunction,
    MeetError,
    Poset,
    delta_function,
    divisor_poset,
    incidence_from_dict,
    mobius_function,
    poset_from_dict,
    poset_to_dict,
    zeta_function,
)
from posetdet.randgen import random_meet_semilattice, random_poset
from posetdet.ring import Int, Poly


def vee():
    """Three elements with a below both b and c, b and c incomparable."""
    return Poset.from_covers(3, [(0, 1), (0, 2)], labels=["a", "b", "c"])


def chain(n):
    return Poset.from_covers(n, [(i, i + 1) for i in range(n - 1)])


def bowtie():
    """Two bottoms below two tops: not a meet semilattice."""
    return Poset.from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


def test_from_covers_vee():
    p = vee()
    expected = {(0, 0), (1, 1), (2, 2), (0, 1), (0, 2)}
    got = {(a, b) for a in range(3) for b in range(3) if p.leq(a, b)}
    assert got == expected


def test_from_covers_transitive():
    p = chain(4)
    assert p.leq(0, 3)
    assert not p.leq(3, 0)


def test_singleton():
    p = Poset.from_covers(1, [])
    assert p.n == 1 and p.leq(0, 0)


def test_cycle_is_rejected():
    with pytest.raises(ValueError):
        Poset.from_covers(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Poset.from_covers(1, [(0, 0)])
    with pytest.raises(ValueError):
        Poset.from_covers(3, [(0, 1), (1, 2), (2, 0)])


def test_cover_out_of_range():
    with pytest.raises(ValueError):
        Poset.from_covers(2, [(0, 2)])


def test_size_cap():
    with pytest.raises(ValueError):
        Poset.from_covers(65, [])


def test_relation_validation():
    with pytest.raises(ValueError):
        Poset([[False]])  # not reflexive
    with pytest.raises(ValueError):
        Poset([[True, True], [True, True]])  # not antisymmetric
    leq = [
        [True, True, False],
        [False, True, True],
        [False, False, True],
    ]
    with pytest.raises(ValueError):
        Poset(leq)  # not transitive


def test_linear_extension_is_consistent():
    rng = random.Random("linext")
    for _ in range(60):
        p = random_poset(rng, rng.randint(1, 8))
        pos = {e: i for i, e in enumerate(p.lin_ext)}
        assert sorted(p.lin_ext) == list(range(p.n))
        for a in range(p.n):
            for b in range(p.n):
                if a != b and p.leq(a, b):
                    assert pos[a] < pos[b]


def test_divisor_poset_small():
    p = divisor_poset([1, 2, 3, 4])
    assert p.leq(0, 1) and p.leq(0, 2) and p.leq(0, 3)
    assert p.leq(1, 3)  # 2 | 4
    assert not p.leq(1, 2) and not p.leq(2, 1)  # 2, 3 incomparable
    assert not p.leq(2, 3)  # 3 does not divide 4
    assert divisor_poset([5]).n == 1


def test_divisor_poset_rejects_bad_input():
    with pytest.raises(ValueError):
        divisor_poset([])
    with pytest.raises(ValueError):
        divisor_poset([2, 2])
    with pytest.raises(ValueError):
        divisor_poset([0, 1])


def test_zeta_and_delta_singleton():
    p = Poset.from_covers(1, [])
    assert incidence_matrix(p, zeta_function(p)) == SquareMatrix([[Int(1)]])
    assert incidence_matrix(p, delta_function(p)) == SquareMatrix([[Int(1)]])


def test_zeta_vee_has_five_ones():
    p = vee()
    z = zeta_function(p)
    ones = sum(
        1 for a in range(3) for b in range(3) if z(a, b) == Int(1)
    )
    assert ones == 5


def test_zeta_chain_is_upper_triangular_ones():
    p = chain(3)
    m = incidence_matrix(p, zeta_function(p))
    for i in range(3):
        for j in range(3):
            assert m[i, j] == (Int(1) if i <= j else Int(0))


def test_mobius_chain():
    p = chain(3)
    mu = mobius_function(p)
    assert mu(0, 0) == Int(1)
    assert mu(0, 1) == Int(-1)
    assert mu(0, 2) == Int(0)


def test_mobius_vee():
    mu = mobius_function(vee())
    assert mu(0, 1) == Int(-1)
    assert mu(0, 2) == Int(-1)


def test_mobius_matches_number_theory_on_divisor_posets():
    p = divisor_poset(list(range(1, 7)))
    mu = mobius_function(p)
    # indices are value - 1
    assert mu(0, 5) == Int(mobius(6)) == Int(1)
    assert mu(0, 3) == Int(mobius(4)) == Int(0)
    for a in range(6):
        for b in range(6):
            if p.leq(a, b):
                assert mu(a, b) == Int(mobius((b + 1) // (a + 1)))


def test_mobius_inversion_on_random_posets():
    rng = random.Random("inversion")
    for _ in range(100):
        p = random_poset(rng, rng.randint(1, 8))
        mu = mobius_function(p)
        delta = delta_function(p)
        for a in range(p.n):
            for b in range(p.n):
                if not p.leq(a, b):
                    continue
                interval = p.above(a) & p.below(b)
                left = sum((mu(a, c).v for c in interval))
                right = sum((mu(c, b).v for c in interval))
                expected = delta(a, b).v
                assert left == expected and right == expected


def test_zeta_mobius_matrix_inverse():
    rng = random.Random("zetainv")
    for _ in range(40):
        p = random_poset(rng, rng.randint(1, 7))
        z = incidence_matrix(p, zeta_function(p))
        m = incidence_matrix(p, mobius_function(p))
        ident = SquareMatrix.identity(p.n)
        assert z @ m == ident
        assert m @ z == ident
        # both are unitriangular under the linear extension
        for i in range(p.n):
            assert z[i, i] == Int(1) and m[i, i] == Int(1)
            for j in range(i):
                assert z[i, j] == Int(0) and m[i, j] == Int(0)


def test_meet_vee():
    p = vee()
    assert p.meet(1, 2) == 0
    assert p.meet(1, 1) == 1


def test_meet_is_gcd_on_divisor_posets():
    import math

    vals = [1, 2, 3, 4, 6, 12]
    p = divisor_poset(vals)
    for i in range(len(vals)):
        for j in range(len(vals)):
            expected = math.gcd(vals[i], vals[j])
            assert vals[p.meet(i, j)] == expected
    assert vals[p.meet(3, 4)] == 2  # 4 and 6


def test_meet_errors():
    two = Poset.from_covers(2, [])
    with pytest.raises(MeetError):
        two.meet(0, 1)
    with pytest.raises(MeetError):
        bowtie().meet(2, 3)


def test_meet_properties_where_defined():
    rng = random.Random("meetprops")
    for _ in range(30):
        p = random_meet_semilattice(rng, rng.randint(1, 7))
        for a in range(p.n):
            assert p.meet(a, a) == a
            for b in range(p.n):
                assert p.meet(a, b) == p.meet(b, a)
                for c in range(p.n):
                    assert p.meet(p.meet(a, b), c) == p.meet(a, p.meet(b, c))


def test_is_meet_semilattice():
    assert vee().is_meet_semilattice()
    assert not Poset.from_covers(2, []).is_meet_semilattice()
    assert not bowtie().is_meet_semilattice()
    assert divisor_poset([1, 2, 3, 4, 6, 12]).is_meet_semilattice()


def test_lower_and_meet_closed():
    vals = [1, 2, 3, 4, 6, 12]
    p = divisor_poset(vals)
    assert p.is_lower_closed(range(6))
    idx = {v: i for i, v in enumerate(vals)}
    s246 = [idx[2], idx[4], idx[6]]
    assert not p.is_lower_closed(s246)
    assert p.is_meet_closed(s246)  # 4 meet 6 = 2

    q = divisor_poset([1, 2, 3, 6])
    s = [1, 2, 3]  # values {2, 3, 6}
    assert not q.is_lower_closed(s)
    assert not q.is_meet_closed(s)  # 2 meet 3 = 1 is missing


def test_lower_closed_implies_meet_closed():
    rng = random.Random("lcmc")
    for _ in range(40):
        p = random_meet_semilattice(rng, rng.randint(1, 7))
        members = [a for a in range(p.n) if rng.random() < 0.5]
        closure = set(members)
        for a in members:
            closure |= p.below(a)
        if closure:
            assert p.is_lower_closed(closure)
            assert p.is_meet_closed(closure)


def test_induced_subposet():
    vals = [1, 2, 3, 4, 6, 12]
    p = divisor_poset(vals)
    idx = {v: i for i, v in enumerate(vals)}
    sub = p.induced([idx[6], idx[1], idx[2], idx[3]])
    assert sub.n == 4
    assert sub.host_map is not None
    sub_vals = [vals[h] for h in sub.host_map]
    assert sorted(sub_vals) == [1, 2, 3, 6]
    for i in range(4):
        for j in range(4):
            assert sub.leq(i, j) == (sub_vals[j] % sub_vals[i] == 0)
    # the inherited index order is itself a linear extension
    for i in range(4):
        for j in range(4):
            if i != j and sub.leq(i, j):
                assert sub.position(i) < sub.position(j)
    with pytest.raises(ValueError):
        p.induced([])


def test_poset_json_round_trip():
    rng = random.Random("json")
    for p in [vee(), chain(4)] + [random_poset(rng, rng.randint(1, 7)) for _ in range(20)]:
        assert poset_from_dict(poset_to_dict(p)) == p
    with pytest.raises(ValueError):
        poset_from_dict({"labels": ["a"]})
    with pytest.raises(ValueError):
        poset_from_dict({"labels": ["a", "b"], "covers": [[0]]})


def test_incidence_function_contract():
    p = vee()
    f = IncidenceFunction(p, {(0, 1): Int(5)})
    assert f(0, 1) == Int(5)
    assert f(0, 2) == Int(0)  # absent entry on a related pair
    assert f(1, 2) == Int(0)  # unrelated pair
    with pytest.raises(ValueError):
        IncidenceFunction(p, {(1, 2): Int(1)})  # b and c incomparable
    with pytest.raises(ValueError):
        IncidenceFunction(p, {(0, 9): Int(1)})
    with pytest.raises(ValueError):
        IncidenceFunction(p, {(0, 0): Int(1), (0, 1): Poly((1,))})


def test_incidence_zero_inference():
    p = vee()
    f = IncidenceFunction(p, {(0, 1): Poly((0, 1))})
    assert f.zero == Poly()
    g = IncidenceFunction(p, {})
    assert g.zero == Int(0)


def test_incidence_from_dict():
    p = vee()
    f = incidence_from_dict(p, {"entries": [[0, 1, 3], [0, 0, 2]]})
    assert f(0, 1) == Int(3) and f(0, 0) == Int(2)
    g = incidence_from_dict(p, {"entries": [[0, 2, [0, 1]]]})
    assert g(0, 2) == Poly((0, 1))
    with pytest.raises(ValueError):
        incidence_from_dict(p, {"entries": [[0, 1]]})
    with pytest.raises(ValueError):
        incidence_from_dict(p, {})

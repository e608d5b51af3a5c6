import pytest

from cvect.buttin import buttin_bracket
from cvect.checks import check_jacobi_pairs, check_table, pair_parity, random_pair
from cvect.exceptional.basis import euler
from cvect.exceptional.pairs import (
    GluedPair,
    NotInCvectError,
    NotSleZeroError,
    canonicalize,
    decompose,
    phi_auto,
    regrade,
    sle_zero_part,
)
from cvect.exceptional.embeddings import i1_field, i2_field
from cvect.exceptional.table import CELLS, bracket_pair, bracket_pair_oracle, mixed_bracket, mixed_bracket_oracle
from cvect.superpoly import MixedParityError
from conftest import P, V


def G(text):
    return GluedPair.parse(text)


def test_realize_examples():
    assert G("(0, u1)").realize() == V("d_x1")
    assert G("(u1*x1*x2*x3, 0)").realize() == V("-u1*d_y")
    assert not G("(0, 0)").realize()


def test_regrade_examples():
    assert regrade(P("x1")) == P("x1")
    assert regrade(P("u1")) == P("x2*x3")
    assert regrade(P("x2*x3")) == P("-u1")
    with pytest.raises(NotSleZeroError):
        regrade(P("u1*x1"))
    with pytest.raises(NotSleZeroError):
        regrade(P("x1*x2*x3"))


def test_phi_examples():
    assert phi_auto(G("(u1, 0)")).same_slots(G("(0, -u1)"))
    assert phi_auto(G("(0, x1)")).same_slots(G("(x1, 0)"))
    twice = phi_auto(phi_auto(G("(x2, u2)")))
    assert twice.same_slots(G("(x2, -u2)"))


def test_canonicalize_examples():
    assert canonicalize(G("(0, x1)")).same_slots(G("(x1, 0)"))
    assert canonicalize(G("(0, u1*x1)")).same_slots(G("(0, u1*x1)"))
    assert canonicalize(G("(u1, 0)")).same_slots(G("(u1, 0)"))


def test_identification(rng):
    from cvect.sampling import random_bihomogeneous

    for _ in range(80):
        g = random_bihomogeneous(rng)
        s = sle_zero_part(g)
        for par, sp in s.parity_parts().items():
            r = regrade(sp)
            assert i1_field(r if par else -r) == i2_field(sp)
        p = GluedPair(random_bihomogeneous(rng), g)
        c = canonicalize(p)
        assert c == p and canonicalize(c).same_slots(c)
        assert hash(c) == hash(p)


def test_decompose_examples():
    assert decompose(V("d_y")).same_slots(G("(-x1*x2*x3, 0)"))
    assert decompose(euler()).realize() == euler()
    with pytest.raises(NotInCvectError):
        decompose(V("x1*d_u1"))


def test_decompose_roundtrip(rng):
    for _ in range(40):
        p = random_pair(rng, max_deg_u=3)
        q = decompose(p.realize())
        assert q == p
        assert q.same_slots(canonicalize(p))


def test_table_examples():
    assert not mixed_bracket(P("u1*x1*x2*x3"), P("u2"))
    assert not mixed_bracket(P("u1"), P("u1"))
    f, h = P("u1*x1"), P("u2*x2*x3")
    assert mixed_bracket(f, h) == mixed_bracket_oracle(f, h)
    assert len(CELLS) == 16


def test_table_cells():
    res = check_table(samples=8, seed=77, max_deg_u=2)
    assert res.ok, res.summary()


def test_bracket_pair_examples():
    assert not bracket_pair(G("(0, u1)"), G("(0, x1)"))
    p = bracket_pair(G("(u1, 0)"), G("(u2, 0)"))
    assert p.same_slots(GluedPair(buttin_bracket(P("u1"), P("u2")), P("0")))
    from cvect.exceptional.basis import d_eta
    from cvect.superfield import commutator

    assert p.realize() == commutator(d_eta(1), d_eta(2))


def test_bracket_pair_matches_oracle(rng):
    for _ in range(40):
        p, q = random_pair(rng), random_pair(rng)
        assert bracket_pair(p, q) == bracket_pair_oracle(p, q)


def test_bracket_pair_antisymmetry(rng):
    for _ in range(30):
        p, q = random_pair(rng), random_pair(rng)
        sign = 1 if pair_parity(p) and pair_parity(q) else -1
        assert bracket_pair(p, q) == bracket_pair(q, p).scale(sign)


def test_jacobi_pairs_small():
    res = check_jacobi_pairs(n=20, seed=5)
    assert res.ok, res.summary()


def test_mixed_parity_rejected():
    with pytest.raises(MixedParityError):
        mixed_bracket(P("u1 + x1"), P("u2"))
    with pytest.raises(MixedParityError):
        bracket_pair(G("(u1 + x1, 0)"), G("(u2, 0)"))

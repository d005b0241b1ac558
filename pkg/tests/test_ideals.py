import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ringlab.constructions import cyclic_ring, direct_product, quotient_ring
from ringlab.errors import LatticeExplosion, MalformedTarget, OrderLimitExceeded
from ringlab import limits
from ringlab.ideals import (
    ElementSet,
    annihilator,
    central_idempotents,
    generated,
    idempotents,
    is_ideal,
    is_nilpotent_ideal,
    jacobson_radical,
    maximal_right_ideals,
    nil_elements,
    right_ideals,
    sandwich,
    set_product_in,
    set_product_is_zero,
    two_sided_ideals,
    units,
)


def coords(S):
    return {e.coords for e in S}


def E(R, *c):
    return R.elem(*c)


# T2(Z2) coordinates are (E11, E22, E12); M2(Z2) coordinates are row-major.
T_E11, T_E22, T_E12 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
M_E11, M_E12, M_E21, M_E22 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


# -- annihilators, sandwiches, generated ideals ----------------------------------


def test_right_annihilator_of_e11r(M2):
    e11R = ElementSet(M2, M2.mul[M2.index(E(M2, *M_E11))])
    assert coords(annihilator(M2, e11R, "right")) == {(0, 0, 0, 0)}
    O = oracles.Ring(M2)
    assert coords(annihilator(M2, e11R, "right")) == O.right_annihilator(coords(e11R))


def test_annihilator_of_zero(corpus):
    for R in corpus.values():
        r = annihilator(R, ElementSet(R, [0]), "right")
        assert len(r) == R.order and r.kind == "right-ideal"


def test_left_annihilator_in_t2(T2):
    e22R = ElementSet(T2, T2.mul[T2.index(E(T2, *T_E22))])
    l = annihilator(T2, e22R, "left")
    # E22 R = {0, E22}; E12 E22 = E12, so only E11 survives
    assert coords(e22R) == {(0, 0, 0), T_E22}
    assert coords(l) == {(0, 0, 0), T_E11}
    assert l.kind == "left-ideal"
    assert coords(l) == oracles.Ring(T2).left_annihilator(coords(e22R))


def test_annihilators_match_oracle_and_are_one_sided_ideals(small_corpus):
    rng = np.random.default_rng(1)
    for R in small_corpus.values():
        O = oracles.Ring(R)
        for _ in range(5):
            X = rng.choice(R.order, size=min(3, R.order), replace=False)
            Xc = {R.element(int(i)).coords for i in X}
            r = annihilator(R, ElementSet(R, X), "right")
            l = annihilator(R, ElementSet(R, X), "left")
            assert coords(r) == O.right_annihilator(Xc)
            assert coords(l) == O.left_annihilator(Xc)
            assert is_ideal(R, r, "right-ideal") and is_ideal(R, l, "left-ideal")


def test_annihilator_errors(Z4):
    with pytest.raises(ValueError):
        annihilator(Z4, ElementSet(Z4, []), "right")
    with pytest.raises(ValueError):
        annihilator(Z4, ElementSet(Z4, [0]), "up")


def test_sandwich_examples(T2, corpus):
    assert coords(sandwich(T2, E(T2, *T_E22), E(T2, *T_E11))) == {(0, 0, 0)}
    assert coords(sandwich(T2, E(T2, *T_E11), E(T2, *T_E22))) == {(0, 0, 0), T_E12}
    for R in corpus.values():
        assert sandwich(R, R.zero, R.one_element).is_zero()


def test_sandwich_matches_oracle(small_corpus):
    for R in small_corpus.values():
        O = oracles.Ring(R)
        for a in O.els[:6]:
            for b in O.els:
                assert coords(sandwich(R, E(R, *a), E(R, *b))) == O.sandwich(a, b)


def test_generated_examples(M2, T2, Z4):
    assert len(generated(M2, [E(M2, *M_E12)], "ideal")) == 16
    assert coords(generated(T2, [E(T2, *T_E12)], "ideal")) == {(0, 0, 0), T_E12}
    assert generated(Z4, [Z4.zero], "ideal").is_zero()
    with pytest.raises(ValueError):
        generated(Z4, [Z4.zero], "plain")


def test_generated_matches_worklist_closure(small_corpus):
    side = {"right-ideal": "right", "left-ideal": "left", "ideal": "both"}
    for R in small_corpus.values():
        O = oracles.Ring(R)
        for a in O.els:
            for kind, s in side.items():
                assert coords(generated(R, [E(R, *a)], kind)) == O.closure([a], s), (R.name, a, kind)


def test_generated_is_idempotent(small_corpus):
    for R in small_corpus.values():
        for i in range(0, R.order, 3):
            for kind in ("right-ideal", "left-ideal", "ideal"):
                G = generated(R, [R.element(i)], kind)
                assert generated(R, G, kind) == G


# -- set products -------------------------------------------------------------------


def test_set_product_examples(T2, M2, Z2):
    J = jacobson_radical(T2)
    assert set_product_is_zero(T2, ElementSet(T2, [0]), ElementSet(T2, range(8)))
    assert set_product_is_zero(T2, J, J)
    I = generated(M2, [E(M2, *M_E12)], "ideal")
    assert not set_product_is_zero(M2, I, I)

    assert set_product_in(T2, ElementSet(T2, range(8)), ElementSet(T2, [0]), J)
    e11R = ElementSet(T2, T2.mul[T2.index(E(T2, *T_E11))])
    strict = ElementSet(T2, [0, T2.index(E(T2, *T_E12))])
    assert set_product_in(T2, e11R, strict, J)
    R = ElementSet(Z2, [0, 1])
    assert not set_product_in(Z2, R, R, ElementSet(Z2, [0]))


def test_set_product_in_rejects_non_closed_target(Z4):
    with pytest.raises(MalformedTarget):
        set_product_in(Z4, [Z4.one_element], [Z4.one_element], ElementSet(Z4, [0, 1]))


# -- radical, nilpotents, idempotents ---------------------------------------------------


def test_radical_examples(Z4, M2, T2):
    assert coords(jacobson_radical(Z4)) == {(0,), (2,)}
    assert jacobson_radical(M2).is_zero()
    assert coords(jacobson_radical(T2)) == {(0, 0, 0), T_E12}
    assert jacobson_radical(T2).kind == "ideal"


def test_radical_matches_oracles(small_corpus):
    """Quasi-regularity against the brute-force definition and the maximal-ideal intersection."""
    for R in small_corpus.values():
        O = oracles.Ring(R)
        J = coords(jacobson_radical(R))
        assert J == O.radical(), R.name
        assert J == O.radical_by_maximal(), R.name


def test_radical_is_ideal_containing_nilpotent_ideals(corpus):
    for R in corpus.values():
        J = jacobson_radical(R)
        assert is_ideal(R, J, "ideal")
        if R.order > 512:
            continue
        for I in two_sided_ideals(R):
            if is_nilpotent_ideal(R, I)[0]:
                assert I.issubset(J), R.name


def test_radical_of_quotient_by_radical_is_zero(corpus):
    for R in corpus.values():
        Q, _ = quotient_ring(R, jacobson_radical(R))
        assert jacobson_radical(Q).is_zero(), R.name


def test_nil_elements(Z4, M2, Z2):
    assert coords(nil_elements(Z4)) == {(0,), (2,)}
    assert coords(nil_elements(Z2)) == {(0,)}
    N = nil_elements(M2)
    assert coords(N) == oracles.Ring(M2).nilpotents()
    # 0, E12, E21, and the two rank-one matrices with zero trace besides them
    assert coords(N) == {(0, 0, 0, 0), M_E12, M_E21, (1, 1, 1, 1)}


def test_nil_equals_radical_for_commutative(corpus):
    from ringlab.predicates import is_commutative
    seen = 0
    for R in corpus.values():
        if is_commutative(R):
            assert nil_elements(R) == jacobson_radical(R), R.name
            seen += 1
    assert seen >= 8


def test_nil_matches_oracle(small_corpus):
    for R in small_corpus.values():
        assert coords(nil_elements(R)) == oracles.Ring(R).nilpotents()


def test_units_idempotents(Z4, M2, small_corpus):
    assert coords(idempotents(Z4)) == {(0,), (1,)}
    assert coords(units(Z4)) == {(1,), (3,)}
    assert coords(central_idempotents(M2)) == {(0, 0, 0, 0), (1, 0, 0, 1)}
    for R in small_corpus.values():
        O = oracles.Ring(R)
        assert coords(units(R)) == O.units()
        E_ = coords(idempotents(R))
        assert E_ == O.idempotents()
        assert coords(central_idempotents(R)) <= E_
        assert {O.zero, O.one} <= E_


# -- lattices ------------------------------------------------------------------------


def test_right_ideal_examples(Z4, Z2, M2):
    assert [coords(I) for I in right_ideals(Z4)] == [{(0,)}, {(0,), (2,)}, {(0,), (1,), (2,), (3,)}]
    assert len(right_ideals(Z2)) == 2
    assert len(right_ideals(M2)) == 5


def test_right_ideals_match_oracle(small_corpus):
    for R in small_corpus.values():
        ours = {frozenset(coords(I)) for I in right_ideals(R)}
        assert ours == oracles.Ring(R).right_ideals(), R.name
        assert all(is_ideal(R, I, "right-ideal") for I in right_ideals(R))


def test_two_sided_ideals_match_oracle(small_corpus):
    for R in small_corpus.values():
        ours = {frozenset(coords(I)) for I in two_sided_ideals(R)}
        assert ours == oracles.Ring(R).ideals(), R.name


def test_m2z4_lattice_counts(corpus):
    R = corpus["M2(Z4)"]
    assert len(right_ideals(R)) == 15
    assert len(two_sided_ideals(R)) == 3


def test_maximal_right_ideals(Z4, Z2):
    assert [coords(I) for I in maximal_right_ideals(Z4)] == [{(0,), (2,)}]
    Z6 = cyclic_ring(6)
    assert {frozenset(coords(I)) for I in maximal_right_ideals(Z6)} == {
        frozenset({(0,), (2,), (4,)}), frozenset({(0,), (3,)})}
    assert [coords(I) for I in maximal_right_ideals(Z2)] == [{(0,)}]


def test_lattice_explosion_guard():
    from ringlab.constructions import matrix_ring
    R = matrix_ring(cyclic_ring(2), 2)
    with limits.override(lattice_bound=3):
        with pytest.raises(LatticeExplosion):
            right_ideals(R)


def test_lattice_cubic_cap():
    R = direct_product(cyclic_ring(32), cyclic_ring(32))
    with pytest.raises(OrderLimitExceeded):
        right_ideals(R)


def test_nilpotent_ideal_examples(T2, Z4, M2):
    assert is_nilpotent_ideal(T2, ElementSet(T2, [0, T2.index(E(T2, *T_E12))], "ideal")) == (True, 2)
    assert is_nilpotent_ideal(Z4, jacobson_radical(Z4)) == (True, 2)
    assert is_nilpotent_ideal(M2, ElementSet(M2, range(16), "ideal")) == (False, None)
    with pytest.raises(MalformedTarget):
        is_nilpotent_ideal(T2, ElementSet(T2, [0, T2.index(E(T2, *T_E11))]))


def test_nilpotent_index_of_strict_upper(corpus):
    from ringlab.constructions import strict_upper_positions
    from ringlab.ideals import generator_span
    R = corpus["SU3(Z2)"]
    U = generator_span(R, strict_upper_positions(cyclic_ring(2), 3, "scalarupper"))
    assert len(U) == 8
    assert is_nilpotent_ideal(R, U) == (True, 3)
    Z8 = corpus["Z8"]
    assert is_nilpotent_ideal(Z8, jacobson_radical(Z8)) == (True, 3)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["Z12", "T2(Z2)", "M2(Z2)", "S(Ex2.6)", "T3(Z2)"]), st.data())
def test_property_generated_contains_and_closed(name, data):
    from ringlab.corpus import default_rings
    R = {r.name: r for _, r in default_rings()}[name]
    idx = data.draw(st.lists(st.integers(0, R.order - 1), min_size=1, max_size=3))
    kind = data.draw(st.sampled_from(["right-ideal", "left-ideal", "ideal"]))
    G = generated(R, ElementSet(R, idx), kind)
    assert all(i in G for i in idx)
    assert is_ideal(R, G, kind)
    J = jacobson_radical(R)
    # J is an ideal, so adding it keeps closure
    assert is_ideal(R, generated(R, ElementSet(R, list(J.members) + idx), "ideal"), "ideal")

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ringlab.constructions import cyclic_ring, direct_product, matrix_ring
from ringlab.errors import (
    BadArity,
    DimensionMismatch,
    DuplicateProduct,
    MalformedLine,
    MissingProduct,
    OrderLimitExceeded,
)
from ringlab import limits
from ringlab.ring import (
    FiniteRing,
    RingElement,
    elem_add,
    elem_mul,
    elem_neg,
    enumerate_elements,
    is_unit,
    parse_element,
    parse_elements,
    parse_ring,
    serialize_ring,
    validate_ring,
)

Z4_TEXT = """\
# the integers mod 4
ring Z4
orders 4
one 1
mul 1 1 : 1
end
"""

T2_TEXT = """\
ring T2
orders 2 2 2
one 1 1 0
mul 1 1 : 1 0 0
mul 1 2 : 0 0 0
mul 1 3 : 0 0 1
mul 2 1 : 0 0 0
mul 2 2 : 0 1 0
mul 2 3 : 0 0 0
mul 3 1 : 0 0 0
mul 3 2 : 0 0 1
mul 3 3 : 0 0 0
end
"""


def E(R, *c):
    return R.elem(*c)


# -- parsing -------------------------------------------------------------------


def test_parse_z4():
    R = parse_ring(Z4_TEXT)
    assert R.name == "Z4"
    assert R.order == 4
    assert validate_ring(R).ok


def test_parse_missing_product():
    text = Z4_TEXT.replace("mul 1 1 : 1\n", "")
    with pytest.raises(MissingProduct):
        parse_ring(text)


def test_parse_t2_order_8_and_associative():
    R = parse_ring(T2_TEXT)
    assert R.order == 8
    assert validate_ring(R).ok
    O = oracles.Ring(R)
    assert all(O.m(O.m(a, b), c) == O.m(a, O.m(b, c)) for a in O.els for b in O.els for c in O.els)


def test_parse_duplicate_product():
    text = Z4_TEXT.replace("mul 1 1 : 1\n", "mul 1 1 : 1\nmul 1 1 : 1\n")
    with pytest.raises(DuplicateProduct) as err:
        parse_ring(text)
    assert err.value.lineno == 6


def test_parse_bad_arity():
    text = T2_TEXT.replace("mul 2 2 : 0 1 0", "mul 2 2 : 0 1")
    with pytest.raises(BadArity):
        parse_ring(text)


@pytest.mark.parametrize("bad", [
    Z4_TEXT.replace("ring Z4", "rung Z4"),
    Z4_TEXT.replace("orders 4", "orders four"),
    Z4_TEXT.replace("end\n", ""),
    Z4_TEXT + "mul 1 1 : 1\n",
    Z4_TEXT.replace("mul 1 1 : 1", "mul 1 1 1"),
    Z4_TEXT.replace("mul 1 1 : 1", "mul 1 2 : 1"),
    Z4_TEXT.replace("orders 4", "orders 0"),
])
def test_parse_malformed(bad):
    with pytest.raises((MalformedLine, MissingProduct)):
        parse_ring(bad)


def test_parse_reduces_coordinates():
    R = parse_ring(Z4_TEXT.replace("one 1", "one 5"))
    assert R.one == (1,)


def test_serialize_roundtrip_bytes(corpus):
    for R in corpus.values():
        text = serialize_ring(R)
        assert serialize_ring(parse_ring(text)) == text
        assert not any(line != line.rstrip() for line in text.splitlines())


def test_parse_elements():
    R = parse_ring(T2_TEXT)
    assert parse_element(R, "(1,0,1)") == RingElement((1, 0, 1))
    assert parse_elements(R, "(1,0,0) (0,0,1);(0,1,0)") == [E(R, 1, 0, 0), E(R, 0, 0, 1), E(R, 0, 1, 0)]
    with pytest.raises(DimensionMismatch):
        parse_element(R, "(1,0)")
    with pytest.raises(MalformedLine):
        parse_element(R, "1,0,0")


# -- validation ------------------------------------------------------------------


def test_validate_identity_violation():
    R = FiniteRing("bad", [4], [1], [[[2]]])
    rep = validate_ring(R)
    assert not rep.ok
    assert ("identity", (1,)) in rep.violations


def test_validate_m2z2():
    R = matrix_ring(cyclic_ring(2), 2)
    assert validate_ring(R).ok
    # E_ij E_kl = delta_jk E_il, exhaustively
    units = {(r, c): E(R, *[int(t == 2 * r + c) for t in range(4)]) for r in range(2) for c in range(2)}
    for (i, j), a in units.items():
        for (k, l), b in units.items():
            want = units[(i, l)] if j == k else R.zero
            assert elem_mul(R, a, b) == want


def test_validate_associativity_witness():
    # e1 e2 = e3 but e2 e2 = e2 breaks (e1 e2) e2 = e1 (e2 e2)? build one that does
    prods = [
        [[1, 0, 0], [0, 0, 1], [0, 0, 0]],
        [[0, 0, 0], [0, 1, 0], [0, 0, 0]],
        [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    ]
    R = FiniteRing("nonassoc", [2, 2, 2], [1, 1, 0], prods)
    rep = validate_ring(R)
    assert not rep.ok
    laws = {law for law, _ in rep.violations}
    assert "identity" in laws or "associativity" in laws


def test_validate_additive_order_witness():
    # e1 has order 2 but e1 e2 = (0,1) has order 4
    S = FiniteRing("badorder", [2, 4], [1, 0], [[[1, 0], [0, 1]], [[0, 1], [0, 1]]])
    rep = validate_ring(S)
    assert ("additive-order", (1, 2)) in rep.violations
    assert ("additive-order", (2, 1)) in rep.violations
    assert ("additive-order", (2, 2)) not in rep.violations


def _axioms_hold(R):
    O = oracles.Ring(R)
    for a in O.els:
        if O.m(O.one, a) != a or O.m(a, O.one) != a:
            return False
        for b in O.els:
            for c in O.els:
                if O.m(O.m(a, b), c) != O.m(a, O.m(b, c)):
                    return False
                if O.m(a, O.a(b, c)) != O.a(O.m(a, b), O.m(a, c)):
                    return False
    return True


def test_validate_perturbed_corpus(small_corpus):
    """Bumping one structure constant: validation agrees with the brute-force axioms."""
    rng = np.random.default_rng(0)
    caught = 0
    for R in small_corpus.values():
        if R.k < 2:
            continue
        i, j = rng.integers(R.k, size=2)
        t = int(rng.integers(R.k))
        prods = [[list(v) for v in row] for row in R.products]
        prods[i][j][t] = (prods[i][j][t] + 1) % R.orders[t]
        S = FiniteRing(R.name, R.orders, R.one, prods)
        ok = validate_ring(S).ok
        assert ok == _axioms_hold(S), R.name
        caught += not ok
    assert caught >= 5


def test_zero_ring_allowed():
    Z = FiniteRing("zero", [], [], [])
    assert validate_ring(Z).ok
    assert enumerate_elements(Z) == [RingElement(())]
    Z1 = FiniteRing("zero1", [1], [0], [[[0]]])
    assert validate_ring(Z1).ok and Z1.order == 1


# -- arithmetic -------------------------------------------------------------------------


def test_add_examples(Z4, T2):
    assert elem_add(Z4, E(Z4, 2), E(Z4, 3)) == E(Z4, 1)
    assert elem_add(Z4, E(Z4, 3), Z4.zero) == E(Z4, 3)
    e12 = E(T2, 0, 0, 1)
    assert elem_add(T2, e12, e12) == T2.zero


def test_neg_examples(Z4):
    assert elem_neg(Z4, E(Z4, 3)) == E(Z4, 1)
    assert elem_neg(Z4, Z4.zero) == Z4.zero
    V = direct_product(cyclic_ring(2), cyclic_ring(2))
    assert elem_neg(V, E(V, 1, 1)) == E(V, 1, 1)


def test_mul_examples(Z4, M2):
    E11, E12, E21 = E(M2, 1, 0, 0, 0), E(M2, 0, 1, 0, 0), E(M2, 0, 0, 1, 0)
    assert elem_mul(M2, E12, E21) == E11
    assert elem_mul(M2, E12, E11) == M2.zero
    assert elem_mul(Z4, E(Z4, 2), E(Z4, 3)) == E(Z4, 2)


def test_dimension_mismatch(Z4, T2):
    with pytest.raises(DimensionMismatch):
        elem_add(Z4, E(Z4, 1), E(T2, 1, 0, 0))
    with pytest.raises(DimensionMismatch):
        elem_mul(T2, E(Z4, 1), E(T2, 1, 0, 0))


def test_enumerate(Z4, M2):
    assert enumerate_elements(Z4) == [E(Z4, c) for c in range(4)]
    els = enumerate_elements(M2)
    assert len(els) == 16 and els[0] == M2.zero
    assert [e.coords for e in els] == oracles.elements(M2)


def test_enumerate_limit():
    R = matrix_ring(cyclic_ring(2), 2)
    with limits.override(max_order=8):
        with pytest.raises(OrderLimitExceeded):
            enumerate_elements(R)


def test_is_unit(Z4, M2):
    assert is_unit(Z4, E(Z4, 3)) == (True, E(Z4, 3))
    assert is_unit(Z4, E(Z4, 2))[0] is False
    assert is_unit(M2, E(M2, 1, 0, 0, 1))[0]


def test_mul_table_matches_oracle(small_corpus):
    for R in small_corpus.values():
        for a in range(R.order):
            for b in range(R.order):
                want = oracles.mul(R, R.element(a).coords, R.element(b).coords)
                assert R.element(int(R.mul[a, b])).coords == want


def test_unit_closure(corpus):
    for R in corpus.values():
        U = np.flatnonzero(R.unit_mask)
        assert R.unit_mask[R.one_idx]
        assert R.unit_mask[R.mul[np.ix_(U, U)]].all(), R.name


# -- properties ---------------------------------------------------------------------------

RINGS = [cyclic_ring(12), matrix_ring(cyclic_ring(4), 2),
         parse_ring(T2_TEXT), direct_product(cyclic_ring(2), cyclic_ring(3))]


@st.composite
def ring_and_elements(draw, n=3):
    R = draw(st.sampled_from(RINGS))
    els = [RingElement(tuple(draw(st.integers(0, d - 1)) for d in R.orders)) for _ in range(n)]
    return R, els


@settings(max_examples=200, deadline=None)
@given(ring_and_elements())
def test_bilinearity(data):
    R, (a, b, c) = data
    assert elem_mul(R, a, elem_add(R, b, c)) == elem_add(R, elem_mul(R, a, b), elem_mul(R, a, c))
    assert elem_mul(R, elem_add(R, a, b), c) == elem_add(R, elem_mul(R, a, c), elem_mul(R, b, c))


@settings(max_examples=200, deadline=None)
@given(ring_and_elements())
def test_ring_laws(data):
    R, (a, b, c) = data
    assert elem_add(R, a, b) == elem_add(R, b, a)
    assert elem_add(R, a, elem_neg(R, a)) == R.zero
    assert elem_mul(R, elem_mul(R, a, b), c) == elem_mul(R, a, elem_mul(R, b, c))
    assert elem_mul(R, R.one_element, a) == a == elem_mul(R, a, R.one_element)


@settings(max_examples=100, deadline=None)
@given(ring_and_elements(n=2))
def test_index_roundtrip(data):
    R, (a, b) = data
    assert R.element(R.index(a)) == a
    assert R.element(int(R.mul[R.index(a), R.index(b)])) == elem_mul(R, a, b)

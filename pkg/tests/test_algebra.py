import pytest
from hypothesis import given, settings, strategies as st

from catbound.algebra import (
    AlgebraError,
    Element,
    Monomial,
    RingPresentation,
    Substitution,
    add,
    degree,
    element,
    multiply,
    multiply_monomials,
    nilpotency_order,
    normal_form,
    scale,
)


def exterior(p, *degrees):
    return RingPresentation(
        p, [(f"x{d}", d, 2) for d in degrees], name=f"ext{p}"
    )


def sub_ring():
    # Z/2: x1^2 = x2, x2^4 = 0
    return RingPresentation(
        2,
        [("x1", 1), ("x2", 2, 4)],
        substitutions={"x1": Substitution(2, 1, (("x2", 1),))},
        name="sub2",
    )


# -- sorting signs -----------------------------------------------------------


def test_odd_odd_transposition_costs_a_sign_mod_3():
    ring = exterior(3, 1, 3)
    m = ring.monomial_word(["x3", "x1"])
    assert m == Monomial(2, (1, 1))  # -1 = 2 mod 3


def test_word_in_order_has_no_sign():
    ring = exterior(3, 1, 3)
    assert ring.monomial_word(["x1", "x3"]) == Monomial(1, (1, 1))


def test_even_factor_commutes_freely():
    ring = RingPresentation(3, [("a", 2, 3), ("b", 3, 2)])
    assert ring.monomial_word(["b", "a"]) == ring.monomial_word(["a", "b"])


def test_monomial_product_matches_word_construction():
    ring = exterior(5, 1, 3)
    u = ring.monomial({"x3": 1})
    v = ring.monomial({"x1": 1})
    assert multiply_monomials(u, v, ring) == ring.monomial_word(["x3", "x1"])


def test_graded_commutativity_sign():
    ring = exterior(5, 3, 5)
    u = ring.monomial({"x3": 1})
    v = ring.monomial({"x5": 1})
    uv = multiply_monomials(u, v, ring)
    vu = multiply_monomials(v, u, ring)
    assert vu.exps == uv.exps
    assert vu.coeff == (-uv.coeff) % 5  # both factors odd


# -- substitutions and truncations -------------------------------------------


def test_substitution_rewrites_high_powers():
    ring = sub_ring()
    m = normal_form(ring.monomial({"x1": 7}), ring)
    assert m == Monomial(1, (1, 3))  # x1^7 = x1 x2^3


def test_substitution_hits_truncation():
    ring = sub_ring()
    assert normal_form(ring.monomial({"x1": 8}), ring).is_zero()


def test_nilpotency_matches_repeated_multiplication():
    ring = sub_ring()
    x1 = ring.monomial({"x1": 1})
    acc = ring.one()
    k = 0
    while not acc.is_zero():
        acc = multiply_monomials(acc, x1, ring)
        k += 1
    assert k == 8
    assert nilpotency_order("x1", ring) == 8


def test_truncation_kills_exactly_at_the_cap():
    ring = RingPresentation(2, [("x", 1, 4)])
    assert not normal_form(ring.monomial({"x": 3}), ring).is_zero()
    assert normal_form(ring.monomial({"x": 4}), ring).is_zero()
    assert nilpotency_order("x", ring) == 4


def test_odd_generator_squares_to_zero_over_odd_prime():
    ring = RingPresentation(5, [("y", 3)])
    assert ring.effective_truncation("y") == 2
    assert normal_form(ring.monomial({"y": 2}), ring).is_zero()


def test_zero_target_substitution_is_a_truncation():
    ring = RingPresentation(
        2, [("x", 2)], substitutions={"x": Substitution(3, 0, ())}
    )
    assert ring.effective_truncation("x") == 3
    assert nilpotency_order("x", ring) == 3


def test_square_of_exterior_sum_vanishes_mod_2():
    ring = exterior(2, 1, 3)
    s = ring.element([ring.monomial({"x1": 1}), ring.monomial({"x3": 1})])
    assert multiply(s, s, ring).is_zero()


def test_substitution_carries_koszul_sign():
    # z/3: a (even) with a^3 = b*c, both odd and later.  Multiplying a^2 * a
    # must agree with normalizing a^3 directly.
    ring = RingPresentation(
        3,
        [("a", 2, None), ("b", 3, 2), ("c", 3, 2)],
        substitutions={"a": Substitution(3, 1, (("b", 1), ("c", 1)))},
    )
    direct = normal_form(ring.monomial({"a": 3}), ring)
    stepped = multiply_monomials(
        ring.monomial({"a": 2}), ring.monomial({"a": 1}), ring
    )
    assert direct == stepped == Monomial(1, (0, 1, 1))
    # a^3 * b = b*c*b = -b^2*c = 0 since b is exterior
    assert normal_form(ring.monomial({"a": 3, "b": 1}), ring).is_zero()
    # a^3 * c = b*c*c = 0
    assert normal_form(ring.monomial({"a": 3, "c": 1}), ring).is_zero()


def test_degree_is_additive_on_nonzero_products():
    ring = sub_ring()
    u = ring.monomial({"x1": 3})
    v = ring.monomial({"x1": 2, "x2": 1})
    w = multiply_monomials(u, v, ring)
    assert degree(w, ring) == 3 + 2 + 2
    assert degree(ring.zero_monomial(), ring) is None


# -- element arithmetic ------------------------------------------------------


def test_element_merges_and_drops_zero_terms():
    ring = RingPresentation(3, [("a", 2, 4)])
    m = ring.monomial({"a": 1})
    assert element([m, m, m], ring).is_zero()  # 3 = 0 mod 3
    two = element([m, m], ring)
    assert two == Element((Monomial(2, (1,)),))


def test_scale_by_modulus_is_zero():
    ring = exterior(5, 1, 3)
    s = ring.element([ring.monomial({"x1": 1}), ring.monomial({"x3": 1}, coeff=2)])
    assert scale(s, 5, ring).is_zero()
    assert scale(s, 1, ring) == s


# -- validation --------------------------------------------------------------


@pytest.mark.parametrize("p", [0, 1, 4, 6, 9])
def test_modulus_must_be_prime(p):
    with pytest.raises(AlgebraError, match="prime"):
        RingPresentation(p, [("x", 1, 2)])


def test_duplicate_generator_names_rejected():
    with pytest.raises(AlgebraError, match="duplicate"):
        RingPresentation(2, [("x", 1, 2), ("x", 3, 2)])


def test_degree_and_trunc_and_weight_bounds():
    with pytest.raises(AlgebraError, match="degree"):
        RingPresentation(2, [("x", 0, 2)])
    with pytest.raises(AlgebraError, match="truncation"):
        RingPresentation(2, [("x", 1, 1)])
    with pytest.raises(AlgebraError, match="weight"):
        RingPresentation(2, [("x", 1, 2, 0)])


def test_substitution_must_target_later_generators():
    with pytest.raises(AlgebraError, match="strictly after"):
        RingPresentation(
            2,
            [("x1", 1), ("x2", 2, 2)],
            substitutions={"x2": Substitution(2, 1, (("x1", 4),))},
        )
    with pytest.raises(AlgebraError, match="strictly after"):
        RingPresentation(
            2, [("x1", 1)], substitutions={"x1": Substitution(2, 1, (("x1", 2),))}
        )


def test_substitution_must_be_homogeneous():
    with pytest.raises(AlgebraError, match="homogeneous"):
        RingPresentation(
            2,
            [("x1", 1), ("x2", 3, 2)],
            substitutions={"x1": Substitution(2, 1, (("x2", 1),))},
        )


def test_generator_cannot_carry_two_rules():
    with pytest.raises(AlgebraError, match="both"):
        RingPresentation(
            2,
            [("x1", 1, 4), ("x2", 2, 2)],
            substitutions={"x1": Substitution(2, 1, (("x2", 1),))},
        )


def test_odd_prime_rejects_inconsistent_odd_generators():
    with pytest.raises(AlgebraError, match="squares to zero"):
        RingPresentation(3, [("y", 3, 4)])
    with pytest.raises(AlgebraError, match="squares to zero"):
        RingPresentation(
            3,
            [("y", 3), ("z", 6, 2)],
            substitutions={"y": Substitution(2, 1, (("z", 1),))},
        )


def test_unknown_substitution_names_rejected():
    with pytest.raises(AlgebraError, match="unknown generator"):
        RingPresentation(
            2, [("x", 1, 2)], substitutions={"q": Substitution(2, 1, ())}
        )
    with pytest.raises(AlgebraError, match="not a generator"):
        RingPresentation(
            2, [("x", 1)], substitutions={"x": Substitution(2, 1, (("q", 1),))}
        )


def test_non_nilpotent_presentation_is_reported():
    ring = RingPresentation(2, [("x", 2)])  # polynomial generator
    with pytest.raises(AlgebraError, match="not nilpotent"):
        nilpotency_order("x", ring)


# -- ring laws on random data ------------------------------------------------

_LAW_RINGS = [
    exterior(2, 1, 3),
    sub_ring(),
    RingPresentation(3, [("x1", 1, 2), ("a", 2, 3), ("x3", 3, 2)], name="mixed3"),
    RingPresentation(5, [("x1", 1, 2), ("a", 2, 5), ("x3", 3, 2)], name="mixed5"),
]


def _monomials(ring):
    bound = [nilpotency_order(g.name, ring) for g in ring.generators]
    vectors = st.tuples(*(st.integers(0, b) for b in bound))
    coeffs = st.integers(0, ring.p - 1)
    return st.builds(Monomial, coeffs, vectors)


def _elements(ring):
    return st.builds(
        lambda ms: element(ms, ring), st.lists(_monomials(ring), max_size=3)
    )


@pytest.mark.parametrize("ring", _LAW_RINGS, ids=lambda r: r.name)
def test_ring_laws(ring):
    @settings(max_examples=120, deadline=None)
    @given(a=_elements(ring), b=_elements(ring), c=_elements(ring))
    def laws(a, b, c):
        assert add(a, b, ring) == add(b, a, ring)
        assert add(add(a, b, ring), c, ring) == add(a, add(b, c, ring), ring)
        assert multiply(multiply(a, b, ring), c, ring) == multiply(
            a, multiply(b, c, ring), ring
        )
        assert multiply(a, add(b, c, ring), ring) == add(
            multiply(a, b, ring), multiply(a, c, ring), ring
        )
        assert scale(a, ring.p, ring).is_zero()
        one = ring.element([ring.one()])
        assert multiply(one, a, ring) == a

    laws()


@pytest.mark.parametrize("ring", _LAW_RINGS, ids=lambda r: r.name)
def test_monomial_commutation_sign(ring):
    @settings(max_examples=120, deadline=None)
    @given(u=_monomials(ring), v=_monomials(ring))
    def law(u, v):
        uv = multiply_monomials(u, v, ring)
        vu = multiply_monomials(v, u, ring)
        du, dv = degree(u, ring), degree(v, ring)
        if du is None or dv is None:
            assert uv.is_zero() and vu.is_zero()
            return
        sign = -1 if (du % 2 and dv % 2) else 1
        assert vu == normal_form(Monomial(sign * uv.coeff, uv.exps), ring)

    law()


@pytest.mark.parametrize("ring", _LAW_RINGS, ids=lambda r: r.name)
def test_normal_form_is_idempotent(ring):
    @settings(max_examples=120, deadline=None)
    @given(m=_monomials(ring))
    def law(m):
        nm = normal_form(m, ring)
        assert normal_form(nm, ring) == nm

    law()

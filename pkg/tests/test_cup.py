import random

import pytest

from catbound.algebra import (
    AlgebraError,
    RingPresentation,
    Substitution,
    normal_form,
)
from catbound.cup import (
    CupResult,
    SearchBudgetExceeded,
    WeightAssignment,
    cup_bruteforce_oracle,
    cup_length,
    weighted_wgt_lower,
)


def so5_ring():
    return RingPresentation(2, [("x1", 1, 8), ("x3", 3, 2)], name="so5")


def pu2_ring():
    return RingPresentation(
        2,
        [("x1", 1), ("x2", 2, 2)],
        substitutions={"x1": Substitution(2, 1, (("x2", 1),))},
        name="pu2",
    )


def pu3_ring():
    return RingPresentation(
        3, [("x1", 1, 2), ("x2", 2, 3), ("x3", 3, 2)], name="pu3"
    )


# -- exact values -------------------------------------------------------------


def test_truncated_polynomial_times_exterior():
    res = cup_length(so5_ring())
    assert res.value == 8
    assert res.witness == (7, 1)
    assert res.witness_str(so5_ring()) == "x1^7 x3"


def test_pure_exterior_algebra_counts_generators():
    ring = RingPresentation(2, [(f"x{2 * i + 1}", 2 * i + 1, 2) for i in range(1, 4)])
    assert cup_length(ring).value == 3


def test_substitution_ring_counts_generator_factors():
    # x1^2 = x2 and x2^2 = 0, so x1^3 is the longest word.
    res = cup_length(pu2_ring())
    assert res.value == 3
    assert res.witness == (3, 0)


def test_empty_ring_has_no_positive_classes():
    res = cup_length(RingPresentation(2, [], name="point"))
    assert res.value == 0
    assert res.witness == ()


def test_single_truncated_generator():
    ring = RingPresentation(2, [("x", 1, 4)])
    assert cup_length(ring).value == 3


def test_cup_is_additive_over_disjoint_generators():
    left = RingPresentation(2, [("x1", 1, 4)])
    right = RingPresentation(2, [("y3", 3, 2)])
    both = RingPresentation(2, [("x1", 1, 4), ("y3", 3, 2)])
    assert (
        cup_length(both).value
        == cup_length(left).value + cup_length(right).value
    )


def test_raising_a_truncation_raises_the_value():
    low = RingPresentation(2, [("x", 2, 3)])
    high = RingPresentation(2, [("x", 2, 5)])
    assert cup_length(high).value > cup_length(low).value


def test_witness_is_a_nonzero_normal_form_of_the_right_size():
    for ring in (so5_ring(), pu2_ring(), pu3_ring()):
        res = cup_length(ring)
        m = ring.monomial(
            {g.name: e for g, e in zip(ring.generators, res.witness)}
        )
        assert not normal_form(m, ring).is_zero()
        assert sum(res.witness) == res.value


# -- weighted variant ---------------------------------------------------------


def test_unit_weights_reproduce_the_plain_value():
    ring = pu3_ring()
    plain = cup_length(ring)
    unit = weighted_wgt_lower(ring, WeightAssignment.ones(ring))
    assert plain.value == unit.value == 4
    assert not plain.weighted and unit.weighted


def test_loopspace_even_weights_double_the_even_generator():
    ring = pu3_ring()
    weights = WeightAssignment.for_space(ring, loopspace_even=True)
    assert weights.weights == (1, 2, 1)
    res = weighted_wgt_lower(ring, weights)
    assert res.value == 6
    assert res.witness == (1, 2, 1)
    assert res.witness_str(ring) == "x1 x2^2 x3"


def test_default_weights_come_from_the_ring():
    ring = RingPresentation(2, [("x1", 1, 8, 1), ("x3", 3, 2, 3)])
    res = weighted_wgt_lower(ring)
    assert res.value == 7 * 1 + 1 * 3


def test_weighted_value_dominates_the_plain_one():
    rng = random.Random(7)
    for _ in range(20):
        ring = _random_ring(rng)
        weights = WeightAssignment(
            tuple(rng.randint(1, 3) for _ in ring.generators)
        )
        assert weighted_wgt_lower(ring, weights).value >= cup_length(ring).value


def test_weight_validation():
    ring = pu3_ring()
    with pytest.raises(AlgebraError, match="does not match"):
        weighted_wgt_lower(ring, WeightAssignment((1, 2)))
    with pytest.raises(AlgebraError, match=">= 1"):
        weighted_wgt_lower(ring, WeightAssignment((1, 0, 1)))


# -- search bookkeeping -------------------------------------------------------


def test_budget_exhaustion_is_reported():
    with pytest.raises(SearchBudgetExceeded, match="raise the budget"):
        cup_length(so5_ring(), max_nodes=2)


def test_result_is_reproducible():
    a = cup_length(so5_ring())
    b = cup_length(so5_ring())
    assert a == b == CupResult(8, (7, 1), False)


# -- agreement with the brute-force oracle ------------------------------------


def _random_ring(rng: random.Random) -> RingPresentation:
    """Substitution-free ring with at most 3 generators and top degree <= 12."""
    p = rng.choice([2, 3, 5])
    gens = []
    budget = 12
    for i in range(rng.randint(1, 3)):
        degree = rng.randint(1, 4)
        if p != 2 and degree % 2 == 1:
            trunc = 2
        else:
            trunc = rng.randint(2, 5)
        if degree * (trunc - 1) > budget:
            continue
        budget -= degree * (trunc - 1)
        gens.append((f"g{i}", degree, trunc))
    if not gens:
        gens = [("g0", 1, 2)]
    return RingPresentation(p, gens, name=f"rand{p}")


def test_oracle_spot_values():
    assert cup_bruteforce_oracle(RingPresentation(3, [("x1", 1, 2), ("x3", 3, 2)])) == 2
    assert cup_bruteforce_oracle(RingPresentation(2, [("x", 1, 4)])) == 3
    assert cup_bruteforce_oracle(pu2_ring()) == 3
    assert cup_bruteforce_oracle(RingPresentation(5, [], name="pt")) == 0


def test_oracle_refuses_large_rings():
    ring = RingPresentation(2, [(f"x{i}", 1, 2) for i in range(4)])
    with pytest.raises(AlgebraError, match="more than 3"):
        cup_bruteforce_oracle(ring)


def test_search_matches_oracle_on_random_rings():
    rng = random.Random(20260814)
    for _ in range(60):
        ring = _random_ring(rng)
        assert cup_length(ring).value == cup_bruteforce_oracle(ring)


def test_search_matches_oracle_on_substitution_rings():
    assert cup_length(pu2_ring()).value == cup_bruteforce_oracle(pu2_ring())
    deeper = RingPresentation(
        2,
        [("x1", 1), ("x2", 2, 4)],
        substitutions={"x1": Substitution(2, 1, (("x2", 1),))},
    )
    assert cup_length(deeper).value == cup_bruteforce_oracle(deeper) == 7

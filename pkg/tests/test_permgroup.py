import pytest
from hypothesis import given, strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from services.permgroup import (
    CapExceeded,
    DegreeMismatch,
    DegreeTooLarge,
    OutOfRange,
    RepeatedPoint,
    abelian_regular_group,
    closure,
    compose,
    compose_all,
    conjugacy_orbit,
    conjugate,
    cycle_type,
    cycles,
    format_cycles,
    from_cycles,
    from_model,
    identity,
    inverse,
    is_identity,
    order,
    pair_conjugator,
    parse_cycles,
    power,
    to_model,
    translation,
)
from strategies import perm_of_degree


def test_compose_applies_right_factor_first():
    p = from_cycles([(1, 2)], 3)
    q = from_cycles([(2, 3)], 3)
    assert format_cycles(compose(p, q)) == "(1,2,3)"
    assert format_cycles(compose(q, p)) == "(1,3,2)"


def test_transposition_squares_to_identity():
    t = from_cycles([(1, 2)], 2)
    assert is_identity(compose(t, t))


@pytest.mark.parametrize("cycle_list,degree,expected", [
    ([(5, 4, 1), (2, 6)], 7, 6),
    ([(1, 2, 3), (4, 5, 6, 7)], 7, 12),
    ([(1, 2, 3), (4, 5, 6, 7, 8)], 8, 15),
    ([], 4, 1),
])
def test_order(cycle_list, degree, expected):
    assert order(from_cycles(cycle_list, degree)) == expected


def test_cycles_start_at_smallest_point():
    p = from_cycles([(5, 4, 1), (2, 6)], 7)
    assert cycles(p) == [[1, 5, 4], [2, 6]]
    assert cycle_type(p) == (2, 3)
    assert format_cycles(p) == "(1,5,4)(2,6)"


def test_identity_formats_as_empty_cycle():
    assert format_cycles(identity(5)) == "()"


def test_from_cycles_rejects_bad_points():
    with pytest.raises(OutOfRange):
        from_cycles([(1, 9)], 4)
    with pytest.raises(RepeatedPoint):
        from_cycles([(1, 2), (2, 3)], 4)


def test_compose_rejects_mixed_degrees():
    with pytest.raises(DegreeMismatch):
        compose(identity(3), identity(4))


def test_parse_cycles_expands_ranges():
    assert parse_cycles("(1,2,3)(4..8)", 8) == from_cycles([(1, 2, 3), (4, 5, 6, 7, 8)], 8)
    assert parse_cycles("(5, 4, 1) (2 6)", 7) == from_cycles([(5, 4, 1), (2, 6)], 7)
    assert is_identity(parse_cycles("()", 3))


def test_parse_cycles_rejects_garbage():
    with pytest.raises(OutOfRange):
        parse_cycles("(1,2)x", 3)
    with pytest.raises(OutOfRange):
        parse_cycles("(1,a)", 3)


def test_power_handles_negative_exponents():
    p = from_cycles([(1, 2, 3, 4)], 4)
    assert power(p, -1) == inverse(p)
    assert power(p, 4) == identity(4)
    assert power(p, 6) == power(p, 2)


def test_compose_all_of_nothing_needs_degree():
    assert compose_all([], degree=3) == identity(3)
    with pytest.raises(OutOfRange):
        compose_all([])


def test_model_round_trip_keeps_cycle_form():
    p = from_cycles([(5, 4, 1), (2, 6)], 7)
    model = to_model(p)
    assert model.cycles == [[1, 5, 4], [2, 6]]
    assert from_model(model) == p


def test_closure_of_s3():
    group = closure([from_cycles([(1, 2)], 3), from_cycles([(1, 2, 3)], 3)])
    assert len(group) == 6
    assert list(group.members) == sorted(group.members)


def test_closure_of_identity_is_trivial():
    assert len(closure([identity(3)], cap=1)) == 1


def test_closure_of_nothing():
    assert len(closure([], degree=4)) == 1
    with pytest.raises(OutOfRange):
        closure([])


def test_closure_reports_partial_count_when_capped():
    gens = [from_cycles([(1, 2)], 4), from_cycles([(1, 2, 3, 4)], 4)]
    with pytest.raises(CapExceeded) as info:
        closure(gens, cap=10)
    assert info.value.partial_count > 10
    assert info.value.detail == {"partial_count": info.value.partial_count}


@pytest.mark.slow
def test_lemma_pair_generates_s7():
    a = from_cycles([(5, 4, 1), (2, 6)], 7)
    c = from_cycles([(1, 2, 3), (4, 5, 6, 7)], 7)
    assert len(closure([a, c])) == 5040


@given(st.integers(2, 6).flatmap(lambda n: st.lists(perm_of_degree(n), min_size=1, max_size=3)))
def test_closure_order_matches_sympy(gens):
    expected = PermutationGroup([Permutation([x - 1 for x in g.images]) for g in gens]).order()
    assert len(closure(gens)) == expected


@given(st.lists(perm_of_degree(4), min_size=1, max_size=2))
def test_closure_is_a_group(gens):
    group = closure(gens)
    for p in group:
        assert inverse(p) in group
        for g in gens:
            assert compose(p, g) in group


@given(perm_of_degree(6), perm_of_degree(6), perm_of_degree(6))
def test_compose_is_associative(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perm_of_degree(6))
def test_inverse_cancels(p):
    assert is_identity(compose(p, inverse(p)))
    assert is_identity(compose(inverse(p), p))


@given(perm_of_degree(7), perm_of_degree(7))
def test_conjugation_preserves_cycle_type(p, g):
    image = conjugate(p, g)
    assert image == compose(g, compose(p, inverse(g)))
    assert cycle_type(image) == cycle_type(p)


def test_conjugacy_class_of_transposition_in_s4():
    gens = [from_cycles([(1, 2)], 4), from_cycles([(1, 2, 3, 4)], 4)]
    assert len(conjugacy_orbit(from_cycles([(1, 2)], 4), gens)) == 6


def test_pair_conjugator_finds_relabelling():
    a, c = from_cycles([(1, 2)], 3), from_cycles([(2, 3)], 3)
    a2, c2 = from_cycles([(1, 2)], 3), from_cycles([(1, 3)], 3)
    witness = pair_conjugator(a, c, a2, c2)
    assert witness == from_cycles([(1, 2)], 3)
    assert conjugate(a, witness) == a2 and conjugate(c, witness) == c2


def test_pair_conjugator_returns_identity_first():
    a = from_cycles([(5, 4, 1), (2, 6)], 7)
    c = from_cycles([(1, 2, 3), (4, 5, 6, 7)], 7)
    assert pair_conjugator(a, c, a, c) == identity(7)


def test_lemma_pair_is_not_inverted_by_conjugation():
    a = from_cycles([(5, 4, 1), (2, 6)], 7)
    c = from_cycles([(1, 2, 3), (4, 5, 6, 7)], 7)
    assert pair_conjugator(a, c, inverse(a), inverse(c)) is None


def test_pair_conjugator_rejects_different_cycle_types():
    a = from_cycles([(1, 2)], 4)
    assert pair_conjugator(a, a, from_cycles([(1, 2, 3)], 4), a) is None


def test_pair_conjugator_refuses_large_degree():
    p = identity(10)
    with pytest.raises(DegreeTooLarge):
        pair_conjugator(p, p, p, p)


def test_translations_form_regular_abelian_group():
    group = abelian_regular_group(5)
    assert len(group) == 25
    assert len(closure(group.generators)) == 25
    t = translation((2, 3), 5)
    assert order(t) == 5
    assert compose(translation((1, 0), 5), translation((1, 3), 5)) == t

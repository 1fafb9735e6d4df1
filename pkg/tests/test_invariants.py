import pytest
from hypothesis import given, strategies as st

from schemas.surface import SurfaceInvariants
from services.invariants import (
    TABLE_FIELDS,
    BidoubleType,
    InvariantsService,
    NotApplicable,
    NotFoundWithinBound,
    Obstruction,
    OutOfRange,
    abc_invariants,
    abc_moduli_dimension,
    bidouble_invariants,
    diffeo_obstruction,
    from_model,
    hilbert_5canonical,
    homeo_test,
    manetti_baseline_k2,
    manetti_invariants,
    nondef_hypotheses,
    plurigenus,
    recover_abc,
    to_csv,
    to_markdown,
    to_model,
)


def test_bidouble_invariants():
    s = bidouble_invariants(BidoubleType(2, 3, 2, 3))
    assert (s.p_g, s.chi, s.K2, s.r) == (19, 20, 64, 2)
    assert (s.e, s.sigma) == (176, -96)
    assert s.simply_connected


def test_bidouble_rejects_non_general_type():
    with pytest.raises(OutOfRange):
        bidouble_invariants(BidoubleType(1, 1, 1, 1))
    with pytest.raises(OutOfRange):
        BidoubleType(0, 3, 2, 3)


@given(st.tuples(*[st.integers(1, 12)] * 4).filter(lambda t: t[0] + t[2] >= 3 and t[1] + t[3] >= 3))
def test_bidouble_symmetries(params):
    a, b, c, d = params
    s = bidouble_invariants(BidoubleType(a, b, c, d))
    for other in (BidoubleType(c, d, a, b), BidoubleType(b, a, d, c)):
        t = bidouble_invariants(other)
        assert (t.chi, t.K2, t.r) == (s.chi, s.K2, s.r)
    assert s.e == 12 * s.chi - s.K2
    assert 3 * s.sigma == s.K2 - 2 * s.e


def test_abc_invariants():
    s = abc_invariants(2, 3, 2)
    assert (s.chi, s.K2, s.r, s.sigma) == (20, 64, 2, -96)
    assert s.moduli_dimension == 74


def test_abc_ranges():
    for args in ((0, 3, 3), (2, 1, 2), (1, 3, 1)):
        with pytest.raises(OutOfRange):
            abc_invariants(*args)


@given(st.integers(1, 10), st.integers(2, 10), st.integers(1, 10))
def test_abc_depends_on_a_plus_c(a, b, c):
    if a + c < 3:
        return
    s, t = abc_invariants(a, b, c), abc_invariants(c, b, a)
    assert (s.chi, s.K2, s.r) == (t.chi, t.K2, t.r)


@given(st.integers(1, 8), st.integers(2, 8), st.integers(1, 8))
def test_abc_is_a_diagonal_bidouble_cover(a, b, c):
    if a + c < 3:
        return
    s = abc_invariants(a, b, c)
    t = bidouble_invariants(BidoubleType(a, b, c, b))
    assert (s.chi, s.K2) == (t.chi, t.K2)


def test_recover_abc():
    solutions = recover_abc(20, 64, 74)
    assert (2, 3, 2) in solutions
    for a, b, c in solutions:
        s = abc_invariants(a, b, c)
        assert (s.chi, s.K2, s.moduli_dimension) == (20, 64, 74)


def test_recover_abc_without_moduli_lists_every_split():
    solutions = recover_abc(20, 64)
    assert (1, 3, 3) in solutions and (3, 3, 1) in solutions
    for a, b, c in solutions:
        s = abc_invariants(a, b, c)
        assert (s.chi, s.K2) == (20, 64)


def test_recover_abc_impossible_values():
    assert recover_abc(20, 63) == []
    assert recover_abc(1, 0) == []


@given(st.integers(1, 8), st.integers(2, 8), st.integers(1, 8))
def test_recover_abc_finds_every_triple(a, b, c):
    if a + c < 3:
        return
    s = abc_invariants(a, b, c)
    assert (a, b, c) in recover_abc(s.chi, s.K2, abc_moduli_dimension(a, b, c))


def test_manetti_invariants():
    s = manetti_invariants(4, 5, 10)
    assert (s.K2, s.chi) == (166, 37)
    assert s.simply_connected
    assert s.r is None


def test_manetti_triple_points_lower_k2():
    assert manetti_invariants(4, 5, 0).K2 == manetti_baseline_k2(4, 5)
    assert manetti_invariants(4, 5, 1).K2 == manetti_baseline_k2(4, 5) - 1
    assert not manetti_invariants(4, 6, 0).simply_connected


@pytest.mark.parametrize("a", range(1, 9))
@pytest.mark.parametrize("b", range(1, 9))
def test_manetti_sweep(a, b):
    base = manetti_invariants(a, b, 0)
    assert base.K2 == manetti_baseline_k2(a, b)
    for n in range(1, 21):
        s = manetti_invariants(a, b, n)
        assert s.chi == base.chi
        assert s.K2 == manetti_invariants(a, b, n - 1).K2 - 1 == manetti_baseline_k2(a, b) - n
        # only two even degrees break simple connectivity
        assert s.simply_connected == (a % 2 == 1 or b % 2 == 1)
        assert s.r is None


@pytest.mark.parametrize("a,b,n", [(0, 3, 0), (3, 0, 0), (3, 3, -1)])
def test_manetti_rejects_out_of_range(a, b, n):
    with pytest.raises(OutOfRange):
        manetti_invariants(a, b, n)


def test_homeomorphic_abc_splits():
    s, t = abc_invariants(2, 3, 3), abc_invariants(3, 3, 2)
    assert homeo_test(s, t)
    assert homeo_test(s, s)


def test_different_invariants_are_not_homeomorphic():
    s = bidouble_invariants(BidoubleType(2, 3, 2, 3))
    t = bidouble_invariants(BidoubleType(3, 2, 2, 3))
    assert (t.chi, t.K2, t.r) == (21, 72, 3)
    assert not homeo_test(s, t)


def test_homeo_test_needs_known_divisibility():
    with pytest.raises(NotApplicable):
        homeo_test(manetti_invariants(4, 5, 10), abc_invariants(2, 3, 2))
    with pytest.raises(NotApplicable):
        homeo_test(manetti_invariants(4, 6, 0), abc_invariants(2, 3, 2))


def test_diffeo_obstruction():
    s = abc_invariants(2, 3, 2)
    assert diffeo_obstruction(s, s) == Obstruction.NO_OBSTRUCTION
    t = s.model_copy(update={"r": 6})
    assert diffeo_obstruction(s, t) == Obstruction.OBSTRUCTED
    assert diffeo_obstruction(s, manetti_invariants(4, 5, 10)) == Obstruction.NO_OBSTRUCTION


def test_noether_is_enforced():
    with pytest.raises(ValueError):
        SurfaceInvariants(kind="x", chi=2, p_g=1, K2=8, e=1, sigma=-8, simply_connected=True)


def test_plurigenera():
    assert plurigenus(20, 64, 2) == 84
    assert plurigenus(1, 1, 2) == 2
    with pytest.raises(OutOfRange):
        plurigenus(20, 64, 1)


@given(st.integers(1, 50), st.integers(1, 100), st.integers(1, 4))
def test_hilbert_5canonical(chi, K2, m):
    assert hilbert_5canonical(chi, K2, m) == chi + (5 * m - 1) * 5 * m * K2 // 2


def test_hilbert_examples():
    assert hilbert_5canonical(20, 64, 1) == 660
    assert hilbert_5canonical(1, 1, 1) == 11


def test_nondef_hypotheses_hold():
    report = nondef_hypotheses(20, 16, 6, 2)
    assert report.holds
    assert report.failed == []


def test_nondef_hypotheses_name_failures():
    assert nondef_hypotheses(10, 6, 4, 2).failed == ["I"]
    report = nondef_hypotheses(12, 8, 6, 2)
    assert report.failed == ["II"]
    assert report.clauses["IV2"] and not report.clauses["IV1"]
    assert "I" in nondef_hypotheses(9, 14, 4, 2).failed


def test_bidouble_model_round_trip():
    t = BidoubleType(3, 19, 3, 19)
    assert from_model(to_model(t)) == t


def test_box_family_of_two():
    report = InvariantsService().box_family(2)
    assert (report.exponent, report.scale) == (2, 2)
    assert [from_model(m) for m in report.types] == [BidoubleType(3, 19, 3, 19), BidoubleType(9, 11, 5, 3)]
    assert [s.chi for s in report.invariants] == [258, 258]
    assert [s.K2 for s in report.invariants] == [1152, 1152]
    assert [s.r for s in report.invariants] == [4, 12]


def test_box_family_of_one():
    report = InvariantsService().box_family(1)
    assert len(report.types) == 1


def test_box_family_of_three():
    report = InvariantsService().box_family(3)
    assert (report.exponent, report.scale) == (4, 1)
    types = [from_model(m) for m in report.types]
    assert types == [BidoubleType(3, 163, 3, 163), BidoubleType(5, 162, 3, 56), BidoubleType(6, 161, 4, 3)]
    invariants = report.invariants
    assert len({(s.chi, s.K2) for s in invariants}) == 1
    assert len({s.r for s in invariants}) == 3
    for i, s in enumerate(invariants):
        for t in invariants[i + 1:]:
            assert homeo_test(s, t)
            assert diffeo_obstruction(s, t) == Obstruction.OBSTRUCTED
    assert all(min(t.a, t.b, t.c, t.d) >= 3 for t in types)


def test_box_family_bound():
    with pytest.raises(NotFoundWithinBound) as info:
        InvariantsService(max_exponent=1, max_scale=3).box_family(2)
    assert info.value.detail == {"exponent": 1, "scale": 3}


@pytest.mark.parametrize("kwargs", [{"max_exponent": 0}, {"max_scale": 0}])
def test_box_bounds_must_be_positive(kwargs):
    with pytest.raises(OutOfRange):
        InvariantsService(**kwargs)


def test_table_emitters():
    rows = [abc_invariants(2, 3, 2), manetti_invariants(4, 5, 10)]
    lines = to_csv(rows).splitlines()
    assert lines[0] == ",".join(TABLE_FIELDS)
    assert lines[1].startswith("abc,2 3 2,20,19,0,64,")
    assert len(lines) == 3
    table = to_markdown(rows).splitlines()
    assert table[0].startswith("| kind |")
    assert len(table) == 4

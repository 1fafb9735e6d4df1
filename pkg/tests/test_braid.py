import pytest
from hypothesis import given, strategies as st

from services.braid import (
    BraidWord,
    FreeWord,
    RankMismatch,
    StrandMismatch,
    WordSyntaxError,
    artin_apply,
    braid_equal,
    braid_images,
    braid_inverse,
    braid_multiply,
    braid_to_perm,
    coxeter_chain,
    format_word,
    full_twist,
    fw_inverse,
    fw_multiply,
    generator,
    half_twist,
    parse_braid,
    parse_free_word,
)
from services.permgroup import compose, from_cycles, identity
from strategies import braid_word, free_word


def test_free_words_reduce():
    assert fw_multiply(generator(3, 1), FreeWord(3, (-1,))).letters == ()
    u = FreeWord(3, (1, -2))
    v = FreeWord(3, (2, 3))
    assert fw_multiply(u, v).letters == (1, 3)
    assert fw_inverse(u).letters == (2, -1)


def test_free_word_rejects_letters_outside_rank():
    with pytest.raises(WordSyntaxError):
        FreeWord(2, (3,))
    with pytest.raises(WordSyntaxError):
        FreeWord(2, (0,))


def test_multiply_checks_rank():
    with pytest.raises(RankMismatch):
        fw_multiply(generator(2, 1), generator(3, 1))


def test_artin_generator_images():
    s1 = BraidWord(3, (1,))
    assert braid_images(s1) == (
        FreeWord(3, (2,)),
        FreeWord(3, (-2, 1, 2)),
        FreeWord(3, (3,)),
    )
    s1_inv = BraidWord(3, (-1,))
    assert artin_apply(s1_inv, generator(3, 1)).letters == (1, 2, -1)
    assert artin_apply(s1_inv, generator(3, 2)).letters == (1,)


def test_braid_relations():
    for n in range(3, 9):
        for i in range(1, n - 1):
            assert braid_equal(BraidWord(n, (i, i + 1, i)), BraidWord(n, (i + 1, i, i + 1)))
        for i in range(1, n):
            for j in range(i + 2, n):
                assert braid_equal(BraidWord(n, (i, j)), BraidWord(n, (j, i)))


def test_distinct_braids_differ():
    assert not braid_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))
    assert not braid_equal(BraidWord(3, (1,)), BraidWord(3, (-1,)))
    assert braid_equal(BraidWord(3, (1, -1)), BraidWord(3))


def test_braid_equal_checks_strands():
    with pytest.raises(StrandMismatch):
        braid_equal(BraidWord(3), BraidWord(4))


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), braid_word(n))))
def test_product_of_generators_is_fixed(case):
    n, b = case
    top = FreeWord(n, tuple(range(1, n + 1)))
    assert artin_apply(b, top) == top


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(braid_word(n), free_word(n))))
def test_inverse_braid_undoes_action(case):
    b, w = case
    assert artin_apply(b, artin_apply(braid_inverse(b), w)) == w
    assert braid_equal(braid_multiply(b, braid_inverse(b)), BraidWord(b.strands))


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(braid_word(n), braid_word(n), free_word(n))))
def test_product_acts_left_factor_first(case):
    b1, b2, w = case
    assert artin_apply(braid_multiply(b1, b2), w) == artin_apply(b2, artin_apply(b1, w))


def test_full_twist_words():
    assert full_twist(2).letters == (1, 1)
    assert full_twist(3).letters == (2, 1) * 3
    with pytest.raises(WordSyntaxError):
        full_twist(1)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_full_twist_is_conjugation_by_product(d):
    c = FreeWord(d, tuple(range(1, d + 1)))
    for i in range(1, d + 1):
        expected = fw_multiply(fw_multiply(fw_inverse(c), generator(d, i)), c)
        assert artin_apply(full_twist(d), generator(d, i)) == expected


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), braid_word(n))))
def test_full_twist_is_central(case):
    n, b = case
    twist = full_twist(n)
    assert braid_equal(braid_multiply(twist, b), braid_multiply(b, twist))


def test_half_twist_is_the_coxeter_chain():
    half = half_twist(4)
    assert half == coxeter_chain(3)
    assert half.letters == (1, 2, 1, 3, 2, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_coxeter_chain_squares_to_full_twist(n):
    chain = coxeter_chain(n)
    assert chain.strands == n + 1
    assert braid_equal(braid_multiply(chain, chain), full_twist(n + 1))


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_full_twist_commutes_with_every_generator(d):
    twist = full_twist(d)
    for i in range(1, d):
        sigma = BraidWord(d, (i,))
        assert braid_equal(braid_multiply(twist, sigma), braid_multiply(sigma, twist))


def test_braid_to_perm():
    assert braid_to_perm(BraidWord(3, (1,))) == from_cycles([(1, 2)], 3)
    assert braid_to_perm(BraidWord(3, (1, 2))) == from_cycles([(1, 2, 3)], 3)
    assert braid_to_perm(full_twist(3)) == identity(3)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(braid_word(n), braid_word(n))))
def test_braid_to_perm_is_a_homomorphism(case):
    b1, b2 = case
    assert braid_to_perm(braid_multiply(b1, b2)) == compose(braid_to_perm(b1), braid_to_perm(b2))


def test_parse_and_format():
    b = parse_braid("s1 s2^-1 s1^2", 3)
    assert b.letters == (1, -2, 1, 1)
    assert str(b) == "s1 s2^-1 s1 s1"
    assert parse_free_word("g1 g2^-1 g2", 2).letters == (1,)
    assert parse_braid("e", 3).letters == ()
    assert format_word((), "s") == "e"


@pytest.mark.parametrize("text", ["t1", "s", "s1^x", "s3"])
def test_parse_rejects_bad_words(text):
    with pytest.raises(WordSyntaxError):
        parse_braid(text, 3)

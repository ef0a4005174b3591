import pytest
from hypothesis import given
from strategies import letters, raw_seqs, words

from palwidth.words import (
    AB,
    AT,
    EMPTY,
    Alphabet,
    ParseError,
    Word,
    format_word,
    parse,
    reduce,
    run_word,
    shortlex_key,
)


class TestParse:
    def test_caret_and_alias(self):
        assert parse("a^2 B", AB).letters == (("a", 1), ("a", 1), ("b", -1))

    def test_reduction_on_parse(self):
        assert parse("a A", AB) == EMPTY

    def test_at_alphabet(self):
        assert parse("t^-1 a t", AT).letters == (("t", -1), ("a", 1), ("t", 1))

    def test_packed_tokens(self):
        assert parse("aBab", AB).letters == (("a", 1), ("b", -1), ("a", 1), ("b", 1))

    def test_negative_exponent_on_alias(self):
        assert parse("A^-2", AB) == parse("a^2", AB)

    def test_zero_exponent(self):
        assert parse("a^0 b", AB) == parse("b", AB)

    def test_unknown_generator_position(self):
        with pytest.raises(ParseError) as exc:
            parse("a c", AB)
        assert exc.value.position == 2

    def test_missing_exponent(self):
        with pytest.raises(ParseError):
            parse("a^", AB)
        with pytest.raises(ParseError):
            parse("a^x", AB)

    def test_non_letter(self):
        with pytest.raises(ParseError):
            parse("a+b", AB)


class TestFormat:
    def test_runs(self):
        assert format_word(parse("aaaBB", AB)) == "a^3 b^-2"

    def test_empty(self):
        assert format_word(EMPTY) == ""
        assert parse("", AB) == EMPTY

    @given(words(AB))
    def test_round_trip(self, w):
        assert parse(format_word(w), AB) == w

    def test_canonicalizes(self):
        assert format_word(parse("a a b B a", AB)) == "a^3"


class TestReduce:
    def test_inverse_cancellation(self):
        assert reduce([("a", 1), ("a", -1)]) == EMPTY

    def test_inner_cancellation(self):
        assert reduce(parse("a", AB).letters + parse("b", AB).letters
                      + parse("B", AB).letters + parse("a", AB).letters) == parse("a a", AB)

    def test_already_reduced(self):
        w = parse("a b A", AB)
        assert reduce(w.letters) == w

    @given(raw_seqs(AB, 16))
    def test_idempotent(self, raw):
        once = reduce(raw)
        assert reduce(once.letters) == once

    def test_constructor_rejects_unreduced(self):
        with pytest.raises(ValueError):
            Word((("a", 1), ("a", -1)))


class TestInvolutions:
    @given(words(AB))
    def test_reverse_reverse(self, w):
        assert w.reverse().reverse() == w

    @given(words(AB))
    def test_invert_invert(self, w):
        assert w.inverse().inverse() == w

    @given(words(AB))
    def test_invert_reverse_commute(self, w):
        assert w.inverse().reverse() == w.reverse().inverse()

    @given(words(AB))
    def test_group_inverse(self, w):
        assert w * w.inverse() == EMPTY
        assert w.inverse() * w == EMPTY

    def test_examples(self):
        assert parse("a B", AB).reverse() == parse("B a", AB)
        assert parse("a b", AB).inverse() == parse("B A", AB)
        assert parse("A", AB).inverse() == parse("a", AB)


class TestPalindromeStability:
    """Free reduction commutes with reversal, so reducing a symmetric raw
    sequence always yields a symmetric word."""

    @given(raw_seqs(AB, 10))
    def test_even_symmetric(self, raw):
        symmetric = raw + list(reversed(raw))
        assert reduce(symmetric).is_palindrome()

    @given(raw_seqs(AB, 10), letters(AB))
    def test_odd_symmetric(self, raw, center):
        symmetric = raw + [center] + list(reversed(raw))
        assert reduce(symmetric).is_palindrome()

    @given(raw_seqs(AB, 12))
    def test_reduce_commutes_with_reversal(self, raw):
        assert reduce(list(reversed(raw))) == reduce(raw).reverse()


class TestPalindromeTest:
    def test_examples(self):
        assert parse("a b a", AB).is_palindrome()
        assert not parse("a b", AB).is_palindrome()
        assert parse("A b A", AB).is_palindrome()
        assert not parse("a b A", AB).is_palindrome()  # signs respected
        assert EMPTY.is_palindrome()


def test_run_word():
    assert run_word("a", 3) == parse("a^3", AB)
    assert run_word("b", -2) == parse("b^-2", AB)
    assert run_word("a", 0) == EMPTY


def test_shortlex_letter_order():
    ws = [parse(s, AB) for s in ("a", "A", "b", "B", "aa", "ab")]
    keys = [shortlex_key(w, AB) for w in ws]
    assert keys == sorted(keys)


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(())
    with pytest.raises(ValueError):
        Alphabet(("ab",))
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))
    assert AB.index("b") == 1
    with pytest.raises(ValueError):
        AB.index("t")

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbool.terms import (Alphabet, Diff, Join, Meet, ParseError, Variable, Zero,
                            format_term, parse, variables)

from conftest import random_term

x, y, z, w = Variable("x"), Variable("y"), Variable("z"), Variable("w")


class TestParse:
    def test_zero(self):
        assert parse("0") == Zero()

    def test_precedence_meet_over_join(self):
        assert parse("x & y | z") == Join(Meet(x, y), z)

    def test_atomic_term_shape(self):
        assert parse("(x & y) \\ (z | w)") == Diff(Meet(x, y), Join(z, w))

    def test_diff_binds_tighter_than_meet(self):
        assert parse("x & y \\ z") == Meet(x, Diff(y, z))

    def test_left_associativity(self):
        assert parse("x \\ y \\ z") == Diff(Diff(x, y), z)
        assert parse("x | y | z") == Join(Join(x, y), z)
        assert parse("x & y & z") == Meet(Meet(x, y), z)

    def test_unicode_aliases(self):
        assert parse("x ∧ y ∨ z") == parse("x & y | z")
        assert parse("x ∖ y") == parse("x \\ y")

    def test_parens_override(self):
        assert parse("x & (y | z)") == Meet(x, Join(y, z))

    def test_identifier_rules(self):
        assert parse("_a1 & B_2") == Meet(Variable("_a1"), Variable("B_2"))

    @pytest.mark.parametrize("bad", ["", "x &", "(x", "x y", "1x", "x + y", "()"])
    def test_syntax_errors(self, bad):
        with pytest.raises(ParseError):
            parse(bad)

    def test_error_byte_offset(self):
        with pytest.raises(ParseError) as err:
            parse("x & $")
        assert err.value.offset == 4
        assert err.value.expected

    def test_error_offset_counts_bytes_not_chars(self):
        # the unicode meet sign is 3 bytes in utf-8
        with pytest.raises(ParseError) as err:
            parse("x ∧ $")
        assert err.value.offset == 6


class TestFormat:
    def test_zero(self):
        assert format_term(Zero()) == "0"

    def test_forced_parens(self):
        assert format_term(Meet(x, Join(y, z))) == "x & (y | z)"

    def test_atomic_term(self):
        # the chosen minimal-parens rule keeps the meet part parenthesized,
        # since difference binds tighter
        assert format_term(Diff(Meet(x, y), z)) == "(x & y) \\ z"

    def test_no_redundant_parens(self):
        assert format_term(Join(Meet(x, y), z)) == "x & y | z"
        assert format_term(Diff(Diff(x, y), z)) == "x \\ y \\ z"
        assert format_term(Diff(x, Diff(y, z))) == "x \\ (y \\ z)"


class TestVariables:
    def test_zero(self):
        assert variables(Zero()).names == ()

    def test_first_occurrence_order(self):
        assert variables(parse("x | y | x")).names == ("x", "y")

    def test_atom_term(self):
        t = parse("(y1 & y2) \\ (y3 | y4)")
        assert variables(t).names == ("y1", "y2", "y3", "y4")


terms = st.recursive(
    st.sampled_from([x, y, z, w, Zero()]),
    lambda sub: st.builds(Meet, sub, sub) | st.builds(Join, sub, sub) | st.builds(Diff, sub, sub),
    max_leaves=25,
)


@given(terms)
@settings(max_examples=300)
def test_round_trip(t):
    assert parse(format_term(t)) == t


def test_format_injective_on_samples():
    rng = random.Random(7)
    sample = {random_term(rng, ["x", "y", "z"], 5) for _ in range(600)}
    rendered = {format_term(t) for t in sample}
    assert len(rendered) == len(sample)


class TestAlphabet:
    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Alphabet(["x", "x"])

    def test_rejects_bad_names(self):
        with pytest.raises(ValueError):
            Alphabet(["1x"])

    def test_extended(self):
        a = Alphabet(["x"]).extended("y")
        assert a.names == ("x", "y")
        with pytest.raises(ValueError):
            a.extended("x")

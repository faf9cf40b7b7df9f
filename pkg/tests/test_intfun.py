"""Finitely supported integer functions: canonical form, calculus ops,
serialization."""
import random

import pytest
from hypothesis import given, strategies as st

from acmchar import ConstantTailError, IntFun, indicator

intfuns = st.builds(
    IntFun,
    st.integers(min_value=-6, max_value=6),
    st.lists(st.integers(min_value=-9, max_value=9), max_size=8).map(tuple),
)


class TestCanonicalForm:
    def test_trims_leading_and_trailing_zeros(self):
        f = IntFun(2, (0, 0, 5, 0, -1, 0))
        assert f.offset == 4
        assert f.values == (5, 0, -1)

    def test_zero_function_is_unique(self):
        assert IntFun(7, (0, 0)) == IntFun()
        assert IntFun().is_zero()

    def test_semantic_equality_and_hash(self):
        a = IntFun(0, (0, 1, 2, 0))
        b = IntFun(1, (1, 2))
        assert a == b
        assert hash(a) == hash(b)
        assert len({a, b}) == 1

    def test_call_outside_window_is_zero(self):
        f = IntFun(-1, (3, 4))
        assert (f(-2), f(-1), f(0), f(1)) == (0, 3, 4, 0)

    @given(intfuns)
    def test_no_zero_endpoints(self, f):
        if not f.is_zero():
            assert f.values[0] != 0 and f.values[-1] != 0


class TestQueries:
    def test_sup_inf_total_degree(self):
        f = IntFun(0, (-1, -2, -1, 4))
        assert f.inf() == 0 and f.sup() == 3
        assert f.total() == 0
        assert f.degree() == -2 - 2 + 12
        assert f.is_character()

    def test_zero_has_no_support_bounds(self):
        assert IntFun().sup() is None
        assert IntFun().inf() is None

    def test_support_iterates_window(self):
        f = IntFun(1, (2, 0, 3))
        assert list(f.support()) == [(1, 2), (2, 0), (3, 3)]

    def test_indicator(self):
        e = indicator(4)
        assert e(4) == 1 and e.total() == 1 and e.sup() == 4


class TestCalculus:
    def test_diff_example(self):
        h = IntFun(0, (1, 3, 4))
        assert h.diff() == IntFun(0, (1, 2, 1, -4))

    @given(intfuns)
    def test_diff_sums_to_zero(self, f):
        assert f.diff().is_character()

    @given(intfuns)
    def test_primitive_inverts_diff(self, f):
        assert f.diff().primitive() == f

    @given(intfuns)
    def test_diff_inverts_primitive_for_characters(self, f):
        g = f.diff()  # always a character
        assert g.primitive().diff() == g

    def test_primitive_rejects_nonzero_sum(self):
        with pytest.raises(ConstantTailError) as info:
            IntFun(0, (1, 2)).primitive()
        assert info.value.tail == 3

    def test_shift_moves_argument(self):
        f = IntFun(0, (1, 2))
        g = f.shift(-3)
        assert g(3) == 1 and g(4) == 2 and g(0) == 0

    @given(intfuns, st.integers(min_value=-5, max_value=5))
    def test_shift_roundtrip(self, f, d):
        assert f.shift(d).shift(-d) == f


class TestArithmetic:
    @given(intfuns, intfuns)
    def test_add_pointwise(self, f, g):
        s = f + g
        lo, hi = -20, 20
        assert all(s(n) == f(n) + g(n) for n in range(lo, hi))

    @given(intfuns)
    def test_sub_self_is_zero(self, f):
        assert (f - f).is_zero()

    @given(intfuns)
    def test_neg_involution(self, f):
        assert -(-f) == f


class TestSerialization:
    @given(intfuns)
    def test_json_roundtrip(self, f):
        assert IntFun.from_json(f.to_json()) == f

    def test_parse_positional(self):
        assert IntFun.parse("(-1,-2,-1,4)") == IntFun(0, (-1, -2, -1, 4))
        assert IntFun.parse(" ( 1, 3 ,4 ) ") == IntFun(0, (1, 3, 4))

    def test_parse_unicode_minus(self):
        assert IntFun.parse("(−1,1)") == IntFun(0, (-1, 1))

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            IntFun.parse("(1,x)")

    def test_str_pads_from_zero(self):
        assert str(IntFun(2, (5,))) == "(0,0,5)"
        assert str(IntFun()) == "(0)"

    def test_str_negative_offset_keeps_offset(self):
        assert str(IntFun(-1, (1, 2))) == "(1,2)@-1"

    def test_parse_str_roundtrip_for_nonneg_offset(self):
        rng = random.Random(7)
        for _ in range(50):
            f = IntFun(rng.randint(0, 4),
                       tuple(rng.randint(-3, 3) for _ in range(5)))
            assert IntFun.parse(str(f)) == f

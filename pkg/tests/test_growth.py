"""Growth verification, the lex-segment oracle and layer decomposition of
Macaulay functions."""
import pytest

from acmchar import (
    Decomposition,
    IntFun,
    MacaulayFn,
    decompose,
    is_macaulay,
    lex_oracle,
    s0_of,
    type12_shape,
)
from acmchar.growth import HIGHER_TYPE, NOT_MACAULAY, TYPE0, TYPE1, TYPE2

from helpers import macaulay_functions


def F(*vals):
    return IntFun(0, tuple(vals))


class TestIsMacaulay:
    def test_accepts_known_sequences(self):
        for vals in [(1,), (1, 1, 1), (1, 2, 3, 2), (1, 3), (1, 3, 4),
                     (1, 3, 6), (1, 3, 5, 3), (1, 4, 10, 20)]:
            assert is_macaulay(F(*vals)), vals

    def test_rejects_bad_sequences(self):
        assert not is_macaulay(IntFun())
        assert not is_macaulay(F(2, 1))
        assert not is_macaulay(F(1, -1, 1))
        assert not is_macaulay(F(1, 2, 4))  # 4 > upper(2,1) = 3
        assert not is_macaulay(F(1, 1, 2))  # type 1 cannot grow
        assert not is_macaulay(IntFun(-1, (1, 1, 1)))

    def test_no_revival_after_zero(self):
        assert not is_macaulay(F(1, 2, 0, 1))

    def test_validated_wrapper(self):
        mf = MacaulayFn(F(1, 3, 4))
        assert mf.type_a == 3 and mf(2) == 4
        with pytest.raises(ValueError):
            MacaulayFn(F(1, 2, 4))


class TestS0:
    def test_examples(self):
        assert s0_of(F(1, 1)) == 2
        assert s0_of(F(1, 2, 3, 2)) == 3
        assert s0_of(F(1, 3, 6, 3)) == 3
        assert s0_of(F(1, 3, 4)) == 2

    def test_undefined_for_type_zero(self):
        with pytest.raises(ValueError):
            s0_of(F(1))

    def test_matches_decomposition_layer_count(self):
        for h in macaulay_functions(3, 11):
            if h(1) == 3:
                assert s0_of(h) == decompose(h).r + 1


class TestLexOracle:
    def test_agrees_with_growth_on_samples(self):
        samples = [(1, 3, 4), (1, 3, 6, 3), (1, 2, 4), (1, 3, 5, 8),
                   (1, 4, 3, 5), (1, 1, 1, 1), (1, 2, 3, 4, 3)]
        for vals in samples:
            h = F(*vals)
            assert lex_oracle(h) == is_macaulay(h), vals

    def test_rejects_negative_values_and_bad_start(self):
        assert not lex_oracle(F(1, 2, -1))
        assert not lex_oracle(F(2, 1))
        assert not lex_oracle(IntFun())

    def test_scale_bound_enforced(self):
        with pytest.raises(ValueError):
            lex_oracle(F(1, 5, 5))
        with pytest.raises(ValueError):
            lex_oracle(F(1, 1, 1, 1, 1, 1, 1, 1, 1, 1))

    def test_value_above_monomial_count_fails(self):
        assert not lex_oracle(F(1, 2, 4))


class TestDecompose:
    def test_small_examples(self):
        assert decompose(F(1, 3)).parts == (F(1, 2), F(1))
        assert decompose(F(1, 3, 4)).parts == (F(1, 2, 3), F(1, 1))
        assert decompose(F(1, 3, 6)).parts == (F(1, 2, 3), F(1, 2), F(1))

    def test_layer_shifts_recompose(self):
        dec = decompose(F(1, 3, 6))
        total = IntFun()
        for i, p in enumerate(dec.parts):
            total = total + p.shift(-i)
        assert total == F(1, 3, 6)

    def test_needs_type_at_least_two(self):
        with pytest.raises(ValueError):
            decompose(F(1, 1, 1))

    def test_rejects_non_macaulay(self):
        with pytest.raises(ValueError):
            decompose(F(1, 3, 7))

    def test_type_two_universe(self):
        for h in macaulay_functions(2, 12):
            if h(1) != 2:
                continue
            dec = decompose(h)
            assert dec.recompose() == h
            assert dec.s0 == s0_of(h)
            for p in dec.parts[:-1]:
                assert p(1) == 1
            assert dec.parts[-1](1) <= 1

    def test_layer_s0_strictly_decreasing(self):
        for h in macaulay_functions(3, 12):
            if h(1) != 3:
                continue
            dec = decompose(h)
            s0s = [s0_of(p) for p in dec.parts if p(1) >= 1]
            assert all(a > b for a, b in zip(s0s, s0s[1:]))

    def test_validate_flags_broken_layers(self):
        with pytest.raises(ValueError):
            Decomposition((F(1, 2), F(1, 1))).validate(3)  # overlap
        with pytest.raises(ValueError):
            Decomposition((F(1, 3), F(1))).validate(3)  # wrong layer type
        with pytest.raises(ValueError):
            Decomposition((F(1, 2, 3),)).validate(3)  # single layer


class TestMinimalMass:
    def test_type_a_function_with_s0_s_has_mass_at_least_binom(self):
        # mass >= C(a+s-1, s-1) when h(n) is full up to s0
        from acmchar import binom
        for h in macaulay_functions(3, 14):
            if h(1) != 3:
                continue
            s = s0_of(h)
            assert h.total() >= binom(3 + s - 1, s - 1)


class TestType12Shape:
    def test_classification(self):
        assert type12_shape(IntFun()) == TYPE0
        assert type12_shape(F(1)) == TYPE0
        assert type12_shape(F(1, 1, 1)) == TYPE1
        assert type12_shape(F(1, 2, 3, 2, 2)) == TYPE2
        assert type12_shape(F(1, 3, 4)) == HIGHER_TYPE
        assert type12_shape(F(1, 2, 4)) == NOT_MACAULAY
        assert type12_shape(F(2, 1)) == NOT_MACAULAY

    def test_type2_shape_rejects_regrowth_after_drop(self):
        assert type12_shape(F(1, 2, 2, 3)) == NOT_MACAULAY

    def test_agrees_with_is_macaulay_for_small_types(self):
        for a in (0, 1, 2):
            for h in macaulay_functions(a, 10):
                shape = type12_shape(h)
                assert shape != NOT_MACAULAY
                assert is_macaulay(h)

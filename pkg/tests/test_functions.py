import numpy as np
import pytest

from ternary_codes.exceptions import (
    LinearFunctionError,
    ParameterRangeError,
    TernaryCodesUserWarning,
)
from ternary_codes.functions import (
    Family,
    TableFunction,
    WeightClassFunction,
    as_table,
    characteristic,
    check_theorem_range,
    check_weight_classes,
    evaluate,
    make,
    random_class_function,
    random_table_function,
    set_a_size,
    table_dimension,
)
from ternary_codes.gf3 import F3, F3Vector, enumerate_vectors
from ternary_codes.walsh import linear_coincidence


class TestMake:
    @pytest.mark.parametrize(
        "family, S, values",
        [
            ("g", (), (0, 1, 1, 0, 0, 0)),
            ("gbar", (), (0, 0, 0, 1, 1, 1)),
            ("f", (1,), (0, 2, 1, 0, 0, 0)),
            ("f", (2,), (0, 1, 2, 0, 0, 0)),
            ("f", (1, 2), (0, 2, 2, 0, 0, 0)),
        ],
    )
    def test_class_values(self, family, S, values):
        fn = make(family, 5, 2, S)
        assert fn.class_values == values
        assert fn.family is Family(family)
        assert (fn.m, fn.k, fn.S) == (5, 2, frozenset(S))

    @pytest.mark.parametrize(
        "m, k, bound",
        [(4, 1, "'m'"), (4, 2, "'m'"), (5, 1, "'k'"), (5, 3, "'k'"), (9, 5, "'k'")],
    )
    def test_theorem_range(self, m, k, bound):
        with pytest.raises(ParameterRangeError, match=bound):
            make("g", m, k)
        with pytest.raises(ParameterRangeError, match=bound):
            check_theorem_range(m, k)

    def test_range_error_is_value_error(self):
        with pytest.raises(ValueError):
            make("gbar", 4, 2)

    @pytest.mark.parametrize("S", [(), (3,), (0, 1)])
    def test_invalid_weight_classes(self, S):
        with pytest.raises(ParameterRangeError, match="'S'"):
            make("f", 5, 2, S)
        with pytest.raises(ParameterRangeError, match="'S'"):
            check_weight_classes(Family.F, 2, S)

    def test_valid_weight_classes(self):
        assert check_weight_classes(Family.F, 3, [3, 1, 3]) == frozenset({1, 3})
        assert check_weight_classes(Family.GBAR, 3, ()) == frozenset()

    def test_weight_classes_only_for_f(self):
        with pytest.raises(ParameterRangeError, match="only applies to family f"):
            make("g", 5, 2, (1,))

    def test_custom_family(self):
        with pytest.raises(ValueError, match="'family'"):
            make(Family.CUSTOM, 5, 2)

    class TestUnchecked:
        def test_warns(self):
            with pytest.warns(TernaryCodesUserWarning, match="theorem range"):
                fn = make("g", 4, 1, unchecked=True)
            assert fn.class_values == (0, 1, 0, 0, 0)

        def test_in_range_is_silent(self):
            assert make("g", 5, 2, unchecked=True) == make("g", 5, 2)

        @pytest.mark.parametrize("k", [0, 5])
        def test_k_still_bounded(self, k):
            with pytest.raises(ParameterRangeError, match="'k'"):
                make("g", 4, k, unchecked=True)

        def test_linear(self):
            with pytest.warns(TernaryCodesUserWarning):
                with pytest.raises(LinearFunctionError) as info:
                    make("gbar", 3, 3, unchecked=True)
            assert info.value.vector == (0, 0, 0)


class TestWeightClassFunction:
    def test_evaluate(self):
        fn = make("f", 5, 2, (1,))
        assert evaluate(fn, F3Vector((0, 0, 0, 0, 0))) == 0
        assert evaluate(fn, F3Vector((0, 2, 0, 0, 0))) == 2
        assert fn(F3Vector((1, 0, 2, 0, 0))) == 1
        assert type(fn(F3Vector((1, 1, 1, 0, 0)))) is F3

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="Dimension mismatch"):
            make("g", 5, 2)(F3Vector((1, 0)))

    def test_table(self):
        fn = make("gbar", 5, 2)
        table = fn.table()
        assert table.shape == (3**5,)
        assert table.tolist() == [int(fn(x)) for x in enumerate_vectors(5)]

    @pytest.mark.parametrize(
        "values, message",
        [
            ([0, 1], "Expected 4 class values"),
            ([1, 0, 0, 0], "c_0"),
            ([0, 3, 0, 0], "'value' out of range"),
        ],
    )
    def test_invalid(self, values, message):
        with pytest.raises(ValueError, match=message):
            WeightClassFunction(3, values)

    @pytest.mark.parametrize(
        "fn, label",
        [
            (make("gbar", 9, 2), "gbar_(9,2)"),
            (make("f", 7, 3, (1, 3)), "f_(7,3,S={1,3})"),
            (WeightClassFunction(3, [0, 1, 2, 0]), "custom_(3,0120)"),
        ],
    )
    def test_label(self, fn, label):
        assert fn.label == label

    def test_set_a(self):
        fn = make("f", 5, 2, (1,))
        assert fn.set_a == (frozenset({1}), 10)
        assert set_a_size(5, (1, 2)) == 50
        assert fn.support_classes == (1, 2)

    def test_dict(self):
        fn = make("f", 7, 3, (2,))
        assert WeightClassFunction.from_dict(fn.to_dict()) == fn
        custom = WeightClassFunction(3, [0, 2, 2, 1])
        assert WeightClassFunction.from_dict(custom.to_dict()) == custom

    def test_dict_inconsistent(self):
        data = make("g", 5, 2).to_dict()
        data["class_values"] = [0, 1, 0, 0, 0, 0]
        with pytest.raises(ValueError, match="'class_values'"):
            WeightClassFunction.from_dict(data)

    def test_immutable(self):
        fn = make("g", 5, 2)
        with pytest.raises(AttributeError):
            fn.m = 6


class TestTableFunction:
    def test_evaluate(self):
        values = [0, 1, 2, 2, 0, 1, 1, 1, 0]
        fn = TableFunction(2, values)
        assert [int(fn(x)) for x in enumerate_vectors(2)] == values
        assert fn.support_size == 6

    def test_from_function(self):
        fn = make("g", 5, 2)
        table = TableFunction.from_function(fn)
        assert table.table().tolist() == fn.table().tolist()

    @pytest.mark.parametrize(
        "values, message",
        [
            ([0] * 8, "Expected 9 values"),
            ([1] + [0] * 8, "f\\(0\\)"),
            ([0] * 8 + [3], "'value' out of range"),
        ],
    )
    def test_invalid(self, values, message):
        with pytest.raises(ValueError, match=message):
            TableFunction(2, values)


class TestCharacteristic:
    def test_values(self):
        D = [F3Vector((1, 0)), F3Vector((2, 2))]
        fn = characteristic(D, 2)
        assert [x for x in enumerate_vectors(2) if fn(x)] == sorted(D)

    def test_zero_vector(self):
        with pytest.raises(ValueError, match="'D'"):
            characteristic([F3Vector((0, 0))], 2)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="Dimension mismatch"):
            characteristic([F3Vector((1, 0, 0))], 2)


class TestRandom:
    @pytest.mark.parametrize("seed", range(5))
    def test_class_function(self, seed):
        fn = random_class_function(4, np.random.default_rng(seed))
        assert fn.family is Family.CUSTOM
        assert any(fn.class_values)

    @pytest.mark.parametrize("seed", range(5))
    def test_table_function(self, seed):
        fn = random_table_function(3, np.random.default_rng(seed))
        assert fn.values[0] == 0
        assert linear_coincidence(fn) is None


class TestTables:
    def test_as_table(self):
        assert as_table(np.array([0, 4, -1])).tolist() == [0, 1, 2]
        assert as_table(make("g", 5, 2)).dtype == np.int64

    @pytest.mark.parametrize("size, m", [(3, 1), (27, 3), (3**7, 7)])
    def test_table_dimension(self, size, m):
        assert table_dimension(np.zeros(size)) == m

    @pytest.mark.parametrize("size", [1, 2, 10, 80])
    def test_table_dimension_invalid(self, size):
        with pytest.raises(ValueError, match="power of 3"):
            table_dimension(np.zeros(size))

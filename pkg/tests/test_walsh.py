import numpy as np
import pytest

from ternary_codes import set_spectrum_max_m, walsh
from ternary_codes.combinatorics import krawtchouk, lloyd
from ternary_codes.eisenstein import ZETA, EisensteinInt
from ternary_codes.exceptions import (
    BudgetExceededError,
    InconsistencyError,
    ParameterRangeError,
)
from ternary_codes.functions import (
    Family,
    TableFunction,
    WeightClassFunction,
    make,
    random_class_function,
    random_table_function,
)
from ternary_codes.gf3 import (
    F3Vector,
    enumerate_by_weight,
    enumerate_vectors,
    vector_table,
)
from ternary_codes.walsh import (
    WalshSpectrum,
    character_sum,
    linear_coincidence,
    mesnager_check,
    walsh_brute,
    walsh_class,
    walsh_re2_closed,
    walsh_spectrum_brute,
    weight_from_re2,
)

from . import family_instances, reset_budget


class TestCharacterSum:
    @pytest.mark.parametrize("m", range(1, 5))
    def test_krawtchouk(self, m):
        for u in enumerate_vectors(m):
            for t in range(m + 1):
                assert character_sum(u, t) == EisensteinInt(
                    krawtchouk(t, u.weight, m), 0
                )

    def test_small(self):
        assert character_sum(F3Vector((1, 0)), 1) == EisensteinInt(1, 0)
        assert character_sum(F3Vector((0, 0)), 2) == EisensteinInt(4, 0)

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="'t'"):
            character_sum(F3Vector((1, 0)), 3)


class TestWalshBrute:
    def test_zero_function(self):
        zero = np.zeros(27, dtype=np.int64)
        assert walsh_brute(zero, F3Vector((0, 0, 0))) == EisensteinInt(27, 0)
        assert walsh_brute(zero, F3Vector((1, 2, 0))) == EisensteinInt(0, 0)

    def test_single_point(self):
        fn = TableFunction(1, [0, 1, 0])
        # 1 + ζ + 1 at w = 0
        assert walsh_brute(fn, F3Vector((0,))) == EisensteinInt(2, 0) + ZETA

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="Dimension mismatch"):
            walsh_brute(make("g", 5, 2), F3Vector((1, 0)))


class TestWalshClass:
    @pytest.mark.parametrize("fn", family_instances(5))
    def test_matches_brute(self, fn):
        for i in range(fn.m + 1):
            expected = walsh_class(fn, i)
            for w in enumerate_by_weight(fn.m, i):
                assert walsh_brute(fn, w) == expected

    @pytest.mark.parametrize("seed", range(3))
    def test_custom_tables(self, seed):
        fn = random_class_function(4, np.random.default_rng(seed))
        spectrum = walsh_spectrum_brute(fn)
        for w in enumerate_vectors(4):
            assert spectrum[w] == walsh_class(fn, w.weight)

    def test_gbar_factorization(self):
        fn = make("gbar", 7, 3)
        for i in range(1, 8):
            assert walsh_class(fn, i) == (1 - ZETA) * lloyd(3, i, 7)

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="'i'"):
            walsh_class(make("g", 5, 2), 6)


class TestWalshReClosed:
    @pytest.mark.parametrize("m", [5, 6, 7])
    def test_matches_class_values(self, m):
        for fn in family_instances(m):
            for i in range(m + 1):
                assert walsh_re2_closed(fn.family, m, fn.k, fn.S, i) == (
                    walsh_class(fn, i).re2
                )

    def test_f_equals_g(self):
        for i in range(8):
            assert walsh_re2_closed("f", 7, 3, {2}, i) == walsh_re2_closed(
                "g", 7, 3, (), i
            )

    def test_golden(self):
        assert walsh_re2_closed("gbar", 9, 2, i=1) == 336
        assert weight_from_re2(336, 9) == 13010

    def test_errors(self):
        with pytest.raises(ParameterRangeError, match="'S'"):
            walsh_re2_closed("f", 5, 2, (), 1)
        with pytest.raises(ParameterRangeError, match="subset of 1..2"):
            walsh_re2_closed("f", 5, 2, {5}, 1)
        with pytest.raises(ParameterRangeError, match="only applies to family f"):
            walsh_re2_closed("gbar", 5, 2, {1}, 1)
        with pytest.raises(ParameterRangeError, match="'m'"):
            walsh_re2_closed("g", 4, 2)
        with pytest.raises(ParameterRangeError):
            walsh_re2_closed(Family.CUSTOM, 5, 2)
        with pytest.raises(ValueError, match="'i'"):
            walsh_re2_closed("g", 5, 2, i=6)


class TestWeightFromRe2:
    @pytest.mark.parametrize("m", [5, 6])
    def test_matches_distribution(self, m):
        fn = make("g", m, 2)
        vectors = vector_table(m).astype(np.int64)
        table = fn.table().astype(np.int64)
        for w in list(enumerate_vectors(m))[1::7]:
            word = (table - vectors @ np.asarray(w, dtype=np.int64)) % 3
            assert weight_from_re2(walsh_class(fn, w.weight).re2, m) == (
                np.count_nonzero(word[1:])
            )

    def test_inexact(self):
        with pytest.raises(InconsistencyError):
            weight_from_re2(1, 5)


class TestSpectrum:
    def test_class_function(self):
        fn = make("g", 5, 2)
        spectrum = walsh_spectrum_brute(fn)
        assert isinstance(spectrum, WalshSpectrum)
        assert len(spectrum) == 3**5
        assert spectrum.is_weight_class_invariant()
        assert spectrum.re2_by_weight() == {
            i: walsh_class(fn, i).re2 for i in range(6)
        }

    def test_not_invariant(self):
        fn = TableFunction(2, [0, 1, 0, 0, 0, 0, 0, 0, 0])
        spectrum = walsh_spectrum_brute(fn)
        assert not spectrum.is_weight_class_invariant()
        with pytest.raises(InconsistencyError, match="weight class"):
            spectrum.re2_by_weight()

    def test_parseval(self):
        fn = random_table_function(4, np.random.default_rng(7))
        assert sum(value.norm for value in walsh_spectrum_brute(fn)) == 3**8

    def test_jobs_deterministic(self):
        fn = random_table_function(5, np.random.default_rng(1))
        assert walsh_spectrum_brute(fn, jobs=2) == walsh_spectrum_brute(fn, jobs=1)

    def test_jobs_split_work(self, monkeypatch):
        sizes = []

        def serial_map(func, items, jobs=None):
            items = list(items)
            sizes.append(len(items))
            return [func(item) for item in items]

        monkeypatch.setattr(walsh, "parallel_map", serial_map)
        fn = random_table_function(3, np.random.default_rng(5))
        assert walsh_spectrum_brute(fn, jobs=4) == walsh_spectrum_brute(fn, jobs=1)
        assert sizes == [4, 1]

    @reset_budget()
    def test_budget(self):
        set_spectrum_max_m(4)
        with pytest.raises(BudgetExceededError) as info:
            walsh_spectrum_brute(make("g", 5, 2))
        assert (info.value.required, info.value.limit) == (5, 4)
        assert info.value.name == "spectrum_max_m"


class TestLinearCoincidence:
    @pytest.mark.parametrize("w", [(0, 0, 0), (1, 0, 0), (2, 1, 0), (1, 1, 2)])
    def test_linear_tables(self, w):
        w = F3Vector(w)
        values = [
            sum(int(a) * int(b) for a, b in zip(x, w)) % 3 for x in enumerate_vectors(3)
        ]
        assert linear_coincidence(TableFunction(3, values)) == w
        assert linear_coincidence(np.array(values)) == w

    def test_zero_class_function(self):
        assert linear_coincidence(WeightClassFunction(4, [0] * 5)) == (0,) * 4

    @pytest.mark.parametrize("fn", family_instances(6))
    def test_families(self, fn):
        assert linear_coincidence(fn) is None


class TestMesnager:
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_weight_balls(self, m):
        vectors = list(enumerate_vectors(m))[1:]
        for k in range(m + 1):
            assert mesnager_check([v for v in vectors if v.weight <= k], m)

    @pytest.mark.parametrize("seed", range(10))
    def test_random_subsets(self, seed):
        rng = np.random.default_rng(seed)
        vectors = list(enumerate_vectors(3))[1:]
        D = [v for v, keep in zip(vectors, rng.integers(0, 2, len(vectors))) if keep]
        assert mesnager_check(D, 3)

    def test_empty(self):
        assert mesnager_check([], 2)

    @reset_budget()
    def test_budget(self):
        set_spectrum_max_m(2)
        with pytest.raises(BudgetExceededError):
            mesnager_check([], 3)

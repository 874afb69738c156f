import pytest

from ternary_codes import set_spectrum_max_m, utils
from ternary_codes.exceptions import BudgetExceededError, TernaryCodesUserWarning
from ternary_codes.utils import cached, check_budget, chunk_ranges, parallel_map

from . import reset_budget


def square(x):
    return x * x


class TestChunkRanges:
    @pytest.mark.parametrize(
        "total, parts, sizes",
        [(10, 3, [4, 3, 3]), (2, 5, [1, 1]), (9, 1, [9]), (0, 3, [0]), (7, 7, [1] * 7)],
    )
    def test_sizes(self, total, parts, sizes):
        ranges = chunk_ranges(total, parts)
        assert [len(chunk) for chunk in ranges] == sizes
        assert [i for chunk in ranges for i in chunk] == list(range(total))

    @pytest.mark.parametrize(
        "total, parts, name", [(-1, 2, "'total'"), (5, 0, "'parts'")]
    )
    def test_invalid(self, total, parts, name):
        with pytest.raises(ValueError, match=name):
            chunk_ranges(total, parts)


class TestParallelMap:
    @pytest.mark.parametrize("jobs", [1, 2, 3])
    def test_order(self, jobs):
        assert parallel_map(square, range(20), jobs) == [x * x for x in range(20)]

    @reset_budget()
    def test_default_jobs(self):
        utils._default_jobs = 2
        assert parallel_map(square, [3, 4]) == [9, 16]

    def test_empty(self):
        assert parallel_map(square, [], 4) == []

    def test_invalid_jobs(self):
        with pytest.raises(ValueError, match="'jobs'"):
            parallel_map(square, [1], 0)


class TestCached:
    def test_caches(self):
        calls = []

        @cached
        def double(x):
            calls.append(x)
            return 2 * x

        assert double(3) == double(3) == 6
        assert calls == [3]
        double._invalidate_cache()
        assert double(3) == 6
        assert calls == [3, 3]

    def test_not_redecorated(self):
        @cached
        def identity(x):
            return x

        assert cached(identity) is identity


class TestBudget:
    @reset_budget()
    def test_check(self):
        set_spectrum_max_m(5)
        check_budget("spectrum_max_m", 5)
        with pytest.raises(BudgetExceededError) as info:
            check_budget("spectrum_max_m", 6)
        assert "spectrum_max_m" in str(info.value)
        assert (info.value.required, info.value.limit) == (6, 5)

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("TERNARY_CODES_SPECTRUM_MAX_M", "10")
        assert utils._read_env_budget("spectrum_max_m", 8) == 10
        monkeypatch.delenv("TERNARY_CODES_SPECTRUM_MAX_M")
        assert utils._read_env_budget("spectrum_max_m", 8) == 8

    @pytest.mark.parametrize("raw", ["ten", "0", "-2"])
    def test_malformed_environment(self, monkeypatch, raw):
        monkeypatch.setenv("TERNARY_CODES_MINIMALITY_MAX_M", raw)
        with pytest.warns(TernaryCodesUserWarning, match="TERNARY_CODES_MINIMALITY"):
            assert utils._read_env_budget("minimality_max_m", 6) == 6

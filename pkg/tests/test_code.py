import json

import numpy as np
import pytest

from ternary_codes import set_brute_force_max_m
from ternary_codes.code import (
    CodeSpec,
    CompleteWeightEnumerator,
    SymbolCounts,
    WeightDistribution,
    codeword_counts_brute,
    codeword_counts_closed,
    cwe_brute,
    cwe_closed,
    gbar_weights,
    nlambda_closed,
    parameters,
    weight_distribution_brute,
    weight_distribution_closed,
)
from ternary_codes.combinatorics import krawtchouk, lloyd
from ternary_codes.exceptions import (
    BudgetExceededError,
    InconsistencyError,
    ParameterRangeError,
)
from ternary_codes.functions import (
    WeightClassFunction,
    make,
    random_class_function,
    random_table_function,
)
from ternary_codes.gf3 import F3Vector, enumerate_by_weight

from . import GOLDEN_DISTRIBUTION, GOLDEN_POLYNOMIAL, family_instances, reset_budget

gbar_9_2 = make("gbar", 9, 2)


class TestSymbolCounts:
    def test_properties(self):
        counts = SymbolCounts(192, 30, 20)
        assert counts.length == 242
        assert counts.weight == 50

    @pytest.mark.parametrize(
        "counts, monomial",
        [
            ((192, 50, 0), "w0^192 w1^50"),
            ((0, 1, 0), "w1"),
            ((1, 2, 3), "w0 w1^2 w2^3"),
            ((0, 0, 0), "1"),
        ],
    )
    def test_monomial(self, counts, monomial):
        assert SymbolCounts(*counts).to_monomial() == monomial


class TestNLambda:
    def test_golden(self):
        assert nlambda_closed(gbar_9_2, 1, 1, 0) == 6673
        assert codeword_counts_closed(gbar_9_2, 1, 1).t0 == 6672
        assert codeword_counts_closed(gbar_9_2, 1, 1).weight == 13010
        assert codeword_counts_closed(gbar_9_2, 1, 0) == (162, 19520, 0)

    def test_zero_codeword(self):
        fn = make("g", 5, 2)
        assert [nlambda_closed(fn, 0, 0, lam) for lam in range(3)] == [243, 0, 0]

    @pytest.mark.parametrize("fn", family_instances(5))
    def test_matches_brute(self, fn):
        for u in range(3):
            for i in range(fn.m + 1):
                v = next(enumerate_by_weight(fn.m, i))
                assert codeword_counts_closed(fn, u, i) == codeword_counts_brute(
                    fn, u, v
                )

    def test_f_case(self):
        fn = make("f", 7, 3, (1, 3))
        for i in range(1, 8):
            counts = [nlambda_closed(fn, 1, i, lam) for lam in range(3)]
            assert sum(counts) == 3**7
            assert counts[1] == (
                3**6 + lloyd(3, i, 7) - krawtchouk(1, i, 7) - krawtchouk(3, i, 7) - 1
            )

    @pytest.mark.parametrize(
        "args, name", [((3, 1, 0), "'u'"), ((1, 10, 0), "'i'"), ((1, 1, 3), "'lam'")]
    )
    def test_invalid(self, args, name):
        with pytest.raises(ValueError, match=name):
            nlambda_closed(gbar_9_2, *args)


class TestWeightDistribution:
    def test_golden(self):
        dist = weight_distribution_closed(gbar_9_2)
        assert dict(dist) == GOLDEN_DISTRIBUTION
        assert dist.to_polynomial() == GOLDEN_POLYNOMIAL
        assert dist.total == 3**10
        assert (dist.min_nonzero_weight, dist.max_weight) == (13010, 19520)

    @pytest.mark.parametrize("u", [1, 2])
    def test_golden_weight_seven_class(self, u):
        v = F3Vector((1,) * 7 + (0, 0))
        brute = codeword_counts_brute(gbar_9_2, u, v)
        assert brute == codeword_counts_closed(gbar_9_2, u, 7)
        assert brute.weight == 3**9 - 3**8 + 5 == 13127
        assert weight_distribution_closed(gbar_9_2)[13127] == 9216
        assert 13133 not in weight_distribution_closed(gbar_9_2)

    @pytest.mark.parametrize("fn", family_instances(5))
    def test_closed_equals_brute(self, fn):
        assert weight_distribution_closed(fn) == weight_distribution_brute(fn)

    @pytest.mark.parametrize("seed", range(3))
    def test_custom_tables(self, seed):
        fn = random_class_function(5, np.random.default_rng(seed))
        assert weight_distribution_closed(fn) == weight_distribution_brute(fn)

    def test_f_shares_distribution_with_g(self):
        g = weight_distribution_closed(make("g", 7, 3))
        for S in [(1,), (2,), (3,), (1, 3), (1, 2, 3)]:
            assert weight_distribution_closed(make("f", 7, 3, S)) == g

    def test_dict(self):
        fn = make("g", 5, 2)
        dist = weight_distribution_closed(fn)
        data = json.loads(json.dumps(dist.to_dict(fn)))
        assert data["family"] == "g"
        assert data["dist"][0] == {"w": "0", "A": "1"}
        assert WeightDistribution.from_dict(data) == dist

    def test_dict_table_function(self):
        fn = random_table_function(3, np.random.default_rng(0))
        data = weight_distribution_brute(fn).to_dict(fn)
        assert (data["family"], data["k"]) == ("table", None)

    def test_malformed_dict(self):
        with pytest.raises(ValueError, match="Malformed"):
            WeightDistribution.from_dict({"m": "5"})

    def test_check_total(self):
        with pytest.raises(InconsistencyError, match="3\\^6"):
            WeightDistribution(5, {0: 1, 50: 2}).check_total()

    def test_zero_multiplicities_dropped(self):
        assert dict(WeightDistribution(5, {0: 1, 7: 0})) == {0: 1}

    def test_immutable_mapping(self):
        dist = weight_distribution_closed(make("g", 5, 2))
        with pytest.raises(TypeError):
            dist[0] = 2
        assert hash(dist) == hash(weight_distribution_closed(make("g", 5, 2)))


class TestCompleteWeightEnumerator:
    @pytest.mark.parametrize("fn", family_instances(5))
    def test_closed_equals_brute(self, fn):
        assert cwe_closed(fn) == cwe_brute(fn)

    def test_f_differs_from_g(self):
        g = cwe_closed(make("g", 5, 2))
        assert cwe_closed(make("f", 5, 2, (1,))) != g
        assert cwe_closed(make("f", 5, 2, (2,))) != g

    def test_weight_distribution(self):
        fn = make("f", 6, 2, (2,))
        assert cwe_closed(fn).weight_distribution() == weight_distribution_closed(fn)

    def test_polynomial(self):
        polynomial = cwe_closed(make("g", 5, 2)).to_polynomial()
        assert polynomial.startswith("w0^242 + ")
        assert polynomial.count(" + ") == len(cwe_closed(make("g", 5, 2))) - 1

    def test_dict(self):
        fn = make("gbar", 6, 2)
        cwe = cwe_closed(fn)
        data = json.loads(json.dumps(cwe.to_dict(fn)))
        assert {"t0": "728", "t1": "0", "t2": "0", "mult": "1"} in data["terms"]
        assert CompleteWeightEnumerator.from_dict(data) == cwe

    def test_invalid_length(self):
        with pytest.raises(ValueError, match="length must be 242"):
            CompleteWeightEnumerator(5, {(242, 1, 0): 1})

    def test_jobs_deterministic(self):
        fn = random_table_function(4, np.random.default_rng(3))
        assert cwe_brute(fn, jobs=2) == cwe_brute(fn, jobs=1)

    @reset_budget()
    def test_budget(self):
        set_brute_force_max_m(5)
        with pytest.raises(BudgetExceededError, match="brute_force_max_m"):
            cwe_brute(make("g", 6, 2))


class TestParameters:
    @pytest.mark.parametrize(
        "fn, code, w_max",
        [
            (make("g", 5, 2), "[242, 6, 50]", 185),
            (make("gbar", 5, 2), "[242, 6, 138]", 192),
            (make("f", 5, 2, (1,)), "[242, 6, 50]", 185),
            (gbar_9_2, "[19682, 10, 13010]", 19520),
        ],
    )
    def test_values(self, fn, code, w_max):
        spec = parameters(fn)
        assert isinstance(spec, CodeSpec)
        assert str(spec) == code
        assert spec.w_max == w_max
        assert spec.w_min == spec.d

    def test_large(self):
        spec = parameters(make("gbar", 41, 20))
        assert spec.n == 3**41 - 1
        assert spec.d > 2**64

    def test_custom(self):
        fn = WeightClassFunction(5, [0, 1, 2, 0, 1, 0])
        spec = parameters(fn)
        dist = weight_distribution_closed(fn)
        assert (spec.d, spec.w_max) == (dist.min_nonzero_weight, dist.max_weight)

    def test_out_of_range(self):
        with pytest.warns(Warning):
            fn = make("g", 4, 1, unchecked=True)
        with pytest.raises(ParameterRangeError):
            parameters(fn)

    def test_dict(self):
        data = parameters(gbar_9_2).to_dict()
        assert (data["n"], data["dim"], data["d"]) == ("19682", "10", "13010")
        assert data["family"] == "gbar"


class TestGbarWeights:
    def test_golden(self):
        weights = gbar_weights(9, 2)
        assert weights.by_class[0] == 13010
        assert weights.at_zero == 19520
        assert weights.linear == 13122

    @pytest.mark.parametrize("m, k", [(5, 2), (7, 3), (8, 2)])
    def test_match_distribution(self, m, k):
        weights = gbar_weights(m, k)
        expected = set(weights.by_class) | {weights.at_zero, weights.linear}
        dist = weight_distribution_closed(make("gbar", m, k))
        assert set(dist) - {0} == expected

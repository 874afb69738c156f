import numpy as np
import pytest

from ternary_codes import set_brute_force_max_m
from ternary_codes.code import weight_distribution_closed
from ternary_codes.exceptions import (
    BudgetExceededError,
    LinearFunctionError,
    MatrixFormatError,
)
from ternary_codes.functions import TableFunction, make, random_table_function
from ternary_codes.matrix import (
    MatrixHeader,
    format_generator_matrix,
    generator_matrix,
    rank_f3,
    read_generator_matrix,
    span_weight_distribution,
    write_generator_matrix,
)

from . import codeword, family_instances, reset_budget

g_5_2 = make("g", 5, 2)


class TestGeneratorMatrix:
    def test_shape(self):
        G = generator_matrix(g_5_2)
        assert G.shape == (6, 242)
        assert G.dtype == np.int8
        assert set(np.unique(G).tolist()) <= {0, 1, 2}

    def test_first_row_is_function(self):
        G = generator_matrix(g_5_2)
        assert G[0].tolist() == g_5_2.table()[1:].tolist()

    def test_codeword_weight(self):
        G = generator_matrix(make("gbar", 9, 2))
        assert np.count_nonzero(codeword(G, 1, 0)) == 19520

    @pytest.mark.parametrize("fn", family_instances(6))
    def test_full_rank(self, fn):
        assert rank_f3(generator_matrix(fn)) == 7

    def test_linear_function(self):
        values = [(x1 + 2 * x2) % 3 for x1 in range(3) for x2 in range(3)]
        with pytest.raises(LinearFunctionError) as info:
            generator_matrix(TableFunction(2, values))
        assert info.value.vector == (1, 2)


class TestRank:
    @pytest.mark.parametrize(
        "rows, rank",
        [
            ([[0, 0], [0, 0]], 0),
            ([[1, 2], [2, 1]], 1),
            ([[1, 0, 2], [0, 1, 1], [1, 1, 0]], 2),
            ([[1, 0, 0], [0, 2, 0], [0, 0, 1]], 3),
        ],
    )
    def test_values(self, rows, rank):
        assert rank_f3(np.array(rows)) == rank


class TestExport:
    def test_format(self):
        text = format_generator_matrix(g_5_2)
        lines = text.splitlines()
        assert lines[0] == "5 2 g 242 6"
        assert len(lines) == 7
        assert all(len(line.split()) == 242 for line in lines[1:])
        assert text.endswith("\n")

    def test_header_of_table_function(self):
        fn = random_table_function(3, np.random.default_rng(0))
        header = MatrixHeader.of(fn)
        assert header == (3, None, "table", 26, 4)
        assert str(header) == "3 - table 26 4"

    @pytest.mark.parametrize("fn", [make("f", 5, 2, (2,)), make("gbar", 6, 2)])
    def test_read_back(self, tmp_path, fn):
        path = tmp_path / "matrix.txt"
        write_generator_matrix(fn, path)
        header, G = read_generator_matrix(path)
        assert header == MatrixHeader.of(fn)
        assert np.array_equal(G, generator_matrix(fn))

    def test_read_table_function(self, tmp_path):
        fn = random_table_function(3, np.random.default_rng(5))
        path = tmp_path / "matrix.txt"
        write_generator_matrix(fn, path)
        header, G = read_generator_matrix(path)
        assert header.k is None
        assert np.array_equal(G, generator_matrix(fn))


class TestReadErrors:
    @pytest.mark.parametrize(
        "text, message",
        [
            ("", "empty file"),
            ("5 2 g 242\n", "line 1"),
            ("1 - table 2 2\n0 1\n", "expected 2 rows"),
            ("1 - table 2 2\n0 1\n1\n", "line 3: expected 2 entries"),
            ("1 - table 2 2\n0 1\n1 3\n", "line 3: symbols"),
        ],
    )
    def test_malformed(self, tmp_path, text, message):
        path = tmp_path / "matrix.txt"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(MatrixFormatError, match=message):
            read_generator_matrix(path)

    def test_is_value_error(self, tmp_path):
        path = tmp_path / "matrix.txt"
        path.write_text("x y z\n", encoding="utf-8")
        with pytest.raises(ValueError):
            read_generator_matrix(path)


class TestSpanWeightDistribution:
    @pytest.mark.parametrize("fn", family_instances(5))
    def test_matches_closed_form(self, fn):
        assert span_weight_distribution(
            generator_matrix(fn)
        ) == weight_distribution_closed(fn)

    def test_dependent_rows(self):
        dist = span_weight_distribution(np.array([[1, 1, 0], [2, 2, 0]]))
        assert dict(dist) == {0: 3, 2: 6}

    def test_explicit_m(self):
        assert span_weight_distribution(np.array([[1, 0], [0, 1]]), m=7).m == 7

    def test_single_row(self):
        with pytest.raises(ValueError, match="at least 2 rows"):
            span_weight_distribution(np.array([[1, 0, 1]]))

    @reset_budget()
    def test_budget(self):
        set_brute_force_max_m(4)
        with pytest.raises(BudgetExceededError):
            span_weight_distribution(generator_matrix(g_5_2))

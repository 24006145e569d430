from itertools import combinations

import pytest

from arrayldpc.core.code import build_code, generator_basis, is_stopping_set, syndrome_zero
from arrayldpc.core.distance import (
    CodewordBranchAndBound,
    DistanceSearcherFactory,
    GrayCodeEnumerator,
    InformationSetSearcher,
    StoppingSetBranchAndBound,
    SubsetSearch,
    bracket,
    enumerate_coset,
    exact_min_distance,
    exact_stopping_distance,
    heuristic_low_weight_search,
    template_upper_bound,
)
from arrayldpc.core.interfaces import ConfigurationError, EnumerationLimitError, InvalidParameterError
from arrayldpc.models.config import ArrayLDPCConfig, DistanceSettings
from arrayldpc.models.result import DistanceKind, DistanceTarget


def test_enumerate_coset():
    weight, word, checked = enumerate_coset([0b0011, 0b0110], 0)
    assert (weight, checked) == (2, 3)
    assert word in (0b0011, 0b0110, 0b0101)
    weight, word, checked = enumerate_coset([0b0011], 0b1111)
    assert (weight, word, checked) == (2, 0b1100, 2)


class TestExactMinimumDistance:
    @pytest.mark.parametrize("q,m,d", [(5, 2, 4), (5, 3, 6), (7, 6, 12), (7, 7, 14), (7, 5, 12)])
    def test_small_codes(self, q, m, d):
        code = build_code(q, m)
        result = exact_min_distance(code)
        assert result.value == d
        assert result.kind == DistanceKind.EXACT
        assert result.method == "gray-enumeration"
        assert len(result.witness) == d
        assert syndrome_zero(code, result.witness)
        assert result.effort["codewords"] == 2**code.dimension - 1

    @pytest.mark.slow
    def test_d_7_4(self):
        assert exact_min_distance(build_code(7, 4)).value == 8

    def test_partitioned_enumeration(self, code_5_3):
        config = ArrayLDPCConfig(distance=DistanceSettings(threads=4))
        result = exact_min_distance(code_5_3, config=config)
        assert result.value == 6
        assert result.effort["partitions"] == 4

    def test_enumeration_limit(self):
        with pytest.raises(EnumerationLimitError):
            exact_min_distance(build_code(11, 3))

    def test_weight_cap_above_limit_uses_branch_and_bound(self):
        result = exact_min_distance(build_code(11, 3), weight_cap=6)
        assert result.value == 6
        assert result.kind == DistanceKind.EXACT
        assert result.method == "codeword-branch-and-bound"

    def test_output_schema(self, code_7_6):
        output = exact_min_distance(code_7_6).to_output()
        assert output["d"] == 12
        assert output["kind"] == "exact"
        assert set(output) == {"d", "q", "m", "kind", "method", "witness", "effort"}


class TestBranchAndBound:
    def test_codeword_search_matches_enumeration(self, code_5_3):
        result = CodewordBranchAndBound({"weight_cap": 8}).search(code_5_3)
        assert (result.value, result.kind) == (6, DistanceKind.EXACT)
        assert 0 in result.witness

    def test_codeword_lower_bound_is_rounded_to_even(self, code_5_3):
        result = CodewordBranchAndBound({"weight_cap": 4}).search(code_5_3)
        assert result.kind == DistanceKind.LOWER_BOUND
        assert result.value == 6
        assert result.witness is None

    def test_stopping_distance(self):
        code = build_code(5, 2)
        result = exact_stopping_distance(code, size_cap=6)
        assert result.target == DistanceTarget.STOPPING
        assert result.value == 4
        assert is_stopping_set(code, result.witness)
        assert result.to_output()["h"] == 4

    def test_no_stopping_set_up_to_cap(self):
        result = exact_stopping_distance(build_code(7, 4), size_cap=5)
        assert result.kind == DistanceKind.LOWER_BOUND
        assert result.value == 6
        assert result.witness is None

    def test_parallel_branches_agree(self, code_5_3):
        serial = StoppingSetBranchAndBound({"stopping_cap": 8}).search(code_5_3)
        parallel = StoppingSetBranchAndBound({"stopping_cap": 8, "threads": 2}).search(code_5_3)
        assert serial.value == parallel.value

    @pytest.mark.slow
    @pytest.mark.parametrize("m,h", [(5, 9), (4, 8)])
    def test_stopping_distance_at_7(self, m, h):
        assert exact_stopping_distance(build_code(7, m), size_cap=12).value == h

    def test_missing_cap(self):
        with pytest.raises(InvalidParameterError):
            StoppingSetBranchAndBound({})
        with pytest.raises(InvalidParameterError):
            CodewordBranchAndBound({"weight_cap": 0})

    def test_subset_search_candidates(self):
        search = SubsetSearch(5, 2, parity=False)
        assert search.candidates() is None
        search.add(0)
        cands = search.candidates()
        assert cands and 0 not in cands
        search.remove(0)
        assert not search.deficient


class TestHeuristicSearch:
    def test_upper_bound_is_a_codeword(self, code_7_6):
        result = heuristic_low_weight_search(code_7_6, budget=2000, seed=1)
        assert result.kind == DistanceKind.UPPER_BOUND
        assert result.value >= 12
        assert syndrome_zero(code_7_6, result.witness)
        assert result.effort["candidates"] == 2000

    def test_deterministic_for_fixed_seed(self, code_7_6):
        first = heuristic_low_weight_search(code_7_6, budget=500, seed=7)
        second = heuristic_low_weight_search(code_7_6, budget=500, seed=7)
        assert first.witness == second.witness

    def test_rejects_empty_budget(self):
        with pytest.raises(InvalidParameterError):
            InformationSetSearcher({"heuristic_budget": 0})


class TestBounds:
    def test_template_upper_bound(self):
        result = template_upper_bound(6, 47)
        assert result is not None
        assert (result.value, result.kind, result.method) == (20, DistanceKind.UPPER_BOUND, "template")
        assert syndrome_zero(build_code(47, 6), result.witness)

    def test_no_template_bound_below_q0_or_without_template(self):
        assert template_upper_bound(6, 7) is None
        assert template_upper_bound(5, 47) is None

    @pytest.mark.parametrize(
        "lower,upper,even,expected",
        [
            (None, None, False, "?"),
            (13, None, False, ">12"),
            (None, 20, False, "<=20"),
            (12, 12, True, "12"),
            (17, 20, True, "18|20"),
            (17, 20, False, "17..20"),
        ],
    )
    def test_bracket(self, lower, upper, even, expected):
        assert bracket(lower, upper, even) == expected

    def test_bracket_rejects_crossed_bounds(self):
        with pytest.raises(InvalidParameterError):
            bracket(21, 20)


class TestSearcherFactory:
    def test_auto_picks_by_dimension(self, code_7_6):
        assert isinstance(DistanceSearcherFactory.create_searcher("auto", {}, code_7_6), GrayCodeEnumerator)
        big = build_code(47, 6)
        assert isinstance(DistanceSearcherFactory.create_searcher("auto", {}, big), InformationSetSearcher)

    def test_auto_needs_code(self):
        with pytest.raises(ConfigurationError):
            DistanceSearcherFactory.create_searcher("auto", {})

    def test_unknown_kind(self):
        with pytest.raises(ConfigurationError):
            DistanceSearcherFactory.create_searcher("annealing", {})

    def test_create_from_config_overrides(self, code_5_3):
        searcher = DistanceSearcherFactory.create_from_config(
            ArrayLDPCConfig(), "stopping", code_5_3, stopping_cap=3, threads=None
        )
        assert isinstance(searcher, StoppingSetBranchAndBound)
        assert searcher.size_cap == 3
        assert searcher.threads == 1


def naive_min_distance(code, max_weight):
    for w in range(1, max_weight + 1):
        if any(syndrome_zero(code, subset) for subset in combinations(range(code.length), w)):
            return w
    return None


@pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (5, 2)])
def test_enumeration_matches_naive_oracle(q, m):
    code = build_code(q, m)
    assert exact_min_distance(code).value == naive_min_distance(code, 6)


@pytest.mark.slow
def test_heuristic_bound_at_11_6():
    code = build_code(11, 6)
    result = heuristic_low_weight_search(code)
    if result.value > 16:
        result = heuristic_low_weight_search(code, budget=1_000_000)
    assert result.value <= 16


def basis_combination_min_weight(code):
    """Lowest weight over all nonzero XOR combinations of the generator rows."""
    basis = generator_basis(code)
    best = None
    for mask in range(1, 2 ** len(basis)):
        word = 0
        for r, row in enumerate(basis):
            if mask >> r & 1:
                word ^= row
        w = word.bit_count()
        if best is None or w < best:
            best = w
    return best


@pytest.mark.parametrize("q,m", [(5, 3), (5, 4), (5, 5), (7, 6), (7, 7)])
def test_enumeration_matches_basis_combinations(q, m):
    code = build_code(q, m)
    assert code.dimension <= 16
    result = exact_min_distance(code)
    assert result.value == basis_combination_min_weight(code)
    assert syndrome_zero(code, result.witness)


@pytest.mark.parametrize("m,d", [(4, 8), (5, 12), (6, 12), (7, 14)])
def test_heuristic_never_beats_exact_distance(m, d):
    code = build_code(7, m)
    result = heuristic_low_weight_search(code, budget=500, seed=1)
    assert result.value >= d
    assert len(result.witness) == result.value
    assert syndrome_zero(code, result.witness)

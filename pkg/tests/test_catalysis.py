from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elocc.catalysis import (
    construct_catalyst,
    p_catalyzed,
    p_max_from_max_entangled,
    p_max_to_max_entangled,
    search_catalyst,
    simulate_protocol,
)
from elocc.errors import (
    CopyCountTooSmallError,
    RankDeficientCatalystError,
    RankExceedsKError,
    UnsupportedDimensionError,
)
from elocc.multicopy import multicopy_radicand
from elocc.oracle import brute_p_max, brute_tensor_product
from elocc.spectra import (
    expand,
    from_coefficients,
    maximally_entangled,
    tensor_power,
    tensor_product,
    to_float,
    weighted_direct_sum,
)
from elocc.vidal import closed_form_pe, p_max

from conftest import spectra


def spec(*xs):
    return from_coefficients(list(xs))


class TestPCatalyzed:
    def test_first_example(self, examples):
        assert p_catalyzed(examples["s1"], examples["t1"], examples["phi"]) == 1

    def test_second_example(self, examples):
        cat = tensor_power(examples["phi"], 11)
        assert p_catalyzed(examples["s2"], examples["t2"], cat) == 1

    def test_second_example_needs_eleven(self, examples):
        cat = tensor_power(examples["phi"], 10)
        assert p_catalyzed(examples["s2"], examples["t2"], cat) < 1

    @given(spectra(max_dim=4), spectra(max_dim=4))
    def test_trivial_catalyst(self, a, b):
        assert p_catalyzed(a, b, spec("1")) == p_max(a, b).p_max

    @given(spectra(max_dim=4), spectra(max_dim=4), spectra(max_dim=3))
    @settings(max_examples=80)
    def test_never_hurts_and_bounded(self, a, b, c):
        p = p_catalyzed(a, b, c)
        assert p_max(a, b).p_max <= p <= closed_form_pe(a, b)

    @given(spectra(max_dim=4), spectra(max_dim=4), spectra(max_dim=3))
    @settings(max_examples=80)
    def test_matches_brute_force(self, a, b, c):
        ce = list(expand(c))
        ref = brute_p_max(brute_tensor_product(list(expand(a)), ce), brute_tensor_product(list(expand(b)), ce))
        assert p_catalyzed(a, b, c) == ref

    @given(spectra(max_dim=5), spectra(max_dim=5), st.integers(2, 5))
    @settings(max_examples=80)
    def test_maximally_entangled_inert(self, a, b, k):
        assert p_catalyzed(a, b, maximally_entangled(k)) == p_max(a, b).p_max


class TestMaxEntangledConversions:
    def test_from(self):
        assert p_max_from_max_entangled(2, spec("0.6", "0.4")) == 1
        assert p_max_from_max_entangled(3, maximally_entangled(3)) == 1
        assert p_max_from_max_entangled(3, spec("0.5", "0.3", "0.2")) == 1
        with pytest.raises(RankExceedsKError):
            p_max_from_max_entangled(2, spec("0.5", "0.3", "0.2"))

    def test_to(self):
        assert p_max_to_max_entangled(spec("0.6", "0.4"), 2) == F(4, 5)
        assert p_max_to_max_entangled(maximally_entangled(4)) == 1
        assert p_max_to_max_entangled(spec("0.5", "0.3", "0.2"), 3) == F(3, 5)
        with pytest.raises(RankDeficientCatalystError):
            p_max_to_max_entangled(spec("1", "0"), 2)

    def test_to_matches_brute_force(self):
        assert brute_p_max([F(1, 2), F(3, 10), F(1, 5)], [F(1, 3)] * 3) == F(3, 5)

    def test_float(self):
        assert p_max_to_max_entangled(to_float(spec("0.6", "0.4"))) == pytest.approx(0.8)


class TestConstructCatalyst:
    def test_first_example_three_copies(self, examples):
        s, t = examples["s1"], examples["t1"]
        cat = construct_catalyst(s, t, 3)
        assert cat.exact
        expected = weighted_direct_sum(
            [(1, tensor_power(s, 2)), (1, tensor_product(s, t)), (1, tensor_power(t, 2))]
        )
        assert cat == expected
        assert p_catalyzed(s, t, cat) == 1

    def test_first_example_two_copies_downgrades(self, examples):
        s, t = examples["s1"], examples["t1"]
        cat = construct_catalyst(s, t, 2)
        assert not cat.exact
        p = p_catalyzed(s, t, cat)
        assert p >= 0.96**0.5 - 1e-12

    @given(spectra(max_dim=4))
    @settings(max_examples=20)
    def test_identity(self, x):
        assert p_catalyzed(x, x, construct_catalyst(x, x, 3)) == 1

    def test_too_few_copies(self, examples):
        with pytest.raises(CopyCountTooSmallError):
            construct_catalyst(examples["s1"], examples["t1"], 1)

    def test_rank_increase(self):
        s, t = spec("1"), spec("0.5", "0.5")
        cat = construct_catalyst(s, t, 2)
        assert p_catalyzed(s, t, cat) == 0

    @given(spectra(max_dim=3), spectra(max_dim=3), st.integers(2, 3))
    @settings(max_examples=40)
    def test_guarantee(self, a, b, m):
        cat = construct_catalyst(a, b, m)
        r = multicopy_radicand(a, b, m)
        p = p_catalyzed(a, b, cat)
        if cat.exact:
            assert p**m >= r
        else:
            assert float(p) ** m >= float(r) - 1e-9


class TestProtocol:
    def test_first_example(self, examples):
        rep = simulate_protocol(examples["s1"], examples["t1"], examples["phi"], 3)
        assert (rep.p1, rep.p2_lower_bound, rep.p3, rep.product_bound, rep.m_copy_p_max) == (
            1, 1, F(4, 5), F(4, 5), 1
        )
        assert rep.k == 2 and rep.gamma_k == F(2, 5)
        assert rep.inert and rep.bound_holds

    def test_second_example(self, examples):
        rep = simulate_protocol(examples["s2"], examples["t2"], examples["phi"], 4)
        assert rep.m_copy_p_max < 1
        assert rep.m_copy_p_max >= rep.product_bound
        assert rep.catalyzed == F(7, 8)

    @given(spectra(max_dim=3), spectra(max_dim=3), st.integers(2, 4), st.integers(1, 3))
    @settings(max_examples=40)
    def test_flat_catalyst(self, a, b, k, m):
        rep = simulate_protocol(a, b, maximally_entangled(k), m)
        assert rep.p3 == 1
        assert rep.product_bound == rep.p2_lower_bound == p_max(a, b).p_max ** m
        assert rep.m_copy_p_max >= rep.product_bound
        assert rep.inert

    def test_rank_deficient(self, examples):
        with pytest.raises(RankDeficientCatalystError):
            simulate_protocol(examples["s1"], examples["t1"], spec("1", "0"), 2)


class TestSearch:
    def test_first_example(self, examples):
        res = search_catalyst(examples["s1"], examples["t1"], 2, 10)
        assert res.best_p == 1
        assert expand(res.best_catalyst) == (F(3, 5), F(2, 5))
        assert res.baseline == F(4, 5)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_identity(self, examples, k):
        res = search_catalyst(examples["s1"], examples["s1"], k, 4)
        assert res.best_p == res.baseline == 1

    @pytest.mark.parametrize("resolution", [2, 5, 10])
    def test_no_room_above_closed_form(self, resolution):
        s, t = spec("0.6", "0.3", "0.1"), spec("0.4", "0.4", "0.2")
        res = search_catalyst(s, t, 2, resolution)
        assert res.best_p == res.baseline == F(1, 2)

    def test_three_level_grid(self, examples):
        res = search_catalyst(examples["s1"], examples["t1"], 3, 6)
        assert res.best_p == 1 and res.best_p >= res.baseline

    def test_unsupported(self, examples):
        with pytest.raises(UnsupportedDimensionError):
            search_catalyst(examples["s1"], examples["t1"], 5, 4)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_hilbert_function
from lexseg.errors import NotOSequenceError
from lexseg.macaulay import (
    MAX_GROWTH,
    HilbertFunctionSpec,
    MacaulayExpansion,
    generation_horizon,
    is_o_sequence,
    lex_ideal_from_hf,
    macaulay_expansion,
    macaulay_growth,
)
from lexseg.monomials import is_lexsegment, is_strongly_stable


class TestExpansion:
    def test_single_binomial(self):
        assert macaulay_expansion(5, 4).terms == ((5, 4),)

    def test_unit_run_for_small_values(self):
        # a = r+1 in degree j >= r+1 is a sum of r+1 unit binomials
        for r in (1, 4, 12):
            for j in (r + 1, r + 3):
                exp = macaulay_expansion(r + 1, j)
                assert exp.terms == tuple((j - i, j - i) for i in range(r + 1))

    def test_greedy_by_hand(self):
        assert macaulay_expansion(5, 2).terms == ((3, 2), (2, 1))
        assert macaulay_expansion(5, 2).value() == 5

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            macaulay_expansion(0, 2)
        with pytest.raises(ValueError):
            macaulay_expansion(3, 0)

    @given(st.integers(1, 10_000), st.integers(1, 30))
    @settings(max_examples=300, deadline=None)
    def test_roundtrip(self, a, d):
        exp = macaulay_expansion(a, d)
        assert exp.value() == a

    @given(st.integers(1, 10_000), st.integers(1, 30))
    @settings(max_examples=150, deadline=None)
    def test_structure(self, a, d):
        exp = macaulay_expansion(a, d)
        tops = exp.tops
        assert all(x > y for x, y in zip(tops, tops[1:]))
        assert all(top >= low >= 1 for top, low in exp.terms)

    def test_invalid_structure_rejected(self):
        with pytest.raises(ValueError):
            MacaulayExpansion(2, (2, 3))  # not strictly decreasing
        with pytest.raises(ValueError):
            MacaulayExpansion(2, (1,))  # top below its lower index


class TestGrowth:
    def test_pinned_growth_instances(self):
        assert macaulay_growth(5, 4) == 6  # C(6,5)
        for r in range(1, 13):
            assert macaulay_growth(r + 1, r) == r + 2
            for j in range(r + 1, r + 8):
                assert macaulay_growth(r + 1, j) == r + 1

    def test_zero(self):
        assert macaulay_growth(0, 3) == 0

    def test_rejects_bad_degree(self):
        with pytest.raises(ValueError):
            macaulay_growth(3, 0)

    @given(st.integers(0, 2000), st.integers(1, 12))
    @settings(max_examples=200, deadline=None)
    def test_monotone_in_a(self, a, d):
        assert macaulay_growth(a, d) <= macaulay_growth(a + 1, d)

    @given(st.integers(1, 2000), st.integers(1, 12))
    @settings(max_examples=200, deadline=None)
    def test_growth_at_least_identity(self, a, d):
        assert macaulay_growth(a, d) >= a


class TestOSequence:
    def test_fixture_sequence(self):
        spec = HilbertFunctionSpec((1, 6, 5), 5)
        assert is_o_sequence(spec, 6).ok

    def test_violation_reported_at_first_degree(self):
        chk = is_o_sequence(HilbertFunctionSpec((1, 2, 4), 4), 2)
        assert not chk.ok
        assert chk.degree == 1
        assert "3" in chk.reason  # 2^<1> = 3

    def test_constant_one(self):
        for n in (1, 3, 7):
            assert is_o_sequence(HilbertFunctionSpec((1,), 1), n).ok

    def test_h0_must_be_one(self):
        chk = is_o_sequence(HilbertFunctionSpec((2, 1), 1), 3)
        assert not chk.ok and chk.degree == 0

    def test_h1_bounded_by_n(self):
        chk = is_o_sequence(HilbertFunctionSpec((1, 4), 4), 3)
        assert not chk.ok and chk.degree == 0

    def test_zero_then_positive_rejected(self):
        chk = is_o_sequence(HilbertFunctionSpec((1, 2, 0, 3), 3), 2)
        assert not chk.ok and chk.degree == 2

    def test_max_growth_always_fine_past_initial(self):
        spec = HilbertFunctionSpec((1, 3, 4), MAX_GROWTH)
        assert is_o_sequence(spec, 3).ok
        # growth of 4 = C(3,2) + C(1,1) in degree 2 is C(4,3) + C(2,2) = 5
        assert spec.value(3) == 5


class TestSpecType:
    def test_json_roundtrip(self):
        for spec in (HilbertFunctionSpec((1, 6, 5), 5),
                     HilbertFunctionSpec((1, 3), MAX_GROWTH)):
            assert HilbertFunctionSpec.from_json_dict(spec.to_json_dict()) == spec

    def test_values_constant_tail(self):
        spec = HilbertFunctionSpec((1, 6, 5), 4)
        assert [spec.value(k) for k in range(6)] == [1, 6, 5, 4, 4, 4]

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            HilbertFunctionSpec((), 1)
        with pytest.raises(ValueError):
            HilbertFunctionSpec((1, -2), 1)
        with pytest.raises(ValueError):
            HilbertFunctionSpec((1,), "sideways")


class TestRealization:
    def test_fixture_generators(self, example2):
        ideal = lex_ideal_from_hf(HilbertFunctionSpec((1, 6, 5), 5), 6)
        assert ideal == example2
        assert ideal.max_gen_degree == 5

    def test_principal_square(self):
        ideal = lex_ideal_from_hf(HilbertFunctionSpec((1,), 2), 2)
        assert [g.exponents for g in ideal.gens] == [(2, 0)]

    def test_whole_ring(self):
        assert lex_ideal_from_hf(HilbertFunctionSpec((1,), 1), 1).is_zero

    def test_non_o_sequence_rejected(self):
        with pytest.raises(NotOSequenceError) as err:
            lex_ideal_from_hf(HilbertFunctionSpec((1, 2, 4), 4), 2)
        assert err.value.degree == 1

    def test_max_growth_tail_stops_at_initial_segment(self):
        spec = HilbertFunctionSpec((1, 2, 2), MAX_GROWTH)
        assert generation_horizon(spec) == 2
        ideal = lex_ideal_from_hf(spec, 3)
        assert ideal.max_gen_degree <= 2

    def test_outputs_are_lexsegment_and_hf_matches(self):
        rng = random.Random(71)
        trials = 0
        while trials < 20:
            n = rng.randint(2, 5)
            h1 = rng.randint(1, n)
            length = rng.randint(1, 4)
            vals = [1, h1]
            for k in range(1, length):
                cap = macaulay_growth(vals[k], k)
                if cap == 0:
                    break
                vals.append(rng.randint(0, cap))
            tail = rng.randint(0, max(1, vals[-1]))
            spec = HilbertFunctionSpec(tuple(vals), min(tail, vals[-1]))
            if not is_o_sequence(spec, n).ok:
                continue
            trials += 1
            ideal = lex_ideal_from_hf(spec, n)
            if not ideal.is_zero:
                assert is_lexsegment(ideal)
                assert is_strongly_stable(ideal)
            horizon = generation_horizon(spec)
            for k in range(min(horizon + 4, 9)):
                assert brute_hilbert_function(ideal, k) == spec.value(k, n), (spec, n, k)

    def test_zero_tail(self):
        # 1, 2, 0, 0, ...: everything from degree 2 on
        ideal = lex_ideal_from_hf(HilbertFunctionSpec((1, 2), 0), 2)
        assert [g.exponents for g in ideal.gens] == [(2, 0), (1, 1), (0, 2)]

    def test_single_variable_vanishing_tail(self):
        ideal = lex_ideal_from_hf(HilbertFunctionSpec((1,), 0), 1)
        assert [g.exponents for g in ideal.gens] == [(1,)]

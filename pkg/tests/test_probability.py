import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from manyevents import (
    DegenerateDiscretizationError,
    ProbabilityDistribution,
    born_probability,
    convergence_sweep,
    discretization_error,
    event_probability_at,
    exact_event_probability,
    product_event_probability,
    shift_phase,
    wave_from_polar,
)
from oracles import oracle_born, oracle_count

count_vectors = st.lists(st.integers(0, 100), min_size=2, max_size=8).filter(any)


def wave(*moduli):
    return wave_from_polar([Fraction(m) if isinstance(m, str) else m for m in moduli], [0.0] * len(moduli))


def oracle_linf(moduli, u):
    counts = [oracle_count(r, u) for r in moduli]
    total = sum(m * m for m in counts)
    born = oracle_born(moduli)
    return max(abs(Fraction(m * m, total) - p) for m, p in zip(counts, born))


class TestDistribution:
    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            ProbabilityDistribution((Fraction(1, 2), Fraction(1, 3)), exact=True)
        with pytest.raises(ValueError):
            ProbabilityDistribution((0.5, 0.6), exact=False)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            ProbabilityDistribution((Fraction(3, 2), Fraction(-1, 2)), exact=True)


class TestExactEventProbability:
    @pytest.mark.parametrize(
        "counts, expected",
        [
            ([3, 4], [Fraction(9, 25), Fraction(16, 25)]),
            ([5, 5, 5], [Fraction(1, 3)] * 3),
            ([38, 50], [Fraction(1444, 3944), Fraction(2500, 3944)]),
        ],
    )
    def test_values(self, counts, expected):
        dist = exact_event_probability(counts)
        assert dist.exact and list(dist.weights) == expected

    def test_all_zero(self):
        with pytest.raises(DegenerateDiscretizationError):
            exact_event_probability([0, 0])

    @given(count_vectors)
    def test_born_identity(self, counts):
        assert list(exact_event_probability(counts).weights) == oracle_born(counts)
        assert exact_event_probability(counts) == born_probability(wave(*counts), exact=True)

    @given(count_vectors, st.integers(1, 50))
    def test_count_scaling(self, counts, k):
        assert exact_event_probability([k * m for m in counts]) == exact_event_probability(counts)

    @given(count_vectors)
    def test_exact_sums_to_one(self, counts):
        assert sum(exact_event_probability(counts).weights) == 1

    @given(count_vectors)
    def test_float_agreement(self, counts):
        total = float(sum(m * m for m in counts))
        for p, m in zip(exact_event_probability(counts).floats(), counts):
            assert abs(p - m * m / total) <= 1e-12


class TestProductEventProbability:
    def test_reduces_to_stationary(self):
        assert product_event_probability([3, 4], [3, 4]) == exact_event_probability([3, 4])

    def test_zero_fiber(self):
        assert list(product_event_probability([2, 0], [5, 7]).weights) == [1, 0]

    def test_general(self):
        assert list(product_event_probability([1, 2], [3, 4]).weights) == [Fraction(3, 11), Fraction(8, 11)]

    def test_errors(self):
        with pytest.raises(ValueError):
            product_event_probability([1, 2], [1])
        with pytest.raises(DegenerateDiscretizationError):
            product_event_probability([1, 0], [0, 3])


class TestBorn:
    def test_values(self):
        assert born_probability(wave("0.6", "0.8")).weights == (0.36, 0.64)
        assert born_probability(wave(0.6, 0.8)).floats() == pytest.approx([0.36, 0.64], abs=1e-15)
        assert born_probability(wave(2.5)).weights == (1.0,)

    def test_unnormalized(self):
        assert born_probability(wave(3, 4)).weights == (0.36, 0.64)

    def test_phase_rotation(self):
        wf = wave_from_polar([0.2, 0.9, 0.4], [0.0, 1.0, 2.0])
        assert born_probability(shift_phase(wf, 1.234)) == born_probability(wf)

    def test_zero_wave(self):
        with pytest.raises(ValueError):
            born_probability(wave(0, 0))


class TestEventProbabilityAt:
    def test_two_sites(self):
        dist = event_probability_at(wave("0.6", "0.8"), "0.1")
        assert list(dist.weights) == [Fraction(1444, 3944), Fraction(2500, 3944)]
        assert dist.floats() == pytest.approx([0.36613, 0.63387], abs=1e-5)

    @pytest.mark.parametrize("u", ["0.5", "0.01", "3"])
    def test_single_site(self, u):
        assert list(event_probability_at(wave("0.5"), u).weights) == [1]

    @given(st.floats(0.01, 10), st.floats(1e-3, 1))
    def test_equal_moduli(self, c, u):
        u = min(u, c)
        assert list(event_probability_at(wave(c, c), u).weights) == [Fraction(1, 2)] * 2

    def test_degenerate(self):
        with pytest.raises(DegenerateDiscretizationError):
            event_probability_at(wave("0.001", "0.002"), "100")

    @given(st.lists(st.floats(0.05, 5), min_size=1, max_size=6), st.floats(-20, 20))
    def test_phase_invariance(self, rs, delta):
        wf = wave_from_polar(rs, [0.0] * len(rs))
        assert event_probability_at(shift_phase(wf, delta), 0.01) == event_probability_at(wf, 0.01)


class TestDiscretizationError:
    @pytest.mark.parametrize("u, expected", [("0.1", 6.1e-3), ("0.01", 3.1e-4)])
    def test_against_oracle(self, u, expected):
        rec = discretization_error(wave("0.6", "0.8"), u)
        assert rec.linf_error == pytest.approx(float(oracle_linf(["0.6", "0.8"], u)), rel=1e-12)
        assert rec.linf_error == pytest.approx(expected, rel=0.02)
        assert rec.linf_error <= rec.l1_error

    def test_records_totals(self):
        rec = discretization_error(wave("0.6", "0.8"), "0.01")
        assert (rec.total_states, rec.total_events) == (377 + 503, 377**2 + 503**2)

    def test_lattice_aligned_is_exact(self):
        # u = 2*pi/10 puts moduli 3 and 4 on 30 and 40 states
        rec = discretization_error(wave(3, 4), 2 * math.pi / 10)
        assert rec.linf_error == 0 and rec.l1_error == 0


class TestSweep:
    def test_decreasing_errors(self):
        records = convergence_sweep(wave("0.6", "0.8"), ["0.1", "0.01", "0.001"])
        errors = [r.linf_error for r in records]
        assert errors[0] > errors[1] > errors[2]
        for u, rec in zip(["0.1", "0.01", "0.001"], records):
            assert str(rec.u) == u
            assert rec.linf_error == pytest.approx(float(oracle_linf(["0.6", "0.8"], u)), rel=1e-12)

    def test_single(self):
        assert len(convergence_sweep(wave(1, 2), [0.5])) == 1

    @given(st.floats(0.01, 5), st.integers(2, 6))
    def test_equal_moduli_zero_error(self, c, n):
        for rec in convergence_sweep(wave(*[c] * n), ["0.1", "0.01", "0.001"]):
            assert rec.linf_error == 0

    @pytest.mark.parametrize("us", [[], ["0.1", "0.1"], ["0.01", "0.1"]])
    def test_bad_lists(self, us):
        with pytest.raises(ValueError):
            convergence_sweep(wave(1, 2), us)

"""Brute-force enumeration, round-trip batches, and the seeded fuzzer."""

import math

import pytest

from zwform.errors import ZeroZ
from zwform.oracle import (
    EnumerationStats,
    SearchBounds,
    SearchReport,
    SplitMix64,
    enumerate_solutions,
    identity_fuzz,
    roundtrip_check,
    sample_tuples,
    stream_solutions,
)
from zwform.parametrization import Solution, generate, is_theorem_grade


def naive_box_scan(p, bound, m_min, m_max):
    """The most literal possible enumeration, kept independent of the package."""
    found = []
    for m in range(m_min, m_max + 1):
        if m == 0:
            continue
        for x in range(-bound, bound + 1):
            for y in range(-bound, bound + 1):
                for z in range(-bound, bound + 1):
                    if x == 0 or y == 0 or z == 0:
                        continue
                    if (math.gcd(x, y) != 1 or math.gcd(x, z) != 1
                            or math.gcd(y, z) != 1):
                        continue
                    t = x ** p - m * y ** p
                    if t != 0 and t % z == 0:
                        found.append(Solution(p, x, y, z, m, t // z))
    return found


class TestSearchBounds:
    def test_rejects_composite_p(self):
        with pytest.raises(ValueError):
            SearchBounds(4, 5, -1, 1)

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            SearchBounds(2, 0, -1, 1)

    def test_rejects_empty_m_range(self):
        with pytest.raises(ValueError):
            SearchBounds(2, 5, 2, 1)


class TestEnumerate:
    def test_matches_naive_scan(self):
        bounds = SearchBounds(2, 5, -1, -1)
        got = enumerate_solutions(bounds)
        assert got == naive_box_scan(2, 5, -1, -1)
        assert Solution(2, 1, 2, 5, -1, 1) in got

    def test_matches_naive_scan_p3(self):
        bounds = SearchBounds(3, 4, -3, 3)
        assert enumerate_solutions(bounds) == naive_box_scan(3, 4, -3, 3)

    def test_sorted_and_theorem_grade(self):
        sols = enumerate_solutions(SearchBounds(2, 6, -4, 4))
        assert sols == sorted(sols, key=lambda s: (s.m, s.x, s.y, s.z))
        for sol in sols:
            assert is_theorem_grade(sol)
            assert abs(sol.x) <= 6 and abs(sol.y) <= 6 and abs(sol.z) <= 6
            assert -4 <= sol.m <= 4

    def test_parallel_equals_serial(self):
        bounds = SearchBounds(2, 5, -4, 4)
        assert enumerate_solutions(bounds, jobs=3) == enumerate_solutions(bounds)

    def test_stream_order_matches_list(self):
        bounds = SearchBounds(3, 4, -2, 2)
        seen = []
        stats = stream_solutions(bounds, seen.append, jobs=2)
        assert seen == enumerate_solutions(bounds)
        assert stats.solutions_found == len(seen)

    def test_counters(self):
        bounds = SearchBounds(2, 2, -1, 1)
        triples = [
            (x, y, z)
            for x in range(-2, 3) for y in range(-2, 3) for z in range(-2, 3)
            if x and y and z
            and math.gcd(x, y) == math.gcd(x, z) == math.gcd(y, z) == 1
        ]
        stats = EnumerationStats()
        out = []
        got = stream_solutions(bounds, out.append)
        stats.absorb(got)
        assert stats.instances_checked == 2 * len(triples)
        assert stats.filtered_zero_m == len(triples)
        zero_w = sum(
            1 for m in (-1, 1) for (x, y, z) in triples if x * x == m * y * y
        )
        assert stats.filtered_zero_w == zero_w
        assert stats.solutions_found == len(out)


class TestRoundtripCheck:
    def test_clean_box(self):
        report = roundtrip_check(SearchBounds(2, 10, -10, 10))
        assert report.failures == []
        assert report.consistent()
        assert report.solutions_found > 0
        assert report.decompose_success > 0

    def test_parallel_equals_serial(self):
        bounds = SearchBounds(3, 6, -6, 6)
        serial = roundtrip_check(bounds)
        parallel = roundtrip_check(bounds, jobs=3)
        assert serial.as_counts() == parallel.as_counts()
        assert serial.failures == parallel.failures

    def test_report_consistency_helper(self):
        rep = SearchReport(solutions_found=3, decompose_success=2, degenerate_e=1)
        assert rep.consistent()
        rep.failures.append(("x", "y"))
        assert not rep.consistent()


class TestSplitMix64:
    def test_known_vectors_seed_zero(self):
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_randint_stays_in_range(self):
        rng = SplitMix64(123)
        draws = [rng.randint(-5, 5) for _ in range(2000)]
        assert min(draws) == -5 and max(draws) == 5


class TestSampleTuples:
    def test_deterministic(self):
        assert sample_tuples(3, 10, 50, seed=7) == sample_tuples(3, 10, 50, seed=7)
        assert sample_tuples(3, 10, 50, seed=7) != sample_tuples(3, 10, 50, seed=8)

    def test_constraints_and_count(self):
        tuples = sample_tuples(5, 6, 300, seed=0)
        assert len(tuples) == 300
        for t in tuples:
            assert t.p == 5 and t.q != 0
            assert t.satisfies_gcd_constraints()
            for v in (t.e, t.f, t.g, t.l, t.q, t.n, t.r):
                assert -6 <= v <= 6

    def test_empty(self):
        assert sample_tuples(2, 5, 0, seed=0) == []

    def test_validation(self):
        with pytest.raises(ValueError):
            sample_tuples(2, 0, 10, seed=0)
        with pytest.raises(ValueError):
            sample_tuples(2, 5, -1, seed=0)


class TestIdentityFuzz:
    def test_p2_reference_run_is_clean(self):
        report = identity_fuzz(2, 20, 10000, seed=42)
        assert report.failures == []
        assert report.instances_checked == 10000
        assert report.consistent()

    def test_p7_reference_run_is_clean(self):
        report = identity_fuzz(7, 5, 1000, seed=1)
        assert report.failures == []
        assert report.instances_checked == 1000
        assert report.consistent()

    def test_counts_add_up(self):
        report = identity_fuzz(3, 8, 500, seed=9)
        assert report.solutions_found <= report.instances_checked
        assert report.decompose_success + len(report.failures) == report.solutions_found

    def test_matches_generate(self):
        # The fuzzer must exercise exactly the tuples sample_tuples yields.
        for t in sample_tuples(3, 6, 40, seed=4):
            try:
                sol = generate(t)
            except ZeroZ:
                continue
            assert sol.x ** 3 - sol.m * sol.y ** 3 == sol.z * sol.w

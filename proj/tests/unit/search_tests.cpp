#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "goldbach/search.hpp"

using namespace goldbach;

namespace {

bool slow_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Independent partition oracle: all prime splits by direct search.
std::vector<std::pair<uint64_t, uint64_t>> brute_partitions(uint64_t n) {
    std::vector<std::pair<uint64_t, uint64_t>> parts;
    for (uint64_t p = 2; p <= n / 2; ++p) {
        if (slow_prime(p) && slow_prime(n - p)) parts.push_back({p, n - p});
    }
    return parts;
}

std::vector<std::pair<uint64_t, uint64_t>> values_of(const std::vector<PairReport>& reports) {
    std::vector<std::pair<uint64_t, uint64_t>> v;
    for (const PairReport& r : reports) v.push_back({r.pair.lo, r.pair.hi});
    return v;
}

using PairList = std::vector<std::pair<uint64_t, uint64_t>>;

}  // namespace

TEST_CASE("find_first_pair follows the canonical order") {
    auto r14 = find_first_pair(14);
    REQUIRE(r14.has_value());
    CHECK(r14->pair.lo == 3);
    CHECK(r14->pair.hi == 11);
    CHECK(r14->pair.form == PairForm::ThreePlusD);
    CHECK(r14->is_partition());

    auto r280 = find_first_pair(280);
    REQUIRE(r280.has_value());
    CHECK(r280->pair.lo == 3);
    CHECK(r280->pair.hi == 277);

    // {3, 275} fails on 275, the walk moves to the first family pair
    auto r278 = find_first_pair(278);
    REQUIRE(r278.has_value());
    CHECK(r278->pair.lo == 7);
    CHECK(r278->pair.hi == 271);
    CHECK(r278->pair.form == PairForm::FF);

    auto r282 = find_first_pair(282);
    REQUIRE(r282.has_value());
    CHECK(r282->pair.lo == 5);
    CHECK(r282->pair.hi == 277);

    CHECK_THROWS_AS(find_first_pair(13), std::invalid_argument);
    CHECK_THROWS_AS(find_first_pair(2), std::invalid_argument);
}

TEST_CASE("small evens answer from the lookup") {
    const PairList first = {{2, 2}, {3, 3}, {3, 5}, {3, 7}, {5, 7}};
    uint64_t n = 4;
    for (const auto& [lo, hi] : first) {
        auto r = find_first_pair(n);
        REQUIRE(r.has_value());
        CHECK(r->pair.lo == lo);
        CHECK(r->pair.hi == hi);
        CHECK(r->is_partition());
        n += 2;
    }
    CHECK(find_first_pair(4)->pair.form == PairForm::Small);
    CHECK(find_first_pair(8)->pair.form == PairForm::ThreePlusD);
    CHECK(find_first_pair(12)->pair.form == PairForm::DF);

    // the lookup carries every partition, not just the first
    CHECK(values_of(find_all_pairs(10)) == PairList{{3, 7}, {5, 5}});
    CHECK(values_of(find_all_pairs(4)) == PairList{{2, 2}});
}

TEST_CASE("find_all_pairs lists every partition in order") {
    CHECK(values_of(find_all_pairs(34)) ==
          PairList{{3, 31}, {5, 29}, {11, 23}, {17, 17}});
    CHECK(values_of(find_all_pairs(20)) == PairList{{3, 17}, {7, 13}});
    CHECK(values_of(find_all_pairs(278)).front() == std::pair<uint64_t, uint64_t>{7, 271});
    CHECK(find_all_pairs(278).size() == 7);

    for (const PairReport& r : find_all_pairs(282)) {
        CHECK(r.is_partition());
        CHECK(r.pair.form == PairForm::DF);
    }
    CHECK(find_all_pairs(282).size() == 16);
    CHECK(find_all_pairs(280).size() == 14);
}

TEST_CASE("find_all_pairs equals the brute-force oracle") {
    for (uint64_t n = 4; n <= 1500; n += 2) {
        PairList got = values_of(find_all_pairs(n));
        PairList want = brute_partitions(n);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) {
            CAPTURE(n);
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("the sieve-backed overload matches the standalone one") {
    const PrimeSieve sieve = build_sieve(2000);
    for (uint64_t n = 4; n <= 2000; n += 2) {
        if (find_all_pairs(n, sieve) != find_all_pairs(n)) {
            CAPTURE(n);
            REQUIRE(find_all_pairs(n, sieve) == find_all_pairs(n));
        }
    }
    CHECK_THROWS_AS(find_all_pairs(4000, sieve), std::invalid_argument);
}

TEST_CASE("report_all_candidates keeps the composites") {
    const std::vector<PairReport> r278 = report_all_candidates(278);
    REQUIRE(r278.size() == 24);
    std::set<std::pair<uint64_t, uint64_t>> both_composite;
    for (const PairReport& r : r278) {
        if (!r.lo_prime && !r.hi_prime) both_composite.insert({r.pair.lo, r.pair.hi});
        // verdicts against the independent oracle
        REQUIRE(r.lo_prime == slow_prime(r.pair.lo));
        REQUIRE(r.hi_prime == slow_prime(r.pair.hi));
    }
    CHECK(both_composite ==
          std::set<std::pair<uint64_t, uint64_t>>{{25, 253}, {91, 187}, {133, 145}});
    CHECK(r278.back().pair == CandidatePair{139, 139, PairForm::FF, 23});
    CHECK(r278.back().is_partition());

    const std::vector<PairReport> r280 = report_all_candidates(280);
    const auto at59 = std::find_if(r280.begin(), r280.end(), [](const PairReport& r) {
        return r.pair.lo == 59;
    });
    REQUIRE(at59 != r280.end());
    CHECK(at59->pair.hi == 221);
    CHECK(at59->lo_prime);
    CHECK_FALSE(at59->hi_prime);

    const std::vector<PairReport> r16 = report_all_candidates(16);
    CHECK(r16.front().pair.lo == 3);
    CHECK(r16.front().pair.hi == 13);
    CHECK(r16.front().is_partition());

    CHECK_THROWS_AS(report_all_candidates(12), std::invalid_argument);
}

TEST_CASE("completeness holds against brute force") {
    const PrimeSieve sieve = build_sieve(2000);
    CHECK(verify_completeness(278, sieve));
    CHECK(verify_completeness(282, sieve));
    CHECK(verify_completeness(36, sieve));
    CHECK(values_of(find_all_pairs(36)) ==
          PairList{{5, 31}, {17, 19}, {13, 23}, {7, 29}});

    for (uint64_t n = 14; n <= 2000; n += 2) {
        if (!verify_completeness(n, sieve)) {
            CAPTURE(n);
            REQUIRE(verify_completeness(n, sieve));
        }
    }

    // every partition of a multiple of six has one member in each column
    for (const PairReport& r : find_all_pairs(282)) {
        const uint64_t rlo = r.pair.lo % 6;
        const uint64_t rhi = r.pair.hi % 6;
        CHECK(((rlo == 5 && rhi == 1) || (rlo == 1 && rhi == 5)));
    }

    CHECK_THROWS_AS(verify_completeness(4000, sieve), std::invalid_argument);
    CHECK_THROWS_AS(verify_completeness(12, sieve), std::invalid_argument);
}

TEST_CASE("compare_baselines counts candidates, tests, and baselines") {
    const PrimeSieve sieve = build_sieve(300);

    const SearchMetrics m278 = compare_baselines(278, sieve);
    CHECK(m278.n_value == 278);
    CHECK(m278.wheel_candidates == 24);
    CHECK(m278.wheel_primality_tests == 4);  // 3+, 275-, 7+, 271+
    REQUIRE(m278.first_hit_index.has_value());
    CHECK(*m278.first_hit_index == 2);
    CHECK(m278.baseline_odd_pairs == 69);
    CHECK(m278.baseline_prime_pairs == 34);

    const SearchMetrics m282 = compare_baselines(282, sieve);
    CHECK(m282.wheel_candidates == 46);
    CHECK(m282.wheel_primality_tests == 2);
    CHECK(*m282.first_hit_index == 1);
    CHECK(m282.baseline_odd_pairs == 70);
    CHECK(m282.baseline_prime_pairs == 34);

    const SearchMetrics m14 = compare_baselines(14, sieve);
    CHECK(m14.wheel_candidates == 2);
    CHECK(*m14.first_hit_index == 1);
    CHECK(m14.baseline_odd_pairs == 3);
    CHECK(m14.baseline_prime_pairs == 4);

    CHECK_THROWS_AS(compare_baselines(12, sieve), std::invalid_argument);
    CHECK_THROWS_AS(compare_baselines(400, sieve), std::invalid_argument);
}

TEST_CASE("baseline counts match direct loops") {
    const PrimeSieve sieve = build_sieve(4000);
    for (uint64_t n = 14; n <= 4000; n += 2) {
        const SearchMetrics m = compare_baselines(n, sieve);
        uint64_t odd = 0;
        for (uint64_t a = 3; a <= n / 2; a += 2) ++odd;
        uint64_t prime = 0;
        for (uint64_t p = 2; p <= n / 2; ++p) prime += slow_prime(p) ? 1 : 0;
        REQUIRE(m.baseline_odd_pairs == odd);
        REQUIRE(m.baseline_prime_pairs == prime);
        REQUIRE(m.wheel_primality_tests <= 2 * m.wheel_candidates);
        REQUIRE(*m.first_hit_index <= m.wheel_candidates);
        if (n >= 20) REQUIRE(m.wheel_candidates < m.baseline_odd_pairs);
    }
}

TEST_CASE("sweep emits one record per even N") {
    const PrimeSieve sieve = build_sieve(400);

    const std::vector<SweepRecord> table = sweep(14, 36, sieve);
    REQUIRE(table.size() == 12);
    for (const SweepRecord& rec : table) {
        CHECK(rec.partition_count >= 1);
        CHECK_FALSE(rec.counterexample);
        CHECK(rec.partition_count == find_all_pairs(rec.n_value).size());
        REQUIRE(rec.first_pair.has_value());
        CHECK(rec.first_pair->lo == find_first_pair(rec.n_value)->pair.lo);
    }
    CHECK(table[0].n_value == 14);
    CHECK(table[0].case_tag == CaseTag::A);
    CHECK(table[0].partition_count == 2);

    const std::vector<SweepRecord> small = sweep(4, 12, sieve);
    REQUIRE(small.size() == 5);
    const PairList first = {{2, 2}, {3, 3}, {3, 5}, {3, 7}, {5, 7}};
    for (size_t i = 0; i < 5; ++i) {
        CHECK(small[i].case_tag == CaseTag::Small);
        REQUIRE(small[i].first_pair.has_value());
        CHECK(small[i].first_pair->lo == first[i].first);
        CHECK(small[i].first_pair->hi == first[i].second);
    }
    CHECK(small[3].partition_count == 2);  // 10 = 3+7 = 5+5
}

TEST_CASE("sweep partition counts match the brute-force oracle") {
    const PrimeSieve sieve = build_sieve(282);
    const std::vector<SweepRecord> records = sweep(278, 282, sieve);
    REQUIRE(records.size() == 3);
    CHECK(records[0].partition_count == 7);
    CHECK(records[1].partition_count == 14);
    CHECK(records[2].partition_count == 16);
    for (const SweepRecord& rec : records) {
        REQUIRE(rec.partition_count == brute_partitions(rec.n_value).size());
    }

    // metrics agree with compare_baselines
    const SearchMetrics direct = compare_baselines(278, sieve);
    CHECK(records[0].metrics == direct);

    const PrimeSieve wide = build_sieve(3000);
    for (const SweepRecord& rec : sweep(4, 3000, wide)) {
        if (rec.partition_count != brute_partitions(rec.n_value).size()) {
            CAPTURE(rec.n_value);
            REQUIRE(rec.partition_count == brute_partitions(rec.n_value).size());
        }
    }
}

TEST_CASE("sweep is deterministic across worker counts") {
    const PrimeSieve sieve = build_sieve(600);
    const std::vector<SweepRecord> one = sweep(4, 600, sieve, 1);
    const std::vector<SweepRecord> three = sweep(4, 600, sieve, 3);
    const std::vector<SweepRecord> eight = sweep(4, 600, sieve, 8);
    CHECK(one == three);
    CHECK(one == eight);
}

TEST_CASE("sweep validates its range") {
    const PrimeSieve sieve = build_sieve(100);
    CHECK_THROWS_AS(sweep(10, 11, sieve), std::invalid_argument);
    CHECK_THROWS_AS(sweep(3, 10, sieve), std::invalid_argument);
    CHECK_THROWS_AS(sweep(2, 10, sieve), std::invalid_argument);
    CHECK_THROWS_AS(sweep(20, 10, sieve), std::invalid_argument);
    CHECK_THROWS_AS(sweep(4, 102, sieve), std::invalid_argument);
    CHECK(sweep(4, 4, sieve).size() == 1);
}

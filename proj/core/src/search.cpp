#include "goldbach/search.hpp"

#include <stdexcept>
#include <string>
#include <thread>

namespace goldbach {

namespace {

// Fixed splits for the evens below the first usable row. Forms follow the
// family the split would belong to; Small marks the two that fit none.
std::vector<PairReport> small_partitions(uint64_t n) {
    auto rep = [](uint64_t lo, uint64_t hi, PairForm form, uint64_t idx) {
        return PairReport{{lo, hi, form, idx}, true, true};
    };
    switch (n) {
        case 4: return {rep(2, 2, PairForm::Small, 0)};
        case 6: return {rep(3, 3, PairForm::Small, 0)};
        case 8: return {rep(3, 5, PairForm::ThreePlusD, 0)};
        case 10: return {rep(3, 7, PairForm::ThreePlusF, 0), rep(5, 5, PairForm::DD, 1)};
        default: return {rep(5, 7, PairForm::DF, 1)};  // 12; classify admits no other
    }
}

void require_covers(const PrimeSieve& sieve, uint64_t n, const char* op) {
    if (sieve.limit() < n) {
        throw std::invalid_argument(std::string(op) + ": sieve limit " +
                                    std::to_string(sieve.limit()) +
                                    " is below N=" + std::to_string(n));
    }
}

EvenClass require_tabled_case(uint64_t n, const char* op) {
    const EvenClass cls = classify_even(n);
    if (cls.tag == CaseTag::Small) {
        throw std::invalid_argument(std::string(op) + ": N=" + std::to_string(n) +
                                    " is a lookup case, not a candidate table");
    }
    return cls;
}

struct FirstHitWalk {
    uint64_t tests = 0;
    std::optional<uint64_t> index;        // 1-based position of the hit
    std::optional<CandidatePair> pair;
};

template <typename Prime>
FirstHitWalk first_hit_walk(const EvenClass& cls, Prime&& prime) {
    FirstHitWalk walk;
    uint64_t at = 0;
    visit_candidates(cls, [&](const CandidatePair& cand) {
        ++at;
        ++walk.tests;
        if (!prime(cand.lo)) return true;
        ++walk.tests;
        if (!prime(cand.hi)) return true;
        walk.index = at;
        walk.pair = cand;
        return false;
    });
    return walk;
}

template <typename Prime>
std::vector<PairReport> all_pairs_impl(uint64_t n, Prime&& prime) {
    const EvenClass cls = classify_even(n);
    if (cls.tag == CaseTag::Small) return small_partitions(n);
    std::vector<PairReport> partitions;
    visit_candidates(cls, [&](const CandidatePair& cand) {
        if (prime(cand.lo) && prime(cand.hi)) {
            partitions.push_back({cand, true, true});
        }
        return true;
    });
    return partitions;
}

template <typename Prime>
std::vector<PairReport> all_candidates_impl(const EvenClass& cls, Prime&& prime) {
    std::vector<PairReport> reports;
    reports.reserve(count_candidates(cls));
    visit_candidates(cls, [&](const CandidatePair& cand) {
        reports.push_back({cand, prime(cand.lo), prime(cand.hi)});
        return true;
    });
    return reports;
}

// Does a brute-force prime split {lo, hi} appear among the candidates with
// the form its remainder case predicts? The family index is recovered from
// whichever member sits in the 6n-1 / 6n+1 column the case draws from.
bool appears_as_predicted(const EvenClass& cls, uint64_t lo, uint64_t hi) {
    if (lo == 3 && cls.tag != CaseTag::E) {
        const auto special = special_candidate(cls);
        return special && special->hi == hi;
    }
    uint64_t idx = 0;
    switch (cls.tag) {
        case CaseTag::A:
            if (lo % 6 != 1) return false;
            idx = lo / 6;
            break;
        case CaseTag::C:
            if (lo % 6 != 5) return false;
            idx = (lo + 1) / 6;
            break;
        default:
            if (lo % 6 == 5) idx = (lo + 1) / 6;
            else if (hi % 6 == 5) idx = (hi + 1) / 6;
            else return false;
    }
    const NRange range = n_range(cls);
    if (idx < range.first || idx > range.last) return false;
    return pair_at(cls, idx) ==
           CandidatePair{lo, hi, detail::family_form(cls.tag), idx};
}

}  // namespace

std::optional<PairReport> find_first_pair(uint64_t n) {
    const EvenClass cls = classify_even(n);
    if (cls.tag == CaseTag::Small) return small_partitions(n).front();
    const FirstHitWalk walk =
        first_hit_walk(cls, [](uint64_t m) { return is_prime(m); });
    if (!walk.pair) return std::nullopt;
    return PairReport{*walk.pair, true, true};
}

std::vector<PairReport> find_all_pairs(uint64_t n) {
    return all_pairs_impl(n, [](uint64_t m) { return is_prime(m); });
}

std::vector<PairReport> find_all_pairs(uint64_t n, const PrimeSieve& sieve) {
    require_covers(sieve, n, "find_all_pairs");
    return all_pairs_impl(n, [&](uint64_t m) { return sieve.is_prime(m); });
}

std::vector<PairReport> report_all_candidates(uint64_t n) {
    const EvenClass cls = require_tabled_case(n, "report_all_candidates");
    return all_candidates_impl(cls, [](uint64_t m) { return is_prime(m); });
}

std::vector<PairReport> report_all_candidates(uint64_t n, const PrimeSieve& sieve) {
    require_covers(sieve, n, "report_all_candidates");
    const EvenClass cls = require_tabled_case(n, "report_all_candidates");
    return all_candidates_impl(cls, [&](uint64_t m) { return sieve.is_prime(m); });
}

bool verify_completeness(uint64_t n, const PrimeSieve& sieve) {
    require_covers(sieve, n, "verify_completeness");
    const EvenClass cls = require_tabled_case(n, "verify_completeness");
    for (uint64_t p = 2; p <= n / 2; ++p) {
        if (!sieve.is_prime(p) || !sieve.is_prime(n - p)) continue;
        if (!appears_as_predicted(cls, p, n - p)) return false;
    }
    return true;
}

SearchMetrics compare_baselines(uint64_t n, const PrimeSieve& sieve) {
    require_covers(sieve, n, "compare_baselines");
    const EvenClass cls = require_tabled_case(n, "compare_baselines");
    const FirstHitWalk walk =
        first_hit_walk(cls, [&](uint64_t m) { return sieve.is_prime(m); });
    SearchMetrics metrics;
    metrics.n_value = n;
    metrics.wheel_candidates = count_candidates(cls);
    metrics.wheel_primality_tests = walk.tests;
    metrics.first_hit_index = walk.index;
    const uint64_t half = n / 2;
    metrics.baseline_odd_pairs = (half - 3) / 2 + 1;
    metrics.baseline_prime_pairs = sieve.count_primes_upto(half);
    return metrics;
}

std::vector<SweepRecord> sweep(uint64_t from, uint64_t to, const PrimeSieve& sieve,
                               unsigned threads) {
    if (from % 2 != 0 || to % 2 != 0) {
        throw std::invalid_argument("sweep: bounds must be even");
    }
    if (from < 4 || from > to) {
        throw std::invalid_argument("sweep: need 4 <= from <= to");
    }
    if (to > sieve.limit()) {
        throw std::invalid_argument("sweep: sieve limit " +
                                    std::to_string(sieve.limit()) +
                                    " is below " + std::to_string(to));
    }

    // Primes <= to/2 by residue class: the only p besides 3 that can open a
    // partition of a tabled N. Shared read-only across the workers.
    std::vector<uint64_t> d_primes;  // p % 6 == 5
    std::vector<uint64_t> f_primes;  // p % 6 == 1
    for (uint64_t p = 5; p <= to / 2; p += 2) {
        if (!sieve.is_prime(p)) continue;
        (p % 6 == 5 ? d_primes : f_primes).push_back(p);
    }

    const uint64_t count = (to - from) / 2 + 1;
    std::vector<SweepRecord> records(count);

    auto fill_record = [&](uint64_t n, size_t c5, size_t c1) {
        const EvenClass cls = classify_even(n);
        SweepRecord rec;
        rec.n_value = n;
        rec.case_tag = cls.tag;
        rec.metrics.n_value = n;
        if (cls.tag == CaseTag::Small) {
            const std::vector<PairReport> parts = small_partitions(n);
            rec.partition_count = parts.size();
            rec.first_pair = parts.front().pair;
            rec.metrics.wheel_candidates = parts.size();
            rec.metrics.wheel_primality_tests = 2;
            rec.metrics.first_hit_index = 1;
        } else {
            // c5/c1 bound the prefixes with p <= N/2; each unordered split
            // {p, N-p} is met exactly once since exactly one member is <= N/2
            // (equal pairs sit in a single class and are counted once).
            uint64_t parts = 0;
            if (cls.tag != CaseTag::E && sieve.is_prime(n - 3)) ++parts;
            if (cls.tag != CaseTag::C) {
                for (size_t i = 0; i < c1; ++i) {
                    parts += sieve.is_prime(n - f_primes[i]) ? 1 : 0;
                }
            }
            if (cls.tag != CaseTag::A) {
                for (size_t i = 0; i < c5; ++i) {
                    parts += sieve.is_prime(n - d_primes[i]) ? 1 : 0;
                }
            }
            rec.partition_count = parts;
            const FirstHitWalk walk =
                first_hit_walk(cls, [&](uint64_t m) { return sieve.is_prime(m); });
            rec.first_pair = walk.pair;
            rec.metrics.wheel_candidates = count_candidates(cls);
            rec.metrics.wheel_primality_tests = walk.tests;
            rec.metrics.first_hit_index = walk.index;
        }
        const uint64_t half = n / 2;
        rec.metrics.baseline_odd_pairs = half >= 3 ? (half - 3) / 2 + 1 : 0;
        rec.metrics.baseline_prime_pairs =
            half < 3 ? (half < 2 ? 0 : 1) : 2 + c5 + c1;
        rec.counterexample = rec.partition_count == 0;
        return rec;
    };

    auto worker = [&](uint64_t start, unsigned stride) {
        size_t c5 = 0;  // d_primes entries <= N/2, advanced as N grows
        size_t c1 = 0;
        for (uint64_t i = start; i < count; i += stride) {
            const uint64_t n = from + 2 * i;
            const uint64_t half = n / 2;
            while (c5 < d_primes.size() && d_primes[c5] <= half) ++c5;
            while (c1 < f_primes.size() && f_primes[c1] <= half) ++c1;
            records[i] = fill_record(n, c5, c1);
        }
    };

    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (count < workers) workers = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker, w, workers);
    worker(0, workers);
    for (std::thread& t : pool) t.join();
    return records;
}

}  // namespace goldbach

// search.hpp
// The three-step search over the candidate families: classify N, walk the
// candidates in canonical order, and let primality do the filtering. Also
// the measurement side — how many splits the wheel enumerates versus the
// naive baselines — and a range sweep that records a partition count for
// every even N. A zero count would witness a Goldbach counterexample; it
// is flagged on the record, never silently stored.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goldbach/candidates.hpp"
#include "goldbach/primality.hpp"

namespace goldbach {

// A candidate split with the primality verdicts of both members.
struct PairReport {
    CandidatePair pair;
    bool lo_prime;
    bool hi_prime;

    bool is_partition() const { return lo_prime && hi_prime; }

    friend bool operator==(const PairReport&, const PairReport&) = default;
};

// Search-cost counters for one N. wheel_primality_tests counts integers
// actually examined by the first-hit walk: lo always, hi only when lo was
// prime. first_hit_index is the 1-based position of the first partition
// in canonical order, empty if the walk exhausted every candidate.
struct SearchMetrics {
    uint64_t n_value = 0;
    uint64_t wheel_candidates = 0;
    uint64_t wheel_primality_tests = 0;
    std::optional<uint64_t> first_hit_index;
    uint64_t baseline_odd_pairs = 0;    // splits {m, N-m}, odd m in [3, N/2]
    uint64_t baseline_prime_pairs = 0;  // splits {p, N-p}, prime p <= N/2

    friend bool operator==(const SearchMetrics&, const SearchMetrics&) = default;
};

struct SweepRecord {
    uint64_t n_value = 0;
    CaseTag case_tag = CaseTag::Small;
    uint64_t partition_count = 0;
    std::optional<CandidatePair> first_pair;
    SearchMetrics metrics;
    bool counterexample = false;  // partition_count == 0

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// First candidate in canonical order whose members are both prime. Small N
// answers from the lookup table. Empty means every candidate failed — a
// counterexample signal, deliberately not an exception.
std::optional<PairReport> find_first_pair(uint64_t n);

// Every Goldbach partition of N in canonical order. The sieve overload is
// for bulk verification work and requires sieve.limit() >= N.
std::vector<PairReport> find_all_pairs(uint64_t n);
std::vector<PairReport> find_all_pairs(uint64_t n, const PrimeSieve& sieve);

// Every candidate of N >= 14 with both verdicts filled in, composites and
// all — the data behind the worked-listing rendering.
std::vector<PairReport> report_all_candidates(uint64_t n);
std::vector<PairReport> report_all_candidates(uint64_t n, const PrimeSieve& sieve);

// Brute-force check of the completeness claim for one N >= 14: every prime
// split {p, N-p} found by scanning the sieve must appear among the
// candidates, carrying exactly the form the remainder case predicts
// ({3, N-3} as the special split, otherwise the case's family form).
// Requires sieve.limit() >= N.
bool verify_completeness(uint64_t n, const PrimeSieve& sieve);

// Full SearchMetrics for N >= 14: candidate count, the first-hit walk's
// test count and hit position, and both baseline sizes. Requires
// sieve.limit() >= N.
SearchMetrics compare_baselines(uint64_t n, const PrimeSieve& sieve);

// One record per even N in [from, to]; bounds even, from >= 4, and
// to <= sieve.limit(). Partition counts come from a prime-prefix scan
// (primes p <= N/2 by residue class), first-pair and test counters from
// the canonical walk. threads = 0 picks the hardware count; records are
// in ascending N regardless of how the range was split.
std::vector<SweepRecord> sweep(uint64_t from, uint64_t to, const PrimeSieve& sieve,
                               unsigned threads = 0);

}  // namespace goldbach

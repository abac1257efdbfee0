// primality.hpp
// Exact primality services: a deterministic test covering all of uint64_t
// and a bit-per-integer sieve for bulk and oracle work.

#pragma once

#include <cstdint>
#include <vector>

namespace goldbach {

// Deterministic for every n < 2^64. Trial division below a small cutoff,
// strong-pseudoprime rounds against a fixed witness set above it; the
// first twelve primes witness every composite this size.
bool is_prime(uint64_t n);

// Default ceiling on the sieve limit, one table cell (bit) per integer in
// [0, limit] — the default allows up to 10^9 at ~119 MiB.
inline constexpr uint64_t kDefaultSieveCellCap = 1'000'000'000;

// Primality table over [0, limit]: bit i set iff i is prime.
// Immutable once built; safe to share across threads.
class PrimeSieve {
public:
    uint64_t limit() const { return limit_; }

    // Table lookup. Rejects n > limit(). Kept inline: range sweeps hit this
    // billions of times.
    bool is_prime(uint64_t n) const {
        if (n > limit_) throw_beyond_limit(n);
        return bit(n);
    }

    // Exact pi(n), the number of primes <= n. Rejects n > limit().
    uint64_t count_primes_upto(uint64_t n) const;

private:
    friend PrimeSieve build_sieve(uint64_t, uint64_t);
    explicit PrimeSieve(uint64_t limit);

    [[noreturn]] void throw_beyond_limit(uint64_t n) const;

    bool bit(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void clear_bit(uint64_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void set_bit(uint64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }

    uint64_t limit_;
    std::vector<uint64_t> words_;
};

// Sieve of Eratosthenes over [0, limit]. Rejects limit < 2; a limit whose
// table would exceed cell_cap cells raises std::length_error.
PrimeSieve build_sieve(uint64_t limit, uint64_t cell_cap = kDefaultSieveCellCap);

}  // namespace goldbach

#include "goldbach/primality.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace goldbach {

namespace {

constexpr uint64_t kTrialDivisionCutoff = uint64_t{1} << 16;

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t acc = 1;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// One strong-pseudoprime round for odd n with n - 1 = d * 2^s, d odd.
bool strong_probable_prime(uint64_t n, uint64_t a, uint64_t d, int s) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// n odd, >= 5, not a multiple of 3: divisors can only be 6k +- 1.
bool is_prime_by_trial_division(uint64_t n) {
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    if (n < kTrialDivisionCutoff) return is_prime_by_trial_division(n);

    uint64_t d = n - 1;
    const int s = std::countr_zero(d);
    d >>= s;
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
}

PrimeSieve::PrimeSieve(uint64_t limit)
    : limit_(limit), words_((limit >> 6) + 1, 0) {}

void PrimeSieve::throw_beyond_limit(uint64_t n) const {
    throw std::out_of_range(std::to_string(n) + " is beyond the sieve limit " +
                            std::to_string(limit_));
}

uint64_t PrimeSieve::count_primes_upto(uint64_t n) const {
    if (n > limit_)
        throw std::out_of_range(std::to_string(n) + " is beyond the sieve limit " +
                                std::to_string(limit_));
    uint64_t count = 0;
    const uint64_t last_word = n >> 6;
    for (uint64_t w = 0; w < last_word; ++w) count += std::popcount(words_[w]);
    const unsigned keep = static_cast<unsigned>(n & 63) + 1;
    const uint64_t mask = keep == 64 ? ~uint64_t{0} : (uint64_t{1} << keep) - 1;
    count += std::popcount(words_[last_word] & mask);
    return count;
}

PrimeSieve build_sieve(uint64_t limit, uint64_t cell_cap) {
    if (limit < 2) throw std::invalid_argument("sieve limit must be at least 2");
    if (limit > cell_cap) {
        throw std::length_error("sieve of " + std::to_string(limit + 1) +
                                " cells exceeds the cap of " + std::to_string(cell_cap));
    }

    PrimeSieve sieve(limit);

    // Start from the odd-bit pattern, then fix up 1 and 2.
    constexpr uint64_t kOddBits = 0xAAAA'AAAA'AAAA'AAAAull;
    for (auto& word : sieve.words_) word = kOddBits;
    sieve.clear_bit(1);
    sieve.set_bit(2);

    for (uint64_t p = 3; p * p <= limit; p += 2) {
        if (!sieve.bit(p)) continue;
        for (uint64_t m = p * p; m <= limit; m += 2 * p) sieve.clear_bit(m);
    }

    // Zero the slack bits past limit in the last word.
    for (uint64_t i = limit + 1; i < sieve.words_.size() * 64; ++i) sieve.clear_bit(i);

    return sieve;
}

}  // namespace goldbach

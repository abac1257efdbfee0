// candidates.hpp
// Classifies an even integer by its residue mod 6 and enumerates the
// reduced set of splits that can still consist of two primes:
//
//   case A (N % 6 == 2, N >= 14, x = (N+4)/6):
//       {3, N-3}   and   {6n+1, N-6n-1}   for 1 <= n <= (x-1)/2
//   case C (N % 6 == 4, N >= 16, x = (N+2)/6):
//       {3, N-3}   and   {6n-1, N-6n+1}   for 1 <= n <= x/2
//   case E (N % 6 == 0, N >= 18, x = N/6):
//       {6n-1, N-6n+1}                    for 1 <= n <= x-1
//
// x is N's row in the six-column table. Any other split of N contains an
// even member or a multiple of 3 greater than 3, so it can never be a
// pair of primes. The evens 4..12 sit below the first usable row and are
// handled by lookup in the search layer.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace goldbach {

enum class CaseTag { A, C, E, Small };

struct EvenClass {
    CaseTag tag;
    uint64_t n_value;  // the even number N
    uint64_t x;        // row index of N; 0 for Small
};

// Which generating family a split came from. ThreePlusD/ThreePlusF are the
// {3, N-3} splits; FF, DD, DF pair the prime-carrying columns; Small marks
// the lookup pairs for N <= 12 that no family covers ({2,2}, {3,3}).
enum class PairForm { ThreePlusD, ThreePlusF, FF, DD, DF, Small };

struct CandidatePair {
    uint64_t lo;
    uint64_t hi;
    PairForm form;
    uint64_t n;  // generating index; 0 for {3, N-3} and lookup pairs

    friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

// Inclusive index range of a case's pair family.
struct NRange {
    uint64_t first;
    uint64_t last;

    uint64_t size() const { return last - first + 1; }
};

// Classification per the case rules above; N in {4,...,12} maps to Small.
// Rejects odd N, N < 4, and N >= 2^63 (pair sums must stay exact).
EvenClass classify_even(uint64_t n);

// The family index range of the class. Rejects Small.
NRange n_range(const EvenClass& cls);

// The {3, N-3} split for cases A and C; empty for case E (a 3-based split
// of a multiple of 6 would need 3 + 3 = 6, which is Small).
std::optional<CandidatePair> special_candidate(const EvenClass& cls);

// The n-th family pair, normalized lo <= hi. Rejects n outside n_range.
CandidatePair pair_at(const EvenClass& cls, uint64_t n);

// Number of splits enumerate_candidates yields:
//   case A: 1 + (x-1)/2,  case C: 1 + x/2,  case E: x - 1.
uint64_t count_candidates(const EvenClass& cls);

namespace detail {

constexpr PairForm family_form(CaseTag tag) {
    return tag == CaseTag::A ? PairForm::FF
         : tag == CaseTag::C ? PairForm::DD
                             : PairForm::DF;
}

}  // namespace detail

// Canonical enumeration order: the special split first (cases A and C),
// then the family in ascending n. For case E the full range [1, x-1]
// already visits every unordered D+F split exactly once, with the 6n-1
// member running over 5, 11, ..., N-7. The visitor returns false to stop;
// visit_candidates returns false iff it was stopped early.
template <typename Visitor>
bool visit_candidates(const EvenClass& cls, Visitor&& visit) {
    const NRange range = n_range(cls);
    if (auto special = special_candidate(cls)) {
        if (!visit(*special)) return false;
    }
    const PairForm form = detail::family_form(cls.tag);
    uint64_t lo = cls.tag == CaseTag::A ? 7 : 5;
    uint64_t hi = cls.n_value - lo;
    for (uint64_t n = range.first; n <= range.last; ++n, lo += 6, hi -= 6) {
        const CandidatePair pair =
            lo <= hi ? CandidatePair{lo, hi, form, n} : CandidatePair{hi, lo, form, n};
        if (!visit(pair)) return false;
    }
    return true;
}

// The canonical enumeration as a sequence. Rejects Small.
std::vector<CandidatePair> enumerate_candidates(const EvenClass& cls);

// Case E split into its two one-sided families, the presentation used by
// the worked listings: d_first pairs {6n-1, N-6n+1} for n = 1..ceil((x-1)/2)
// and f_first pairs {6n+1, N-6n-1} for n = 1..floor((x-1)/2). Their union
// equals enumerate_candidates as unordered pairs. Rejects cases A, C, Small.
struct TwoFamilyListing {
    std::vector<CandidatePair> d_first;
    std::vector<CandidatePair> f_first;
};
TwoFamilyListing two_family_listing(const EvenClass& cls);

}  // namespace goldbach

#include "goldbach/candidates.hpp"

#include <stdexcept>
#include <string>

namespace goldbach {

namespace {

void require_case(const EvenClass& cls, const char* op) {
    if (cls.tag == CaseTag::Small) {
        throw std::invalid_argument(std::string(op) + ": N=" +
                                    std::to_string(cls.n_value) +
                                    " is below the first usable row");
    }
}

}  // namespace

EvenClass classify_even(uint64_t n) {
    if (n % 2 != 0) {
        throw std::invalid_argument("classify_even: " + std::to_string(n) +
                                    " is odd");
    }
    if (n < 4) {
        throw std::invalid_argument("classify_even: " + std::to_string(n) +
                                    " has no two-prime split");
    }
    if (n >= (1ull << 63)) {
        throw std::invalid_argument("classify_even: N too large");
    }
    if (n <= 12) return {CaseTag::Small, n, 0};
    switch (n % 6) {
        case 2: return {CaseTag::A, n, (n + 4) / 6};
        case 4: return {CaseTag::C, n, (n + 2) / 6};
        default: return {CaseTag::E, n, n / 6};
    }
}

NRange n_range(const EvenClass& cls) {
    require_case(cls, "n_range");
    switch (cls.tag) {
        case CaseTag::A: return {1, (cls.x - 1) / 2};
        case CaseTag::C: return {1, cls.x / 2};
        default: return {1, cls.x - 1};
    }
}

std::optional<CandidatePair> special_candidate(const EvenClass& cls) {
    require_case(cls, "special_candidate");
    switch (cls.tag) {
        case CaseTag::A:
            return CandidatePair{3, cls.n_value - 3, PairForm::ThreePlusD, 0};
        case CaseTag::C:
            return CandidatePair{3, cls.n_value - 3, PairForm::ThreePlusF, 0};
        default:
            return std::nullopt;
    }
}

CandidatePair pair_at(const EvenClass& cls, uint64_t n) {
    const NRange range = n_range(cls);
    if (n < range.first || n > range.last) {
        throw std::out_of_range("pair_at: n=" + std::to_string(n) +
                                " outside [" + std::to_string(range.first) +
                                ", " + std::to_string(range.last) + "]");
    }
    // A draws both members from the 6n+1 column, C and E lead with 6n-1.
    const uint64_t lo = cls.tag == CaseTag::A ? 6 * n + 1 : 6 * n - 1;
    const uint64_t hi = cls.n_value - lo;
    const PairForm form = detail::family_form(cls.tag);
    return lo <= hi ? CandidatePair{lo, hi, form, n}
                    : CandidatePair{hi, lo, form, n};
}

uint64_t count_candidates(const EvenClass& cls) {
    const uint64_t family = n_range(cls).size();
    return special_candidate(cls) ? family + 1 : family;
}

std::vector<CandidatePair> enumerate_candidates(const EvenClass& cls) {
    std::vector<CandidatePair> pairs;
    pairs.reserve(count_candidates(cls));
    visit_candidates(cls, [&](const CandidatePair& pair) {
        pairs.push_back(pair);
        return true;
    });
    return pairs;
}

TwoFamilyListing two_family_listing(const EvenClass& cls) {
    if (cls.tag != CaseTag::E) {
        throw std::invalid_argument("two_family_listing: N=" +
                                    std::to_string(cls.n_value) +
                                    " is not a multiple of 6");
    }
    // Walking d_first to x/2 and f_first to (x-1)/2 covers the canonical
    // family exactly once: d_first n is canonical n, f_first n is x - n.
    TwoFamilyListing listing;
    const uint64_t N = cls.n_value;
    for (uint64_t n = 1; n <= cls.x / 2; ++n) {
        listing.d_first.push_back({6 * n - 1, N - 6 * n + 1, PairForm::DF, n});
    }
    for (uint64_t n = 1; n <= (cls.x - 1) / 2; ++n) {
        listing.f_first.push_back({6 * n + 1, N - 6 * n - 1, PairForm::DF, n});
    }
    return listing;
}

}  // namespace goldbach

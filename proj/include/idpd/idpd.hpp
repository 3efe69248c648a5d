#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idpd/atoms.hpp"
#include "idpd/divisor.hpp"

namespace idpd {

struct SearchBounds {
    std::int64_t max_total_multiplicity = 12;
    std::uint32_t prime_cap = 3; // truncation for unbounded slots
    std::uint32_t max_support = 8;

    bool operator==(const SearchBounds&) const = default;
};

enum class VerdictStatus {
    CounterexampleFound,
    NoCounterexampleWithinBounds,
    CertifiedIdpd,
    CertifiedNotIdpd,
};

const char* to_string(VerdictStatus s);

// A concrete failure of the pair property: non-associate atoms p, q dividing
// the principal z for which no atoms p', q' with pp' ~ qq' | z exist.
struct PairCounterexample {
    DivisorProfile z, p, q;
};

// A positive spot check: a pair together with the witnessing atoms.
struct PairSample {
    DivisorProfile z, p, q, p_prime, q_prime;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::NoCounterexampleWithinBounds;
    std::optional<PairCounterexample> counterexample;
    std::optional<PairSample> sample;
    std::optional<SearchBounds> bounds; // present whenever a search actually ran
    std::vector<std::string> certificates;
    std::string detail;
};

// Searches for atoms p', q' with pp' ~ qq' | z. q' is never searched: since
// associates are equal profiles, pp' = qq' forces q' = p + p' - q, so only p'
// runs over the atoms dividing z/p. Returns the first valid (p', q') in
// canonical order, or nullopt when the pair property fails at (z, p, q).
//
// Preconditions (usage_error): z principal and nonempty; p, q distinct atoms
// dividing z.
std::optional<std::pair<DivisorProfile, DivisorProfile>> pair_witness(const PrimeSpectrumConfig& cfg,
                                                                      const DivisorProfile& z,
                                                                      const DivisorProfile& p,
                                                                      const DivisorProfile& q);

// Re-verifies a claimed witness: p, q, p', q' atoms; p != q; p, q | z;
// p + p' = q + q'; p + p' | z.
bool verify_pair(const PrimeSpectrumConfig& cfg, const DivisorProfile& z, const DivisorProfile& p,
                 const DivisorProfile& q, const DivisorProfile& p_prime, const DivisorProfile& q_prime);

// Scans all unordered pairs of distinct atoms dividing z in canonical order;
// returns the first pair with no witness, or nullopt when z passes (elements
// with fewer than two atom divisors pass vacuously).
std::optional<std::pair<DivisorProfile, DivisorProfile>> check_element(const PrimeSpectrumConfig& cfg,
                                                                       const DivisorProfile& z);

// Bounded exhaustive IDPD search. Strips class-0 slots, enumerates canonical
// principal profiles up to the bounds (ordinals within a slot used in
// increasing order with non-increasing exponents), and checks every element.
// The reported counterexample is minimal in (total multiplicity, canonical
// profile order) and is independent of the thread count. Witness profiles are
// expressed in the original config's slot indices.
Verdict search_counterexample(const PrimeSpectrumConfig& cfg, const SearchBounds& bounds,
                              unsigned threads = 1);

// The canonical z-enumeration underlying the search, exposed for tests and
// oracle suites: all canonical principal nonempty profiles within bounds,
// sorted by (total multiplicity, canonical profile order). Slot indices refer
// to cfg itself (no stripping).
std::vector<DivisorProfile> enumerate_principal_profiles(const PrimeSpectrumConfig& cfg,
                                                         const SearchBounds& bounds);

} // namespace idpd

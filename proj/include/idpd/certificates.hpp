#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idpd/atoms.hpp"
#include "idpd/divisor.hpp"
#include "idpd/idpd.hpp"

namespace idpd {

enum class CertificateName {
    UfdTrivial,
    SmallClassGroup,
    Elementary2,
    ZaksCondition,
    StructuralSum,
    CyclicPrimePower,
    TotallyOrderedS,
    PolynomialExtension,
};

const char* to_string(CertificateName n);

struct Certificate {
    CertificateName name;
    bool holds = false;
    std::string detail;
    std::vector<std::string> prerequisites; // each verified in the same run when holds
};

// Every slot class is 0: the model is a UFD, hence trivially an IDPD.
Certificate certify_ufd(const PrimeSpectrumConfig& cfg);

// |Cl(D)| <= 2 implies IDPD, no HFD prerequisite (half-factoriality follows).
Certificate certify_small_class_group(const PrimeSpectrumConfig& cfg);

// Elementary 2-group class group + HFD implies IDPD.
Certificate certify_elementary2(const PrimeSpectrumConfig& cfg, HfdStatus hfd);

// HFD and, for every slot class g, either 2g = 0 or some slot class h has
// g + h = 0.
Certificate certify_zaks_condition(const PrimeSpectrumConfig& cfg, HfdStatus hfd);

// The nonzero slot classes are exactly the standard free basis, its
// negatives, and the standard torsion generators of the stored decomposition.
// That shape forces half-factoriality by itself, so this certificate carries
// its own HFD prerequisite internally and ignores the engine's verdict.
Certificate certify_structural_sum(const PrimeSpectrumConfig& cfg);

// Cyclic class group of prime-power order + HFD implies IDPD. (The
// corresponding Pruefer-group case has no finite representation here.)
Certificate certify_cyclic_prime_power(const PrimeSpectrumConfig& cfg, HfdStatus hfd);

// Diagnostics behind the totally-ordered-S certificate. For an HFD config
// with an applicable, unambiguous S both structural checks must hold; their
// failure alongside hfd = yes is an internal inconsistency and throws.
struct SDiagnostics {
    bool applicable = false;
    bool ambiguous = false;
    std::vector<std::int64_t> S; // first variant when applicable
    bool s_divides_n = false;
    bool unique_order_class = false;
    bool totally_ordered = false;
};
SDiagnostics s_diagnostics(const PrimeSpectrumConfig& cfg);

// Cyclic class group with a generating prime class whose S is totally
// ordered by divisibility, plus HFD, implies IDPD.
Certificate certify_totally_ordered_S(const PrimeSpectrumConfig& cfg, HfdStatus hfd);

// Query about the polynomial extension D[x]: it is an IDPD iff |Cl(D)| <= 2.
// Reported for information; it certifies D[x], not D.
Certificate certify_polynomial_extension(const PrimeSpectrumConfig& cfg);

struct CertificationSummary {
    HfdStatus hfd = HfdStatus::Undecided;
    std::vector<Certificate> certificates;
};

// Runs is_hfd once and feeds it to every certifier.
CertificationSummary summarize_certificates(const PrimeSpectrumConfig& cfg);

// Merges a summary into a Verdict: CertifiedIdpd when any IDPD-certifying
// certificate holds; CertifiedNotIdpd when hfd = no (IDPD implies HFD);
// otherwise NoCounterexampleWithinBounds with no bounds attached, meaning a
// bounded search is still required.
Verdict merge_certification(const CertificationSummary& summary);

// summarize + merge, the one-call form.
Verdict certify_all(const PrimeSpectrumConfig& cfg);

// Full decision pipeline: certify, then search when inconclusive. A search
// also runs when hfd = no so the verdict carries a concrete witness whenever
// one exists within bounds.
struct IdpdDecision {
    CertificationSummary summary;
    Verdict verdict;
};
IdpdDecision decide_idpd(const PrimeSpectrumConfig& cfg, const SearchBounds& bounds, unsigned threads = 1);

// Canonical representative of a set of nonzero residues mod n under the
// automorphisms of Z_n (multiplication by units): the lexicographically
// least image. Used by the order-6 case analysis and the search harness.
std::vector<std::int64_t> canonical_cyclic_class_subset(std::int64_t n, std::vector<std::int64_t> classes);

} // namespace idpd

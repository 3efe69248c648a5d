#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "idpd/certificates.hpp"
#include "idpd/divisor.hpp"
#include "idpd/idpd.hpp"

namespace idpd {

// Report bodies are plain JSON under the versioned schema "idpd-report/1".
// The "meta" object (tool version, timing, thread count) is excluded from
// golden comparisons; everything else is stable and diffable.

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json bounds_to_json(const SearchBounds& b);
SearchBounds bounds_from_json(const nlohmann::json& j);

// Report builders. Each returns a complete document (schema + command +
// body + meta); `threads` is recorded and used by searches.
nlohmann::json make_atoms_report(const PrimeSpectrumConfig& cfg);
nlohmann::json make_hfd_report(const PrimeSpectrumConfig& cfg);
nlohmann::json make_idpd_report(const PrimeSpectrumConfig& cfg, const SearchBounds& bounds,
                                unsigned threads = 1);

// Case analysis over one finite group: enumerates faithful class subsets
// (canonicalized by unit multiplication for cyclic groups), decides HFD,
// certifies or searches each, and lists the flagged (HFD but counterexample
// found) families. Slot counts are unbounded, truncated by bounds.prime_cap.
nlohmann::json make_case_analysis_report(const std::vector<std::int64_t>& torsion_orders,
                                         const SearchBounds& bounds, unsigned threads = 1);

nlohmann::json make_quad_report(std::int64_t d, std::int64_t norm_bound);
nlohmann::json make_semigroup_report();
nlohmann::json make_monomial_report(std::int64_t radicand, std::int64_t max_degree);

// Named golden suites for `reproduce`.
std::vector<std::string> reproduce_suite_names();
nlohmann::json make_reproduce_report(const std::string& name, unsigned threads = 1);

// Strips volatile fields ("meta") for golden comparison.
nlohmann::json normalize_for_diff(nlohmann::json report);

// First differing JSON pointer between two normalized reports, or empty.
std::string first_difference(const nlohmann::json& a, const nlohmann::json& b);

std::string render_report_text(const nlohmann::json& report);

// Re-verifies every witness a report carries (counterexamples re-fail,
// samples re-pass, quadratic witnesses re-check). Returns the list of
// failures, empty when everything re-verifies.
std::vector<std::string> verify_report(const nlohmann::json& report);

} // namespace idpd

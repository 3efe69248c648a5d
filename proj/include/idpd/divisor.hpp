#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idpd/group.hpp"
#include "idpd/rational.hpp"

namespace idpd {

// One class of height-1 primes: the class in Cl(D) plus how many distinct
// primes the model provides in that class (nullopt = unbounded supply).
struct SlotSpec {
    GroupElement cls;
    std::optional<std::uint32_t> count;
};

// The divisor-theoretic model of a Krull domain: a class group together with
// prime classes and their multiplicities. Immutable after construction.
//
// `faithful` declares that the slot classes generate the whole group (the
// genuine Krull situation). For finite groups this is verified on
// construction; certifiers that reason about the shape of the full class
// group refuse non-faithful configs.
class PrimeSpectrumConfig {
public:
    PrimeSpectrumConfig(CyclicDecomposition group, std::vector<SlotSpec> slots,
                        std::string name = {}, bool faithful = true);

    const CyclicDecomposition& group() const { return group_; }
    const std::vector<SlotSpec>& slots() const { return slots_; }
    const SlotSpec& slot(std::size_t i) const;
    std::size_t slot_count() const { return slots_.size(); }
    const std::string& name() const { return name_; }
    bool faithful() const { return faithful_; }

    // No slots at all: a field / UFD stand-in.
    bool is_trivial() const { return slots_.empty(); }

private:
    CyclicDecomposition group_;
    std::vector<SlotSpec> slots_;
    std::string name_;
    bool faithful_;
};

// Identifies one concrete height-1 prime: the slot it lives in and which of
// the slot's interchangeable primes it is.
struct PrimeId {
    std::uint32_t slot = 0;
    std::uint32_t ordinal = 0;

    auto operator<=>(const PrimeId&) const = default;
};

struct ProfileEntry {
    PrimeId prime;
    std::int64_t exp = 0; // always >= 1 once stored

    bool operator==(const ProfileEntry&) const = default;
};

// A divisorial ideal written as a finite intersection of symbolic prime
// powers: a map prime -> exponent with no zero entries, kept sorted by
// (slot, ordinal). The empty profile is the unit ideal; principal profiles
// stand for ring elements up to associates.
class DivisorProfile {
public:
    DivisorProfile() = default;

    // Normalizes: merges duplicate primes, drops zero exponents, sorts.
    // Negative exponents are rejected.
    static DivisorProfile from_entries(std::vector<ProfileEntry> entries);

    static DivisorProfile unit() { return DivisorProfile(); }

    const std::vector<ProfileEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    std::int64_t total_multiplicity() const;
    std::int64_t exponent_of(PrimeId p) const;

    bool operator==(const DivisorProfile&) const = default;

    std::string str() const; // e.g. "p0.0^3 p0.1^2 p1.0^2" ; "1" for the unit

private:
    std::vector<ProfileEntry> entries_;
};

// Canonical total order on profiles: entries compared lexicographically by
// (slot, ordinal, exponent). Any fixed order would do; this one is pinned so
// witnesses and goldens are reproducible.
bool profile_less(const DivisorProfile& a, const DivisorProfile& b);

// (total multiplicity, canonical order) — the minimality key for witnesses.
bool profile_size_less(const DivisorProfile& a, const DivisorProfile& b);

// ---- divisor-model operations -------------------------------------------

// Throws structural_error if some entry names a slot/ordinal outside cfg.
void validate_profile(const PrimeSpectrumConfig& cfg, const DivisorProfile& a);

// Sum of exponent * class over all entries.
GroupElement class_sum(const PrimeSpectrumConfig& cfg, const DivisorProfile& a);

// Principal <=> the class sum vanishes.
bool is_principal(const PrimeSpectrumConfig& cfg, const DivisorProfile& a);

// x | z  <=>  every exponent of x is <= the matching exponent of z.
bool divides(const PrimeSpectrumConfig& cfg, const DivisorProfile& x, const DivisorProfile& z);

// Exponentwise sum (the product ideal).
DivisorProfile product(const PrimeSpectrumConfig& cfg, const DivisorProfile& x, const DivisorProfile& z);

// Exponentwise difference z - x; requires divides(x, z).
DivisorProfile residual(const PrimeSpectrumConfig& cfg, const DivisorProfile& z, const DivisorProfile& x);

// Cross number L(a) = sum of exponent / order(class). Exact.
// Throws usage_error when a class of infinite order appears in the support.
Rational L_value(const PrimeSpectrumConfig& cfg, const DivisorProfile& a);

// S(D) for stored-cyclic groups with a generating slot class: the residues
// s in [1, n] represented by slot classes, under the isomorphism sending a
// generating slot class to 1. One variant per generating slot class choice
// (deduplicated); HFD configs have exactly one, since at most one class of
// each order is represented there.
struct SComputation {
    bool applicable = false;                          // false: not cyclic / no generator
    std::vector<std::vector<std::int64_t>> variants;  // each sorted ascending
    bool ambiguous() const { return variants.size() > 1; }
};
SComputation compute_S(const PrimeSpectrumConfig& cfg);

// Same config with every class-0 slot removed (localization at the prime
// elements). Remaining slots keep their relative order.
PrimeSpectrumConfig strip_principal_classes(const PrimeSpectrumConfig& cfg);

// strip_principal_classes plus the map new slot index -> original slot index.
struct StrippedConfig {
    PrimeSpectrumConfig cfg;
    std::vector<std::uint32_t> original_slot;
};
StrippedConfig strip_principal_classes_mapped(const PrimeSpectrumConfig& cfg);

} // namespace idpd

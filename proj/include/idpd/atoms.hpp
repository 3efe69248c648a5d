#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "idpd/divisor.hpp"

namespace idpd {

// Class shadow of an atom: slot index -> multiplicity of that slot's class in
// a minimal zero-sum multiset. Entries sorted by slot, multiplicities >= 1.
struct ClassMultiset {
    std::vector<std::pair<std::uint32_t, std::int64_t>> slot_mults;

    std::int64_t total() const;
    bool operator==(const ClassMultiset&) const = default;
};

// Enumeration cutoff for minimal zero-sum length: |G|. Every minimal
// zero-sum sequence over a finite abelian group is at most this long.
// Tighter Davenport constants would only be a performance upgrade.
std::uint64_t davenport_cap(const CyclicDecomposition& group);

// Atom test: principal, nonempty, and no proper nonempty principal
// sub-profile. Runs a reachable-sums dynamic program over per-slot exponent
// totals (primes within a slot share a class, so only totals matter).
bool is_atom(const PrimeSpectrumConfig& cfg, const DivisorProfile& a);

// All atoms dividing z, canonically ordered, no duplicates.
std::vector<DivisorProfile> atoms_dividing(const PrimeSpectrumConfig& cfg, const DivisorProfile& z);

// All minimal zero-sum multisets over the slot classes, exhaustive up to
// total multiplicity davenport_cap. Requires a finite group.
std::vector<ClassMultiset> enumerate_atom_class_sequences(const PrimeSpectrumConfig& cfg);

// Cross number of a class multiset: sum of multiplicity / class order.
Rational class_multiset_L(const PrimeSpectrumConfig& cfg, const ClassMultiset& m);

struct FactorizationMultiset {
    std::vector<DivisorProfile> atoms; // non-decreasing in canonical profile order

    std::size_t length() const { return atoms.size(); }
};

// All multisets of atoms with product z; exhaustive backtracking with a
// global canonical order so each multiset appears exactly once.
// z must be principal and nonempty (a non-principal z has no factorization;
// that is a usage error, not an empty list).
std::vector<FactorizationMultiset> factorizations(const PrimeSpectrumConfig& cfg, const DivisorProfile& z);

std::set<std::size_t> length_set(const PrimeSpectrumConfig& cfg, const DivisorProfile& z);

enum class HfdStatus { No, Yes, Undecided };

const char* to_string(HfdStatus s);

// Half-factoriality via the cross-number criterion: when every slot class is
// torsion, the model is an HFD iff every minimal zero-sum class multiset has
// L = 1. A class with a nonzero free coordinate leaves this Undecided (the
// structural certifier may still settle it).
HfdStatus is_hfd(const PrimeSpectrumConfig& cfg);

} // namespace idpd

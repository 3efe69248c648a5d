#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idpd/errors.hpp"
#include "idpd/rational.hpp"

namespace idpd {

// Element of Z^r ⊕ Z_{n_1} ⊕ ... ⊕ Z_{n_k}. Free coordinates are arbitrary
// precision; torsion coordinates are kept reduced into [0, n_j).
struct GroupElement {
    std::vector<BigInt> free;
    std::vector<std::int64_t> torsion;

    bool operator==(const GroupElement&) const = default;
};

// Deterministic total order, used wherever canonical listings are needed.
int compare(const GroupElement& a, const GroupElement& b);
inline bool element_less(const GroupElement& a, const GroupElement& b) { return compare(a, b) < 0; }

std::string to_string(const GroupElement& g);

// A finitely generated abelian group presented as Z^r ⊕ Z_{n_1} ⊕ ... ⊕ Z_{n_k}.
// Torsion orders are stored exactly as given (no invariant-factor massaging);
// anything that cares about a specific shape tests the stored shape.
// All operations are pure; values are immutable once built.
class CyclicDecomposition {
public:
    CyclicDecomposition(std::size_t free_rank, std::vector<std::int64_t> torsion_orders);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<std::int64_t>& torsion_orders() const { return torsion_orders_; }

    bool operator==(const CyclicDecomposition&) const = default;

    bool is_finite() const { return free_rank_ == 0; }
    // Product of the torsion orders; the group order when finite.
    BigInt torsion_order() const;

    bool is_trivial() const { return free_rank_ == 0 && torsion_orders_.empty(); }
    // Cyclic as stored: free rank 0 and at most one torsion factor.
    bool is_cyclic() const { return free_rank_ == 0 && torsion_orders_.size() <= 1; }
    // Order when stored-cyclic (1 for the trivial group).
    std::int64_t cyclic_order() const;
    bool is_elementary_2() const;

    GroupElement zero() const;
    // Builds an element from raw coordinates (free first, then torsion),
    // reducing torsion coordinates mod n_j.
    GroupElement element(const std::vector<std::int64_t>& coords) const;

    // Shape check; throws structural_error if g does not belong here.
    void validate(const GroupElement& g) const;

    bool is_zero(const GroupElement& g) const;
    GroupElement add(const GroupElement& g, const GroupElement& h) const;
    GroupElement negate(const GroupElement& g) const;
    GroupElement scale(const GroupElement& g, std::int64_t m) const;

    // Least m >= 1 with m*g = 0, or nullopt when g has infinite order.
    std::optional<std::int64_t> element_order(const GroupElement& g) const;

    // --- finite-group element indexing (mixed radix over torsion orders) ---
    // Only valid for finite groups whose order fits std::uint64_t.
    std::uint64_t element_count() const;
    std::uint64_t index_of(const GroupElement& g) const;
    GroupElement element_at(std::uint64_t index) const;

private:
    std::size_t free_rank_ = 0;
    std::vector<std::int64_t> torsion_orders_;
};

// Hash for use in unordered containers keyed by elements of one group.
struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const;
};

} // namespace idpd

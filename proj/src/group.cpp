#include "idpd/group.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace idpd {

namespace {

std::int64_t reduce_mod(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

int compare(const GroupElement& a, const GroupElement& b) {
    if (a.free.size() != b.free.size()) return a.free.size() < b.free.size() ? -1 : 1;
    if (a.torsion.size() != b.torsion.size()) return a.torsion.size() < b.torsion.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.free.size(); ++i) {
        if (a.free[i] != b.free[i]) return a.free[i] < b.free[i] ? -1 : 1;
    }
    for (std::size_t i = 0; i < a.torsion.size(); ++i) {
        if (a.torsion[i] != b.torsion[i]) return a.torsion[i] < b.torsion[i] ? -1 : 1;
    }
    return 0;
}

std::string to_string(const GroupElement& g) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& c : g.free) {
        if (!first) os << ',';
        os << c;
        first = false;
    }
    for (auto c : g.torsion) {
        if (!first) os << ',';
        os << c;
        first = false;
    }
    os << ')';
    return os.str();
}

CyclicDecomposition::CyclicDecomposition(std::size_t free_rank, std::vector<std::int64_t> torsion_orders)
    : free_rank_(free_rank), torsion_orders_(std::move(torsion_orders)) {
    for (auto n : torsion_orders_) {
        if (n < 2) throw structural_error("torsion order must be >= 2, got " + std::to_string(n));
    }
}

BigInt CyclicDecomposition::torsion_order() const {
    BigInt o = 1;
    for (auto n : torsion_orders_) o *= n;
    return o;
}

std::int64_t CyclicDecomposition::cyclic_order() const {
    if (!is_cyclic()) throw structural_error("group is not cyclic as stored");
    return torsion_orders_.empty() ? 1 : torsion_orders_[0];
}

bool CyclicDecomposition::is_elementary_2() const {
    if (free_rank_ != 0) return false;
    return std::all_of(torsion_orders_.begin(), torsion_orders_.end(),
                       [](std::int64_t n) { return n == 2; });
}

GroupElement CyclicDecomposition::zero() const {
    GroupElement g;
    g.free.assign(free_rank_, BigInt(0));
    g.torsion.assign(torsion_orders_.size(), 0);
    return g;
}

GroupElement CyclicDecomposition::element(const std::vector<std::int64_t>& coords) const {
    if (coords.size() != free_rank_ + torsion_orders_.size()) {
        throw structural_error("element: expected " + std::to_string(free_rank_ + torsion_orders_.size()) +
                               " coordinates, got " + std::to_string(coords.size()));
    }
    GroupElement g;
    g.free.reserve(free_rank_);
    for (std::size_t i = 0; i < free_rank_; ++i) g.free.emplace_back(coords[i]);
    g.torsion.reserve(torsion_orders_.size());
    for (std::size_t j = 0; j < torsion_orders_.size(); ++j) {
        g.torsion.push_back(reduce_mod(coords[free_rank_ + j], torsion_orders_[j]));
    }
    return g;
}

void CyclicDecomposition::validate(const GroupElement& g) const {
    if (g.free.size() != free_rank_ || g.torsion.size() != torsion_orders_.size()) {
        throw structural_error("element does not match the group decomposition");
    }
    for (std::size_t j = 0; j < torsion_orders_.size(); ++j) {
        if (g.torsion[j] < 0 || g.torsion[j] >= torsion_orders_[j]) {
            throw structural_error("torsion coordinate out of range");
        }
    }
}

bool CyclicDecomposition::is_zero(const GroupElement& g) const {
    validate(g);
    return std::all_of(g.free.begin(), g.free.end(), [](const BigInt& c) { return c == 0; }) &&
           std::all_of(g.torsion.begin(), g.torsion.end(), [](std::int64_t c) { return c == 0; });
}

GroupElement CyclicDecomposition::add(const GroupElement& g, const GroupElement& h) const {
    validate(g);
    validate(h);
    GroupElement r;
    r.free.reserve(free_rank_);
    for (std::size_t i = 0; i < free_rank_; ++i) r.free.push_back(g.free[i] + h.free[i]);
    r.torsion.reserve(torsion_orders_.size());
    for (std::size_t j = 0; j < torsion_orders_.size(); ++j) {
        r.torsion.push_back(reduce_mod(g.torsion[j] + h.torsion[j], torsion_orders_[j]));
    }
    return r;
}

GroupElement CyclicDecomposition::negate(const GroupElement& g) const {
    validate(g);
    GroupElement r;
    r.free.reserve(free_rank_);
    for (const auto& c : g.free) r.free.push_back(-c);
    r.torsion.reserve(torsion_orders_.size());
    for (std::size_t j = 0; j < torsion_orders_.size(); ++j) {
        r.torsion.push_back(reduce_mod(-g.torsion[j], torsion_orders_[j]));
    }
    return r;
}

GroupElement CyclicDecomposition::scale(const GroupElement& g, std::int64_t m) const {
    validate(g);
    GroupElement r;
    r.free.reserve(free_rank_);
    for (const auto& c : g.free) r.free.push_back(c * m);
    r.torsion.reserve(torsion_orders_.size());
    for (std::size_t j = 0; j < torsion_orders_.size(); ++j) {
        // reduce m first so the product stays in range
        std::int64_t mj = reduce_mod(m, torsion_orders_[j]);
        r.torsion.push_back(reduce_mod(g.torsion[j] * mj % torsion_orders_[j], torsion_orders_[j]));
    }
    return r;
}

std::optional<std::int64_t> CyclicDecomposition::element_order(const GroupElement& g) const {
    validate(g);
    for (const auto& c : g.free) {
        if (c != 0) return std::nullopt;
    }
    BigInt ord = 1;
    for (std::size_t j = 0; j < torsion_orders_.size(); ++j) {
        std::int64_t n = torsion_orders_[j];
        std::int64_t oj = n / std::gcd(n, g.torsion[j]);
        ord = boost::multiprecision::lcm(ord, BigInt(oj));
    }
    if (ord > std::numeric_limits<std::int64_t>::max()) {
        throw unsupported_error("element order exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(ord);
}

std::uint64_t CyclicDecomposition::element_count() const {
    if (!is_finite()) throw unsupported_error("element_count: group is infinite");
    BigInt o = torsion_order();
    if (o > std::numeric_limits<std::uint64_t>::max()) {
        throw unsupported_error("element_count: group order exceeds 64-bit range");
    }
    return static_cast<std::uint64_t>(o);
}

std::uint64_t CyclicDecomposition::index_of(const GroupElement& g) const {
    validate(g);
    if (!is_finite()) throw unsupported_error("index_of: group is infinite");
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < torsion_orders_.size(); ++j) {
        idx = idx * static_cast<std::uint64_t>(torsion_orders_[j]) + static_cast<std::uint64_t>(g.torsion[j]);
    }
    return idx;
}

GroupElement CyclicDecomposition::element_at(std::uint64_t index) const {
    if (!is_finite()) throw unsupported_error("element_at: group is infinite");
    GroupElement g = zero();
    for (std::size_t j = torsion_orders_.size(); j-- > 0;) {
        auto n = static_cast<std::uint64_t>(torsion_orders_[j]);
        g.torsion[j] = static_cast<std::int64_t>(index % n);
        index /= n;
    }
    if (index != 0) throw structural_error("element_at: index out of range");
    return g;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const {
    std::size_t seed = 0x9e3779b97f4a7c15ull;
    for (const auto& c : g.free) boost::hash_combine(seed, boost::multiprecision::hash_value(c));
    for (auto c : g.torsion) boost::hash_combine(seed, static_cast<std::size_t>(c));
    return seed;
}

} // namespace idpd

#include "idpd/divisor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace idpd {

namespace {

// Exact generated-subgroup check for finite groups, by closure.
bool classes_generate(const CyclicDecomposition& g, const std::vector<SlotSpec>& slots) {
    std::uint64_t n = g.element_count();
    std::vector<char> seen(n, 0);
    std::vector<std::uint64_t> frontier;
    auto push = [&](const GroupElement& e) {
        auto i = g.index_of(e);
        if (!seen[i]) {
            seen[i] = 1;
            frontier.push_back(i);
        }
    };
    push(g.zero());
    while (!frontier.empty()) {
        auto i = frontier.back();
        frontier.pop_back();
        GroupElement cur = g.element_at(i);
        for (const auto& s : slots) push(g.add(cur, s.cls));
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

} // namespace

PrimeSpectrumConfig::PrimeSpectrumConfig(CyclicDecomposition group, std::vector<SlotSpec> slots,
                                         std::string name, bool faithful)
    : group_(std::move(group)), slots_(std::move(slots)), name_(std::move(name)), faithful_(faithful) {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        group_.validate(slots_[i].cls);
        if (slots_[i].count && *slots_[i].count == 0) {
            throw structural_error("slot " + std::to_string(i) + ": count must be >= 1");
        }
        for (std::size_t j = i + 1; j < slots_.size(); ++j) {
            if (slots_[i].cls == slots_[j].cls) {
                throw structural_error("slots " + std::to_string(i) + " and " + std::to_string(j) +
                                       " carry the same class " + to_string(slots_[i].cls));
            }
        }
    }
    // Generation is only decidable here for finite groups; for free rank > 0
    // the flag is recorded as declared (no consumer of it accepts infinite
    // groups anyway).
    if (faithful_ && group_.is_finite() && !classes_generate(group_, slots_)) {
        throw structural_error("config flagged faithful but slot classes do not generate the group");
    }
}

const SlotSpec& PrimeSpectrumConfig::slot(std::size_t i) const {
    if (i >= slots_.size()) throw structural_error("slot index out of range");
    return slots_[i];
}

DivisorProfile DivisorProfile::from_entries(std::vector<ProfileEntry> entries) {
    std::map<PrimeId, std::int64_t> acc;
    for (const auto& e : entries) {
        if (e.exp < 0) throw usage_error("profile exponent must be >= 0");
        if (e.exp == 0) continue;
        acc[e.prime] += e.exp;
    }
    DivisorProfile p;
    p.entries_.reserve(acc.size());
    for (const auto& [prime, exp] : acc) p.entries_.push_back({prime, exp});
    return p;
}

std::int64_t DivisorProfile::total_multiplicity() const {
    std::int64_t t = 0;
    for (const auto& e : entries_) t += e.exp;
    return t;
}

std::int64_t DivisorProfile::exponent_of(PrimeId p) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const ProfileEntry& e, PrimeId q) { return e.prime < q; });
    if (it != entries_.end() && it->prime == p) return it->exp;
    return 0;
}

std::string DivisorProfile::str() const {
    if (entries_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) os << ' ';
        os << 'p' << e.prime.slot << '.' << e.prime.ordinal;
        if (e.exp != 1) os << '^' << e.exp;
        first = false;
    }
    return os.str();
}

bool profile_less(const DivisorProfile& a, const DivisorProfile& b) {
    const auto& x = a.entries();
    const auto& y = b.entries();
    return std::lexicographical_compare(
        x.begin(), x.end(), y.begin(), y.end(), [](const ProfileEntry& p, const ProfileEntry& q) {
            if (p.prime != q.prime) return p.prime < q.prime;
            return p.exp < q.exp;
        });
}

bool profile_size_less(const DivisorProfile& a, const DivisorProfile& b) {
    auto ma = a.total_multiplicity();
    auto mb = b.total_multiplicity();
    if (ma != mb) return ma < mb;
    return profile_less(a, b);
}

void validate_profile(const PrimeSpectrumConfig& cfg, const DivisorProfile& a) {
    for (const auto& e : a.entries()) {
        if (e.prime.slot >= cfg.slot_count()) {
            throw structural_error("profile names slot " + std::to_string(e.prime.slot) +
                                   " but config has " + std::to_string(cfg.slot_count()) + " slots");
        }
        const auto& s = cfg.slot(e.prime.slot);
        if (s.count && e.prime.ordinal >= *s.count) {
            throw structural_error("profile names prime ordinal " + std::to_string(e.prime.ordinal) +
                                   " in slot " + std::to_string(e.prime.slot) + " with only " +
                                   std::to_string(*s.count) + " primes");
        }
    }
}

GroupElement class_sum(const PrimeSpectrumConfig& cfg, const DivisorProfile& a) {
    validate_profile(cfg, a);
    const auto& g = cfg.group();
    GroupElement sum = g.zero();
    for (const auto& e : a.entries()) {
        sum = g.add(sum, g.scale(cfg.slot(e.prime.slot).cls, e.exp));
    }
    return sum;
}

bool is_principal(const PrimeSpectrumConfig& cfg, const DivisorProfile& a) {
    return cfg.group().is_zero(class_sum(cfg, a));
}

bool divides(const PrimeSpectrumConfig& cfg, const DivisorProfile& x, const DivisorProfile& z) {
    validate_profile(cfg, x);
    validate_profile(cfg, z);
    for (const auto& e : x.entries()) {
        if (e.exp > z.exponent_of(e.prime)) return false;
    }
    return true;
}

DivisorProfile product(const PrimeSpectrumConfig& cfg, const DivisorProfile& x, const DivisorProfile& z) {
    validate_profile(cfg, x);
    validate_profile(cfg, z);
    std::vector<ProfileEntry> all = x.entries();
    all.insert(all.end(), z.entries().begin(), z.entries().end());
    return DivisorProfile::from_entries(std::move(all));
}

DivisorProfile residual(const PrimeSpectrumConfig& cfg, const DivisorProfile& z, const DivisorProfile& x) {
    if (!divides(cfg, x, z)) throw usage_error("residual: x does not divide z");
    std::vector<ProfileEntry> out;
    for (const auto& e : z.entries()) {
        std::int64_t r = e.exp - x.exponent_of(e.prime);
        if (r > 0) out.push_back({e.prime, r});
    }
    return DivisorProfile::from_entries(std::move(out));
}

Rational L_value(const PrimeSpectrumConfig& cfg, const DivisorProfile& a) {
    validate_profile(cfg, a);
    Rational sum;
    for (const auto& e : a.entries()) {
        auto ord = cfg.group().element_order(cfg.slot(e.prime.slot).cls);
        if (!ord) {
            throw usage_error("L is undefined: class of slot " + std::to_string(e.prime.slot) +
                              " has infinite order");
        }
        sum += Rational(BigInt(e.exp), BigInt(*ord));
    }
    return sum;
}

SComputation compute_S(const PrimeSpectrumConfig& cfg) {
    SComputation out;
    const auto& g = cfg.group();
    if (!g.is_cyclic()) return out;
    std::int64_t n = g.cyclic_order();

    std::set<std::vector<std::int64_t>> variants;
    for (const auto& gen : cfg.slots()) {
        auto ord = g.element_order(gen.cls);
        if (!ord || *ord != n) continue;
        // dlog base gen.cls: s * gen in [1, n] for each slot class.
        std::vector<std::int64_t> s_set;
        for (const auto& s : cfg.slots()) {
            GroupElement acc = g.zero();
            std::int64_t dlog = 0;
            for (std::int64_t k = 1; k <= n; ++k) {
                acc = g.add(acc, gen.cls);
                if (acc == s.cls) {
                    dlog = k;
                    break;
                }
            }
            // gen generates, so every slot class has a dlog in [1, n]
            s_set.push_back(dlog);
        }
        std::sort(s_set.begin(), s_set.end());
        s_set.erase(std::unique(s_set.begin(), s_set.end()), s_set.end());
        variants.insert(std::move(s_set));
    }
    if (variants.empty()) return out;
    out.applicable = true;
    out.variants.assign(variants.begin(), variants.end());
    return out;
}

PrimeSpectrumConfig strip_principal_classes(const PrimeSpectrumConfig& cfg) {
    return strip_principal_classes_mapped(cfg).cfg;
}

StrippedConfig strip_principal_classes_mapped(const PrimeSpectrumConfig& cfg) {
    std::vector<SlotSpec> kept;
    std::vector<std::uint32_t> map;
    for (std::uint32_t i = 0; i < cfg.slot_count(); ++i) {
        if (!cfg.group().is_zero(cfg.slot(i).cls)) {
            kept.push_back(cfg.slot(i));
            map.push_back(i);
        }
    }
    // The stripped config generally no longer generates the full group, so it
    // is never flagged faithful; search verdicts do not consult the flag.
    PrimeSpectrumConfig stripped(cfg.group(), std::move(kept), cfg.name(), false);
    return {std::move(stripped), std::move(map)};
}

} // namespace idpd

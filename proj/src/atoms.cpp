#include "idpd/atoms.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>

namespace idpd {

namespace {

// Reachable-sums state machine. For a fixed vector of (class, cap) pairs it
// tracks, per reachable group element, which of the four flag combinations
//   nz = some chosen multiplicity > 0, nf = some chosen multiplicity < cap
// occur among sub-multiset choices. A nonempty proper zero-sum sub-multiset
// exists exactly when the zero element carries the (nz, nf) = (1, 1) flag.
using StateMap = std::unordered_map<GroupElement, std::uint8_t, GroupElementHash>;

constexpr std::uint8_t flag_bit(bool nz, bool nf) {
    return static_cast<std::uint8_t>(1u << ((nz ? 2 : 0) + (nf ? 1 : 0)));
}

StateMap initial_state(const CyclicDecomposition& g) {
    StateMap m;
    m.emplace(g.zero(), flag_bit(false, false));
    return m;
}

StateMap extend_state(const CyclicDecomposition& g, const StateMap& in, const GroupElement& cls,
                      std::int64_t cap) {
    StateMap out;
    GroupElement step = g.zero();
    for (std::int64_t j = 0; j <= cap; ++j) {
        if (j > 0) step = g.add(step, cls);
        for (const auto& [sum, bits] : in) {
            GroupElement s = g.add(sum, step);
            std::uint8_t shifted = 0;
            for (int nz = 0; nz < 2; ++nz) {
                for (int nf = 0; nf < 2; ++nf) {
                    if (bits & flag_bit(nz, nf)) {
                        shifted |= flag_bit(nz || j > 0, nf || j < cap);
                    }
                }
            }
            out[std::move(s)] |= shifted;
        }
    }
    return out;
}

bool has_proper_zero_sum(const CyclicDecomposition& g, const StateMap& m) {
    auto it = m.find(g.zero());
    return it != m.end() && (it->second & flag_bit(true, true)) != 0;
}

std::vector<std::int64_t> slot_totals(const PrimeSpectrumConfig& cfg, const DivisorProfile& a) {
    std::vector<std::int64_t> t(cfg.slot_count(), 0);
    for (const auto& e : a.entries()) t[e.prime.slot] += e.exp;
    return t;
}

// Exhaustive enumeration of minimal zero-sum multiplicity vectors over the
// given classes, with per-class caps and a total cap. Emits vectors in
// lexicographic order. Prunes any branch whose partial assignment already
// contains a nonempty proper zero-sum sub-multiset (no completion of such a
// branch can be minimal).
void enumerate_minimal_vectors(const CyclicDecomposition& g, const std::vector<GroupElement>& classes,
                               const std::vector<std::int64_t>& caps, std::int64_t total_cap,
                               const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    std::vector<std::int64_t> mults(classes.size(), 0);

    std::function<void(std::size_t, std::int64_t, const StateMap&, const GroupElement&, std::int64_t)> rec =
        [&](std::size_t i, std::int64_t remaining, const StateMap& dp, const GroupElement& run_sum,
            std::int64_t total) {
            if (i == classes.size()) {
                if (total > 0 && g.is_zero(run_sum)) emit(mults);
                return;
            }
            std::int64_t kmax = std::min(caps[i], remaining);
            GroupElement sum = run_sum;
            for (std::int64_t k = 0; k <= kmax; ++k) {
                if (k > 0) sum = g.add(sum, classes[i]);
                StateMap dp2 = extend_state(g, dp, classes[i], k);
                // Once a proper zero-sum shows up it persists for larger k.
                if (has_proper_zero_sum(g, dp2)) break;
                mults[i] = k;
                rec(i + 1, remaining - k, dp2, sum, total + k);
            }
            mults[i] = 0;
        };

    rec(0, total_cap, initial_state(g), g.zero(), 0);
}

// All ways to write `total` as exponents over `caps` (one cap per ordinal,
// in order), exponents >= 0 and <= cap. Used to turn a per-slot class
// multiplicity back into concrete prime exponents.
void enumerate_compositions(const std::vector<std::int64_t>& caps, std::int64_t total,
                            const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    std::vector<std::int64_t> parts(caps.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rem) {
        if (i == caps.size()) {
            if (rem == 0) emit(parts);
            return;
        }
        std::int64_t hi = std::min(caps[i], rem);
        for (std::int64_t k = 0; k <= hi; ++k) {
            parts[i] = k;
            rec(i + 1, rem - k);
        }
        parts[i] = 0;
    };
    rec(0, total);
}

bool is_minimal_zero_sum_vector(const CyclicDecomposition& g, const std::vector<GroupElement>& classes,
                                const std::vector<std::int64_t>& mults) {
    StateMap dp = initial_state(g);
    GroupElement sum = g.zero();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (mults[i] == 0) continue;
        dp = extend_state(g, dp, classes[i], mults[i]);
        sum = g.add(sum, g.scale(classes[i], mults[i]));
        total += mults[i];
    }
    return total > 0 && g.is_zero(sum) && !has_proper_zero_sum(g, dp);
}

} // namespace

std::int64_t ClassMultiset::total() const {
    std::int64_t t = 0;
    for (const auto& [slot, m] : slot_mults) t += m;
    return t;
}

std::uint64_t davenport_cap(const CyclicDecomposition& group) {
    if (!group.is_finite()) throw unsupported_error("davenport_cap: group is infinite");
    return group.element_count();
}

bool is_atom(const PrimeSpectrumConfig& cfg, const DivisorProfile& a) {
    if (a.empty()) throw usage_error("is_atom: profile is empty");
    validate_profile(cfg, a);
    const auto& g = cfg.group();
    std::vector<GroupElement> classes;
    std::vector<std::int64_t> mults;
    for (std::uint32_t s = 0; s < cfg.slot_count(); ++s) classes.push_back(cfg.slot(s).cls);
    mults = slot_totals(cfg, a);
    return is_minimal_zero_sum_vector(g, classes, mults);
}

std::vector<DivisorProfile> atoms_dividing(const PrimeSpectrumConfig& cfg, const DivisorProfile& z) {
    if (z.empty()) throw usage_error("atoms_dividing: profile is empty");
    validate_profile(cfg, z);
    const auto& g = cfg.group();

    std::vector<GroupElement> classes;
    for (std::uint32_t s = 0; s < cfg.slot_count(); ++s) classes.push_back(cfg.slot(s).cls);
    std::vector<std::int64_t> caps = slot_totals(cfg, z);

    // Per slot, the ordinals present in z and their exponents.
    std::vector<std::vector<PrimeId>> slot_primes(cfg.slot_count());
    std::vector<std::vector<std::int64_t>> slot_exps(cfg.slot_count());
    for (const auto& e : z.entries()) {
        slot_primes[e.prime.slot].push_back(e.prime);
        slot_exps[e.prime.slot].push_back(e.exp);
    }

    std::vector<DivisorProfile> out;
    enumerate_minimal_vectors(g, classes, caps, z.total_multiplicity(),
                              [&](const std::vector<std::int64_t>& mults) {
        // Distribute each slot's multiplicity over the primes present in z.
        std::vector<std::vector<std::vector<std::int64_t>>> choices(cfg.slot_count());
        for (std::uint32_t s = 0; s < cfg.slot_count(); ++s) {
            if (mults[s] == 0) {
                choices[s].push_back({});
                continue;
            }
            enumerate_compositions(slot_exps[s], mults[s],
                                   [&](const std::vector<std::int64_t>& parts) {
                choices[s].push_back(parts);
            });
        }
        std::vector<ProfileEntry> entries;
        std::function<void(std::uint32_t)> cross = [&](std::uint32_t s) {
            if (s == cfg.slot_count()) {
                out.push_back(DivisorProfile::from_entries(entries));
                return;
            }
            for (const auto& parts : choices[s]) {
                std::size_t before = entries.size();
                for (std::size_t o = 0; o < parts.size(); ++o) {
                    if (parts[o] > 0) entries.push_back({slot_primes[s][o], parts[o]});
                }
                cross(s + 1);
                entries.resize(before);
            }
        };
        cross(0);
    });

    std::sort(out.begin(), out.end(), profile_less);
    return out;
}

std::vector<ClassMultiset> enumerate_atom_class_sequences(const PrimeSpectrumConfig& cfg) {
    const auto& g = cfg.group();
    if (!g.is_finite()) throw unsupported_error("enumerate_atom_class_sequences: group is infinite");
    auto cap = static_cast<std::int64_t>(davenport_cap(g));

    std::vector<GroupElement> classes;
    for (std::uint32_t s = 0; s < cfg.slot_count(); ++s) classes.push_back(cfg.slot(s).cls);
    std::vector<std::int64_t> caps(classes.size(), cap);

    std::vector<ClassMultiset> out;
    enumerate_minimal_vectors(g, classes, caps, cap, [&](const std::vector<std::int64_t>& mults) {
        ClassMultiset m;
        for (std::uint32_t s = 0; s < mults.size(); ++s) {
            if (mults[s] > 0) m.slot_mults.emplace_back(s, mults[s]);
        }
        out.push_back(std::move(m));
    });
    return out;
}

Rational class_multiset_L(const PrimeSpectrumConfig& cfg, const ClassMultiset& m) {
    Rational sum;
    for (const auto& [slot, mult] : m.slot_mults) {
        auto ord = cfg.group().element_order(cfg.slot(slot).cls);
        if (!ord) throw usage_error("L is undefined: class has infinite order");
        sum += Rational(BigInt(mult), BigInt(*ord));
    }
    return sum;
}

std::vector<FactorizationMultiset> factorizations(const PrimeSpectrumConfig& cfg, const DivisorProfile& z) {
    if (z.empty()) throw usage_error("factorizations: profile is empty");
    if (!is_principal(cfg, z)) {
        throw usage_error("factorizations: z is not principal, no factorization exists");
    }
    std::vector<DivisorProfile> atoms = atoms_dividing(cfg, z);

    std::vector<FactorizationMultiset> out;
    std::vector<DivisorProfile> chosen;
    std::function<void(const DivisorProfile&, std::size_t)> rec = [&](const DivisorProfile& rest,
                                                                      std::size_t min_idx) {
        if (rest.empty()) {
            out.push_back({chosen});
            return;
        }
        for (std::size_t i = min_idx; i < atoms.size(); ++i) {
            if (!divides(cfg, atoms[i], rest)) continue;
            chosen.push_back(atoms[i]);
            rec(residual(cfg, rest, atoms[i]), i);
            chosen.pop_back();
        }
    };
    rec(z, 0);
    return out;
}

std::set<std::size_t> length_set(const PrimeSpectrumConfig& cfg, const DivisorProfile& z) {
    std::set<std::size_t> out;
    for (const auto& f : factorizations(cfg, z)) out.insert(f.length());
    return out;
}

const char* to_string(HfdStatus s) {
    switch (s) {
        case HfdStatus::No: return "no";
        case HfdStatus::Yes: return "yes";
        case HfdStatus::Undecided: return "undecided";
    }
    return "?";
}

HfdStatus is_hfd(const PrimeSpectrumConfig& cfg) {
    const auto& g = cfg.group();
    if (cfg.is_trivial()) return HfdStatus::Yes;

    for (const auto& s : cfg.slots()) {
        for (const auto& c : s.cls.free) {
            if (c != 0) return HfdStatus::Undecided;
        }
    }

    // Every class lives in the torsion part; enumerate there.
    CyclicDecomposition torsion(0, g.torsion_orders());
    BigInt torder = torsion.torsion_order();
    if (torder > 4096) {
        throw unsupported_error("is_hfd: torsion part too large to enumerate (" + torder.str() + ")");
    }
    std::vector<GroupElement> classes;
    for (const auto& s : cfg.slots()) {
        GroupElement t;
        t.torsion = s.cls.torsion;
        classes.push_back(std::move(t));
    }
    auto cap = static_cast<std::int64_t>(torsion.element_count());
    std::vector<std::int64_t> caps(classes.size(), cap);

    bool all_one = true;
    enumerate_minimal_vectors(torsion, classes, caps, cap, [&](const std::vector<std::int64_t>& mults) {
        Rational L;
        for (std::size_t i = 0; i < mults.size(); ++i) {
            if (mults[i] == 0) continue;
            auto ord = torsion.element_order(classes[i]);
            L += Rational(BigInt(mults[i]), BigInt(*ord));
        }
        if (L != Rational(1)) all_one = false;
    });
    return all_one ? HfdStatus::Yes : HfdStatus::No;
}

} // namespace idpd

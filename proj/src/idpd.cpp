#include "idpd/idpd.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace idpd {

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::CounterexampleFound: return "counterexample-found";
        case VerdictStatus::NoCounterexampleWithinBounds: return "no-counterexample-within-bounds";
        case VerdictStatus::CertifiedIdpd: return "certified-idpd";
        case VerdictStatus::CertifiedNotIdpd: return "certified-not-idpd";
    }
    return "?";
}

std::optional<std::pair<DivisorProfile, DivisorProfile>> pair_witness(const PrimeSpectrumConfig& cfg,
                                                                      const DivisorProfile& z,
                                                                      const DivisorProfile& p,
                                                                      const DivisorProfile& q) {
    if (z.empty() || !is_principal(cfg, z)) throw usage_error("pair_witness: z must be principal and nonempty");
    if (p == q) throw usage_error("pair_witness: p and q must be distinct");
    if (!is_atom(cfg, p) || !is_atom(cfg, q)) throw usage_error("pair_witness: p and q must be atoms");
    if (!divides(cfg, p, z) || !divides(cfg, q, z)) throw usage_error("pair_witness: p and q must divide z");

    DivisorProfile rest = residual(cfg, z, p);
    if (rest.empty()) return std::nullopt; // z = p is an atom; no room for p'
    for (const DivisorProfile& p_prime : atoms_dividing(cfg, rest)) {
        DivisorProfile pp = product(cfg, p, p_prime);
        if (!divides(cfg, q, pp)) continue;
        DivisorProfile q_prime = residual(cfg, pp, q);
        if (q_prime.empty()) continue;
        if (is_atom(cfg, q_prime)) return std::make_pair(p_prime, q_prime);
    }
    return std::nullopt;
}

bool verify_pair(const PrimeSpectrumConfig& cfg, const DivisorProfile& z, const DivisorProfile& p,
                 const DivisorProfile& q, const DivisorProfile& p_prime, const DivisorProfile& q_prime) {
    for (const DivisorProfile* a : {&z, &p, &q, &p_prime, &q_prime}) validate_profile(cfg, *a);
    if (p == q) return false;
    for (const DivisorProfile* a : {&p, &q, &p_prime, &q_prime}) {
        if (a->empty() || !is_atom(cfg, *a)) return false;
    }
    if (!divides(cfg, p, z) || !divides(cfg, q, z)) return false;
    DivisorProfile pp = product(cfg, p, p_prime);
    if (pp != product(cfg, q, q_prime)) return false; // associates are equal profiles
    return divides(cfg, pp, z);
}

std::optional<std::pair<DivisorProfile, DivisorProfile>> check_element(const PrimeSpectrumConfig& cfg,
                                                                       const DivisorProfile& z) {
    if (z.empty() || !is_principal(cfg, z)) throw usage_error("check_element: z must be principal and nonempty");
    std::vector<DivisorProfile> atoms = atoms_dividing(cfg, z);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
            if (!pair_witness(cfg, z, atoms[i], atoms[j])) {
                return std::make_pair(atoms[i], atoms[j]);
            }
        }
    }
    return std::nullopt;
}

std::vector<DivisorProfile> enumerate_principal_profiles(const PrimeSpectrumConfig& cfg,
                                                         const SearchBounds& bounds) {
    if (!cfg.group().is_finite()) throw unsupported_error("profile enumeration needs a finite group");
    if (bounds.max_total_multiplicity < 1 || bounds.prime_cap < 1 || bounds.max_support < 1) {
        throw usage_error("search bounds must be positive");
    }

    // Usable ordinals per slot: the declared count for bounded slots, the
    // prime cap for unbounded ones, never more than the multiplicity budget.
    std::vector<std::int64_t> usable(cfg.slot_count());
    for (std::uint32_t s = 0; s < cfg.slot_count(); ++s) {
        const auto& slot = cfg.slot(s);
        std::int64_t u = slot.count ? static_cast<std::int64_t>(*slot.count)
                                    : static_cast<std::int64_t>(bounds.prime_cap);
        usable[s] = std::min<std::int64_t>(u, bounds.max_total_multiplicity);
    }

    std::vector<DivisorProfile> out;
    std::vector<ProfileEntry> entries;
    const auto& g = cfg.group();

    // Per slot, choose a non-increasing exponent sequence over ordinals
    // 0..u-1 (primes within a slot are interchangeable; this quotients the
    // symmetry). Tracks multiplicity, support and the running class sum.
    std::function<void(std::uint32_t, std::int64_t, std::int64_t, const GroupElement&)> per_slot =
        [&](std::uint32_t s, std::int64_t mult_left, std::int64_t support_left, const GroupElement& sum) {
            if (s == cfg.slot_count()) {
                if (!entries.empty() && g.is_zero(sum)) out.push_back(DivisorProfile::from_entries(entries));
                return;
            }
            std::function<void(std::uint32_t, std::int64_t, std::int64_t, std::int64_t, const GroupElement&)>
                per_ordinal = [&](std::uint32_t o, std::int64_t prev_exp, std::int64_t mleft,
                                  std::int64_t sleft, const GroupElement& acc) {
                    // stop using ordinals in this slot; move to the next slot
                    per_slot(s + 1, mleft, sleft, acc);
                    if (o >= usable[s] || sleft == 0) return;
                    for (std::int64_t e = std::min(prev_exp, mleft); e >= 1; --e) {
                        entries.push_back({{s, o}, e});
                        per_ordinal(o + 1, e, mleft - e, sleft - 1,
                                    g.add(acc, g.scale(cfg.slot(s).cls, e)));
                        entries.pop_back();
                    }
                };
            per_ordinal(0, bounds.max_total_multiplicity, mult_left, support_left, sum);
        };

    per_slot(0, bounds.max_total_multiplicity, bounds.max_support, g.zero());

    std::sort(out.begin(), out.end(), profile_size_less);
    return out;
}

namespace {

DivisorProfile translate_profile(const std::vector<std::uint32_t>& slot_map, const DivisorProfile& p) {
    std::vector<ProfileEntry> entries;
    for (const auto& e : p.entries()) {
        entries.push_back({{slot_map[e.prime.slot], e.prime.ordinal}, e.exp});
    }
    return DivisorProfile::from_entries(std::move(entries));
}

} // namespace

Verdict search_counterexample(const PrimeSpectrumConfig& cfg, const SearchBounds& bounds,
                              unsigned threads) {
    if (!cfg.group().is_finite()) throw unsupported_error("search_counterexample: group is infinite");
    auto [stripped, slot_map] = strip_principal_classes_mapped(cfg);

    Verdict v;
    v.bounds = bounds;
    if (stripped.is_trivial()) {
        v.status = VerdictStatus::NoCounterexampleWithinBounds;
        v.detail = "no non-principal prime classes after stripping; every element factors through primes";
        return v;
    }

    std::vector<DivisorProfile> zs = enumerate_principal_profiles(stripped, bounds);

    const std::size_t n = zs.size();
    std::atomic<std::size_t> best{n};
    std::atomic<std::size_t> next_block{0};
    constexpr std::size_t kBlock = 32;

    auto worker = [&]() {
        for (;;) {
            std::size_t b = next_block.fetch_add(1);
            std::size_t lo = b * kBlock;
            if (lo >= n || lo >= best.load()) return;
            std::size_t hi = std::min(lo + kBlock, n);
            for (std::size_t i = lo; i < hi && i < best.load(); ++i) {
                if (check_element(stripped, zs[i])) {
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        }
    };

    unsigned nthreads = std::max(1u, threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::size_t found = best.load();
    if (found < n) {
        auto pair = check_element(stripped, zs[found]);
        v.status = VerdictStatus::CounterexampleFound;
        v.counterexample = PairCounterexample{translate_profile(slot_map, zs[found]),
                                              translate_profile(slot_map, pair->first),
                                              translate_profile(slot_map, pair->second)};
        return v;
    }

    v.status = VerdictStatus::NoCounterexampleWithinBounds;
    // Attach a positive spot-check sample: the first element with at least
    // two atom divisors, together with its first pair's witness.
    constexpr std::size_t kSampleScan = 200;
    for (std::size_t i = 0; i < std::min(n, kSampleScan); ++i) {
        std::vector<DivisorProfile> atoms = atoms_dividing(stripped, zs[i]);
        if (atoms.size() < 2) continue;
        auto w = pair_witness(stripped, zs[i], atoms[0], atoms[1]);
        if (!w) break; // should have been a counterexample; stay silent here
        v.sample = PairSample{translate_profile(slot_map, zs[i]), translate_profile(slot_map, atoms[0]),
                              translate_profile(slot_map, atoms[1]), translate_profile(slot_map, w->first),
                              translate_profile(slot_map, w->second)};
        break;
    }
    return v;
}

} // namespace idpd

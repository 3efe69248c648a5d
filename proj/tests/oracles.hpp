#pragma once

// Test-side oracles, deliberately naive and independent of the library's
// fast paths: exponential sub-profile scans, brute-force sub-multiset
// minimality, and direct feasibility search for the fill solvers.

#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "idpd/atoms.hpp"
#include "idpd/divisor.hpp"
#include "idpd/fill.hpp"

namespace idpd::testing {

inline std::uint64_t test_seed() {
    if (const char* s = std::getenv("IDPD_TEST_SEED")) return std::strtoull(s, nullptr, 10);
    return 20250808ull;
}

// Enumerates every sub-profile (componentwise 0..exp per entry) of `a`.
inline void for_each_subprofile(const DivisorProfile& a,
                                const std::function<void(const DivisorProfile&)>& fn) {
    const auto& es = a.entries();
    std::vector<ProfileEntry> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == es.size()) {
            fn(DivisorProfile::from_entries(cur));
            return;
        }
        for (std::int64_t e = 0; e <= es[i].exp; ++e) {
            if (e > 0) cur.push_back({es[i].prime, e});
            rec(i + 1);
            if (e > 0) cur.pop_back();
        }
    };
    rec(0);
}

// Exponential-scan atom test: principal, nonempty, and no proper nonempty
// principal sub-profile.
inline bool naive_is_atom(const PrimeSpectrumConfig& cfg, const DivisorProfile& a) {
    if (a.empty() || !is_principal(cfg, a)) return false;
    bool minimal = true;
    for_each_subprofile(a, [&](const DivisorProfile& b) {
        if (b.empty() || b == a) return;
        if (is_principal(cfg, b)) minimal = false;
    });
    return minimal;
}

// Brute-force minimal zero-sum multiplicity vectors over `classes`:
// every vector with componentwise caps and total in [1, total_cap] whose
// class sum vanishes and which has no proper nonempty zero-sum sub-vector
// (checked by enumerating every sub-vector).
inline std::vector<std::vector<std::int64_t>> naive_minimal_zero_sum_vectors(
    const CyclicDecomposition& g, const std::vector<GroupElement>& classes,
    const std::vector<std::int64_t>& caps, std::int64_t total_cap) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> v(classes.size(), 0);

    auto sum_of = [&](const std::vector<std::int64_t>& m) {
        GroupElement s = g.zero();
        for (std::size_t i = 0; i < m.size(); ++i) s = g.add(s, g.scale(classes[i], m[i]));
        return s;
    };

    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i == classes.size()) {
            std::int64_t total = 0;
            for (auto m : v) total += m;
            if (total == 0 || !g.is_zero(sum_of(v))) return;
            // minimality: no proper nonempty zero-sum sub-vector
            std::vector<std::int64_t> sub(v.size(), 0);
            bool minimal = true;
            std::function<void(std::size_t)> subs = [&](std::size_t k) {
                if (!minimal) return;
                if (k == v.size()) {
                    std::int64_t st = 0;
                    for (auto m : sub) st += m;
                    if (st == 0 || sub == v) return;
                    if (g.is_zero(sum_of(sub))) minimal = false;
                    return;
                }
                for (std::int64_t m = 0; m <= v[k]; ++m) {
                    sub[k] = m;
                    subs(k + 1);
                }
                sub[k] = 0;
            };
            subs(0);
            if (minimal) out.push_back(v);
            return;
        }
        for (std::int64_t m = 0; m <= std::min(caps[i], left); ++m) {
            v[i] = m;
            rec(i + 1, left - m);
        }
        v[i] = 0;
    };
    rec(0, total_cap);
    return out;
}

// Brute-force pair-property check at (z, p, q): does any sub-profile p' of
// z/p that is a naive atom admit q' = p + p' - q, itself a naive atom?
inline bool naive_pair_witness_exists(const PrimeSpectrumConfig& cfg, const DivisorProfile& z,
                                      const DivisorProfile& p, const DivisorProfile& q) {
    DivisorProfile rest = residual(cfg, z, p);
    bool found = false;
    for_each_subprofile(rest, [&](const DivisorProfile& p_prime) {
        if (found || p_prime.empty() || !naive_is_atom(cfg, p_prime)) return;
        DivisorProfile pp = product(cfg, p, p_prime);
        if (!divides(cfg, q, pp)) return;
        DivisorProfile q_prime = residual(cfg, pp, q);
        if (!q_prime.empty() && naive_is_atom(cfg, q_prime)) found = true;
    });
    return found;
}

// Brute-force feasibility of a fill instance: some y <= c - M with
// sum(w * (M + y)) == target.
inline bool fill_feasible_bruteforce(const FillInstance& inst) {
    std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t t, std::int64_t have) {
        if (have > inst.target) return false;
        if (t == inst.size()) return have == inst.target;
        for (std::int64_t y = 0; y <= inst.c[t] - inst.M[t]; ++y) {
            if (rec(t + 1, have + inst.weights[t] * (inst.M[t] + y))) return true;
        }
        return false;
    };
    return rec(0, 0);
}

} // namespace idpd::testing

#include "idpd/fill.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace idpd {

namespace {

void validate_shapes(const FillInstance& inst) {
    if (inst.n < 1) throw fill_instance_error("fill: n must be positive");
    if (inst.target != 2 * inst.n) throw fill_instance_error("fill: target must equal 2n");
    if (inst.M.size() != inst.size() || inst.c.size() != inst.size()) {
        throw fill_instance_error("fill: weights, M and c must have equal length");
    }
    for (std::size_t t = 0; t < inst.size(); ++t) {
        if (inst.weights[t] < 1) throw fill_instance_error("fill: weights must be positive");
        if (inst.M[t] < 0 || inst.c[t] < 0) throw fill_instance_error("fill: M and c must be non-negative");
        if (inst.M[t] > inst.c[t]) {
            throw fill_instance_error("fill: M[" + std::to_string(t) + "] exceeds c[" + std::to_string(t) + "]");
        }
    }
}

std::int64_t weighted_sum(const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (std::size_t t = 0; t < w.size(); ++t) s += w[t] * v[t];
    return s;
}

} // namespace

std::vector<std::int64_t> fill_simple(const FillInstance& inst) {
    validate_shapes(inst);
    for (auto w : inst.weights) {
        if (w != 1) throw fill_instance_error("fill_simple: all weights must be 1");
    }
    std::int64_t sum_m = std::accumulate(inst.M.begin(), inst.M.end(), std::int64_t{0});
    std::int64_t sum_c = std::accumulate(inst.c.begin(), inst.c.end(), std::int64_t{0});
    if (sum_m > inst.target || inst.target > sum_c) {
        throw fill_instance_error("fill_simple: need sum(M) <= 2n <= sum(c)");
    }

    std::vector<std::int64_t> y(inst.size(), 0);
    std::int64_t deficit = inst.target - sum_m;
    for (std::size_t t = 0; t < inst.size() && deficit > 0; ++t) {
        std::int64_t take = std::min(deficit, inst.c[t] - inst.M[t]);
        y[t] = take;
        deficit -= take;
    }
    return y;
}

std::vector<std::int64_t> fill_weighted(const FillInstance& inst) {
    validate_shapes(inst);
    if (inst.size() == 0) throw fill_instance_error("fill_weighted: empty instance");

    std::set<std::int64_t> wset(inst.weights.begin(), inst.weights.end());
    std::int64_t prev = 0;
    for (auto w : wset) {
        if (inst.n % w != 0) {
            throw fill_instance_error("fill_weighted: weight " + std::to_string(w) + " does not divide n");
        }
        if (prev != 0 && w % prev != 0) {
            throw fill_instance_error("fill_weighted: weights " + std::to_string(prev) + " and " +
                                      std::to_string(w) + " are not comparable by divisibility");
        }
        prev = w;
    }

    std::int64_t sum_wm = weighted_sum(inst.weights, inst.M);
    std::int64_t sum_wc = weighted_sum(inst.weights, inst.c);
    if (sum_wm > inst.target) throw fill_instance_error("fill_weighted: sum(w*M) exceeds 2n");
    if (sum_wc < inst.target || sum_wc % inst.n != 0) {
        throw fill_instance_error("fill_weighted: need sum(w*c) = r*n with r >= 2");
    }

    std::vector<std::int64_t> cur = inst.M;
    std::int64_t deficit = inst.target - sum_wm;
    while (deficit > 0) {
        // least weight owning a slack coordinate
        std::int64_t s0 = 0;
        std::size_t pick = inst.size();
        for (std::size_t t = 0; t < inst.size(); ++t) {
            if (cur[t] < inst.c[t] && (pick == inst.size() || inst.weights[t] < s0)) {
                s0 = inst.weights[t];
                pick = t;
            }
        }
        if (pick == inst.size()) throw std::logic_error("fill_weighted: no slack left with positive deficit");
        if (deficit % s0 != 0 || deficit < s0) {
            throw std::logic_error("fill_weighted: claim violated: s0 = " + std::to_string(s0) +
                                   " does not divide deficit " + std::to_string(deficit));
        }
        // lowest-index slack coordinate of weight s0
        for (std::size_t t = 0; t < inst.size(); ++t) {
            if (inst.weights[t] == s0 && cur[t] < inst.c[t]) {
                ++cur[t];
                break;
            }
        }
        deficit -= s0;
    }

    std::vector<std::int64_t> f(inst.size());
    for (std::size_t t = 0; t < inst.size(); ++t) f[t] = cur[t] - inst.M[t];
    return f;
}

std::vector<std::int64_t> fill_prime_power(const FillInstance& inst) {
    validate_shapes(inst);
    if (inst.n == 1) {
        for (auto w : inst.weights) {
            if (w != 1) throw fill_instance_error("fill_prime_power: weights must be 1 when n = 1");
        }
        return fill_weighted(inst);
    }
    // n must be p^I; every weight a power of the same p dividing n.
    std::int64_t p = 2;
    while (inst.n % p != 0) ++p;
    std::int64_t m = inst.n;
    while (m % p == 0) m /= p;
    if (m != 1) throw fill_instance_error("fill_prime_power: n is not a prime power");
    for (auto w : inst.weights) {
        std::int64_t v = w;
        while (v % p == 0) v /= p;
        if (v != 1) {
            throw fill_instance_error("fill_prime_power: weight " + std::to_string(w) +
                                      " is not a power of " + std::to_string(p));
        }
        if (inst.n % w != 0) {
            throw fill_instance_error("fill_prime_power: weight " + std::to_string(w) + " exceeds n");
        }
    }
    return fill_weighted(inst);
}

} // namespace idpd

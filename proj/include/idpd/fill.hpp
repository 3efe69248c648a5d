#pragma once

#include <cstdint>
#include <vector>

#include "idpd/errors.hpp"

namespace idpd {

// Instance of the bounded fill solvers: coordinates carry weights, lower
// values M, upper values c, and the weighted sum must be raised to exactly
// `target` = 2n without exceeding c anywhere.
struct FillInstance {
    std::vector<std::int64_t> weights; // all 1 for the unit-weight solver
    std::vector<std::int64_t> M;
    std::vector<std::int64_t> c;
    std::int64_t target = 0; // always 2n
    std::int64_t n = 0;

    std::size_t size() const { return weights.size(); }
};

// Raised when an instance violates the documented preconditions.
struct fill_instance_error : usage_error {
    using usage_error::usage_error;
};

// Unit weights: returns y >= 0 with y <= c - M componentwise and
// sum(M) + sum(y) = 2n. Deterministic: always bumps the lowest-index slack
// coordinate. Requires sum(M) <= 2n <= sum(c).
std::vector<std::int64_t> fill_simple(const FillInstance& inst);

// Weighted version: weights divide n, the weight set is totally ordered by
// divisibility, sum(w*M) <= 2n <= r*n = sum(w*c) for some integer r >= 2.
// Returns f >= 0 with M + f <= c and sum(w*(M+f)) = 2n. Each step bumps a
// slack coordinate of the least slack weight s0; the preconditions force
// s0 | m and m >= s0 for the running deficit m, and this is asserted on
// every iteration (a violation throws std::logic_error).
std::vector<std::int64_t> fill_weighted(const FillInstance& inst);

// Prime-power specialization: n = p^I and weights are powers of p. Validates
// that shape, then delegates to fill_weighted (with n = 1 this degenerates to
// the unit-weight case).
std::vector<std::int64_t> fill_prime_power(const FillInstance& inst);

} // namespace idpd

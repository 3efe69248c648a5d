#pragma once

#include <cstdint>
#include <set>

#include "idpd/errors.hpp"

namespace idpd {

// The numerical semigroup <2,3> = {0, 2, 3, 4, ...}; exponents of the
// monomial fixture k[X^2, X^3].
inline bool in_semigroup_23(std::int64_t e) { return e == 0 || e >= 2; }

// Factorization lengths of X^e in k[X^2, X^3]: the numbers of parts over all
// ways of writing e as a sum of 2s and 3s. Requires e >= 2 in <2,3>.
inline std::set<std::int64_t> semigroup_length_set(std::int64_t e) {
    if (!in_semigroup_23(e)) throw usage_error("exponent " + std::to_string(e) + " is not in <2,3>");
    if (e < 2) throw usage_error("semigroup_length_set: exponent must be >= 2");
    std::set<std::int64_t> out;
    for (std::int64_t threes = 0; 3 * threes <= e; ++threes) {
        std::int64_t rest = e - 3 * threes;
        if (rest % 2 == 0) out.insert(threes + rest / 2);
    }
    return out;
}

} // namespace idpd

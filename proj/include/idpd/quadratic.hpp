#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "idpd/errors.hpp"

namespace idpd {

// Element a + b*sqrt(-d) of the order Z[sqrt(-d)], d squarefree >= 2.
// Units are {+1, -1}; canonical associate representatives have a > 0, or
// a = 0 and b > 0.
struct QuadInt {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t d = 3;

    bool operator==(const QuadInt&) const = default;
};

std::string to_string(const QuadInt& x);

std::int64_t quad_norm(const QuadInt& x); // a^2 + d*b^2, multiplicative

QuadInt quad_mul(const QuadInt& x, const QuadInt& y);
QuadInt quad_conj(const QuadInt& x);
QuadInt quad_neg(const QuadInt& x);

bool quad_is_unit(const QuadInt& x);
bool quad_is_zero(const QuadInt& x);

// Canonical representative of {x, -x}.
QuadInt quad_canonical(const QuadInt& x);
bool quad_associates(const QuadInt& x, const QuadInt& y);

// Exact division: y/x when x | y in Z[sqrt(-d)], else nullopt.
std::optional<QuadInt> quad_div(const QuadInt& y, const QuadInt& x);

// Irreducibility by divisor scan: no factorization into two non-units.
// x must be nonzero and not a unit.
bool quad_is_atom(const QuadInt& x);

// All atoms dividing x, one canonical representative per associate class,
// ordered by (norm, a, b).
std::vector<QuadInt> quad_atoms_dividing(const QuadInt& x);

// Factorization lengths of x into atoms (up to associates and order).
std::set<std::size_t> quad_length_set(const QuadInt& x);

// One verification of the pair property at (z, p, q) with given p', q'.
bool quad_verify_pair(const QuadInt& z, const QuadInt& p, const QuadInt& q, const QuadInt& p_prime,
                      const QuadInt& q_prime);

struct QuadPairFailure {
    QuadInt z, p, q;
};

struct QuadScanResult {
    bool counterexample_found = false;
    std::optional<QuadPairFailure> failure;
    std::int64_t norm_bound = 0;
    std::uint64_t elements_checked = 0;
    std::uint64_t pairs_checked = 0;
};

// Bounded pair-property scan over Z[sqrt(-d)], d in {3, 5}: every z with
// norm <= norm_bound and every non-associate atom pair (p, q) dividing z is
// checked for atoms p', q' with pp' ~ qq' | z (associates = equality up to
// sign). p' only needs to run over atoms dividing z, since pp' | z already
// forces p' | z.
QuadScanResult quad_idpd_scan(std::int64_t d, std::int64_t norm_bound);

} // namespace idpd

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idpd/rational.hpp"

namespace idpd {

// Element x + y*sqrt(m) of K = Q(sqrt(m)), m a non-square integer != 0, 1.
// Exact rational coordinates.
struct KElem {
    Rational x;
    Rational y;

    bool operator==(const KElem&) const = default;
};

// The quadratic extension K = Q(sqrt(m)) over F = Q.
class QuadExtField {
public:
    explicit QuadExtField(std::int64_t radicand);

    std::int64_t radicand() const { return m_; }

    KElem add(const KElem& a, const KElem& b) const;
    KElem mul(const KElem& a, const KElem& b) const;
    KElem div(const KElem& a, const KElem& b) const;
    bool is_zero(const KElem& a) const { return a.x.is_zero() && a.y.is_zero(); }
    // Lies in the base field F = Q.
    bool in_base_field(const KElem& a) const { return a.y.is_zero(); }

    std::string str(const KElem& a) const;

private:
    std::int64_t m_;
};

// Monomial c*X^deg of the subring D = F + X K[X], degree >= 1 and c in K^x,
// or degree 0 with c in F (those are the units when nonzero).
struct Monomial {
    KElem coeff;
    std::int64_t degree = 0;
};

// Outcome of the monomial-fragment pair-property verification.
struct MonomialCaseResult {
    std::int64_t degree = 0;
    std::string z, p, q, p_prime, q_prime; // rendered witnesses; empty when vacuous
    bool vacuous = false;                  // degree 1: all atom divisors associate
    bool ok = false;
    std::string note;
};

struct MonomialReport {
    bool all_ok = false;
    std::int64_t radicand = 0;
    std::int64_t max_degree = 0;
    std::vector<MonomialCaseResult> cases;
};

// Verifies the pair property on the monomial fragment of D = F + X K[X] with
// K = F(sqrt(m)), F = Q: for z = c X^deg with deg in [1, max_degree] and c, a,
// b drawn from a fixed test set of K-elements, non-associate atom divisors aX
// and bX of z admit p' = (c/a)X, q' = (c/b)X with pp' = qq' = cX^2 | z exactly
// when deg >= 2; for deg = 1 the condition is vacuous since all atom divisors
// of cX are associate in D.
MonomialReport monomial_idpd_check(const std::string& base_field, const std::string& ext_field,
                                   std::int64_t max_degree);

// Parses "Q" and "Q(sqrt m)"-style descriptors; throws config_error otherwise.
std::int64_t parse_quad_ext_descriptor(const std::string& base_field, const std::string& ext_field);

} // namespace idpd

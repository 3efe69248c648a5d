#include "idpd/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace idpd {

namespace {

void check_same_ring(const QuadInt& x, const QuadInt& y) {
    if (x.d != y.d) throw structural_error("quadratic elements from different rings");
}

void check_d(const QuadInt& x) {
    if (x.d < 2) throw structural_error("Z[sqrt(-d)] requires d >= 2");
}

std::int64_t isqrt(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// All canonical-representative elements of the given norm.
std::vector<QuadInt> elements_of_norm(std::int64_t d, std::int64_t norm) {
    std::vector<QuadInt> out;
    for (std::int64_t b = 0; b * b * d <= norm; ++b) {
        std::int64_t rest = norm - b * b * d;
        std::int64_t a = isqrt(rest);
        if (a * a != rest) continue;
        if (a == 0 && b == 0 && norm != 0) continue;
        // canonical: a > 0, or a = 0 and b > 0; when a > 0 both signs of b
        // give non-associate elements.
        if (a > 0) {
            out.push_back({a, b, d});
            if (b > 0) out.push_back({a, -b, d});
        } else if (b > 0) {
            out.push_back({0, b, d});
        } else if (norm == 0) {
            out.push_back({0, 0, d});
        }
    }
    return out;
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        out.push_back(i);
        if (i != n / i) out.push_back(n / i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::string to_string(const QuadInt& x) {
    std::ostringstream os;
    if (x.b == 0) {
        os << x.a;
    } else {
        if (x.a != 0) os << x.a << (x.b > 0 ? "+" : "-");
        else if (x.b < 0) os << "-";
        std::int64_t ab = x.b < 0 ? -x.b : x.b;
        if (ab != 1) os << ab;
        os << "sqrt(-" << x.d << ")";
    }
    return os.str();
}

std::int64_t quad_norm(const QuadInt& x) {
    check_d(x);
    return x.a * x.a + x.d * x.b * x.b;
}

QuadInt quad_mul(const QuadInt& x, const QuadInt& y) {
    check_same_ring(x, y);
    return {x.a * y.a - x.d * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
}

QuadInt quad_conj(const QuadInt& x) { return {x.a, -x.b, x.d}; }
QuadInt quad_neg(const QuadInt& x) { return {-x.a, -x.b, x.d}; }

bool quad_is_unit(const QuadInt& x) { return quad_norm(x) == 1; }
bool quad_is_zero(const QuadInt& x) { return x.a == 0 && x.b == 0; }

QuadInt quad_canonical(const QuadInt& x) {
    if (x.a > 0 || (x.a == 0 && x.b > 0)) return x;
    return quad_neg(x);
}

bool quad_associates(const QuadInt& x, const QuadInt& y) {
    check_same_ring(x, y);
    return x == y || x == quad_neg(y);
}

std::optional<QuadInt> quad_div(const QuadInt& y, const QuadInt& x) {
    check_same_ring(x, y);
    std::int64_t nx = quad_norm(x);
    if (nx == 0) throw usage_error("quad_div: division by zero");
    QuadInt num = quad_mul(y, quad_conj(x)); // y * conj(x) = (y/x) * N(x)
    if (num.a % nx != 0 || num.b % nx != 0) return std::nullopt;
    return QuadInt{num.a / nx, num.b / nx, x.d};
}

bool quad_is_atom(const QuadInt& x) {
    check_d(x);
    if (quad_is_zero(x) || quad_is_unit(x)) throw usage_error("quad_is_atom: x must be a non-zero non-unit");
    std::int64_t n = quad_norm(x);
    for (std::int64_t m : divisors_of(n)) {
        if (m == 1 || m == n) continue;
        for (const QuadInt& y : elements_of_norm(x.d, m)) {
            if (quad_div(x, y)) return false; // proper factor: norms both in (1, n)
        }
    }
    return true;
}

std::vector<QuadInt> quad_atoms_dividing(const QuadInt& x) {
    check_d(x);
    if (quad_is_zero(x) || quad_is_unit(x)) {
        throw usage_error("quad_atoms_dividing: x must be a non-zero non-unit");
    }
    std::int64_t n = quad_norm(x);
    std::vector<QuadInt> out;
    for (std::int64_t m : divisors_of(n)) {
        if (m == 1) continue;
        for (const QuadInt& y : elements_of_norm(x.d, m)) {
            if (quad_div(x, y) && quad_is_atom(y)) out.push_back(y);
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadInt& p, const QuadInt& q) {
        auto np = quad_norm(p), nq = quad_norm(q);
        if (np != nq) return np < nq;
        if (p.a != q.a) return p.a < q.a;
        return p.b < q.b;
    });
    return out;
}

std::set<std::size_t> quad_length_set(const QuadInt& x) {
    check_d(x);
    if (quad_is_zero(x) || quad_is_unit(x)) {
        throw usage_error("quad_length_set: x must be a non-zero non-unit");
    }
    // memoized over canonical representatives
    std::map<std::pair<std::int64_t, std::int64_t>, std::set<std::size_t>> memo;
    std::function<std::set<std::size_t>(const QuadInt&)> lengths = [&](const QuadInt& z) {
        QuadInt c = quad_canonical(z);
        auto key = std::make_pair(c.a, c.b);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::set<std::size_t> out;
        for (const QuadInt& p : quad_atoms_dividing(c)) {
            QuadInt rest = *quad_div(c, p);
            if (quad_is_unit(rest)) {
                out.insert(1);
            } else {
                for (auto l : lengths(rest)) out.insert(l + 1);
            }
        }
        memo[key] = out;
        return out;
    };
    return lengths(x);
}

bool quad_verify_pair(const QuadInt& z, const QuadInt& p, const QuadInt& q, const QuadInt& p_prime,
                      const QuadInt& q_prime) {
    for (const QuadInt* e : {&p, &q, &p_prime, &q_prime}) {
        if (quad_is_zero(*e) || quad_is_unit(*e) || !quad_is_atom(*e)) return false;
    }
    if (quad_associates(p, q)) return false;
    if (!quad_div(z, p) || !quad_div(z, q)) return false;
    QuadInt pp = quad_mul(p, p_prime);
    QuadInt qq = quad_mul(q, q_prime);
    if (!quad_associates(pp, qq)) return false;
    return quad_div(z, pp).has_value();
}

QuadScanResult quad_idpd_scan(std::int64_t d, std::int64_t norm_bound) {
    if (d != 3 && d != 5) throw unsupported_error("quad_idpd_scan: only d = 3 and d = 5 are supported");
    if (norm_bound < 2) throw usage_error("quad_idpd_scan: norm bound must be >= 2");

    QuadScanResult res;
    res.norm_bound = norm_bound;

    // atom-ness cache over canonical representatives
    std::map<std::pair<std::int64_t, std::int64_t>, bool> atom_cache;
    auto cached_is_atom = [&](const QuadInt& x) {
        QuadInt c = quad_canonical(x);
        auto key = std::make_pair(c.a, c.b);
        auto it = atom_cache.find(key);
        if (it != atom_cache.end()) return it->second;
        bool v = quad_is_atom(c);
        atom_cache[key] = v;
        return v;
    };

    for (std::int64_t nz = 2; nz <= norm_bound; ++nz) {
        for (const QuadInt& z : elements_of_norm(d, nz)) {
            ++res.elements_checked;
            std::vector<QuadInt> atoms = quad_atoms_dividing(z);
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                for (std::size_t j = i + 1; j < atoms.size(); ++j) {
                    const QuadInt& p = atoms[i];
                    const QuadInt& q = atoms[j];
                    ++res.pairs_checked;
                    bool ok = false;
                    // pp' | z forces p' | z, so atoms dividing z are enough.
                    for (const QuadInt& p_prime : atoms) {
                        QuadInt pp = quad_mul(p, p_prime);
                        if (!quad_div(z, pp)) continue;
                        auto q_prime = quad_div(pp, q);
                        if (!q_prime || quad_is_unit(*q_prime)) continue;
                        if (cached_is_atom(*q_prime)) {
                            ok = true;
                            break;
                        }
                    }
                    if (!ok) {
                        res.counterexample_found = true;
                        res.failure = QuadPairFailure{z, p, q};
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

} // namespace idpd

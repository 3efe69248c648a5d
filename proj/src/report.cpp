#include "idpd/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "idpd/config_io.hpp"
#include "idpd/monomial.hpp"
#include "idpd/quadratic.hpp"
#include "idpd/semigroup.hpp"
#include "idpd/version.hpp"

namespace idpd {

using nlohmann::json;

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json finalize(json body, const std::string& command, const Timer& timer, unsigned threads) {
    json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = command;
    for (auto& [k, v] : body.items()) doc[k] = v;
    doc["meta"] = {{"tool_version", kToolVersion}, {"elapsed_ms", timer.elapsed_ms()}, {"threads", threads}};
    return doc;
}

json certificate_to_json(const Certificate& c) {
    return {{"name", to_string(c.name)},
            {"holds", c.holds},
            {"detail", c.detail},
            {"prerequisites", c.prerequisites}};
}

json quad_to_json(const QuadInt& x) {
    return {{"a", x.a}, {"b", x.b}, {"display", to_string(x)}};
}

QuadInt quad_from_json(const json& j, std::int64_t d) {
    return {j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>(), d};
}

json class_multiset_to_json(const PrimeSpectrumConfig& cfg, const ClassMultiset& m) {
    json classes = json::array();
    std::string display;
    for (const auto& [slot, mult] : m.slot_mults) {
        json cls = json::array();
        const auto& e = cfg.slot(slot).cls;
        for (const auto& c : e.free) cls.push_back(c.convert_to<std::int64_t>());
        for (auto c : e.torsion) cls.push_back(c);
        classes.push_back({{"class", cls}, {"mult", mult}});
        if (!display.empty()) display += " ";
        display += to_string(e) + "x" + std::to_string(mult);
    }
    Rational L = class_multiset_L(cfg, m);
    return {{"classes", classes}, {"total", m.total()}, {"L", L.str()}, {"display", display}};
}

json group_to_json(const CyclicDecomposition& g) {
    json torsion = json::array();
    for (auto n : g.torsion_orders()) torsion.push_back(n);
    return {{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

// All subsets of nonzero classes that generate the group. For cyclic groups
// the subsets are canonicalized under multiplication by units and
// deduplicated. Output is deterministic: sorted by size, then lexicographic.
std::vector<std::vector<GroupElement>> faithful_class_subsets(const CyclicDecomposition& g) {
    std::uint64_t n = g.element_count();
    std::vector<GroupElement> nonzero;
    for (std::uint64_t i = 1; i < n; ++i) nonzero.push_back(g.element_at(i));

    bool cyclic = g.is_cyclic();
    std::set<std::vector<std::int64_t>> seen_canonical;
    std::vector<std::vector<GroupElement>> out;

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nonzero.size()); ++mask) {
        std::vector<GroupElement> subset;
        for (std::size_t i = 0; i < nonzero.size(); ++i) {
            if (mask & (std::uint64_t{1} << i)) subset.push_back(nonzero[i]);
        }
        // faithfulness: the subset must generate the whole group
        std::vector<char> reach(n, 0);
        std::vector<std::uint64_t> stack{0};
        reach[0] = 1;
        std::uint64_t count = 1;
        while (!stack.empty()) {
            GroupElement cur = g.element_at(stack.back());
            stack.pop_back();
            for (const auto& s : subset) {
                auto idx = g.index_of(g.add(cur, s));
                if (!reach[idx]) {
                    reach[idx] = 1;
                    ++count;
                    stack.push_back(idx);
                }
            }
        }
        if (count != n) continue;
        if (cyclic) {
            std::vector<std::int64_t> residues;
            for (const auto& s : subset) residues.push_back(s.torsion.empty() ? 0 : s.torsion[0]);
            auto canon = canonical_cyclic_class_subset(g.cyclic_order(), residues);
            if (!seen_canonical.insert(canon).second) continue;
            // store the canonical representative itself
            std::vector<GroupElement> rep;
            for (auto r : canon) rep.push_back(g.element({r}));
            out.push_back(std::move(rep));
        } else {
            out.push_back(std::move(subset));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = compare(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

} // namespace

json bounds_to_json(const SearchBounds& b) {
    return {{"max_total_multiplicity", b.max_total_multiplicity},
            {"prime_cap", b.prime_cap},
            {"max_support", b.max_support}};
}

SearchBounds bounds_from_json(const json& j) {
    SearchBounds b;
    b.max_total_multiplicity = j.at("max_total_multiplicity").get<std::int64_t>();
    b.prime_cap = j.at("prime_cap").get<std::uint32_t>();
    b.max_support = j.at("max_support").get<std::uint32_t>();
    return b;
}

json verdict_to_json(const Verdict& v) {
    json out;
    out["status"] = to_string(v.status);
    out["detail"] = v.detail;
    out["certificates"] = v.certificates;
    out["bounds"] = v.bounds ? bounds_to_json(*v.bounds) : json(nullptr);
    if (v.counterexample) {
        out["counterexample"] = {{"z", profile_to_json(v.counterexample->z)},
                                 {"p", profile_to_json(v.counterexample->p)},
                                 {"q", profile_to_json(v.counterexample->q)}};
    } else {
        out["counterexample"] = nullptr;
    }
    if (v.sample) {
        out["sample"] = {{"z", profile_to_json(v.sample->z)},
                         {"p", profile_to_json(v.sample->p)},
                         {"q", profile_to_json(v.sample->q)},
                         {"p_prime", profile_to_json(v.sample->p_prime)},
                         {"q_prime", profile_to_json(v.sample->q_prime)}};
    } else {
        out["sample"] = nullptr;
    }
    return out;
}

json make_atoms_report(const PrimeSpectrumConfig& cfg) {
    Timer t;
    json body;
    body["config"] = config_to_json(cfg);
    auto seqs = enumerate_atom_class_sequences(cfg);
    std::sort(seqs.begin(), seqs.end(), [](const ClassMultiset& a, const ClassMultiset& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.slot_mults < b.slot_mults;
    });
    json atoms = json::array();
    bool any_violation = false;
    for (const auto& m : seqs) {
        json entry = class_multiset_to_json(cfg, m);
        bool violates = class_multiset_L(cfg, m) != Rational(1);
        entry["hfd_violating"] = violates;
        any_violation = any_violation || violates;
        atoms.push_back(std::move(entry));
    }
    body["atom_class_sequences"] = atoms;
    body["count"] = atoms.size();
    body["any_hfd_violation"] = any_violation;
    return finalize(std::move(body), "atoms", t, 1);
}

json make_hfd_report(const PrimeSpectrumConfig& cfg) {
    Timer t;
    json body;
    body["config"] = config_to_json(cfg);
    body["hfd"] = to_string(is_hfd(cfg));
    return finalize(std::move(body), "hfd", t, 1);
}

json make_idpd_report(const PrimeSpectrumConfig& cfg, const SearchBounds& bounds, unsigned threads) {
    Timer t;
    json body;
    body["config"] = config_to_json(cfg);
    IdpdDecision d = decide_idpd(cfg, bounds, threads);
    body["hfd"] = to_string(d.summary.hfd);
    json certs = json::array();
    for (const auto& c : d.summary.certificates) certs.push_back(certificate_to_json(c));
    body["certificates"] = certs;
    body["search"] = verdict_to_json(d.verdict);
    return finalize(std::move(body), "idpd", t, threads);
}

json make_case_analysis_report(const std::vector<std::int64_t>& torsion_orders, const SearchBounds& bounds,
                               unsigned threads) {
    Timer t;
    CyclicDecomposition g(0, torsion_orders);

    json body;
    body["group"] = group_to_json(g);
    body["bounds"] = bounds_to_json(bounds);
    body["canonicalized_up_to_automorphism"] = g.is_cyclic();
    body["exploratory"] = "absence of flagged configs within these bounds is not a proof";

    json cases = json::array();
    json flagged = json::array();
    for (const auto& subset : faithful_class_subsets(g)) {
        std::vector<SlotSpec> slots;
        json classes = json::array();
        std::string display;
        for (const auto& cls : subset) {
            slots.push_back({cls, std::nullopt});
            json cj = json::array();
            for (auto c : cls.torsion) cj.push_back(c);
            classes.push_back(cj);
            if (!display.empty()) display += ",";
            display += to_string(cls);
        }
        PrimeSpectrumConfig cfg(g, slots, display, true);
        json entry;
        entry["classes"] = classes;
        HfdStatus hfd = is_hfd(cfg);
        entry["hfd"] = to_string(hfd);
        if (hfd == HfdStatus::Yes) {
            IdpdDecision d = decide_idpd(cfg, bounds, threads);
            entry["status"] = to_string(d.verdict.status);
            entry["certificates"] = d.verdict.certificates;
            if (d.verdict.counterexample) {
                entry["counterexample"] = {{"z", profile_to_json(d.verdict.counterexample->z)},
                                           {"p", profile_to_json(d.verdict.counterexample->p)},
                                           {"q", profile_to_json(d.verdict.counterexample->q)}};
                flagged.push_back(classes);
            }
        } else {
            entry["status"] = "not-hfd";
        }
        cases.push_back(std::move(entry));
    }
    body["cases"] = cases;
    body["flagged_hfd_not_idpd"] = flagged;
    return finalize(std::move(body), "case-analysis", t, threads);
}

json make_quad_report(std::int64_t d, std::int64_t norm_bound) {
    Timer t;
    json body;
    body["ring"] = "Z[sqrt(-" + std::to_string(d) + ")]";
    body["d"] = d;

    QuadScanResult scan = quad_idpd_scan(d, norm_bound);
    json sj;
    sj["status"] = scan.counterexample_found ? "counterexample-found" : "no-counterexample-within-bounds";
    sj["norm_bound"] = scan.norm_bound;
    sj["elements_checked"] = scan.elements_checked;
    sj["pairs_checked"] = scan.pairs_checked;
    if (scan.failure) {
        sj["failure"] = {{"z", quad_to_json(scan.failure->z)},
                         {"p", quad_to_json(scan.failure->p)},
                         {"q", quad_to_json(scan.failure->q)}};
    } else {
        sj["failure"] = nullptr;
    }
    body["scan"] = sj;

    if (d == 3) {
        const QuadInt two{2, 0, 3}, plus{1, 1, 3}, minus{1, -1, 3};
        json relations = json::array();
        auto relation = [&](const std::string& lhs, const QuadInt& l, const std::string& rhs,
                            const QuadInt& r) {
            return json{{"lhs", lhs},
                        {"rhs", rhs},
                        {"lhs_value", quad_to_json(l)},
                        {"rhs_value", quad_to_json(r)},
                        {"equal", l == r},
                        {"associate", quad_associates(l, r)}};
        };
        relations.push_back(relation("2^2", quad_mul(two, two), "(1+s)(1-s)", quad_mul(plus, minus)));
        relations.push_back(
            relation("(1+s)^2", quad_mul(plus, plus), "-2(1-s)", quad_mul(quad_neg(two), minus)));
        relations.push_back(
            relation("(1-s)^2", quad_mul(minus, minus), "-2(1+s)", quad_mul(quad_neg(two), plus)));
        body["relations"] = relations;

        json replays = json::array();
        auto replay = [&](const std::string& label, const QuadInt& z, const QuadInt& p, const QuadInt& q,
                          const QuadInt& pp, const QuadInt& qp) {
            return json{{"case", label},
                        {"z", quad_to_json(z)},
                        {"p", quad_to_json(p)},
                        {"q", quad_to_json(q)},
                        {"p_prime", quad_to_json(pp)},
                        {"q_prime", quad_to_json(qp)},
                        {"verified", quad_verify_pair(z, p, q, pp, qp)}};
        };
        replays.push_back(replay("z=4", {4, 0, 3}, two, plus, two, minus));
        replays.push_back(replay("z=(1+s)^2", quad_mul(plus, plus), two, plus, minus, plus));
        replays.push_back(replay("z=(1-s)^2", quad_mul(minus, minus), two, plus, plus, two));
        body["case_replays"] = replays;
    }

    if (d == 5) {
        json atoms6 = json::array();
        for (const auto& a : quad_atoms_dividing({6, 0, 5})) atoms6.push_back(quad_to_json(a));
        body["atoms_of_6"] = atoms6;

        // Cross-model agreement: Z[sqrt(-5)] has class group Z_2, so the
        // small-class-group certificate must certify the abstract model.
        CyclicDecomposition z2(0, {2});
        PrimeSpectrumConfig model(z2, {{z2.element({1}), std::nullopt}}, "Z[sqrt(-5)] class model", true);
        Verdict v = certify_all(model);
        body["class_group_certificate"] = verdict_to_json(v);
        body["agreement"] =
            (v.status == VerdictStatus::CertifiedIdpd) && !scan.counterexample_found;
    }

    return finalize(std::move(body), "quad", t, 1);
}

json make_semigroup_report() {
    Timer t;
    json body;
    body["ring"] = "k[X^2,X^3]";
    json table = json::array();
    for (std::int64_t e = 2; e <= 12; ++e) {
        json lens = json::array();
        for (auto l : semigroup_length_set(e)) lens.push_back(l);
        table.push_back({{"exponent", e}, {"lengths", lens}});
    }
    body["length_sets"] = table;
    auto l6 = semigroup_length_set(6);
    body["exponent_6_lengths"] = json::array();
    for (auto l : l6) body["exponent_6_lengths"].push_back(l);
    bool hfd = l6.size() == 1;
    body["hfd"] = hfd ? "yes" : "no";
    body["idpd"] = hfd ? "undecided" : "no"; // not HFD forces not IDPD
    body["note"] = "negative control: X^6 = (X^2)^3 = (X^3)^2 gives lengths {2,3}";
    return finalize(std::move(body), "semigroup", t, 1);
}

json make_monomial_report(std::int64_t radicand, std::int64_t max_degree) {
    Timer t;
    MonomialReport rep =
        monomial_idpd_check("Q", "Q(sqrt " + std::to_string(radicand) + ")", max_degree);
    json body;
    body["ring"] = "Q + X*Q(sqrt " + std::to_string(radicand) + ")[X], monomial fragment";
    body["radicand"] = rep.radicand;
    body["max_degree"] = rep.max_degree;
    body["all_ok"] = rep.all_ok;
    body["case_count"] = rep.cases.size();
    std::size_t vacuous = 0, verified = 0;
    json failures = json::array();
    for (const auto& c : rep.cases) {
        if (c.vacuous) ++vacuous;
        if (c.ok) ++verified;
        if (!c.ok) {
            failures.push_back({{"degree", c.degree}, {"z", c.z}, {"p", c.p}, {"q", c.q}, {"note", c.note}});
        }
    }
    body["vacuous_cases"] = vacuous;
    body["verified_cases"] = verified;
    body["failures"] = failures;

    // The abstract class-group bridge for Q + X R[X]: free rank 1 with
    // classes {+1, -1}, certified by the structural-sum shape.
    CyclicDecomposition z(1, {});
    PrimeSpectrumConfig bridge(z, {{z.element({1}), std::nullopt}, {z.element({-1}), std::nullopt}},
                               "D+M class model", true);
    Certificate c = certify_structural_sum(bridge);
    body["structural_bridge"] = certificate_to_json(c);
    return finalize(std::move(body), "monomial", t, 1);
}

std::vector<std::string> reproduce_suite_names() {
    return {"z6", "z4xz2", "z6-cases", "quad3", "quad5", "semigroup", "monomial"};
}

json make_reproduce_report(const std::string& name, unsigned threads) {
    if (name == "z6") {
        CyclicDecomposition g(0, {6});
        PrimeSpectrumConfig cfg(g,
                                {{g.element({1}), 2u}, {g.element({2}), 1u}, {g.element({3}), 2u}},
                                "z6-s123", true);
        SearchBounds b;
        b.max_total_multiplicity = 12;
        b.prime_cap = 2;
        b.max_support = 8;
        return make_idpd_report(cfg, b, threads);
    }
    if (name == "z4xz2") {
        CyclicDecomposition g(0, {4, 2});
        PrimeSpectrumConfig cfg(
            g, {{g.element({1, 0}), 1u}, {g.element({0, 1}), 1u}, {g.element({3, 1}), 1u}},
            "z4xz2", true);
        SearchBounds b;
        b.max_total_multiplicity = 12;
        b.prime_cap = 2;
        b.max_support = 8;
        return make_idpd_report(cfg, b, threads);
    }
    if (name == "z6-cases") {
        SearchBounds b;
        b.max_total_multiplicity = 12;
        b.prime_cap = 2;
        b.max_support = 8;
        return make_case_analysis_report({6}, b, threads);
    }
    if (name == "quad3") return make_quad_report(3, 400);
    if (name == "quad5") return make_quad_report(5, 400);
    if (name == "semigroup") return make_semigroup_report();
    if (name == "monomial") return make_monomial_report(2, 4);
    throw usage_error("unknown reproduce suite \"" + name + "\"");
}

json normalize_for_diff(json report) {
    report.erase("meta");
    return report;
}

namespace {

void diff_rec(const json& a, const json& b, const std::string& path, std::string& out) {
    if (!out.empty()) return;
    if (a.is_object() != b.is_object() || a.is_array() != b.is_array()) {
        out = path.empty() ? "/" : path;
        return;
    }
    if (a.is_object()) {
        for (auto& [k, v] : a.items()) {
            if (!b.contains(k)) {
                out = path + "/" + k;
                return;
            }
            diff_rec(v, b[k], path + "/" + k, out);
            if (!out.empty()) return;
        }
        for (auto& [k, v] : b.items()) {
            if (!a.contains(k)) {
                out = path + "/" + k;
                return;
            }
        }
        return;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) {
            out = path + " (length " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")";
            return;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            diff_rec(a[i], b[i], path + "/" + std::to_string(i), out);
            if (!out.empty()) return;
        }
        return;
    }
    if (a != b) out = path.empty() ? "/" : path;
}

} // namespace

std::string first_difference(const json& a, const json& b) {
    std::string out;
    diff_rec(a, b, "", out);
    return out;
}

std::string render_report_text(const json& report) {
    std::ostringstream os;
    const std::string cmd = report.value("command", "?");
    os << "idpd report (" << report.value("schema", "?") << ") — " << cmd << "\n";
    if (report.contains("config") && report["config"].contains("name")) {
        os << "config: " << report["config"]["name"].get<std::string>() << "\n";
    }
    if (report.contains("hfd")) os << "hfd: " << report["hfd"].get<std::string>() << "\n";
    if (report.contains("certificates")) {
        for (const auto& c : report["certificates"]) {
            if (c["holds"].get<bool>()) os << "certificate: " << c["name"].get<std::string>() << "\n";
        }
    }
    if (report.contains("search")) {
        const auto& s = report["search"];
        os << "verdict: " << s["status"].get<std::string>() << "\n";
        if (!s["counterexample"].is_null()) {
            os << "  z = " << s["counterexample"]["z"]["display"].get<std::string>() << "\n";
            os << "  p = " << s["counterexample"]["p"]["display"].get<std::string>() << "\n";
            os << "  q = " << s["counterexample"]["q"]["display"].get<std::string>() << "\n";
        }
        if (!s["bounds"].is_null()) {
            os << "  bounds: mult <= " << s["bounds"]["max_total_multiplicity"]
               << ", prime cap " << s["bounds"]["prime_cap"] << ", support <= "
               << s["bounds"]["max_support"] << "\n";
        }
    }
    if (report.contains("atom_class_sequences")) {
        os << "atom class sequences: " << report["count"] << "\n";
        for (const auto& a : report["atom_class_sequences"]) {
            os << "  " << a["display"].get<std::string>() << "  L=" << a["L"].get<std::string>();
            if (a["hfd_violating"].get<bool>()) os << "  [L != 1]";
            os << "\n";
        }
    }
    if (report.contains("flagged_hfd_not_idpd")) {
        os << "cases: " << report["cases"].size() << ", flagged HFD-not-IDPD: "
           << report["flagged_hfd_not_idpd"].size() << "\n";
        for (const auto& f : report["flagged_hfd_not_idpd"]) os << "  flagged: " << f.dump() << "\n";
    }
    if (report.contains("scan")) {
        os << "scan: " << report["scan"]["status"].get<std::string>() << " (norm <= "
           << report["scan"]["norm_bound"] << ", " << report["scan"]["elements_checked"]
           << " elements)" << "\n";
    }
    if (report.contains("exponent_6_lengths")) {
        os << "length set at X^6: " << report["exponent_6_lengths"].dump()
           << " — hfd: " << report["hfd"].get<std::string>() << ", idpd: "
           << report["idpd"].get<std::string>() << "\n";
    }
    if (report.contains("all_ok")) {
        os << "monomial fragment verification: " << (report["all_ok"].get<bool>() ? "ok" : "FAILED")
           << " (" << report["case_count"] << " cases)\n";
    }
    return os.str();
}

std::vector<std::string> verify_report(const json& report) {
    std::vector<std::string> failures;
    const std::string cmd = report.value("command", "");

    auto check_search = [&](const json& search, const PrimeSpectrumConfig& cfg) {
        if (!search.contains("counterexample") || search["counterexample"].is_null()) {
        } else {
            const auto& ce = search["counterexample"];
            DivisorProfile z = profile_from_json(ce["z"]);
            DivisorProfile p = profile_from_json(ce["p"]);
            DivisorProfile q = profile_from_json(ce["q"]);
            if (!is_principal(cfg, z)) failures.push_back("counterexample z is not principal");
            else if (!is_atom(cfg, p) || !is_atom(cfg, q)) failures.push_back("counterexample p/q not atoms");
            else if (!divides(cfg, p, z) || !divides(cfg, q, z)) {
                failures.push_back("counterexample p/q do not divide z");
            } else if (pair_witness(cfg, z, p, q)) {
                failures.push_back("counterexample does not re-fail: a witness exists");
            }
        }
        if (search.contains("sample") && !search["sample"].is_null()) {
            const auto& s = search["sample"];
            if (!verify_pair(cfg, profile_from_json(s["z"]), profile_from_json(s["p"]),
                             profile_from_json(s["q"]), profile_from_json(s["p_prime"]),
                             profile_from_json(s["q_prime"]))) {
                failures.push_back("sample witness does not re-verify");
            }
        }
    };

    if (cmd == "idpd") {
        PrimeSpectrumConfig cfg = parse_config(report.at("config"));
        check_search(report.at("search"), cfg);
    } else if (cmd == "case-analysis") {
        std::vector<std::int64_t> orders;
        for (const auto& n : report.at("group").at("torsion")) orders.push_back(n.get<std::int64_t>());
        CyclicDecomposition g(0, orders);
        for (const auto& entry : report.at("cases")) {
            if (!entry.contains("counterexample")) continue;
            std::vector<SlotSpec> slots;
            for (const auto& cj : entry.at("classes")) {
                std::vector<std::int64_t> coords;
                for (const auto& c : cj) coords.push_back(c.get<std::int64_t>());
                slots.push_back({g.element(coords), std::nullopt});
            }
            PrimeSpectrumConfig cfg(g, slots, "", true);
            json fake_search = {{"counterexample", entry["counterexample"]}};
            check_search(fake_search, cfg);
        }
    } else if (cmd == "quad") {
        std::int64_t d = report.at("d").get<std::int64_t>();
        if (report.contains("case_replays")) {
            for (const auto& r : report["case_replays"]) {
                if (!quad_verify_pair(quad_from_json(r["z"], d), quad_from_json(r["p"], d),
                                      quad_from_json(r["q"], d), quad_from_json(r["p_prime"], d),
                                      quad_from_json(r["q_prime"], d))) {
                    failures.push_back("quad case replay does not re-verify: " +
                                       r["case"].get<std::string>());
                }
            }
        }
        const auto& scan = report.at("scan");
        if (!scan["failure"].is_null()) {
            QuadInt z = quad_from_json(scan["failure"]["z"], d);
            QuadInt p = quad_from_json(scan["failure"]["p"], d);
            QuadInt q = quad_from_json(scan["failure"]["q"], d);
            bool found = false;
            for (const QuadInt& pp : quad_atoms_dividing(z)) {
                QuadInt prod = quad_mul(p, pp);
                if (!quad_div(z, prod)) continue;
                auto qp = quad_div(prod, q);
                if (qp && !quad_is_unit(*qp) && quad_is_atom(*qp)) {
                    found = true;
                    break;
                }
            }
            if (found) failures.push_back("quad counterexample does not re-fail");
        }
    }
    return failures;
}

} // namespace idpd

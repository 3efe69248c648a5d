#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "idpd/config_io.hpp"
#include "idpd/report.hpp"
#include "idpd/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitInputError = 3;
constexpr int kExitResourceRefusal = 4;

using nlohmann::json;

void emit(const json& report, bool as_json, const std::string& out_path) {
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw idpd::config_error("cannot write report to " + out_path);
        out << report.dump(2) << "\n";
    }
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << idpd::render_report_text(report);
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw idpd::config_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& ex) {
        throw idpd::config_error(path + " is not valid JSON at byte " + std::to_string(ex.byte) + ": " +
                                 ex.what());
    }
}

std::vector<std::int64_t> parse_group_spec(const std::string& spec) {
    std::vector<std::int64_t> orders;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t pos = 0;
            std::int64_t n = std::stoll(part, &pos);
            if (pos != part.size() || n < 2) throw std::invalid_argument("bad order");
            orders.push_back(n);
        } catch (const std::exception&) {
            throw idpd::config_error("--group expects comma-separated integers >= 2, got \"" + spec + "\"");
        }
    }
    if (orders.empty()) throw idpd::config_error("--group must name at least one cyclic factor");
    return orders;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"idpd — factorization certifiers and counterexample search for Krull domain models"};
    app.set_version_flag("--version", std::string("idpd ") + idpd::kToolVersion);
    app.require_subcommand(1);

    bool as_json = false;
    std::string out_path;
    unsigned threads = 1;
    app.add_flag("--json", as_json, "print the structured report instead of the text rendering");
    app.add_option("--out", out_path, "also write the structured report to this file");
    app.add_option("--threads", threads, "parallelism bound for searches (reports are identical at any value)")
        ->check(CLI::Range(1u, 64u));

    idpd::SearchBounds bounds;

    auto* atoms = app.add_subcommand("atoms", "enumerate atom class sequences with L-values");
    std::string atoms_config;
    atoms->add_option("config", atoms_config, "config file (JSON)")->required();

    auto* hfd = app.add_subcommand("hfd", "decide half-factoriality via the cross-number criterion");
    std::string hfd_config;
    hfd->add_option("config", hfd_config, "config file (JSON)")->required();

    auto* idpd_cmd = app.add_subcommand("idpd", "certify or search the irreducible-divisor pair property");
    std::string idpd_config;
    idpd_cmd->add_option("config", idpd_config, "config file (JSON)")->required();
    idpd_cmd->add_option("--max-mult", bounds.max_total_multiplicity, "total multiplicity cap")
        ->check(CLI::PositiveNumber);
    idpd_cmd->add_option("--prime-cap", bounds.prime_cap, "primes per unbounded class")
        ->check(CLI::PositiveNumber);
    idpd_cmd->add_option("--support", bounds.max_support, "distinct primes per element")
        ->check(CLI::PositiveNumber);

    auto* reproduce = app.add_subcommand("reproduce", "run a named golden suite and diff against goldens/");
    std::string repro_name;
    std::string goldens_dir = "goldens";
    bool update_goldens = false;
    reproduce->add_option("name", repro_name, "one of: z6 z4xz2 z6-cases quad3 quad5 semigroup monomial")
        ->required();
    reproduce->add_option("--goldens", goldens_dir, "directory of expected reports");
    reproduce->add_flag("--update", update_goldens, "rewrite the golden instead of diffing");

    auto* search = app.add_subcommand("search", "exploratory HFD-not-IDPD harness over one finite group");
    std::string group_spec;
    std::int64_t group_limit = 16;
    bool force = false;
    search->add_option("--group", group_spec, "cyclic factors, e.g. \"6\" or \"4,2\"")->required();
    search->add_option("--max-mult", bounds.max_total_multiplicity, "total multiplicity cap")
        ->check(CLI::PositiveNumber);
    search->add_option("--prime-cap", bounds.prime_cap, "primes per class")->check(CLI::PositiveNumber);
    search->add_option("--support", bounds.max_support, "distinct primes per element")
        ->check(CLI::PositiveNumber);
    search->add_option("--limit", group_limit, "refuse groups larger than this without --force");
    search->add_flag("--force", force, "override the group size guard");

    auto* verify = app.add_subcommand("verify", "re-verify every witness in a structured report");
    std::string verify_path;
    verify->add_option("report", verify_path, "report file produced with --out/--json")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*atoms) {
            emit(idpd::make_atoms_report(idpd::load_config_file(atoms_config)), as_json, out_path);
            return kExitOk;
        }
        if (*hfd) {
            emit(idpd::make_hfd_report(idpd::load_config_file(hfd_config)), as_json, out_path);
            return kExitOk;
        }
        if (*idpd_cmd) {
            emit(idpd::make_idpd_report(idpd::load_config_file(idpd_config), bounds, threads), as_json,
                 out_path);
            return kExitOk;
        }
        if (*reproduce) {
            json got = idpd::make_reproduce_report(repro_name, threads);
            std::filesystem::path golden = std::filesystem::path(goldens_dir) / (repro_name + ".json");
            if (update_goldens) {
                std::filesystem::create_directories(goldens_dir);
                std::ofstream out(golden);
                out << idpd::normalize_for_diff(got).dump(2) << "\n";
                std::cout << "golden written: " << golden.string() << "\n";
                return kExitOk;
            }
            json expected = load_json_file(golden.string());
            std::string diff =
                idpd::first_difference(idpd::normalize_for_diff(got), idpd::normalize_for_diff(expected));
            emit(got, as_json, out_path);
            if (!diff.empty()) {
                std::cerr << "golden mismatch for " << repro_name << " at " << diff << "\n";
                return kExitMismatch;
            }
            std::cout << "golden match: " << repro_name << "\n";
            return kExitOk;
        }
        if (*search) {
            auto orders = parse_group_spec(group_spec);
            std::int64_t size = 1;
            for (auto n : orders) size *= n;
            if (size > group_limit && !force) {
                std::cerr << "refusing group of order " << size << " (> " << group_limit
                          << "); pass --force to override\n";
                return kExitResourceRefusal;
            }
            emit(idpd::make_case_analysis_report(orders, bounds, threads), as_json, out_path);
            return kExitOk;
        }
        if (*verify) {
            json report = load_json_file(verify_path);
            auto failures = idpd::verify_report(report);
            if (failures.empty()) {
                std::cout << "all witnesses re-verify\n";
                return kExitOk;
            }
            for (const auto& f : failures) std::cerr << "verify: " << f << "\n";
            return kExitMismatch;
        }
    } catch (const idpd::config_error& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const idpd::usage_error& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const idpd::unsupported_error& ex) {
        std::cerr << "refused: " << ex.what() << "\n";
        return kExitResourceRefusal;
    } catch (const idpd::error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

// glcover: command-line front end.

#include "glcover/census.hpp"
#include "glcover/error.hpp"
#include "glcover/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace glcover;

namespace {

struct Globals {
    bool json = false;
    std::uint64_t seed = 20240611;
    unsigned threads = 1;
    std::uint64_t budget = Budget{}.max_elements;
    std::uint64_t scan_budget = Budget{}.max_scan_steps;

    Budget make_budget() const { return Budget{budget, scan_budget, threads}; }
};

// Exact values can run to thousands of digits; --json prints them in full.
std::string shown(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.size() > 100) s = s.substr(0, 60) + "... (" + std::to_string(s.size()) + " chars)";
    return s;
}

void print_human(const Json& j, const std::string& indent = "") {
    for (const auto& [key, val] : j.items()) {
        if (val.is_object()) {
            std::cout << indent << key << ":\n";
            print_human(val, indent + "  ");
        } else if (val.is_array() && !val.empty() && val.front().is_object()) {
            std::cout << indent << key << ":\n";
            for (const auto& row : val) {
                std::cout << indent << "  -";
                for (const auto& [k, v] : row.items()) std::cout << ' ' << k << '=' << shown(v);
                std::cout << '\n';
            }
        } else {
            std::cout << indent << key << ": " << shown(val) << '\n';
        }
    }
}

int emit(const Globals& g, const Json& j) {
    if (g.json) {
        std::cout << j.dump(2) << '\n';
    } else {
        print_human(j);
    }
    if (j.contains("pass") && j.at("pass").is_boolean() && !j.at("pass").get<bool>()) return 1;
    return 0;
}

void print_census_table(unsigned n_max, std::optional<std::uint64_t> q) {
    std::cout << "n  |Phi_n|  a_n(q)";
    if (q) std::cout << "  [value at q=" << *q << "]";
    std::cout << '\n';
    for (unsigned n = 1; n <= n_max; ++n) {
        const CensusRow row = census_row(n);
        std::cout << n << "  " << row.class_count << "  " << row.a_poly.to_string();
        if (q) std::cout << "  [" << row.a_poly.eval(BigInt(static_cast<unsigned long>(*q))).get_str() << "]";
        std::cout << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian covers and non-commuting sets in GL_n(q)"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_option("--seed", g.seed, "Seed for randomized checks");
    app.add_option("--threads", g.threads, "Worker threads for group scans")->check(CLI::Range(1U, 256U));
    app.add_option("--budget", g.budget, "Maximum number of group elements to enumerate");
    app.add_option("--scan-budget", g.scan_budget, "Maximum number of pairwise scan steps");

    // census
    auto* census = app.add_subcommand("census", "Census of the abelian cover: Phi_n, b_n, a_n(q)");
    unsigned census_n = 0;
    std::optional<std::uint64_t> census_q;
    bool census_table = false;
    census->add_option("--n", census_n, "Dimension")->required();
    census->add_option("--q", census_q, "Evaluate at this prime power");
    census->add_flag("--table", census_table, "Rows n = 1..N as a human-readable table");

    // series
    auto* series = app.add_subcommand("series", "Generating functions");
    series->require_subcommand(1);
    auto* expand = series->add_subcommand("expand", "Expand F1, F2 or Fbar");
    std::string which = "Fbar", form = "exp", ring = "ratfunc";
    unsigned order = 6, u_order = 40;
    expand->add_option("--which", which, "F1, F2 or Fbar")->check(CLI::IsMember({"F1", "F2", "Fbar"}));
    expand->add_option("--form", form, "exp, sum or product")->check(CLI::IsMember({"exp", "sum", "product"}));
    expand->add_option("--order", order, "Highest power of t");
    expand->add_option("--u-order", u_order, "Highest power of u = 1/q (useries ring)");
    expand->add_option("--ring", ring, "ratfunc or useries")->check(CLI::IsMember({"ratfunc", "useries"}));

    // limit
    auto* limit = app.add_subcommand("limit", "Certified enclosures of l(q)");
    limit->require_subcommand(1);
    std::string limit_q = "2";
    unsigned terms = 30, max_n = 12;
    auto* lq = limit->add_subcommand("lq", "Interval containing l(q)");
    lq->add_option("--q", limit_q, "q > 1, integer or p/r")->required();
    lq->add_option("--terms", terms, "Number of product factors kept exactly");
    auto* lcheck = limit->add_subcommand("check", "Decide the numeric estimates on l(q)");
    lcheck->add_option("--q", limit_q, "q >= 2")->required();
    lcheck->add_option("--terms", terms, "Number of product factors kept exactly");
    auto* lconv = limit->add_subcommand("convergence", "q^n b_n against the l(q) interval");
    lconv->add_option("--q", limit_q, "Prime power q")->required();
    lconv->add_option("--max-n", max_n, "Largest n");
    lconv->add_option("--terms", terms, "Number of product factors kept exactly");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force checks in GL_n(q)");
    unsigned on = 2, oq = 2;
    std::string task;
    oracle->add_option("--n", on, "Dimension")->required();
    oracle->add_option("--q", oq, "Field size")->required();
    oracle->add_option("--task", task, "Check to run")
        ->required()
        ->check(CLI::IsMember({"cyclic-proportion", "centralizer-count", "regular-unipotent", "remark-matrix", "jm-check"}));

    // clique
    auto* clique = app.add_subcommand("clique", "Clique number of the non-commuting graph");
    clique->require_subcommand(1);
    auto* omega = clique->add_subcommand("omega", "Exact clique number");
    unsigned cn = 2, cq = 2;
    double timeout = CliqueBudget{}.seconds;
    std::uint64_t steps = CliqueBudget{}.steps;
    std::string witness_path;
    omega->add_option("--n", cn, "Dimension")->required();
    omega->add_option("--q", cq, "Field size")->required();
    omega->add_option("--timeout", timeout, "Search time limit in seconds");
    omega->add_option("--steps", steps, "Search step limit");
    omega->add_option("--emit-witness", witness_path, "Write the witness, one matrix per line");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    std::string level = "fast", golden_dir = default_golden_dir();
    verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--golden-dir", golden_dir, "Directory with golden files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (census->parsed()) {
            if (census_table && !g.json) {
                print_census_table(census_n, census_q);
                return 0;
            }
            return emit(g, census_report(census_n, census_q));
        }
        if (expand->parsed()) {
            const CoeffRing r = ring == "useries" ? CoeffRing::useries : CoeffRing::ratfunc;
            return emit(g, series_report(which, parse_form(form), order, r, u_order));
        }
        if (lq->parsed()) return emit(g, limit_lq_report(rational_from_json(limit_q), terms));
        if (lcheck->parsed()) {
            Json j = limit_check_report(rational_from_json(limit_q), terms);
            j["pass"] = j.at("all_hold");
            return emit(g, j);
        }
        if (lconv->parsed()) {
            Json j = convergence_json(std::stoull(limit_q), max_n, terms);
            j["pass"] = j.at("below_hi").get<bool>() && j.at("gap_hi_decreasing").get<bool>();
            return emit(g, j);
        }
        if (oracle->parsed()) return emit(g, oracle_report(on, oq, task, g.make_budget()));
        if (omega->parsed()) {
            CliqueRun run = clique_omega(cn, cq, g.make_budget(), CliqueBudget{timeout, steps});
            if (!witness_path.empty()) {
                std::ofstream out(witness_path);
                if (!out) throw DomainError("cannot write " + witness_path);
                for (const auto& m : run.witness) out << mat_to_string(m) << '\n';
                run.report["witness_path"] = witness_path;
            }
            return emit(g, run.report);
        }
        if (verify->parsed()) {
            const RunReport rep =
                verify_all(level == "full" ? VerifyLevel::full : VerifyLevel::fast, golden_dir, g.make_budget(), g.seed);
            if (g.json) {
                std::cout << rep.to_json().dump(2) << '\n';
            } else {
                for (const auto& c : rep.checks) {
                    std::printf("%-24s %-12s %8.3fs  %s\n", c.id.c_str(), to_string(c.status).c_str(), c.seconds,
                                c.detail.c_str());
                }
            }
            return rep.exit_code();
        }
    } catch (const std::exception& e) {
        if (g.json) {
            std::cout << Json{{"error", e.what()}}.dump(2) << '\n';
        } else {
            std::cerr << "error: " << e.what() << '\n';
        }
        return 2;
    }
    return 0;
}

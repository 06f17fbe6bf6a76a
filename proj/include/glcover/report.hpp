#pragma once

// JSON reports behind the command-line subcommands, and the verification run.

#include "glcover/asympt.hpp"
#include "glcover/clique.hpp"
#include "glcover/json_io.hpp"
#include "glcover/oracle.hpp"
#include "glcover/qseries.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace glcover {

/// Throws DomainError for an unknown name.
SeriesForm parse_form(const std::string& name);

Json census_report(unsigned n, std::optional<std::uint64_t> q);

/// which: "F1", "F2" or "Fbar"; ring "ratfunc" or "useries".
Json series_report(const std::string& which, SeriesForm form, unsigned order, CoeffRing ring, unsigned u_order);

Json limit_lq_report(const BigRational& q, unsigned terms);
Json limit_check_report(const BigRational& q, unsigned terms);
Json convergence_json(std::uint64_t q, unsigned max_n, unsigned terms);

/// task: cyclic-proportion, centralizer-count, regular-unipotent,
/// remark-matrix or jm-check. Every report carries a boolean "pass".
Json oracle_report(unsigned n, unsigned q, const std::string& task, const Budget& budget);

struct CliqueRun {
    Json report; ///< {omega, optimal, seed_size, upper_bound, ...}
    std::vector<FqMatrix> witness;
};

CliqueRun clique_omega(unsigned n, unsigned q, const Budget& budget, const CliqueBudget& clique_budget);

enum class CheckStatus { pass, fail, inconclusive, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
    double seconds = 0;
};

struct RunReport {
    std::string command;
    std::vector<CheckResult> checks;

    bool any_failure() const;
    int exit_code() const { return any_failure() ? 1 : 0; }
    Json to_json() const;
};

enum class VerifyLevel { fast, full };

/// fast: census, series and limit checks; full adds the oracle and clique
/// instances. Golden files are read from golden_dir. Failures are recorded,
/// never thrown.
RunReport verify_all(VerifyLevel level, const std::string& golden_dir, const Budget& budget, std::uint64_t seed);

/// Golden directory baked in at build time.
std::string default_golden_dir();

} // namespace glcover

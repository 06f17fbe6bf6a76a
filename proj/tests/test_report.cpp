#include "glcover/census.hpp"
#include "glcover/error.hpp"
#include "glcover/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace glcover;
namespace fs = std::filesystem;

namespace {

const CheckResult& find_check(const RunReport& rep, const std::string& id) {
    for (const auto& c : rep.checks) {
        if (c.id == id) return c;
    }
    FAIL("missing check " << id);
    throw std::logic_error("unreachable");
}

fs::path copy_golden() {
    std::mt19937_64 rng(std::random_device{}());
    const fs::path dir = fs::temp_directory_path() / ("glcover_golden_" + std::to_string(rng()));
    fs::create_directories(dir);
    for (const auto& e : fs::directory_iterator(default_golden_dir())) fs::copy_file(e.path(), dir / e.path().filename());
    return dir;
}

} // namespace

TEST_CASE("json round trips") {
    const BigInt big("-123456789012345678901234567890");
    CHECK(bigint_from_json(to_json(big)) == big);
    CHECK(bigint_from_json(Json(42)) == 42);
    const BigRational r = make_rational(BigInt(-6), BigInt(4));
    CHECK(to_json(r) == "-3/2");
    CHECK(rational_from_json(to_json(r)) == r);
    CHECK(rational_from_json(Json("7")) == 7);
    const IntPolynomial p = a_polynomial(4);
    CHECK(poly_from_json(to_json(p)) == p);
    const RationalFunction f(IntPolynomial{1, 2}, IntPolynomial{-1, 0, 3});
    CHECK(rf_from_json(to_json(f)) == f);
    CHECK_THROWS_AS(bigint_from_json(Json("1.5")), DomainError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), DivisionByZero);
    CHECK_THROWS_AS(poly_from_json(Json("x")), DomainError);
    CHECK_THROWS_AS(rf_from_json(Json::object()), DomainError);
}

TEST_CASE("reports") {
    const Json c = census_report(3, 2);
    CHECK(bigint_from_json(c.at("a_value")) == a_polynomial(3).eval(BigInt(2)));
    CHECK_THROWS_AS(parse_form("bogus"), DomainError);
    const Json o = oracle_report(2, 3, "centralizer-count", Budget{});
    CHECK(o.at("pass").get<bool>());
    CHECK_THROWS_AS(oracle_report(3, 4, "centralizer-count", Budget{}), BudgetExceeded);
    const CliqueRun run = clique_omega(2, 3, Budget{}, CliqueBudget{});
    CHECK(run.witness.size() == 13);
    CHECK(run.report.at("optimal").get<bool>());
}

TEST_CASE("verify fast passes") {
    const RunReport rep = verify_all(VerifyLevel::fast, default_golden_dir(), Budget{}, 20240611);
    CHECK(rep.exit_code() == 0);
    for (const auto& c : rep.checks) {
        INFO(c.id << ": " << c.detail);
        CHECK(c.status == CheckStatus::pass);
    }
    const Json j = rep.to_json();
    CHECK(j.at("checks").size() == rep.checks.size());
}

TEST_CASE("tampered golden file is caught") {
    const fs::path dir = copy_golden();
    {
        std::ifstream in(dir / "a_polynomials.json");
        Json g = Json::parse(in);
        g["polynomials"]["3"][0] = "5";
        std::ofstream(dir / "a_polynomials.json") << g.dump(1);
    }
    const RunReport rep = verify_all(VerifyLevel::fast, dir.string(), Budget{}, 20240611);
    CHECK(find_check(rep, "census.a_polynomials").status == CheckStatus::fail);
    CHECK(find_check(rep, "census.phi_counts").status == CheckStatus::pass);
    CHECK(rep.exit_code() != 0);

    fs::remove(dir / "b_n.json");
    const RunReport missing = verify_all(VerifyLevel::fast, dir.string(), Budget{}, 20240611);
    CHECK(find_check(missing, "census.b_n").status == CheckStatus::fail);
    fs::remove_all(dir);
}

#include "glcover/report.hpp"

#include "glcover/census.hpp"
#include "glcover/error.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#ifndef GLCOVER_GOLDEN_DIR
#define GLCOVER_GOLDEN_DIR "data/golden"
#endif

namespace glcover {

SeriesForm parse_form(const std::string& name) {
    if (name == "exp") return SeriesForm::exp;
    if (name == "sum") return SeriesForm::sum;
    if (name == "product") return SeriesForm::product;
    throw DomainError("unknown series form '" + name + "' (expected exp, sum or product)");
}

namespace {

std::string regime_name(unsigned n, std::uint64_t q) {
    if (q > n) return "q>n";
    if (q == n && q > 2) return "q=n>2";
    return "unsupported";
}

Json interval_json(const RatInterval& r) {
    return Json{{"lo", to_json(r.lo)},
                {"hi", to_json(r.hi)},
                {"decimal_lo", to_decimal(r.lo, 10)},
                {"decimal_hi", to_decimal(r.hi, 10)}};
}

BigRational gl_order_value(unsigned n, unsigned q) { return BigRational(gl_order(n).eval(BigInt(q))); }

BigRational pow_rat(const BigRational& x, unsigned e) {
    BigRational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

} // namespace

Json census_report(unsigned n, std::optional<std::uint64_t> q) {
    const CensusRow row = census_row(n);
    Json j{{"n", n},
           {"class_count", row.class_count},
           {"b_n", to_json(row.b_n)},
           {"b_n_text", row.b_n.to_string()},
           {"a_poly", to_json(row.a_poly)},
           {"a_poly_text", row.a_poly.to_string()}};
    if (q) {
        if (!is_prime_power(*q)) throw DomainError(std::to_string(*q) + " is not a prime power");
        const BigInt qq(static_cast<unsigned long>(*q));
        j["q"] = *q;
        j["a_value"] = to_json(row.a_poly.eval(qq));
        j["b_value"] = to_json(rf_eval(row.b_n, BigRational(qq)));
        j["regime"] = regime_name(n, *q);
        try {
            j["omega"] = to_json(omega_closed(n, *q));
        } catch (const UnsupportedRegime&) {
            j["omega"] = nullptr;
        }
    }
    return j;
}

Json series_report(const std::string& which, SeriesForm form, unsigned order, CoeffRing ring, unsigned u_order) {
    PowerSeries s = PowerSeries::zero(0, CoeffRing::ratfunc);
    if (which == "F1") {
        s = build_F1(order, form, ring, u_order);
    } else if (which == "F2") {
        s = build_F2(order, form, ring, u_order);
    } else if (which == "Fbar") {
        if (form != SeriesForm::exp) throw DomainError("Fbar is built in exp form only");
        s = build_Fbar(order);
        if (ring == CoeffRing::useries) s = ps_to_useries(s, u_order);
    } else {
        throw DomainError("unknown series '" + which + "' (expected F1, F2 or Fbar)");
    }
    Json coeffs = Json::array();
    if (s.ring() == CoeffRing::ratfunc) {
        for (const auto& c : s.rf_coeffs()) coeffs.push_back(Json{{"value", to_json(c)}, {"text", c.to_string()}});
    } else {
        for (const auto& c : s.u_coeffs()) {
            Json u = Json::array();
            for (const auto& r : c.coeffs()) u.push_back(to_json(r));
            coeffs.push_back(u);
        }
    }
    return Json{{"which", which},
                {"order", order},
                {"ring", ring == CoeffRing::ratfunc ? "ratfunc" : "useries"},
                {"u_order", ring == CoeffRing::useries ? Json(u_order) : Json(nullptr)},
                {"coefficients", coeffs}};
}

Json limit_lq_report(const BigRational& q, unsigned terms) {
    const RatInterval l = l_of_q(q, terms);
    Json j = interval_json(l);
    j["q"] = to_json(q);
    j["terms"] = terms;
    j["decimal_width"] = to_decimal(l.width(), 12);
    return j;
}

Json limit_check_report(const BigRational& q, unsigned terms) {
    const EstimateReport rep = check_estimates(q, terms);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        checks.push_back(Json{{"id", c.id}, {"statement", c.statement}, {"verdict", to_string(c.verdict)}});
    }
    Json j{{"q", to_json(q)}, {"terms", terms}, {"checks", checks}, {"all_hold", rep.all_hold()}};
    if (rep.l.hi > 0) j["l"] = interval_json(rep.l); // absent when the tail bound was too weak
    return j;
}

Json convergence_json(std::uint64_t q, unsigned max_n, unsigned terms) {
    const auto rows = convergence_report(q, max_n, terms);
    Json out = Json::array();
    bool decreasing = true, below = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out.push_back(Json{{"n", r.n},
                           {"scaled_b", to_json(r.scaled_b)},
                           {"decimal", to_decimal(r.scaled_b, 10)},
                           {"gap_lo", to_decimal(r.gap.lo, 10)},
                           {"gap_hi", to_decimal(r.gap.hi, 10)},
                           {"below_hi", r.below_hi},
                           {"positive", r.positive}});
        below = below && r.below_hi;
        if (i > 0 && !(r.gap.hi < rows[i - 1].gap.hi)) decreasing = false;
    }
    return Json{{"q", q}, {"terms", terms}, {"rows", out}, {"below_hi", below}, {"gap_hi_decreasing", decreasing}};
}

namespace {

Json proportion_json(const GLGroup& G) {
    const ProportionReport p = cyclic_proportion(G);
    return Json{{"group_order", p.total},
                {"cyclic", p.cyclic},
                {"proportion", to_json(p.proportion)},
                {"decimal", to_decimal(p.proportion, 8)},
                {"bound_ratio", Json{{"value", to_json(p.bound_ratio)}, {"holds", p.ratio_holds}}},
                {"bound_poly", Json{{"value", to_json(p.bound_poly)}, {"holds", p.poly_holds}}},
                {"pass", p.ratio_holds && p.poly_holds}};
}

Json centralizer_count_json(const GLGroup& G) {
    const unsigned n = G.n(), q = G.field().q();
    const CentralizerCount cc = count_cyclic_centralizers(G);
    const BigInt a_value = a_polynomial(n).eval(BigInt(q));
    const BigInt N(static_cast<unsigned long>(cc.count));
    const bool expect_equal = q > n;
    const bool relation_ok = expect_equal ? N == a_value : N < a_value;
    const BigRational x = BigRational(1, q);
    const BigRational lower = pow_rat(x, n) * gl_order_value(n, q) *
                              (1 - pow_rat(x, 3) - pow_rat(x, 5) + pow_rat(x, 6) - pow_rat(x, n));
    const bool lower_ok = BigRational(N) >= lower;
    Json j{{"N", cc.count},
           {"a_value", to_json(a_value)},
           {"expected_relation", expect_equal ? "N = a_n(q)" : "N < a_n(q)"},
           {"relation_holds", relation_ok},
           {"lower_bound", to_json(lower)},
           {"lower_bound_holds", lower_ok},
           {"cyclic_total", cc.cyclic_total},
           {"cyclic_in_sets", cc.cyclic_in_sets},
           {"partition", cc.partition},
           {"all_abelian", cc.all_abelian},
           {"orders_bounded", cc.orders_bounded}};
    bool pass = relation_ok && lower_ok && cc.partition && cc.all_abelian && cc.orders_bounded;
    try {
        const BigInt w = omega_closed(n, q);
        j["closed_value"] = to_json(w);
        j["closed_matches"] = w == N;
        pass = pass && w == N;
    } catch (const UnsupportedRegime&) {
        j["closed_value"] = nullptr;
    }
    j["pass"] = pass;
    return j;
}

Json block_json(const GLGroup& G, const BlockCheck& b) {
    return Json{{"f", G.field().poly_to_string(b.f)},
                {"m", b.m},
                {"cyclic", b.cyclic},
                {"abelian", b.abelian},
                {"centralizer_order", b.centralizer_order},
                {"expected_centralizer", b.expected_centralizer},
                {"normalizer_order", b.normalizer_order},
                {"expected_normalizer", b.expected_normalizer},
                {"pass", b.pass()}};
}

} // namespace

Json oracle_report(unsigned n, unsigned q, const std::string& task, const Budget& budget) {
    Json j{{"n", n}, {"q", q}, {"task", task}};
    if (task == "jm-check") {
        const Field F(q);
        Json rows = Json::array();
        bool pass = true;
        for (const auto& c : jm_checks(q)) {
            rows.push_back(Json{{"f", F.poly_to_string(c.f)},
                                {"m", c.m},
                                {"min_poly", F.poly_to_string(c.min_poly)},
                                {"expected", F.poly_to_string(c.expected)},
                                {"char_poly_matches", c.char_matches},
                                {"pass", c.pass()}});
            pass = pass && c.pass();
        }
        j["checks"] = rows;
        j["pass"] = pass;
        return j;
    }
    const GLGroup G = GLGroup::enumerate(n, q, budget);
    j["group_order"] = G.size();
    if (task == "cyclic-proportion") {
        j.update(proportion_json(G));
    } else if (task == "centralizer-count") {
        j.update(centralizer_count_json(G));
    } else if (task == "regular-unipotent") {
        const Field& F = G.field();
        j.update(block_json(G, indecomposable_check(G, F.normalize({F.neg(1), 1}), n)));
    } else if (task == "remark-matrix") {
        const RemarkCheck r = remark_matrix_check(G);
        j["matrix"] = mat_to_string(r.x);
        j["centralizer_order"] = r.centralizer_order;
        j["cyclic_members"] = r.cyclic_members;
        j["shape_matches"] = r.shape_matches;
        j["in_cyclic_centralizer"] = r.in_cyclic_centralizer;
        j["pass"] = r.centralizer_order == 16 && r.cyclic_members == 0 && r.shape_matches && !r.in_cyclic_centralizer;
    } else {
        throw DomainError("unknown oracle task '" + task + "'");
    }
    return j;
}

CliqueRun clique_omega(unsigned n, unsigned q, const Budget& budget, const CliqueBudget& clique_budget) {
    const GLGroup G = GLGroup::enumerate(n, q, budget);
    const CentralizerCount cc = count_cyclic_centralizers(G);
    const auto seed = seed_clique(G, cc);
    std::optional<std::uint64_t> upper;
    try {
        upper = covering_upper_bound(n, q).get_ui();
    } catch (const UnsupportedRegime&) {
    }
    const NonComGraph graph = build_graph(G);
    const CliqueResult r = max_clique(graph, seed, upper, clique_budget);
    CliqueRun run;
    for (auto e : r.witness) run.witness.push_back(G.element(e));
    const bool verified = verify_noncommuting(G, r.witness);
    run.report = Json{{"n", n},
                      {"q", q},
                      {"omega", r.size},
                      {"optimal", r.optimal},
                      {"seed_size", r.seed_size},
                      {"upper_bound", upper ? Json(*upper) : Json(nullptr)},
                      {"vertices", graph.vertex_count()},
                      {"center_order", graph.center_order},
                      {"searched", r.searched},
                      {"steps", r.steps},
                      {"witness_verified", verified}};
    return run;
}

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
    case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

bool RunReport::any_failure() const {
    for (const auto& c : checks) {
        if (c.status == CheckStatus::fail) return true;
    }
    return false;
}

Json RunReport::to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks) {
        arr.push_back(Json{{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}, {"seconds", c.seconds}});
    }
    return Json{{"command", command}, {"checks", arr}, {"exit_code", exit_code()}};
}

std::string default_golden_dir() { return GLCOVER_GOLDEN_DIR; }

namespace {

using Outcome = std::pair<CheckStatus, std::string>;

Outcome verdict(bool ok, const std::string& detail) { return {ok ? CheckStatus::pass : CheckStatus::fail, detail}; }

Json read_golden(const std::string& dir, const std::string& name) {
    std::ifstream in(dir + "/" + name);
    if (!in) throw DomainError("cannot open golden file " + dir + "/" + name);
    return Json::parse(in);
}

class Runner {
public:
    explicit Runner(RunReport& rep) : rep_(rep) {}

    void run(const std::string& id, const std::function<Outcome()>& body) {
        CheckResult r;
        r.id = id;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            auto [status, detail] = body();
            r.status = status;
            r.detail = std::move(detail);
        } catch (const std::exception& e) {
            r.status = CheckStatus::fail;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep_.checks.push_back(std::move(r));
    }

private:
    RunReport& rep_;
};

IntPolynomial random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return IntPolynomial(std::move(c));
}

} // namespace

RunReport verify_all(VerifyLevel level, const std::string& golden_dir, const Budget& budget, std::uint64_t seed) {
    RunReport rep;
    rep.command = std::string("verify --level ") + (level == VerifyLevel::fast ? "fast" : "full");
    Runner R(rep);

    R.run("census.a_polynomials", [&] {
        const Json g = read_golden(golden_dir, "a_polynomials.json").at("polynomials");
        std::string bad;
        for (unsigned n = 1; n <= 6; ++n) {
            if (!(a_polynomial(n) == poly_from_json(g.at(std::to_string(n))))) bad += " n=" + std::to_string(n);
        }
        return verdict(bad.empty(), bad.empty() ? "a_n(q) matches for n = 1..6" : "mismatch at" + bad);
    });

    R.run("census.phi_counts", [&] {
        const Json g = read_golden(golden_dir, "phi_counts.json").at("counts");
        std::string bad;
        for (unsigned n = 0; n < g.size(); ++n) {
            if (enumerate_phi(n).size() != g[n].get<std::size_t>()) bad += " n=" + std::to_string(n);
        }
        return verdict(bad.empty(), bad.empty() ? "|Phi_n| matches for n <= " + std::to_string(g.size() - 1) : "mismatch at" + bad);
    });

    R.run("census.b_n", [&] {
        const Json g = read_golden(golden_dir, "b_n.json").at("b");
        std::string bad;
        for (const auto& [key, val] : g.items()) {
            if (!(b_coefficient(static_cast<unsigned>(std::stoul(key))) == rf_from_json(val))) bad += " n=" + key;
        }
        return verdict(bad.empty(), bad.empty() ? "b_n matches for " + std::to_string(g.size()) + " values" : "mismatch at" + bad);
    });

    R.run("series.fbar", [&] {
        const PowerSeries f = build_Fbar(12);
        for (unsigned n = 0; n <= 12; ++n) {
            if (!(f.rf_coeffs()[n] == b_coefficient(n))) return verdict(false, "t^" + std::to_string(n) + " differs from b_n");
        }
        return verdict(true, "t^n coefficient of Fbar equals b_n for n <= 12");
    });

    R.run("series.f1_forms", [&] {
        const bool sum_ok = build_F1(12, SeriesForm::exp) == build_F1(12, SeriesForm::sum);
        const PowerSeries e = build_F1(12, SeriesForm::exp, CoeffRing::useries, 40);
        const PowerSeries p = build_F1(12, SeriesForm::product, CoeffRing::useries, 40);
        return verdict(sum_ok && e == p, std::string("exp=sum ") + (sum_ok ? "yes" : "no") + ", exp=product to u^40 " +
                                             (e == p ? "yes" : "no"));
    });

    R.run("series.f2_forms", [&] {
        const PowerSeries e = build_F2(12, SeriesForm::exp, CoeffRing::useries, 40);
        const PowerSeries p = build_F2(12, SeriesForm::product, CoeffRing::useries, 40);
        return verdict(e == p, "F2 exp=product to u^40");
    });

    R.run("series.monotone", [&] {
        const PowerSeries f = build_Fbar(13);
        for (unsigned q : {2U, 3U, 4U, 5U}) {
            BigRational prev = rf_eval(f.rf_coeffs()[0], BigRational(q));
            BigRational qn = 1;
            for (unsigned n = 1; n <= 13; ++n) {
                qn *= q;
                const BigRational cur = qn * rf_eval(f.rf_coeffs()[n], BigRational(q));
                if (!(prev < cur)) return verdict(false, "not increasing at q=" + std::to_string(q) + ", n=" + std::to_string(n));
                prev = cur;
            }
        }
        return verdict(true, "q^n b_n strictly increasing for n <= 13, q in {2,3,4,5}");
    });

    R.run("exactalg.random_eval", [&] {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pt(-7, 7);
        for (int trial = 0; trial < 200; ++trial) {
            const RationalFunction f(random_poly(rng, 4), random_poly(rng, 3) + IntPolynomial{0, 0, 0, 0, 1});
            const RationalFunction g(random_poly(rng, 3), random_poly(rng, 4) + IntPolynomial{0, 0, 0, 0, 0, 1});
            const BigRational x(pt(rng) * 3 + 1, 2);
            BigRational fx, gx;
            try {
                fx = f.eval(x);
                gx = g.eval(x);
            } catch (const PoleError&) {
                continue;
            }
            if ((f + g).eval(x) != fx + gx || (f - g).eval(x) != fx - gx || (f * g).eval(x) != fx * gx) {
                return verdict(false, "evaluation does not commute with arithmetic (seed " + std::to_string(seed) + ")");
            }
        }
        return verdict(true, "200 random pairs, seed " + std::to_string(seed));
    });

    R.run("limit.l2", [&] {
        const RatInterval l = l_of_q(BigRational(2), 30);
        const bool ok = l.lo > BigRational(27898, 100) && l.hi < BigRational(3950005, 10000);
        return verdict(ok, "l(2) in [" + to_decimal(l.lo, 6) + ", " + to_decimal(l.hi, 6) + "]");
    });

    R.run("limit.estimates", [&] {
        std::string detail;
        bool ok = true;
        for (unsigned q : {2U, 3U, 4U, 5U, 7U}) {
            const EstimateReport r = check_estimates(BigRational(q), 30);
            ok = ok && r.all_hold();
            detail += "q=" + std::to_string(q) + (r.all_hold() ? ":hold " : ":FAIL ");
        }
        return verdict(ok, detail);
    });

    R.run("limit.convergence", [&] {
        for (unsigned q : {2U, 3U}) {
            const Json c = convergence_json(q, 12, 30);
            if (!c.at("below_hi").get<bool>() || !c.at("gap_hi_decreasing").get<bool>()) {
                return verdict(false, "envelope violated at q=" + std::to_string(q));
            }
        }
        return verdict(true, "q^n b_n below hi(l(q)), gaps decreasing, n <= 12, q in {2,3}");
    });

    if (level == VerifyLevel::fast) return rep;

    std::map<std::pair<unsigned, unsigned>, std::shared_ptr<GLGroup>> groups;
    auto group = [&](unsigned n, unsigned q) -> const GLGroup& {
        auto& slot = groups[{n, q}];
        if (!slot) slot = std::make_shared<GLGroup>(GLGroup::enumerate(n, q, budget));
        return *slot;
    };
    std::map<std::pair<unsigned, unsigned>, CentralizerCount> counts;
    auto census = [&](unsigned n, unsigned q) -> const CentralizerCount& {
        auto it = counts.find({n, q});
        if (it == counts.end()) it = counts.emplace(std::make_pair(n, q), count_cyclic_centralizers(group(n, q))).first;
        return it->second;
    };
    const std::vector<std::pair<unsigned, unsigned>> small{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}};

    R.run("oracle.wall", [&] {
        std::string detail;
        bool ok = true;
        for (auto [n, q] : small) {
            const ProportionReport p = cyclic_proportion(group(n, q));
            ok = ok && p.ratio_holds && p.poly_holds;
            detail += "(" + std::to_string(n) + "," + std::to_string(q) + ")=" + p.proportion.get_str() + " ";
        }
        return verdict(ok, detail);
    });

    R.run("oracle.census_equality", [&] {
        std::string detail;
        bool ok = true;
        for (auto [n, q] : small) {
            const CentralizerCount& cc = census(n, q);
            const BigInt a = a_polynomial(n).eval(BigInt(q));
            const BigInt N(static_cast<unsigned long>(cc.count));
            const bool rel = q > n ? N == a : N < a;
            ok = ok && rel && cc.partition && cc.all_abelian && cc.orders_bounded;
            detail += "(" + std::to_string(n) + "," + std::to_string(q) + ") N=" + N.get_str() + " a=" + a.get_str() + " ";
        }
        return verdict(ok, detail);
    });

    R.run("oracle.refined_3_3", [&] {
        const GLGroup& G = group(3, 3);
        const CentralizerCount& cc = census(3, 3);
        const BigInt refined = a_polynomial(3).eval(BigInt(3)) - BigInt(11232 / 48);
        const auto seed = seed_clique(G, cc);
        const bool ok = cc.count == 1067 && refined == 1067 && seed.size() == 1067;
        return verdict(ok, "N=" + std::to_string(cc.count) + ", a_3(3) - 11232/48 = " + refined.get_str() +
                               ", seed " + std::to_string(seed.size()) + " pairwise non-commuting");
    });

    R.run("oracle.structural", [&] {
        std::string detail;
        bool ok = true;
        for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
            const GLGroup& G = group(n, q);
            const Field& F = G.field();
            const BlockCheck b = indecomposable_check(G, F.normalize({F.neg(1), 1}), n);
            ok = ok && b.pass();
            detail += "unipotent(" + std::to_string(n) + "," + std::to_string(q) + ") C=" + std::to_string(b.centralizer_order) +
                      " N=" + std::to_string(b.normalizer_order) + "; ";
        }
        for (unsigned q : {2U, 3U}) {
            for (const auto& c : jm_checks(q)) ok = ok && c.pass();
        }
        const RemarkCheck r = remark_matrix_check(group(4, 2));
        ok = ok && r.centralizer_order == 16 && r.cyclic_members == 0 && !r.in_cyclic_centralizer;
        detail += "J_m(f) min polys checked; remark matrix C=" + std::to_string(r.centralizer_order) +
                  " cyclic members=" + std::to_string(r.cyclic_members);
        return verdict(ok, detail);
    });

    R.run("clique.omega", [&] {
        const Json g = read_golden(golden_dir, "omega.json").at("values");
        std::string detail;
        bool ok = true;
        for (const auto& v : g) {
            const unsigned n = v.at("n").get<unsigned>(), q = v.at("q").get<unsigned>();
            const CliqueRun run = clique_omega(n, q, budget, CliqueBudget{});
            const auto omega = run.report.at("omega").get<std::uint64_t>();
            const bool good = run.report.at("optimal").get<bool>() && run.report.at("witness_verified").get<bool>() &&
                              BigInt(static_cast<unsigned long>(omega)) == bigint_from_json(v.at("omega"));
            ok = ok && good;
            detail += "(" + std::to_string(n) + "," + std::to_string(q) + ")=" + std::to_string(omega) + (good ? " " : "! ");
        }
        return verdict(ok, detail);
    });

    return rep;
}

} // namespace glcover

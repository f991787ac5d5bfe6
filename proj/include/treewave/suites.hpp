#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "treewave/error.hpp"
#include "treewave/function.hpp"
#include "treewave/operators.hpp"
#include "treewave/pompeiu.hpp"
#include "treewave/polynomial.hpp"
#include "treewave/rational.hpp"
#include "treewave/reconstruction.hpp"
#include "treewave/tree.hpp"
#include "treewave/wave.hpp"

namespace treewave {

// Seeded identity suites behind the `verify` subcommand. Every case is an
// exact (zero-tolerance) comparison; a corrupt flag perturbs the first
// comparison to prove the harness can fail.

struct SuiteParams {
    std::vector<std::int64_t> qs{1, 2, 3};
    std::int64_t radius = 8;
    std::uint64_t seed = 1;
    bool corrupt = false;
};

struct SuiteCase {
    std::string name;
    bool pass;
    std::string residual; // max |difference| when failing, "0" otherwise
};

struct SuiteReport {
    std::string suite;
    SuiteParams params;
    std::vector<SuiteCase> cases;

    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

class SuiteChecker {
public:
    explicit SuiteChecker(SuiteReport& report, bool corrupt)
        : report_(report), corrupt_(corrupt) {}

    void equal(const std::string& name, const TreeFunction& lhs, const TreeFunction& rhs) {
        TreeFunction diff = lhs - rhs;
        if (corrupt_) {
            diff.mutable_at(0) += 1;
            corrupt_ = false;
        }
        const bool ok = diff.is_zero();
        report_.cases.push_back({name, ok, ok ? "0" : rational_to_string(diff.max_abs())});
    }

    void is_true(const std::string& name, bool ok, const std::string& detail = "") {
        if (corrupt_) {
            ok = !ok;
            corrupt_ = false;
        }
        report_.cases.push_back({name, ok, ok ? "0" : (detail.empty() ? "condition" : detail)});
    }

private:
    SuiteReport& report_;
    bool corrupt_;
};

inline std::string tag(std::int64_t q, const std::string& rest) {
    return "q=" + std::to_string(q) + " " + rest;
}

inline void require_radius(const SuiteParams& p, std::int64_t min_radius,
                           const std::string& suite) {
    require(p.radius >= min_radius, ErrorCode::bad_params,
            "suite '" + suite + "' needs radius >= " + std::to_string(min_radius));
}

} // namespace detail

inline SuiteReport suite_imv(const SuiteParams& p, std::int64_t n_functions = 10) {
    detail::require_radius(p, 6, "imv");
    SuiteReport report{"imv", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        for (std::int64_t i = 0; i < n_functions; ++i) {
            const TreeFunction f = TreeFunction::random(ball, p.radius, rng);
            for (std::int64_t k = 0; k <= 3; ++k)
                for (std::int64_t l = 0; l <= 3; ++l)
                    check.equal(detail::tag(q, "f" + std::to_string(i) + " k=" +
                                                   std::to_string(k) + " l=" + std::to_string(l)),
                                compose_mu(k, l, f), mean_value(mean_value(f, l), k));
        }
    }
    return report;
}

inline SuiteReport suite_wave_closed_form(const SuiteParams& p) {
    detail::require_radius(p, 6, "wave-closed-form");
    SuiteReport report{"wave-closed-form", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        const CauchyData c(TreeFunction::random(ball, p.radius, rng),
                           TreeFunction::random(ball, p.radius, rng));
        for (std::int64_t k = -5; k <= 6; ++k)
            check.equal(detail::tag(q, "k=" + std::to_string(k)), propagate(c, k),
                        closed_form(c, k));
    }
    return report;
}

inline SuiteReport suite_recurs1(const SuiteParams& p) {
    detail::require_radius(p, 5, "recurs1");
    SuiteReport report{"recurs1", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        const CauchyData c(TreeFunction::random(ball, p.radius, rng),
                           TreeFunction::random(ball, p.radius, rng));
        for (std::int64_t m = -2; m <= 3; ++m)
            for (std::int64_t k = 0; k <= 3; ++k) {
                const auto [lhs, rhs] = shifted_sum(c, m, k);
                check.equal(detail::tag(q, "m=" + std::to_string(m) + " k=" + std::to_string(k)),
                            lhs, rhs);
            }
    }
    return report;
}

inline SuiteReport suite_fnk(const SuiteParams& p) {
    detail::require_radius(p, 8, "fnk");
    SuiteReport report{"fnk", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        const CauchyData c(TreeFunction::random(ball, p.radius, rng),
                           TreeFunction::random(ball, p.radius, rng));
        for (std::int64_t k = 0; k <= 3; ++k) {
            const TreeFunction fk = propagate(c, k);
            for (std::int64_t n = -2; n <= 3; ++n)
                check.equal(detail::tag(q, "n=" + std::to_string(n) + " k=" + std::to_string(k)),
                            snapshot_at_multiple(c.f0, fk, n, k), propagate(c, n * k));
        }
    }
    return report;
}

inline SuiteReport suite_mu_basis(const SuiteParams& p) {
    detail::require_radius(p, 4, "mu-basis");
    SuiteReport report{"mu-basis", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        for (std::int64_t k = 0; k <= 8; ++k) {
            const auto t = mu1_power_in_mu_basis(k, q);
            Rational sum(0);
            bool nonneg = true;
            for (const auto& ti : t) {
                sum += ti;
                if (ti < 0) nonneg = false;
            }
            check.is_true(detail::tag(q, "powers k=" + std::to_string(k) + " sum=1 t>=0"),
                          nonneg && sum == 1);
            check.is_true(detail::tag(q, "mean poly k=" + std::to_string(k) + " sums to 1"),
                          mu_k_poly(k, q).evaluate(Rational(1)) == 1);
        }
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        const TreeFunction f = TreeFunction::random(ball, p.radius, rng);
        for (std::int64_t k = 0; k <= std::min<std::int64_t>(4, p.radius); ++k)
            check.equal(detail::tag(q, "apply mean poly k=" + std::to_string(k)),
                        apply_mu1_poly(mu_k_poly(k, q), f), mean_value(f, k));
        // basis conversions round-trip exactly
        for (int i = 0; i < 5; ++i) {
            std::vector<Rational> coeffs;
            for (int j = 0; j <= 4; ++j) coeffs.push_back(rng.next_small_rational());
            coeffs.push_back(rng.next_small_nonzero_rational());
            const RationalPoly poly{std::vector<Rational>(coeffs)};
            const OperatorExpr combo = mu1_poly_to_mu_combination(poly, q);
            check.is_true(detail::tag(q, "basis round-trip #" + std::to_string(i)),
                          mu_combination_to_mu1_poly(combo, q) == poly);
        }
    }
    return report;
}

inline SuiteReport suite_sigma(const SuiteParams& p) {
    detail::require_radius(p, 4, "sigma");
    SuiteReport report{"sigma", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        const TreeFunction f = TreeFunction::random(ball, p.radius, rng);
        check.equal(detail::tag(q, "sigma1 sigma1 = sigma2 + (q+1) id"),
                    apply_sigma1(apply_sigma1(f)),
                    sigma_apply(2, f) + Rational(q + 1) * f);
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(4, p.radius); ++n)
            check.equal(detail::tag(q, "sigma_n = p_n(sigma_1), n=" + std::to_string(n)),
                        sigma_apply(n, f), apply_poly_in_sigma1(geronimus_p(n, q), f));
    }
    return report;
}

inline SuiteReport suite_epd(const SuiteParams& p) {
    detail::require_radius(p, 5, "epd");
    SuiteReport report{"epd", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        const TreeFunction f0 = TreeFunction::random(ball, p.radius, rng);
        const CauchyData mean_data(f0.restricted(p.radius - 1), mean_value(f0, 1));
        const EPDParams epd = EPDParams::epd(q);
        for (std::int64_t k = 1; k <= 4; ++k)
            check.equal(detail::tag(q, "epd snapshot = radius-" + std::to_string(k) + " mean"),
                        epd_propagate(mean_data, epd, k), mean_value(f0, k));
        const CauchyData c(f0, TreeFunction::random(ball, p.radius, rng));
        for (std::int64_t k = 0; k <= 4; ++k) {
            check.equal(detail::tag(q, "closed form k=" + std::to_string(k)),
                        epd_closed_form(c, epd, k), epd_propagate(c, epd, k));
            check.equal(detail::tag(q, "closed form (wave weights) k=" + std::to_string(k)),
                        epd_closed_form(c, EPDParams::wave(), k), propagate(c, k));
        }
    }
    return report;
}

inline SuiteReport suite_dickson(const SuiteParams& p) {
    SuiteReport report{"dickson", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs)
        for (std::int64_t k = 0; k <= 5; ++k)
            check.is_true(detail::tag(q, "closed mean poly k=" + std::to_string(k)),
                          dickson_mu_poly(k, q) == mu_k_poly(k, q));
    return report;
}

inline SuiteReport suite_surjectivity(const SuiteParams& p, std::int64_t n_cases = 20) {
    detail::require_radius(p, 6, "surjectivity");
    SuiteReport report{"surjectivity", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        for (std::int64_t i = 0; i < n_cases; ++i) {
            const std::int64_t k = 1 + static_cast<std::int64_t>(rng.next(3));
            std::vector<Rational> coeffs;
            for (std::int64_t j = 0; j < k; ++j) coeffs.push_back(rng.next_small_rational());
            coeffs.push_back(rng.next_small_nonzero_rational());
            const OperatorExpr expr = OperatorExpr::combination(std::move(coeffs));
            const TreeFunction g = TreeFunction::random(ball, 3, rng);
            for (const FreePolicy policy :
                 {FreePolicy::equal_distribution, FreePolicy::first_vertex}) {
                const TreeFunction f = solve_surjective(expr, g, policy);
                check.equal(detail::tag(q, "case " + std::to_string(i) + " policy " +
                                               (policy == FreePolicy::first_vertex ? "first"
                                                                                   : "equal")),
                            apply_operator(expr, f).restricted(3), g);
            }
        }
    }
    return report;
}

inline SuiteReport suite_two_snapshot(const SuiteParams& p) {
    detail::require_radius(p, 8, "two-snapshot");
    SuiteReport report{"two-snapshot", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        const std::int64_t m = p.radius - 4;
        for (const std::int64_t k : {2, 3}) {
            const TreeFunction g = TreeFunction::random(ball, m, rng);
            const TreeFunction h = TreeFunction::random(ball, m, rng);
            const CauchyData c = two_snapshot_solve(g, h, k);
            check.equal(detail::tag(q, "k=" + std::to_string(k) + " time-0 snapshot"),
                        propagate(c, 0), g);
            check.equal(detail::tag(q, "k=" + std::to_string(k) + " time-k snapshot"),
                        propagate(c, k), h.restricted(m - (k - 1)));
        }
    }
    return report;
}

inline SuiteReport suite_three_snapshot(const SuiteParams& p) {
    detail::require_radius(p, 9, "three-snapshot");
    SuiteReport report{"three-snapshot", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        const CauchyData original(TreeFunction::random(ball, p.radius, rng),
                                  TreeFunction::random(ball, p.radius, rng));
        const std::int64_t k = 2, l = 3;
        const std::int64_t m = p.radius - snapshot_shrink(l);
        const TreeFunction f = propagate(original, 0).restricted(m);
        const TreeFunction g = propagate(original, k).restricted(m);
        const TreeFunction h = propagate(original, l).restricted(m);
        check.is_true(detail::tag(q, "genuine triple classifies as snapshot"),
                      classify_triple(f, g, h, k, l) == TripleClass::snapshot);
        const CauchyData rebuilt = three_snapshot_solve(f, g, h, k, l);
        for (std::int64_t time : {0L, 2L, 3L})
            check.equal(detail::tag(q, "time-" + std::to_string(time) + " snapshot"),
                        propagate(rebuilt, time), propagate(original, time));
    }
    return report;
}

inline SuiteReport suite_pompeiu(const SuiteParams& p) {
    detail::require_radius(p, 7, "pompeiu");
    SuiteReport report{"pompeiu", p, {}};
    detail::SuiteChecker check(report, p.corrupt);
    for (const auto q : p.qs) {
        // The uniqueness predicate guarantees coprime sphere-sum polynomials
        // for q >= 2 (trees of degree >= 3). On the line (q = 1) it does not:
        // p_2 divides p_6 there, so the solver gates on the gcd itself.
        if (q >= 2)
            for (std::int64_t k = 1; k <= 6; ++k)
                for (std::int64_t l = k + 1; l <= 6; ++l)
                    if (pompeiu_condition(k, l, q))
                        check.is_true(detail::tag(q, "coprime p_" + std::to_string(k) + ", p_" +
                                                         std::to_string(l)),
                                      poly_gcd(geronimus_p(k, q), geronimus_p(l, q)) ==
                                          RationalPoly::constant(Rational(1)));
        SeededRng rng(p.seed + static_cast<std::uint64_t>(q));
        const TreeBallPtr ball = build_tree(q, p.radius);
        const TreeFunction f0 = TreeFunction::random(ball, p.radius, rng);
        for (const auto& [k, l] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2},
                                                                                     {2, 3}}) {
            if (!pompeiu_condition(k, l, q)) continue;
            const std::int64_t m = p.radius - l;
            const TreeFunction g = mean_value(f0, k).restricted(m);
            const TreeFunction h = mean_value(f0, l).restricted(m);
            const TreeFunction f = two_circle_solve(g, h, k, l);
            check.equal(detail::tag(q, "round trip k=" + std::to_string(k) + " l=" +
                                           std::to_string(l)),
                        f, f0.restricted(f.domain_radius()));
        }
        // radii that violate the condition must be rejected
        bool rejected = false;
        try {
            pompeiu_bezout(1, 3, q);
        } catch (const Error& e) {
            rejected = e.code() == ErrorCode::condition_violated;
        }
        check.is_true(detail::tag(q, "radii (1,3) rejected"), rejected);
    }
    return report;
}

inline std::vector<std::string> suite_names() {
    return {"imv",  "wave-closed-form", "recurs1",      "fnk",
            "mu-basis", "sigma",         "epd",          "dickson",
            "surjectivity", "two-snapshot", "three-snapshot", "pompeiu"};
}

inline SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    if (name == "imv") return suite_imv(params);
    if (name == "wave-closed-form") return suite_wave_closed_form(params);
    if (name == "recurs1") return suite_recurs1(params);
    if (name == "fnk") return suite_fnk(params);
    if (name == "mu-basis") return suite_mu_basis(params);
    if (name == "sigma") return suite_sigma(params);
    if (name == "epd") return suite_epd(params);
    if (name == "dickson") return suite_dickson(params);
    if (name == "surjectivity") return suite_surjectivity(params);
    if (name == "two-snapshot") return suite_two_snapshot(params);
    if (name == "three-snapshot") return suite_three_snapshot(params);
    if (name == "pompeiu") return suite_pompeiu(params);
    fail(ErrorCode::unknown_suite, "unknown suite '" + name + "'");
}

inline nlohmann::json suite_report_to_json(const SuiteReport& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases)
        cases.push_back({{"case", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    return {{"suite", report.suite},
            {"q", report.params.qs},
            {"radius", report.params.radius},
            {"seed", report.params.seed},
            {"cases", cases},
            {"pass", report.pass()}};
}

} // namespace treewave

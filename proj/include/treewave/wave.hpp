#pragma once

#include <cstdint>
#include <utility>

#include "treewave/error.hpp"
#include "treewave/function.hpp"
#include "treewave/operators.hpp"
#include "treewave/polynomial.hpp"

namespace treewave {

/**
 * Cauchy data (f_0, f_1) of a wave: a two-sided sequence {f_k} with
 * mu_1 f_k = (f_{k+1} + f_{k-1})/2. Consecutive snapshots determine the wave
 * at every time, so nothing else is stored; snapshots are computed on demand.
 */
struct CauchyData {
    TreeFunction f0;
    TreeFunction f1;

    CauchyData(TreeFunction initial, TreeFunction next)
        : f0(std::move(initial)), f1(std::move(next)) {
        require(f0.same_ball(f1), ErrorCode::mismatched_functions,
                "Cauchy data must live on one ball");
        require(f0.domain_radius() == f1.domain_radius(), ErrorCode::mismatched_functions,
                "Cauchy data must share a domain radius");
    }

    std::int64_t domain_radius() const { return f0.domain_radius(); }
};

/// Domain shrink of the time-k snapshot computed from Cauchy data:
/// max(k-1, 0) forward, |k| backward.
inline std::int64_t snapshot_shrink(std::int64_t k) {
    return k >= 0 ? std::max<std::int64_t>(k - 1, 0) : -k;
}

/**
 * Snapshot at time k by the two-term recursion f_{j+1} = 2 mu_1 f_j - f_{j-1}
 * (run backwards for negative k).
 */
inline TreeFunction propagate(const CauchyData& c, std::int64_t k) {
    const std::int64_t r = c.domain_radius();
    require(r >= snapshot_shrink(k), ErrorCode::domain_too_small,
            "snapshot at time " + std::to_string(k) + " needs domain radius >= " +
                std::to_string(snapshot_shrink(k)) + ", have " + std::to_string(r));
    if (k == 0) return c.f0;
    if (k == 1) return c.f1;
    TreeFunction prev = k > 0 ? c.f0 : c.f1;
    TreeFunction cur = k > 0 ? c.f1 : c.f0;
    const std::int64_t steps = k > 0 ? k - 1 : -k;
    for (std::int64_t i = 0; i < steps; ++i) {
        TreeFunction next = Rational(2) * mean_value(cur, 1) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Snapshot at time k in closed form: f_k = U_{k-1}(mu_1) f_1 - U_{k-2}(mu_1) f_0.
inline TreeFunction closed_form(const CauchyData& c, std::int64_t k) {
    const std::int64_t r = c.domain_radius();
    require(r >= snapshot_shrink(k), ErrorCode::domain_too_small,
            "closed form at time " + std::to_string(k) + " needs domain radius >= " +
                std::to_string(snapshot_shrink(k)) + ", have " + std::to_string(r));
    return apply_cheb_U(k - 1, c.f1) - apply_cheb_U(k - 2, c.f0);
}

/**
 * Both sides of the shifted two-snapshot relation
 * f_{m+k} + f_{m-k} = 2 T_k(mu_1) f_m, evaluated on their common domain.
 * Verification primitive: returns (lhs, rhs).
 */
inline std::pair<TreeFunction, TreeFunction> shifted_sum(const CauchyData& c, std::int64_t m,
                                                         std::int64_t k) {
    TreeFunction lhs = propagate(c, m + k) + propagate(c, m - k);
    TreeFunction rhs = Rational(2) * apply_cheb_T(k, propagate(c, m));
    return {std::move(lhs), std::move(rhs)};
}

/**
 * Snapshot at time n*k from the snapshots at times 0 and k alone:
 * f_{nk} = U_{n-1}(T_k(mu_1)) f_k - U_{n-2}(T_k(mu_1)) f_0, the Chebyshev
 * recurrences running in the operator T_k(mu_1).
 */
inline TreeFunction snapshot_at_multiple(const TreeFunction& f0, const TreeFunction& fk,
                                         std::int64_t n, std::int64_t k) {
    require(f0.same_ball(fk), ErrorCode::mismatched_functions,
            "snapshots must live on one ball");
    const auto step = [k](const TreeFunction& g) { return apply_cheb_T(k, g); };
    return apply_cheb_U_with(n - 1, fk, step) - apply_cheb_U_with(n - 2, f0, step);
}

/**
 * f_{rk+sl} from snapshots f_0, f_{rk}, f_{sl} of one wave:
 * T_{sl}(mu_1) f_{rk} + T_{rk}(mu_1) f_{sl} - T_{rk-sl}(mu_1) f_0.
 */
inline TreeFunction combo_snapshot(const TreeFunction& f0, const TreeFunction& f_rk,
                                   const TreeFunction& f_sl, std::int64_t r, std::int64_t k,
                                   std::int64_t s, std::int64_t l) {
    return apply_cheb_T(s * l, f_rk) + apply_cheb_T(r * k, f_sl) -
           apply_cheb_T(r * k - s * l, f0);
}

/// Weights of the generalized Euler-Poisson-Darboux recursion
/// mu_1 f_k = s f_{k+1} + t f_{k-1}; s = 1/2 recovers the wave equation and
/// s = q/(q+1) the EPD equation proper.
struct EPDParams {
    Rational s;
    Rational t;

    EPDParams(Rational s_, Rational t_) : s(std::move(s_)), t(std::move(t_)) {
        require(s > 0 && t > 0, ErrorCode::bad_params, "EPD weights must be positive");
        require(s + t == 1, ErrorCode::bad_params, "EPD weights must satisfy s + t = 1");
    }

    static EPDParams wave() { return EPDParams(Rational(1, 2), Rational(1, 2)); }
    static EPDParams epd(std::int64_t q) {
        return EPDParams(Rational(q, q + 1), Rational(1, q + 1));
    }
};

/// Forward EPD recursion f_{k+1} = (mu_1 f_k - t f_{k-1}) / s. The sequence
/// is one-sided; negative times are not defined.
inline TreeFunction epd_propagate(const CauchyData& c, const EPDParams& params, std::int64_t k) {
    require(k >= 0, ErrorCode::bad_params, "EPD snapshots are defined for k >= 0 only");
    const std::int64_t r = c.domain_radius();
    require(r >= snapshot_shrink(k), ErrorCode::domain_too_small,
            "EPD snapshot at time " + std::to_string(k) + " needs domain radius >= " +
                std::to_string(snapshot_shrink(k)));
    if (k == 0) return c.f0;
    if (k == 1) return c.f1;
    const Rational inv_s = Rational(1) / params.s;
    TreeFunction prev = c.f0;
    TreeFunction cur = c.f1;
    for (std::int64_t i = 1; i < k; ++i) {
        TreeFunction next = inv_s * (mean_value(cur, 1) - params.t * prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/**
 * Closed-form EPD snapshot
 *
 *   f_k = (sqrt(t/s))^k [ sqrt(s/t) U_{k-1}(mu_1/(2 sqrt(st))) f_1
 *                         - U_{k-2}(mu_1/(2 sqrt(st))) f_0 ],
 *
 * evaluated in the formal ring Q[sqrt(st)]; the radical component provably
 * cancels and a nonzero residue raises (that would be a library bug, not a
 * data error). Exact for every rational s, t.
 */
inline TreeFunction epd_closed_form(const CauchyData& c, const EPDParams& params,
                                    std::int64_t k) {
    require(k >= 0, ErrorCode::bad_params, "EPD snapshots are defined for k >= 0 only");
    const std::int64_t r = c.domain_radius();
    require(r >= snapshot_shrink(k), ErrorCode::domain_too_small,
            "EPD closed form at time " + std::to_string(k) + " needs domain radius >= " +
                std::to_string(snapshot_shrink(k)));
    const Rational rho = params.s * params.t;
    const QuadRing ring(rho);
    const QuadExt arg = ring.radical(Rational(1) / (2 * rho)); // 1/(2 sqrt(st))

    // A function with values in Q[sqrt(rho)]: rational and radical layers.
    struct QuadFn {
        TreeFunction rat;
        TreeFunction irr;
    };
    const auto apply_quad_poly = [&](const QuadExtPoly& p, const TreeFunction& f) -> QuadFn {
        return {apply_mu1_poly(p.rational_part(), f), apply_mu1_poly(p.radical_part(), f)};
    };
    const auto scale_quad = [&](const QuadExt& s, const QuadFn& f) -> QuadFn {
        return {s.a * f.rat + rho * s.b * f.irr, s.b * f.rat + s.a * f.irr};
    };

    const QuadFn from_f1 = apply_quad_poly(cheb_U_scaled_arg(ring, k - 1, arg), c.f1);
    const QuadFn from_f0 = apply_quad_poly(cheb_U_scaled_arg(ring, k - 2, arg), c.f0);
    const QuadFn scaled_f1 = scale_quad(ring.radical(Rational(1) / params.t), from_f1);
    QuadFn bracket{scaled_f1.rat - from_f0.rat, scaled_f1.irr - from_f0.irr};
    const QuadExt prefactor = ring.pow(ring.radical(Rational(1) / params.s), k);
    QuadFn result = scale_quad(prefactor, bracket);
    require(result.irr.is_zero(), ErrorCode::irrational_residue,
            "radical component failed to cancel in the EPD closed form");
    return result.rat;
}

} // namespace treewave

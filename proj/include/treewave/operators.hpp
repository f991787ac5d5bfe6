#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treewave/error.hpp"
#include "treewave/function.hpp"
#include "treewave/polynomial.hpp"
#include "treewave/rational.hpp"
#include "treewave/tree.hpp"

namespace treewave {

/// Sum of f over the sphere of radius k around v (depth supplied by caller).
inline Rational sphere_sum_at(const TreeFunction& f, Vertex v, std::int64_t depth,
                              std::int64_t k) {
    Rational acc(0);
    f.ball()->for_each_in_sphere_at(v, depth, k, [&](Vertex w) { acc += f[w]; });
    return acc;
}

/**
 * Spherical mean of radius k: at every vertex of the shrunken domain, the
 * average of f over the k-sphere around it. Radius 0 is the identity. The
 * result's domain radius drops by exactly k.
 */
inline TreeFunction mean_value(const TreeFunction& f, std::int64_t k) {
    require(k >= 0, ErrorCode::bad_params, "mean value radius must be >= 0");
    const std::int64_t r = f.domain_radius();
    require(r >= k, ErrorCode::domain_too_small,
            "mean value of radius " + std::to_string(k) + " needs domain radius >= " +
                std::to_string(k) + ", have " + std::to_string(r));
    if (k == 0) return f;
    const TreeBall& ball = *f.ball();
    TreeFunction out(f.ball(), r - k);
    const Rational size(ball.sphere_size(k));
    for (std::int64_t m = 0; m + k <= r; ++m) {
        const Vertex begin = ball.layer_begin(m), end = ball.layer_end(m);
        for (Vertex v = begin; v < end; ++v) {
            Rational acc(0);
            ball.for_each_in_sphere_at(v, m, k, [&](Vertex w) { acc += f[w]; });
            out[v] = acc / size;
        }
    }
    return out;
}

/// Discrete Laplacian: mean over the neighbours minus the value.
inline TreeFunction laplacian(const TreeFunction& f) {
    return mean_value(f, 1) - f;
}

/// Unnormalized sphere-sum operator: sphere_size(n) * mean of radius n for
/// n >= 1, the identity for n = 0.
inline TreeFunction sigma_apply(std::int64_t n, const TreeFunction& f) {
    require(n >= 0, ErrorCode::bad_params, "sigma index must be >= 0");
    if (n == 0) return f;
    return Rational(f.ball()->sphere_size(n)) * mean_value(f, n);
}

/**
 * Horner evaluation of a polynomial in an arbitrary linear operator:
 * p(A)f where op applies A (and shrinks the domain by A's degree). The zero
 * polynomial yields the zero function on the unshrunk domain.
 */
template <typename Op>
TreeFunction apply_poly_with(const RationalPoly& p, const TreeFunction& f, Op&& op) {
    if (p.is_zero()) return TreeFunction(f.ball(), f.domain_radius());
    const std::int64_t d = p.degree();
    TreeFunction acc = p.coeff(d) * f;
    for (std::int64_t j = d - 1; j >= 0; --j) {
        acc = op(acc);
        if (p.coeff(j) != 0) acc = acc + p.coeff(j) * f;
    }
    return acc;
}

/// p(mu_1) f via Horner in the radius-1 mean.
inline TreeFunction apply_mu1_poly(const RationalPoly& p, const TreeFunction& f) {
    require(f.domain_radius() >= p.operator_degree(), ErrorCode::domain_too_small,
            "operator polynomial of degree " + std::to_string(p.operator_degree()) +
                " exceeds domain radius " + std::to_string(f.domain_radius()));
    return apply_poly_with(p, f, [](const TreeFunction& g) { return mean_value(g, 1); });
}

/**
 * U_n(A) f for any integer n, by the three-term recurrence on functions
 * (negative indices via U_{-n-1} = -U_{n-1}); avoids expanding coefficients.
 */
template <typename Op>
TreeFunction apply_cheb_U_with(std::int64_t n, const TreeFunction& f, Op&& op) {
    if (n == -1) return TreeFunction(f.ball(), f.domain_radius());
    if (n < -1) return -apply_cheb_U_with(-n - 2, f, op);
    TreeFunction prev(f.ball(), f.domain_radius()); // U_{-1}: zero
    TreeFunction cur = f;                           // U_0
    for (std::int64_t i = 1; i <= n; ++i) {
        TreeFunction next = Rational(2) * op(cur) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// T_n(A) f for any integer n (T_{-n} = T_n).
template <typename Op>
TreeFunction apply_cheb_T_with(std::int64_t n, const TreeFunction& f, Op&& op) {
    if (n < 0) n = -n;
    if (n == 0) return f;
    TreeFunction prev = f;      // T_0
    TreeFunction cur = op(f);   // T_1
    for (std::int64_t i = 2; i <= n; ++i) {
        TreeFunction next = Rational(2) * op(cur) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline TreeFunction apply_cheb_U(std::int64_t n, const TreeFunction& f) {
    return apply_cheb_U_with(n, f, [](const TreeFunction& g) { return mean_value(g, 1); });
}

inline TreeFunction apply_cheb_T(std::int64_t n, const TreeFunction& f) {
    return apply_cheb_T_with(n, f, [](const TreeFunction& g) { return mean_value(g, 1); });
}

/**
 * The iterated mean identity: the composition of the radius-k and radius-l
 * means expressed as a single linear combination of means,
 *
 *   mu_k mu_l = q/(q+1) mu_{k+l}
 *             + sum_{i=1}^{min(k,l)-1} (q-1)/(q^i (q+1)) mu_{k+l-2i}
 *             + 1/(q^{min(k,l)-1} (q+1)) mu_{|k-l|},
 *
 * evaluated on f. Degenerates to mu_{k+l} when either radius is zero.
 */
inline TreeFunction compose_mu(std::int64_t k, std::int64_t l, const TreeFunction& f) {
    require(k >= 0 && l >= 0, ErrorCode::bad_params, "mean radii must be >= 0");
    require(f.domain_radius() >= k + l, ErrorCode::domain_too_small,
            "composed means need domain radius >= " + std::to_string(k + l));
    if (k == 0 || l == 0) return mean_value(f, k + l);
    const std::int64_t q = f.q();
    const std::int64_t m = std::min(k, l);
    TreeFunction acc = Rational(q, q + 1) * mean_value(f, k + l);
    for (std::int64_t i = 1; i <= m - 1; ++i)
        acc = acc + Rational(q - 1, ipow(q, i) * (q + 1)) * mean_value(f, k + l - 2 * i);
    acc = acc + Rational(1, ipow(q, m - 1) * (q + 1)) * mean_value(f, k >= l ? k - l : l - k);
    return acc;
}

/**
 * Coefficients t_0..t_k with mu_1^k = sum_i t_i mu_i, obtained by repeatedly
 * folding mu_1 mu_i = q/(q+1) mu_{i+1} + 1/(q+1) mu_{i-1} (and mu_1 mu_0 =
 * mu_1). All t_i are nonnegative and sum to 1.
 */
inline std::vector<Rational> mu1_power_in_mu_basis(std::int64_t k, std::int64_t q) {
    require(k >= 0, ErrorCode::bad_params, "power must be >= 0");
    require(q >= 1, ErrorCode::bad_params, "branching parameter q must be >= 1");
    std::vector<Rational> t{Rational(1)};
    const Rational up(q, q + 1), down(1, q + 1);
    for (std::int64_t step = 0; step < k; ++step) {
        std::vector<Rational> nt(t.size() + 1, Rational(0));
        nt[1] += t[0];
        for (std::size_t i = 1; i < t.size(); ++i) {
            nt[i + 1] += up * t[i];
            nt[i - 1] += down * t[i];
        }
        t = std::move(nt);
    }
    return t;
}

/**
 * The radius-k mean as a degree-k polynomial in mu_1: P_0 = 1, P_1 = x,
 * P_{k+1} = (q+1)/q x P_k - 1/q P_{k-1}. Coefficients sum to 1.
 */
inline RationalPoly mu_k_poly(std::int64_t k, std::int64_t q) {
    require(k >= 0, ErrorCode::bad_params, "mean radius must be >= 0");
    require(q >= 1, ErrorCode::bad_params, "branching parameter q must be >= 1");
    if (k == 0) return RationalPoly::constant(Rational(1));
    RationalPoly prev = RationalPoly::constant(Rational(1));
    RationalPoly cur = RationalPoly::monomial(1, Rational(1));
    const RationalPoly scaled_x = RationalPoly::monomial(1, Rational(q + 1, q));
    for (std::int64_t i = 1; i < k; ++i) {
        RationalPoly next = scaled_x * cur - Rational(1, q) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/**
 * The same polynomial through the closed Dickson-style expression
 *
 *   (1/sqrt q)^k [ sqrt(q) x U_{k-1}(c x) - U_{k-2}(c x) ],  c = (q+1)/(2 sqrt q),
 *
 * evaluated in the formal ring Q[sqrt q]. The radical component must cancel
 * identically; a nonzero residue signals an implementation bug.
 */
inline RationalPoly dickson_mu_poly(std::int64_t k, std::int64_t q) {
    require(k >= 0, ErrorCode::bad_params, "mean radius must be >= 0");
    require(q >= 1, ErrorCode::bad_params, "branching parameter q must be >= 1");
    const QuadRing ring((Rational(q)));
    const QuadExt c = ring.radical(Rational(q + 1, 2 * q)); // (q+1)/(2 sqrt q)
    const QuadExtPoly u_top = cheb_U_scaled_arg(ring, k - 1, c);
    const QuadExtPoly u_low = cheb_U_scaled_arg(ring, k - 2, c);
    QuadExtPoly expr = QuadExtPoly::sub(
        ring, QuadExtPoly::scale(ring, ring.radical(Rational(1)), u_top.shifted()), u_low);
    expr = QuadExtPoly::scale(ring, ring.pow(ring.radical(Rational(1, q)), k), expr);
    require(expr.radical_part().is_zero(), ErrorCode::irrational_residue,
            "radical component failed to cancel in the closed mean polynomial");
    return expr.rational_part();
}

/// Sigma_1 = (q+1) mu_1.
inline TreeFunction apply_sigma1(const TreeFunction& f) {
    return Rational(f.q() + 1) * mean_value(f, 1);
}

/// p(Sigma_1) f via Horner in the unnormalized radius-1 sum.
inline TreeFunction apply_poly_in_sigma1(const RationalPoly& p, const TreeFunction& f) {
    require(f.domain_radius() >= p.operator_degree(), ErrorCode::domain_too_small,
            "operator polynomial of degree " + std::to_string(p.operator_degree()) +
                " exceeds domain radius " + std::to_string(f.domain_radius()));
    return apply_poly_with(p, f, [](const TreeFunction& g) { return apply_sigma1(g); });
}

// ---------------------------------------------------------------------------
// Operator expressions: a linear operator written either as a polynomial in
// mu_1 or as a linear combination of the means mu_0..mu_k.
// ---------------------------------------------------------------------------

struct OperatorExpr {
    enum class Basis { mu1_poly, mu_combination };

    Basis basis = Basis::mu1_poly;
    std::vector<Rational> coefficients; // power-of-mu_1 or per-radius weights

    /// Highest power / highest radius; equals the domain shrink on apply.
    std::int64_t top_index() const {
        return coefficients.empty() ? 0 : static_cast<std::int64_t>(coefficients.size()) - 1;
    }

    static OperatorExpr from_poly(const RationalPoly& p) {
        return {Basis::mu1_poly, p.coefficients()};
    }

    static OperatorExpr combination(std::vector<Rational> c) {
        return {Basis::mu_combination, std::move(c)};
    }
};

inline TreeFunction apply_operator(const OperatorExpr& expr, const TreeFunction& f) {
    if (expr.basis == OperatorExpr::Basis::mu1_poly)
        return apply_mu1_poly(RationalPoly(std::vector<Rational>(expr.coefficients)), f);
    const std::int64_t k = expr.top_index();
    require(f.domain_radius() >= k, ErrorCode::domain_too_small,
            "mu-combination of top radius " + std::to_string(k) + " exceeds domain radius " +
                std::to_string(f.domain_radius()));
    TreeFunction acc(f.ball(), f.domain_radius() - k);
    for (std::size_t i = 0; i < expr.coefficients.size(); ++i) {
        if (expr.coefficients[i] == 0) continue;
        acc = acc + expr.coefficients[i] * mean_value(f, static_cast<std::int64_t>(i));
    }
    return acc;
}

/// Exact change of basis: a polynomial in mu_1 as a combination of means.
inline OperatorExpr mu1_poly_to_mu_combination(const RationalPoly& p, std::int64_t q) {
    if (p.is_zero()) return OperatorExpr::combination({Rational(0)});
    std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
    for (std::int64_t j = 0; j <= p.degree(); ++j) {
        if (p.coeff(j) == 0) continue;
        const auto t = mu1_power_in_mu_basis(j, q);
        for (std::size_t i = 0; i < t.size(); ++i) c[i] += p.coeff(j) * t[i];
    }
    return OperatorExpr::combination(std::move(c));
}

/// Exact change of basis: a combination of means as a polynomial in mu_1.
inline RationalPoly mu_combination_to_mu1_poly(const OperatorExpr& expr, std::int64_t q) {
    require(expr.basis == OperatorExpr::Basis::mu_combination, ErrorCode::bad_params,
            "expected a mu-combination");
    RationalPoly p;
    for (std::size_t i = 0; i < expr.coefficients.size(); ++i) {
        if (expr.coefficients[i] == 0) continue;
        p = p + expr.coefficients[i] * mu_k_poly(static_cast<std::int64_t>(i), q);
    }
    return p;
}

/// How the underdetermined outward-cone values are fixed when inverting a
/// surjective operator. Any choice works; exposing two witnesses that the
/// preimage is not unique.
enum class FreePolicy { equal_distribution, first_vertex };

inline FreePolicy free_policy_from_string(const std::string& name) {
    if (name == "equal") return FreePolicy::equal_distribution;
    if (name == "first") return FreePolicy::first_vertex;
    fail(ErrorCode::bad_params, "unknown policy '" + name + "' (expected equal|first)");
}

/**
 * Constructive right-inverse of Q = sum_i c_i mu_i with c_k != 0: returns f
 * with domain radius M + k such that Qf = g on the whole domain of g.
 *
 * f vanishes on the ball of radius k-1; the sphere of radius k around the
 * root absorbs g(root)/c_k; then layer by layer every vertex v fixes the
 * values on its q^k outward-cone vertices so that mu_k f(v) lands exactly on
 * the residual left by the already-determined values. Cones of distinct
 * vertices are disjoint, so the sweep never revisits a value.
 */
inline TreeFunction solve_surjective(const OperatorExpr& q_expr, const TreeFunction& g,
                                     FreePolicy policy = FreePolicy::equal_distribution) {
    require(q_expr.basis == OperatorExpr::Basis::mu_combination, ErrorCode::bad_params,
            "solve_surjective expects a mu-combination");
    require(!q_expr.coefficients.empty() && q_expr.coefficients.back() != 0,
            ErrorCode::zero_top_coefficient,
            "top coefficient of the mu-combination must be nonzero");
    const std::int64_t k = q_expr.top_index();
    const Rational& top = q_expr.coefficients.back();
    if (k == 0) return Rational(1) / top * g;

    const TreeBall& ball = *g.ball();
    const std::int64_t m_max = g.domain_radius();
    require(ball.radius() >= m_max + k, ErrorCode::insufficient_radius,
            "need ambient radius >= " + std::to_string(m_max + k) + ", have " +
                std::to_string(ball.radius()));

    TreeFunction f(g.ball(), m_max + k);
    const Rational sphere_count(ball.sphere_size(k));
    for (std::int64_t m = 0; m <= m_max; ++m) {
        const Vertex begin = ball.layer_begin(m), end = ball.layer_end(m);
        for (Vertex v = begin; v < end; ++v) {
            Rational needed = g[v];
            for (std::int64_t i = 0; i < k; ++i) {
                const Rational& ci = q_expr.coefficients[static_cast<std::size_t>(i)];
                if (ci == 0) continue;
                needed -= ci * (sphere_sum_at(f, v, m, i) / Rational(ball.sphere_size(i)));
            }
            // total sphere sum that makes c_k mu_k f(v) close the gap
            Rational target = needed * sphere_count / top;
            Rational delta = target - sphere_sum_at(f, v, m, k);
            const auto [cb, ce] = ball.descendant_range_at(v, m, k);
            if (policy == FreePolicy::equal_distribution) {
                const Rational share = delta / Rational(ce - cb);
                for (Vertex w = cb; w < ce; ++w) f[w] = share;
            } else {
                f[cb] = delta;
            }
        }
    }
    return f;
}

} // namespace treewave

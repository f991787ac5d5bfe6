#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treewave/error.hpp"
#include "treewave/rational.hpp"

namespace treewave {

/**
 * Univariate polynomial over exact rationals, coefficients stored lowest
 * degree first with no trailing zeros (the zero polynomial is empty).
 */
class RationalPoly {
public:
    RationalPoly() = default;

    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly constant(const Rational& a) {
        return RationalPoly(std::vector<Rational>{a});
    }

    static RationalPoly monomial(std::int64_t degree, const Rational& a) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
        c.back() = a;
        return RationalPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    /// Domain shrink caused by applying this polynomial as an operator
    /// (the zero operator shrinks nothing).
    std::int64_t operator_degree() const { return is_zero() ? 0 : degree(); }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational coeff(std::int64_t i) const {
        if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }

    const Rational& leading() const { return c_.back(); }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return RationalPoly(std::move(c));
    }

    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return RationalPoly(std::move(c));
    }

    RationalPoly operator-() const {
        std::vector<Rational> c(c_);
        for (auto& x : c) x = -x;
        return RationalPoly(std::move(c));
    }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) return RationalPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return RationalPoly(std::move(c));
    }

    friend RationalPoly operator*(const Rational& s, const RationalPoly& p) {
        std::vector<Rational> c(p.c_);
        for (auto& x : c) x *= s;
        return RationalPoly(std::move(c));
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    /// Multiply by x^k.
    RationalPoly shifted(std::int64_t k) const {
        if (is_zero()) return RationalPoly();
        std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return RationalPoly(std::move(c));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += rational_to_string(c_[i]);
            if (i > 0) s += "*x^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Quotient and remainder of exact long division (b must be nonzero).
inline std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a,
                                                         const RationalPoly& b) {
    require(!b.is_zero(), ErrorCode::bad_params, "polynomial division by zero");
    if (a.degree() < b.degree()) return {RationalPoly(), a};
    std::vector<Rational> rem(a.coefficients());
    const std::int64_t dq = a.degree() - b.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
    const Rational& lead = b.leading();
    for (std::int64_t i = dq; i >= 0; --i) {
        Rational factor = rem[static_cast<std::size_t>(i + b.degree())] / lead;
        quot[static_cast<std::size_t>(i)] = factor;
        if (factor == 0) continue;
        for (std::int64_t j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(i + j)] -= factor * b.coeff(j);
    }
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

/// Exact quotient; raises non-divisible if the remainder is nonzero.
inline RationalPoly poly_div_exact(const RationalPoly& a, const RationalPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    require(r.is_zero(), ErrorCode::non_divisible,
            "polynomial division left remainder " + r.to_string());
    return q;
}

/// Monic greatest common divisor via the Euclidean algorithm.
inline RationalPoly poly_gcd(const RationalPoly& a, const RationalPoly& b) {
    require(!a.is_zero() || !b.is_zero(), ErrorCode::both_zero, "gcd of two zero polynomials");
    RationalPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        (void)q;
        r0 = r1;
        r1 = r;
    }
    return Rational(1) / r0.leading() * r0;
}

struct BezoutResult {
    RationalPoly q; // multiplies a
    RationalPoly r; // multiplies b
    RationalPoly g; // monic gcd: a*q + b*r = g
};

/// Extended Euclid, scaled so that a*q + b*r equals the monic gcd exactly.
inline BezoutResult bezout(const RationalPoly& a, const RationalPoly& b) {
    require(!a.is_zero() || !b.is_zero(), ErrorCode::both_zero, "bezout of two zero polynomials");
    RationalPoly r0 = a, r1 = b;
    RationalPoly s0 = RationalPoly::constant(1), s1;
    RationalPoly t0, t1 = RationalPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        RationalPoly s2 = s0 - q * s1;
        RationalPoly t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    const Rational scale = Rational(1) / r0.leading();
    return {scale * s0, scale * t0, scale * r0};
}

/// Chebyshev polynomial of the second kind, any integer index:
/// U_0 = 1, U_1 = 2x, U_n = 2x U_{n-1} - U_{n-2}; U_{-1} = 0 and
/// U_{-n-1} = -U_{n-1}, so the recurrence holds for every index.
inline RationalPoly cheb_U(std::int64_t n) {
    if (n == -1) return RationalPoly();
    if (n < -1) return -cheb_U(-n - 2);
    RationalPoly prev;                            // U_{-1}
    RationalPoly cur = RationalPoly::constant(1); // U_0
    const RationalPoly two_x = RationalPoly::monomial(1, Rational(2));
    for (std::int64_t i = 1; i <= n; ++i) {
        RationalPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Chebyshev polynomial of the first kind; T_{-n} = T_n.
inline RationalPoly cheb_T(std::int64_t n) {
    if (n < 0) n = -n;
    RationalPoly prev = RationalPoly::constant(1);      // T_0
    RationalPoly cur = RationalPoly::monomial(1, Rational(1)); // T_1
    if (n == 0) return prev;
    const RationalPoly two_x = RationalPoly::monomial(1, Rational(2));
    for (std::int64_t i = 2; i <= n; ++i) {
        RationalPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Geronimus-type family: p_0 = 1, p_1 = x, p_2 = x^2 - (q+1), and
/// p_{n+1} = x p_n - q p_{n-1} for n >= 2. Note the recurrence starts from
/// the given p_2; the n = 1 step would produce x^2 - q instead.
inline RationalPoly geronimus_p(std::int64_t n, std::int64_t q) {
    require(n >= 0, ErrorCode::bad_params, "geronimus index must be >= 0");
    require(q >= 1, ErrorCode::bad_params, "branching parameter q must be >= 1");
    const RationalPoly x = RationalPoly::monomial(1, Rational(1));
    if (n == 0) return RationalPoly::constant(1);
    if (n == 1) return x;
    RationalPoly prev = x;  // p_1
    RationalPoly cur = x * x - RationalPoly::constant(Rational(q + 1)); // p_2
    for (std::int64_t i = 2; i < n; ++i) {
        RationalPoly next = x * cur - Rational(q) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Formal quadratic extension Q[sqrt(rho)] for a rational radicand rho. The
// radical is treated formally even when rho is a perfect square; only the
// relation sqrt(rho)^2 = rho is used.
// ---------------------------------------------------------------------------

/// Element a + b*sqrt(rho); the ambient radicand lives in QuadRing.
struct QuadExt {
    Rational a; // rational part
    Rational b; // coefficient of sqrt(rho)

    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
    bool is_rational() const { return b == 0; }
};

class QuadRing {
public:
    explicit QuadRing(Rational radicand) : rho_(std::move(radicand)) {
        require(rho_ > 0, ErrorCode::bad_params, "radicand must be positive");
    }

    const Rational& radicand() const { return rho_; }

    QuadExt from_rational(const Rational& a) const { return {a, Rational(0)}; }
    QuadExt radical(const Rational& b) const { return {Rational(0), b}; }

    QuadExt add(const QuadExt& x, const QuadExt& y) const { return {x.a + y.a, x.b + y.b}; }
    QuadExt sub(const QuadExt& x, const QuadExt& y) const { return {x.a - y.a, x.b - y.b}; }
    QuadExt neg(const QuadExt& x) const { return {-x.a, -x.b}; }

    QuadExt mul(const QuadExt& x, const QuadExt& y) const {
        return {x.a * y.a + rho_ * x.b * y.b, x.a * y.b + x.b * y.a};
    }

    QuadExt pow(QuadExt x, std::int64_t n) const {
        require(n >= 0, ErrorCode::bad_params, "negative quad power");
        QuadExt acc = from_rational(Rational(1));
        for (std::int64_t i = 0; i < n; ++i) acc = mul(acc, x);
        return acc;
    }

private:
    Rational rho_;
};

/// Polynomial with QuadExt coefficients, lowest degree first.
class QuadExtPoly {
public:
    QuadExtPoly() = default;
    explicit QuadExtPoly(std::vector<QuadExt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QuadExtPoly constant(const QuadExt& x) {
        return QuadExtPoly(std::vector<QuadExt>{x});
    }

    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<QuadExt>& coefficients() const { return c_; }

    static QuadExtPoly add(const QuadRing& ring, const QuadExtPoly& x, const QuadExtPoly& y) {
        std::vector<QuadExt> c(std::max(x.c_.size(), y.c_.size()), QuadExt{Rational(0), Rational(0)});
        for (std::size_t i = 0; i < x.c_.size(); ++i) c[i] = ring.add(c[i], x.c_[i]);
        for (std::size_t i = 0; i < y.c_.size(); ++i) c[i] = ring.add(c[i], y.c_[i]);
        return QuadExtPoly(std::move(c));
    }

    static QuadExtPoly sub(const QuadRing& ring, const QuadExtPoly& x, const QuadExtPoly& y) {
        return add(ring, x, scale(ring, ring.from_rational(Rational(-1)), y));
    }

    static QuadExtPoly scale(const QuadRing& ring, const QuadExt& s, const QuadExtPoly& x) {
        std::vector<QuadExt> c(x.c_);
        for (auto& v : c) v = ring.mul(s, v);
        return QuadExtPoly(std::move(c));
    }

    /// Multiply by x (degree shift).
    QuadExtPoly shifted() const {
        if (is_zero()) return QuadExtPoly();
        std::vector<QuadExt> c;
        c.reserve(c_.size() + 1);
        c.push_back(QuadExt{Rational(0), Rational(0)});
        c.insert(c.end(), c_.begin(), c_.end());
        return QuadExtPoly(std::move(c));
    }

    /// The two rational polynomials A, B with this = A + sqrt(rho) * B.
    RationalPoly rational_part() const {
        std::vector<Rational> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(v.a);
        return RationalPoly(std::move(c));
    }

    RationalPoly radical_part() const {
        std::vector<Rational> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(v.b);
        return RationalPoly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().a == 0 && c_.back().b == 0) c_.pop_back();
    }

    std::vector<QuadExt> c_;
};

/// U_n(s*x) as a QuadExt polynomial in x, for any integer n and QuadExt
/// scale s, via the three-term recurrence (negative indices by U_{-n-1} = -U_{n-1}).
inline QuadExtPoly cheb_U_scaled_arg(const QuadRing& ring, std::int64_t n, const QuadExt& s) {
    if (n == -1) return QuadExtPoly();
    if (n < -1)
        return QuadExtPoly::scale(ring, ring.from_rational(Rational(-1)),
                                  cheb_U_scaled_arg(ring, -n - 2, s));
    QuadExtPoly prev;                                                        // U_{-1}
    QuadExtPoly cur = QuadExtPoly::constant(ring.from_rational(Rational(1))); // U_0
    const QuadExt two_s = ring.mul(ring.from_rational(Rational(2)), s);
    for (std::int64_t i = 1; i <= n; ++i) {
        QuadExtPoly next =
            QuadExtPoly::sub(ring, QuadExtPoly::scale(ring, two_s, cur.shifted()), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace treewave

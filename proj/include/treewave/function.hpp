#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "treewave/error.hpp"
#include "treewave/rational.hpp"
#include "treewave/tree.hpp"

namespace treewave {

/**
 * Rational-valued function on a ball of the tree, tagged with the radius on
 * which its values are valid. Operators shrink the domain radius by their
 * degree; arithmetic between two functions intersects domains. Pure value
 * type: copies are independent.
 */
class TreeFunction {
public:
    TreeFunction(TreeBallPtr ball, std::int64_t domain_radius)
        : ball_(std::move(ball)), domain_radius_(domain_radius) {
        require(ball_ != nullptr, ErrorCode::bad_params, "null ball");
        require(domain_radius_ >= 0 && domain_radius_ <= ball_->radius(),
                ErrorCode::bad_params, "domain radius outside the ball");
        values_.assign(static_cast<std::size_t>(ball_->ball_size(domain_radius_)), Rational(0));
    }

    TreeFunction(TreeBallPtr ball, std::int64_t domain_radius, std::vector<Rational> values)
        : ball_(std::move(ball)), domain_radius_(domain_radius), values_(std::move(values)) {
        require(ball_ != nullptr, ErrorCode::bad_params, "null ball");
        require(domain_radius_ >= 0 && domain_radius_ <= ball_->radius(),
                ErrorCode::bad_params, "domain radius outside the ball");
        require(static_cast<std::int64_t>(values_.size()) == ball_->ball_size(domain_radius_),
                ErrorCode::bad_params, "value count does not match the domain ball");
    }

    static TreeFunction constant(TreeBallPtr ball, std::int64_t domain_radius, const Rational& c) {
        TreeFunction f(std::move(ball), domain_radius);
        for (auto& v : f.values_) v = c;
        return f;
    }

    static TreeFunction indicator(TreeBallPtr ball, std::int64_t domain_radius, Vertex at) {
        TreeFunction f(std::move(ball), domain_radius);
        require(at >= 0 && at < f.vertex_count(), ErrorCode::invalid_index,
                "indicator vertex outside domain");
        f.values_[static_cast<std::size_t>(at)] = 1;
        return f;
    }

    /// Seeded random function; the seed fully determines every value.
    static TreeFunction random(TreeBallPtr ball, std::int64_t domain_radius, SeededRng& rng) {
        TreeFunction f(std::move(ball), domain_radius);
        for (auto& v : f.values_) v = rng.next_small_rational();
        return f;
    }

    const TreeBallPtr& ball() const { return ball_; }
    std::int64_t q() const { return ball_->q(); }
    std::int64_t domain_radius() const { return domain_radius_; }
    std::int64_t vertex_count() const { return static_cast<std::int64_t>(values_.size()); }

    const Rational& at(Vertex v) const {
        require(v >= 0 && v < vertex_count(), ErrorCode::invalid_index,
                "vertex outside function domain");
        return values_[static_cast<std::size_t>(v)];
    }

    Rational& mutable_at(Vertex v) {
        require(v >= 0 && v < vertex_count(), ErrorCode::invalid_index,
                "vertex outside function domain");
        return values_[static_cast<std::size_t>(v)];
    }

    const std::vector<Rational>& values() const { return values_; }

    const Rational& operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
    Rational& operator[](Vertex v) { return values_[static_cast<std::size_t>(v)]; }

    bool same_ball(const TreeFunction& other) const {
        return ball_->q() == other.ball_->q() && ball_->radius() == other.ball_->radius();
    }

    /// Copy restricted to a smaller domain radius.
    TreeFunction restricted(std::int64_t r) const {
        require(r >= 0 && r <= domain_radius_, ErrorCode::domain_too_small,
                "cannot restrict to radius " + std::to_string(r) + " from " +
                    std::to_string(domain_radius_));
        std::vector<Rational> vals(values_.begin(), values_.begin() + ball_->ball_size(r));
        return TreeFunction(ball_, r, std::move(vals));
    }

    TreeFunction operator-() const {
        TreeFunction out(ball_, domain_radius_);
        for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = -values_[i];
        return out;
    }

    friend TreeFunction operator+(const TreeFunction& a, const TreeFunction& b) {
        return combine(a, b, +1);
    }

    friend TreeFunction operator-(const TreeFunction& a, const TreeFunction& b) {
        return combine(a, b, -1);
    }

    friend TreeFunction operator*(const Rational& c, const TreeFunction& f) {
        TreeFunction out(f.ball_, f.domain_radius_);
        for (std::size_t i = 0; i < f.values_.size(); ++i) out.values_[i] = c * f.values_[i];
        return out;
    }

    TreeFunction& operator+=(const TreeFunction& b) { return *this = *this + b; }
    TreeFunction& operator-=(const TreeFunction& b) { return *this = *this - b; }

    bool is_zero() const {
        for (const auto& v : values_)
            if (v != 0) return false;
        return true;
    }

    /// max |f| over the domain (reporting aid; comparisons stay exact).
    Rational max_abs() const {
        Rational m(0);
        for (const auto& v : values_) {
            Rational a = abs(v);
            if (a > m) m = a;
        }
        return m;
    }

private:
    static TreeFunction combine(const TreeFunction& a, const TreeFunction& b, int sign) {
        require(a.same_ball(b), ErrorCode::mismatched_functions,
                "functions live on different balls");
        const std::int64_t r = std::min(a.domain_radius_, b.domain_radius_);
        TreeFunction out(a.ball_, r);
        const std::size_t n = out.values_.size();
        if (sign > 0)
            for (std::size_t i = 0; i < n; ++i) out.values_[i] = a.values_[i] + b.values_[i];
        else
            for (std::size_t i = 0; i < n; ++i) out.values_[i] = a.values_[i] - b.values_[i];
        return out;
    }

    TreeBallPtr ball_;
    std::int64_t domain_radius_;
    std::vector<Rational> values_;
};

/// Exact equality on the largest domain both sides cover.
inline bool equal_on_common_domain(const TreeFunction& a, const TreeFunction& b) {
    return (a - b).is_zero();
}

/// Difference on the common domain (the residual of an identity check).
inline TreeFunction residual(const TreeFunction& a, const TreeFunction& b) { return a - b; }

} // namespace treewave

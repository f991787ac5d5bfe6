#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

#include "treewave/error.hpp"

namespace treewave {

/// Exact arbitrary-precision rational scalar. All functional values,
/// polynomial coefficients and operator weights are Rationals; nothing in the
/// library ever rounds.
using Rational = mpq_class;

/// Canonical fraction string: "p/q" in lowest terms, "p" when q == 1.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

/// Parses "p", "-p", "p/q". Rejects anything else (decimals in particular).
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) fail(ErrorCode::parse_error, "empty rational literal");
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
            seen_digit = false; // denominator must contribute digits too
        } else {
            fail(ErrorCode::parse_error, "malformed rational literal: " + text);
        }
    }
    if (!seen_digit) fail(ErrorCode::parse_error, "malformed rational literal: " + text);
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        fail(ErrorCode::parse_error, "malformed rational literal: " + text);
    if (sgn(r.get_den()) == 0)
        fail(ErrorCode::parse_error, "zero denominator: " + text);
    r.canonicalize();
    return r;
}

/// Display-only decimal rendering (lossy; files always use fraction strings).
inline std::string rational_to_decimal(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", mpq_get_d(r.get_mpq_t()));
    return buf;
}

inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < exp; ++i) result *= base;
    return result;
}

/// Deterministic RNG for generated test functions. Draws are reduced by
/// modulo so a seed yields identical streams on every platform, which the
/// file-level determinism guarantees rely on.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return engine_() % bound; }

    /// Uniform numerator in [-9, 9], denominator in {1, 2, 3}.
    Rational next_small_rational() {
        const auto num = static_cast<long>(next(19)) - 9;
        const auto den = static_cast<long>(next(3)) + 1;
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    /// As above but never zero (used where a coefficient must not vanish).
    Rational next_small_nonzero_rational() {
        Rational r = next_small_rational();
        while (r == 0) r = next_small_rational();
        return r;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace treewave

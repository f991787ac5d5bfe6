#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "treewave/error.hpp"
#include "treewave/function.hpp"
#include "treewave/operators.hpp"
#include "treewave/polynomial.hpp"
#include "treewave/rational.hpp"
#include "treewave/tree.hpp"
#include "treewave/wave.hpp"

namespace treewave {

using nlohmann::json;

// Rationals travel as exact fraction strings ("p/q" or "p"), never floats.

inline json rationals_to_json(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(rational_to_string(v));
    return arr;
}

inline std::vector<Rational> rationals_from_json(const json& arr) {
    require(arr.is_array(), ErrorCode::parse_error, "expected an array of fraction strings");
    std::vector<Rational> values;
    values.reserve(arr.size());
    for (const auto& item : arr) {
        require(item.is_string(), ErrorCode::parse_error, "expected a fraction string");
        values.push_back(rational_from_string(item.get<std::string>()));
    }
    return values;
}

inline json function_to_json(const TreeFunction& f) {
    return json{{"q", f.ball()->q()},
                {"R", f.ball()->radius()},
                {"domain_radius", f.domain_radius()},
                {"values", rationals_to_json(f.values())}};
}

inline TreeFunction function_from_json(const json& j, TreeBallPtr ball = nullptr) {
    require(j.is_object() && j.contains("q") && j.contains("R") &&
                j.contains("domain_radius") && j.contains("values"),
            ErrorCode::parse_error, "function file needs q, R, domain_radius, values");
    const auto q = j.at("q").get<std::int64_t>();
    const auto radius = j.at("R").get<std::int64_t>();
    if (!ball || ball->q() != q || ball->radius() != radius) ball = build_tree(q, radius);
    return TreeFunction(ball, j.at("domain_radius").get<std::int64_t>(),
                        rationals_from_json(j.at("values")));
}

inline json cauchy_to_json(const CauchyData& c) {
    return json{{"q", c.f0.ball()->q()},
                {"R", c.f0.ball()->radius()},
                {"domain_radius", c.domain_radius()},
                {"f0", rationals_to_json(c.f0.values())},
                {"f1", rationals_to_json(c.f1.values())}};
}

inline CauchyData cauchy_from_json(const json& j) {
    require(j.is_object() && j.contains("q") && j.contains("R") &&
                j.contains("domain_radius") && j.contains("f0") && j.contains("f1"),
            ErrorCode::parse_error, "Cauchy file needs q, R, domain_radius, f0, f1");
    TreeBallPtr ball = build_tree(j.at("q").get<std::int64_t>(), j.at("R").get<std::int64_t>());
    const auto r = j.at("domain_radius").get<std::int64_t>();
    return CauchyData(TreeFunction(ball, r, rationals_from_json(j.at("f0"))),
                      TreeFunction(ball, r, rationals_from_json(j.at("f1"))));
}

inline json operator_expr_to_json(const OperatorExpr& expr) {
    return json{{"basis", expr.basis == OperatorExpr::Basis::mu1_poly ? "mu1_poly"
                                                                      : "mu_combination"},
                {"coefficients", rationals_to_json(expr.coefficients)}};
}

inline OperatorExpr operator_expr_from_json(const json& j) {
    require(j.is_object() && j.contains("basis") && j.contains("coefficients"),
            ErrorCode::parse_error, "operator file needs basis and coefficients");
    const std::string basis = j.at("basis").get<std::string>();
    OperatorExpr expr;
    if (basis == "mu1_poly") expr.basis = OperatorExpr::Basis::mu1_poly;
    else if (basis == "mu_combination") expr.basis = OperatorExpr::Basis::mu_combination;
    else fail(ErrorCode::parse_error, "unknown operator basis: " + basis);
    expr.coefficients = rationals_from_json(j.at("coefficients"));
    return expr;
}

inline json poly_to_json(const RationalPoly& p) { return rationals_to_json(p.coefficients()); }

inline RationalPoly poly_from_json(const json& j) {
    return RationalPoly(rationals_from_json(j));
}

/// Canonical serialization: fixed two-space indent and a trailing newline,
/// so identical inputs always produce identical bytes.
inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::io_error, "cannot open for writing: " + path);
    out << dump_json(j);
    require(out.good(), ErrorCode::io_error, "write failed: " + path);
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorCode::io_error, "cannot open: " + path);
    json j = json::parse(in, nullptr, false);
    require(!j.is_discarded(), ErrorCode::parse_error, "malformed JSON: " + path);
    return j;
}

/// Display-only CSV (vertex index, layer, decimal value). Lossy by design;
/// the JSON files are the exact artifacts.
inline std::string function_to_csv(const TreeFunction& f) {
    std::ostringstream out;
    out << "vertex,layer,value\n";
    const TreeBall& ball = *f.ball();
    for (std::int64_t m = 0; m <= f.domain_radius(); ++m)
        for (Vertex v = ball.layer_begin(m); v < ball.layer_end(m); ++v)
            out << v << ',' << m << ',' << rational_to_decimal(f[v]) << '\n';
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::io_error, "cannot open for writing: " + path);
    out << text;
    require(out.good(), ErrorCode::io_error, "write failed: " + path);
}

} // namespace treewave

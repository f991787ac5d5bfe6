// treewave: command-line surface for exact wave, snapshot-reconstruction and
// two-circle computations on finite balls of homogeneous trees. All file
// artifacts carry exact fraction strings; outputs are byte-identical for
// identical inputs and flags.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treewave/error.hpp"
#include "treewave/io.hpp"
#include "treewave/operators.hpp"
#include "treewave/pompeiu.hpp"
#include "treewave/reconstruction.hpp"
#include "treewave/suites.hpp"
#include "treewave/tree.hpp"
#include "treewave/wave.hpp"

namespace fs = std::filesystem;
using treewave::json;

namespace {

struct ReconstructArgs {
    std::vector<std::string> files;
    std::int64_t k = 0;
    std::int64_t ell = 0;
    std::string policy = "equal";
    std::string out_dir = ".";
};

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    treewave::require(!ec, treewave::ErrorCode::io_error,
                      "cannot create output directory: " + dir);
}

json residual_entry(std::int64_t time, const treewave::TreeFunction& got,
                    const treewave::TreeFunction& want) {
    treewave::TreeFunction diff = got - want;
    return {{"time", time},
            {"domain_radius", diff.domain_radius()},
            {"max_abs_residual", treewave::rational_to_string(diff.max_abs())},
            {"zero", diff.is_zero()}};
}

int cmd_tree_info(std::int64_t q, std::int64_t radius) {
    const auto ball = treewave::build_tree(q, radius);
    std::cout << "tree: degree " << q + 1 << " (q=" << q << "), ball radius " << radius << "\n";
    std::cout << "vertices: " << ball->vertex_count() << "\n\n";
    std::cout << "layer  size  cumulative\n";
    for (std::int64_t m = 0; m <= radius; ++m)
        std::cout << m << "  " << ball->layer_size(m) << "  " << ball->ball_size(m) << "\n";
    std::cout << "\noperator degree -> available domain radius\n";
    for (std::int64_t d = 0; d <= radius; ++d)
        std::cout << d << " -> " << radius - d << "\n";
    return 0;
}

int cmd_simulate(const std::string& cauchy_path, const std::vector<std::int64_t>& times,
                 const std::string& out_dir, bool csv) {
    const treewave::CauchyData cauchy =
        treewave::cauchy_from_json(treewave::read_json_file(cauchy_path));
    ensure_out_dir(out_dir);
    for (const auto t : times) {
        const treewave::TreeFunction snap = treewave::propagate(cauchy, t);
        const std::string stem = (fs::path(out_dir) / ("snapshot_" + std::to_string(t))).string();
        treewave::write_json_file(stem + ".json", treewave::function_to_json(snap));
        if (csv) treewave::write_text_file(stem + ".csv", treewave::function_to_csv(snap));
        std::cout << "time " << t << ": domain radius " << snap.domain_radius() << " -> "
                  << stem << ".json\n";
    }
    return 0;
}

int cmd_reconstruct_two(const ReconstructArgs& args) {
    const treewave::TreeFunction g =
        treewave::function_from_json(treewave::read_json_file(args.files[0]));
    const treewave::TreeFunction h =
        treewave::function_from_json(treewave::read_json_file(args.files[1]), g.ball());
    const treewave::CauchyData rebuilt =
        treewave::two_snapshot_solve(g, h, args.k, treewave::free_policy_from_string(args.policy));
    ensure_out_dir(args.out_dir);
    treewave::write_json_file((fs::path(args.out_dir) / "cauchy.json").string(),
                              treewave::cauchy_to_json(rebuilt));
    json report = {{"times", {0, args.k}},
                   {"policy", args.policy},
                   {"residuals",
                    {residual_entry(0, treewave::propagate(rebuilt, 0), g),
                     residual_entry(args.k, treewave::propagate(rebuilt, args.k), h)}}};
    bool all_zero = true;
    for (const auto& r : report["residuals"])
        if (!r["zero"].get<bool>()) all_zero = false;
    report["all_zero"] = all_zero;
    treewave::write_json_file((fs::path(args.out_dir) / "report.json").string(), report);
    std::cout << treewave::dump_json(report);
    return all_zero ? 0 : 1;
}

int cmd_reconstruct_three(const ReconstructArgs& args) {
    const treewave::TreeFunction f =
        treewave::function_from_json(treewave::read_json_file(args.files[0]));
    const treewave::TreeFunction g =
        treewave::function_from_json(treewave::read_json_file(args.files[1]), f.ball());
    const treewave::TreeFunction h =
        treewave::function_from_json(treewave::read_json_file(args.files[2]), f.ball());
    const treewave::CauchyData rebuilt = treewave::three_snapshot_solve(
        f, g, h, args.k, args.ell, treewave::free_policy_from_string(args.policy));
    ensure_out_dir(args.out_dir);
    treewave::write_json_file((fs::path(args.out_dir) / "cauchy.json").string(),
                              treewave::cauchy_to_json(rebuilt));
    json report = {{"times", {0, args.k, args.ell}},
                   {"policy", args.policy},
                   {"gcd_time", std::gcd(args.k, args.ell)},
                   {"residuals",
                    {residual_entry(0, treewave::propagate(rebuilt, 0), f),
                     residual_entry(args.k, treewave::propagate(rebuilt, args.k), g),
                     residual_entry(args.ell, treewave::propagate(rebuilt, args.ell), h)}}};
    bool all_zero = true;
    for (const auto& r : report["residuals"])
        if (!r["zero"].get<bool>()) all_zero = false;
    report["all_zero"] = all_zero;
    treewave::write_json_file((fs::path(args.out_dir) / "report.json").string(), report);
    std::cout << treewave::dump_json(report);
    return all_zero ? 0 : 1;
}

int cmd_pompeiu_check(const std::string& g_path, const std::string& h_path, std::int64_t k,
                      std::int64_t ell) {
    const treewave::TreeFunction g =
        treewave::function_from_json(treewave::read_json_file(g_path));
    const treewave::TreeFunction h =
        treewave::function_from_json(treewave::read_json_file(h_path), g.ball());
    const auto check = treewave::two_circle_check(g, h, k, ell);
    bool coprime = true;
    try {
        treewave::pompeiu_bezout(k, ell, g.q());
    } catch (const treewave::Error&) {
        coprime = false;
    }
    const json report = {
        {"k", k},
        {"l", ell},
        {"q", g.q()},
        {"condition", treewave::pompeiu_condition(k, ell, g.q())},
        {"coprime_polynomials", coprime},
        {"targets_consistent", check.consistent},
        {"max_abs_residual", treewave::rational_to_string(check.residual.max_abs())}};
    std::cout << treewave::dump_json(report);
    return 0;
}

int cmd_pompeiu_solve(const std::string& g_path, const std::string& h_path, std::int64_t k,
                      std::int64_t ell, const std::string& out_dir) {
    const treewave::TreeFunction g =
        treewave::function_from_json(treewave::read_json_file(g_path));
    const treewave::TreeFunction h =
        treewave::function_from_json(treewave::read_json_file(h_path), g.ball());
    const treewave::TreeFunction f = treewave::two_circle_solve(g, h, k, ell);
    ensure_out_dir(out_dir);
    treewave::write_json_file((fs::path(out_dir) / "f.json").string(),
                              treewave::function_to_json(f));
    const json report = {
        {"k", k},
        {"l", ell},
        {"q", g.q()},
        {"condition", treewave::pompeiu_condition(k, ell, g.q())},
        {"domain_radius", f.domain_radius()},
        {"residuals",
         {residual_entry(k, treewave::mean_value(f, k), g),
          residual_entry(ell, treewave::mean_value(f, ell), h)}}};
    treewave::write_json_file((fs::path(out_dir) / "report.json").string(), report);
    std::cout << treewave::dump_json(report);
    return 0;
}

int cmd_verify(const std::string& suite, const treewave::SuiteParams& params) {
    const treewave::SuiteReport report = treewave::run_suite(suite, params);
    std::cout << treewave::dump_json(treewave::suite_report_to_json(report));
    return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spherical means, waves and snapshot problems on homogeneous trees"};
    app.require_subcommand(1);

    std::int64_t q = 2, radius = 8, k = 2, ell = 3;
    std::uint64_t seed = 1;
    std::vector<std::int64_t> qs;
    std::vector<std::int64_t> times;
    std::vector<std::string> files;
    std::string out_dir = ".";
    std::string policy = "equal";
    std::string suite;
    bool csv = false, corrupt = false;

    auto* info = app.add_subcommand("tree-info", "vertex/layer counts and budget table");
    info->add_option("--q", q, "branching parameter (degree is q+1)")->required();
    info->add_option("--radius", radius, "ball radius")->required();

    auto* simulate = app.add_subcommand("simulate", "propagate Cauchy data to given times");
    simulate->add_option("cauchy", files, "Cauchy data JSON file")->expected(1)->required();
    simulate->add_option("--times", times, "snapshot times")->delimiter(',')->required();
    simulate->add_option("--out", out_dir, "output directory");
    simulate->add_flag("--csv", csv, "also write display-only CSV per snapshot");

    auto* reconstruct = app.add_subcommand("reconstruct", "rebuild Cauchy data from snapshots");
    reconstruct->require_subcommand(1);
    auto* rec_two = reconstruct->add_subcommand("two", "from snapshots at times 0 and k");
    rec_two->add_option("snapshots", files, "f0.json fk.json")->expected(2)->required();
    rec_two->add_option("--k", k, "second snapshot time (>= 2)")->required();
    rec_two->add_option("--policy", policy, "free-value policy: equal|first");
    rec_two->add_option("--out", out_dir, "output directory");
    auto* rec_three = reconstruct->add_subcommand("three", "from snapshots at times 0, k, l");
    rec_three->add_option("snapshots", files, "f0.json fk.json fl.json")->expected(3)->required();
    rec_three->add_option("--k", k, "second snapshot time")->required();
    rec_three->add_option("--ell,--l", ell, "third snapshot time")->required();
    rec_three->add_option("--policy", policy, "free-value policy: equal|first");
    rec_three->add_option("--out", out_dir, "output directory");

    auto* pompeiu = app.add_subcommand("pompeiu", "two-circle mean value problems");
    pompeiu->require_subcommand(1);
    auto* pom_check = pompeiu->add_subcommand("check", "evaluate the necessary condition");
    pom_check->add_option("targets", files, "g.json h.json")->expected(2)->required();
    pom_check->add_option("--k", k, "first mean radius")->required();
    pom_check->add_option("--ell,--l", ell, "second mean radius")->required();
    auto* pom_solve = pompeiu->add_subcommand("solve", "recover f from its two means");
    pom_solve->add_option("targets", files, "g.json h.json")->expected(2)->required();
    pom_solve->add_option("--k", k, "first mean radius")->required();
    pom_solve->add_option("--ell,--l", ell, "second mean radius")->required();
    pom_solve->add_option("--out", out_dir, "output directory");

    auto* verify = app.add_subcommand("verify", "run a named exact-identity suite");
    verify->add_option("suite", suite, "one of: " + [] {
                           std::string s;
                           for (const auto& n : treewave::suite_names())
                               s += (s.empty() ? "" : ", ") + n;
                           return s;
                       }())
        ->required();
    verify->add_option("--q", qs, "branching parameters to run")->delimiter(',');
    verify->add_option("--radius", radius, "ball radius");
    verify->add_option("--seed", seed, "seed for generated functions");
    verify->add_flag("--corrupt", corrupt, "negative control: force one comparison to fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_tree_info(q, radius);
        if (simulate->parsed()) return cmd_simulate(files[0], times, out_dir, csv);
        if (reconstruct->parsed()) {
            ReconstructArgs args{files, k, ell, policy, out_dir};
            if (rec_two->parsed()) return cmd_reconstruct_two(args);
            return cmd_reconstruct_three(args);
        }
        if (pompeiu->parsed()) {
            if (pom_check->parsed()) return cmd_pompeiu_check(files[0], files[1], k, ell);
            return cmd_pompeiu_solve(files[0], files[1], k, ell, out_dir);
        }
        if (verify->parsed()) {
            treewave::SuiteParams params;
            if (!qs.empty()) params.qs = qs;
            params.radius = radius;
            params.seed = seed;
            params.corrupt = corrupt;
            return cmd_verify(suite, params);
        }
    } catch (const treewave::Error& e) {
        const json err = {{"error", {{"code", e.code_name()}, {"message", e.what()}}}};
        std::cerr << treewave::dump_json(err);
        return treewave::error_code_exit_status(e.code());
    } catch (const std::exception& e) {
        const json err = {{"error", {{"code", "internal"}, {"message", e.what()}}}};
        std::cerr << treewave::dump_json(err);
        return 1;
    }
    return 0;
}

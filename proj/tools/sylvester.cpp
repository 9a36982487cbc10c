#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "sylv/bareiss.hpp"
#include "sylv/det.hpp"
#include "sylv/json_io.hpp"
#include "sylv/verify.hpp"

namespace {

using nlohmann::ordered_json;

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int run_det(const std::string& input, const std::string& method, bool timing,
            bool with_trace) {
    if (with_trace && method != "bareiss") {
        return usage_error("--trace only applies to --method bareiss");
    }
    const sylv::IntMatrix m = sylv::read_matrix_file(input);
    const auto start = std::chrono::steady_clock::now();
    sylv::BigInt d;
    sylv::EliminationTrace trace;
    if (method == "expansion") {
        d = sylv::det(m);
    } else if (method == "bareiss") {
        std::tie(d, trace) = sylv::bareiss_det(m);
    } else {
        d = sylv::dodgson_condensation(m);
    }
    const auto stop = std::chrono::steady_clock::now();

    ordered_json j;
    j["det"] = d.get_str();
    j["method"] = method;
    if (with_trace) {
        ordered_json pivots = ordered_json::array();
        for (const auto& p : trace.pivots) {
            pivots.push_back({{"step", p.step},
                              {"row", p.pivot_row},
                              {"value", p.value.get_str()}});
        }
        ordered_json minors = ordered_json::array();
        for (const auto& minor : trace.principal_minors) minors.push_back(minor.get_str());
        j["trace"] = {{"sign", trace.sign},
                      {"pivots", std::move(pivots)},
                      {"principal_minors", std::move(minors)}};
    }
    if (timing) {
        j["timing_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    emit(j);
    return 0;
}

int run_minor(const std::string& input, const std::vector<int>& rows,
              const std::vector<int>& cols) {
    if (rows.size() != cols.size() || rows.empty() || rows.size() > 2) {
        return usage_error("--rows and --cols each take one or two indices, equally many");
    }
    const sylv::IntMatrix m = sylv::read_matrix_file(input);
    const sylv::MinorSpec spec =
        rows.size() == 1 ? sylv::MinorSpec(rows[0], cols[0])
                         : sylv::MinorSpec(rows[0], rows[1], cols[0], cols[1]);
    emit(sylv::matrix_to_json(sylv::minor(m, spec)));
    return 0;
}

int run_verify_symbolic(int n, const std::vector<int>& indices, bool allow_large,
                        bool render) {
    if (n < 2) return usage_error("symbolic verification requires --n >= 2");
    if (n > 5) return usage_error("symbolic verification is limited to --n <= 5");
    if (n == 5 && !allow_large) {
        return usage_error("symbolic --n 5 is slow; acknowledge with --allow-large");
    }

    const sylv::SymMatrix m = sylv::generic_matrix(n);
    std::vector<sylv::IdentityReport<sylv::MultiPoly>> reports;
    if (!indices.empty()) {
        reports.push_back(
            sylv::check_general(m, indices[0], indices[1], indices[2], indices[3]));
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l)
                        reports.push_back(sylv::check_general(m, i, j, k, l));
    }

    bool all_hold = true;
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) {
        all_hold = all_hold && rep.holds;
        arr.push_back(sylv::report_to_json(rep, render));
    }
    ordered_json j;
    j["mode"] = "symbolic";
    j["n"] = n;
    j["all_hold"] = all_hold;
    j["reports"] = std::move(arr);
    emit(j);
    return all_hold ? 0 : 1;
}

int run_verify_random(int n_min, int n_max, int trials, std::uint64_t seed,
                      long bound) {
    if (trials < 1) return usage_error("--trials must be at least 1");
    if (bound < 1) return usage_error("--bound must be at least 1");
    const sylv::CampaignSummary s =
        sylv::random_numeric_campaign(n_min, n_max, trials, seed, bound);

    ordered_json j;
    j["mode"] = "random";
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["trials"] = trials;
    j["seed"] = seed;
    j["bound"] = bound;
    j["matrices"] = s.matrices_run;
    j["checks"] = s.checks_run;
    j["violations"] = s.violations;
    emit(j);
    return s.violations == 0 ? 0 : 1;
}

int run_replay(int n) {
    if (n < 1 || n > 4) return usage_error("replay requires --n between 1 and 4");
    const sylv::InductionReplay replay = sylv::replay_induction_step(n);

    ordered_json groups = ordered_json::array();
    for (const auto& g : replay.groups) {
        ordered_json gj;
        gj["group"] = g.name;
        gj["corner_exp"] = g.corner_exp;
        gj["border_rows"] = g.border_rows;
        gj["residual_terms"] = g.residual.term_count();
        gj["vanishes"] = g.vanishes;
        groups.push_back(std::move(gj));
    }
    ordered_json j;
    j["n"] = replay.n;
    j["all_vanish"] = replay.all_vanish();
    j["groups"] = std::move(groups);
    emit(j);
    return replay.all_vanish() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinant toolkit: symbolic identity verification, "
                 "fraction-free elimination, condensation"};
    app.require_subcommand(1);

    auto* det_cmd = app.add_subcommand("det", "Determinant of a JSON matrix file");
    std::string det_input;
    std::string method = "expansion";
    bool timing = false, with_trace = false;
    det_cmd->add_option("-i,--input", det_input, "matrix JSON file")->required();
    det_cmd->add_option("-m,--method", method, "expansion, bareiss or dodgson")
        ->check(CLI::IsMember({"expansion", "bareiss", "dodgson"}));
    det_cmd->add_flag("--trace", with_trace,
                      "include the elimination trace (bareiss only)");
    det_cmd->add_flag("--timing", timing, "include wall-clock timing in the output");

    auto* minor_cmd =
        app.add_subcommand("minor", "Delete rows and columns of a JSON matrix file");
    std::string minor_input;
    std::vector<int> minor_rows, minor_cols;
    minor_cmd->add_option("-i,--input", minor_input, "matrix JSON file")->required();
    minor_cmd->add_option("--rows", minor_rows, "one or two 1-based rows to delete")
        ->required()
        ->delimiter(',');
    minor_cmd->add_option("--cols", minor_cols, "one or two 1-based columns to delete")
        ->required()
        ->delimiter(',');

    auto* verify_cmd = app.add_subcommand(
        "verify", "Check the determinant identity symbolically or on random matrices");
    bool symbolic = false, random_mode = false, allow_large = false, render = false;
    int n = 3, n_min = 3, n_max = 3, trials = 100;
    std::uint64_t seed = 0;
    long bound = 9;
    std::vector<int> indices;
    auto* symbolic_flag =
        verify_cmd->add_flag("--symbolic", symbolic, "polynomial-identity mode");
    auto* random_flag =
        verify_cmd->add_flag("--random", random_mode, "seeded numeric campaign");
    symbolic_flag->excludes(random_flag);
    random_flag->excludes(symbolic_flag);
    auto* n_opt = verify_cmd->add_option("--n", n, "matrix dimension (default 3)");
    auto* n_min_opt = verify_cmd->add_option("--n-min", n_min, "smallest dimension");
    auto* n_max_opt = verify_cmd->add_option("--n-max", n_max, "largest dimension");
    auto* indices_opt =
        verify_cmd->add_option("--indices", indices, "single tuple i,j,k,l")
            ->delimiter(',')
            ->expected(4);
    auto* trials_opt =
        verify_cmd->add_option("--trials", trials, "matrices per dimension");
    auto* seed_opt = verify_cmd->add_option("--seed", seed, "campaign seed");
    auto* bound_opt =
        verify_cmd->add_option("--bound", bound, "entries drawn from [-bound, bound]");
    auto* allow_large_flag =
        verify_cmd->add_flag("--allow-large", allow_large, "permit symbolic --n 5");
    auto* render_flag = verify_cmd->add_flag(
        "--render", render, "include lhs/rhs polynomials in symbolic reports");

    auto* replay_cmd = app.add_subcommand(
        "replay", "Replay the bordered-identity term-group cancellation");
    int replay_n = 0;
    replay_cmd->add_option("--n", replay_n, "base dimension (1..4)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*det_cmd) return run_det(det_input, method, timing, with_trace);
        if (*minor_cmd) return run_minor(minor_input, minor_rows, minor_cols);
        if (*replay_cmd) return run_replay(replay_n);

        if (symbolic == random_mode) {
            return usage_error("verify needs exactly one of --symbolic / --random");
        }
        if (symbolic) {
            for (const auto* opt : {n_min_opt, n_max_opt, trials_opt, seed_opt, bound_opt}) {
                if (opt->count()) {
                    return usage_error("option " + opt->get_name() +
                                       " only applies to --random");
                }
            }
            return run_verify_symbolic(n, indices, allow_large, render);
        }
        for (const CLI::Option* opt :
             std::initializer_list<const CLI::Option*>{indices_opt, allow_large_flag,
                                                       render_flag}) {
            if (opt->count()) {
                return usage_error("option " + opt->get_name() +
                                   " only applies to --symbolic");
            }
        }
        if (n_opt->count() && (n_min_opt->count() || n_max_opt->count())) {
            return usage_error("give either --n or the --n-min/--n-max pair");
        }
        if (n_min_opt->count() != n_max_opt->count()) {
            return usage_error("--n-min and --n-max go together");
        }
        if (n_opt->count()) {
            n_min = n_max = n;
        }
        return run_verify_random(n_min, n_max, trials, seed, bound);
    } catch (const sylv::zero_interior_minor& e) {
        std::cerr << "error: " << e.what() << " (try --method bareiss)\n";
        return 3;
    } catch (const sylv::dimension_too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sylv::internal_error& e) {
        std::cerr << "internal error (bug): " << e.what() << "\n";
        return 3;
    } catch (const sylv::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact equality throughout) and prints one PASS/FAIL line per criterion.
//
// Usage: acceptance <path-to-sylvester-cli> <data-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sylv/bareiss.hpp"
#include "sylv/json_io.hpp"
#include "sylv/rng.hpp"
#include "sylv/verify.hpp"

#include "oracles.hpp"

using sylv::BigInt;
using sylv::BorderOperator;
using sylv::EntryVar;
using sylv::IntMatrix;
using sylv::MinorSpec;
using sylv::MultiPoly;
using sylv::SymMatrix;

namespace {

MultiPoly var(int r, int c) { return MultiPoly(EntryVar(r, c)); }

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& bin, const std::string& args) {
    const std::string cmd = bin + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

class Suite {
public:
    void criterion(int id, const std::string& what, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d: %s — %s%s%s\n", id, ok ? "PASS" : "FAIL",
                    what.c_str(), detail.empty() ? "" : ": ", detail.c_str());
        if (!ok) ++failures_;
    }

    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

bool all_tuples_hold_symbolically(int n) {
    const SymMatrix g = sylv::generic_matrix(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (!sylv::check_general(g, i, j, k, l).holds) return false;
                }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <path-to-sylvester-cli> <data-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string data = argv[2];
    Suite suite;

    suite.criterion(1, "symbolic identity over every sorted tuple, n = 2..4",
                    [&](std::string& detail) {
        Clock clock;
        for (int n = 2; n <= 4; ++n) {
            if (!all_tuples_hold_symbolically(n)) return false;
        }
        const double s = clock.seconds();
        detail = "in " + std::to_string(s) + "s";
        return s < 10.0;
    });

    suite.criterion(2, "base case at n = 2 and the 0x0 convention",
                    [&](std::string&) {
        const auto rep = sylv::check_canonical(sylv::generic_matrix(2));
        const MultiPoly displayed = var(2, 2) * var(1, 1) - var(2, 1) * var(1, 2);
        return rep.holds && rep.lhs == sylv::det(sylv::generic_matrix(2)) &&
               rep.lhs == displayed && rep.rhs == displayed &&
               sylv::det(SymMatrix()) == MultiPoly(1);
    });

    suite.criterion(3, "cofactor equals the partial derivative; row/column reconstruction",
                    [&](std::string&) {
        for (int n = 1; n <= 4; ++n) {
            const SymMatrix g = sylv::generic_matrix(n);
            const MultiPoly d = sylv::det(g);
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (sylv::cofactor_from_derivative(g, i, j) != sylv::cofactor(g, i, j)) {
                        return false;
                    }
                }
            }
            for (int i = 1; i <= n; ++i) {
                MultiPoly row_sum;
                for (int j = 1; j <= n; ++j) {
                    row_sum += var(i, j) * d.derivative(EntryVar(i, j));
                }
                if (row_sum != d) return false;
            }
            for (int j = 1; j <= n; ++j) {
                MultiPoly col_sum;
                for (int i = 1; i <= n; ++i) {
                    col_sum += var(i, j) * d.derivative(EntryVar(i, j));
                }
                if (col_sum != d) return false;
            }
        }
        return true;
    });

    suite.criterion(4, "operator laws, row replacement and annihilation",
                    [&](std::string&) {
        sylv::SplitMix64 gen(4242);
        for (int trial = 0; trial < 120; ++trial) {
            const int n = 2 + static_cast<int>(gen.next() % 3);
            const MultiPoly p = oracle::random_poly(gen, n + 1, n, 5, 2, 9);
            const MultiPoly q = oracle::random_poly(gen, n + 1, n, 5, 2, 9);
            const BorderOperator di(1 + static_cast<int>(gen.next() % n), n);
            const BorderOperator dl(1 + static_cast<int>(gen.next() % n), n);
            const BigInt alpha = gen.bounded(9), beta = gen.bounded(9);
            if (sylv::apply(di, alpha * p + beta * q) !=
                alpha * sylv::apply(di, p) + beta * sylv::apply(di, q)) {
                return false;
            }
            if (sylv::apply(di, p * q) !=
                p * sylv::apply(di, q) + q * sylv::apply(di, p)) {
                return false;
            }
            if (sylv::apply(di, sylv::apply(dl, p)) !=
                sylv::apply(dl, sylv::apply(di, p))) {
                return false;
            }
        }
        for (int n = 1; n <= 4; ++n) {
            const SymMatrix g = sylv::generic_matrix(n);
            const MultiPoly d = sylv::det(g);
            for (int i = 1; i <= n; ++i) {
                const MultiPoly replaced = sylv::det(sylv::replace_row_with_border(g, i));
                if (sylv::apply(BorderOperator(i, n), d) != replaced) return false;
                for (int l = 1; l <= n; ++l) {
                    if (!sylv::apply(BorderOperator(l, n), replaced).is_zero()) {
                        return false;
                    }
                }
            }
        }
        return true;
    });

    suite.criterion(5, "border expansion equals the extended determinant, minors included",
                    [&](std::string&) {
        for (int n = 1; n <= 3; ++n) {
            const SymMatrix g = sylv::generic_matrix(n);
            if (sylv::border_expansion(n, sylv::det(g)) != sylv::det(sylv::extend(g))) {
                return false;
            }
        }
        for (int n = 2; n <= 3; ++n) {
            const SymMatrix g = sylv::generic_matrix(n);
            const SymMatrix ext = sylv::extend(g);
            const std::vector<MinorSpec> specs{MinorSpec(1, 1), MinorSpec(2, 2),
                                               MinorSpec(1, 2), MinorSpec(2, 1),
                                               MinorSpec(1, 2, 1, 2)};
            for (const MinorSpec& spec : specs) {
                if (sylv::border_expansion(n, sylv::det(sylv::minor(g, spec))) !=
                    sylv::det(sylv::minor(ext, spec))) {
                    return false;
                }
            }
        }
        return true;
    });

    suite.criterion(6, "induction replay: every collected term group vanishes",
                    [&](std::string& detail) {
        int groups_checked = 0;
        for (int n = 1; n <= 3; ++n) {
            const auto replay = sylv::replay_induction_step(n);
            if (replay.groups.empty() || !replay.all_vanish()) return false;
            for (const auto& g : replay.groups) {
                if (!g.vanishes || !g.residual.is_zero()) return false;
                ++groups_checked;
            }
        }
        detail = std::to_string(groups_checked) + " groups";
        return true;
    });

    suite.criterion(7, "numeric campaign n = 3..6, 100 trials each, zero violations",
                    [&](std::string& detail) {
        Clock clock;
        const auto summary = sylv::random_numeric_campaign(3, 6, 100, 42, 9);
        const double s = clock.seconds();
        detail = std::to_string(summary.checks_run) + " checks in " +
                 std::to_string(s) + "s";
        return summary.matrices_run == 400 && summary.violations == 0 && s < 30.0;
    });

    suite.criterion(8, "expansion, elimination and condensation agree on 200 seeded matrices",
                    [&](std::string& detail) {
        sylv::SplitMix64 gen(777);
        int condensed = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + trial % 7;
            const IntMatrix m = oracle::random_int_matrix(gen, n, 9);
            const BigInt by_expansion = sylv::det(m);
            if (sylv::bareiss_det(m).first != by_expansion) return false;
            try {
                if (sylv::dodgson_condensation(m) != by_expansion) return false;
                ++condensed;
            } catch (const sylv::zero_interior_minor&) {
                // condensation undefined here; the other two still agree
            }
        }
        detail = std::to_string(condensed) + "/200 condensable";
        return condensed > 0;
    });

    suite.criterion(9, "generic determinant has n! terms with coefficients +-1, n <= 5",
                    [&](std::string&) {
        for (int n = 1; n <= 5; ++n) {
            const MultiPoly d = sylv::det(sylv::generic_matrix(n));
            if (d.term_count() != static_cast<std::size_t>(factorial(n))) return false;
            for (const auto& [mono, coeff] : d.terms()) {
                if (coeff != 1 && coeff != -1) return false;
                if (mono.degree() != n) return false;
            }
        }
        return true;
    });

    suite.criterion(10, "CLI contract: golden outputs and exit codes",
                    [&](std::string& detail) {
        struct Golden {
            std::string args;
            int exit_code;
            std::string output;  // empty = don't compare bytes
        };
        const std::vector<Golden> goldens{
            {"det --method bareiss --input " + data + "/m3.json", 0,
             "{\"det\":\"-3\",\"method\":\"bareiss\"}\n"},
            {"det --input " + data + "/m0.json", 0,
             "{\"det\":\"1\",\"method\":\"expansion\"}\n"},
            {"det --method dodgson --input " + data + "/perm2.json", 0,
             "{\"det\":\"-1\",\"method\":\"dodgson\"}\n"},
            {"det --method expansion --input " + data + "/m3.json", 0,
             "{\"det\":\"-3\",\"method\":\"expansion\"}\n"},
            {"det --method bareiss --trace --input " + data + "/m3.json", 0,
             "{\"det\":\"-3\",\"method\":\"bareiss\",\"trace\":{\"sign\":1,\"pivots\":"
             "[{\"step\":1,\"row\":1,\"value\":\"1\"},{\"step\":2,\"row\":2,\"value\":"
             "\"-3\"},{\"step\":3,\"row\":3,\"value\":\"-3\"}],\"principal_minors\":"
             "[\"1\",\"-3\",\"-3\"]}}\n"},
            {"det --method expansion --trace --input " + data + "/m3.json", 2, ""},
            {"det --method dodgson --input " + data + "/dodgson_zero.json", 3, ""},
            {"det --input " + data + "/nonsquare.json", 2, ""},
            {"det --input " + data + "/malformed.json", 2, ""},
            {"det --input " + data + "/badentries.json", 2, ""},
            {"det --input " + data + "/no_such_file.json", 2, ""},
            {"det --method nope --input " + data + "/m3.json", 2, ""},
            {"minor --input " + data + "/m3.json --rows 1 --cols 1", 0,
             "{\"rows\":2,\"cols\":2,\"entries\":[[\"5\",\"6\"],[\"8\",\"10\"]]}\n"},
            {"minor --input " + data + "/m3.json --rows 1,2 --cols 1,3", 0,
             "{\"rows\":1,\"cols\":1,\"entries\":[[\"8\"]]}\n"},
            {"minor --input " + data + "/m3.json --rows 1,1 --cols 1,2", 2, ""},
            {"minor --input " + data + "/m3.json --rows 4 --cols 1", 2, ""},
            {"verify --symbolic --n 2", 0,
             "{\"mode\":\"symbolic\",\"n\":2,\"all_hold\":true,\"reports\":[{\"identity\":"
             "\"det(A)*det(A[i,j|k,l]) == det(A[i|k])*det(A[j|l]) - "
             "det(A[i|l])*det(A[j|k])\",\"n\":2,\"indices\":[1,2,1,2],\"holds\":true,"
             "\"residual_terms\":0}]}\n"},
            {"verify --symbolic --n 6", 2, ""},
            {"verify --symbolic --n 5", 2, ""},
            {"verify --symbolic --indices 2,1,1,2 --n 3", 2, ""},
            {"verify --symbolic --trials 3", 2, ""},
            {"verify --random --trials 0", 2, ""},
            {"verify --symbolic --random", 2, ""},
            {"verify", 2, ""},
            {"verify --random --n 4 --trials 50 --seed 7 --bound 9", 0,
             "{\"mode\":\"random\",\"n_min\":4,\"n_max\":4,\"trials\":50,\"seed\":7,"
             "\"bound\":9,\"matrices\":50,\"checks\":1800,\"violations\":0}\n"},
            {"replay --n 2", 0,
             "{\"n\":2,\"all_vanish\":true,\"groups\":[{\"group\":\"corner_sq\","
             "\"corner_exp\":2,\"border_rows\":[],\"residual_terms\":0,\"vanishes\":true},"
             "{\"group\":\"mixed(1)\",\"corner_exp\":1,\"border_rows\":[1],"
             "\"residual_terms\":0,\"vanishes\":true},{\"group\":\"mixed(2)\","
             "\"corner_exp\":1,\"border_rows\":[2],\"residual_terms\":0,\"vanishes\":true},"
             "{\"group\":\"cross(1,1)\",\"corner_exp\":0,\"border_rows\":[1,1],"
             "\"residual_terms\":0,\"vanishes\":true},"
             "{\"group\":\"cross(1,2)\",\"corner_exp\":0,\"border_rows\":[1,2],"
             "\"residual_terms\":0,\"vanishes\":true},"
             "{\"group\":\"cross(2,2)\",\"corner_exp\":0,\"border_rows\":[2,2],"
             "\"residual_terms\":0,\"vanishes\":true}]}\n"},
            {"replay --n 9", 2, ""},
            {"replay --n 0", 2, ""},
        };
        int index = 0;
        for (const auto& golden : goldens) {
            const CliResult got = run_cli(cli, golden.args);
            if (got.exit_code != golden.exit_code ||
                (!golden.output.empty() && got.output != golden.output)) {
                detail = "case " + std::to_string(index) + " (" + golden.args +
                         "): exit " + std::to_string(got.exit_code) + ", got " +
                         got.output;
                return false;
            }
            ++index;
        }

        // Structured (non-golden) runs: full symbolic sweep at n = 3, the
        // gated n = 5, and byte-determinism of a seeded campaign.
        const CliResult sweep = run_cli(cli, "verify --symbolic --n 3");
        if (sweep.exit_code != 0) {
            detail = "symbolic sweep at n=3 exited " + std::to_string(sweep.exit_code);
            return false;
        }
        const auto parsed = nlohmann::json::parse(sweep.output);
        if (parsed["all_hold"] != true || parsed["reports"].size() != 9) {
            detail = "unexpected n=3 sweep report";
            return false;
        }
        const CliResult large = run_cli(cli, "verify --symbolic --n 5 --allow-large");
        if (large.exit_code != 0 ||
            nlohmann::json::parse(large.output)["all_hold"] != true) {
            detail = "gated n=5 sweep failed";
            return false;
        }
        const CliResult replay1 = run_cli(cli, "replay --n 1");
        if (replay1.exit_code != 0 ||
            nlohmann::json::parse(replay1.output)["all_vanish"] != true) {
            detail = "replay at n=1 failed";
            return false;
        }
        const std::string campaign_args = "verify --random --n 3 --trials 20 --seed 11";
        const CliResult once = run_cli(cli, campaign_args);
        const CliResult twice = run_cli(cli, campaign_args);
        if (once.exit_code != 0 || once.output != twice.output) {
            detail = "campaign output not byte-deterministic";
            return false;
        }
        detail = std::to_string(goldens.size()) + " golden cases";
        return true;
    });

    if (suite.failures() == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", suite.failures());
    }
    return suite.failures();
}

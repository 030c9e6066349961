// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance is pinned here, in code. Criteria 5, 8 and 9 are
// randomized with fixed seeds; criterion 8 additionally carries a
// documented 1e-3 flake budget from its Monte-Carlo nature.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hyperind/bounds.hpp"
#include "hyperind/generators.hpp"
#include "hyperind/hypergraph.hpp"
#include "hyperind/oracle.hpp"
#include "hyperind/pipeline.hpp"

using namespace hyperind;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, bool pass, const std::string& label, Clock::time_point started,
            const std::string& detail = "") {
    const double seconds =
        std::chrono::duration<double>(Clock::now() - started).count();
    std::printf("[%s] %2d. %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", index, label.c_str(),
                seconds, detail.empty() ? "" : " - ", detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", v);
    return buffer;
}

// ---------------------------------------------------------------------------

void criterion_1_star_counts() {
    const auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    for (unsigned r : {2u, 3u}) {
        for (unsigned k = 0; k <= 4; ++k) {
            for (unsigned l = 0; l <= 3; ++l) {
                const auto closed = oracle::count_independent_sets_star(r, k, l);
                const auto counted = oracle::count_independent_sets(gen::star_gadget(r, k, l).graph);
                if (closed != boost::multiprecision::cpp_int(counted)) {
                    pass = false;
                    detail = "mismatch at r=" + std::to_string(r) + " k=" + std::to_string(k) +
                             " l=" + std::to_string(l);
                }
            }
        }
    }
    report(1, pass, "closed-form star count equals exhaustive enumeration (integer equality)",
           t0, detail);
}

void criterion_2_conditional_expectation() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (unsigned r : {2u, 3u}) {
        for (unsigned k = 0; k <= 4; ++k) {
            for (unsigned l = 0; l <= 3; ++l) {
                for (double b : {1.0, 2.0, 4.0, 8.0}) {
                    const double brute = oracle::brute_conditional_weight(r, k, l, b);
                    const double closed = pipeline::closed_conditional_weight(r, k, b);
                    worst = std::max(worst, std::abs(brute - closed) / closed);
                }
            }
        }
    }
    report(2, worst <= 1e-12,
           "conditional expectation identity: enumeration vs closed form <= 1e-12", t0,
           "max rel err " + fmt(worst));
}

void criterion_3_capped_binomial_sum() {
    const auto t0 = Clock::now();
    const auto s400 = bounds::lemma3_sum(400, 0.25, 5.0);
    const auto s4000 = bounds::lemma3_sum(4000, 0.25, 5.0);
    const double rel400 = std::abs(s400.exact - s400.asymptote) / s400.asymptote;
    const double rel4000 = std::abs(s4000.exact - s4000.asymptote) / s4000.asymptote;
    const bool rational_exact =
        bounds::lemma3_sum_rational(4, bounds::Rational(1, 2), bounds::Rational(2)) ==
        bounds::Rational(13, 8);
    const bool pass = rel400 <= 0.02 && rel4000 <= 0.005 && rational_exact;
    report(3, pass, "capped binomial mean: 2% at k=400, 0.5% at k=4000, exact 13/8 rational", t0,
           "rel(k=400) " + fmt(rel400) + ", rel(k=4000) " + fmt(rel4000));
}

void criterion_4_blowup_alpha() {
    const auto t0 = Clock::now();
    const Hypergraph fano = gen::fano();
    const Hypergraph blown = gen::blowup({fano, 2});
    const auto base_alpha = oracle::alpha_exact(fano).alpha;
    const auto blown_alpha = oracle::alpha_exact(blown).alpha;
    const auto degree = max_r_degree(blown);
    const bool pass = base_alpha == 4 && blown_alpha == 8 && blown_alpha == 2 * base_alpha &&
                      degree == 2;
    report(4, pass, "blowup relation at desk scale: alpha doubles, max r-degree = part size", t0,
           "alpha(base)=" + std::to_string(base_alpha) + " alpha(blowup)=" +
               std::to_string(blown_alpha) + " degree=" + std::to_string(degree));
}

void criterion_5_cleanup_contract() {
    const auto t0 = Clock::now();
    Rng master(987654321);
    const std::array<double, 5> sample_ps = {0.1, 0.3, 0.5, 0.8, 1.0};
    const std::array<double, 4> caps = {0.01, 0.1, 1.0, 4.0};

    int clean_failures = 0;
    std::uint64_t qualifying = 0, qualifying_ok = 0;

    for (int i = 0; i < 1000; ++i) {
        auto rng = master.derive("case" + std::to_string(i));
        const int family = i % 5;
        Hypergraph h = [&]() -> Hypergraph {
            switch (family) {
                case 0:
                case 1: {
                    const auto n = static_cast<VertexId>(40 + rng.next_below(21));
                    return gen::partial_steiner(n, 2, rng.derive("gen"));
                }
                case 2: {
                    const auto n = static_cast<VertexId>(20 + rng.next_below(31));
                    const double target = 1.5 * n;
                    const double total = n * (n - 1.0) * (n - 2.0) / 6.0;
                    return gen::random_uniform(n, 3, std::min(1.0, target / total),
                                               rng.derive("gen"));
                }
                case 3: {
                    if (rng.next_bernoulli(0.5)) {
                        const unsigned d = 1 + static_cast<unsigned>(rng.next_below(3));
                        return gen::blowup({gen::fano(), d});
                    }
                    const unsigned d = 2 + static_cast<unsigned>(rng.next_below(7));
                    return gen::blowup({Hypergraph::create(3, 3, {{0, 1, 2}}), d});
                }
                default: {
                    const auto n = static_cast<VertexId>(30 + rng.next_below(31));
                    const double total = n * (n - 1.0) * (n - 2.0) * (n - 3.0) / 24.0;
                    return gen::random_uniform(n, 4, std::min(1.0, n / total), rng.derive("gen"));
                }
            }
        }();

        const double p_x = sample_ps[(i / 5) % sample_ps.size()];
        const double b = caps[(i / 25) % caps.size()];
        const VertexSet x = pipeline::random_subset(h, p_x, rng.derive("subset"));
        const auto cleanup = pipeline::cleanup(h, x);

        const auto kept = induced(h, cleanup.kept);
        if (!is_linear(kept.graph) || !find_triangles(kept.graph).empty() ||
            cleanup.kept.size() + cleanup.deleted.size() != cleanup.sampled.size()) {
            ++clean_failures;
        }

        pipeline::Params params;
        params.n = h.vertex_count();
        params.d = std::max<std::uint64_t>(1, max_r_degree(h));
        params.r = h.uniformity() - 1;
        params.p = p_x;
        params.b = b;
        const auto conditions = pipeline::check_conditions(params);
        if (!conditions.degenerate && conditions.first.ratio <= 0.1 &&
            conditions.second.ratio <= 0.1) {
            ++qualifying;
            if (10 * cleanup.kept.size() >= 9 * cleanup.sampled.size()) ++qualifying_ok;
        }
    }

    const bool kept_floor = qualifying >= 15 && 10 * qualifying_ok >= 9 * qualifying;
    report(5, clean_failures == 0 && kept_floor,
           "cleanup contract: 1000 fuzzed runs linear+triangle-free; kept >= 0.9 sampled on "
           "in-condition runs",
           t0,
           std::to_string(clean_failures) + " postcondition failures; " +
               std::to_string(qualifying_ok) + "/" + std::to_string(qualifying) +
               " in-condition runs kept >= 90%");
}

void criterion_6_constants() {
    const auto t0 = Clock::now();
    const auto c2 = bounds::c_r_constant(2);
    bool pass = std::abs(c2.c_r - 0.4169) <= 1e-4;

    double worst_residual = 0.0;
    for (unsigned r = 2; r <= 64; ++r) {
        const auto report_r = bounds::c_r_constant(r);
        const double log_lhs = r * std::log(report_r.c_r) +
                               std::log(report_r.r_times_3r_minus_1) + r * std::log(2.0) +
                               std::log(-report_r.log_one_minus_2_pow_minus_r);
        worst_residual =
            std::max(worst_residual, std::abs(std::expm1(log_lhs - report_r.log_r_factorial)));
    }
    pass = pass && worst_residual <= 1e-10;

    const double ratio200 = bounds::c_r_constant(200).asymptote_ratio;
    pass = pass && std::abs(ratio200 - 1.0) <= 0.05;

    report(6, pass, "constants: c_2 anchor, formula round-trip r=2..64, r/e asymptote at r=200",
           t0,
           "c_2=" + fmt(c2.c_r) + " worst residual " + fmt(worst_residual) + " ratio(200)=" +
               fmt(ratio200));
    // The r=3 value of the closed form, reported for the record; a different
    // figure (0.538) circulates for the triple-system case and is tracked as
    // an unresolved anchor, not asserted.
    std::printf("[INFO]  6. c_3 (closed form) = %s\n", fmt(bounds::c_r_constant(3).c_r).c_str());
}

void criterion_7_first_moment() {
    const auto t0 = Clock::now();
    const auto anchor = bounds::first_moment(1e6, 2, 100.0, 0.1);
    bool pass = anchor.log_expected_count < 0.0 && !anchor.x_exceeds_n;

    double previous = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 10; ++i) {
        const auto point = bounds::first_moment(1e6, 2, 100.0, 0.1 * i);
        if (!(point.log_expected_count < previous)) pass = false;
        previous = point.log_expected_count;
    }
    report(7, pass, "first-moment bound: logE < 0 at the anchor, monotone over the epsilon grid",
           t0, "logE(anchor) " + fmt(anchor.log_expected_count));
}

void criterion_8_concentration() {
    const auto t0 = Clock::now();
    // 1e6 draws of binomial(2000, 0.1); the empirical tail frequencies must
    // stay below both closed-form bounds at every level. Probabilistic:
    // the margin is a factor >= 3 everywhere, so the flake probability is
    // far below the documented 1e-3 budget.
    std::mt19937_64 engine(777);
    std::binomial_distribution<int> binomial(2000, 0.1);
    const int trials = 1000000;
    std::vector<int> draws(trials);
    for (int i = 0; i < trials; ++i) draws[i] = binomial(engine);

    const double mu = 200.0, variance = 180.0, cap = 0.9;
    bool pass = true;
    std::string detail;
    for (double lambda : {10.0, 20.0, 40.0}) {
        int above = 0;
        for (int d : draws)
            if (d >= mu + lambda) ++above;
        const double freq = above / static_cast<double>(trials);
        const double bound = bounds::chernoff_general(variance, cap, lambda);
        if (freq > bound) pass = false;
        detail += "l=" + fmt(lambda) + ":" + fmt(freq) + "<=" + fmt(bound) + " ";
    }
    for (double eps : {0.05, 0.1, 0.15}) {
        int outside = 0;
        for (int d : draws)
            if (std::abs(d - mu) >= eps * mu) ++outside;
        const double freq = outside / static_cast<double>(trials);
        const double bound = bounds::chernoff_binomial(mu, eps);
        if (freq > bound) pass = false;
        detail += "e=" + fmt(eps) + ":" + fmt(freq) + "<=" + fmt(bound) + " ";
    }
    report(8, pass, "concentration bounds dominate 1e6 simulated binomial(2000,0.1) tails", t0,
           detail);
}

void criterion_9_h_monotonicity() {
    const auto t0 = Clock::now();
    Rng master(13579);
    bool pass = true;
    const std::array<double, 3> caps = {1.0, 2.0, 8.0};
    for (int i = 0; i < 500; ++i) {
        auto rng = master.derive("triple" + std::to_string(i));
        const auto n = static_cast<VertexId>(12 + rng.next_below(25));
        const Hypergraph h = gen::partial_steiner(n, 2, rng.derive("gen"));
        const VertexSet z = pipeline::greedy_alpha(h, rng.derive("z"), 1).witness;
        const double b = caps[i % caps.size()];

        const double h_full = pipeline::h_statistic(h, z, b);
        std::vector<VertexId> ys;
        for (VertexId v = 0; v < n; ++v) {
            if (z.contains(v) || rng.next_bernoulli(0.7)) ys.push_back(v);
        }
        const auto sub = induced(h, VertexSet::from_sorted(ys));
        std::vector<VertexId> z_mapped;
        for (std::size_t j = 0; j < sub.to_original.size(); ++j) {
            if (z.contains(sub.to_original[j])) z_mapped.push_back(static_cast<VertexId>(j));
        }
        if (pipeline::h_statistic(sub.graph, VertexSet::from_sorted(z_mapped), b) >
            h_full + 1e-9) {
            pass = false;
        }

        const double unbounded =
            pipeline::h_statistic(h, z, std::numeric_limits<double>::infinity());
        const double zs = static_cast<double>(z.size());
        if (unbounded > zs * (zs - 1.0) / 2.0 + 1e-9) pass = false;
    }
    report(9, pass,
           "h monotone under vertex deletion and h(Z,inf) <= C(|Z|,2) on 500 linear triple "
           "systems",
           t0);
}

// Criterion 10: byte-identical CLI output under a fixed seed.

std::pair<int, std::string> run_command(const std::string& args) {
    const std::string cmd = args + " 2>&1";
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

void criterion_10_cli_determinism() {
    const auto t0 = Clock::now();
    const std::string cli = HYPERIND_CLI_PATH;
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "hyperind_acceptance";
    fs::create_directories(dir);
    const std::string fano = (dir / "fano.hg").string();
    const std::string blowup = (dir / "blowup.hg").string();

    bool pass = run_command(cli + " gen steiner --fixture fano --out " + fano).first == 0 &&
                run_command(cli + " gen blowup --base " + fano + " --d 2 --out " + blowup).first == 0;

    const std::vector<std::string> commands = {
        cli + " gen steiner --n 40 --r 2 --seed 12 --out -",
        cli + " gen blowup --base " + fano + " --d 3 --out -",
        cli + " gen random --n 30 --u 3 --p 0.08 --seed 12 --out -",
        cli + " gen star --r 3 --k 2 --l 1 --out -",
        cli + " gen t-r --r 4 --out -",
        cli + " stats --in " + blowup,
        cli + " clean --in " + blowup + " --p 0.9 --seed 12",
        cli + " alpha --in " + fano + " --mode exact",
        cli + " alpha --in " + blowup + " --mode greedy --seed 12",
        cli + " alpha --in " + blowup + " --mode pipeline --seed 12",
        cli + " verify lemma3 --k 400 --q 0.25 --b 5 --tol 0.02",
        cli + " verify weights --r 2 --kmax 2 --lmax 1",
        cli + " verify constants --r 2 --rmax 8",
        cli + " verify first-moment --n 1e6 --r 2 --d 100 --epsilon 0.1",
        cli + " constants --rmax 16",
        cli + " ramsey --r 2 --t 100000",
        cli + " first-moment --n 1e8 --r 3 --d 10 --epsilon 0.2",
    };
    std::string failing;
    for (const auto& cmd : commands) {
        const auto first = run_command(cmd);
        const auto second = run_command(cmd);
        if (first.first != 0 || second.first != 0 || first.second != second.second) {
            pass = false;
            failing = cmd;
            break;
        }
    }
    report(10, pass, "CLI determinism: every subcommand repeats byte-identically under one seed",
           t0, failing);
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    const auto t0 = Clock::now();
    criterion_1_star_counts();
    criterion_2_conditional_expectation();
    criterion_3_capped_binomial_sum();
    criterion_4_blowup_alpha();
    criterion_5_cleanup_contract();
    criterion_6_constants();
    criterion_7_first_moment();
    criterion_8_concentration();
    criterion_9_h_monotonicity();
    criterion_10_cli_determinism();
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%d of 10 criteria failed (%.1fs total)\n", failures, seconds);
    return failures == 0 ? 0 : 1;
}

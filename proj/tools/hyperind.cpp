// hyperind: experiments on independent sets in uniform hypergraphs with
// bounded r-degree. Subcommands: gen, stats, clean, alpha, verify,
// constants, ramsey, first-moment.
//
// Exit codes: 0 ok, 1 assertion failure, 2 usage, 3 I/O or parse error,
// 4 enumeration budget exceeded. HYPERIND_SEED overrides the default seed.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hyperind/bounds.hpp"
#include "hyperind/errors.hpp"
#include "hyperind/generators.hpp"
#include "hyperind/io.hpp"
#include "hyperind/oracle.hpp"
#include "hyperind/pipeline.hpp"
#include "hyperind/report.hpp"

namespace {

using hyperind::Hypergraph;
using hyperind::Rng;
using hyperind::VertexSet;
using json = hyperind::report::json;

/// Thrown by verify subcommands when an assertion misses its tolerance.
struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HYPERIND_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("HYPERIND_SEED", "must be a nonnegative integer");
        }
    }
    return 0;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_hypergraph(const Hypergraph& h, const std::string& out_path) {
    const std::string summary = "n=" + std::to_string(h.vertex_count()) +
                                " m=" + std::to_string(h.edge_count()) +
                                " max_r_degree=" + std::to_string(hyperind::max_r_degree(h));
    if (out_path == "-") {
        std::cout << hyperind::to_hg_string(h);
        std::cerr << summary << "\n";
    } else {
        hyperind::write_hg_file(h, out_path);
        std::cout << summary << "\n";
    }
}

// ---------------------------------------------------------------------------
// gen

struct GenCommon {
    std::string out = "-";
    std::optional<std::uint64_t> seed;
    std::uint64_t seed_or_default() const { return seed ? *seed : default_seed(); }
};

void add_gen(CLI::App& app) {
    auto* gen = app.add_subcommand("gen", "Generate an instance and write it in .hg format");
    gen->require_subcommand(1);

    // steiner
    auto common_st = std::make_shared<GenCommon>();
    auto st_n = std::make_shared<std::uint64_t>(0);
    auto st_r = std::make_shared<unsigned>(2);
    auto st_failures = std::make_shared<std::uint64_t>(0);
    auto st_fixture = std::make_shared<std::string>();
    auto* steiner = gen->add_subcommand("steiner", "Randomized greedy partial Steiner (n, r+1, r)-system");
    steiner->add_option("--n", *st_n, "vertex count");
    steiner->add_option("--r", *st_r, "r (edges have r+1 vertices)");
    steiner->add_option("--seed", common_st->seed, "PRNG seed");
    steiner->add_option("--max-failures", *st_failures,
                        "stop after this many consecutive rejections (default 50*n)");
    steiner->add_option("--fixture", *st_fixture, "bypass the generator: 'fano' or 'steiner9'")
        ->check(CLI::IsMember({"fano", "steiner9"}));
    steiner->add_option("--out", common_st->out, "output path, '-' for stdout");
    steiner->callback([=] {
        if (!st_fixture->empty()) {
            emit_hypergraph(*st_fixture == "fano" ? hyperind::gen::fano() : hyperind::gen::steiner9(),
                            common_st->out);
            return;
        }
        if (*st_n == 0) throw CLI::ValidationError("--n", "required unless --fixture is given");
        emit_hypergraph(hyperind::gen::partial_steiner(
                            static_cast<hyperind::VertexId>(*st_n), *st_r,
                            Rng(common_st->seed_or_default()).derive("steiner"), *st_failures),
                        common_st->out);
    });

    // blowup
    auto common_bl = std::make_shared<GenCommon>();
    auto bl_base = std::make_shared<std::string>();
    auto bl_d = std::make_shared<unsigned>(1);
    auto* blowup = gen->add_subcommand("blowup", "Blowup of a partial Steiner base with part size d");
    blowup->add_option("--base", *bl_base, "base .hg file")->required();
    blowup->add_option("--d", *bl_d, "part size")->required();
    blowup->add_option("--out", common_bl->out, "output path, '-' for stdout");
    blowup->callback([=] {
        hyperind::gen::BlowupSpec spec{hyperind::read_hg_file(*bl_base), *bl_d};
        emit_hypergraph(hyperind::gen::blowup(spec), common_bl->out);
    });

    // random
    auto common_rd = std::make_shared<GenCommon>();
    auto rd_n = std::make_shared<std::uint64_t>(0);
    auto rd_u = std::make_shared<unsigned>(3);
    auto rd_p = std::make_shared<double>(0.5);
    auto* random = gen->add_subcommand("random", "Each uniformity-set kept independently with probability p");
    random->add_option("--n", *rd_n, "vertex count")->required();
    random->add_option("--u", *rd_u, "uniformity")->required();
    random->add_option("--p", *rd_p, "edge probability")->required();
    random->add_option("--seed", common_rd->seed, "PRNG seed");
    random->add_option("--out", common_rd->out, "output path, '-' for stdout");
    random->callback([=] {
        emit_hypergraph(hyperind::gen::random_uniform(static_cast<hyperind::VertexId>(*rd_n), *rd_u,
                                                      *rd_p,
                                                      Rng(common_rd->seed_or_default()).derive("random")),
                        common_rd->out);
    });

    // star
    auto common_star = std::make_shared<GenCommon>();
    auto star_r = std::make_shared<unsigned>(2);
    auto star_k = std::make_shared<unsigned>(0);
    auto star_l = std::make_shared<unsigned>(0);
    auto* star = gen->add_subcommand("star", "Star gadget: center + k disjoint r-sets + l isolated vertices");
    star->add_option("--r", *star_r, "r")->required();
    star->add_option("--k", *star_k, "number of r-sets")->required();
    star->add_option("--l", *star_l, "isolated vertices")->required();
    star->add_option("--out", common_star->out, "output path, '-' for stdout");
    star->callback([=] {
        const auto gadget = hyperind::gen::star_gadget(*star_r, *star_k, *star_l);
        std::cerr << "center=" << gadget.center << "\n";
        emit_hypergraph(gadget.graph, common_star->out);
    });

    // t-r
    auto common_tr = std::make_shared<GenCommon>();
    auto tr_r = std::make_shared<unsigned>(2);
    auto* tr = gen->add_subcommand("t-r", "The forbidden configuration (an r-graph)");
    tr->add_option("--r", *tr_r, "r")->required();
    tr->add_option("--out", common_tr->out, "output path, '-' for stdout");
    tr->callback([=] { emit_hypergraph(hyperind::gen::t_r(*tr_r), common_tr->out); });
}

// ---------------------------------------------------------------------------
// stats / clean / alpha

void add_stats(CLI::App& app) {
    auto in = std::make_shared<std::string>();
    auto* stats = app.add_subcommand("stats", "Structural report for an .hg file");
    stats->add_option("--in", *in, "input .hg file")->required();
    stats->callback([=] { emit_json(hyperind::report::stats_report(hyperind::read_hg_file(*in))); });
}

void add_clean(CLI::App& app) {
    auto in = std::make_shared<std::string>();
    auto p = std::make_shared<double>(1.0);
    auto seed = std::make_shared<std::optional<std::uint64_t>>();
    auto keep_out = std::make_shared<std::string>();
    auto* clean = app.add_subcommand(
        "clean", "Sample a random vertex subset and delete until linear and triangle-free");
    clean->add_option("--in", *in, "input .hg file")->required();
    clean->add_option("--p", *p, "sampling probability (default 1: whole vertex set)");
    clean->add_option("--seed", *seed, "PRNG seed");
    clean->add_option("--keep-out", *keep_out, "write the kept induced subgraph to this .hg file");
    clean->callback([=] {
        const Hypergraph h = hyperind::read_hg_file(*in);
        const std::uint64_t s = seed->has_value() ? **seed : default_seed();
        const VertexSet x = hyperind::pipeline::random_subset(h, *p, Rng(s).derive("subset"));
        const auto report = hyperind::pipeline::cleanup(h, x);
        if (!keep_out->empty()) {
            hyperind::write_hg_file(hyperind::induced(h, report.kept).graph, *keep_out);
        }
        emit_json(hyperind::report::cleanup_report(report));
    });
}

void add_alpha(CLI::App& app) {
    auto in = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("exact");
    auto seed = std::make_shared<std::optional<std::uint64_t>>();
    auto restarts = std::make_shared<unsigned>(50);
    auto p = std::make_shared<std::optional<double>>();
    auto b = std::make_shared<std::optional<double>>();
    auto max_vertices = std::make_shared<hyperind::VertexId>(26);
    auto max_sets = std::make_shared<std::uint64_t>(std::uint64_t{1} << 26);
    auto* alpha = app.add_subcommand("alpha", "Independence number: exact, greedy, or full pipeline run");
    alpha->add_option("--in", *in, "input .hg file")->required();
    alpha->add_option("--mode", *mode, "exact | greedy | pipeline")
        ->check(CLI::IsMember({"exact", "greedy", "pipeline"}));
    alpha->add_option("--seed", *seed, "PRNG seed");
    alpha->add_option("--restarts", *restarts, "greedy restarts");
    alpha->add_option("--p", *p, "pipeline sampling probability (default: canonical choice)");
    alpha->add_option("--b", *b, "pipeline weight cap (default: canonical choice)");
    alpha->add_option("--max-vertices", *max_vertices, "exact-mode vertex budget");
    alpha->add_option("--max-sets", *max_sets, "exact-mode enumeration budget");
    alpha->callback([=] {
        const Hypergraph h = hyperind::read_hg_file(*in);
        const std::uint64_t s = seed->has_value() ? **seed : default_seed();
        if (*mode == "exact") {
            emit_json(hyperind::report::alpha_report(
                hyperind::oracle::alpha_exact(h, {*max_vertices, *max_sets})));
        } else if (*mode == "greedy") {
            emit_json(hyperind::report::alpha_report(
                hyperind::pipeline::greedy_alpha(h, Rng(s).derive("greedy"), *restarts)));
        } else {
            if (h.uniformity() < 3) {
                throw CLI::ValidationError("--mode", "pipeline needs uniformity >= 3 (r >= 2)");
            }
            const std::uint64_t d = std::max<std::uint64_t>(1, hyperind::max_r_degree(h));
            auto chosen = hyperind::pipeline::choose_parameters(h.vertex_count(), d,
                                                                h.uniformity() - 1, s);
            if (chosen.iterated_log_substituted) {
                std::cerr << "note: n below 3814280, iterated log factor set to 1\n";
            }
            hyperind::pipeline::Params params = chosen.params;
            if (p->has_value()) params.p = **p;
            if (b->has_value()) params.b = **b;
            hyperind::pipeline::RunOptions options;
            options.greedy_restarts = *restarts;
            const auto result = hyperind::pipeline::run(h, params, options);
            emit_json(hyperind::report::report_v1(params, result));
        }
    });
}

// ---------------------------------------------------------------------------
// verify

void add_verify(CLI::App& app) {
    auto* verify = app.add_subcommand("verify", "Run a named invariant suite; exit 1 on failure");
    verify->require_subcommand(1);

    {
        auto k = std::make_shared<std::uint64_t>(400);
        auto q = std::make_shared<double>(0.25);
        auto b = std::make_shared<double>(5.0);
        auto tol = std::make_shared<double>(0.02);
        auto* cmd = verify->add_subcommand("lemma3", "exact sum vs min(qk, b) within --tol");
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--b", *b)->required();
        cmd->add_option("--tol", *tol, "relative tolerance");
        cmd->callback([=] {
            const auto sum = hyperind::bounds::lemma3_sum(*k, *q, *b);
            const double rel = std::abs(sum.exact - sum.asymptote) / sum.asymptote;
            const bool pass = rel <= *tol;
            emit_json(json{{"k", *k}, {"q", *q}, {"b", *b}, {"exact", sum.exact},
                           {"asymptote", sum.asymptote}, {"rel_error", rel}, {"tol", *tol},
                           {"pass", pass}});
            if (!pass) {
                throw VerifyFailure("lemma3: rel_error " + std::to_string(rel) + " > tol " +
                                    std::to_string(*tol));
            }
        });
    }
    {
        auto r = std::make_shared<unsigned>(2);
        auto kmax = std::make_shared<unsigned>(4);
        auto lmax = std::make_shared<unsigned>(3);
        auto tol = std::make_shared<double>(1e-12);
        auto* cmd = verify->add_subcommand(
            "weights", "brute-force vs closed-form conditional weight on the gadget grid");
        cmd->add_option("--r", *r)->required();
        cmd->add_option("--kmax", *kmax);
        cmd->add_option("--lmax", *lmax);
        cmd->add_option("--tol", *tol, "relative tolerance");
        cmd->callback([=] {
            double worst = 0.0;
            json cases = json::array();
            for (unsigned k = 0; k <= *kmax; ++k) {
                for (unsigned l = 0; l <= *lmax; ++l) {
                    for (double b : {1.0, 2.0, 4.0, 8.0}) {
                        const double brute = hyperind::oracle::brute_conditional_weight(*r, k, l, b);
                        const double closed = hyperind::pipeline::closed_conditional_weight(*r, k, b);
                        const double rel = std::abs(brute - closed) / closed;
                        worst = std::max(worst, rel);
                        cases.push_back(json{{"k", k}, {"l", l}, {"b", b}, {"brute", brute},
                                             {"closed", closed}, {"rel_error", rel}});
                    }
                }
            }
            const bool pass = worst <= *tol;
            emit_json(json{{"r", *r}, {"max_rel_error", worst}, {"tol", *tol}, {"pass", pass},
                           {"cases", cases}});
            if (!pass) {
                throw VerifyFailure("weights: max_rel_error " + std::to_string(worst) + " > tol");
            }
        });
    }
    {
        auto n = std::make_shared<std::uint64_t>(0);
        auto d = std::make_shared<std::uint64_t>(1);
        auto r = std::make_shared<unsigned>(2);
        auto p = std::make_shared<std::optional<double>>();
        auto b = std::make_shared<std::optional<double>>();
        auto alpha = std::make_shared<std::optional<double>>();
        auto threshold = std::make_shared<double>(0.1);
        auto* cmd = verify->add_subcommand(
            "conditions", "applicability ratios; exit 0 iff all at or below the advisory threshold");
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--d", *d)->required();
        cmd->add_option("--r", *r)->required();
        cmd->add_option("--p", *p, "override the canonical p");
        cmd->add_option("--b", *b, "override the canonical b");
        cmd->add_option("--alpha", *alpha, "override the default independence bound");
        cmd->add_option("--threshold", *threshold, "advisory 'holds at this scale' ratio");
        cmd->callback([=] {
            auto chosen = hyperind::pipeline::choose_parameters(*n, *d, *r);
            if (p->has_value()) chosen.params.p = **p;
            if (b->has_value()) chosen.params.b = **b;
            const auto report = hyperind::pipeline::check_conditions(chosen.params, *alpha);
            json out = hyperind::report::condition_report(report);
            out["threshold"] = *threshold;
            out["p"] = chosen.params.p;
            out["b"] = chosen.params.b;
            const bool pass = !report.degenerate && report.first.ratio <= *threshold &&
                              report.second.ratio <= *threshold && report.third.ratio <= *threshold;
            out["pass"] = pass;
            emit_json(out);
            if (!pass) {
                std::string which = report.degenerate          ? "degenerate parameters"
                                    : report.first.ratio > *threshold  ? "first"
                                    : report.second.ratio > *threshold ? "second"
                                                                       : "third";
                throw VerifyFailure("conditions: " + which + " above threshold");
            }
        });
    }
    {
        auto n = std::make_shared<double>(0.0);
        auto r = std::make_shared<unsigned>(2);
        auto d = std::make_shared<double>(1.0);
        auto eps = std::make_shared<double>(0.1);
        auto* cmd = verify->add_subcommand("first-moment",
                                           "expected count of large independent sets must be < 1");
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--r", *r)->required();
        cmd->add_option("--d", *d)->required();
        cmd->add_option("--epsilon", *eps)->required();
        cmd->callback([=] {
            const auto report = hyperind::bounds::first_moment(*n, *r, *d, *eps);
            json out = hyperind::report::first_moment_report(report);
            const bool pass = !report.x_exceeds_n && report.log_expected_count < 0.0;
            out["pass"] = pass;
            emit_json(out);
            if (!pass) throw VerifyFailure("first-moment: logE not negative at these parameters");
        });
    }
    {
        auto r = std::make_shared<unsigned>(2);
        auto rmax = std::make_shared<std::optional<unsigned>>();
        auto tol = std::make_shared<double>(1e-10);
        auto* cmd = verify->add_subcommand("constants", "c_r formula round-trip residual");
        cmd->add_option("--r", *r)->required();
        cmd->add_option("--rmax", *rmax, "check the whole range [r, rmax]");
        cmd->add_option("--tol", *tol, "relative residual tolerance");
        cmd->callback([=] {
            const unsigned hi = rmax->has_value() ? **rmax : *r;
            double worst = 0.0;
            unsigned worst_r = *r;
            for (unsigned rr = *r; rr <= hi; ++rr) {
                const auto report = hyperind::bounds::c_r_constant(rr);
                // c_r^r * (-r(3r-1) 2^r log(1-2^{-r})) should reproduce r!.
                const double log_lhs = rr * std::log(report.c_r) +
                                       std::log(report.r_times_3r_minus_1) +
                                       rr * std::log(2.0) +
                                       std::log(-report.log_one_minus_2_pow_minus_r);
                const double residual = std::abs(std::expm1(log_lhs - report.log_r_factorial));
                if (residual > worst) { worst = residual; worst_r = rr; }
            }
            const bool pass = worst <= *tol;
            emit_json(json{{"r_min", *r}, {"r_max", hi}, {"max_residual", worst},
                           {"worst_r", worst_r}, {"tol", *tol}, {"pass", pass}});
            if (!pass) {
                throw VerifyFailure("constants: residual at r=" + std::to_string(worst_r) +
                                    " above tol");
            }
        });
    }
}

// ---------------------------------------------------------------------------
// constants / ramsey / first-moment

void add_constants(CLI::App& app) {
    auto rmin = std::make_shared<unsigned>(2);
    auto rmax = std::make_shared<unsigned>(64);
    auto out = std::make_shared<std::string>("-");
    auto* cmd = app.add_subcommand("constants", "CSV table of the bound constants");
    cmd->add_option("--rmin", *rmin);
    cmd->add_option("--rmax", *rmax);
    cmd->add_option("--out", *out, "output path, '-' for stdout");
    cmd->callback([=] {
        const std::string csv = hyperind::report::constants_csv(*rmin, *rmax);
        if (*out == "-") std::cout << csv;
        else hyperind::write_file_atomic(*out, csv);
    });
}

void add_ramsey(CLI::App& app) {
    auto r = std::make_shared<unsigned>(2);
    auto t = std::make_shared<double>(3.0);
    auto c = std::make_shared<std::optional<double>>();
    auto* cmd = app.add_subcommand("ramsey", "Invert the bound: n forcing the two-coloring outcome");
    cmd->add_option("--r", *r)->required();
    cmd->add_option("--t", *t)->required();
    cmd->add_option("--c", *c, "override the lower-bound constant");
    cmd->callback([=] {
        emit_json(hyperind::report::ramsey_report(hyperind::bounds::ramsey_upper(*r, *t, *c)));
    });
}

void add_first_moment(CLI::App& app) {
    auto n = std::make_shared<double>(0.0);
    auto r = std::make_shared<unsigned>(2);
    auto d = std::make_shared<double>(1.0);
    auto eps = std::make_shared<double>(0.1);
    auto* cmd = app.add_subcommand("first-moment",
                                   "Expected number of independent x-sets in the random instance");
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--r", *r)->required();
    cmd->add_option("--d", *d)->required();
    cmd->add_option("--epsilon", *eps)->required();
    cmd->callback([=] {
        emit_json(hyperind::report::first_moment_report(hyperind::bounds::first_moment(*n, *r, *d, *eps)));
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperind: independent sets in uniform hypergraphs of bounded r-degree"};
    app.require_subcommand(1);
    add_gen(app);
    add_stats(app);
    add_clean(app);
    add_alpha(app);
    add_verify(app);
    add_constants(app);
    add_ramsey(app);
    add_first_moment(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const VerifyFailure& e) {
        std::cerr << "FAIL: " << e.what() << "\n";
        return 1;
    } catch (const hyperind::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 4;
    } catch (const hyperind::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

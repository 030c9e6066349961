#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperind/bounds.hpp"
#include "hyperind/hypergraph.hpp"
#include "hyperind/oracle.hpp"
#include "hyperind/rng.hpp"

namespace hyperind::pipeline {

/// Parameter bundle for one randomized run over an (r+1)-graph on n
/// vertices with maximum r-degree d.
struct Params {
    std::uint64_t n = 0;
    std::uint64_t d = 1;
    unsigned r = 2;
    double p = 1.0; // vertex sampling probability, in (0, 1]
    double b = 1.0; // weight cap, positive
    std::uint64_t seed = 0;

    double q() const { return 1.0 - std::exp2(-static_cast<double>(r)); }
    double pn() const { return p * static_cast<double>(n); }
};

struct ChooseResult {
    Params params;
    /// n below 3814280 (the first integer whose thrice-iterated log reaches
    /// 1) substitutes 1 for that factor so desk-scale runs stay defined.
    bool iterated_log_substituted = false;
    /// d outside d < n/(log n)^{3r^2}; allowed but reported.
    bool degree_bound_violated = false;
    bool p_clamped = false;
};

/// The canonical parameter choice:
///   pn = (n / (d logloglog n))^{3/(3r-1)},  b = log(n/d) / (r(3r-1)),
/// with p clamped into (0, 1]. Throws ParameterError when d >= n (b would be
/// nonpositive) or inputs are out of domain.
ChooseResult choose_parameters(std::uint64_t n, std::uint64_t d, unsigned r, std::uint64_t seed = 0);

/// Each vertex kept independently with probability p.
VertexSet random_subset(const Hypergraph& h, double p, Rng rng);

struct CleanupReport {
    VertexSet sampled; // X
    VertexSet deleted;
    VertexSet kept;    // X minus deleted
    std::uint64_t triangles_found = 0;
    std::uint64_t overlap_pairs_found = 0;
};

/// Repeatedly locates a violating structure in the subgraph induced by the
/// surviving sample - first any pair of edges sharing >= 2 vertices, then
/// any triangle - and deletes one vertex of it, until the induced subgraph
/// is linear and triangle-free. Deterministic: structures are taken in
/// lexicographic edge order and the deleted vertex is the smallest id in
/// the structure's intersection support.
CleanupReport cleanup(const Hypergraph& h, const VertexSet& x);

/// min(b, number of (uniformity-1)-subsets of z forming an edge with v).
/// Requires v outside z and z independent.
double omega(const Hypergraph& h, const VertexSet& z, VertexId v, double b);

/// Sum of omega over all vertices outside z.
double h_statistic(const Hypergraph& h, const VertexSet& z, double b);

struct WeightReport {
    std::uint64_t z_size = 0;
    double h_value = 0.0;
    double w_value = 0.0; // e^b |Z| + h
    /// omega for every vertex outside Z, ascending by vertex id.
    std::vector<std::pair<VertexId, double>> omegas;
};

WeightReport weight_statistic(const Hypergraph& h, const VertexSet& z, double b);

/// Closed form of the conditional center weight:
///   e^b q^k / (1 + q^k) + E[min(Binomial(k, 2^{-r}), b)] / (1 + q^k)
/// with q = 1 - 2^{-r}; the binomial expectation is the stable log-space
/// rewrite of sum_j C(k,j)(2^r-1)^{k-j} min(j,b) / (2^{rk} + (2^r-1)^k).
double closed_conditional_weight(unsigned r, std::uint64_t k, double b);

/// One side-pair of an asymptotic comparison. ratio is always
/// (smaller-required side) / (larger-required side), so values well below 1
/// mean the comparison holds at this scale. Never collapsed to a boolean.
struct ConditionSide {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

struct ConditionReport {
    double alpha = 0.0; // independence bound the conditions are tested against
    double q = 0.0;
    bool degenerate = false;
    ConditionSide first;  // p d^2 a^{2r} / (n b^2 + d b a^r)  >>  a log n
    ConditionSide second; // d^3 n^{3r-3} p^{3r}  <<  p n
    ConditionSide third;  // e^b a  <<  p d a^r
};

/// alpha defaults to c_r ((n/d) log(n/d))^{1/r}.
ConditionReport check_conditions(const Params& params, std::optional<double> alpha = {});

enum class ExpectationMethod { exact, monte_carlo };

struct Lemma4Check {
    double lhs = 0.0; // E(h(Z,b)) + e^b E(|Z|) over uniform independent Z
    double rhs = 0.0; // b |Y| / (-2^r log(1 - 2^{-r}))
    ExpectationMethod method = ExpectationMethod::exact;
    std::optional<double> standard_error; // monte-carlo only
    std::uint64_t samples = 0;            // monte-carlo only
    double mean_h = 0.0;
    double mean_z_size = 0.0;
};

struct PipelineResult {
    CleanupReport cleanup;
    oracle::AlphaCertificate witness; // greedy lower bound, original vertex ids
    WeightReport witness_weights;     // of the witness inside the kept subgraph
    Lemma4Check lemma4;
    ConditionReport conditions;
};

/// Randomized greedy independent set: random permutation, take every vertex
/// that closes no edge, best of `restarts` permutations.
oracle::AlphaCertificate greedy_alpha(const Hypergraph& h, Rng rng, unsigned restarts);

struct RunOptions {
    unsigned greedy_restarts = 50;
    /// Exact expectations up to this many kept vertices, Monte-Carlo above.
    VertexId exact_expectation_limit = 24;
    std::uint64_t mc_target_samples = 2000;
    std::uint64_t mc_max_proposals = 400000;
};

/// Full run: sample -> cleanup -> witness and weight statistics on the kept
/// subgraph, plus both sides of the expectation inequality and the
/// applicability conditions. Requires h.uniformity() == params.r + 1 and
/// params.n == h.vertex_count().
PipelineResult run(const Hypergraph& h, const Params& params, const RunOptions& options = {});

} // namespace hyperind::pipeline

#include "hyperind/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hyperind/errors.hpp"

namespace hyperind::pipeline {

namespace {

/// First integer n with log(log(log(n))) >= 1.
constexpr std::uint64_t kIteratedLogFloor = 3814280;

double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

unsigned intersect(const Edge& a, const Edge& b, VertexId* first_common) {
    unsigned count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else {
            if (count == 0 && first_common) *first_common = a[i];
            ++count; ++i; ++j;
        }
    }
    return count;
}

} // namespace

ChooseResult choose_parameters(std::uint64_t n, std::uint64_t d, unsigned r, std::uint64_t seed) {
    if (r < 2) throw ParameterError("choose_parameters: r must be >= 2");
    if (d < 1) throw ParameterError("choose_parameters: d must be >= 1");
    if (d >= n) {
        throw ParameterError("choose_parameters: requires d < n (got d = " + std::to_string(d) +
                             ", n = " + std::to_string(n) + "); increase n above d");
    }

    ChooseResult result;
    result.params.n = n;
    result.params.d = d;
    result.params.r = r;
    result.params.seed = seed;

    const double nd = static_cast<double>(n) / static_cast<double>(d);
    result.params.b = std::log(nd) / (static_cast<double>(r) * (3.0 * r - 1.0));

    double iterated = 1.0;
    if (n >= kIteratedLogFloor) {
        iterated = std::log(std::log(std::log(static_cast<double>(n))));
    } else {
        result.iterated_log_substituted = true;
    }
    const double exponent = 3.0 / (3.0 * r - 1.0);
    const double pn = std::pow(static_cast<double>(n) / (static_cast<double>(d) * iterated), exponent);
    double p = pn / static_cast<double>(n);
    if (p > 1.0) {
        p = 1.0;
        result.p_clamped = true;
    }
    result.params.p = p;

    // d < n/(log n)^{3r^2} is the regime the parameter choice is designed
    // for; runs outside it are allowed but reported.
    const double log_n = std::log(static_cast<double>(n));
    const double threshold_log = log_n - 3.0 * r * r * std::log(log_n);
    result.degree_bound_violated = std::log(static_cast<double>(d)) >= threshold_log;
    return result;
}

VertexSet random_subset(const Hypergraph& h, double p, Rng rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_subset: p must lie in [0,1]");
    std::vector<VertexId> members;
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        if (rng.next_bernoulli(p)) members.push_back(v);
    }
    return VertexSet::from_sorted(std::move(members));
}

CleanupReport cleanup(const Hypergraph& h, const VertexSet& x) {
    for (VertexId v : x.members()) {
        if (v >= h.vertex_count()) throw std::invalid_argument("cleanup: vertex out of range");
    }
    std::vector<char> kept(h.vertex_count(), 0);
    for (VertexId v : x.members()) kept[v] = 1;

    CleanupReport report;
    report.sampled = x;
    std::vector<VertexId> deleted;
    std::vector<EdgeId> active;

    auto rebuild_active = [&] {
        active.clear();
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            bool alive = true;
            for (VertexId v : h.edge(e)) {
                if (!kept[v]) { alive = false; break; }
            }
            if (alive) active.push_back(e);
        }
    };

    while (true) {
        rebuild_active();
        const std::size_t m = active.size();

        // Pass 1: first pair of edges sharing two or more vertices.
        bool removed = false;
        for (std::size_t a = 0; a < m && !removed; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                const Edge& ea = h.edge(active[a]);
                const Edge& eb = h.edge(active[b]);
                VertexId first_common = 0;
                if (intersect(ea, eb, &first_common) >= 2) {
                    kept[first_common] = 0;
                    deleted.push_back(first_common);
                    ++report.overlap_pairs_found;
                    removed = true;
                    break;
                }
            }
        }
        if (removed) continue;

        // Pass 2: the subgraph is linear; find the first triangle. Cache the
        // pairwise intersection data once, then scan triples in lex order.
        if (m >= 3) {
            std::vector<std::uint8_t> meets_once(m * m, 0);
            std::vector<VertexId> common(m * m, 0);
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t b = a + 1; b < m; ++b) {
                    VertexId v = 0;
                    if (intersect(h.edge(active[a]), h.edge(active[b]), &v) == 1) {
                        meets_once[a * m + b] = 1;
                        common[a * m + b] = v;
                    }
                }
            }
            for (std::size_t a = 0; a < m && !removed; ++a) {
                for (std::size_t b = a + 1; b < m && !removed; ++b) {
                    if (!meets_once[a * m + b]) continue;
                    const VertexId ab = common[a * m + b];
                    for (std::size_t c = b + 1; c < m; ++c) {
                        if (!meets_once[a * m + c] || !meets_once[b * m + c]) continue;
                        const VertexId ac = common[a * m + c];
                        const VertexId bc = common[b * m + c];
                        if (ab == ac || ab == bc || ac == bc) continue;
                        const VertexId victim = std::min({ab, ac, bc});
                        kept[victim] = 0;
                        deleted.push_back(victim);
                        ++report.triangles_found;
                        removed = true;
                        break;
                    }
                }
            }
        }
        if (!removed) break;
    }

    report.deleted = VertexSet::from_unsorted(std::move(deleted));
    std::vector<VertexId> kept_members;
    for (VertexId v : x.members()) {
        if (kept[v]) kept_members.push_back(v);
    }
    report.kept = VertexSet::from_sorted(std::move(kept_members));
    return report;
}

namespace {

/// Per-vertex capped counts for z, one pass over the edges: an edge
/// contributes to v exactly when v is its only vertex outside z.
std::vector<std::pair<VertexId, std::uint64_t>> completion_counts(const Hypergraph& h,
                                                                  const VertexSet& z) {
    std::vector<std::uint64_t> count(h.vertex_count(), 0);
    for (const Edge& e : h.edges()) {
        VertexId outside = 0;
        unsigned outside_count = 0;
        for (VertexId v : e) {
            if (!z.contains(v)) {
                outside = v;
                if (++outside_count > 1) break;
            }
        }
        if (outside_count == 1) ++count[outside];
    }
    std::vector<std::pair<VertexId, std::uint64_t>> result;
    result.reserve(h.vertex_count() - z.size());
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        if (!z.contains(v)) result.emplace_back(v, count[v]);
    }
    return result;
}

void require_independent(const Hypergraph& h, const VertexSet& z, const char* who) {
    if (!is_independent(h, z)) {
        throw std::invalid_argument(std::string(who) + ": z must be independent");
    }
}

} // namespace

double omega(const Hypergraph& h, const VertexSet& z, VertexId v, double b) {
    if (v >= h.vertex_count()) throw std::invalid_argument("omega: vertex out of range");
    if (z.contains(v)) throw std::invalid_argument("omega: v must lie outside z");
    require_independent(h, z, "omega");
    std::uint64_t count = 0;
    for (EdgeId e : h.edges_containing(v)) {
        bool rest_in_z = true;
        for (VertexId w : h.edge(e)) {
            if (w != v && !z.contains(w)) { rest_in_z = false; break; }
        }
        if (rest_in_z) ++count;
    }
    return std::min(static_cast<double>(count), b);
}

namespace {

double h_statistic_unchecked(const Hypergraph& h, const VertexSet& z, double b) {
    double sum = 0.0;
    for (const auto& [v, count] : completion_counts(h, z)) {
        sum += std::min(static_cast<double>(count), b);
    }
    return sum;
}

} // namespace

double h_statistic(const Hypergraph& h, const VertexSet& z, double b) {
    require_independent(h, z, "h_statistic");
    return h_statistic_unchecked(h, z, b);
}

WeightReport weight_statistic(const Hypergraph& h, const VertexSet& z, double b) {
    require_independent(h, z, "weight_statistic");
    WeightReport report;
    report.z_size = z.size();
    for (const auto& [v, count] : completion_counts(h, z)) {
        report.omegas.emplace_back(v, std::min(static_cast<double>(count), b));
        report.h_value += report.omegas.back().second;
    }
    report.w_value = std::exp(b) * static_cast<double>(report.z_size) + report.h_value;
    return report;
}

double closed_conditional_weight(unsigned r, std::uint64_t k, double b) {
    if (r < 2) throw std::invalid_argument("closed_conditional_weight: r must be >= 2");
    if (!(b > 0.0)) throw std::invalid_argument("closed_conditional_weight: b must be positive");
    const double q = 1.0 - std::exp2(-static_cast<double>(r));
    const double log_qk = static_cast<double>(k) * std::log(q);
    const double qk = std::exp(log_qk);
    const double center_term = std::exp(b + log_qk); // e^b q^k without overflow
    const double sum = (k == 0) ? 0.0
                                : bounds::lemma3_sum(k, std::exp2(-static_cast<double>(r)), b).exact;
    return (center_term + sum) / (1.0 + qk);
}

ConditionReport check_conditions(const Params& params, std::optional<double> alpha) {
    ConditionReport report;
    report.q = params.q();

    const double n = static_cast<double>(params.n);
    const double d = static_cast<double>(params.d);
    const double r = static_cast<double>(params.r);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    double a;
    if (alpha) {
        a = *alpha;
    } else if (params.d < params.n) {
        a = bounds::main_lower_bound(n, d, params.r).value;
    } else {
        a = 0.0;
    }
    report.alpha = a;
    if (!(a > 0.0) || !(params.b > 0.0) || !(params.p > 0.0) || !(n > 1.0)) {
        report.degenerate = true;
        report.first = report.second = report.third = ConditionSide{nan, nan, nan};
        return report;
    }

    const double log_p = std::log(params.p);
    const double log_b = std::log(params.b);
    const double log_a = std::log(a);
    const double log_n = std::log(n);
    const double log_d = std::log(d);

    // (first): p d^2 a^{2r} / (n b^2 + d b a^r)  >>  a log n
    const double log_first_denominator =
        log_add_exp(log_n + 2.0 * log_b, log_d + log_b + r * log_a);
    const double log_first_lhs = log_p + 2.0 * log_d + 2.0 * r * log_a - log_first_denominator;
    const double log_first_rhs = log_a + std::log(log_n);
    report.first.lhs = std::exp(log_first_lhs);
    report.first.rhs = std::exp(log_first_rhs);
    report.first.ratio = std::exp(log_first_rhs - log_first_lhs);

    // (second): d^3 n^{3r-3} p^{3r}  <<  p n
    const double log_second_lhs = 3.0 * log_d + (3.0 * r - 3.0) * log_n + 3.0 * r * log_p;
    const double log_second_rhs = log_p + log_n;
    report.second.lhs = std::exp(log_second_lhs);
    report.second.rhs = std::exp(log_second_rhs);
    report.second.ratio = std::exp(log_second_lhs - log_second_rhs);

    // (third): e^b a  <<  p d a^r
    const double log_third_lhs = params.b + log_a;
    const double log_third_rhs = log_p + log_d + r * log_a;
    report.third.lhs = std::exp(log_third_lhs);
    report.third.rhs = std::exp(log_third_rhs);
    report.third.ratio = std::exp(log_third_lhs - log_third_rhs);
    return report;
}

oracle::AlphaCertificate greedy_alpha(const Hypergraph& h, Rng rng, unsigned restarts) {
    restarts = std::max(restarts, 1u);
    const VertexId n = h.vertex_count();
    std::vector<VertexId> perm(n);
    std::vector<char> in_set(n, 0);
    std::vector<VertexId> best;

    for (unsigned round = 0; round < restarts; ++round) {
        std::iota(perm.begin(), perm.end(), 0);
        for (VertexId i = n; i > 1; --i) {
            const auto j = static_cast<VertexId>(rng.next_below(i));
            std::swap(perm[i - 1], perm[j]);
        }
        std::fill(in_set.begin(), in_set.end(), 0);
        std::vector<VertexId> current;
        for (VertexId v : perm) {
            bool closes = false;
            for (EdgeId e : h.edges_containing(v)) {
                bool complete = true;
                for (VertexId w : h.edge(e)) {
                    if (w != v && !in_set[w]) { complete = false; break; }
                }
                if (complete) { closes = true; break; }
            }
            if (!closes) {
                in_set[v] = 1;
                current.push_back(v);
            }
        }
        if (current.size() > best.size()) best = std::move(current);
    }
    return oracle::AlphaCertificate{best.size(), VertexSet::from_unsorted(std::move(best)),
                                    oracle::AlphaMethod::greedy_lower_bound};
}

namespace {

Lemma4Check lemma4_expectations(const Hypergraph& kept_graph, double b, Rng rng,
                                const RunOptions& options) {
    Lemma4Check check;
    const double m = static_cast<double>(kept_graph.vertex_count());
    const unsigned r = kept_graph.uniformity() - 1;
    const double neg_log = -std::log1p(-std::exp2(-static_cast<double>(r)));
    check.rhs = b * m / (std::exp2(static_cast<double>(r)) * neg_log);
    const double e_b = std::exp(b);

    if (kept_graph.vertex_count() <= options.exact_expectation_limit) {
        check.method = ExpectationMethod::exact;
        std::uint64_t count = 0;
        long double sum_h = 0.0L;
        long double sum_z = 0.0L;
        oracle::EnumerationBudget budget;
        budget.max_vertices = std::max<VertexId>(budget.max_vertices, options.exact_expectation_limit);
        oracle::detail::walk_independent_sets(
            kept_graph, budget, [&](const std::vector<VertexId>& z) {
                ++count;
                sum_z += static_cast<long double>(z.size());
                sum_h += static_cast<long double>(
                    h_statistic_unchecked(kept_graph, VertexSet::from_sorted(z), b));
                return true;
            });
        check.mean_h = static_cast<double>(sum_h / count);
        check.mean_z_size = static_cast<double>(sum_z / count);
        check.lhs = check.mean_h + e_b * check.mean_z_size;
        return check;
    }

    // Rejection sampling: propose uniform subsets, keep the independent
    // ones. Accepted samples are exactly uniform over the independent sets,
    // so the estimator is unbiased; only the sample count is random.
    check.method = ExpectationMethod::monte_carlo;
    long double sum_w = 0.0L, sum_w2 = 0.0L, sum_h = 0.0L, sum_z = 0.0L;
    std::uint64_t accepted = 0;
    for (std::uint64_t proposal = 0;
         proposal < options.mc_max_proposals && accepted < options.mc_target_samples; ++proposal) {
        std::vector<VertexId> draw;
        for (VertexId v = 0; v < kept_graph.vertex_count(); ++v) {
            if (rng.next_bernoulli(0.5)) draw.push_back(v);
        }
        VertexSet z = VertexSet::from_sorted(std::move(draw));
        if (!is_independent(kept_graph, z)) continue;
        ++accepted;
        const double h_val = h_statistic_unchecked(kept_graph, z, b);
        const double w = h_val + e_b * static_cast<double>(z.size());
        sum_w += w;
        sum_w2 += static_cast<long double>(w) * w;
        sum_h += h_val;
        sum_z += static_cast<long double>(z.size());
    }
    check.samples = accepted;
    if (accepted > 0) {
        check.lhs = static_cast<double>(sum_w / accepted);
        check.mean_h = static_cast<double>(sum_h / accepted);
        check.mean_z_size = static_cast<double>(sum_z / accepted);
    }
    if (accepted > 1) {
        const long double mean = sum_w / accepted;
        const long double variance = (sum_w2 - accepted * mean * mean) / (accepted - 1);
        check.standard_error =
            static_cast<double>(std::sqrt(std::max(variance, 0.0L) / accepted));
    }
    return check;
}

} // namespace

PipelineResult run(const Hypergraph& h, const Params& params, const RunOptions& options) {
    if (h.uniformity() != params.r + 1) {
        throw std::invalid_argument("run: params.r + 1 must equal the instance uniformity");
    }
    if (params.n != h.vertex_count()) {
        throw std::invalid_argument("run: params.n must equal the instance vertex count");
    }
    if (!(params.p > 0.0) || params.p > 1.0 || !(params.b > 0.0)) {
        throw std::invalid_argument("run: requires 0 < p <= 1 and b > 0");
    }

    Rng rng(params.seed);
    PipelineResult result;

    const VertexSet x = random_subset(h, params.p, rng.derive("subset"));
    result.cleanup = cleanup(h, x);

    const InducedSubgraph kept = induced(h, result.cleanup.kept);

    oracle::AlphaCertificate local =
        greedy_alpha(kept.graph, rng.derive("greedy"), options.greedy_restarts);
    result.witness_weights = weight_statistic(kept.graph, local.witness, params.b);

    std::vector<VertexId> original_witness;
    original_witness.reserve(local.witness.size());
    for (VertexId v : local.witness.members()) original_witness.push_back(kept.to_original[v]);
    result.witness = oracle::AlphaCertificate{local.alpha,
                                              VertexSet::from_unsorted(std::move(original_witness)),
                                              oracle::AlphaMethod::greedy_lower_bound};

    result.lemma4 = lemma4_expectations(kept.graph, params.b, rng.derive("expectation"), options);
    result.conditions = check_conditions(params);
    return result;
}

} // namespace hyperind::pipeline

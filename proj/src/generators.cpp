#include "hyperind/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hyperind::gen {

namespace {

/// C(n, k) if it fits in a signed 64-bit range, otherwise nullopt.
std::optional<std::uint64_t> binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > static_cast<unsigned __int128>(INT64_MAX)) return std::nullopt;
    }
    return static_cast<std::uint64_t>(c);
}

/// Uniform k-subset of [0, n) via Floyd's algorithm, returned ascending.
Edge uniform_subset(VertexId n, unsigned k, Rng& rng) {
    std::set<VertexId> chosen;
    for (VertexId i = n - k; i < n; ++i) {
        auto t = static_cast<VertexId>(rng.next_below(i + 1));
        if (!chosen.insert(t).second) chosen.insert(i);
    }
    return Edge(chosen.begin(), chosen.end());
}

bool next_combination(Edge& c, VertexId n) {
    const unsigned k = static_cast<unsigned>(c.size());
    unsigned i = k;
    while (i > 0) {
        --i;
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (unsigned j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Exact inverse-CDF draw from binomial(count, p). The cumulative walk runs
/// from 0, with the probability mass tracked in log space so a mean far from
/// 0 cannot underflow the recurrence.
std::uint64_t binomial_draw_exact(std::uint64_t count, double p, Rng& rng) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return count;
    const double u = rng.next_unit();
    const double log_odds = std::log(p) - std::log1p(-p);
    double log_pmf = static_cast<double>(count) * std::log1p(-p);
    double cum = 0.0;
    for (std::uint64_t j = 0;; ++j) {
        cum += std::exp(log_pmf);
        if (u < cum || j == count) return j;
        log_pmf += std::log(static_cast<double>(count - j)) -
                   std::log(static_cast<double>(j + 1)) + log_odds;
    }
}

std::uint64_t binomial_draw_normal_approx(double count, double p, Rng& rng) {
    const double mean = count * p;
    const double sd = std::sqrt(count * p * (1.0 - p));
    // Box-Muller.
    const double u1 = std::max(rng.next_unit(), 0x1.0p-53);
    const double u2 = rng.next_unit();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    const double draw = std::round(mean + sd * z);
    if (draw <= 0.0) return 0;
    return static_cast<std::uint64_t>(draw);
}

} // namespace

Hypergraph partial_steiner(VertexId n, unsigned r, Rng rng, std::uint64_t max_consecutive_failures) {
    if (r < 2 || n < r + 1) {
        throw std::invalid_argument("partial_steiner: need n >= r+1 and r >= 2");
    }
    if (max_consecutive_failures == 0) max_consecutive_failures = 50ULL * n;
    const unsigned u = r + 1;

    std::set<Edge> used_rsets;
    std::vector<Edge> edges;
    std::uint64_t failures = 0;
    Edge rset(r);
    while (failures < max_consecutive_failures) {
        Edge candidate = uniform_subset(n, u, rng);
        bool fresh = true;
        for (unsigned drop = 0; drop < u && fresh; ++drop) {
            std::size_t k = 0;
            for (unsigned i = 0; i < u; ++i) {
                if (i != drop) rset[k++] = candidate[i];
            }
            if (used_rsets.count(rset)) fresh = false;
        }
        if (!fresh) {
            ++failures;
            continue;
        }
        failures = 0;
        for (unsigned drop = 0; drop < u; ++drop) {
            std::size_t k = 0;
            for (unsigned i = 0; i < u; ++i) {
                if (i != drop) rset[k++] = candidate[i];
            }
            used_rsets.insert(rset);
        }
        edges.push_back(std::move(candidate));
    }
    std::sort(edges.begin(), edges.end());
    return Hypergraph::create(u, n, std::move(edges));
}

Hypergraph blowup(const BlowupSpec& spec) {
    const Hypergraph& base = spec.base;
    const unsigned u = base.uniformity();
    if (u < 3) throw std::invalid_argument("blowup: base uniformity must be at least 3");
    if (spec.d < 1) throw std::invalid_argument("blowup: part size d must be >= 1");
    if (base.edge_count() > 0 && max_r_degree(base) > 1) {
        throw std::invalid_argument("blowup: base must be a partial Steiner system (max r-degree <= 1)");
    }
    const std::uint64_t big_n = static_cast<std::uint64_t>(base.vertex_count()) * spec.d;
    if (big_n > 0xffffffffULL) throw std::invalid_argument("blowup: too many vertices");
    const auto n = static_cast<VertexId>(big_n);
    const unsigned d = spec.d;

    std::vector<Edge> edges;
    // All u-subsets inside each part; present only once a part can hold one.
    if (d >= u) {
        for (VertexId part = 0; part < base.vertex_count(); ++part) {
            Edge combo(u);
            for (unsigned i = 0; i < u; ++i) combo[i] = part * d + i;
            const VertexId lo = part * d;
            Edge offsets(u);
            for (unsigned i = 0; i < u; ++i) offsets[i] = i;
            do {
                Edge e(u);
                for (unsigned i = 0; i < u; ++i) e[i] = lo + offsets[i];
                edges.push_back(std::move(e));
            } while (next_combination(offsets, d));
        }
    }
    // Transversal edges: one vertex from each part of a base edge.
    std::vector<unsigned> pick(u, 0);
    for (const Edge& be : base.edges()) {
        std::fill(pick.begin(), pick.end(), 0);
        bool exhausted = false;
        while (!exhausted) {
            Edge e(u);
            for (unsigned i = 0; i < u; ++i) e[i] = be[i] * d + pick[i];
            edges.push_back(std::move(e));
            exhausted = true;
            for (unsigned pos = u; pos-- > 0;) {
                if (++pick[pos] < d) { exhausted = false; break; }
                pick[pos] = 0;
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return Hypergraph::create(u, n, std::move(edges));
}

Hypergraph random_uniform(VertexId n, unsigned uniformity, double p, Rng rng) {
    if (uniformity < 2) throw std::invalid_argument("random_uniform: uniformity must be >= 2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_uniform: p must lie in [0,1]");
    if (n < uniformity) return Hypergraph::create(uniformity, n, {});

    const auto total = binomial_u64(n, uniformity);

    // Small candidate spaces: materialize every set and flip a coin for each.
    constexpr std::uint64_t kDirectLimit = 1ULL << 20;
    if (total && *total <= kDirectLimit) {
        std::vector<Edge> edges;
        Edge combo(uniformity);
        for (unsigned i = 0; i < uniformity; ++i) combo[i] = i;
        do {
            if (rng.next_bernoulli(p)) edges.push_back(combo);
        } while (next_combination(combo, n));
        return Hypergraph::create(uniformity, n, std::move(edges));
    }

    // Large spaces: draw the edge count m ~ binomial(total, p), then sample m
    // distinct sets; conditional on the count the included sets are uniform,
    // so the joint law matches independent inclusion. The exact inverse-CDF
    // draw is used while total fits in 64 bits and the mean stays below 1e7
    // (the cumulative walk is linear in the mean); past either cutoff the
    // count comes from a normal approximation.
    constexpr double kExactMeanLimit = 1e7;
    std::uint64_t m;
    double total_approx;
    if (total) {
        total_approx = static_cast<double>(*total);
        m = (total_approx * p <= kExactMeanLimit)
                ? binomial_draw_exact(*total, p, rng)
                : binomial_draw_normal_approx(total_approx, p, rng);
    } else {
        total_approx = std::exp(std::lgamma(static_cast<double>(n) + 1) -
                                std::lgamma(static_cast<double>(uniformity) + 1) -
                                std::lgamma(static_cast<double>(n - uniformity) + 1));
        m = binomial_draw_normal_approx(total_approx, p, rng);
    }
    constexpr std::uint64_t kMaterializeLimit = 50'000'000;
    if (m > kMaterializeLimit) {
        throw std::invalid_argument("random_uniform: requested instance would have " +
                                    std::to_string(m) + " edges; raise n*p feasibility first");
    }

    std::set<Edge> edges;
    while (edges.size() < m) {
        edges.insert(uniform_subset(n, uniformity, rng));
    }
    return Hypergraph::create(uniformity, n, std::vector<Edge>(edges.begin(), edges.end()));
}

StarGadget star_gadget(unsigned r, unsigned k, unsigned l) {
    if (r < 2) throw std::invalid_argument("star_gadget: r must be >= 2");
    const VertexId n = 1 + static_cast<VertexId>(r) * k + l;
    std::vector<Edge> edges;
    edges.reserve(k);
    for (unsigned i = 0; i < k; ++i) {
        Edge e(r + 1);
        e[0] = 0;
        for (unsigned j = 0; j < r; ++j) e[j + 1] = 1 + i * r + j;
        edges.push_back(std::move(e));
    }
    return StarGadget{Hypergraph::create(r + 1, n, std::move(edges)), 0, r, k, l};
}

Hypergraph t_r(unsigned r) {
    if (r < 2) throw std::invalid_argument("t_r: r must be >= 2");
    const VertexId n = 2 * r - 1;
    std::vector<Edge> edges;
    // S = {0..r-2}; one edge S ∪ {v} per v in R = {r-1..2r-2}, then R itself.
    for (VertexId v = r - 1; v < n; ++v) {
        Edge e;
        e.reserve(r);
        for (VertexId s = 0; s + 1 < r; ++s) e.push_back(s);
        e.push_back(v);
        edges.push_back(std::move(e));
    }
    Edge big_r;
    for (VertexId v = r - 1; v < n; ++v) big_r.push_back(v);
    edges.push_back(std::move(big_r));
    std::sort(edges.begin(), edges.end());
    return Hypergraph::create(r, n, std::move(edges));
}

Hypergraph fano() {
    return Hypergraph::create(3, 7,
                              {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph steiner9() {
    // The affine plane of order 3: rows, columns and both diagonal classes.
    return Hypergraph::create(3, 9,
                              {{0, 1, 2}, {0, 3, 6}, {0, 4, 8}, {0, 5, 7},
                               {1, 3, 8}, {1, 4, 7}, {1, 5, 6},
                               {2, 3, 7}, {2, 4, 6}, {2, 5, 8},
                               {3, 4, 5}, {6, 7, 8}});
}

} // namespace hyperind::gen

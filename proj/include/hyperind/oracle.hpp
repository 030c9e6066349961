#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperind/errors.hpp"
#include "hyperind/generators.hpp"
#include "hyperind/hypergraph.hpp"
#include "hyperind/rng.hpp"

namespace hyperind::oracle {

/// Hard limits for the exponential ground-truth routines. Exceeding either
/// raises BudgetError naming the limit; nothing degrades silently.
struct EnumerationBudget {
    VertexId max_vertices = 26;
    std::uint64_t max_sets = std::uint64_t{1} << 26;
};

enum class AlphaMethod { exact, greedy_lower_bound };

struct AlphaCertificate {
    std::uint64_t alpha = 0;
    VertexSet witness;
    AlphaMethod method = AlphaMethod::exact;
};

namespace detail {

void check_budget(const Hypergraph& h, const EnumerationBudget& budget);

/// Independent sets of h in lexicographic order of their ascending vertex
/// tuples (the empty set first). visit receives the current set; returning
/// false stops the walk. Throws BudgetError past budget.max_sets.
template <typename Visit>
void walk_independent_sets(const Hypergraph& h, const EnumerationBudget& budget, Visit&& visit) {
    check_budget(h, budget);
    const VertexId n = h.vertex_count();
    // Edge masks grouped by their largest vertex: when v is appended to an
    // ascending prefix, only edges with maximum exactly v can newly close.
    std::vector<std::vector<std::uint64_t>> closing(n);
    for (const Edge& e : h.edges()) {
        std::uint64_t mask = 0;
        for (VertexId v : e) mask |= std::uint64_t{1} << v;
        closing[e.back()].push_back(mask);
    }

    std::uint64_t emitted = 0;
    std::vector<VertexId> current;
    std::uint64_t current_mask = 0;
    bool stopped = false;

    auto step = [&](auto&& self, VertexId next_min) -> void {
        if (stopped) return;
        if (++emitted > budget.max_sets) {
            throw BudgetError("independent-set enumeration exceeded max_sets = " +
                              std::to_string(budget.max_sets));
        }
        if (!visit(static_cast<const std::vector<VertexId>&>(current))) {
            stopped = true;
            return;
        }
        for (VertexId v = next_min; v < n; ++v) {
            const std::uint64_t with_v = current_mask | (std::uint64_t{1} << v);
            bool closes = false;
            for (std::uint64_t mask : closing[v]) {
                if ((mask & ~with_v) == 0) { closes = true; break; }
            }
            if (closes) continue;
            current.push_back(v);
            current_mask = with_v;
            self(self, v + 1);
            current.pop_back();
            current_mask &= ~(std::uint64_t{1} << v);
            if (stopped) return;
        }
    };
    step(step, 0);
}

} // namespace detail

/// Exact independence number with a maximum witness, branch-and-bound on
/// vertex inclusion (cut when current + remaining <= best). The witness is a
/// valid maximum independent set; no canonical tie-break is promised.
AlphaCertificate alpha_exact(const Hypergraph& h, const EnumerationBudget& budget = {});

/// All independent sets including the empty set, lexicographic order.
std::vector<VertexSet> enumerate_independent_sets(const Hypergraph& h,
                                                  const EnumerationBudget& budget = {});

std::uint64_t count_independent_sets(const Hypergraph& h, const EnumerationBudget& budget = {});

/// Closed-form count for the star gadget: 2^l * (2^{rk} + (2^r - 1)^k),
/// exact at any size.
boost::multiprecision::cpp_int count_independent_sets_star(unsigned r, unsigned k, unsigned l);

/// Exactly uniform over all independent sets, by enumerate-then-index.
VertexSet sample_uniform_independent_set(const Hypergraph& h, Rng rng,
                                         const EnumerationBudget& budget = {});

/// Expected weight of the star gadget's center over a uniform independent
/// set Z: e^b when the center lies in Z, otherwise the number of gadget
/// r-sets fully inside Z capped at b. Direct enumeration; the closed-form
/// counterpart lives in the pipeline module.
double brute_conditional_weight(unsigned r, unsigned k, unsigned l, double b,
                                const EnumerationBudget& budget = {});

} // namespace hyperind::oracle

#include "hyperind/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyperind::oracle {

namespace detail {

void check_budget(const Hypergraph& h, const EnumerationBudget& budget) {
    if (h.vertex_count() > budget.max_vertices) {
        throw BudgetError("instance has " + std::to_string(h.vertex_count()) +
                          " vertices, over the enumeration budget max_vertices = " +
                          std::to_string(budget.max_vertices));
    }
    if (h.vertex_count() > 64) {
        throw BudgetError("exact routines are limited to 64 vertices");
    }
}

} // namespace detail

namespace {

struct BranchAndBound {
    VertexId n;
    std::vector<std::vector<std::uint64_t>> edges_through; // permuted space
    std::vector<VertexId> perm_to_original;
    std::uint64_t best_size = 0;
    std::uint64_t best_mask = 0;

    void run(std::uint64_t current_mask, std::uint64_t current_size, VertexId idx) {
        if (current_size > best_size) {
            best_size = current_size;
            best_mask = current_mask;
        }
        if (idx >= n) return;
        if (current_size + (n - idx) <= best_size) return;
        // Include idx when no edge through it closes.
        const std::uint64_t with_v = current_mask | (std::uint64_t{1} << idx);
        bool closes = false;
        for (std::uint64_t mask : edges_through[idx]) {
            if ((mask & ~with_v) == 0) { closes = true; break; }
        }
        if (!closes) run(with_v, current_size + 1, idx + 1);
        run(current_mask, current_size, idx + 1);
    }
};

} // namespace

AlphaCertificate alpha_exact(const Hypergraph& h, const EnumerationBudget& budget) {
    detail::check_budget(h, budget);
    const VertexId n = h.vertex_count();

    // Descending degree, ties by id: the standard order that lets the bound
    // bite early. Any order is correct; this one is fixed for determinism.
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return h.edges_containing(a).size() > h.edges_containing(b).size();
    });
    std::vector<VertexId> original_to_perm(n);
    for (VertexId i = 0; i < n; ++i) original_to_perm[order[i]] = i;

    BranchAndBound bb;
    bb.n = n;
    bb.perm_to_original = order;
    bb.edges_through.resize(n);
    for (const Edge& e : h.edges()) {
        std::uint64_t mask = 0;
        for (VertexId v : e) mask |= std::uint64_t{1} << original_to_perm[v];
        for (VertexId v : e) bb.edges_through[original_to_perm[v]].push_back(mask);
    }
    bb.run(0, 0, 0);

    std::vector<VertexId> witness;
    for (VertexId i = 0; i < n; ++i) {
        if (bb.best_mask & (std::uint64_t{1} << i)) witness.push_back(order[i]);
    }
    return AlphaCertificate{bb.best_size, VertexSet::from_unsorted(std::move(witness)),
                            AlphaMethod::exact};
}

std::vector<VertexSet> enumerate_independent_sets(const Hypergraph& h,
                                                  const EnumerationBudget& budget) {
    std::vector<VertexSet> out;
    detail::walk_independent_sets(h, budget, [&](const std::vector<VertexId>& z) {
        out.push_back(VertexSet::from_sorted(z));
        return true;
    });
    return out;
}

std::uint64_t count_independent_sets(const Hypergraph& h, const EnumerationBudget& budget) {
    std::uint64_t count = 0;
    detail::walk_independent_sets(h, budget, [&](const std::vector<VertexId>&) {
        ++count;
        return true;
    });
    return count;
}

boost::multiprecision::cpp_int count_independent_sets_star(unsigned r, unsigned k, unsigned l) {
    using boost::multiprecision::cpp_int;
    if (r < 2) throw std::invalid_argument("count_independent_sets_star: r must be >= 2");
    const cpp_int two_rk = cpp_int(1) << (static_cast<unsigned long>(r) * k);
    const cpp_int base = (cpp_int(1) << r) - 1;
    cpp_int second = 1;
    for (unsigned i = 0; i < k; ++i) second *= base;
    return (cpp_int(1) << l) * (two_rk + second);
}

VertexSet sample_uniform_independent_set(const Hypergraph& h, Rng rng,
                                         const EnumerationBudget& budget) {
    const std::uint64_t count = count_independent_sets(h, budget);
    const std::uint64_t target = rng.next_below(count);
    VertexSet result;
    std::uint64_t index = 0;
    detail::walk_independent_sets(h, budget, [&](const std::vector<VertexId>& z) {
        if (index++ == target) {
            result = VertexSet::from_sorted(z);
            return false;
        }
        return true;
    });
    return result;
}

double brute_conditional_weight(unsigned r, unsigned k, unsigned l, double b,
                                const EnumerationBudget& budget) {
    if (b <= 0.0) throw std::invalid_argument("brute_conditional_weight: b must be positive");
    const gen::StarGadget gadget = gen::star_gadget(r, k, l);

    std::vector<std::uint64_t> m_masks(k);
    for (unsigned i = 0; i < k; ++i) {
        std::uint64_t mask = 0;
        for (unsigned j = 0; j < r; ++j) mask |= std::uint64_t{1} << (1 + i * r + j);
        m_masks[i] = mask;
    }

    std::uint64_t total = 0;
    std::uint64_t with_center = 0;
    double capped_sum = 0.0;
    detail::walk_independent_sets(gadget.graph, budget, [&](const std::vector<VertexId>& z) {
        ++total;
        if (!z.empty() && z.front() == gadget.center) {
            ++with_center;
            return true;
        }
        std::uint64_t mask = 0;
        for (VertexId v : z) mask |= std::uint64_t{1} << v;
        unsigned complete = 0;
        for (std::uint64_t m : m_masks) {
            if ((m & ~mask) == 0) ++complete;
        }
        capped_sum += std::min(static_cast<double>(complete), b);
        return true;
    });
    return (static_cast<double>(with_center) * std::exp(b) + capped_sum) /
           static_cast<double>(total);
}

} // namespace hyperind::oracle

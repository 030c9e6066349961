#include "hyperind/hypergraph.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace hyperind {

namespace {

bool strictly_ascending(const Edge& e) {
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i - 1] >= e[i]) return false;
    }
    return true;
}

std::string edge_to_string(const Edge& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

/// Size of the intersection of two ascending edges.
unsigned intersection_size(const Edge& a, const Edge& b) {
    unsigned count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

/// Intersection vertex of two edges known to meet in exactly one vertex.
VertexId single_intersection(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0;
    while (true) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else return a[i];
    }
}

} // namespace

VertexSet VertexSet::from_sorted(std::vector<VertexId> members) {
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (members[i - 1] >= members[i]) {
            throw std::invalid_argument("VertexSet members not strictly ascending");
        }
    }
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

VertexSet VertexSet::from_unsorted(std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

VertexSet VertexSet::full(VertexId n) {
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    VertexSet s;
    s.members_ = std::move(all);
    return s;
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement_in(VertexId n) const {
    std::vector<VertexId> out;
    out.reserve(n - std::min<std::size_t>(n, members_.size()));
    std::size_t i = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (i < members_.size() && members_[i] == v) { ++i; continue; }
        out.push_back(v);
    }
    VertexSet s;
    s.members_ = std::move(out);
    return s;
}

std::uint64_t IntersectionProfile::total_pairs() const {
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

std::optional<std::string> validate(unsigned uniformity, VertexId n, const std::vector<Edge>& edges) {
    if (uniformity < 2) return "uniformity must be at least 2";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.size() != uniformity) {
            return "edge " + std::to_string(i) + " " + edge_to_string(e) + " has size " +
                   std::to_string(e.size()) + ", expected uniformity " + std::to_string(uniformity);
        }
        if (!strictly_ascending(e)) {
            return "edge " + std::to_string(i) + " " + edge_to_string(e) + " is not strictly ascending";
        }
        if (e.back() >= n) {
            return "edge " + std::to_string(i) + " " + edge_to_string(e) + " has vertex " +
                   std::to_string(e.back()) + " outside [0, " + std::to_string(n) + ")";
        }
        if (i > 0) {
            if (edges[i - 1] == e) {
                return "duplicate edge " + edge_to_string(e) + " at position " + std::to_string(i);
            }
            if (edges[i - 1] > e) {
                return "edge list not in canonical ascending order at position " + std::to_string(i);
            }
        }
    }
    return std::nullopt;
}

Hypergraph::Hypergraph(unsigned uniformity, VertexId n, std::vector<Edge> edges)
    : uniformity_(uniformity), n_(n), edges_(std::move(edges)), incidence_(n) {
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        for (VertexId v : edges_[e]) incidence_[v].push_back(e);
    }
}

Hypergraph Hypergraph::create(unsigned uniformity, VertexId n, std::vector<Edge> edges) {
    if (auto violation = validate(uniformity, n, edges)) {
        throw std::invalid_argument("invalid hypergraph: " + *violation);
    }
    return Hypergraph(uniformity, n, std::move(edges));
}

std::uint64_t degree_of_set(const Hypergraph& h, const VertexSet& s) {
    if (s.size() >= h.uniformity()) {
        throw std::invalid_argument("degree_of_set: set size must be below uniformity");
    }
    for (VertexId v : s.members()) {
        if (v >= h.vertex_count()) {
            throw std::invalid_argument("degree_of_set: vertex out of range");
        }
    }
    if (s.empty()) return h.edge_count();
    // Scan only edges containing the first member.
    std::uint64_t count = 0;
    for (EdgeId e : h.edges_containing(s.members().front())) {
        const Edge& edge = h.edge(e);
        bool all = true;
        for (VertexId v : s.members()) {
            if (!std::binary_search(edge.begin(), edge.end(), v)) { all = false; break; }
        }
        if (all) ++count;
    }
    return count;
}

std::uint64_t max_r_degree(const Hypergraph& h) {
    if (h.edge_count() == 0) return 0;
    const unsigned u = h.uniformity();
    std::map<Edge, std::uint64_t> tally;
    Edge subset(u - 1);
    for (const Edge& e : h.edges()) {
        // The (u-1)-subsets of e are obtained by dropping one position each.
        for (unsigned drop = 0; drop < u; ++drop) {
            std::size_t k = 0;
            for (unsigned i = 0; i < u; ++i) {
                if (i != drop) subset[k++] = e[i];
            }
            ++tally[subset];
        }
    }
    std::uint64_t best = 0;
    for (const auto& [_, c] : tally) best = std::max(best, c);
    return best;
}

bool is_independent(const Hypergraph& h, const VertexSet& z) {
    for (VertexId v : z.members()) {
        if (v >= h.vertex_count()) {
            throw std::invalid_argument("is_independent: vertex out of range");
        }
    }
    if (z.size() < h.uniformity()) return true;
    for (const Edge& e : h.edges()) {
        bool inside = true;
        for (VertexId v : e) {
            if (!z.contains(v)) { inside = false; break; }
        }
        if (inside) return false;
    }
    return true;
}

bool is_linear(const Hypergraph& h) {
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (intersection_size(edges[i], edges[j]) >= 2) return false;
        }
    }
    return true;
}

IntersectionProfile intersection_profile(const Hypergraph& h) {
    IntersectionProfile profile;
    profile.counts.assign(h.uniformity() + 1, 0);
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            ++profile.counts[intersection_size(edges[i], edges[j])];
        }
    }
    return profile;
}

namespace {

template <typename Visit>
void for_each_triangle(const Hypergraph& h, Visit&& visit) {
    const auto& edges = h.edges();
    const std::size_t m = edges.size();
    if (m < 3) return;
    // Adjacency restricted to pairs meeting in exactly one vertex, with the
    // shared vertex cached.
    std::vector<std::vector<std::pair<EdgeId, VertexId>>> meets_once(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (intersection_size(edges[i], edges[j]) == 1) {
                meets_once[i].emplace_back(j, single_intersection(edges[i], edges[j]));
            }
        }
    }
    for (std::size_t e = 0; e < m; ++e) {
        const auto& partners = meets_once[e];
        for (std::size_t a = 0; a < partners.size(); ++a) {
            const auto [f, ef] = partners[a];
            for (std::size_t b = a + 1; b < partners.size(); ++b) {
                const auto [g, eg] = partners[b];
                if (ef == eg) continue;
                if (intersection_size(edges[f], edges[g]) != 1) continue;
                const VertexId fg = single_intersection(edges[f], edges[g]);
                if (fg == ef || fg == eg) continue;
                // Pairwise single intersections at three distinct vertices
                // force an empty triple intersection.
                if (!visit(Triangle{e, f, g})) return;
            }
        }
    }
}

} // namespace

std::vector<Triangle> find_triangles(const Hypergraph& h) {
    std::vector<Triangle> out;
    for_each_triangle(h, [&](const Triangle& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::uint64_t count_triangles(const Hypergraph& h) {
    std::uint64_t count = 0;
    for_each_triangle(h, [&](const Triangle&) {
        ++count;
        return true;
    });
    return count;
}

bool has_independent_neighborhoods(const Hypergraph& h) {
    const unsigned u = h.uniformity();
    // Link of each (u-1)-set R occurring in an edge: the vertices e \ R.
    std::map<Edge, std::vector<VertexId>> links;
    Edge subset(u - 1);
    for (const Edge& e : h.edges()) {
        for (unsigned drop = 0; drop < u; ++drop) {
            std::size_t k = 0;
            for (unsigned i = 0; i < u; ++i) {
                if (i != drop) subset[k++] = e[i];
            }
            links[subset].push_back(e[drop]);
        }
    }
    for (auto& [_, link] : links) {
        if (!is_independent(h, VertexSet::from_unsorted(link))) return false;
    }
    return true;
}

InducedSubgraph induced(const Hypergraph& h, const VertexSet& x) {
    for (VertexId v : x.members()) {
        if (v >= h.vertex_count()) {
            throw std::invalid_argument("induced: vertex out of range");
        }
    }
    std::unordered_map<VertexId, VertexId> to_new;
    to_new.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        to_new.emplace(x.members()[i], static_cast<VertexId>(i));
    }
    std::vector<Edge> kept;
    for (const Edge& e : h.edges()) {
        Edge relabeled;
        relabeled.reserve(e.size());
        for (VertexId v : e) {
            auto it = to_new.find(v);
            if (it == to_new.end()) break;
            relabeled.push_back(it->second);
        }
        if (relabeled.size() == e.size()) kept.push_back(std::move(relabeled));
    }
    // Relabeling is monotone, so edge order stays canonical.
    return InducedSubgraph{
        Hypergraph::create(h.uniformity(), static_cast<VertexId>(x.size()), std::move(kept)),
        x.members()};
}

InducedSubgraph delete_vertices(const Hypergraph& h, const VertexSet& d) {
    for (VertexId v : d.members()) {
        if (v >= h.vertex_count()) {
            throw std::invalid_argument("delete_vertices: vertex out of range");
        }
    }
    return induced(h, d.complement_in(h.vertex_count()));
}

} // namespace hyperind

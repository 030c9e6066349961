#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperind {

using VertexId = std::uint32_t;
using EdgeId = std::size_t;

/// An edge is a strictly ascending tuple of vertex ids.
using Edge = std::vector<VertexId>;

/// Ordered set of vertex ids (strictly ascending, no duplicates).
class VertexSet {
public:
    VertexSet() = default;

    /// members must already be strictly ascending; throws otherwise.
    static VertexSet from_sorted(std::vector<VertexId> members);
    /// Sorts and removes duplicates.
    static VertexSet from_unsorted(std::vector<VertexId> members);
    static VertexSet full(VertexId n);

    const std::vector<VertexId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(VertexId v) const;

    /// [0, n) minus this set.
    VertexSet complement_in(VertexId n) const;

    bool operator==(const VertexSet& other) const = default;

private:
    std::vector<VertexId> members_;
};

/// counts[i] = number of unordered pairs of distinct edges intersecting in
/// exactly i vertices, for i in [0, uniformity].
struct IntersectionProfile {
    std::vector<std::uint64_t> counts;
    std::uint64_t total_pairs() const;
};

/// Three edges with pairwise intersections of size one, the three
/// intersection vertices distinct, and empty common intersection.
/// Edge indices satisfy e < f < g.
struct Triangle {
    EdgeId e, f, g;
    bool operator==(const Triangle&) const = default;
};

/// Checks the representation invariants of a uniform hypergraph over raw
/// data. Returns std::nullopt when everything holds, otherwise a description
/// of the first violation found.
std::optional<std::string> validate(unsigned uniformity, VertexId n, const std::vector<Edge>& edges);

/// Immutable uniform hypergraph: uniformity-sized edges over vertex ids
/// [0, n), edge list strictly ascending lexicographically. Instances always
/// satisfy validate(); construction throws std::invalid_argument otherwise.
/// Safe to share across threads.
class Hypergraph {
public:
    static Hypergraph create(unsigned uniformity, VertexId n, std::vector<Edge> edges);

    unsigned uniformity() const { return uniformity_; }
    VertexId vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    /// Ids of edges containing v, ascending.
    const std::vector<EdgeId>& edges_containing(VertexId v) const { return incidence_[v]; }

private:
    Hypergraph(unsigned uniformity, VertexId n, std::vector<Edge> edges);

    unsigned uniformity_ = 2;
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// induced()/delete_vertices() result: the subgraph with vertices relabeled
/// 0..|X|-1 in ascending original order, plus the relabeling map
/// (new id -> original id).
struct InducedSubgraph {
    Hypergraph graph;
    std::vector<VertexId> to_original;
};

/// Number of edges containing s as a subset. Requires |s| < uniformity.
std::uint64_t degree_of_set(const Hypergraph& h, const VertexSet& s);

/// Maximum, over all (uniformity-1)-sets, of the number of edges containing
/// the set. 0 for an edgeless hypergraph. Iterates edge-side: tallies each
/// edge's (uniformity-1)-subsets instead of scanning all subsets of V.
std::uint64_t max_r_degree(const Hypergraph& h);

/// True iff no edge of h is contained in z.
bool is_independent(const Hypergraph& h, const VertexSet& z);

/// True iff every pair of distinct edges shares at most one vertex.
bool is_linear(const Hypergraph& h);

IntersectionProfile intersection_profile(const Hypergraph& h);

/// All triangles, ordered lexicographically by (e, f, g) edge indices.
std::vector<Triangle> find_triangles(const Hypergraph& h);
std::uint64_t count_triangles(const Hypergraph& h);

/// For every (uniformity-1)-set R occurring in some edge, the link
/// {e \ R : R subset of e} must be an independent set.
bool has_independent_neighborhoods(const Hypergraph& h);

InducedSubgraph induced(const Hypergraph& h, const VertexSet& x);
InducedSubgraph delete_vertices(const Hypergraph& h, const VertexSet& d);

} // namespace hyperind

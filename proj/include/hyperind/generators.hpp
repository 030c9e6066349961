#pragma once

#include <cstdint>

#include "hyperind/hypergraph.hpp"
#include "hyperind/rng.hpp"

namespace hyperind::gen {

/// Blowup input: a partial Steiner base (max r-degree <= 1) and the part
/// size d >= 1.
struct BlowupSpec {
    Hypergraph base;
    unsigned d = 1;
};

/// Randomized greedy partial Steiner (n, r+1, r)-system: repeatedly draw a
/// uniform (r+1)-set whose r-subsets are all unused; stop after
/// max_consecutive_failures rejections in a row (0 means the default 50*n).
/// Output is deterministic given the rng stream and has max r-degree <= 1.
Hypergraph partial_steiner(VertexId n, unsigned r, Rng rng, std::uint64_t max_consecutive_failures = 0);

/// Parts V_i = [i*d, (i+1)*d) for each base vertex i. Edges: all
/// (r+1)-subsets inside each part (empty when d <= r) plus, per base edge,
/// every transversal (r+1)-set taking one vertex from each of its parts.
Hypergraph blowup(const BlowupSpec& spec);

/// Each uniformity-set appears independently with probability p. Small
/// instances enumerate all candidate sets directly; larger ones draw the
/// edge count m from the exact binomial law and then sample m distinct
/// sets, which has the same distribution (see .cpp for cutoffs).
Hypergraph random_uniform(VertexId n, unsigned uniformity, double p, Rng rng);

/// The star gadget: a center vertex, k pairwise-disjoint r-sets each forming
/// an edge with the center, and l isolated extra vertices.
/// Vertices: center = 0, then the k r-sets consecutively, then the l extras.
struct StarGadget {
    Hypergraph graph;
    VertexId center = 0;
    unsigned r = 2, k = 0, l = 0;
};
StarGadget star_gadget(unsigned r, unsigned k, unsigned l);

/// The forbidden configuration: an r-graph on R ∪ S with |S| = r-1,
/// |R| = r, edges S ∪ {v} for each v in R, plus R itself.
/// Vertices 0..r-2 are S, r-1..2r-2 are R.
Hypergraph t_r(unsigned r);

/// Bundled fixtures (also shipped as fixtures/*.hg).
Hypergraph fano();      // the 7-point projective plane, a Steiner (7,3,2)-system
Hypergraph steiner9();  // the Steiner triple system of order 9

} // namespace hyperind::gen

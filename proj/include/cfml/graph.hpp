#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cfml/errors.hpp"

namespace cfml {

using Vid = std::uint32_t;
using Port = std::uint32_t; // 1..deg(v); 0 means "stay / no move"

constexpr Vid kNoVertex = static_cast<Vid>(-1);

using DistanceVector = std::vector<std::uint32_t>;
constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);

/*
 * Undirected, simple, connected graph with per-vertex port numbering.
 * The k-th neighbor in a vertex's adjacency list (0-based k) is reached
 * through port k+1; port 0 is never assigned. Adjacency order is the
 * construction (file) order, so port numbering is deterministic.
 *
 * Immutable after construction; all queries are read-only and safe for
 * concurrent use.
 */
class PortedGraph {
public:
    PortedGraph() = default;

    size_t num_vertices() const { return adj_.size(); }
    size_t num_edges() const { return m_; }

    const std::vector<Vid>& neighbors(Vid u) const { return adj_[u]; }
    std::uint32_t degree(Vid u) const { return static_cast<std::uint32_t>(adj_[u].size()); }

    bool has_edge(Vid u, Vid v) const;

    // Port of the oriented edge (u,v); throws NotEdgeError if uv is absent.
    Port port(Vid u, Vid v) const;

    // Endpoint of the edge leaving u through port p (1-based).
    Vid neighbor_by_port(Vid u, Port p) const;

    // Edges in construction order, each once as (min-end-first is NOT forced;
    // the stored orientation is the input orientation).
    const std::vector<std::pair<Vid, Vid>>& edges() const { return edges_; }

    friend PortedGraph assign_ports(size_t n, const std::vector<std::pair<Vid, Vid>>& edges);

private:
    std::vector<std::vector<Vid>> adj_;
    std::vector<std::pair<Vid, Vid>> edges_;
    size_t m_ = 0;
};

// Builds the ported graph from an edge list: adjacency order = list order,
// port(u, k-th neighbor) = k (1-based). Rejects loops, multi-edges,
// disconnected or empty graphs.
PortedGraph assign_ports(size_t n, const std::vector<std::pair<Vid, Vid>>& edges);

// Exact hop distances from s (graph is connected, so all finite).
DistanceVector bfs_distances(const PortedGraph& g, Vid s);

// I(u,v) = { x : d(u,x) + d(x,v) = d(u,v) }, ascending vertex order.
std::vector<Vid> interval(const PortedGraph& g, Vid u, Vid v);

// Unique vertex of I(u,v) ∩ I(v,w) ∩ I(w,u); throws NotMedianError when the
// intersection is not a singleton.
Vid median_of_triplet(const PortedGraph& g, Vid u, Vid v, Vid w);

struct HalfspacePair {
    Vid u, v;
    std::uint32_t size_wuv; // |W(u,v)| = vertices strictly closer to u
    std::uint32_t size_wvu;
};

// Sizes of the complementary halfspaces of edge uv; throws NotEdgeError.
HalfspacePair halfspace_sizes(const PortedGraph& g, Vid u, Vid v);

struct RecognizerOptions {
    std::uint32_t size_bound = 1024; // SizeGuardError above this
    int threads = 0;                 // 0 = library default
};

// Exhaustive desk-scale check: every vertex triplet has a unique median
// (pre-checks bipartiteness). Throws SizeGuardError when n exceeds the bound.
bool is_median_graph(const PortedGraph& g, const RecognizerOptions& opts = {});

// For a median graph: true iff no isometric 3-cube exists. Detection scans,
// per vertex, triples of neighbors with pairwise square completions and a
// common apex.
bool is_cube_free(const PortedGraph& g);

// m <= 2n, which every cube-free median graph satisfies.
bool edge_count_bound_check(const PortedGraph& g);

// Diagnostic wrapper used by the CLI: runs the class checks in order and
// reports the first failure.
struct ClassCheckReport {
    bool ok = false;
    std::string reason; // empty on success
};
ClassCheckReport check_cube_free_median(const PortedGraph& g, const RecognizerOptions& opts = {});

} // namespace cfml

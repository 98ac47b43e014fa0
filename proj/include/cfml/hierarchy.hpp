#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cfml/graph.hpp"
#include "cfml/star.hpp"
#include "cfml/tree_labels.hpp"

namespace cfml {

enum class FiberKind : std::uint8_t { Center, Panel, Cone };

struct StarMember {
    Vid v;
    StarLabel label;
    FiberKind kind;
    // cone roots only: the two neighboring panel roots, ascending star integer
    Vid panel1 = kNoVertex;
    Vid panel2 = kNoVertex;
};

/*
 * Star of the centroid inside the current scope: the centroid, its scope
 * neighbors (labeled 1..k in adjacency order) and the roots of the squares
 * through the centroid (labeled by the pair of square corners).
 */
struct Star {
    Vid center = kNoVertex;
    std::vector<StarMember> members; // center, then neighbors, then cone roots
    std::vector<std::array<Vid, 4>> squares; // (x, y', c, y'') with label(y') < label(y'')

    const StarMember* find(Vid v) const
    {
        for (const auto& m : members)
            if (m.v == v)
                return &m;
        return nullptr;
    }
};

// Total boundary of a fiber: an isometric tree rooted at the fiber root.
struct BoundaryTree {
    Vid root = kNoVertex;
    std::vector<Vid> verts;                      // ascending
    std::vector<int> parent;                     // index into verts; -1 at root
    std::vector<std::uint32_t> depth;            // = d_G(v, root)
    std::vector<std::vector<std::uint32_t>> adj; // tree adjacency, indices
    std::vector<TreeDistLabel> dist_labels;      // filled for panels
    std::vector<TreeRoutLabel> rout_labels;      // filled for panels

    int index_of(Vid v) const;
    size_t size() const { return verts.size(); }
};

struct FiberData {
    Vid root = kNoVertex;
    FiberKind kind = FiberKind::Center;
    std::vector<Vid> verts; // ascending

    // Relative boundaries keyed by the adjacent member root, with the unique
    // across-neighbor of every boundary vertex. For a panel fiber and an
    // adjacent cone, `across` is exactly the twin map.
    struct RelBoundary {
        Vid other;
        std::vector<Vid> verts;  // ascending
        std::vector<Vid> across; // aligned with verts
    };
    std::vector<RelBoundary> rel; // ascending by `other`

    BoundaryTree tboundary;

    // panel payload, aligned with verts: imprints on the total boundary
    std::vector<Vid> imp1, imp2;
    std::vector<std::uint32_t> d_imp1, d_imp2;
    std::vector<Port> port_imp1, port_imp2;

    // cone payload, aligned with verts: gates into the two neighboring panels
    Vid panel1 = kNoVertex, panel2 = kNoVertex;
    std::vector<Vid> gate1, gate2;
    std::vector<std::uint32_t> d_gate1, d_gate2;
    std::vector<Port> port_gate1, port_gate2; // first hop from u toward its gate
    std::vector<Port> twin_port1, twin_port2; // port(gate_i(u), twin(gate_i(u)))

    int index_of(Vid v) const;
    const RelBoundary* rel_with(Vid other) const;
};

// One recursive call: a scope, its centroid, the star, and the fibers.
struct CallRecord {
    int parent = -1;
    std::uint32_t level = 0;
    Vid centroid = kNoVertex;
    std::vector<Vid> scope; // ascending
    Star star;
    std::vector<FiberData> fibers; // star member order

    // per scope vertex, aligned with scope
    std::vector<Vid> gate;                // u's gate in the star
    std::vector<std::uint32_t> dist_gate; // d(u, gate)
    std::vector<Port> port_to_cent;       // 0 at the centroid
    std::vector<Port> port_from_cent;     // 0 at the centroid

    int index_of(Vid v) const;
    int fiber_index_of_root(Vid root) const;
    std::uint32_t dist_to_centroid(int scope_idx) const;
};

struct RecursionTree {
    Vid root = kNoVertex;
    std::vector<Vid> parent;           // kNoVertex at the root
    std::vector<std::uint32_t> depth;
    std::vector<TreeDistLabel> ncad;   // separator labels + depth, per vertex
};

struct Decomposition {
    size_t n = 0;
    std::vector<CallRecord> calls; // DFS order; parents precede children
    RecursionTree rtree;
};

// Centroid of the subgraph induced by scope: local-search descent over the
// halfspace-count inequality, followed by a plateau sweep; ties resolved to
// the smallest vertex id. scope must induce a gated cube-free median subgraph.
Vid compute_centroid(const PortedGraph& g, const std::vector<Vid>& scope);

// Full recursive decomposition (no class check; callers validate the input).
Decomposition decompose(const PortedGraph& g);

// Recursion tree alone (runs the decomposition and discards the calls).
RecursionTree build_recursion_tree(const PortedGraph& g);

} // namespace cfml

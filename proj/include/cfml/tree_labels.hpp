#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cfml/graph.hpp"

namespace cfml {

/*
 * Separator-based distance and routing labels for trees. Labels list
 * (separator, payload) entries along the centroid decomposition of the tree;
 * the last entry is always (self, 0). A tree with s vertices yields at most
 * ceil(log2 s) + 1 entries per label.
 *
 * Trees live inside a host graph: vertices carry host ids and edges carry
 * host ports, so routing answers are directly usable as graph moves.
 */

struct TreeDistEntry {
    Vid separator;
    std::uint32_t dist;

    bool operator==(const TreeDistEntry&) const = default;
};

struct TreeDistLabel {
    std::vector<TreeDistEntry> entries;
    std::int32_t depth = -1; // depth in a rooted host tree (NCAD augmentation); -1 if unset

    Vid self() const { return entries.back().separator; }
    bool operator==(const TreeDistLabel&) const = default;
};

struct TreeRoutEntry {
    Vid separator;
    Port to_sep;   // first hop from the vertex toward the separator (0 at the separator)
    Port from_sep; // first hop from the separator toward the vertex

    bool operator==(const TreeRoutEntry&) const = default;
};

struct TreeRoutLabel {
    std::vector<TreeRoutEntry> entries;

    Vid self() const { return entries.back().separator; }
    bool operator==(const TreeRoutLabel&) const = default;
};

// Tree with host ids and host ports; index = local id.
class LabeledTree {
public:
    explicit LabeledTree(std::vector<Vid> verts)
        : verts_(std::move(verts)), adj_(verts_.size())
    {
    }

    // local endpoints; puv = host port u->v, pvu = host port v->u
    void add_edge(std::uint32_t u, std::uint32_t v, Port puv, Port pvu)
    {
        adj_[u].push_back({v, puv});
        adj_[v].push_back({u, pvu});
    }

    size_t size() const { return verts_.size(); }
    Vid host(std::uint32_t local) const { return verts_[local]; }
    const std::vector<Vid>& verts() const { return verts_; }

    struct Arc {
        std::uint32_t to;
        Port port;
    };
    const std::vector<Arc>& arcs(std::uint32_t u) const { return adj_[u]; }

private:
    std::vector<Vid> verts_;
    std::vector<std::vector<Arc>> adj_;

    friend class TreeSeparatorEncoder;
};

// Distance labels, aligned with the tree's local vertex order.
std::vector<TreeDistLabel> tree_dist_encode(const LabeledTree& t);

// Routing labels (host ports), aligned with the tree's local vertex order.
std::vector<TreeRoutLabel> tree_rout_encode(const LabeledTree& t);

// Exact tree distance between two vertices of the same tree. The span
// overloads decode entry sequences stored inside larger labels.
std::uint32_t tree_dist_decode(std::span<const TreeDistEntry> lu,
                               std::span<const TreeDistEntry> lv);
std::uint32_t tree_dist_decode(const TreeDistLabel& lu, const TreeDistLabel& lv);

// Host port from u toward v along the unique tree path; 0 iff u = v.
Port tree_rout_decode(std::span<const TreeRoutEntry> lu, std::span<const TreeRoutEntry> lv);
Port tree_rout_decode(const TreeRoutLabel& lu, const TreeRoutLabel& lv);

// Depth of the nearest common ancestor in the rooted tree the labels were
// depth-annotated with: (depth(u) + depth(v) - d_T(u,v)) / 2.
std::uint32_t ncad_decode(const TreeDistLabel& lu, const TreeDistLabel& lv);

} // namespace cfml

#pragma once

#include "cfml/dist_labels.hpp"

namespace cfml {

/*
 * Routing labels. Level records mirror the distance flavor with ports added:
 * the star part carries the ports to and from the centroid, panel slots the
 * port toward each imprint, cone slots the port toward each gate plus the
 * port from the gate to its twin inside the cone. Tree routing labels of the
 * boundary trees make the on-boundary case decodable from labels alone.
 */

struct RoutSlot {
    std::uint32_t tree_off = 0;  // distance label of the imprint/gate (entry pool view)
    std::uint32_t tree_len = 0;
    std::uint32_t rtree_off = 0; // routing label of the same vertex (pool view)
    std::uint32_t rtree_len = 0;
    Port to_port = 0;            // first hop from u toward the imprint/gate; 0 iff u is it
    std::uint32_t dist = 0;      // d(u, imprint) or d(u, gate)
    Port twin_port = 0;          // cones: port(gate, twin(gate)); unused for panels
    std::uint32_t panel_id = 0;  // star integer of the slot's panel root

    bool operator==(const RoutSlot&) const = default;
};

struct RoutLevelRecord {
    Vid centroid_id = kNoVertex;
    Port to_cent = 0;   // first hop toward the centroid; 0 at the centroid
    Port from_cent = 0; // first hop from the centroid toward this vertex
    StarLabel gate;
    std::uint32_t dist_to_cent = 0;
    bool has_parts = false;
    RoutSlot first, second;
    std::vector<TreeDistEntry> dentries; // pooled distance-tree entries
    std::vector<TreeRoutEntry> rentries; // pooled routing-tree entries

    std::span<const TreeDistEntry> tree(const RoutSlot& s) const
    {
        return {dentries.data() + s.tree_off, s.tree_len};
    }
    std::span<const TreeRoutEntry> rtree(const RoutSlot& s) const
    {
        return {rentries.data() + s.rtree_off, s.rtree_len};
    }
    Vid slot_vertex(const RoutSlot& s) const { return tree(s).back().separator; }

    void append_slot_trees(RoutSlot& s, const TreeDistLabel& t, const TreeRoutLabel& rt)
    {
        s.tree_off = static_cast<std::uint32_t>(dentries.size());
        s.tree_len = static_cast<std::uint32_t>(t.entries.size());
        dentries.insert(dentries.end(), t.entries.begin(), t.entries.end());
        s.rtree_off = static_cast<std::uint32_t>(rentries.size());
        s.rtree_len = static_cast<std::uint32_t>(rt.entries.size());
        rentries.insert(rentries.end(), rt.entries.begin(), rt.entries.end());
    }
};

struct RoutLabel {
    Vid id = kNoVertex;
    NcadRecord ncad;
    std::vector<RoutLevelRecord> levels;
};

std::vector<RoutLabel> rout_encode(const PortedGraph& g, const EncodeOptions& opts = {});
std::vector<RoutLabel> rout_labels_from(const Decomposition& d);

// Port of u leading one hop closer to v; 0 iff u = v.
Port rout_decode(const RoutLabel& lu, const RoutLabel& lv);

// Routing functions, exposed for verification.
Port routing_separated(const RoutLevelRecord& ru, const RoutLevelRecord& rv, Vid id_u);
Port routing_cone_to_panel(const RoutLevelRecord& cone_rec, const RoutLevelRecord& target_rec);
Port routing_panel_to_cone(const RoutLevelRecord& panel_rec, const RoutLevelRecord& cone_rec);

} // namespace cfml

#pragma once

#include <cstdint>
#include <vector>

#include "cfml/hierarchy.hpp"
#include "cfml/inline_vec.hpp"

namespace cfml {

// NCAD label on the recursion tree, stored inline inside scheme labels so the
// level lookup does not leave the label's own cache lines.
struct NcadRecord {
    std::int32_t depth = -1;
    InlineVec<TreeDistEntry, 16> entries;

    std::span<const TreeDistEntry> view() const { return entries.view(); }
    bool operator==(const NcadRecord& o) const = default;

    static NcadRecord from(const TreeDistLabel& t)
    {
        NcadRecord r;
        r.depth = t.depth;
        r.entries.append(t.entries.begin(), t.entries.end());
        return r;
    }
};

// Depth of the nearest common ancestor, from two NCAD records.
std::uint32_t ncad_decode(const NcadRecord& lu, const NcadRecord& lv);

/*
 * Distance labels. Per vertex: its id, an NCAD label on the recursion tree
 * (locates the decisive level from two labels alone), and one record per
 * decomposition level the vertex took part in.
 *
 * Slot convention: the two 1st/2nd parts each carry the star integer of the
 * panel root they refer to, and decoders match slots by these ids. A panel
 * vertex's slots describe its two imprints on the panel's total boundary and
 * both carry the panel's own integer; a cone vertex's slots describe its
 * gates in the two neighboring panels, ascending by panel integer.
 */

struct DistSlot {
    std::uint32_t tree_off = 0; // the slot's boundary-tree label, as a view
    std::uint32_t tree_len = 0; // into the record's entry pool
    std::uint32_t dist = 0;     // d(u, imprint) or d(u, gate)
    std::uint32_t panel_id = 0; // star integer of the slot's panel root

    bool operator==(const DistSlot&) const = default;
};

struct DistLevelRecord {
    Vid centroid_id = kNoVertex;
    std::uint32_t dist_to_cent = 0;
    StarLabel gate;         // star label of the vertex's fiber root
    bool has_parts = false; // false exactly for the level's centroid
    DistSlot first, second;
    InlineVec<TreeDistEntry, 28> entries; // pooled tree entries of both slots

    std::span<const TreeDistEntry> tree(const DistSlot& s) const
    {
        return {entries.data() + s.tree_off, s.tree_len};
    }
    // tree labels end with (self, 0), which identifies the labeled vertex
    Vid slot_vertex(const DistSlot& s) const { return tree(s).back().separator; }

    void append_slot_tree(DistSlot& s, const TreeDistLabel& t)
    {
        s.tree_off = static_cast<std::uint32_t>(entries.size());
        s.tree_len = static_cast<std::uint32_t>(t.entries.size());
        entries.append(t.entries.begin(), t.entries.end());
    }
};

struct DistLabel {
    Vid id = kNoVertex;
    NcadRecord ncad;
    std::vector<DistLevelRecord> levels;
};

struct EncodeOptions {
    bool skip_class_check = false;
    RecognizerOptions recognizer;
};

// Throws NotCubeFreeMedianError / SizeGuardError per the recognizer verdict.
void ensure_cube_free_median(const PortedGraph& g, const EncodeOptions& opts);

std::vector<DistLabel> dist_encode(const PortedGraph& g, const EncodeOptions& opts = {});

// Label assembly from an existing decomposition (shared with the encoder).
std::vector<DistLabel> dist_labels_from(const Decomposition& d);

enum class PairClass : std::uint8_t {
    Roommates, // same fiber; never returned for records at the decisive level
    Separated,
    OneNeighboringU, // u in the panel, v in the cone
    OneNeighboringV, // v in the panel, u in the cone
    TwoNeighboring,
};

// Classification from the two star labels alone. A gate distance of 0 means
// the vertex is the level's centroid, which always classifies as separated.
PairClass classify_star_pair(const StarLabel& gu, const StarLabel& gv);
PairClass classify_pair(const DistLevelRecord& ru, const DistLevelRecord& rv);

// Exact distance from the two labels; throws ForeignLabelError for labels of
// different encoding runs.
std::uint32_t dist_decode(const DistLabel& lu, const DistLabel& lv);

// Branch formulas, exposed for verification.
std::uint32_t distance_separated(const DistLevelRecord& ru, const DistLevelRecord& rv);
std::uint32_t distance_one_neighboring(const DistLevelRecord& panel_rec,
                                       const DistLevelRecord& cone_rec);
std::uint32_t distance_two_neighboring(const DistLevelRecord& ru, const DistLevelRecord& rv);

// Back-to-front scan for the deepest shared level; debug cross-check of the
// NCAD lookup for distinct vertices (the decoder settles equal ids first).
// Returns -1 when no level is shared.
int shared_level_scan(const DistLabel& lu, const DistLabel& lv);

} // namespace cfml

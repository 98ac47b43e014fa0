#include "cfml/rout_labels.hpp"

#include <string>

namespace cfml {

std::vector<RoutLabel> rout_labels_from(const Decomposition& d)
{
    std::vector<RoutLabel> labels(d.n);
    for (Vid v = 0; v < d.n; ++v) {
        labels[v].id = v;
        labels[v].ncad = NcadRecord::from(d.rtree.ncad[v]);
    }
    for (const CallRecord& call : d.calls) {
        for (size_t i = 0; i < call.scope.size(); ++i) {
            const Vid u = call.scope[i];
            const Vid root = call.gate[i];
            const StarMember* m = call.star.find(root);
            const FiberData& f = call.fibers[call.fiber_index_of_root(root)];

            RoutLevelRecord rec;
            rec.centroid_id = call.centroid;
            rec.to_cent = call.port_to_cent[i];
            rec.from_cent = call.port_from_cent[i];
            rec.gate = m->label;
            rec.dist_to_cent = call.dist_to_centroid(static_cast<int>(i));
            if (f.kind == FiberKind::Panel) {
                const int li = f.index_of(u);
                const BoundaryTree& t = f.tboundary;
                const int i1 = t.index_of(f.imp1[li]);
                const int i2 = t.index_of(f.imp2[li]);
                rec.has_parts = true;
                rec.append_slot_trees(rec.first, t.dist_labels[i1], t.rout_labels[i1]);
                rec.first.to_port = f.port_imp1[li];
                rec.first.dist = f.d_imp1[li];
                rec.first.panel_id = m->label.a;
                rec.append_slot_trees(rec.second, t.dist_labels[i2], t.rout_labels[i2]);
                rec.second.to_port = f.port_imp2[li];
                rec.second.dist = f.d_imp2[li];
                rec.second.panel_id = m->label.a;
            } else if (f.kind == FiberKind::Cone) {
                const int li = f.index_of(u);
                const BoundaryTree& t1 =
                    call.fibers[call.fiber_index_of_root(f.panel1)].tboundary;
                const BoundaryTree& t2 =
                    call.fibers[call.fiber_index_of_root(f.panel2)].tboundary;
                const int g1 = t1.index_of(f.gate1[li]);
                const int g2 = t2.index_of(f.gate2[li]);
                rec.has_parts = true;
                rec.append_slot_trees(rec.first, t1.dist_labels[g1], t1.rout_labels[g1]);
                rec.first.to_port = f.port_gate1[li];
                rec.first.dist = f.d_gate1[li];
                rec.first.twin_port = f.twin_port1[li];
                rec.first.panel_id = m->label.a;
                rec.append_slot_trees(rec.second, t2.dist_labels[g2], t2.rout_labels[g2]);
                rec.second.to_port = f.port_gate2[li];
                rec.second.dist = f.d_gate2[li];
                rec.second.twin_port = f.twin_port2[li];
                rec.second.panel_id = m->label.b;
            }
            labels[u].levels.push_back(std::move(rec));
        }
    }
    return labels;
}

std::vector<RoutLabel> rout_encode(const PortedGraph& g, const EncodeOptions& opts)
{
    ensure_cube_free_median(g, opts);
    Decomposition d = decompose(g);
    return rout_labels_from(d);
}

namespace {

const RoutSlot* slot_for_panel(const RoutLevelRecord& rec, std::uint32_t panel_id)
{
    if (rec.has_parts && rec.first.panel_id == panel_id)
        return &rec.first;
    if (rec.has_parts && rec.second.panel_id == panel_id)
        return &rec.second;
    return nullptr;
}

} // namespace

Port routing_separated(const RoutLevelRecord& ru, const RoutLevelRecord& rv, Vid id_u)
{
    if (rv.centroid_id == id_u)
        return rv.from_cent; // u is the centroid; its label has no port toward v
    return ru.to_cent;
}

Port routing_cone_to_panel(const RoutLevelRecord& cone_rec, const RoutLevelRecord& target_rec)
{
    // target in a panel: its own integer; target in a cone: the shared panel
    const std::uint32_t p = target_rec.gate.size() == 1
                                ? target_rec.gate.a
                                : star_label_intersection(cone_rec.gate, target_rec.gate);
    const RoutSlot* su = slot_for_panel(cone_rec, p);
    if (su == nullptr)
        throw SlotMismatchError("cone record has no slot for panel " + std::to_string(p));
    return su->to_port;
}

Port routing_panel_to_cone(const RoutLevelRecord& panel_rec, const RoutLevelRecord& cone_rec)
{
    const std::uint32_t p = panel_rec.gate.a;
    const RoutSlot* sv = slot_for_panel(cone_rec, p);
    if (sv == nullptr)
        throw SlotMismatchError("cone record has no slot for panel " + std::to_string(p));

    if (panel_rec.first.to_port == 0 || panel_rec.second.to_port == 0) {
        // u lies on the total boundary (both imprints are u itself)
        const RoutSlot* su = panel_rec.first.to_port == 0 ? &panel_rec.first : &panel_rec.second;
        if (panel_rec.slot_vertex(*su) == cone_rec.slot_vertex(*sv))
            return sv->twin_port; // u is the gate of v; step into the cone
        return tree_rout_decode(panel_rec.rtree(*su), cone_rec.rtree(*sv));
    }

    const auto gate_tree = cone_rec.tree(*sv);
    const std::uint32_t d1 =
        panel_rec.first.dist + tree_dist_decode(panel_rec.tree(panel_rec.first), gate_tree);
    const std::uint32_t d2 =
        panel_rec.second.dist + tree_dist_decode(panel_rec.tree(panel_rec.second), gate_tree);
    // ties resolve to the first slot
    return d1 <= d2 ? panel_rec.first.to_port : panel_rec.second.to_port;
}

Port rout_decode(const RoutLabel& lu, const RoutLabel& lv)
{
    if (lu.id == lv.id)
        return 0;
    std::uint32_t level;
    try {
        level = ncad_decode(lu.ncad, lv.ncad);
    } catch (const NoCommonSeparatorError&) {
        throw ForeignLabelError("labels come from different encodings");
    }
    if (level >= lu.levels.size() || level >= lv.levels.size())
        throw ForeignLabelError("decisive level exceeds a label's level list");
    const RoutLevelRecord& ru = lu.levels[level];
    const RoutLevelRecord& rv = lv.levels[level];
    if (ru.centroid_id != rv.centroid_id)
        throw ForeignLabelError("centroid mismatch at the decisive level");

    switch (classify_star_pair(ru.gate, rv.gate)) {
    case PairClass::OneNeighboringU:
        return routing_panel_to_cone(ru, rv);
    case PairClass::OneNeighboringV:
        return routing_cone_to_panel(ru, rv);
    case PairClass::TwoNeighboring:
        return routing_cone_to_panel(ru, rv);
    case PairClass::Separated:
        return routing_separated(ru, rv, lu.id);
    case PairClass::Roommates:
    default:
        throw ForeignLabelError("roommates at the decisive level");
    }
}

} // namespace cfml

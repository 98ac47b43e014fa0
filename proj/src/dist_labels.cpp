#include "cfml/dist_labels.hpp"

#include <algorithm>
#include <string>

namespace cfml {

std::uint32_t ncad_decode(const NcadRecord& lu, const NcadRecord& lv)
{
    std::uint32_t d = tree_dist_decode(lu.view(), lv.view());
    return (static_cast<std::uint32_t>(lu.depth) + static_cast<std::uint32_t>(lv.depth) - d) / 2;
}

void ensure_cube_free_median(const PortedGraph& g, const EncodeOptions& opts)
{
    if (opts.skip_class_check)
        return;
    ClassCheckReport rep = check_cube_free_median(g, opts.recognizer);
    if (!rep.ok)
        throw NotCubeFreeMedianError(rep.reason);
}

std::vector<DistLabel> dist_labels_from(const Decomposition& d)
{
    std::vector<DistLabel> labels(d.n);
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

            DistLevelRecord rec;
            rec.centroid_id = call.centroid;
            rec.dist_to_cent = call.dist_to_centroid(static_cast<int>(i));
            rec.gate = m->label;
            if (f.kind == FiberKind::Panel) {
                const int li = f.index_of(u);
                const BoundaryTree& t = f.tboundary;
                rec.has_parts = true;
                rec.append_slot_tree(rec.first, t.dist_labels[t.index_of(f.imp1[li])]);
                rec.first.dist = f.d_imp1[li];
                rec.first.panel_id = m->label.a;
                rec.append_slot_tree(rec.second, t.dist_labels[t.index_of(f.imp2[li])]);
                rec.second.dist = f.d_imp2[li];
                rec.second.panel_id = m->label.a;
            } else if (f.kind == FiberKind::Cone) {
                const int li = f.index_of(u);
                const BoundaryTree& t1 =
                    call.fibers[call.fiber_index_of_root(f.panel1)].tboundary;
                const BoundaryTree& t2 =
                    call.fibers[call.fiber_index_of_root(f.panel2)].tboundary;
                rec.has_parts = true;
                rec.append_slot_tree(rec.first, t1.dist_labels[t1.index_of(f.gate1[li])]);
                rec.first.dist = f.d_gate1[li];
                rec.first.panel_id = m->label.a;
                rec.append_slot_tree(rec.second, t2.dist_labels[t2.index_of(f.gate2[li])]);
                rec.second.dist = f.d_gate2[li];
                rec.second.panel_id = m->label.b;
            }
            labels[u].levels.push_back(std::move(rec));
        }
    }
    return labels;
}

std::vector<DistLabel> dist_encode(const PortedGraph& g, const EncodeOptions& opts)
{
    ensure_cube_free_median(g, opts);
    Decomposition d = decompose(g);
    return dist_labels_from(d);
}

PairClass classify_star_pair(const StarLabel& gu, const StarLabel& gv)
{
    const unsigned du = gu.size(), dv = gv.size();
    if (du == 0 || dv == 0)
        return PairClass::Separated;
    const unsigned d = star_dist(gu, gv);
    if (d == 0)
        return PairClass::Roommates;
    if (d == 1 && du == 1)
        return PairClass::OneNeighboringU;
    if (d == 1 && dv == 1)
        return PairClass::OneNeighboringV;
    if (d == 2 && du == 2 && dv == 2)
        return PairClass::TwoNeighboring;
    return PairClass::Separated;
}

PairClass classify_pair(const DistLevelRecord& ru, const DistLevelRecord& rv)
{
    return classify_star_pair(ru.gate, rv.gate);
}

std::uint32_t distance_separated(const DistLevelRecord& ru, const DistLevelRecord& rv)
{
    return ru.dist_to_cent + rv.dist_to_cent;
}

namespace {

const DistSlot* slot_for_panel(const DistLevelRecord& rec, std::uint32_t panel_id)
{
    if (rec.has_parts && rec.first.panel_id == panel_id)
        return &rec.first;
    if (rec.has_parts && rec.second.panel_id == panel_id)
        return &rec.second;
    return nullptr;
}

} // namespace

std::uint32_t distance_one_neighboring(const DistLevelRecord& panel_rec,
                                       const DistLevelRecord& cone_rec)
{
    const std::uint32_t p = panel_rec.gate.a;
    const DistSlot* sv = slot_for_panel(cone_rec, p);
    if (sv == nullptr)
        throw SlotMismatchError("cone record has no slot for panel " + std::to_string(p));
    const auto gate_tree = cone_rec.tree(*sv);
    const std::uint32_t d1 =
        panel_rec.first.dist + tree_dist_decode(panel_rec.tree(panel_rec.first), gate_tree);
    const std::uint32_t d2 =
        panel_rec.second.dist + tree_dist_decode(panel_rec.tree(panel_rec.second), gate_tree);
    return std::min(d1, d2) + sv->dist;
}

std::uint32_t distance_two_neighboring(const DistLevelRecord& ru, const DistLevelRecord& rv)
{
    const std::uint32_t shared = star_label_intersection(ru.gate, rv.gate);
    const DistSlot* su = slot_for_panel(ru, shared);
    const DistSlot* sv = slot_for_panel(rv, shared);
    if (su == nullptr || sv == nullptr)
        throw SlotMismatchError("no slot for the shared panel " + std::to_string(shared));
    return su->dist + tree_dist_decode(ru.tree(*su), rv.tree(*sv)) + sv->dist;
}

std::uint32_t dist_decode(const DistLabel& lu, const DistLabel& lv)
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
    const DistLevelRecord& ru = lu.levels[level];
    const DistLevelRecord& rv = lv.levels[level];
    if (ru.centroid_id != rv.centroid_id)
        throw ForeignLabelError("centroid mismatch at the decisive level");

    switch (classify_pair(ru, rv)) {
    case PairClass::OneNeighboringU:
        return distance_one_neighboring(ru, rv);
    case PairClass::OneNeighboringV:
        return distance_one_neighboring(rv, ru);
    case PairClass::TwoNeighboring:
        return distance_two_neighboring(ru, rv);
    case PairClass::Separated:
        return distance_separated(ru, rv);
    case PairClass::Roommates:
    default:
        throw ForeignLabelError("roommates at the decisive level");
    }
}

int shared_level_scan(const DistLabel& lu, const DistLabel& lv)
{
    const size_t lim = std::min(lu.levels.size(), lv.levels.size());
    for (size_t i = lim; i-- > 0;)
        if (lu.levels[i].centroid_id == lv.levels[i].centroid_id)
            return static_cast<int>(i);
    return -1;
}

} // namespace cfml

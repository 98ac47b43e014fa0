#include "cfml/hierarchy.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cfml {

namespace {

// Epoch-marked membership set over vertex ids; reset is O(1).
class MarkSet {
public:
    explicit MarkSet(size_t n) : m_(n, 0) {}
    void reset() { ++e_; }
    void set(Vid v) { m_[v] = e_; }
    bool test(Vid v) const { return m_[v] == e_; }

private:
    std::vector<std::uint32_t> m_;
    std::uint32_t e_ = 1;
};

// BFS from s restricted to marked vertices; fills dist over the scope list.
void bfs_in_scope(const PortedGraph& g, const std::vector<Vid>& scope, const MarkSet& in,
                  Vid s, std::vector<std::uint32_t>& dist, std::vector<Vid>& queue)
{
    for (Vid v : scope)
        dist[v] = kUnreached;
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
        Vid u = queue[head];
        for (Vid w : g.neighbors(u))
            if (in.test(w) && dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
}

// |W(u,c)| within the scope, given the two scoped distance vectors.
std::uint32_t halfspace_count(const std::vector<Vid>& scope, const std::vector<std::uint32_t>& du,
                              const std::vector<std::uint32_t>& dc)
{
    std::uint32_t cnt = 0;
    for (Vid v : scope)
        if (du[v] < dc[v])
            ++cnt;
    return cnt;
}

// Local-search centroid inside a marked scope, with caller-provided buffers.
Vid centroid_in_scope(const PortedGraph& g, const std::vector<Vid>& scope, const MarkSet& in,
                      std::vector<std::uint32_t>& dc, std::vector<std::uint32_t>& dw,
                      std::vector<Vid>& queue)
{
    Vid c = scope.front(); // scope is ascending, so this is the least id
    bfs_in_scope(g, scope, in, c, dc, queue);

    // Descent: move while some neighbor's halfspace holds a strict majority.
    const std::uint32_t total = static_cast<std::uint32_t>(scope.size());
    for (bool moved = true; moved;) {
        moved = false;
        for (Vid w : g.neighbors(c)) {
            if (!in.test(w))
                continue;
            bfs_in_scope(g, scope, in, w, dw, queue);
            if (2 * halfspace_count(scope, dw, dc) > total) {
                c = w;
                std::swap(dc, dw);
                moved = true;
                break;
            }
        }
    }

    // Plateau sweep: minimizers form a connected set (a single cube in the
    // cube-free case); equal sums show up as balanced halfspaces.
    std::vector<Vid> plateau{c};
    Vid best = c;
    for (size_t head = 0; head < plateau.size(); ++head) {
        Vid x = plateau[head];
        bfs_in_scope(g, scope, in, x, dc, queue);
        for (Vid w : g.neighbors(x)) {
            if (!in.test(w) || std::find(plateau.begin(), plateau.end(), w) != plateau.end())
                continue;
            bfs_in_scope(g, scope, in, w, dw, queue);
            if (2 * halfspace_count(scope, dw, dc) == total) {
                plateau.push_back(w);
                best = std::min(best, w);
            }
        }
    }
    return best;
}

} // namespace

int BoundaryTree::index_of(Vid v) const
{
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    return (it != verts.end() && *it == v) ? static_cast<int>(it - verts.begin()) : -1;
}

int FiberData::index_of(Vid v) const
{
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    return (it != verts.end() && *it == v) ? static_cast<int>(it - verts.begin()) : -1;
}

const FiberData::RelBoundary* FiberData::rel_with(Vid other) const
{
    for (const auto& r : rel)
        if (r.other == other)
            return &r;
    return nullptr;
}

int CallRecord::index_of(Vid v) const
{
    auto it = std::lower_bound(scope.begin(), scope.end(), v);
    return (it != scope.end() && *it == v) ? static_cast<int>(it - scope.begin()) : -1;
}

int CallRecord::fiber_index_of_root(Vid root) const
{
    for (size_t i = 0; i < fibers.size(); ++i)
        if (fibers[i].root == root)
            return static_cast<int>(i);
    return -1;
}

std::uint32_t CallRecord::dist_to_centroid(int scope_idx) const
{
    const StarMember* m = star.find(gate[scope_idx]);
    return dist_gate[scope_idx] + m->label.size();
}

Vid compute_centroid(const PortedGraph& g, const std::vector<Vid>& scope)
{
    const size_t n = g.num_vertices();
    MarkSet in(n);
    in.reset();
    for (Vid v : scope)
        in.set(v);
    std::vector<std::uint32_t> dc(n), dw(n);
    std::vector<Vid> queue;
    queue.reserve(scope.size());
    return centroid_in_scope(g, scope, in, dc, dw, queue);
}

namespace {

class DecompositionBuilder {
public:
    explicit DecompositionBuilder(const PortedGraph& g)
        : g_(g), n_(g.num_vertices()), in_scope_(n_), nb_mark_(n_), cone_mark_(n_), tb_mark_(n_),
          dist_(n_), fib_(n_, kNoVertex), par_(n_, kNoVertex),
          cone_a_(n_), cone_b_(n_), cone_cnt_(n_), lab_a_(n_), lab_b_(n_),
          local_(n_), dX_(n_), dB_(n_), parB_(n_, kNoVertex), closB_(n_)
    {
    }

    Decomposition run()
    {
        Decomposition d;
        d.n = n_;
        d.rtree.parent.assign(n_, kNoVertex);
        d.rtree.depth.assign(n_, 0);
        if (n_ == 1) {
            d.rtree.root = 0;
        } else {
            std::vector<Vid> all(n_);
            std::iota(all.begin(), all.end(), 0);
            build_call(d, std::move(all), -1, 0, kNoVertex);
            d.rtree.root = d.calls[0].centroid;
        }
        build_ncad(d);
        return d;
    }

private:
    void build_call(Decomposition& d, std::vector<Vid> scope, int parent_call,
                    std::uint32_t level, Vid parent_centroid)
    {
        const int call_idx = static_cast<int>(d.calls.size());
        d.calls.emplace_back();
        {
            CallRecord& call = d.calls.back();
            call.parent = parent_call;
            call.level = level;
            call.scope = std::move(scope);
        }
        // The calls vector grows during recursion; never hold a reference
        // across the recursive step.
        build_level(d.calls[call_idx]);

        Vid c = d.calls[call_idx].centroid;
        d.rtree.parent[c] = parent_centroid;
        d.rtree.depth[c] = level;

        const size_t fiber_count = d.calls[call_idx].fibers.size();
        for (size_t fi = 0; fi < fiber_count; ++fi) {
            Vid root = d.calls[call_idx].fibers[fi].root;
            if (root == c)
                continue;
            std::vector<Vid> fverts = d.calls[call_idx].fibers[fi].verts;
            if (fverts.size() == 1) {
                d.rtree.parent[root] = c;
                d.rtree.depth[root] = level + 1;
            } else {
                build_call(d, std::move(fverts), call_idx, level + 1, c);
            }
        }
    }

    // All per-level structure: centroid, star, fibers, boundaries, trees,
    // imprints, gates, ports.
    void build_level(CallRecord& call)
    {
        const std::vector<Vid>& scope = call.scope;
        in_scope_.reset();
        for (Vid v : scope)
            in_scope_.set(v);

        call.centroid = centroid_in_scope(g_, scope, in_scope_, dX_, dB_, queue_);

        build_star(call);
        partition_fibers(call);
        build_boundaries(call);
        for (auto& f : call.fibers)
            build_boundary_tree(f);
        for (auto& f : call.fibers) {
            if (f.kind == FiberKind::Panel)
                build_panel_payload(f);
            else if (f.kind == FiberKind::Cone)
                build_cone_payload(f);
        }
        build_centroid_ports(call);
    }

    void build_star(CallRecord& call)
    {
        const Vid c = call.centroid;
        Star& st = call.star;
        st.center = c;
        st.members.clear();
        st.squares.clear();
        st.members.push_back({c, StarLabel::empty(), FiberKind::Center});

        // neighbors in adjacency order get integers 1..k
        nb_mark_.reset();
        std::vector<Vid> nbs;
        for (Vid w : g_.neighbors(c))
            if (in_scope_.test(w)) {
                nbs.push_back(w);
                nb_mark_.set(w);
            }
        std::vector<std::uint32_t> nb_int(nbs.size());
        for (size_t i = 0; i < nbs.size(); ++i) {
            nb_int[i] = static_cast<std::uint32_t>(i + 1);
            st.members.push_back({nbs[i], StarLabel::single(nb_int[i]), FiberKind::Panel});
        }

        // cone roots: common scope-neighbors of two star neighbors, besides c
        cone_mark_.reset();
        std::vector<Vid> cones;
        for (size_t i = 0; i < nbs.size(); ++i) {
            for (Vid w : g_.neighbors(nbs[i])) {
                if (w == c || !in_scope_.test(w) || nb_mark_.test(w))
                    continue;
                if (!cone_mark_.test(w)) {
                    cone_mark_.set(w);
                    cone_cnt_[w] = 0;
                    cones.push_back(w);
                }
                if (cone_cnt_[w] == 0)
                    cone_a_[w] = nb_int[i];
                else if (cone_cnt_[w] == 1)
                    cone_b_[w] = nb_int[i];
                else
                    throw NotCubeFreeMedianError(
                        "vertex " + std::to_string(w) +
                        " has three common squares with the centroid (forbidden K_{2,3})");
                ++cone_cnt_[w];
            }
        }
        std::vector<std::array<std::uint32_t, 3>> cone_rows; // (a, b, vertex)
        for (Vid w : cones)
            if (cone_cnt_[w] == 2)
                cone_rows.push_back({cone_a_[w], cone_b_[w], w});
        std::sort(cone_rows.begin(), cone_rows.end());
        for (auto [a, b, w] : cone_rows) {
            StarMember m{w, StarLabel::pair(a, b), FiberKind::Cone};
            m.panel1 = nbs[a - 1];
            m.panel2 = nbs[b - 1];
            st.members.push_back(m);
            st.squares.push_back({w, nbs[a - 1], c, nbs[b - 1]});
        }

        // member labels usable by id during this call
        for (const auto& m : st.members) {
            lab_a_[m.v] = m.label.a;
            lab_b_[m.v] = m.label.b;
        }
    }

    StarLabel member_label(Vid v) const { return StarLabel{lab_a_[v], lab_b_[v]}; }

    void partition_fibers(CallRecord& call)
    {
        const std::vector<Vid>& scope = call.scope;
        for (Vid v : scope) {
            dist_[v] = kUnreached;
            fib_[v] = kNoVertex;
            par_[v] = kNoVertex;
        }
        queue_.clear();
        for (const auto& m : call.star.members) {
            dist_[m.v] = 0;
            fib_[m.v] = m.v;
            queue_.push_back(m.v);
        }
        for (size_t head = 0; head < queue_.size(); ++head) {
            Vid u = queue_[head];
            for (Vid w : g_.neighbors(u))
                if (in_scope_.test(w) && dist_[w] == kUnreached) {
                    dist_[w] = dist_[u] + 1;
                    fib_[w] = fib_[u];
                    par_[w] = u;
                    queue_.push_back(w);
                }
        }

        // A deeper endpoint reached from a different fiber would have two
        // equally close star vertices with different gates.
        for (Vid u : scope)
            for (Vid w : g_.neighbors(u)) {
                if (!in_scope_.test(w))
                    continue;
                if (dist_[w] == dist_[u] + 1 && fib_[w] != fib_[u])
                    throw GateAmbiguousError("vertex " + std::to_string(w) +
                                             " has equally close star vertices in different fibers");
            }

        call.gate.resize(scope.size());
        call.dist_gate.resize(scope.size());
        for (size_t i = 0; i < scope.size(); ++i) {
            call.gate[i] = fib_[scope[i]];
            call.dist_gate[i] = dist_[scope[i]];
        }

        call.fibers.clear();
        call.fibers.resize(call.star.members.size());
        for (size_t mi = 0; mi < call.star.members.size(); ++mi) {
            const StarMember& m = call.star.members[mi];
            FiberData& f = call.fibers[mi];
            f.root = m.v;
            f.kind = m.kind;
            f.panel1 = m.panel1;
            f.panel2 = m.panel2;
        }
        // scope is ascending, so fiber vertex lists come out ascending
        for (Vid v : scope) {
            int fi = call.fiber_index_of_root(fib_[v]);
            call.fibers[fi].verts.push_back(v);
        }
        if (call.fibers[0].verts.size() != 1)
            throw GateAmbiguousError("the centroid fiber is not a singleton");
    }

    void build_boundaries(CallRecord& call)
    {
        for (Vid u : call.scope)
            for (Vid w : g_.neighbors(u)) {
                if (!in_scope_.test(w) || u >= w)
                    continue;
                Vid x = fib_[u], y = fib_[w];
                if (x == y)
                    continue;
                if (star_dist(member_label(x), member_label(y)) != 1)
                    throw NotCubeFreeMedianError("fibers of non-adjacent star members touch: " +
                                                 std::to_string(x) + " / " + std::to_string(y));
                add_boundary_vertex(call, x, y, u, w);
                add_boundary_vertex(call, y, x, w, u);
            }
        for (auto& f : call.fibers) {
            std::sort(f.rel.begin(), f.rel.end(),
                      [](const auto& a, const auto& b) { return a.other < b.other; });
            for (auto& r : f.rel) {
                std::vector<std::pair<Vid, Vid>> pairs(r.verts.size());
                for (size_t i = 0; i < r.verts.size(); ++i)
                    pairs[i] = {r.verts[i], r.across[i]};
                std::sort(pairs.begin(), pairs.end());
                for (size_t i = 0; i < pairs.size(); ++i) {
                    r.verts[i] = pairs[i].first;
                    r.across[i] = pairs[i].second;
                    if (i > 0 && pairs[i].first == pairs[i - 1].first)
                        throw GateAmbiguousError("boundary vertex " + std::to_string(pairs[i].first) +
                                                 " has two neighbors in an adjacent fiber");
                }
            }
        }
    }

    void add_boundary_vertex(CallRecord& call, Vid x, Vid y, Vid u, Vid across)
    {
        FiberData& f = call.fibers[call.fiber_index_of_root(x)];
        for (auto& r : f.rel)
            if (r.other == y) {
                r.verts.push_back(u);
                r.across.push_back(across);
                return;
            }
        f.rel.push_back({y, {u}, {across}});
    }

    void build_boundary_tree(FiberData& f)
    {
        BoundaryTree& t = f.tboundary;
        t.root = f.root;
        t.verts.clear();
        for (const auto& r : f.rel)
            t.verts.insert(t.verts.end(), r.verts.begin(), r.verts.end());
        std::sort(t.verts.begin(), t.verts.end());
        t.verts.erase(std::unique(t.verts.begin(), t.verts.end()), t.verts.end());
        if (t.verts.empty()) {
            // only possible for the center of a single-fiber star, which never
            // happens in a call with at least two vertices
            t.verts.push_back(f.root);
        }

        tb_mark_.reset();
        for (Vid v : t.verts)
            tb_mark_.set(v);
        const size_t tn = t.verts.size();
        t.adj.assign(tn, {});
        size_t edge_count = 0;
        for (size_t i = 0; i < tn; ++i) {
            Vid u = t.verts[i];
            for (Vid w : g_.neighbors(u)) {
                if (w <= u || !in_scope_.test(w) || fib_[w] != f.root || !tb_mark_.test(w))
                    continue;
                int j = t.index_of(w);
                t.adj[i].push_back(static_cast<std::uint32_t>(j));
                t.adj[j].push_back(static_cast<std::uint32_t>(i));
                ++edge_count;
            }
        }
        if (edge_count != tn - 1)
            throw NotCubeFreeMedianError("total boundary of fiber " + std::to_string(f.root) +
                                         " is not a tree");
        // BFS from the root; also proves connectivity
        t.parent.assign(tn, -2);
        t.depth.assign(tn, 0);
        int root_idx = t.index_of(f.root);
        if (root_idx < 0)
            throw NotCubeFreeMedianError("fiber root missing from its total boundary");
        std::vector<std::uint32_t> q{static_cast<std::uint32_t>(root_idx)};
        t.parent[root_idx] = -1;
        for (size_t head = 0; head < q.size(); ++head) {
            std::uint32_t u = q[head];
            for (std::uint32_t w : t.adj[u])
                if (t.parent[w] == -2) {
                    t.parent[w] = static_cast<int>(u);
                    t.depth[w] = t.depth[u] + 1;
                    q.push_back(w);
                }
        }
        if (q.size() != tn)
            throw NotCubeFreeMedianError("total boundary of fiber " + std::to_string(f.root) +
                                         " is disconnected");
    }

    // Panels: tree labelings of the total boundary, then imprints of every
    // fiber vertex via one rooted BFS, one multi-source BFS, and a sweep in
    // BFS order that assembles the second imprint from the predecessors'.
    void build_panel_payload(FiberData& f)
    {
        BoundaryTree& t = f.tboundary;
        tb_mark_.reset();
        for (Vid v : t.verts)
            tb_mark_.set(v);
        LabeledTree lt(t.verts);
        for (size_t i = 0; i < t.verts.size(); ++i)
            for (std::uint32_t j : t.adj[i])
                if (i < j)
                    lt.add_edge(static_cast<std::uint32_t>(i), j,
                                g_.port(t.verts[i], t.verts[j]), g_.port(t.verts[j], t.verts[i]));
        t.dist_labels = tree_dist_encode(lt);
        t.rout_labels = tree_rout_encode(lt);

        const size_t fn = f.verts.size();
        f.imp1.assign(fn, kNoVertex);
        f.imp2.assign(fn, kNoVertex);
        f.d_imp1.assign(fn, 0);
        f.d_imp2.assign(fn, 0);
        f.port_imp1.assign(fn, 0);
        f.port_imp2.assign(fn, 0);
        for (size_t i = 0; i < fn; ++i)
            local_[f.verts[i]] = static_cast<std::uint32_t>(i);

        // first BFS: distances to the fiber root
        fiber_bfs_single(f, f.root, dX_);

        // second BFS: closest total-boundary vertex, parent toward it
        std::vector<int> imp1_idx(fn, -1); // tboundary index of imp1
        fiber_bfs_multi(f, t.verts,
                        [&](size_t src_pos) { return static_cast<std::uint32_t>(src_pos); });
        for (size_t i = 0; i < fn; ++i)
            imp1_idx[i] = static_cast<int>(closB_[f.verts[i]]);

        // third sweep in first-BFS order
        for (Vid u : orderX_) {
            const size_t ui = local_[u];
            if (tb_mark_.test(u)) {
                f.imp1[ui] = f.imp2[ui] = u;
                continue;
            }
            const int i1 = imp1_idx[ui];
            const Vid u1 = t.verts[i1];
            f.imp1[ui] = u1;
            f.d_imp1[ui] = dX_[u] - t.depth[i1];
            if (f.d_imp1[ui] != dB_[u])
                throw ImprintMismatchError("imprint distance disagrees with the boundary BFS");
            f.port_imp1[ui] = g_.port(u, parB_[u]);

            Vid pred1 = kNoVertex, pred2 = kNoVertex;
            for (Vid w : g_.neighbors(u)) {
                if (!in_scope_.test(w) || fib_[w] != f.root || dX_[w] != dX_[u] - 1)
                    continue;
                if (pred1 == kNoVertex)
                    pred1 = w;
                else if (pred2 == kNoVertex)
                    pred2 = w;
                else
                    throw ImprintMismatchError("vertex " + std::to_string(u) +
                                               " has three neighbors toward the fiber root");
            }
            Vid v = parB_[u];
            if (v != pred1 && v != pred2)
                throw ImprintMismatchError("boundary BFS parent is not a root predecessor");
            Vid w = (v == pred1) ? pred2 : pred1;
            if (w == kNoVertex)
                w = v;

            const Vid v2 = f.imp2[local_[v]];
            const Vid w1 = f.imp1[local_[w]], w2 = f.imp2[local_[w]];
            Vid u2 = kNoVertex;
            if (w1 == u1 || w2 == u1) {
                const Vid wj = (w1 == u1) ? w2 : w1;
                u2 = pick_second(t, u1, v2, wj);
            } else {
                const int p1 = t.parent[i1];
                const Vid par = p1 >= 0 ? t.verts[p1] : kNoVertex;
                Vid wj;
                if (w1 == par)
                    wj = w2;
                else if (w2 == par)
                    wj = w1;
                else
                    throw ImprintMismatchError("no predecessor imprint is the tree parent of the first imprint");
                if (v2 == u1)
                    throw ImprintMismatchError("inconsistent single-imprint predecessor");
                u2 = (wj == v2) ? v2 : pick_second(t, u1, v2, wj);
            }
            f.imp2[ui] = u2;
            f.d_imp2[ui] = dX_[u] - t.depth[t.index_of(u2)];
            if (u2 == u1) {
                f.port_imp2[ui] = f.port_imp1[ui];
            } else if (u2 == v2) {
                f.port_imp2[ui] = g_.port(u, v);
            } else if (u2 == w1 || u2 == w2) {
                f.port_imp2[ui] = g_.port(u, w);
            } else {
                throw ImprintMismatchError("second imprint escapes the predecessor candidate set");
            }
        }
    }

    // Chooses the second imprint among the two candidates: equal candidates
    // pick themselves, and otherwise the one deeper in the boundary tree.
    Vid pick_second(const BoundaryTree& t, Vid u1, Vid cand_v, Vid cand_w)
    {
        if (cand_v == cand_w)
            return cand_v;
        if (cand_v == u1 || cand_w == u1)
            throw ImprintMismatchError("exactly one candidate collapses onto the first imprint");
        const std::uint32_t dv = t.depth[t.index_of(cand_v)];
        const std::uint32_t dw = t.depth[t.index_of(cand_w)];
        if (dv == dw)
            throw ImprintMismatchError("second-imprint candidates at equal boundary depth");
        return dv > dw ? cand_v : cand_w;
    }

    // Cones: gates into the two neighboring panels via a multi-source BFS from
    // each relative boundary, then one hop across.
    void build_cone_payload(FiberData& f)
    {
        const size_t fn = f.verts.size();
        auto run_side = [&](Vid panel_root, std::vector<Vid>& gate, std::vector<std::uint32_t>& dgate,
                            std::vector<Port>& pgate, std::vector<Port>& ptwin) {
            const FiberData::RelBoundary* b = f.rel_with(panel_root);
            if (b == nullptr)
                throw NotCubeFreeMedianError("cone " + std::to_string(f.root) +
                                             " has no boundary with panel " + std::to_string(panel_root));
            fiber_bfs_multi(f, b->verts,
                            [&](size_t src_pos) { return static_cast<std::uint32_t>(src_pos); });
            gate.resize(fn);
            dgate.resize(fn);
            pgate.resize(fn);
            ptwin.resize(fn);
            for (size_t i = 0; i < fn; ++i) {
                Vid u = f.verts[i];
                const std::uint32_t bi = closB_[u];
                const Vid inner_gate = b->verts[bi]; // gate of u in the relative boundary
                gate[i] = b->across[bi];
                dgate[i] = dB_[u] + 1;
                pgate[i] = dB_[u] == 0 ? g_.port(u, gate[i]) : g_.port(u, parB_[u]);
                ptwin[i] = g_.port(gate[i], inner_gate);
            }
        };
        run_side(f.panel1, f.gate1, f.d_gate1, f.port_gate1, f.twin_port1);
        run_side(f.panel2, f.gate2, f.d_gate2, f.port_gate2, f.twin_port2);
    }

    void build_centroid_ports(CallRecord& call)
    {
        const Vid c = call.centroid;
        const size_t sn = call.scope.size();
        call.port_to_cent.assign(sn, 0);
        call.port_from_cent.assign(sn, 0);
        for (size_t i = 0; i < sn; ++i) {
            Vid u = call.scope[i];
            if (u == c)
                continue;
            Vid root = call.gate[i];
            const StarMember* m = call.star.find(root);
            // first hop from u toward c
            if (u == root) {
                if (m->kind == FiberKind::Panel)
                    call.port_to_cent[i] = g_.port(u, c);
                else // cone root: through the lower-labeled square corner
                    call.port_to_cent[i] = g_.port(u, m->panel1);
            } else {
                call.port_to_cent[i] = g_.port(u, par_[u]);
            }
            // first hop from c toward u
            Vid s = m->kind == FiberKind::Cone ? m->panel1 : root;
            call.port_from_cent[i] = g_.port(c, s);
        }
    }

    // BFS within fiber f from a single source, into dist; also records the
    // traversal order in orderX_.
    void fiber_bfs_single(const FiberData& f, Vid s, std::vector<std::uint32_t>& dist)
    {
        for (Vid v : f.verts)
            dist[v] = kUnreached;
        orderX_.clear();
        dist[s] = 0;
        orderX_.push_back(s);
        for (size_t head = 0; head < orderX_.size(); ++head) {
            Vid u = orderX_[head];
            for (Vid w : g_.neighbors(u))
                if (in_scope_.test(w) && fib_[w] == f.root && dist[w] == kUnreached) {
                    dist[w] = dist[u] + 1;
                    orderX_.push_back(w);
                }
        }
    }

    // Multi-source BFS within fiber f; sources carry a payload index that
    // propagates through closB_. Fills dB_, parB_, closB_.
    template <typename SrcIndex>
    void fiber_bfs_multi(const FiberData& f, const std::vector<Vid>& sources, SrcIndex&& src_index)
    {
        for (Vid v : f.verts) {
            dB_[v] = kUnreached;
            parB_[v] = kNoVertex;
        }
        queue_.clear();
        for (size_t sp = 0; sp < sources.size(); ++sp) {
            Vid s = sources[sp];
            dB_[s] = 0;
            closB_[s] = src_index(sp);
            queue_.push_back(s);
        }
        for (size_t head = 0; head < queue_.size(); ++head) {
            Vid u = queue_[head];
            for (Vid w : g_.neighbors(u))
                if (in_scope_.test(w) && fib_[w] == f.root && dB_[w] == kUnreached) {
                    dB_[w] = dB_[u] + 1;
                    parB_[w] = u;
                    closB_[w] = closB_[u];
                    queue_.push_back(w);
                }
        }
    }

    void build_ncad(Decomposition& d)
    {
        std::vector<Vid> hosts(n_);
        std::iota(hosts.begin(), hosts.end(), 0);
        LabeledTree t(std::move(hosts));
        for (Vid v = 0; v < n_; ++v)
            if (d.rtree.parent[v] != kNoVertex)
                t.add_edge(v, d.rtree.parent[v], 0, 0);
        d.rtree.ncad = tree_dist_encode(t);
        for (Vid v = 0; v < n_; ++v)
            d.rtree.ncad[v].depth = static_cast<std::int32_t>(d.rtree.depth[v]);
    }

    const PortedGraph& g_;
    const size_t n_;

    MarkSet in_scope_, nb_mark_, cone_mark_, tb_mark_;
    std::vector<std::uint32_t> dist_;
    std::vector<Vid> fib_, par_;
    std::vector<std::uint32_t> cone_a_, cone_b_;
    std::vector<std::uint8_t> cone_cnt_;
    std::vector<std::uint32_t> lab_a_, lab_b_;
    std::vector<std::uint32_t> local_;
    std::vector<std::uint32_t> dX_, dB_;
    std::vector<Vid> parB_;
    std::vector<std::uint32_t> closB_;
    std::vector<Vid> queue_, orderX_;
};

} // namespace

Decomposition decompose(const PortedGraph& g)
{
    DecompositionBuilder builder(g);
    return builder.run();
}

RecursionTree build_recursion_tree(const PortedGraph& g)
{
    return decompose(g).rtree;
}

} // namespace cfml

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "cfml/generators.hpp"
#include "cfml/hierarchy.hpp"
#include "oracle_utils.hpp"

using namespace cfml;
namespace to = cfml::testing;

namespace {

std::vector<Vid> everything(const PortedGraph& g)
{
    std::vector<Vid> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

PortedGraph c6()
{
    return assign_ports(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

} // namespace

TEST_CASE("centroid computation")
{
    PortedGraph p5 = make_path(5);
    CHECK(compute_centroid(p5, everything(p5)) == 2);

    // two medians: least id wins
    PortedGraph p4 = make_path(4);
    CHECK(compute_centroid(p4, everything(p4)) == 1);

    // all four vertices of the 4-cycle are medians; least id wins
    PortedGraph c4 = gen_tree_product(make_path(2), make_path(2));
    CHECK(compute_centroid(c4, everything(c4)) == 0);

    for (const auto& [name, g] : to::small_corpus()) {
        CHECK_MESSAGE(compute_centroid(g, everything(g)) == to::centroid_oracle(g, everything(g)),
                      name);
    }

    // restricted scopes (fibers of the first decomposition)
    PortedGraph kp = gen_tree_product(make_star(3), make_path(3));
    Decomposition d = decompose(kp);
    for (const auto& f : d.calls[0].fibers)
        if (f.verts.size() >= 2)
            CHECK(compute_centroid(kp, f.verts) == to::centroid_oracle(kp, f.verts));
}

TEST_CASE("fiber partition on paths and grids")
{
    PortedGraph p5 = make_path(5);
    Decomposition d = decompose(p5);
    const CallRecord& call = d.calls[0];
    CHECK(call.centroid == 2);
    REQUIRE(call.fibers.size() == 3);
    CHECK(call.fibers[0].root == 2);
    CHECK(call.fibers[0].verts == std::vector<Vid>{2});
    const FiberData* f1 = &call.fibers[call.fiber_index_of_root(1)];
    CHECK(f1->verts == std::vector<Vid>{0, 1});
    const FiberData* f3 = &call.fibers[call.fiber_index_of_root(3)];
    CHECK(f3->verts == std::vector<Vid>{3, 4});

    PortedGraph g = gen_grid(3, 3);
    Decomposition dg = decompose(g);
    const CallRecord& cg = dg.calls[0];
    for (const auto& f : cg.fibers)
        CHECK(f.verts.size() == 1); // the star is the whole grid
    int panels = 0, cones = 0, centers = 0;
    for (const auto& f : cg.fibers) {
        panels += f.kind == FiberKind::Panel;
        cones += f.kind == FiberKind::Cone;
        centers += f.kind == FiberKind::Center;
    }
    CHECK(panels == 4);
    CHECK(cones == 4);
    CHECK(centers == 1);
}

TEST_CASE("gates of the decomposition match the brute-force gate oracle")
{
    for (const auto& [name, g] : to::small_corpus()) {
        Decomposition d = decompose(g);
        if (d.calls.empty())
            continue;
        auto dm = to::all_pairs_oracle(g);
        const CallRecord& call = d.calls[0];
        std::vector<Vid> members;
        for (const auto& m : call.star.members)
            members.push_back(m.v);
        for (size_t i = 0; i < call.scope.size(); ++i) {
            Vid v = call.scope[i];
            Vid want = to::gate_oracle(dm, members, v);
            REQUIRE_MESSAGE(want != kNoVertex, name); // the star is gated
            CHECK_MESSAGE(call.gate[i] == want, name);
            CHECK(call.dist_gate[i] == dm[v][want]);
        }
    }
}

TEST_CASE("cone fibers: classification and gates")
{
    PortedGraph g = gen_grid(3, 3);
    Decomposition d = decompose(g);
    const CallRecord& call = d.calls[0];
    // cone (0,0): neighboring panels are F(1) and F(3)
    const FiberData& cone0 = call.fibers[call.fiber_index_of_root(0)];
    REQUIRE(cone0.kind == FiberKind::Cone);
    CHECK(cone0.panel1 == 1);
    CHECK(cone0.panel2 == 3);
    // its gates are the two square corners
    CHECK(cone0.gate1 == std::vector<Vid>{1});
    CHECK(cone0.gate2 == std::vector<Vid>{3});
    CHECK(cone0.d_gate1 == std::vector<std::uint32_t>{1});

    // gates match the nearest-with-gate-property oracle on the product corpus
    PortedGraph kp = gen_tree_product(make_star(3), make_path(3));
    Decomposition dk = decompose(kp);
    auto dm = to::all_pairs_oracle(kp);
    for (const auto& f : dk.calls[0].fibers) {
        if (f.kind != FiberKind::Cone)
            continue;
        const FiberData& p1 = dk.calls[0].fibers[dk.calls[0].fiber_index_of_root(f.panel1)];
        const FiberData& p2 = dk.calls[0].fibers[dk.calls[0].fiber_index_of_root(f.panel2)];
        for (size_t i = 0; i < f.verts.size(); ++i) {
            CHECK(f.gate1[i] == to::gate_oracle(dm, p1.verts, f.verts[i]));
            CHECK(f.gate2[i] == to::gate_oracle(dm, p2.verts, f.verts[i]));
            CHECK(f.d_gate1[i] == dm[f.verts[i]][f.gate1[i]]);
            CHECK(f.d_gate2[i] == dm[f.verts[i]][f.gate2[i]]);
        }
    }
}

TEST_CASE("every cone touches exactly its two panels")
{
    for (const auto& [name, g] : to::small_corpus()) {
        Decomposition d = decompose(g);
        for (const auto& call : d.calls)
            for (const auto& f : call.fibers) {
                if (f.kind != FiberKind::Cone)
                    continue;
                std::set<Vid> rel_others;
                for (const auto& r : f.rel)
                    rel_others.insert(r.other);
                std::set<Vid> want_panels{f.panel1, f.panel2};
                CHECK_MESSAGE(rel_others == want_panels, name);
            }
    }
}

TEST_CASE("total boundaries are isometric trees with gated branches")
{
    for (const auto& [name, g] : to::small_corpus()) {
        Decomposition d = decompose(g);
        auto dm = to::all_pairs_oracle(g);
        for (const auto& call : d.calls)
            for (const auto& f : call.fibers) {
                const BoundaryTree& t = f.tboundary;
                // tree-ness is enforced during construction; check isometry
                for (size_t i = 0; i < t.size(); ++i) {
                    CHECK(t.depth[i] == dm[t.verts[i]][f.root]);
                    // gated branch: the tree path to the root is the interval
                    std::vector<Vid> path;
                    for (int cur = static_cast<int>(i); cur >= 0; cur = t.parent[cur])
                        path.push_back(t.verts[cur]);
                    std::sort(path.begin(), path.end());
                    CHECK_MESSAGE(path == to::interval_oracle(dm, t.verts[i], f.root), name);
                }
                // pairwise isometry via tree BFS
                if (t.size() <= 40) {
                    for (size_t i = 0; i < t.size(); ++i) {
                        std::vector<std::uint32_t> td(t.size(), kUnreached);
                        std::vector<std::uint32_t> q{static_cast<std::uint32_t>(i)};
                        td[i] = 0;
                        for (size_t h = 0; h < q.size(); ++h)
                            for (std::uint32_t w : t.adj[q[h]])
                                if (td[w] == kUnreached) {
                                    td[w] = td[q[h]] + 1;
                                    q.push_back(w);
                                }
                        for (size_t j = 0; j < t.size(); ++j)
                            CHECK(td[j] == dm[t.verts[i]][t.verts[j]]);
                    }
                }
            }
    }
}

TEST_CASE("imprints match the brute-force oracle and quasigatedness")
{
    for (const auto& [name, g] : to::small_corpus()) {
        Decomposition d = decompose(g);
        auto dm = to::all_pairs_oracle(g);
        for (const auto& call : d.calls)
            for (const auto& f : call.fibers) {
                if (f.kind != FiberKind::Panel)
                    continue;
                for (size_t i = 0; i < f.verts.size(); ++i) {
                    Vid u = f.verts[i];
                    std::set<Vid> want = to::imprint_oracle(dm, f.tboundary.verts, u);
                    CHECK_MESSAGE(want.size() <= 2, name); // quasigated
                    std::set<Vid> got{f.imp1[i], f.imp2[i]};
                    CHECK_MESSAGE(got == want, (name + " vertex " + std::to_string(u)));
                    CHECK(f.d_imp1[i] == dm[u][f.imp1[i]]);
                    CHECK(f.d_imp2[i] == dm[u][f.imp2[i]]);
                    if (u != f.imp1[i]) {
                        // the stored port starts a geodesic to the imprint
                        Vid nxt = g.neighbor_by_port(u, f.port_imp1[i]);
                        CHECK(dm[nxt][f.imp1[i]] + 1 == dm[u][f.imp1[i]]);
                        Vid nxt2 = g.neighbor_by_port(u, f.port_imp2[i]);
                        CHECK(dm[nxt2][f.imp2[i]] + 1 == dm[u][f.imp2[i]]);
                    } else {
                        CHECK(f.port_imp1[i] == 0);
                        CHECK(f.port_imp2[i] == 0);
                    }
                }
            }
    }
}

TEST_CASE("twins: across-neighbor maps are mutually inverse unique matchings")
{
    PortedGraph g = gen_grid(3, 3);
    Decomposition d = decompose(g);
    const CallRecord& call = d.calls[0];
    // twin of boundary vertex (0,1) toward cone F((0,0)) is (0,0)
    const FiberData& panel1 = call.fibers[call.fiber_index_of_root(1)];
    const FiberData::RelBoundary* r = panel1.rel_with(0);
    REQUIRE(r != nullptr);
    CHECK(r->verts == std::vector<Vid>{1});
    CHECK(r->across == std::vector<Vid>{0});

    for (const auto& [name, gg] : to::small_corpus()) {
        Decomposition dd = decompose(gg);
        for (const auto& call2 : dd.calls)
            for (const auto& f : call2.fibers)
                for (const auto& rb : f.rel) {
                    const FiberData& other = call2.fibers[call2.fiber_index_of_root(rb.other)];
                    const FiberData::RelBoundary* back = other.rel_with(f.root);
                    REQUIRE(back != nullptr);
                    CHECK(back->verts.size() == rb.verts.size());
                    for (size_t i = 0; i < rb.verts.size(); ++i) {
                        // across edges exist and invert
                        CHECK(gg.has_edge(rb.verts[i], rb.across[i]));
                        int j = static_cast<int>(
                            std::lower_bound(back->verts.begin(), back->verts.end(),
                                             rb.across[i]) -
                            back->verts.begin());
                        REQUIRE(back->verts[j] == rb.across[i]);
                        CHECK(back->across[j] == rb.verts[i]);
                    }
                }
    }
}

TEST_CASE("recursion tree")
{
    // P5: root 2; fiber {0,1} has centroid 0 and leaf 1, fiber {3,4} centroid 3 and leaf 4
    PortedGraph p5 = make_path(5);
    RecursionTree rt = build_recursion_tree(p5);
    CHECK(rt.root == 2);
    CHECK(rt.parent[2] == kNoVertex);
    CHECK(rt.parent[0] == 2);
    CHECK(rt.parent[3] == 2);
    CHECK(rt.parent[1] == 0);
    CHECK(rt.parent[4] == 3);
    CHECK(rt.depth == std::vector<std::uint32_t>{1, 2, 0, 1, 2});

    // single vertex
    PortedGraph one = gen_tree(1, 1);
    RecursionTree r1 = build_recursion_tree(one);
    CHECK(r1.root == 0);
    CHECK(r1.depth[0] == 0);

    // every vertex appears once; depth bounded by log2(n)
    for (const auto& [name, g] : to::small_corpus()) {
        RecursionTree r = build_recursion_tree(g);
        size_t roots = 0;
        std::uint32_t bound =
            static_cast<std::uint32_t>(std::ceil(std::log2(std::max<size_t>(g.num_vertices(), 2))));
        for (Vid v = 0; v < g.num_vertices(); ++v) {
            roots += r.parent[v] == kNoVertex;
            CHECK_MESSAGE(r.depth[v] <= bound, name);
            if (r.parent[v] != kNoVertex)
                CHECK(r.depth[v] == r.depth[r.parent[v]] + 1);
        }
        CHECK(roots == 1);
    }
}

TEST_CASE("fiber halving at every level")
{
    for (const auto& [name, g] : to::small_corpus()) {
        Decomposition d = decompose(g);
        for (const auto& call : d.calls)
            for (const auto& f : call.fibers)
                CHECK_MESSAGE(2 * f.verts.size() <= call.scope.size(), name);
    }
}

TEST_CASE("invalid inputs are rejected, never repaired")
{
    CHECK_THROWS_AS(decompose(c6()), GateAmbiguousError);
}

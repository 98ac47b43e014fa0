#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cfml/generators.hpp"
#include "cfml/serialize.hpp"
#include "oracle_utils.hpp"

using namespace cfml;
namespace to = cfml::testing;

TEST_CASE("graph text round trip")
{
    PortedGraph g = gen_tree_product(make_star(3), make_path(3));
    std::stringstream ss;
    write_graph_text(ss, g, "# cfml gen treeProduct t1=star:3 t2=path:3");
    PortedGraph back = read_graph_text(ss);
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK(back.edges() == g.edges());
    // ports derive from file order, so they round-trip too
    for (auto [u, v] : g.edges())
        CHECK(back.port(u, v) == g.port(u, v));
}

TEST_CASE("graph parser rejects malformed input")
{
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_graph_text(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("2 1\n"), ParseError);            // missing edge line
    CHECK_THROWS_AS(parse("2 1\n0 1\n0 1\n"), ParseError);  // extra edge
    CHECK_THROWS_AS(parse("junk\n"), ParseError);
    CHECK_THROWS_AS(parse("3 1\n0 1\n"), ParseError);       // disconnected
    // comments are fine anywhere
    PortedGraph ok = parse("# header\n2 1\n# middle\n0 1\n");
    CHECK(ok.num_vertices() == 2);
}

TEST_CASE("binary and text label files round trip structurally")
{
    for (const auto& [name, g] : {to::CorpusEntry{"kp", gen_tree_product(make_star(3), make_path(3))},
                                  to::CorpusEntry{"tree", gen_tree(33, 5)}}) {
        auto dl = dist_encode(g);
        std::stringstream b1, t1;
        write_dist_labels_binary(b1, dl);
        write_dist_labels_text(t1, dl);
        auto db = read_dist_labels_binary(b1);
        auto dt = read_dist_labels_text(t1);
        REQUIRE(db.size() == dl.size());
        for (size_t i = 0; i < dl.size(); ++i) {
            CHECK(db[i].id == dl[i].id);
            CHECK(db[i].ncad == dl[i].ncad);
            CHECK(dt[i].ncad == dl[i].ncad);
            REQUIRE(db[i].levels.size() == dl[i].levels.size());
            REQUIRE(dt[i].levels.size() == dl[i].levels.size());
            for (size_t k = 0; k < dl[i].levels.size(); ++k) {
                const auto& a = dl[i].levels[k];
                for (const auto* o : {&db[i].levels[k], &dt[i].levels[k]}) {
                    CHECK(o->centroid_id == a.centroid_id);
                    CHECK(o->dist_to_cent == a.dist_to_cent);
                    CHECK(o->gate == a.gate);
                    CHECK(o->has_parts == a.has_parts);
                    if (a.has_parts) {
                        CHECK(o->first == a.first);
                        CHECK(o->second == a.second);
                        CHECK(o->entries == a.entries);
                    }
                }
            }
        }

        auto rl = rout_encode(g);
        std::stringstream b2, t2;
        write_rout_labels_binary(b2, rl);
        write_rout_labels_text(t2, rl);
        auto rb = read_rout_labels_binary(b2);
        auto rt = read_rout_labels_text(t2);
        REQUIRE(rb.size() == rl.size());
        for (size_t i = 0; i < rl.size(); ++i) {
            REQUIRE(rb[i].levels.size() == rl[i].levels.size());
            REQUIRE(rt[i].levels.size() == rl[i].levels.size());
            for (size_t k = 0; k < rl[i].levels.size(); ++k) {
                const auto& a = rl[i].levels[k];
                for (const auto* o : {&rb[i].levels[k], &rt[i].levels[k]}) {
                    CHECK(o->to_cent == a.to_cent);
                    CHECK(o->from_cent == a.from_cent);
                    CHECK(o->gate == a.gate);
                    if (a.has_parts) {
                        CHECK(o->first == a.first);
                        CHECK(o->second == a.second);
                        CHECK(o->dentries == a.dentries);
                        CHECK(o->rentries == a.rentries);
                    }
                }
            }
        }
    }
}

TEST_CASE("label readers reject junk")
{
    std::istringstream junk("garbage");
    CHECK_THROWS_AS(read_dist_labels_binary(junk), ParseError);
    std::istringstream wrong("CFMR1 text n=0\n");
    CHECK_THROWS_AS(read_dist_labels_text(wrong), ParseError);
}

TEST_CASE("encoding is deterministic: identical byte output across runs")
{
    PortedGraph g = gen_convex_sub(gen_grid(12, 12), 4, 3);
    std::ostringstream a, b;
    write_dist_labels_binary(a, dist_encode(g));
    write_dist_labels_binary(b, dist_encode(g));
    CHECK(a.str() == b.str());
    std::ostringstream ra, rb;
    write_rout_labels_binary(ra, rout_encode(g));
    write_rout_labels_binary(rb, rout_encode(g));
    CHECK(ra.str() == rb.str());
}

TEST_CASE("label bit accounting matches the binary payload")
{
    PortedGraph g = gen_grid(4, 4);
    auto dl = dist_encode(g);
    // bits are a multiple of 8 (payload bytes) and nonzero
    for (const auto& l : dl) {
        size_t bits = dist_label_bits(l);
        CHECK(bits % 8 == 0);
        CHECK(bits > 0);
    }
    auto rl = rout_encode(g);
    for (size_t i = 0; i < rl.size(); ++i)
        CHECK(rout_label_bits(rl[i]) >= dist_label_bits(dl[i]) / 2);
}

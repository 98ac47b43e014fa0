#pragma once

#include <cstdint>
#include <string>

#include "cfml/graph.hpp"

namespace cfml {

/*
 * Seeded PRNG with a fixed algorithm so generated corpora are reproducible
 * across platforms and implementations: the 64-bit state is initialized with
 * one splitmix64 step of the seed, and each draw is an xorshift64* step
 * (shifts 12/25/27, multiplier 2685821657736338717).
 */
class SplitXorRng {
public:
    explicit SplitXorRng(std::uint64_t seed)
    {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        state_ = z ^ (z >> 31);
        if (state_ == 0)
            state_ = 0x9e3779b97f4a7c15ULL;
    }

    std::uint64_t next()
    {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 2685821657736338717ULL;
    }

    // Uniform value in [0, bound), bound > 0 (modulo reduction; the tiny bias
    // is irrelevant for corpus generation and keeps the stream portable).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Random attachment tree: vertex i (i >= 1) attaches to a uniform earlier vertex.
PortedGraph gen_tree(std::uint32_t n, std::uint64_t seed);

// w x h rectangular grid, vertices row-major, edges right-then-down per vertex.
PortedGraph gen_grid(std::uint32_t w, std::uint32_t h);

// Cartesian product of two trees; vertex (a,b) has id a*n2+b. Edge order:
// all copies of t1's edges (per t1 edge, b ascending), then t2's likewise.
PortedGraph gen_tree_product(const PortedGraph& t1, const PortedGraph& t2);

// Intersects g with randomly chosen halfspaces of `rounds` random edges,
// skipping rounds that would empty the running set, then relabels the kept
// vertices in ascending id order. Halfspaces are convex with convex
// complement, so the result stays connected, median, and cube-free.
PortedGraph gen_convex_sub(const PortedGraph& g, std::uint64_t seed, std::uint32_t rounds);

// Deterministic fixed shapes used throughout the test corpus.
PortedGraph make_path(std::uint32_t n);
PortedGraph make_star(std::uint32_t leaves); // K_{1,leaves}, center = vertex 0

// Human-readable echo of the generating parameters, written as a header
// comment of generated graph files.
struct GenSpec {
    std::string family; // tree | grid | treeProduct | convexSub | path | star
    std::string params;
    std::string to_comment() const { return "# cfml gen " + family + " " + params; }
};

} // namespace cfml

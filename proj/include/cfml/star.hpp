#pragma once

#include <cstdint>

#include "cfml/graph.hpp"

namespace cfml {

/*
 * Label of a star member under the isometric hypercube embedding of the star:
 * the empty set for the center, {k} for the k-th neighbor of the center, and
 * the union of the two square-corner labels for a cone root. Cube-free graphs
 * keep the set size at most 2, so two fixed slots suffice (0 = absent, a < b).
 */
struct StarLabel {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    unsigned size() const { return (a ? 1u : 0u) + (b ? 1u : 0u); }
    bool contains(std::uint32_t i) const { return i != 0 && (a == i || b == i); }
    bool operator==(const StarLabel&) const = default;

    static StarLabel empty() { return {}; }
    static StarLabel single(std::uint32_t i) { return {i, 0}; }
    static StarLabel pair(std::uint32_t i, std::uint32_t j)
    {
        return i < j ? StarLabel{i, j} : StarLabel{j, i};
    }
};

// |X Δ Y|, the star distance between members labeled X and Y (0..4).
unsigned star_dist(const StarLabel& x, const StarLabel& y);

// Shared integer of two size-2 labels, or 0 when they meet only at the center.
std::uint32_t star_label_intersection(const StarLabel& x, const StarLabel& y);

// Label-only routing step: the integer i edited to move one hop from x toward
// y (minimal i, per the add/drop rules of the hypercube embedding); 0 iff
// X = Y. Under the star port convention port(x,x') = port(x',x) = i for
// labels differing in i, the returned value is the port to take.
Port star_rout(const StarLabel& x, const StarLabel& y);

} // namespace cfml

#pragma once

#include <stdexcept>
#include <string>

namespace cfml {

// Input is outside the supported graph class.
struct NotMedianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCubeFreeMedianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive recognition was requested beyond the configured size bound.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotEdgeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multi-source BFS found a vertex with equally close sources in different
// fibers; the claimed gated subgraph is not gated, so the input is invalid.
struct GateAmbiguousError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The three-pass imprint procedure produced a vertex outside the candidate
// set allowed by the boundary-tree structure.
struct ImprintMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tree labels share no separator: they come from different trees.
struct NoCommonSeparatorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Labels come from different encoding runs.
struct ForeignLabelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Neither slot of a level record names the required panel.
struct SlotMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cfml

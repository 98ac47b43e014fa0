#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cfml/dist_labels.hpp"
#include "cfml/rout_labels.hpp"

namespace cfml {

struct DistanceMatrix {
    size_t n = 0;
    std::vector<std::uint16_t> d; // row-major

    std::uint16_t at(Vid u, Vid v) const { return d[static_cast<size_t>(u) * n + v]; }
};

// All-pairs hop distances, one BFS per source, parallel over sources.
DistanceMatrix oracle_all_pairs(const PortedGraph& g, int threads = 0);

// Serial reference for the parallel kernel above.
DistanceMatrix oracle_all_pairs_serial(const PortedGraph& g);

struct VerifyOptions {
    size_t exhaustive_bound = 2048; // all pairs up to here, sampled above
    size_t sample_pairs = 1000000;
    std::uint64_t seed = 1;
    int threads = 0;
};

struct VerifyReport {
    std::string subject;
    size_t n = 0;
    size_t pairs_checked = 0;
    size_t mismatches = 0;
    std::vector<std::string> mismatch_samples; // first few, for diagnostics
    size_t max_bits = 0;
    double avg_bits = 0.0;
    size_t max_levels = 0;
    size_t recursion_depth = 0;
    bool exhaustive = true;

    bool ok() const { return mismatches == 0; }
    void write_text(std::ostream& out) const;
    void write_kv(std::ostream& out) const; // line-oriented key=value
};

// All-pairs (or sampled) label-only decode against the BFS oracle.
VerifyReport verify_distance_scheme(const PortedGraph& g, const std::vector<DistLabel>& labels,
                                    const VerifyOptions& opts = {});

struct WalkTrace {
    Vid source = kNoVertex;
    Vid target = kNoVertex;
    std::vector<Vid> visited; // starts at source; ends at target on success
    std::vector<Port> ports;  // port taken at each visited vertex except the last
    bool ok = false;
    std::string failure;
};

// Label-only walk: repeatedly decode the next port and move until port 0.
WalkTrace simulate_route(const PortedGraph& g, const std::vector<RoutLabel>& labels, Vid s, Vid t);

// Every ordered pair: the walk must realize the exact distance with every hop
// decreasing the oracle distance by one.
VerifyReport verify_routing_scheme(const PortedGraph& g, const std::vector<RoutLabel>& labels,
                                   const VerifyOptions& opts = {});

struct LabelStats {
    size_t max_bits = 0;
    double avg_bits = 0.0;
    size_t max_levels = 0;
    size_t max_tree_entries = 0;
    std::vector<size_t> level_histogram; // [k] = labels with k levels
};

LabelStats label_stats(const std::vector<DistLabel>& labels);
LabelStats label_stats(const std::vector<RoutLabel>& labels);

struct BenchResult {
    double mean_ns = 0.0;
    double p99_ns = 0.0;
    size_t queries = 0;
};

// Steady-state decode latency over seeded random pairs (single thread).
BenchResult bench_queries(const std::vector<DistLabel>& labels, size_t pair_count,
                          std::uint64_t seed);
BenchResult bench_queries(const std::vector<RoutLabel>& labels, size_t pair_count,
                          std::uint64_t seed);

// Debug report of one decomposition: fibers and boundaries per level.
void write_decomposition_dump(std::ostream& out, const Decomposition& d);

} // namespace cfml

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cfml/dist_labels.hpp"
#include "cfml/rout_labels.hpp"

namespace cfml {

/*
 * Graph text format: comment lines start with '#'; first data line is
 * "n m", followed by m lines "u v" (0-based). Adjacency order is file order
 * and ports are derived from it.
 */
PortedGraph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const PortedGraph& g, const std::string& header = "");

PortedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const PortedGraph& g, const std::string& header = "");

/*
 * Label files. Binary: magic ("CFML1"/"CFMR1") + '\0', a varint vertex count,
 * then per vertex a length-prefixed LEB128-encoded record. Text: first line
 * "<magic> text n=<n>", then one line per vertex (grammar in the README).
 * The per-vertex payload length is the exact bit budget reported by the
 * benchmark module.
 */
void write_dist_labels_binary(std::ostream& out, const std::vector<DistLabel>& labels);
std::vector<DistLabel> read_dist_labels_binary(std::istream& in);
void write_dist_labels_text(std::ostream& out, const std::vector<DistLabel>& labels);
std::vector<DistLabel> read_dist_labels_text(std::istream& in);

void write_rout_labels_binary(std::ostream& out, const std::vector<RoutLabel>& labels);
std::vector<RoutLabel> read_rout_labels_binary(std::istream& in);
void write_rout_labels_text(std::ostream& out, const std::vector<RoutLabel>& labels);
std::vector<RoutLabel> read_rout_labels_text(std::istream& in);

enum class LabelFileKind { DistBinary, DistText, RoutBinary, RoutText };

// Identifies a label file by its magic; throws ParseError on junk.
LabelFileKind sniff_label_file(const std::string& path);

std::vector<DistLabel> read_dist_labels_file(const std::string& path);
std::vector<RoutLabel> read_rout_labels_file(const std::string& path);

// Exact serialized payload size of a single label, in bits.
size_t dist_label_bits(const DistLabel& l);
size_t rout_label_bits(const RoutLabel& l);

} // namespace cfml

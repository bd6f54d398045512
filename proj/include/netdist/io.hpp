#pragma once

#include <string>
#include <vector>

#include "netdist/analysis.hpp"
#include "netdist/network.hpp"

namespace netdist {

// Decimal form with 17 significant digits; parsing it back recovers the
// double exactly.
std::string format_real(double v);

std::string read_file(const std::string& path);

// Writes to a temporary file in the same directory, then renames over the
// target, so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

// Network text: a JSON object {"labels": [...], "weights": [[...]...]} when
// the first non-space byte is '{', otherwise a bare CSV matrix whose labels
// become "n0", "n1", ... Weights must parse as finite reals.
network parse_network_text(const std::string& text);
network load_network(const std::string& path);

std::string network_to_json(const network& x);
void save_network(const network& x, const std::string& path);

// Edge list text: one "src <tab> dst <tab> weight" line per edge; the node
// set is the union of endpoints sorted lexicographically and unlisted pairs
// take the missing value.
network parse_edge_list_text(const std::string& text, double missing = 0.0);
network load_edge_list(const std::string& path, double missing = 0.0);

// Files ending in .tsv are read as edge lists, everything else as network
// text.
network load_network_auto(const std::string& path, double missing = 0.0);

std::string distance_matrix_to_csv(const distance_matrix& d);
distance_matrix parse_distance_matrix_csv(const std::string& text);
distance_matrix load_distance_matrix(const std::string& path);

std::string dendrogram_to_json(const dendrogram& tree);
std::string dendrogram_to_newick(const dendrogram& tree);

}  // namespace netdist

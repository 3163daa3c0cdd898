#ifndef SPLITDEC_IO_HPP
#define SPLITDEC_IO_HPP

#include <string>

#include "splitdec/graph.hpp"
#include "splitdec/split_tree.hpp"

namespace splitdec {

// Edge-list text: one edge per line, two whitespace-separated vertex tokens,
// '#' starts a comment line. Vertex indices follow first appearance.
// Rejects self-loops and disconnected graphs; duplicate edges collapse.
Graph load_graph(const std::string& text);

// Same parse without the connectivity requirement (used by error paths/tests).
Graph parse_edge_list(const std::string& text);

std::string to_json(const SplitTree& t, const std::vector<std::string>& labels);
SplitTree from_json(const std::string& text, std::vector<std::string>* labels = nullptr);
std::string to_dot(const SplitTree& t, const std::vector<std::string>& labels);

} // namespace splitdec

#endif

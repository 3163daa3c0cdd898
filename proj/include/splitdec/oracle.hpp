#ifndef SPLITDEC_ORACLE_HPP
#define SPLITDEC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "splitdec/graph.hpp"
#include "splitdec/split_tree.hpp"

// Exhaustive reference implementations. Exponential by design; every entry
// point enforces a small size cap and is used as ground truth in tests.
namespace splitdec::oracle {

inline constexpr int kMaxSplitVertices = 16;   // bipartition enumeration
inline constexpr int kMaxTreeVertices = 12;    // reference tree construction
inline constexpr int kMaxGroundBits = 16;      // subset enumeration

struct SplitWitness {
    uint32_t x1 = 0, x2 = 0;           // bipartition
    uint32_t v1 = 0, v2 = 0, v3 = 0, v4 = 0;  // x1 = v1|v2, x2 = v3|v4, v2-v3 complete
};

std::vector<uint32_t> adjacency_masks(const Graph& g);

std::optional<SplitWitness> is_split(const Graph& g, uint32_t x1);

// One canonical witness per unordered bipartition (vertex 0 kept in x1).
std::vector<SplitWitness> enumerate_splits(const Graph& g);

bool crosses(const SplitWitness& a, const SplitWitness& b);

std::vector<SplitWitness> strong_splits(const Graph& g);

SplitTree reference_tree(const Graph& g, int root);

// All non-empty subsets overlapping no member (masks over a ground set).
std::vector<uint32_t> brute_orthogonal(int ground_size, const std::vector<uint32_t>& members);

// All non-empty vertex sets uniform toward every outside vertex.
std::vector<uint32_t> brute_modules(const Graph& g);

Graph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& parts);

// Distinct borders at the given BFS distance, derived from all splits:
// the attachment set of every split bottom (side avoiding the root).
std::vector<uint32_t> brute_borders_at(const Graph& g, const Layering& lay, int h);

// Bottoms of strong splits (r-free sides) with min distance >= h.
std::vector<uint32_t> strong_bottoms_at_least(const Graph& g, const Layering& lay, int h);

} // namespace splitdec::oracle

#endif

#ifndef SPLITDEC_GENERATE_HPP
#define SPLITDEC_GENERATE_HPP

#include <cstdint>

#include "splitdec/graph.hpp"

namespace splitdec {

// Seeded random connected graph: random spanning tree plus extra edges,
// byte-identical across runs for the same arguments. Throws when (n, m) is
// infeasible for a simple connected graph.
Graph random_connected_graph(int n, long long m, uint64_t seed);

// Random cograph (no prime node in its modular decomposition), built from a
// random series/parallel cotree. Connected.
Graph random_cograph(int n, uint64_t seed);

} // namespace splitdec

#endif

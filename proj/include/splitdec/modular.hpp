#ifndef SPLITDEC_MODULAR_HPP
#define SPLITDEC_MODULAR_HPP

#include "splitdec/graph.hpp"
#include "splitdec/partitive_tree.hpp"

namespace splitdec {

// Modular decomposition tree: represented family = all modules of g.
// Series and parallel quotients are Complete nodes (distinguished by the
// DegenerateFlavor tag); prime quotients are Prime nodes.
PartitiveTree modular_decomposition(const Graph& g);

// Modules of G[<=h] that are subsets of layer h, as a forest over the layer
// (local indices follow the sorted layer-vertex order). Root leaf sets
// partition the layer; singletons are always present as leaves.
struct ModuleForest {
    PartitiveTree forest;            // ground = |H|, multiple roots
    std::vector<int> roots;          // node ids ordered by min leaf
    bool contains_layer = false;     // H itself is such a module
    std::vector<int> layer_vertices; // local index -> graph vertex
};

ModuleForest layer_restricted_modules(const Graph& g, const Layering& lay, int h);

// |nodes| + total node-set size over all forest trees (norm accounting).
long long forest_generator_norm(const ModuleForest& mf);

} // namespace splitdec

#endif

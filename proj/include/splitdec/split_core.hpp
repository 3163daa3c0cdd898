#ifndef SPLITDEC_SPLIT_CORE_HPP
#define SPLITDEC_SPLIT_CORE_HPP

#include <string>
#include <vector>

#include "splitdec/graph.hpp"
#include "splitdec/modular.hpp"
#include "splitdec/partitive_tree.hpp"
#include "splitdec/set_family.hpp"
#include "splitdec/split_tree.hpp"

namespace splitdec {

// Borders at distance h: partitive tree over the layer (local indices) of
// all split-bottom attachment sets at this distance, together with the
// layer itself. Per component of G[>h], the smallest tree node containing
// its attachment set comes out of the orthogonal computation.
struct BorderComputation {
    PartitiveTree tree;                        // ground = |H|
    std::vector<int> layer_vertices;           // local index -> graph vertex
    std::vector<std::vector<int>> components;  // components of G[>h], sorted
    std::vector<std::vector<int>> attachments; // per component: N(C) in H (graph vertices)
    std::vector<int> container;                // per component: tree node id
};

BorderComputation compute_borders(const Graph& g, const Layering& lay, int h,
                                  const ModuleForest& m);

enum class DLabel : uint8_t { Unlabeled, Prime, Clique, Star };

// Working forest of the layered pass. Leaves appear when their layer is
// processed; internal nodes are labeled split bottoms; star centers point
// to the parent, to a child, or are deferred.
class DecompForest {
public:
    static constexpr int kNoCenter = -1;
    static constexpr int kParentCenter = -2;

    struct Node {
        bool leaf = false;
        bool alive = true;
        int vertex = -1;
        DLabel label = DLabel::Unlabeled;
        int parent = -1;
        int star_center = kNoCenter;
        bool multi_component = false;
        int rep_vertex = -1;
        std::vector<int> children;
    };

    int add_leaf(int vertex);
    int add_internal(DLabel label);
    void link(int child, int parent);
    void merge_into(int victim, int target);      // children move, victim dies
    int add_parent_above(int node, DLabel label); // new node takes node's place

    int size() const { return (int)nodes_.size(); }
    const Node& node(int i) const { return nodes_[i]; }
    Node& node(int i) { return nodes_[i]; }
    std::vector<int> roots() const;
    std::vector<int> leaf_vertices(int i) const;  // sorted descendant vertices

private:
    std::vector<Node> nodes_;
};

enum class RootType { Type1, Type2, Type3 };

// The border forest built from a layer's border tree: border nodes with
// recast labels plus one grouping node per multi-root component of G[>=h].
struct BorderForest {
    std::vector<int> node_of_btree;  // border-tree node -> forest node (-1 = dropped root)
    std::vector<int> border_size;    // per forest node touched: |border set| (0 = grouping node)
    std::vector<int> top_of_hcomp;   // per h-component (by order): top forest node
    std::vector<std::vector<int>> hcomps;
    std::vector<int> roots;          // forest roots created for this layer
};

class LayeredDecomposer {
public:
    LayeredDecomposer(const Graph& g, int root);

    SplitTree run();

    // stages exposed for inspection and tests
    const DecompForest& forest() const { return forest_; }
    void process_layer(int h);
    int current_layer() const { return next_h_; }
    const Layering& layering() const { return lay_; }

private:
    BorderForest build_border_forest(int h, const BorderComputation& bc,
                                     const std::vector<std::vector<int>>& hcomp_groups);
    void update_forest(int h, const BorderComputation& bc, const BorderForest& bf,
                       const std::vector<int>& old_roots,
                       const std::vector<int>& root_comp,
                       const std::vector<char>& comp_has_witness);

    const Graph& g_;
    int root_vertex_;
    Layering lay_;
    DecompForest forest_;
    std::vector<int> roots_;
    int next_h_;
};

RootType classify_root(const DecompForest& f, int root, int border_size,
                       bool border_is_split, int attachment_size, bool has_witness);

SplitTree split_decomposition(const Graph& g, int root);

struct InvariantReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// Checks the four forest invariants after processing layer h; the split
// bottom checks run against the exhaustive oracle and need a small graph.
InvariantReport verify_invariants(const DecompForest& f, const std::vector<int>& roots,
                                  const Graph& g, const Layering& lay, int h);

} // namespace splitdec

#endif

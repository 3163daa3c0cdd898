#ifndef SPLITDEC_PARTITIVE_TREE_HPP
#define SPLITDEC_PARTITIVE_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "splitdec/set_family.hpp"

namespace splitdec {

enum class PKind : uint8_t { Leaf, Prime, Complete };

// Auxiliary tag used by the modular decomposition: Complete nodes remember
// whether they came from a series or parallel quotient.
enum class DegenerateFlavor : uint8_t { None, Series, Parallel };

struct PNode {
    PKind kind = PKind::Leaf;
    int element = -1;  // leaf only
    int parent = -1;
    std::vector<int> children;
    DegenerateFlavor flavor = DegenerateFlavor::None;
};

// Rooted tree over an indexed ground set. Leaves are nodes 0..ground-1 in
// bijection with the elements; internal nodes are Prime or Complete. The
// represented family is: every node set, plus every union of >= 1 children
// of a Complete node. Internal nodes have >= 2 children; two-child nodes
// are always labeled Complete.
class PartitiveTree {
public:
    PartitiveTree() = default;
    explicit PartitiveTree(int ground);

    int ground_size() const { return ground_; }
    int root() const { return root_; }
    void set_root(int r) { root_ = r; }
    int size() const { return (int)nodes_.size(); }
    const PNode& node(int i) const { return nodes_[i]; }
    PNode& node(int i) { return nodes_[i]; }
    int leaf_of(int element) const { return element; }

    int add_internal(PKind kind);
    void attach(int child, int parent);
    void detach(int child);

    bool is_leaf(int i) const { return nodes_[i].kind == PKind::Leaf; }
    std::vector<int> node_set(int i) const;      // sorted elements
    int node_set_size(int i) const;

    // Sorts every child list by minimum descendant element, in place.
    void canonical_children();

    std::string to_string() const;  // parenthesized, after canonical_children

private:
    std::vector<PNode> nodes_;
    int root_ = -1;
    int ground_ = 0;
};

PartitiveTree swap_labels(const PartitiveTree& t);

// Node sets plus, per Prime node, the cyclic pairwise unions of its
// children. The orthogonal of the result is exactly the family the tree
// represents, which makes this a compact stand-in for that family.
SetFamily generator_family(const PartitiveTree& t);

// Small family W over F.ground with W orthogonal-equivalent to
// F together with the X-complements of its members. Requires X in F and
// every member contained in X. Built from the refinement classes of X by F:
// the classes, their cyclic pairwise unions (3+ classes), and X itself.
SetFamily complement_reduced_family(const SetFamily& f, const std::vector<int>& x);

// Explicit list of every represented set; throws when the count exceeds cap.
SetFamily enumerate_members(const PartitiveTree& t, long long cap);

bool member_test(const PartitiveTree& t, const std::vector<int>& s);

PartitiveTree canonicalize(const PartitiveTree& t);

// Random partitive tree over the given ground size (test support).
PartitiveTree random_partitive_tree(int ground, uint64_t seed);

struct OrthogonalTree {
    PartitiveTree tree;
    // per input member: the smallest tree node whose set contains it
    std::vector<int> container;
};

// Partitive tree of the orthogonal: all non-empty sets overlapping no
// member of f. The ground set and singletons are always represented.
OrthogonalTree orthogonal_tree(const SetFamily& f);

} // namespace splitdec

#endif

#ifndef SPLITDEC_SPLIT_TREE_HPP
#define SPLITDEC_SPLIT_TREE_HPP

#include <string>
#include <vector>

namespace splitdec {

enum class NodeLabel : uint8_t { Prime, Clique, Star };

// Unrooted decomposition tree. Leaves are in bijection with graph vertices;
// removing any edge splits the leaf set into the two sides of a strong split.
// Each Star node designates the incident edge toward its center part.
class SplitTree {
public:
    struct Node {
        bool leaf = false;
        int vertex = -1;         // leaf only
        NodeLabel label = NodeLabel::Prime;
        int center = -1;         // star only: neighbor id toward the center
        std::vector<int> adj;
    };

    int add_leaf(int vertex);
    int add_internal(NodeLabel label);
    void add_edge(int a, int b);

    int size() const { return (int)nodes_.size(); }
    const Node& node(int i) const { return nodes_[i]; }
    Node& node(int i) { return nodes_[i]; }
    int leaf_count() const;
    int leaf_of_vertex(int v) const;

    // Splices out internal nodes of degree <= 2.
    void contract_degree_two();

    // Equal trees produce identical strings: rooted at the leaf of vertex 0,
    // children ordered by minimum descendant vertex, star centers recorded
    // relative to that ordering.
    std::string canonical_string() const;

    std::string render_text(const std::vector<std::string>& labels) const;

private:
    std::vector<Node> nodes_;
};

inline char label_char(NodeLabel l) {
    switch (l) {
        case NodeLabel::Prime: return 'P';
        case NodeLabel::Clique: return 'C';
        default: return 'S';
    }
}

} // namespace splitdec

#endif

#ifndef SPLITDEC_GRAPH_HPP
#define SPLITDEC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace splitdec {

// Simple undirected graph over dense vertex indices. Original string labels
// are kept for I/O only; every algorithm works on indices.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const {
        return {adj_list_.data() + adj_ptr_[v], adj_ptr_[v + 1] - adj_ptr_[v]};
    }
    int degree(int v) const { return adj_ptr_[v + 1] - adj_ptr_[v]; }
    bool has_edge(int u, int v) const;

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_connected() const;
    // First vertex of two distinct components, or {-1,-1} when connected.
    std::pair<int, int> disconnected_witness() const;

    std::vector<std::pair<int, int>> edges() const;
    Graph induced(const std::vector<int>& vertices) const;  // relabels 0..k-1

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<int> adj_ptr_;
    std::vector<int> adj_list_;
    std::vector<std::string> labels_;
};

// BFS distance layers from a root vertex.
struct Layering {
    int root = 0;
    std::vector<int> dist;                // per vertex
    std::vector<std::vector<int>> layers; // layers[h] sorted by index
    int max_dist = 0;
};

Layering bfs_layering(const Graph& g, int root);

// Connected components of the subgraph induced by {v : dist(v) > h}
// (strict) or {v : dist(v) >= h}. Sorted inside, ordered by min vertex.
std::vector<std::vector<int>> components_above(const Graph& g, const Layering& lay,
                                               int h, bool strict);

// Layer-h vertices adjacent to at least one member of X; X must lie
// strictly below layer h.
std::vector<int> layer_neighborhood(const Graph& g, const Layering& lay,
                                    const std::vector<int>& X, int h);

// Partition of layers[h] grouped by connected component of G[>=h].
std::vector<std::vector<int>> h_components(const Graph& g, const Layering& lay, int h);

} // namespace splitdec

#endif

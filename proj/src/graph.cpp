#include "splitdec/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace splitdec {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (labels_.empty()) {
        labels_.reserve(n);
        for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    }
    if ((int)labels_.size() != n) throw std::runtime_error("label count mismatch");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::runtime_error("edge endpoint out of range");
        if (u == v) throw std::runtime_error("self-loop on vertex '" + labels_[u] + "'");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    m_ = (long long)edges.size();

    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) { ++deg[u]; ++deg[v]; }
    adj_ptr_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) adj_ptr_[v + 1] = adj_ptr_[v] + deg[v];
    adj_list_.resize(2 * m_);
    std::vector<int> fill(adj_ptr_.begin(), adj_ptr_.end() - 1);
    for (auto [u, v] : edges) {
        adj_list_[fill[u]++] = v;
        adj_list_[fill[v]++] = u;
    }
    // neighbor lists come out sorted because edges are sorted
    for (int v = 0; v < n; ++v)
        if (!std::is_sorted(adj_list_.begin() + adj_ptr_[v], adj_list_.begin() + adj_ptr_[v + 1]))
            std::sort(adj_list_.begin() + adj_ptr_[v], adj_list_.begin() + adj_ptr_[v + 1]);
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::pair<int, int> Graph::disconnected_witness() const {
    if (n_ == 0) return {-1, -1};
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front(); q.pop();
        for (int w : neighbors(v))
            if (!seen[w]) { seen[w] = 1; q.push(w); }
    }
    for (int v = 0; v < n_; ++v)
        if (!seen[v]) return {0, v};
    return {-1, -1};
}

bool Graph::is_connected() const { return disconnected_witness().first == -1; }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int v = 0; v < n_; ++v)
        for (int w : neighbors(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> local(n_, -1);
    for (int i = 0; i < (int)vertices.size(); ++i) local[vertices[i]] = i;
    std::vector<std::pair<int, int>> es;
    std::vector<std::string> labs;
    labs.reserve(vertices.size());
    for (int v : vertices) labs.push_back(labels_[v]);
    for (int v : vertices)
        for (int w : neighbors(v))
            if (v < w && local[w] >= 0) es.emplace_back(local[v], local[w]);
    return Graph((int)vertices.size(), std::move(es), std::move(labs));
}

Layering bfs_layering(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count()) throw std::runtime_error("root out of range");
    Layering lay;
    lay.root = root;
    lay.dist.assign(g.vertex_count(), -1);
    lay.dist[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front(); q.pop();
        for (int w : g.neighbors(v))
            if (lay.dist[w] < 0) {
                lay.dist[w] = lay.dist[v] + 1;
                q.push(w);
            }
    }
    lay.max_dist = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (lay.dist[v] < 0) throw std::runtime_error("layering requires a connected graph");
        lay.max_dist = std::max(lay.max_dist, lay.dist[v]);
    }
    lay.layers.assign(lay.max_dist + 1, {});
    for (int v = 0; v < g.vertex_count(); ++v) lay.layers[lay.dist[v]].push_back(v);
    return lay;
}

namespace {

std::vector<std::vector<int>> grouped_components(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : verts) in[v] = 1;
    std::vector<std::vector<int>> comps;
    for (int s : verts) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front(); q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (in[w] && !seen[w]) { seen[w] = 1; q.push(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return comps;
}

} // namespace

std::vector<std::vector<int>> components_above(const Graph& g, const Layering& lay,
                                               int h, bool strict) {
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (strict ? lay.dist[v] > h : lay.dist[v] >= h) verts.push_back(v);
    return grouped_components(g, verts);
}

std::vector<int> layer_neighborhood(const Graph& g, const Layering& lay,
                                    const std::vector<int>& X, int h) {
    std::vector<char> mark(g.vertex_count(), 0);
    std::vector<int> out;
    for (int x : X)
        for (int w : g.neighbors(x))
            if (lay.dist[w] == h && !mark[w]) {
                mark[w] = 1;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> h_components(const Graph& g, const Layering& lay, int h) {
    auto comps = components_above(g, lay, h, /*strict=*/false);
    std::vector<std::vector<int>> out;
    for (auto& c : comps) {
        std::vector<int> part;
        for (int v : c)
            if (lay.dist[v] == h) part.push_back(v);
        if (!part.empty()) out.push_back(std::move(part));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

} // namespace splitdec

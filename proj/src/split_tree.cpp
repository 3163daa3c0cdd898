#include "splitdec/split_tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace splitdec {

int SplitTree::add_leaf(int vertex) {
    Node n;
    n.leaf = true;
    n.vertex = vertex;
    nodes_.push_back(std::move(n));
    return (int)nodes_.size() - 1;
}

int SplitTree::add_internal(NodeLabel label) {
    Node n;
    n.label = label;
    nodes_.push_back(std::move(n));
    return (int)nodes_.size() - 1;
}

void SplitTree::add_edge(int a, int b) {
    nodes_[a].adj.push_back(b);
    nodes_[b].adj.push_back(a);
}

int SplitTree::leaf_count() const {
    int c = 0;
    for (auto& n : nodes_) c += n.leaf;
    return c;
}

int SplitTree::leaf_of_vertex(int v) const {
    for (int i = 0; i < (int)nodes_.size(); ++i)
        if (nodes_[i].leaf && nodes_[i].vertex == v) return i;
    throw std::runtime_error("leaf not found");
}

void SplitTree::contract_degree_two() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < (int)nodes_.size(); ++i) {
            Node& n = nodes_[i];
            if (n.leaf || n.adj.empty()) continue;
            if ((int)n.adj.size() == 1) {
                // dangling internal node: absorb into its neighbor
                int a = n.adj[0];
                auto& na = nodes_[a].adj;
                na.erase(std::find(na.begin(), na.end(), i));
                if (nodes_[a].center == i) nodes_[a].center = -1;
                n.adj.clear();
                changed = true;
            } else if ((int)n.adj.size() == 2) {
                int a = n.adj[0], b = n.adj[1];
                auto splice = [&](int from, int to) {
                    auto& adj = nodes_[from].adj;
                    *std::find(adj.begin(), adj.end(), i) = to;
                    if (nodes_[from].center == i) nodes_[from].center = to;
                };
                splice(a, b);
                splice(b, a);
                n.adj.clear();
                changed = true;
            }
        }
    }
}

namespace {

struct CanonCtx {
    const SplitTree* t;
    std::vector<int> min_vertex; // min descendant original vertex per node, from current root
};

} // namespace

std::string SplitTree::canonical_string() const {
    if (nodes_.empty()) return "()";
    int start = leaf_of_vertex(0);
    if (nodes_[start].adj.empty()) {
        // n == 1 degenerate
        return "[" + std::to_string(nodes_[start].vertex) + "]";
    }

    std::vector<int> minv(nodes_.size(), -1);
    std::function<int(int, int)> mins = [&](int u, int parent) -> int {
        if (nodes_[u].leaf) return minv[u] = nodes_[u].vertex;
        int best = INT32_MAX;
        for (int w : nodes_[u].adj)
            if (w != parent) best = std::min(best, mins(w, u));
        return minv[u] = best;
    };

    std::function<std::string(int, int)> ser = [&](int u, int parent) -> std::string {
        const Node& n = nodes_[u];
        if (n.leaf) return std::to_string(n.vertex);
        std::vector<int> kids;
        for (int w : n.adj)
            if (w != parent) kids.push_back(w);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) { return minv[a] < minv[b]; });
        std::string s = "(";
        s += label_char(n.label);
        if (n.label == NodeLabel::Star) {
            if (n.center == parent) {
                s += "^";
            } else {
                int pos = -1;
                for (int i = 0; i < (int)kids.size(); ++i)
                    if (kids[i] == n.center) pos = i;
                s += "@" + std::to_string(pos);
            }
        }
        for (int k : kids) {
            s += " ";
            s += ser(k, u);
        }
        s += ")";
        return s;
    };

    int root = nodes_[start].adj[0];
    mins(root, start);
    return "0-" + ser(root, start);
}

std::string SplitTree::render_text(const std::vector<std::string>& labels) const {
    if (nodes_.empty()) return "(empty)\n";
    int start = leaf_of_vertex(0);
    std::vector<int> minv(nodes_.size(), -1);
    std::function<int(int, int)> mins = [&](int u, int parent) -> int {
        if (nodes_[u].leaf) return minv[u] = nodes_[u].vertex;
        int best = INT32_MAX;
        for (int w : nodes_[u].adj)
            if (w != parent) best = std::min(best, mins(w, u));
        return minv[u] = best;
    };
    std::string out;
    std::function<void(int, int, std::string)> rec = [&](int u, int parent, std::string indent) {
        const Node& n = nodes_[u];
        if (n.leaf) {
            out += indent + labels[n.vertex] + "\n";
            return;
        }
        std::string head(1, label_char(n.label));
        if (n.label == NodeLabel::Star) {
            if (n.center == parent) head += " (center: up)";
            else if (n.center >= 0 && nodes_[n.center].leaf)
                head += " (center: " + labels[nodes_[n.center].vertex] + ")";
            else head += " (center: subtree)";
        }
        out += indent + head + "\n";
        std::vector<int> kids;
        for (int w : n.adj)
            if (w != parent) kids.push_back(w);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) { return minv[a] < minv[b]; });
        for (int k : kids) rec(k, u, indent + "  ");
    };
    if (nodes_[start].adj.empty()) return labels[nodes_[start].vertex] + "\n";
    int root = nodes_[start].adj[0];
    mins(root, start);
    mins(start, root);
    out += labels[nodes_[start].vertex] + "\n";
    rec(root, start, "  ");
    return out;
}

} // namespace splitdec

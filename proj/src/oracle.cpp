#include "splitdec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace splitdec::oracle {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::runtime_error(std::string("oracle cap exceeded: ") + what);
}

} // namespace

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v)) adj[v] |= 1u << w;
    return adj;
}

std::optional<SplitWitness> is_split(const Graph& g, uint32_t x1) {
    int n = g.vertex_count();
    require(n <= kMaxSplitVertices, "is_split");
    uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    uint32_t x2 = all & ~x1;
    if (x1 == 0 || x2 == 0) return std::nullopt;
    auto adj = adjacency_masks(g);
    SplitWitness w;
    w.x1 = x1;
    w.x2 = x2;
    for (int v = 0; v < n; ++v) {
        if ((x1 >> v) & 1) {
            if (adj[v] & x2) w.v2 |= 1u << v;
        } else {
            if (adj[v] & x1) w.v3 |= 1u << v;
        }
    }
    w.v1 = x1 & ~w.v2;
    w.v4 = x2 & ~w.v3;
    for (int v = 0; v < n; ++v)
        if ((w.v2 >> v) & 1)
            if ((adj[v] & w.v3) != w.v3) return std::nullopt;
    return w;
}

std::vector<SplitWitness> enumerate_splits(const Graph& g) {
    int n = g.vertex_count();
    require(n <= kMaxSplitVertices, "enumerate_splits");
    std::vector<SplitWitness> out;
    uint32_t all = (1u << n) - 1;
    for (uint32_t x1 = 1; x1 < all; ++x1) {
        if (!(x1 & 1)) continue;  // canonical: vertex 0 on the x1 side
        if (auto w = is_split(g, x1)) out.push_back(*w);
    }
    return out;
}

bool crosses(const SplitWitness& a, const SplitWitness& b) {
    return (a.x1 & b.x1) && (a.x1 & b.x2) && (a.x2 & b.x1) && (a.x2 & b.x2);
}

std::vector<SplitWitness> strong_splits(const Graph& g) {
    auto splits = enumerate_splits(g);
    std::vector<SplitWitness> out;
    for (const auto& s : splits) {
        bool strong = true;
        for (const auto& t : splits)
            if (crosses(s, t)) { strong = false; break; }
        if (strong) out.push_back(s);
    }
    return out;
}

namespace {

// Quotient classification shared by all internal nodes: parts given as masks,
// adjacency by the exists-an-edge rule.
struct QuotientType {
    NodeLabel label;
    int center = -1;  // index into parts when label == Star
};

QuotientType classify_parts(const std::vector<uint32_t>& parts,
                            const std::vector<uint32_t>& adj) {
    int k = (int)parts.size();
    auto part_edge = [&](int i, int j) {
        uint32_t m = parts[i];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (adj[v] & parts[j]) return true;
        }
        return false;
    };
    std::vector<std::vector<char>> e(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e[i][j] = e[j][i] = part_edge(i, j);

    bool clique = true;
    for (int i = 0; i < k && clique; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!e[i][j]) { clique = false; break; }
    if (clique) return {NodeLabel::Clique, -1};

    for (int c = 0; c < k; ++c) {
        bool star = true;
        for (int i = 0; i < k && star; ++i) {
            if (i == c) continue;
            if (!e[c][i]) star = false;
            for (int j = i + 1; j < k && star; ++j)
                if (j != c && e[i][j]) star = false;
        }
        if (star) return {NodeLabel::Star, c};
    }
    return {NodeLabel::Prime, -1};
}

} // namespace

SplitTree reference_tree(const Graph& g, int root) {
    int n = g.vertex_count();
    require(n <= kMaxTreeVertices, "reference_tree");
    if (n < 2) throw std::runtime_error("reference_tree requires n >= 2");
    auto adj = adjacency_masks(g);

    SplitTree t;
    for (int v = 0; v < n; ++v) t.add_leaf(v);
    if (n == 2) {
        t.add_edge(0, 1);
        return t;
    }

    // r-free sides of strong splits form a laminar family containing all
    // singletons and V \ {r}.
    std::set<uint32_t> side_set;
    for (const auto& s : strong_splits(g))
        side_set.insert(((s.x1 >> root) & 1) ? s.x2 : s.x1);
    for (int v = 0; v < n; ++v)
        if (v != root) side_set.insert(1u << v);
    std::vector<uint32_t> sides(side_set.begin(), side_set.end());
    std::sort(sides.begin(), sides.end(), [](uint32_t a, uint32_t b) {
        return std::popcount(a) > std::popcount(b);
    });

    // inclusion forest (sides are pairwise nested or disjoint)
    int k = (int)sides.size();
    std::vector<int> parent(k, -1);
    for (int i = 1; i < k; ++i)
        for (int j = i - 1; j >= 0; --j)
            if ((sides[i] & sides[j]) == sides[i] &&
                (parent[i] < 0 ||
                 std::popcount(sides[j]) < std::popcount(sides[parent[i]])))
                parent[i] = j;

    std::vector<int> tree_id(k, -1);
    for (int i = 0; i < k; ++i) {
        if (std::popcount(sides[i]) == 1)
            tree_id[i] = std::countr_zero(sides[i]);  // leaf node
        else
            tree_id[i] = t.add_internal(NodeLabel::Prime);
    }
    uint32_t all = (1u << n) - 1;
    std::vector<std::vector<int>> children(k);
    for (int i = 1; i < k; ++i) children[parent[i]].push_back(i);

    for (int i = 0; i < k; ++i) {
        if (std::popcount(sides[i]) == 1) continue;
        std::vector<uint32_t> parts;
        std::vector<int> part_node;
        for (int c : children[i]) {
            parts.push_back(sides[c]);
            part_node.push_back(tree_id[c]);
        }
        parts.push_back(all & ~sides[i]);  // complement part (holds the root side)
        part_node.push_back(-1);
        auto q = classify_parts(parts, adj);
        auto& node = t.node(tree_id[i]);
        node.label = q.label;
        for (int c : children[i]) t.add_edge(tree_id[i], tree_id[c]);
        if (q.label == NodeLabel::Star) node.center = part_node[q.center];  // -1 = parent
    }
    // root side V \ {r}: attach the root leaf; fix parent-direction centers.
    int top = -1;
    for (int i = 0; i < k; ++i)
        if (parent[i] < 0 && std::popcount(sides[i]) > 1) top = tree_id[i];
    if (top < 0) {
        // n == 2 handled above; only possible if V\{r} is a single vertex
        throw std::runtime_error("unexpected trivial side structure");
    }
    t.add_edge(top, root);
    for (int i = 0; i < k; ++i) {
        if (std::popcount(sides[i]) == 1) continue;
        auto& node = t.node(tree_id[i]);
        if (node.label == NodeLabel::Star && node.center == -1) {
            // center is the complement part: the tree neighbor toward the root
            int p = parent[i] >= 0 ? tree_id[parent[i]] : root;
            node.center = p;
        }
    }
    t.contract_degree_two();
    return t;
}

std::vector<uint32_t> brute_orthogonal(int ground_size, const std::vector<uint32_t>& members) {
    require(ground_size <= kMaxGroundBits, "brute_orthogonal");
    uint32_t all = (ground_size == 32) ? ~0u : ((1u << ground_size) - 1);
    std::vector<uint32_t> out;
    for (uint32_t a = 1; a <= all; ++a) {
        bool ok = true;
        for (uint32_t y : members) {
            uint32_t i = a & y;
            if (i != 0 && i != a && i != y) { ok = false; break; }
        }
        if (ok) out.push_back(a);
    }
    return out;
}

std::vector<uint32_t> brute_modules(const Graph& g) {
    int n = g.vertex_count();
    require(n <= kMaxGroundBits, "brute_modules");
    auto adj = adjacency_masks(g);
    uint32_t all = (1u << n) - 1;
    std::vector<uint32_t> out;
    for (uint32_t s = 1; s <= all; ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if ((s >> v) & 1) continue;
            uint32_t i = adj[v] & s;
            if (i != 0 && i != s) ok = false;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

Graph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& parts) {
    int k = (int)parts.size();
    std::vector<int> part_of(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i)
        for (int v : parts[i]) part_of[v] = i;
    std::set<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) {
        int a = part_of[u], b = part_of[v];
        if (a != b && a >= 0 && b >= 0) es.insert({std::min(a, b), std::max(a, b)});
    }
    return Graph(k, {es.begin(), es.end()});
}

std::vector<uint32_t> brute_borders_at(const Graph& g, const Layering& lay, int h) {
    auto splits = enumerate_splits(g);
    std::set<uint32_t> borders;
    int r = lay.root;
    for (const auto& s : splits) {
        bool r_in_x1 = (s.x1 >> r) & 1;
        uint32_t border = r_in_x1 ? s.v3 : s.v2;
        if (border == 0) continue;
        int d = INT32_MAX;
        uint32_t m = border;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            d = std::min(d, lay.dist[v]);
        }
        if (d == h) borders.insert(border);
    }
    return {borders.begin(), borders.end()};
}

std::vector<uint32_t> strong_bottoms_at_least(const Graph& g, const Layering& lay, int h) {
    std::set<uint32_t> out;
    int r = lay.root;
    for (const auto& s : strong_splits(g)) {
        uint32_t bottom = ((s.x1 >> r) & 1) ? s.x2 : s.x1;
        int d = INT32_MAX;
        uint32_t m = bottom;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            d = std::min(d, lay.dist[v]);
        }
        if (d >= h) out.insert(bottom);
    }
    return {out.begin(), out.end()};
}

} // namespace splitdec::oracle

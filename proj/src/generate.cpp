#include "splitdec/generate.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace splitdec {

Graph random_connected_graph(int n, long long m, uint64_t seed) {
    if (n < 2) throw std::runtime_error("need at least 2 vertices");
    long long max_edges = (long long)n * (n - 1) / 2;
    if (m < n - 1 || m > max_edges)
        throw std::runtime_error("infeasible edge count for a connected simple graph");
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::set<std::pair<int, int>> edges;
    auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (int i = 1; i < n; ++i) {
        int j = (int)(rng() % i);
        edges.insert(norm(order[i], order[j]));
    }
    while ((long long)edges.size() < m) {
        int a = (int)(rng() % n), b = (int)(rng() % n);
        if (a == b) continue;
        edges.insert(norm(a, b));
    }
    return Graph(n, {edges.begin(), edges.end()});
}

Graph random_cograph(int n, uint64_t seed) {
    if (n < 1) throw std::runtime_error("need at least 1 vertex");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    // cotree: recursive union (series joins everything across groups)
    struct Rec {
        std::mt19937_64& rng;
        std::vector<std::pair<int, int>>& edges;
        void build(std::vector<int> vs, bool series) {
            if (vs.size() <= 1) return;
            int parts = 2 + (int)(rng() % std::min<size_t>(3, vs.size() - 1));
            parts = std::min<int>(parts, (int)vs.size());
            std::vector<std::vector<int>> groups(parts);
            for (int i = 0; i < parts; ++i) groups[i].push_back(vs[i]);
            for (size_t i = parts; i < vs.size(); ++i) groups[rng() % parts].push_back(vs[i]);
            if (series)
                for (int i = 0; i < parts; ++i)
                    for (int j = i + 1; j < parts; ++j)
                        for (int u : groups[i])
                            for (int v : groups[j]) edges.push_back({u, v});
            for (auto& gp : groups) build(std::move(gp), !series);
        }
    } rec{rng, edges};
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    std::shuffle(vs.begin(), vs.end(), rng);
    rec.build(std::move(vs), /*series=*/true);  // series top keeps it connected
    return Graph(n, std::move(edges));
}

} // namespace splitdec

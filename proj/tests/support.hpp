#ifndef SPLITDEC_TESTS_SUPPORT_HPP
#define SPLITDEC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "splitdec/graph.hpp"
#include "splitdec/set_family.hpp"

namespace splitdec::testsupport {

inline Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, std::move(es));
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph(n, std::move(es));
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, std::move(es));
}

inline Graph star(int leaves) {  // vertex 0 is the hub
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return Graph(leaves + 1, std::move(es));
}

inline Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({i + 5, 5 + (i + 2) % 5});
    }
    return Graph(10, std::move(es));
}

inline Graph from_mask(int n, uint32_t edge_mask) {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((edge_mask >> bit) & 1) es.push_back({i, j});
    return Graph(n, std::move(es));
}

// All connected graphs on n labeled vertices (n <= 6 is practical).
inline std::vector<Graph> all_connected(int n) {
    std::vector<Graph> out;
    int bits = n * (n - 1) / 2;
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        Graph g = from_mask(n, mask);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

// Connected graphs on n vertices up to isomorphism, grown one vertex at a
// time with canonical-form deduplication (degree-pruned minimization).
std::vector<Graph> connected_iso_reps(int n);

inline SetFamily random_family(int ground, int max_members, std::mt19937_64& rng) {
    SetFamily f(ground);
    int count = (int)(rng() % (max_members + 1));
    for (int i = 0; i < count; ++i) {
        uint32_t mask = (uint32_t)(rng() % ((1u << ground) - 1)) + 1;
        std::vector<int> m;
        for (int b = 0; b < ground; ++b)
            if ((mask >> b) & 1) m.push_back(b);
        f.add(std::move(m));
    }
    return f;
}

inline std::vector<uint32_t> family_masks(const SetFamily& f) {
    std::vector<uint32_t> out;
    for (const auto& m : f.members) {
        uint32_t mask = 0;
        for (int x : m) mask |= 1u << x;
        out.push_back(mask);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace splitdec::testsupport

#endif

#include "support.hpp"

#include <array>
#include <numeric>

namespace splitdec::testsupport {

namespace {

// Minimal upper-triangle edge code over all vertex orderings that sort
// degrees descending (other orderings cannot be minimal for this key).
uint32_t canonical_code(int n, uint32_t edge_mask) {
    std::array<std::array<char, 8>, 8> adj{};
    std::array<int, 8> deg{};
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((edge_mask >> bit) & 1) {
                adj[i][j] = adj[j][i] = 1;
                ++deg[i];
                ++deg[j];
            }
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::sort(perm.begin(), perm.begin() + n,
              [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
    // equal-degree groups permute independently
    std::vector<std::pair<int, int>> groups;  // [start, end)
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deg[perm[j]] == deg[perm[i]]) ++j;
        groups.push_back({i, j});
        i = j;
    }
    uint32_t best = UINT32_MAX;
    while (true) {
        uint32_t code = 0;
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++b)
                if (adj[perm[i]][perm[j]]) code |= 1u << b;
        best = std::min(best, code);
        // odometer over group permutations
        int g = (int)groups.size() - 1;
        for (; g >= 0; --g) {
            if (std::next_permutation(perm.begin() + groups[g].first,
                                      perm.begin() + groups[g].second))
                break;
        }
        if (g < 0) break;
    }
    return best;
}

} // namespace

std::vector<Graph> connected_iso_reps(int n) {
    // canonical codes of all graphs (connected or not) on k vertices
    std::vector<std::vector<uint32_t>> reps(n + 1);
    reps[1] = {0};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<uint32_t> seen;
        for (uint32_t base : reps[k - 1]) {
            for (uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                // extend by vertex k-1 adjacent to the vertex set nb
                uint32_t full = 0;
                int b2 = 0, b1 = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j, ++b2) {
                        bool e;
                        if (j < k - 1) e = (base >> b1++) & 1;
                        else e = (nb >> i) & 1;
                        if (e) full |= 1u << b2;
                    }
                seen.insert(canonical_code(k, full));
            }
        }
        reps[k].assign(seen.begin(), seen.end());
        std::sort(reps[k].begin(), reps[k].end());
    }
    std::vector<Graph> out;
    for (uint32_t code : reps[n]) {
        Graph g = from_mask(n, code);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

} // namespace splitdec::testsupport

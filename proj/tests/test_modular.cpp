#include <doctest.h>

#include <random>

#include "splitdec/generate.hpp"
#include "splitdec/modular.hpp"
#include "splitdec/oracle.hpp"
#include "support.hpp"

using namespace splitdec;
namespace ts = splitdec::testsupport;
namespace ora = splitdec::oracle;

namespace {

std::vector<uint32_t> md_masks(const Graph& g) {
    PartitiveTree t = modular_decomposition(g);
    return ts::family_masks(enumerate_members(t, 1 << 22));
}

std::vector<uint32_t> forest_masks(const ModuleForest& mf) {
    // all represented sets across the forest, in layer-local indexing
    std::vector<uint32_t> out;
    std::function<uint64_t(int)> rec = [&](int v) -> uint64_t {
        const auto& n = mf.forest.node(v);
        if (mf.forest.is_leaf(v)) {
            out.push_back(1u << n.element);
            return 1u << n.element;
        }
        std::vector<uint64_t> kids;
        uint64_t all = 0;
        for (int c : n.children) {
            kids.push_back(rec(c));
            all |= kids.back();
        }
        out.push_back((uint32_t)all);
        if (n.kind == PKind::Complete)
            for (uint32_t sub = 1; sub < (1u << kids.size()); ++sub) {
                uint64_t m = 0;
                for (size_t j = 0; j < kids.size(); ++j)
                    if ((sub >> j) & 1) m |= kids[j];
                out.push_back((uint32_t)m);
            }
        return all;
    };
    for (int r : mf.roots) rec(r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

TEST_CASE("modular decomposition of the classics") {
    PartitiveTree k3 = modular_decomposition(ts::complete(3));
    CHECK(k3.node(k3.root()).kind == PKind::Complete);
    CHECK(k3.node(k3.root()).flavor == DegenerateFlavor::Series);

    PartitiveTree p4 = modular_decomposition(ts::path(4));
    CHECK(p4.node(p4.root()).kind == PKind::Prime);
    CHECK(canonicalize(p4).to_string() == "(P 0 1 2 3)");

    // C4 = series of two parallel pairs (the two diagonals)
    PartitiveTree c4 = modular_decomposition(ts::cycle(4));
    CHECK(canonicalize(c4).to_string() == "(C (C 0 2) (C 1 3))");
    CHECK(c4.node(c4.root()).flavor == DegenerateFlavor::Series);

    PartitiveTree st = modular_decomposition(ts::star(3));
    CHECK(canonicalize(st).to_string() == "(C 0 (C 1 2 3))");
}

TEST_CASE("modular decomposition equals brute force, exhaustively") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : ts::connected_iso_reps(n))
            CHECK(md_masks(g) == ora::brute_modules(g));
}

TEST_CASE("modular decomposition equals brute force, random graphs") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 300; ++it) {
        int n = 2 + (int)(rng() % 8);
        long long mmax = (long long)n * (n - 1) / 2;
        long long m = (n - 1) + (long long)(rng() % (mmax - n + 2));
        Graph g = random_connected_graph(n, m, rng());
        CHECK(md_masks(g) == ora::brute_modules(g));
    }
    // cographs have no prime node
    for (int it = 0; it < 100; ++it) {
        Graph g = random_cograph(2 + (int)(rng() % 9), rng());
        PartitiveTree t = modular_decomposition(g);
        for (int i = 0; i < t.size(); ++i)
            if (!t.is_leaf(i)) CHECK(t.node(i).kind != PKind::Prime);
        CHECK(md_masks(g) == ora::brute_modules(g));
    }
}

TEST_CASE("layer restricted modules on the worked examples") {
    // star rooted at the hub: every subset of the leaf layer is a module
    Graph st = ts::star(3);
    Layering lay = bfs_layering(st, 0);
    ModuleForest mf = layer_restricted_modules(st, lay, 1);
    CHECK(mf.contains_layer);
    REQUIRE(mf.roots.size() == 1);
    CHECK(mf.forest.node(mf.roots[0]).kind == PKind::Complete);
    CHECK(mf.forest.node_set_size(mf.roots[0]) == 3);

    // path rooted at one end: singleton layers
    Graph p4 = ts::path(4);
    Layering lp = bfs_layering(p4, 0);
    for (int h = 1; h <= 3; ++h) {
        ModuleForest m = layer_restricted_modules(p4, lp, h);
        CHECK(m.contains_layer);
        REQUIRE(m.roots.size() == 1);
        CHECK(mf.forest.is_leaf(m.roots[0]));
    }
}

TEST_CASE("layer restricted modules equal brute force") {
    std::mt19937_64 rng(73);
    auto check_graph = [&](const Graph& g) {
        for (int r = 0; r < g.vertex_count(); ++r) {
            Layering lay = bfs_layering(g, r);
            for (int h = 1; h <= lay.max_dist; ++h) {
                ModuleForest mf = layer_restricted_modules(g, lay, h);
                // ground truth: modules of G[<=h] inside the layer
                std::vector<int> le;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (lay.dist[v] <= h) le.push_back(v);
                Graph sub = g.induced(le);
                std::vector<int> hpos(g.vertex_count(), -1);
                {
                    int i = 0;
                    for (int v : lay.layers[h]) hpos[v] = i++;
                }
                uint32_t hmask_local = 0;
                std::vector<int> sub_to_h((int)le.size(), -1);
                for (int i = 0; i < (int)le.size(); ++i)
                    if (hpos[le[i]] >= 0) {
                        sub_to_h[i] = hpos[le[i]];
                        hmask_local |= 1u << i;
                    }
                std::vector<uint32_t> expect;
                for (uint32_t mod : ora::brute_modules(sub)) {
                    if ((mod & ~hmask_local) != 0) continue;
                    uint32_t conv = 0;
                    for (int i = 0; i < (int)le.size(); ++i)
                        if ((mod >> i) & 1) conv |= 1u << sub_to_h[i];
                    expect.push_back(conv);
                }
                std::sort(expect.begin(), expect.end());
                CHECK(forest_masks(mf) == expect);
                uint32_t full = (1u << lay.layers[h].size()) - 1;
                bool has_h = std::binary_search(expect.begin(), expect.end(), full);
                CHECK(mf.contains_layer == has_h);
            }
        }
    };
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : ts::connected_iso_reps(n)) check_graph(g);
    for (int it = 0; it < 60; ++it) {
        int n = 7 + (int)(rng() % 3);
        long long mmax = (long long)n * (n - 1) / 2;
        long long m = (n - 1) + (long long)(rng() % (mmax - n + 2));
        check_graph(random_connected_graph(n, m, rng()));
    }
}

TEST_CASE("module forest norm stays proportional to local size") {
    std::mt19937_64 rng(79);
    for (int it = 0; it < 100; ++it) {
        int n = 6 + (int)(rng() % 5);
        long long mmax = (long long)n * (n - 1) / 2;
        long long m = (n - 1) + (long long)(rng() % (mmax - n + 2));
        Graph g = random_connected_graph(n, m, rng());
        Layering lay = bfs_layering(g, 0);
        for (int h = 1; h <= lay.max_dist; ++h) {
            ModuleForest mf = layer_restricted_modules(g, lay, h);
            long long eh = 0, ehh = 0;
            for (auto [u, v] : g.edges()) {
                if (lay.dist[u] == h && lay.dist[v] == h) ++eh;
                if (std::min(lay.dist[u], lay.dist[v]) == h - 1 &&
                    std::max(lay.dist[u], lay.dist[v]) == h)
                    ++ehh;
            }
            long long bound = eh + ehh + (long long)lay.layers[h].size();
            CHECK(forest_generator_norm(mf) <= 4 * bound);
        }
    }
}

#include <doctest.h>

#include <bit>

#include "splitdec/oracle.hpp"
#include "support.hpp"

using namespace splitdec;
namespace ts = splitdec::testsupport;
namespace ora = splitdec::oracle;

TEST_CASE("splits of small graphs") {
    Graph p4 = ts::path(4);
    auto w = ora::is_split(p4, 0b0011);  // {a,b} | {c,d}
    REQUIRE(w.has_value());
    CHECK(w->v2 == 0b0010);
    CHECK(w->v3 == 0b0100);
    CHECK(!ora::is_split(p4, 0b0110).has_value());  // {b,c}

    auto splits = ora::enumerate_splits(p4);
    int nontrivial = 0;
    for (const auto& s : splits)
        if (std::popcount(s.x1) >= 2 && std::popcount(s.x2) >= 2) ++nontrivial;
    CHECK(nontrivial == 1);
    CHECK(splits.size() == 5);  // 4 trivial + 1

    Graph k4 = ts::complete(4);
    CHECK(ora::enumerate_splits(k4).size() == 7);  // all bipartitions

    Graph c5 = ts::cycle(5);
    for (const auto& s : ora::enumerate_splits(c5))
        CHECK((std::popcount(s.x1) == 1 || std::popcount(s.x2) == 1));
}

TEST_CASE("crossing") {
    Graph k4 = ts::complete(4);
    auto a = *ora::is_split(k4, 0b0011);
    auto b = *ora::is_split(k4, 0b0101);
    CHECK(ora::crosses(a, b));
    auto t = *ora::is_split(k4, 0b0001);
    CHECK(!ora::crosses(a, t));
    CHECK(!ora::crosses(t, b));

    Graph p4 = ts::path(4);
    auto s = *ora::is_split(p4, 0b0011);
    auto tr = *ora::is_split(p4, 0b0001);
    CHECK(!ora::crosses(s, tr));
}

TEST_CASE("trivial splits are strong") {
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : ts::connected_iso_reps(n)) {
            auto strong = ora::strong_splits(g);
            int trivial = 0;
            for (const auto& s : strong)
                if (std::popcount(s.x1) == 1 || std::popcount(s.x2) == 1) ++trivial;
            CHECK(trivial == n);
        }
}

TEST_CASE("reference trees of the classic shapes") {
    Graph k4 = ts::complete(4);
    SplitTree tk = ora::reference_tree(k4, 0);
    CHECK(tk.canonical_string() == "0-(C 1 2 3)");

    Graph p4 = ts::path(4);
    SplitTree tp = ora::reference_tree(p4, 0);
    // two stars, centered at b and c
    CHECK(tp.canonical_string() == "0-(S@0 1 (S@0 2 3))");

    Graph c5 = ts::cycle(5);
    SplitTree tc = ora::reference_tree(c5, 0);
    CHECK(tc.canonical_string() == "0-(P 1 2 3 4)");

    Graph st = ts::star(3);
    SplitTree tst = ora::reference_tree(st, 1);
    CHECK(tst.canonical_string() == "0-(S^ 1 2 3)");  // center = the hub, vertex 0

    Graph pet = ts::petersen();
    SplitTree tpet = ora::reference_tree(pet, 0);
    CHECK(tpet.node(tpet.leaf_of_vertex(0)).adj.size() == 1);
    int internals = 0;
    for (int i = 0; i < tpet.size(); ++i)
        if (!tpet.node(i).leaf && !tpet.node(i).adj.empty()) {
            ++internals;
            CHECK(tpet.node(i).label == NodeLabel::Prime);
        }
    CHECK(internals == 1);
}

TEST_CASE("reference tree is root invariant") {
    for (const Graph& g : {ts::path(5), ts::cycle(6), ts::star(4), ts::complete(5)}) {
        std::string first = ora::reference_tree(g, 0).canonical_string();
        for (int r = 1; r < g.vertex_count(); ++r)
            CHECK(ora::reference_tree(g, r).canonical_string() == first);
    }
}

TEST_CASE("brute orthogonal") {
    auto o = ora::brute_orthogonal(4, {0b0011, 0b0110});
    std::vector<uint32_t> expect{0b0001, 0b0010, 0b0100, 0b0111, 0b1000, 0b1111};
    CHECK(o == expect);

    CHECK(ora::brute_orthogonal(2, {}).size() == 3);
    CHECK(ora::brute_orthogonal(3, {0b111}).size() == 7);
}

TEST_CASE("brute modules") {
    Graph p4 = ts::path(4);
    auto m = ora::brute_modules(p4);
    CHECK(m.size() == 5);  // singletons + V

    Graph k3 = ts::complete(3);
    CHECK(ora::brute_modules(k3).size() == 7);

    Graph c4 = ts::cycle(4);
    auto mc = ora::brute_modules(c4);  // singletons, V, both diagonals
    CHECK(mc.size() == 7);
    CHECK(std::find(mc.begin(), mc.end(), 0b0101u) != mc.end());
    CHECK(std::find(mc.begin(), mc.end(), 0b1010u) != mc.end());
}

TEST_CASE("quotient graph") {
    Graph p4 = ts::path(4);
    Graph q = ora::quotient_graph(p4, {{0}, {1}, {2, 3}});
    CHECK(q.vertex_count() == 3);
    CHECK(q.edge_count() == 2);
    CHECK(q.has_edge(0, 1));
    CHECK(q.has_edge(1, 2));

    Graph k4 = ts::complete(4);
    Graph qk = ora::quotient_graph(k4, {{0}, {1}, {2}, {3}});
    CHECK(qk.edge_count() == 6);

    Graph st = ts::star(3);
    Graph qs = ora::quotient_graph(st, {{0}, {1}, {2, 3}});
    CHECK(qs.edge_count() == 2);
}

TEST_CASE("crossing splits embed in a degenerate partition") {
    // any two crossing splits live inside one clique or star partition
    for (const Graph& g : ts::connected_iso_reps(5)) {
        auto splits = ora::enumerate_splits(g);
        for (size_t i = 0; i < splits.size(); ++i)
            for (size_t j = i + 1; j < splits.size(); ++j) {
                if (!ora::crosses(splits[i], splits[j])) continue;
                uint32_t a = splits[i].x1, b = splits[j].x1;
                std::vector<uint32_t> cells{a & b, a & ~b, ~a & b,
                                            ~a & ~b & ((1u << g.vertex_count()) - 1)};
                std::vector<std::vector<int>> parts;
                for (uint32_t c : cells) {
                    std::vector<int> p;
                    for (int v = 0; v < g.vertex_count(); ++v)
                        if ((c >> v) & 1) p.push_back(v);
                    if (!p.empty()) parts.push_back(std::move(p));
                }
                // every cell must itself be a split side
                for (const auto& p : parts) {
                    uint32_t mask = 0;
                    for (int v : p) mask |= 1u << v;
                    CHECK(ora::is_split(g, mask).has_value());
                }
                Graph q = ora::quotient_graph(g, parts);
                int k = q.vertex_count();
                bool clique = q.edge_count() == (long long)k * (k - 1) / 2;
                bool star = false;
                for (int c = 0; c < k && !star; ++c) {
                    bool ok = q.degree(c) == k - 1;
                    for (int v = 0; v < k && ok; ++v)
                        if (v != c && q.degree(v) != 1) ok = false;
                    star = ok;
                }
                CHECK((clique || star));
            }
    }
}

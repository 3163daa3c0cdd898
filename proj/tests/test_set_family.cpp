#include <doctest.h>

#include <random>

#include "splitdec/oracle.hpp"
#include "splitdec/partitive_tree.hpp"
#include "splitdec/set_family.hpp"
#include "support.hpp"

using namespace splitdec;
namespace ts = splitdec::testsupport;
namespace ora = splitdec::oracle;

TEST_CASE("overlap") {
    CHECK(overlap({1, 2}, {2, 3}));
    CHECK(!overlap({1, 2}, {1, 2, 3}));
    CHECK(!overlap({1}, {2}));
    CHECK(!overlap({1, 2}, {1, 2}));
}

TEST_CASE("norm") {
    SetFamily f(4);
    f.add({1, 2});
    f.add({3});
    CHECK(f.norm() == 5);
    CHECK(SetFamily(3).norm() == 0);
    SetFamily d(2);
    d.add({1});
    d.add({1});
    CHECK(d.norm() == 4);
}

TEST_CASE("partition refinement") {
    SetFamily f(5);
    f.add({1, 2});
    f.add({1, 2, 3});
    auto p = partition_refine({{1, 2, 3, 4}}, f);
    CHECK(p == std::vector<std::vector<int>>{{1, 2}, {3}, {4}});

    SetFamily empty(4);
    CHECK(partition_refine({{1, 2, 3}}, empty) == std::vector<std::vector<int>>{{1, 2, 3}});

    SetFamily one(5);
    one.add({2, 3});
    CHECK(partition_refine({{1, 2, 3, 4}}, one) ==
          std::vector<std::vector<int>>{{1, 4}, {2, 3}});

    // no result block overlaps any member, and blocks are maximal
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        int ground = 2 + (int)(rng() % 9);
        SetFamily g = ts::random_family(ground, 6, rng);
        std::vector<int> all(ground);
        for (int i = 0; i < ground; ++i) all[i] = i;
        auto blocks = partition_refine({all}, g);
        for (const auto& b : blocks)
            for (const auto& m : g.members) CHECK(!overlap(b, m));
        // maximality: same membership signature iff same block
        std::vector<int> block_of(ground);
        for (int bi = 0; bi < (int)blocks.size(); ++bi)
            for (int x : blocks[bi]) block_of[x] = bi;
        for (int x = 0; x < ground; ++x)
            for (int y = x + 1; y < ground; ++y) {
                bool same_sig = true;
                for (const auto& m : g.members) {
                    bool mx = std::binary_search(m.begin(), m.end(), x);
                    bool my = std::binary_search(m.begin(), m.end(), y);
                    if (mx != my) { same_sig = false; break; }
                }
                CHECK(same_sig == (block_of[x] == block_of[y]));
            }
    }
}

TEST_CASE("overlap classes match brute force") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 500; ++it) {
        int ground = 1 + (int)(rng() % 10);
        SetFamily f = ts::random_family(ground, 8, rng);
        auto cls = overlap_classes(f);
        // brute force union-find over pairwise overlaps
        int k = (int)f.members.size();
        std::vector<int> uf(k);
        for (int i = 0; i < k; ++i) uf[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (overlap(f.members[i], f.members[j])) uf[std::max(find(i), find(j))] = std::min(find(i), find(j));
        // duplicates share a class in the fast path; mirror that
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (f.members[i] == f.members[j]) uf[std::max(find(i), find(j))] = std::min(find(i), find(j));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                CHECK((cls[i] == cls[j]) == (find(i) == find(j)));
    }
}

namespace {

std::vector<uint32_t> tree_masks(const PartitiveTree& t) {
    SetFamily f = enumerate_members(t, 1 << 20);
    return ts::family_masks(f);
}

} // namespace

TEST_CASE("orthogonal tree on the worked examples") {
    SetFamily f(4);
    f.add({0, 1});
    f.add({1, 2});
    auto o = orthogonal_tree(f);
    CHECK(canonicalize(o.tree).to_string() == "(C (P 0 1 2) 3)");
    auto brute = ora::brute_orthogonal(4, {0b0011, 0b0110});
    CHECK(tree_masks(o.tree) == brute);

    // circulant family: prime root, nothing but singletons and the ground
    for (int p = 3; p <= 7; ++p) {
        SetFamily c(p);
        for (int i = 0; i < p; ++i) c.add({i, (i + 1) % p});
        auto oc = orthogonal_tree(c);
        CHECK(oc.tree.node(oc.tree.root()).kind == PKind::Prime);
        CHECK((int)oc.tree.node(oc.tree.root()).children.size() == p);
    }

    SetFamily empty(3);
    auto oe = orthogonal_tree(empty);
    CHECK(canonicalize(oe.tree).to_string() == "(C 0 1 2)");
}

TEST_CASE("orthogonal tree equals brute force on random families") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 800; ++it) {
        int ground = 1 + (int)(rng() % 12);
        SetFamily f = ts::random_family(ground, 10, rng);
        auto o = orthogonal_tree(f);
        std::vector<uint32_t> members;
        for (const auto& m : f.members) {
            uint32_t mask = 0;
            for (int x : m) mask |= 1u << x;
            members.push_back(mask);
        }
        auto brute = ora::brute_orthogonal(ground, members);
        CHECK(tree_masks(o.tree) == brute);
        if (tree_masks(o.tree) != brute) {
            CAPTURE(it);
            break;
        }
    }
}

TEST_CASE("orthogonal tree containers are smallest containing nodes") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 300; ++it) {
        int ground = 1 + (int)(rng() % 10);
        SetFamily f = ts::random_family(ground, 8, rng);
        auto o = orthogonal_tree(f);
        for (size_t i = 0; i < f.members.size(); ++i) {
            int node = o.container[i];
            auto nset = o.tree.node_set(node);
            CHECK(std::includes(nset.begin(), nset.end(), f.members[i].begin(),
                                f.members[i].end()));
            // no child of the container also contains the member
            if (!o.tree.is_leaf(node))
                for (int c : o.tree.node(node).children) {
                    auto cset = o.tree.node_set(c);
                    CHECK(!std::includes(cset.begin(), cset.end(), f.members[i].begin(),
                                         f.members[i].end()));
                }
        }
    }
}

TEST_CASE("orthogonal of a union is the intersection of orthogonals") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 300; ++it) {
        int ground = 1 + (int)(rng() % 9);
        SetFamily a = ts::random_family(ground, 6, rng);
        SetFamily b = ts::random_family(ground, 6, rng);
        SetFamily u(ground);
        for (auto m : a.members) u.add(m);
        for (auto m : b.members) u.add(m);
        auto mu = tree_masks(orthogonal_tree(u).tree);
        auto ma = tree_masks(orthogonal_tree(a).tree);
        auto mb = tree_masks(orthogonal_tree(b).tree);
        std::vector<uint32_t> inter;
        std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(),
                              std::back_inserter(inter));
        CHECK(mu == inter);
    }
}

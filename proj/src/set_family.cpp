#include "splitdec/set_family.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "splitdec/partitive_tree.hpp"

namespace splitdec {

void SetFamily::add(std::vector<int> m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.empty()) throw std::runtime_error("empty family member");
    if (m.front() < 0 || m.back() >= ground)
        throw std::runtime_error("family member outside ground set");
    members.push_back(std::move(m));
}

long long SetFamily::norm() const {
    long long s = (long long)members.size();
    for (const auto& m : members) s += (long long)m.size();
    return s;
}

bool overlap(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++common; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return common > 0 && common < a.size() && common < b.size();
}

std::vector<std::vector<int>> partition_refine(const std::vector<std::vector<int>>& initial,
                                               const SetFamily& f) {
    // dense relabeling of the refined universe
    std::vector<int> elems;
    for (const auto& b : initial) elems.insert(elems.end(), b.begin(), b.end());
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw std::runtime_error("initial blocks are not disjoint");
    std::unordered_map<int, int> local;
    local.reserve(elems.size() * 2);
    for (int i = 0; i < (int)elems.size(); ++i) local[elems[i]] = i;

    int n = (int)elems.size();
    std::vector<int> pos(n), elem(n), block_of(n);
    struct Block { int start, end; };
    std::vector<Block> blocks;
    {
        int at = 0;
        for (const auto& b : initial) {
            int id = (int)blocks.size();
            blocks.push_back({at, at + (int)b.size()});
            for (int x : b) {
                int lx = local.at(x);
                elem[at] = lx;
                pos[lx] = at;
                block_of[lx] = id;
                ++at;
            }
        }
    }

    std::vector<int> stamp(blocks.size(), -1), cnt(blocks.size(), 0), gathered(blocks.size(), 0);
    int epoch = 0;
    for (const auto& member : f.members) {
        ++epoch;
        std::vector<int> touched;
        std::vector<int> in_member;
        for (int x : member) {
            auto it = local.find(x);
            if (it == local.end())
                throw std::runtime_error("member element outside the refined universe");
            int lx = it->second;
            in_member.push_back(lx);
            int b = block_of[lx];
            if (stamp[b] != epoch) { stamp[b] = epoch; cnt[b] = 0; gathered[b] = 0; touched.push_back(b); }
            ++cnt[b];
        }
        for (int lx : in_member) {
            int b = block_of[lx];
            if (cnt[b] == blocks[b].end - blocks[b].start) continue;  // fully inside
            int target = blocks[b].start + gathered[b]++;
            int other = elem[target];
            std::swap(elem[pos[lx]], elem[target]);
            pos[other] = pos[lx];
            pos[lx] = target;
        }
        for (int b : touched) {
            int sz = blocks[b].end - blocks[b].start;
            if (cnt[b] == sz) continue;
            int nb = (int)blocks.size();
            blocks.push_back({blocks[b].start, blocks[b].start + cnt[b]});
            blocks[b].start += cnt[b];
            for (int p = blocks[nb].start; p < blocks[nb].end; ++p) block_of[elem[p]] = nb;
            stamp.push_back(-1);
            cnt.push_back(0);
            gathered.push_back(0);
        }
    }

    std::vector<std::vector<int>> out(blocks.size());
    for (int b = 0; b < (int)blocks.size(); ++b) {
        for (int p = blocks[b].start; p < blocks[b].end; ++p) out[b].push_back(elems[elem[p]]);
        std::sort(out[b].begin(), out[b].end());
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { for (int i = 0; i < n; ++i) p[i] = i; }
    int find(int x) { while (p[x] != x) x = p[x] = p[p[x]]; return x; }
    void unite(int a, int b) {
        a = find(a); b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

uint64_t set_hash(const std::vector<int>& v) {
    uint64_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= (uint64_t)(x + 0x9e3779b9);
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

// Members are processed from largest to smallest against a refinement
// partition whose split history is kept as a forest. A member spanning
// several current blocks overlaps exactly the earlier members whose split
// events separate its blocks; walking the history from the touched blocks
// to their meeting point visits all of them.
std::vector<int> overlap_classes(const SetFamily& f) {
    int n = f.ground;
    int k = (int)f.members.size();
    std::vector<int> cls(k, -1);
    if (k == 0) return cls;

    std::vector<uint64_t> hash(k);
    for (int i = 0; i < k; ++i) hash[i] = set_hash(f.members[i]);
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (f.members[a].size() != f.members[b].size())
            return f.members[a].size() > f.members[b].size();
        if (hash[a] != hash[b]) return hash[a] < hash[b];
        if (f.members[a] != f.members[b]) return f.members[a] < f.members[b];
        return a < b;
    });
    // identical members collapse onto one processed representative
    std::vector<int> rep(k);
    std::vector<int> process;
    for (int idx = 0; idx < k; ++idx) {
        int m = order[idx];
        if (idx > 0 && f.members[order[idx - 1]] == f.members[m]) rep[m] = rep[order[idx - 1]];
        else { rep[m] = m; process.push_back(m); }
    }

    std::vector<int> pos(n), elem(n), block_of(n, 0);
    for (int i = 0; i < n; ++i) pos[i] = elem[i] = i;
    struct Block { int start, end, hist; };
    struct HNode { int parent; int depth; bool in_side; int splitter; };
    std::vector<Block> blocks{{0, n, 0}};
    std::vector<HNode> hist{{-1, 0, false, -1}};

    Dsu dsu(k);
    std::vector<int> bstamp{-1}, cnt{0}, gathered{0};
    std::vector<int> hstamp{-1};
    int epoch = 0;

    for (int m : process) {
        ++epoch;
        const auto& member = f.members[m];
        std::vector<int> touched;
        for (int x : member) {
            int b = block_of[x];
            if (bstamp[b] != epoch) { bstamp[b] = epoch; cnt[b] = 0; gathered[b] = 0; touched.push_back(b); }
            ++cnt[b];
        }

        if (touched.size() >= 2) {
            // deepest-first walk to the meeting point of the touched blocks
            std::priority_queue<std::pair<int, int>> heap;
            int active = 0;
            for (int b : touched) {
                int h = blocks[b].hist;
                if (hstamp[h] != epoch) {
                    hstamp[h] = epoch;
                    heap.push({hist[h].depth, h});
                    ++active;
                }
            }
            while (active > 1) {
                auto [d, v] = heap.top();
                heap.pop();
                int p = hist[v].parent;
                if (p < 0) break;  // defensive; cannot happen with active > 1
                if (hist[v].in_side) dsu.unite(m, hist[p].splitter);
                if (hstamp[p] == epoch) {
                    --active;
                } else {
                    hstamp[p] = epoch;
                    heap.push({hist[p].depth, p});
                }
            }
        }

        if (touched.size() == 1 && cnt[touched[0]] == blocks[touched[0]].end - blocks[touched[0]].start) {
            // member equals a block: record it as a chain event so later
            // members crossing this boundary still find it
            int b = touched[0];
            int e = blocks[b].hist;
            hist[e].splitter = m;
            hist.push_back({e, hist[e].depth + 1, true, -1});
            hstamp.push_back(-1);
            blocks[b].hist = (int)hist.size() - 1;
            continue;
        }

        for (int x : member) {
            int b = block_of[x];
            if (cnt[b] == blocks[b].end - blocks[b].start) continue;
            int target = blocks[b].start + gathered[b]++;
            int other = elem[target];
            std::swap(elem[pos[x]], elem[target]);
            pos[other] = pos[x];
            pos[x] = target;
        }
        for (int b : touched) {
            int sz = blocks[b].end - blocks[b].start;
            if (cnt[b] == sz) continue;
            int e = blocks[b].hist;
            hist[e].splitter = m;
            hist.push_back({e, hist[e].depth + 1, true, -1});   // carved member side
            int c_in = (int)hist.size() - 1;
            hist.push_back({e, hist[e].depth + 1, false, -1});  // remainder side
            int c_rest = (int)hist.size() - 1;
            hstamp.push_back(-1);
            hstamp.push_back(-1);
            int nb = (int)blocks.size();
            blocks.push_back({blocks[b].start, blocks[b].start + cnt[b], c_in});
            blocks[b].start += cnt[b];
            blocks[b].hist = c_rest;
            for (int p = blocks[nb].start; p < blocks[nb].end; ++p) block_of[elem[p]] = nb;
            bstamp.push_back(-1);
            cnt.push_back(0);
            gathered.push_back(0);
        }
    }

    for (int i = 0; i < k; ++i) cls[i] = dsu.find(rep[i]);
    return cls;
}

OrthogonalTree orthogonal_tree(const SetFamily& f) {
    int n = f.ground;
    if (n < 1) throw std::runtime_error("orthogonal_tree requires a non-empty ground set");
    int k = (int)f.members.size();
    OrthogonalTree out;
    PartitiveTree t(n);

    if (n == 1) {
        t.set_root(0);
        out.tree = std::move(t);
        out.container.assign(k, 0);
        return out;
    }

    std::vector<int> cls = overlap_classes(f);

    // union of each overlap class
    std::unordered_map<int, std::vector<int>> class_members;
    for (int i = 0; i < k; ++i) class_members[cls[i]].push_back(i);
    std::unordered_map<int, std::vector<int>> class_union;
    for (auto& [c, ids] : class_members) {
        std::vector<int> u;
        for (int i : ids) u.insert(u.end(), f.members[i].begin(), f.members[i].end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        class_union.emplace(c, std::move(u));
    }

    int root = t.add_internal(PKind::Complete);
    t.set_root(root);

    // laminar skeleton: ground, singletons, distinct class unions
    struct USet { uint64_t h; const std::vector<int>* s; int cls; };
    std::vector<USet> usets;
    for (auto& [c, u] : class_union) usets.push_back({set_hash(u), &u, c});
    std::sort(usets.begin(), usets.end(), [](const USet& a, const USet& b) {
        if (a.s->size() != b.s->size()) return a.s->size() > b.s->size();
        if (a.h != b.h) return a.h < b.h;
        if (*a.s != *b.s) return *a.s < *b.s;
        return a.cls < b.cls;
    });
    std::unordered_map<int, int> node_of_class;
    std::vector<int> owner(n, root);
    for (size_t i = 0; i < usets.size(); ++i) {
        const auto& u = *usets[i].s;
        if ((int)u.size() == n) { node_of_class[usets[i].cls] = root; continue; }
        if (u.size() == 1) { node_of_class[usets[i].cls] = t.leaf_of(u[0]); continue; }
        if (i > 0 && *usets[i - 1].s == u) {
            node_of_class[usets[i].cls] = node_of_class[usets[i - 1].cls];
            continue;
        }
        int nd = t.add_internal(PKind::Complete);
        t.attach(nd, owner[u[0]]);
        for (int x : u) owner[x] = nd;
        node_of_class[usets[i].cls] = nd;
    }
    for (int x = 0; x < n; ++x) t.attach(t.leaf_of(x), owner[x]);

    // leaf positions and node intervals for child lookup
    std::vector<int> leafpos(n, -1), lo(t.size(), -1), hi(t.size(), -1);
    {
        int next = 0;
        std::vector<int> stack{root};
        std::vector<int> state(t.size(), 0);
        std::vector<std::pair<int, int>> dfs;
        dfs.push_back({root, 0});
        while (!dfs.empty()) {
            auto& [v, ci] = dfs.back();
            if (t.is_leaf(v)) {
                leafpos[t.node(v).element] = next;
                lo[v] = hi[v] = next;
                ++next;
                dfs.pop_back();
                continue;
            }
            if (ci == 0) lo[v] = next;
            if (ci < (int)t.node(v).children.size()) {
                int c = t.node(v).children[ci];
                ++ci;
                dfs.push_back({c, 0});
            } else {
                hi[v] = next - 1;
                dfs.pop_back();
            }
        }
    }

    // members grouped by their class-union node
    std::vector<std::vector<int>> at_node(t.size());
    for (int i = 0; i < k; ++i) at_node[node_of_class.at(cls[i])].push_back(i);
    out.container.assign(k, -1);

    int nodes_before_blocks = t.size();
    for (int N = 0; N < nodes_before_blocks; ++N) {
        const auto& ids = at_node[N];
        if (ids.empty()) continue;
        if (t.is_leaf(N)) {
            for (int i : ids) out.container[i] = N;
            continue;
        }
        // children sorted by interval start for binary search
        std::vector<int> kids = t.node(N).children;
        std::sort(kids.begin(), kids.end(), [&](int a, int b) { return lo[a] < lo[b]; });
        std::vector<int> starts(kids.size());
        for (size_t j = 0; j < kids.size(); ++j) starts[j] = lo[kids[j]];
        int q = (int)kids.size();
        auto slot_of = [&](int element) {
            int p = leafpos[element];
            int j = (int)(std::upper_bound(starts.begin(), starts.end(), p) - starts.begin()) - 1;
            return j;
        };

        std::vector<std::vector<int>> K(ids.size());
        std::vector<int> sstamp(q, -1);
        bool proper = false;
        for (size_t a = 0; a < ids.size(); ++a) {
            for (int x : f.members[ids[a]]) {
                int s = slot_of(x);
                if (sstamp[s] != (int)a) { sstamp[s] = (int)a; K[a].push_back(s); }
            }
            if ((int)K[a].size() < q) proper = true;
        }
        if (!proper) {
            t.node(N).kind = PKind::Complete;
            for (int i : ids) out.container[i] = N;
            continue;
        }
        t.node(N).kind = PKind::Prime;

        // group children by which members cover them
        std::vector<std::vector<int>> sig(q);
        for (size_t a = 0; a < ids.size(); ++a)
            for (int s : K[a]) sig[s].push_back((int)a);
        std::unordered_map<uint64_t, std::vector<int>> groups;
        for (int s = 0; s < q; ++s) {
            uint64_t h = set_hash(sig[s]);
            groups[h].push_back(s);
        }
        std::vector<int> block_of_slot(q, -1);
        std::vector<int> block_node;
        std::vector<std::vector<int>> block_slots;
        for (int s = 0; s < q; ++s) {
            if (block_of_slot[s] >= 0) continue;
            uint64_t h = set_hash(sig[s]);
            std::vector<int> same;
            for (int s2 : groups[h])
                if (sig[s2] == sig[s]) same.push_back(s2);
            int bid = (int)block_node.size();
            for (int s2 : same) block_of_slot[s2] = bid;
            int bn = -1;
            if (same.size() >= 2) {
                bn = t.add_internal(PKind::Complete);
                for (int s2 : same) {
                    t.detach(kids[s2]);
                    t.attach(kids[s2], bn);
                }
                t.attach(bn, N);
            }
            block_node.push_back(bn);
            block_slots.push_back(std::move(same));
        }
        for (size_t a = 0; a < ids.size(); ++a) {
            int b0 = block_of_slot[K[a][0]];
            bool one_block = true;
            for (int s : K[a])
                if (block_of_slot[s] != b0) { one_block = false; break; }
            if ((int)K[a].size() == 1)
                out.container[ids[a]] = kids[K[a][0]];
            else if (one_block && (int)K[a].size() < q && block_node[b0] >= 0)
                out.container[ids[a]] = block_node[b0];
            else
                out.container[ids[a]] = N;
        }
    }

    t.canonical_children();
    out.tree = std::move(t);
    return out;
}

} // namespace splitdec

#include "splitdec/partitive_tree.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace splitdec {

PartitiveTree::PartitiveTree(int ground) : ground_(ground) {
    nodes_.resize(ground);
    for (int i = 0; i < ground; ++i) {
        nodes_[i].kind = PKind::Leaf;
        nodes_[i].element = i;
    }
}

int PartitiveTree::add_internal(PKind kind) {
    PNode n;
    n.kind = kind;
    nodes_.push_back(std::move(n));
    return (int)nodes_.size() - 1;
}

void PartitiveTree::attach(int child, int parent) {
    nodes_[child].parent = parent;
    nodes_[parent].children.push_back(child);
}

void PartitiveTree::detach(int child) {
    int p = nodes_[child].parent;
    if (p < 0) return;
    auto& cs = nodes_[p].children;
    cs.erase(std::find(cs.begin(), cs.end(), child));
    nodes_[child].parent = -1;
}

std::vector<int> PartitiveTree::node_set(int i) const {
    std::vector<int> out;
    std::vector<int> stack{i};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (nodes_[v].kind == PKind::Leaf) out.push_back(nodes_[v].element);
        else
            for (int c : nodes_[v].children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int PartitiveTree::node_set_size(int i) const {
    int count = 0;
    std::vector<int> stack{i};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (nodes_[v].kind == PKind::Leaf) ++count;
        else
            for (int c : nodes_[v].children) stack.push_back(c);
    }
    return count;
}

void PartitiveTree::canonical_children() {
    std::vector<int> minleaf(nodes_.size(), -1);
    std::function<int(int)> rec = [&](int v) -> int {
        if (nodes_[v].kind == PKind::Leaf) return minleaf[v] = nodes_[v].element;
        int best = INT32_MAX;
        for (int c : nodes_[v].children) best = std::min(best, rec(c));
        return minleaf[v] = best;
    };
    if (root_ >= 0) rec(root_);
    for (auto& n : nodes_)
        std::sort(n.children.begin(), n.children.end(),
                  [&](int a, int b) { return minleaf[a] < minleaf[b]; });
}

std::string PartitiveTree::to_string() const {
    if (root_ < 0) return "()";
    std::function<std::string(int)> rec = [&](int v) -> std::string {
        const PNode& n = nodes_[v];
        if (n.kind == PKind::Leaf) return std::to_string(n.element);
        std::string s = "(";
        s += n.kind == PKind::Prime ? 'P' : 'C';
        for (int c : n.children) {
            s += ' ';
            s += rec(c);
        }
        s += ')';
        return s;
    };
    return rec(root_);
}

PartitiveTree swap_labels(const PartitiveTree& t) {
    PartitiveTree out = t;
    for (int i = 0; i < out.size(); ++i) {
        auto& n = out.node(i);
        if (n.kind == PKind::Prime) n.kind = PKind::Complete;
        else if (n.kind == PKind::Complete) n.kind = PKind::Prime;
    }
    return out;
}

SetFamily generator_family(const PartitiveTree& t) {
    SetFamily f(t.ground_size());
    for (int i = 0; i < t.size(); ++i) {
        if (!t.is_leaf(i) && t.node(i).parent < 0 && i != t.root()) continue;  // detached
        f.add(t.node_set(i));
        if (!t.is_leaf(i) && t.node(i).kind == PKind::Prime) {
            const auto& cs = t.node(i).children;
            int p = (int)cs.size();
            std::vector<std::vector<int>> csets(p);
            for (int j = 0; j < p; ++j) csets[j] = t.node_set(cs[j]);
            for (int j = 0; j < p; ++j) {
                if (p == 2 && j == 1) break;  // avoid the duplicate pair
                std::vector<int> u = csets[j];
                const auto& nx = csets[(j + 1) % p];
                u.insert(u.end(), nx.begin(), nx.end());
                f.add(std::move(u));
            }
        }
    }
    return f;
}

SetFamily complement_reduced_family(const SetFamily& f, const std::vector<int>& x) {
    std::vector<int> xs = x;
    std::sort(xs.begin(), xs.end());
    bool has_x = false;
    for (const auto& m : f.members) {
        if (m == xs) has_x = true;
        if (!std::includes(xs.begin(), xs.end(), m.begin(), m.end()))
            throw std::runtime_error("family member not contained in X");
    }
    if (!has_x) throw std::runtime_error("X itself must be a family member");

    auto classes = partition_refine({xs}, f);
    int tcount = (int)classes.size();
    SetFamily w(f.ground);
    for (auto& c : classes) w.add(c);
    if (tcount >= 3) {
        for (int i = 0; i < tcount; ++i) {
            std::vector<int> u = classes[i];
            const auto& nx = classes[(i + 1) % tcount];
            u.insert(u.end(), nx.begin(), nx.end());
            w.add(std::move(u));
        }
    }
    if (tcount >= 2) w.add(xs);  // with one class, X is the class already
    return w;
}

SetFamily enumerate_members(const PartitiveTree& t, long long cap) {
    if (t.ground_size() > 62) throw std::runtime_error("enumeration limited to small ground sets");
    std::set<uint64_t> sets;
    auto guard = [&]() {
        if ((long long)sets.size() > cap) throw std::runtime_error("enumeration cap exceeded");
    };
    std::function<uint64_t(int)> rec = [&](int v) -> uint64_t {
        const PNode& n = t.node(v);
        if (n.kind == PKind::Leaf) {
            uint64_t m = 1ull << n.element;
            sets.insert(m);
            guard();
            return m;
        }
        std::vector<uint64_t> kid_masks;
        uint64_t all = 0;
        for (int c : n.children) {
            uint64_t m = rec(c);
            kid_masks.push_back(m);
            all |= m;
        }
        sets.insert(all);
        guard();
        if (n.kind == PKind::Complete) {
            int q = (int)kid_masks.size();
            if (q > 25) throw std::runtime_error("enumeration cap exceeded");
            for (uint32_t sub = 1; sub < (1u << q); ++sub) {
                uint64_t m = 0;
                for (int j = 0; j < q; ++j)
                    if ((sub >> j) & 1) m |= kid_masks[j];
                sets.insert(m);
                guard();
            }
        }
        return all;
    };
    rec(t.root());
    SetFamily out(t.ground_size());
    for (uint64_t m : sets) {
        std::vector<int> s;
        for (int i = 0; i < t.ground_size(); ++i)
            if ((m >> i) & 1) s.push_back(i);
        out.add(std::move(s));
    }
    return out;
}

bool member_test(const PartitiveTree& t, const std::vector<int>& s) {
    if (s.empty()) return false;
    // leaf positions in a fixed DFS order; node sets are position intervals
    std::vector<int> leafpos(t.ground_size(), -1);
    std::vector<int> lo(t.size(), -1), hi(t.size(), -1), setsz(t.size(), 0);
    int next = 0;
    std::function<void(int)> dfs = [&](int v) {
        if (t.is_leaf(v)) {
            leafpos[t.node(v).element] = next;
            lo[v] = hi[v] = next;
            setsz[v] = 1;
            ++next;
            return;
        }
        lo[v] = next;
        for (int c : t.node(v).children) {
            dfs(c);
            setsz[v] += setsz[c];
        }
        hi[v] = next - 1;
    };
    dfs(t.root());

    int pmin = INT32_MAX, pmax = -1;
    for (int x : s) {
        pmin = std::min(pmin, leafpos[x]);
        pmax = std::max(pmax, leafpos[x]);
    }
    // lowest node covering the whole position range
    int v = -1;
    for (int x = 0; x < t.ground_size(); ++x)
        if (leafpos[x] == pmin) { v = t.leaf_of(x); break; }
    while (!(lo[v] <= pmin && pmax <= hi[v])) v = t.node(v).parent;

    if ((int)s.size() == setsz[v]) return true;  // equals the node set
    if (t.is_leaf(v) || t.node(v).kind == PKind::Prime) return false;
    // Complete: s must be a union of whole children
    std::vector<int> count(t.node(v).children.size(), 0);
    std::vector<int> starts;
    std::vector<int> kids = t.node(v).children;
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return lo[a] < lo[b]; });
    for (int c : kids) starts.push_back(lo[c]);
    for (int x : s) {
        int j = (int)(std::upper_bound(starts.begin(), starts.end(), leafpos[x]) - starts.begin()) - 1;
        ++count[j];
    }
    for (size_t j = 0; j < kids.size(); ++j)
        if (count[j] != 0 && count[j] != setsz[kids[j]]) return false;
    return true;
}

PartitiveTree canonicalize(const PartitiveTree& t) {
    PartitiveTree out = t;
    out.canonical_children();
    return out;
}

PartitiveTree random_partitive_tree(int ground, uint64_t seed) {
    std::mt19937_64 rng(seed);
    PartitiveTree t(ground);
    std::vector<int> pool(ground);
    for (int i = 0; i < ground; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);

    std::function<int(std::vector<int>)> build = [&](std::vector<int> elems) -> int {
        if (elems.size() == 1) return t.leaf_of(elems[0]);
        int parts = 2 + (int)(rng() % std::min<size_t>(3, elems.size() - 1));
        parts = std::min<int>(parts, (int)elems.size());
        std::vector<std::vector<int>> groups(parts);
        for (int j = 0; j < parts; ++j) groups[j].push_back(elems[j]);
        for (size_t i = parts; i < elems.size(); ++i) groups[rng() % parts].push_back(elems[i]);
        PKind kind = (parts >= 3 && (rng() & 1)) ? PKind::Prime : PKind::Complete;
        int v = t.add_internal(kind);
        for (auto& g : groups) t.attach(build(std::move(g)), v);
        return v;
    };
    t.set_root(build(pool));
    t.canonical_children();
    return t;
}

} // namespace splitdec

#include "splitdec/modular.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace splitdec {

namespace {

// Induced subgraph in local indices; verts maps back to tree leaves.
struct Sub {
    std::vector<int> verts;
    std::vector<std::vector<int>> adj;
};

Sub make_sub(const Sub& s, const std::vector<int>& locals) {
    Sub out;
    out.verts.reserve(locals.size());
    std::vector<int> remap(s.verts.size(), -1);
    for (int i = 0; i < (int)locals.size(); ++i) {
        remap[locals[i]] = i;
        out.verts.push_back(s.verts[locals[i]]);
    }
    out.adj.resize(locals.size());
    for (int i = 0; i < (int)locals.size(); ++i)
        for (int w : s.adj[locals[i]])
            if (remap[w] >= 0) out.adj[i].push_back(remap[w]);
    return out;
}

std::vector<std::vector<int>> components(const Sub& s) {
    int n = (int)s.verts.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        int id = (int)out.size();
        out.push_back({});
        std::queue<int> q;
        q.push(v);
        comp[v] = id;
        while (!q.empty()) {
            int u = q.front(); q.pop();
            out[id].push_back(u);
            for (int w : s.adj[u])
                if (comp[w] < 0) { comp[w] = id; q.push(w); }
        }
    }
    return out;
}

// Components of the complement, via BFS over a pool of unvisited vertices.
std::vector<std::vector<int>> co_components(const Sub& s) {
    int n = (int)s.verts.size();
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<char> visited(n, 0), is_nb(n, 0);
    std::vector<std::vector<int>> out;
    while (!pool.empty()) {
        int start = -1;
        while (!pool.empty() && visited[pool.back()]) pool.pop_back();
        if (pool.empty()) break;
        start = pool.back();
        pool.pop_back();
        visited[start] = 1;
        out.push_back({});
        auto& comp = out.back();
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front(); q.pop();
            comp.push_back(u);
            for (int w : s.adj[u]) is_nb[w] = 1;
            std::vector<int> keep;
            keep.reserve(pool.size());
            for (int w : pool) {
                if (visited[w]) continue;
                if (is_nb[w]) keep.push_back(w);
                else { visited[w] = 1; q.push(w); }
            }
            for (int w : s.adj[u]) is_nb[w] = 0;
            pool.swap(keep);
        }
        for (int w : comp) pool.push_back(w);
        // re-add visited of this component? they are visited; prune next loop
        pool.erase(std::remove_if(pool.begin(), pool.end(),
                                  [&](int w) { return visited[w]; }),
                   pool.end());
    }
    return out;
}

// Coarsest partition of verts(s) \ {c} into modules avoiding c, refining
// {N(c), non-neighbors}. Classic part-queue refinement.
std::vector<std::vector<int>> maximal_modules_avoiding(const Sub& s, int c) {
    int n = (int)s.verts.size();
    std::vector<int> part_of(n, -1);
    std::vector<std::vector<int>> parts;
    std::vector<char> is_nb(n, 0);
    for (int w : s.adj[c]) is_nb[w] = 1;
    std::vector<int> nbs, rest;
    for (int v = 0; v < n; ++v) {
        if (v == c) continue;
        (is_nb[v] ? nbs : rest).push_back(v);
    }
    for (int w : s.adj[c]) is_nb[w] = 0;
    auto new_part = [&](std::vector<int> vs) {
        int id = (int)parts.size();
        for (int v : vs) part_of[v] = id;
        parts.push_back(std::move(vs));
        return id;
    };
    std::vector<char> queued;
    std::queue<int> work;
    auto enqueue = [&](int id) {
        if ((int)queued.size() <= id) queued.resize(id + 1, 0);
        if (!queued[id]) { queued[id] = 1; work.push(id); }
    };
    if (!nbs.empty()) enqueue(new_part(std::move(nbs)));
    if (!rest.empty()) enqueue(new_part(std::move(rest)));

    std::vector<int> cnt, touched;
    std::vector<std::vector<int>> hit;
    cnt.assign(parts.size(), 0);
    hit.assign(parts.size(), {});
    while (!work.empty()) {
        int pid = work.front();
        work.pop();
        queued[pid] = 0;
        std::vector<int> snapshot = parts[pid];
        for (int z : snapshot) {
            if (part_of[z] != pid) { /* z moved out by an earlier splitter of this snapshot */ }
            touched.clear();
            for (int w : s.adj[z]) {
                if (w == c) continue;
                int t = part_of[w];
                if (t == part_of[z]) continue;
                if (hit[t].empty()) touched.push_back(t);
                hit[t].push_back(w);
            }
            for (int t : touched) {
                if ((int)hit[t].size() == (int)parts[t].size()) { hit[t].clear(); continue; }
                // carve the neighbor side out of part t
                std::vector<int> inside = std::move(hit[t]);
                hit[t].clear();
                auto& old_vs = parts[t];
                std::vector<int> remain;
                remain.reserve(old_vs.size() - inside.size());
                std::vector<char> take(n, 0);
                for (int w : inside) take[w] = 1;
                for (int w : old_vs)
                    if (!take[w]) remain.push_back(w);
                parts[t] = std::move(remain);
                int nid = new_part(std::move(inside));
                cnt.resize(parts.size(), 0);
                hit.resize(parts.size());
                if (queued[t]) enqueue(nid);
                else enqueue(parts[t].size() <= parts[nid].size() ? t : nid);
            }
        }
    }
    parts.erase(std::remove_if(parts.begin(), parts.end(),
                               [](const auto& p) { return p.empty(); }),
                parts.end());
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) {
                  return *std::min_element(a.begin(), a.end()) <
                         *std::min_element(b.begin(), b.end());
              });
    return parts;
}

// Quotient of s by {c} + parts, in part-local indices; vertex k = c's slot.
struct Quotient {
    int k;  // number of parts; vertex k is the center
    std::vector<std::vector<int>> adj;
};

Quotient build_quotient(const Sub& s, int c, const std::vector<std::vector<int>>& parts) {
    Quotient q;
    q.k = (int)parts.size();
    int n = (int)s.verts.size();
    std::vector<int> slot(n, -1);
    for (int i = 0; i < q.k; ++i)
        for (int v : parts[i]) slot[v] = i;
    slot[c] = q.k;
    q.adj.assign(q.k + 1, {});
    std::vector<char> seen(q.k + 1, 0);
    for (int i = 0; i <= q.k; ++i) {
        int rep = (i == q.k) ? c : parts[i][0];
        for (int w : s.adj[rep]) {
            int t = slot[w];
            if (t == i || seen[t]) continue;
            seen[t] = 1;
            q.adj[i].push_back(t);
        }
        for (int w : q.adj[i]) seen[w] = 0;
        std::sort(q.adj[i].begin(), q.adj[i].end());
    }
    return q;
}

// Minimal non-empty set closed under "z -> w if z distinguishes w from the
// center", within the alive set. Complements of closed sets are exactly the
// modules containing the center.
std::vector<int> min_closed(const Quotient& q, const std::vector<char>& alive) {
    int center = q.k;
    auto adj_to = [&](int a, int b) {
        return std::binary_search(q.adj[a].begin(), q.adj[a].end(), b);
    };
    int z0 = -1;
    for (int v = 0; v < q.k; ++v)
        if (alive[v]) { z0 = v; break; }
    if (z0 < 0) return {};

    std::vector<char> in_f(q.k + 1, 0), in_r(q.k + 1, 0);
    while (true) {
        // forward reach: successors of z are N(z) or non-neighbors,
        // depending on z's adjacency to the center
        std::fill(in_f.begin(), in_f.end(), 0);
        std::vector<int> f;
        std::vector<int> stack{z0};
        in_f[z0] = 1;
        std::vector<int> pool;
        for (int v = 0; v < q.k; ++v)
            if (alive[v] && v != z0) pool.push_back(v);
        std::vector<char> is_nb(q.k + 1, 0);
        while (!stack.empty()) {
            int z = stack.back();
            stack.pop_back();
            f.push_back(z);
            bool z_center = adj_to(z, center);
            if (!z_center) {
                for (int w : q.adj[z])
                    if (w != center && alive[w] && !in_f[w]) {
                        in_f[w] = 1;
                        stack.push_back(w);
                    }
            } else {
                for (int w : q.adj[z]) is_nb[w] = 1;
                std::vector<int> keep;
                for (int w : pool) {
                    if (in_f[w]) continue;
                    if (is_nb[w]) { keep.push_back(w); continue; }
                    in_f[w] = 1;
                    stack.push_back(w);
                }
                for (int w : q.adj[z]) is_nb[w] = 0;
                pool.swap(keep);
            }
        }
        // reverse reach from z0 inside f: predecessors via symmetric
        // difference with the center's neighborhood
        std::fill(in_r.begin(), in_r.end(), 0);
        std::vector<int> rstack{z0};
        in_r[z0] = 1;
        int rcount = 1;
        while (!rstack.empty()) {
            int w = rstack.back();
            rstack.pop_back();
            // preds = (N(w) xor N(center)) restricted to f
            auto step = [&](int z) {
                if (z == center || z == w) return;
                if (!in_f[z] || in_r[z]) return;
                in_r[z] = 1;
                ++rcount;
                rstack.push_back(z);
            };
            size_t i = 0, j = 0;
            const auto& a = q.adj[w];
            const auto& b = q.adj[center];
            while (i < a.size() || j < b.size()) {
                if (j == b.size() || (i < a.size() && a[i] < b[j])) step(a[i++]);
                else if (i == a.size() || b[j] < a[i]) step(b[j++]);
                else { ++i; ++j; }
            }
        }
        bool scc_is_all = ((int)f.size() == rcount);
        if (scc_is_all) return f;
        for (int z : f)
            if (!in_r[z]) { z0 = z; break; }
    }
}

struct Builder {
    PartitiveTree* t;

    int build(const Sub& s) {
        int n = (int)s.verts.size();
        if (n == 1) return t->leaf_of(s.verts[0]);

        auto comps = components(s);
        if (comps.size() >= 2) return degenerate(s, comps, DegenerateFlavor::Parallel);
        auto cocomps = co_components(s);
        if (cocomps.size() >= 2) return degenerate(s, cocomps, DegenerateFlavor::Series);

        // prime top: c plus the maximal modules avoiding c
        int c = 0;
        for (int v = 1; v < n; ++v)
            if (s.adj[v].size() < s.adj[c].size()) c = v;
        auto parts = maximal_modules_avoiding(s, c);
        auto q = build_quotient(s, c, parts);

        std::vector<int> part_node(parts.size());
        for (size_t i = 0; i < parts.size(); ++i)
            part_node[i] = build(make_sub(s, parts[i]));

        // peel the chain of modules containing c, outermost first
        std::vector<char> alive(q.k, 1);
        int alive_count = q.k;
        std::vector<std::vector<int>> levels;
        while (alive_count > 0) {
            auto tset = min_closed(q, alive);
            levels.push_back(tset);
            for (int v : tset) alive[v] = 0;
            alive_count -= (int)tset.size();
        }

        int inner = t->leaf_of(s.verts[c]);
        std::vector<int> inner_members{q.k};  // quotient slots inside the inner module
        for (int li = (int)levels.size() - 1; li >= 0; --li) {
            const auto& tset = levels[li];
            PKind kind = PKind::Prime;
            DegenerateFlavor flavor = DegenerateFlavor::None;
            if (li == 0) {
                kind = PKind::Prime;  // this subgraph is connected and co-connected
            } else {
                classify_level(q, tset, inner_members, kind, flavor);
            }
            int v = t->add_internal(kind);
            t->node(v).flavor = flavor;
            t->attach(inner, v);
            for (int slot : tset) t->attach(part_node[slot], v);
            inner = v;
            inner_members.insert(inner_members.end(), tset.begin(), tset.end());
        }
        return inner;
    }

    int degenerate(const Sub& s, const std::vector<std::vector<int>>& groups,
                   DegenerateFlavor flavor) {
        int v = t->add_internal(PKind::Complete);
        t->node(v).flavor = flavor;
        for (const auto& g : groups) t->attach(build(make_sub(s, g)), v);
        return v;
    }

    // Label for one peel level: children are the level's parts plus the
    // nested inner module; classify their quotient graph.
    void classify_level(const Quotient& q, const std::vector<int>& tset,
                        const std::vector<int>& inner_members,
                        PKind& kind, DegenerateFlavor& flavor) const {
        // representatives: each part in tset, plus the center for the inner set
        std::vector<int> reps = tset;
        reps.push_back(q.k);
        int m = (int)reps.size();
        auto adj_to = [&](int a, int b) {
            return std::binary_search(q.adj[a].begin(), q.adj[a].end(), b);
        };
        // connectivity and co-connectivity of the rep quotient
        std::vector<int> comp(m, -1), cocmp(m, -1);
        auto flood = [&](std::vector<int>& lab, bool complement) {
            for (int i = 0; i < m; ++i) {
                if (lab[i] >= 0) continue;
                lab[i] = i;
                std::vector<int> st{i};
                while (!st.empty()) {
                    int a = st.back();
                    st.pop_back();
                    for (int b = 0; b < m; ++b) {
                        if (lab[b] >= 0) continue;
                        bool e = adj_to(reps[a], reps[b]);
                        if (complement ? !e : e) {
                            lab[b] = i;
                            st.push_back(b);
                        }
                    }
                }
            }
        };
        flood(comp, false);
        bool connected = std::all_of(comp.begin(), comp.end(), [&](int x) { return x == comp[0]; });
        if (!connected) { kind = PKind::Complete; flavor = DegenerateFlavor::Parallel; return; }
        flood(cocmp, true);
        bool co_connected = std::all_of(cocmp.begin(), cocmp.end(), [&](int x) { return x == cocmp[0]; });
        if (!co_connected) { kind = PKind::Complete; flavor = DegenerateFlavor::Series; return; }
        kind = PKind::Prime;
        flavor = DegenerateFlavor::None;
    }
};

// Collapse nested Complete nodes with the same flavor.
void normalize(PartitiveTree& t, int root) {
    std::function<void(int)> rec = [&](int v) {
        auto kids = t.node(v).children;
        for (int c : kids) rec(c);
        if (t.is_leaf(v) || t.node(v).kind != PKind::Complete) return;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int c : t.node(v).children) {
                if (!t.is_leaf(c) && t.node(c).kind == PKind::Complete &&
                    t.node(c).flavor == t.node(v).flavor) {
                    auto sub = t.node(c).children;
                    t.detach(c);
                    for (int gc : sub) {
                        t.detach(gc);
                        t.attach(gc, v);
                    }
                    changed = true;
                    break;
                }
            }
        }
    };
    rec(root);
}

} // namespace

PartitiveTree modular_decomposition(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::runtime_error("modular decomposition of an empty graph");
    PartitiveTree t(n);
    Sub s;
    s.verts.resize(n);
    std::iota(s.verts.begin(), s.verts.end(), 0);
    s.adj.resize(n);
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        s.adj[v].assign(nb.begin(), nb.end());
    }
    Builder b{&t};
    int root = b.build(s);
    t.set_root(root);
    normalize(t, root);
    t.canonical_children();
    return t;
}

ModuleForest layer_restricted_modules(const Graph& g, const Layering& lay, int h) {
    if (h < 1 || h > lay.max_dist) throw std::runtime_error("layer index out of range");
    const auto& H = lay.layers[h];
    ModuleForest mf;
    mf.layer_vertices = H;

    std::vector<int> verts = lay.layers[h - 1];
    verts.insert(verts.end(), H.begin(), H.end());
    std::sort(verts.begin(), verts.end());
    Graph sub = g.induced(verts);

    std::vector<int> local_of(g.vertex_count(), -1);
    for (int i = 0; i < (int)verts.size(); ++i) local_of[verts[i]] = i;
    std::vector<int> hlocal(verts.size(), -1);  // sub-local -> H-local
    for (int i = 0; i < (int)H.size(); ++i) hlocal[local_of[H[i]]] = i;

    PartitiveTree md = modular_decomposition(sub);

    mf.forest = PartitiveTree((int)H.size());
    auto& out = mf.forest;

    // bottom-up extraction: keep maximal unions of marked leaves that the
    // tree certifies to be modules
    struct Res { int node = -1; bool full = false; };
    std::vector<Res> res(md.size());
    std::function<void(int)> rec = [&](int v) {
        if (md.is_leaf(v)) {
            int hl = hlocal[md.node(v).element];
            if (hl >= 0) res[v] = {out.leaf_of(hl), true};
            return;
        }
        std::vector<int> picked;
        bool full = true;
        for (int c : md.node(v).children) {
            rec(c);
            if (res[c].node >= 0) picked.push_back(c);
            if (!res[c].full || res[c].node < 0) full = false;
        }
        if (full) {
            int nv = out.add_internal(md.node(v).kind);
            out.node(nv).flavor = md.node(v).flavor;
            for (int c : md.node(v).children) out.attach(res[c].node, nv);
            res[v] = {nv, true};
            return;
        }
        if (md.node(v).kind == PKind::Prime) {
            for (int c : picked) mf.roots.push_back(res[c].node);
            res[v] = {-1, false};
            return;
        }
        // partially marked Complete: keep the union of the marked children
        if (picked.empty()) { res[v] = {-1, false}; return; }
        if (picked.size() == 1) { res[v] = {res[picked[0]].node, false}; return; }
        int nv = out.add_internal(PKind::Complete);
        out.node(nv).flavor = md.node(v).flavor;
        for (int c : picked) out.attach(res[c].node, nv);
        res[v] = {nv, false};
    };
    rec(md.root());
    if (res[md.root()].node >= 0) mf.roots.push_back(res[md.root()].node);

    std::sort(mf.roots.begin(), mf.roots.end(), [&](int a, int b) {
        return out.node_set(a)[0] < out.node_set(b)[0];
    });

    // H is a module of G[<=h] iff every previous-layer vertex sees all
    // of H or none of it (deeper layers have no edges into H)
    mf.contains_layer = true;
    {
        std::vector<char> in_h(g.vertex_count(), 0);
        for (int v : H) in_h[v] = 1;
        for (int u : lay.layers[h - 1]) {
            int cnt = 0;
            for (int w : g.neighbors(u))
                if (in_h[w]) ++cnt;
            if (cnt != 0 && cnt != (int)H.size()) { mf.contains_layer = false; break; }
        }
    }
    return mf;
}

long long forest_generator_norm(const ModuleForest& mf) {
    long long total = 0;
    std::function<long long(int)> rec = [&](int v) -> long long {
        if (mf.forest.is_leaf(v)) {
            total += 2;  // one node of size one
            return 1;
        }
        long long sz = 0;
        for (int c : mf.forest.node(v).children) sz += rec(c);
        total += 1 + sz;
        return sz;
    };
    for (int r : mf.roots) rec(r);
    return total;
}

} // namespace splitdec

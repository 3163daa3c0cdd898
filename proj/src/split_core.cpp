#include "splitdec/split_core.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "splitdec/oracle.hpp"

namespace splitdec {

BorderComputation compute_borders(const Graph& g, const Layering& lay, int h,
                                  const ModuleForest& m) {
    if (h < 1 || h > lay.max_dist) throw std::runtime_error("layer index out of range");
    BorderComputation bc;
    bc.layer_vertices = lay.layers[h];
    const auto& H = bc.layer_vertices;
    int hs = (int)H.size();
    std::vector<int> hlocal(g.vertex_count(), -1);
    for (int i = 0; i < hs; ++i) hlocal[H[i]] = i;

    // the module forest as one tree: its generator stands in for the
    // partitive closure of the modules-with-layer family
    PartitiveTree tm = m.forest;
    if (m.roots.size() == 1 && tm.node_set_size(m.roots[0]) == hs) {
        tm.set_root(m.roots[0]);
    } else {
        int r = tm.add_internal(PKind::Prime);
        for (int x : m.roots) tm.attach(x, r);
        tm.set_root(r);
    }
    SetFamily family = generator_family(tm);

    bc.components = components_above(g, lay, h, /*strict=*/true);
    std::vector<int> x_member_index;
    for (const auto& comp : bc.components) {
        std::vector<int> x_local;
        SetFamily fi(hs);
        std::vector<std::vector<int>> nbrs;
        {
            std::vector<char> seen(hs, 0);
            for (int w : comp) {
                if (lay.dist[w] != h + 1) continue;
                std::vector<int> nh;
                for (int u : g.neighbors(w))
                    if (lay.dist[u] == h) {
                        nh.push_back(hlocal[u]);
                        if (!seen[hlocal[u]]) { seen[hlocal[u]] = 1; x_local.push_back(hlocal[u]); }
                    }
                if (!nh.empty()) nbrs.push_back(std::move(nh));
            }
        }
        std::sort(x_local.begin(), x_local.end());
        fi.add(x_local);
        for (auto& nh : nbrs) fi.add(std::move(nh));
        SetFamily wi = complement_reduced_family(fi, x_local);
        for (auto& mem : wi.members) family.add(std::move(mem));
        x_member_index.push_back((int)family.members.size());
        family.add(x_local);

        std::vector<int> x_global;
        for (int l : x_local) x_global.push_back(H[l]);
        bc.attachments.push_back(std::move(x_global));
    }

    OrthogonalTree orth = orthogonal_tree(family);
    bc.tree = std::move(orth.tree);
    for (int idx : x_member_index) bc.container.push_back(orth.container[idx]);
    return bc;
}

int DecompForest::add_leaf(int vertex) {
    Node n;
    n.leaf = true;
    n.vertex = vertex;
    n.rep_vertex = vertex;
    nodes_.push_back(std::move(n));
    return (int)nodes_.size() - 1;
}

int DecompForest::add_internal(DLabel label) {
    Node n;
    n.label = label;
    nodes_.push_back(std::move(n));
    return (int)nodes_.size() - 1;
}

void DecompForest::link(int child, int parent) {
    assert(nodes_[child].parent < 0);
    nodes_[child].parent = parent;
    nodes_[parent].children.push_back(child);
}

void DecompForest::merge_into(int victim, int target) {
    assert(!nodes_[victim].leaf && nodes_[victim].parent < 0);
    for (int c : nodes_[victim].children) {
        nodes_[c].parent = target;
        nodes_[target].children.push_back(c);
    }
    nodes_[victim].children.clear();
    nodes_[victim].alive = false;
}

int DecompForest::add_parent_above(int b, DLabel label) {
    int p = add_internal(label);
    Node& nb = nodes_[b];
    nodes_[p].parent = nb.parent;
    if (nb.parent >= 0) {
        auto& cs = nodes_[nb.parent].children;
        *std::find(cs.begin(), cs.end(), b) = p;
    }
    nb.parent = p;
    nodes_[p].children.push_back(b);
    return p;
}

std::vector<int> DecompForest::roots() const {
    std::vector<int> out;
    for (int i = 0; i < (int)nodes_.size(); ++i)
        if (nodes_[i].alive && nodes_[i].parent < 0) out.push_back(i);
    return out;
}

std::vector<int> DecompForest::leaf_vertices(int i) const {
    std::vector<int> out;
    std::vector<int> stack{i};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (nodes_[v].leaf) out.push_back(nodes_[v].vertex);
        else
            for (int c : nodes_[v].children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootType classify_root(const DecompForest& f, int root, int border_size,
                       bool border_is_split, int attachment_size, bool has_witness) {
    const auto& n = f.node(root);
    bool bottom = n.leaf || n.label != DLabel::Unlabeled;
    if (attachment_size > border_size) return RootType::Type1;
    if (!border_is_split)
        throw std::logic_error("classify_root expects a split border");
    if (attachment_size == border_size) {
        if (bottom) {
            if (has_witness)
                throw std::logic_error("labeled root with full attachment has a proper witness");
            return RootType::Type3;
        }
        if (!has_witness)
            throw std::logic_error("component root without witness should be a split bottom");
        return RootType::Type2;
    }
    return RootType::Type2;
}

LayeredDecomposer::LayeredDecomposer(const Graph& g, int root)
    : g_(g), root_vertex_(root), lay_(bfs_layering(g, root)) {
    next_h_ = lay_.max_dist;
}

BorderForest LayeredDecomposer::build_border_forest(int h, const BorderComputation& bc,
                                                    const std::vector<std::vector<int>>& hcomp_groups) {
    BorderForest bf;
    const auto& bt = bc.tree;
    const auto& H = bc.layer_vertices;
    int hs = (int)H.size();

    std::vector<int> hcomp_of(g_.vertex_count(), -1);
    for (int i = 0; i < (int)hcomp_groups.size(); ++i)
        for (int v : hcomp_groups[i]) hcomp_of[v] = i;

    bool keep_root = false;
    {
        // the layer is itself a border iff it is a module of the graph up
        // to this layer (checked against the previous layer only)
        std::vector<char> in_h(g_.vertex_count(), 0);
        for (int v : H) in_h[v] = 1;
        keep_root = true;
        for (int u : lay_.layers[h - 1]) {
            int cnt = 0;
            for (int w : g_.neighbors(u))
                if (in_h[w]) ++cnt;
            if (cnt != 0 && cnt != hs) { keep_root = false; break; }
        }
    }

    bf.node_of_btree.assign(bt.size(), -1);
    bf.border_size.assign(bt.size() + 16, 0);
    bf.hcomps = hcomp_groups;

    // leaves first: layer vertices enter the forest now
    for (int l = 0; l < hs; ++l) {
        int id = forest_.add_leaf(H[l]);
        bf.node_of_btree[bt.leaf_of(l)] = id;
    }
    // internal border nodes, top-down so parents map first
    std::vector<int> order;
    std::function<void(int)> topo = [&](int v) {
        order.push_back(v);
        if (!bt.is_leaf(v))
            for (int c : bt.node(v).children) topo(c);
    };
    topo(bt.root());
    for (int v : order) {
        if (bt.is_leaf(v)) continue;
        if (v == bt.root() && !keep_root) continue;
        DLabel label;
        int center = DecompForest::kNoCenter;
        if (bt.node(v).kind == PKind::Prime) {
            label = DLabel::Prime;
        } else {
            const auto& cs = bt.node(v).children;
            int x1 = H[bt.node_set(cs[0])[0]];
            int x2 = H[bt.node_set(cs[1])[0]];
            if (g_.has_edge(x1, x2)) label = DLabel::Clique;
            else {
                label = DLabel::Star;
                bool has_parent = !(v == bt.root()) && !(bt.node(v).parent == bt.root() && !keep_root);
                if (has_parent) center = DecompForest::kParentCenter;
            }
        }
        int id = forest_.add_internal(label);
        forest_.node(id).star_center = center;
        bf.node_of_btree[v] = id;
    }
    // connect and collect roots
    for (int v : order) {
        int id = bf.node_of_btree[v];
        if (id < 0) continue;
        int p = bt.is_leaf(v) ? bt.node(v).parent : bt.node(v).parent;
        int pid = (p >= 0) ? bf.node_of_btree[p] : -1;
        if (pid >= 0) forest_.link(id, pid);
    }
    std::vector<int> border_roots;
    for (int v : order) {
        int id = bf.node_of_btree[v];
        if (id >= 0 && forest_.node(id).parent < 0) border_roots.push_back(id);
    }

    // border sizes, representatives, component span
    if ((int)bf.border_size.size() < forest_.size()) bf.border_size.resize(forest_.size() + 8, 0);
    for (int v : order) {
        int id = bf.node_of_btree[v];
        if (id < 0) continue;
        auto set = bt.node_set(v);
        if ((int)bf.border_size.size() <= id) bf.border_size.resize(id + 1, 0);
        bf.border_size[id] = (int)set.size();
        forest_.node(id).rep_vertex = H[set[0]];
        int hc = hcomp_of[H[set[0]]];
        bool multi = false;
        for (int l : set)
            if (hcomp_of[H[l]] != hc) { multi = true; break; }
        forest_.node(id).multi_component = multi;
    }

    // group the forest roots lying inside one component of G[>=h]
    bf.top_of_hcomp.assign(hcomp_groups.size(), -1);
    std::vector<std::vector<int>> roots_in(hcomp_groups.size());
    std::vector<int> standalone;
    for (int id : border_roots) {
        if (forest_.node(id).multi_component) { standalone.push_back(id); continue; }
        roots_in[hcomp_of[forest_.node(id).rep_vertex]].push_back(id);
    }
    for (int i = 0; i < (int)hcomp_groups.size(); ++i) {
        if (roots_in[i].empty()) continue;
        if (roots_in[i].size() == 1) {
            bf.top_of_hcomp[i] = roots_in[i][0];
            bf.roots.push_back(roots_in[i][0]);
        } else {
            int gn = forest_.add_internal(DLabel::Unlabeled);
            forest_.node(gn).rep_vertex = forest_.node(roots_in[i][0]).rep_vertex;
            for (int rid : roots_in[i]) forest_.link(rid, gn);
            if ((int)bf.border_size.size() <= gn) bf.border_size.resize(gn + 1, 0);
            bf.border_size[gn] = 0;  // grouping node, not a border
            bf.top_of_hcomp[i] = gn;
            bf.roots.push_back(gn);
        }
    }
    for (int id : standalone) bf.roots.push_back(id);
    return bf;
}

void LayeredDecomposer::update_forest(int h, const BorderComputation& bc, const BorderForest& bf,
                                      const std::vector<int>& old_roots,
                                      const std::vector<int>& root_comp,
                                      const std::vector<char>& comp_has_witness) {
    std::vector<int> hcomp_of(g_.vertex_count(), -1);
    for (int i = 0; i < (int)bf.hcomps.size(); ++i)
        for (int v : bf.hcomps[i]) hcomp_of[v] = i;

    std::unordered_map<int, int> star_parent_of;  // border node -> added parent
    for (size_t ri = 0; ri < old_roots.size(); ++ri) {
        int r = old_roots[ri];
        int comp = root_comp[ri];
        int bnode = bf.node_of_btree[bc.container[comp]];
        bool is_border = true;
        if (bnode < 0) {
            // attachment set sits in no border node: its component of
            // G[>=h] must carry a grouping node
            int hc = hcomp_of[bc.attachments[comp][0]];
            bnode = bf.top_of_hcomp[hc];
            if (bnode < 0 || bf.border_size[bnode] != 0)
                throw std::logic_error("missing grouping node for attachment fallback");
            is_border = false;
        } else if (bf.border_size[bnode] == 0) {
            is_border = false;
        }

        bool r_leaf = forest_.node(r).leaf;
        DLabel r_label = forest_.node(r).label;
        bool r_multi = forest_.node(r).multi_component;
        bool bottom = r_leaf || r_label != DLabel::Unlabeled;
        int attach = (int)bc.attachments[comp].size();

        auto orient_if_unresolved = [&](int node) {
            if (forest_.node(node).label == DLabel::Star &&
                forest_.node(node).star_center == DecompForest::kNoCenter)
                forest_.node(node).star_center = DecompForest::kParentCenter;
        };

        if (!bottom) {
            if (forest_.node(bnode).leaf)
                throw std::logic_error("component root cannot merge into a leaf border");
            forest_.merge_into(r, bnode);
            continue;
        }
        if (!is_border) {
            forest_.link(r, bnode);
            orient_if_unresolved(r);
            continue;
        }
        RootType type = classify_root(forest_, r, bf.border_size[bnode], true, attach,
                                      attach == bf.border_size[bnode] ? comp_has_witness[comp]
                                                                      : true);
        if (type == RootType::Type2) {
            forest_.link(r, bnode);
            orient_if_unresolved(r);
            continue;
        }
        // Type3: the bottom extends by a star above the border
        int p;
        auto it = star_parent_of.find(bnode);
        if (it != star_parent_of.end()) p = it->second;
        else {
            p = forest_.add_parent_above(bnode, DLabel::Star);
            forest_.node(p).star_center = bnode;
            forest_.node(p).rep_vertex = forest_.node(bnode).rep_vertex;
            forest_.node(p).multi_component = forest_.node(bnode).multi_component;
            star_parent_of.emplace(bnode, p);
        }
        if (!r_leaf && r_label == DLabel::Star && r_multi) forest_.merge_into(r, p);
        else forest_.link(r, p);
    }

    // new roots: this layer's border/grouping tops, possibly wrapped
    roots_.clear();
    for (int id : bf.roots) {
        int top = id;
        while (forest_.node(top).parent >= 0) top = forest_.node(top).parent;
        if (forest_.node(top).alive &&
            (roots_.empty() || roots_.back() != top))
            roots_.push_back(top);
    }
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
}

void LayeredDecomposer::process_layer(int h) {
    if (h != next_h_) throw std::logic_error("layers must be processed bottom-up");
    ModuleForest m = layer_restricted_modules(g_, lay_, h);
    BorderComputation bc = compute_borders(g_, lay_, h, m);
    auto hcomp_groups = h_components(g_, lay_, h);

    // per-component data for root classification
    std::vector<int> comp_of(g_.vertex_count(), -1);
    for (int i = 0; i < (int)bc.components.size(); ++i)
        for (int v : bc.components[i]) comp_of[v] = i;
    std::vector<char> comp_witness(bc.components.size(), 0);
    for (int i = 0; i < (int)bc.components.size(); ++i) {
        int xsize = (int)bc.attachments[i].size();
        for (int w : bc.components[i]) {
            if (lay_.dist[w] != h + 1) continue;
            int cnt = 0;
            for (int u : g_.neighbors(w))
                if (lay_.dist[u] == h) ++cnt;
            if (cnt > 0 && cnt < xsize) { comp_witness[i] = 1; break; }
        }
    }
    std::vector<int> old_roots = roots_;
    std::vector<int> root_comp;
    for (int r : old_roots) root_comp.push_back(comp_of[forest_.node(r).rep_vertex]);

    BorderForest bf = build_border_forest(h, bc, hcomp_groups);
    update_forest(h, bc, bf, old_roots, root_comp, comp_witness);
    --next_h_;
}

SplitTree LayeredDecomposer::run() {
    int n = g_.vertex_count();
    if (n < 2) throw std::runtime_error("split decomposition requires at least 2 vertices");
    if (n == 2) {
        SplitTree t;
        t.add_leaf(0);
        t.add_leaf(1);
        t.add_edge(0, 1);
        return t;
    }
    for (int h = lay_.max_dist; h >= 1; --h) process_layer(h);
    if (roots_.size() != 1) throw std::logic_error("layered pass did not end in a single tree");
    int top = roots_[0];

    int rleaf = forest_.add_leaf(root_vertex_);
    forest_.link(rleaf, top);

    // resolve a deferred star center at the top via the quotient: the
    // center is the part adjacent to every other part
    if (forest_.node(top).label == DLabel::Star &&
        forest_.node(top).star_center == DecompForest::kNoCenter) {
        const auto& kids = forest_.node(top).children;
        std::vector<int> part_of(n, -1);
        for (int i = 0; i < (int)kids.size(); ++i)
            for (int v : forest_.leaf_vertices(kids[i])) part_of[v] = i;
        int k = (int)kids.size();
        std::vector<std::vector<char>> padj(k, std::vector<char>(k, 0));
        for (auto [u, v] : g_.edges()) {
            int a = part_of[u], b = part_of[v];
            if (a != b && a >= 0 && b >= 0) padj[a][b] = padj[b][a] = 1;
        }
        int center = -1;
        for (int i = 0; i < k; ++i) {
            bool all = true;
            for (int j = 0; j < k; ++j)
                if (j != i && !padj[i][j]) { all = false; break; }
            if (all) { center = i; break; }
        }
        if (center < 0) throw std::logic_error("top star without a dominating part");
        forest_.node(top).star_center = kids[center];
    }

    // forest -> unrooted tree
    SplitTree t;
    std::vector<int> id_of(forest_.size(), -1);
    for (int i = 0; i < forest_.size(); ++i) {
        const auto& nd = forest_.node(i);
        if (!nd.alive) continue;
        if (nd.leaf) id_of[i] = t.add_leaf(nd.vertex);
        else {
            if (nd.label == DLabel::Unlabeled)
                throw std::logic_error("unlabeled internal node survived the pass");
            NodeLabel l = nd.label == DLabel::Prime    ? NodeLabel::Prime
                          : nd.label == DLabel::Clique ? NodeLabel::Clique
                                                        : NodeLabel::Star;
            id_of[i] = t.add_internal(l);
        }
    }
    for (int i = 0; i < forest_.size(); ++i) {
        const auto& nd = forest_.node(i);
        if (!nd.alive || nd.parent < 0) continue;
        t.add_edge(id_of[i], id_of[nd.parent]);
    }
    for (int i = 0; i < forest_.size(); ++i) {
        const auto& nd = forest_.node(i);
        if (!nd.alive || nd.leaf || nd.label != DLabel::Star) continue;
        int c = nd.star_center;
        if (c == DecompForest::kParentCenter) {
            if (nd.parent < 0) throw std::logic_error("parent-centered star at the root");
            t.node(id_of[i]).center = id_of[nd.parent];
        } else if (c >= 0) {
            t.node(id_of[i]).center = id_of[c];
        } else {
            throw std::logic_error("unresolved star center below the top");
        }
    }
    t.contract_degree_two();
    return t;
}

SplitTree split_decomposition(const Graph& g, int root) {
    LayeredDecomposer d(g, root);
    return d.run();
}

InvariantReport verify_invariants(const DecompForest& f, const std::vector<int>& roots,
                                  const Graph& g, const Layering& lay, int h) {
    InvariantReport rep;
    int n = g.vertex_count();

    // Invariant 1: leaves are exactly the vertices at distance >= h
    {
        std::vector<char> has_leaf(n, 0);
        for (int i = 0; i < f.size(); ++i)
            if (f.node(i).alive && f.node(i).leaf) {
                if (has_leaf[f.node(i).vertex]) rep.fail("duplicate leaf");
                has_leaf[f.node(i).vertex] = 1;
            }
        for (int v = 0; v < n; ++v) {
            bool want = lay.dist[v] >= h;
            if (want != (bool)has_leaf[v])
                rep.fail("leaf set mismatch at vertex " + g.label(v));
        }
    }

    if (n <= oracle::kMaxTreeVertices) {
        auto bottoms = oracle::strong_bottoms_at_least(g, lay, h);
        auto mask_of = [&](const std::vector<int>& vs) {
            uint32_t m = 0;
            for (int v : vs) m |= 1u << v;
            return m;
        };
        std::vector<uint32_t> node_masks(f.size(), 0);
        std::vector<char> is_root(f.size(), 0);
        for (int r : roots) is_root[r] = 1;
        for (int i = 0; i < f.size(); ++i)
            if (f.node(i).alive) node_masks[i] = mask_of(f.leaf_vertices(i));

        // Invariant 2: every strong split bottom at distance >= h has a node
        for (uint32_t b : bottoms) {
            bool found = false;
            for (int i = 0; i < f.size(); ++i)
                if (f.node(i).alive && node_masks[i] == b) { found = true; break; }
            if (!found) rep.fail("strong split bottom unrepresented: mask " + std::to_string(b));
        }
        // Invariant 3: internal nodes are correctly labeled strong bottoms
        auto adj = oracle::adjacency_masks(g);
        for (int i = 0; i < f.size(); ++i) {
            const auto& nd = f.node(i);
            if (!nd.alive || nd.leaf || is_root[i]) continue;
            if (std::find(bottoms.begin(), bottoms.end(), node_masks[i]) == bottoms.end())
                rep.fail("internal node is not a strong bottom: mask " + std::to_string(node_masks[i]));
            if (nd.label == DLabel::Unlabeled) rep.fail("unlabeled internal node");
        }
        // Invariant 4: roots are components, or labeled bottoms
        auto comps = components_above(g, lay, h, /*strict=*/false);
        for (int r : roots) {
            const auto& nd = f.node(r);
            if (nd.leaf) continue;
            uint32_t m = node_masks[r];
            bool is_comp = false;
            for (auto& c : comps)
                if (mask_of(c) == m) is_comp = true;
            bool is_bottom =
                std::find(bottoms.begin(), bottoms.end(), m) != bottoms.end();
            if (nd.label == DLabel::Unlabeled && !is_comp)
                rep.fail("unlabeled root is not a component of G[>=h]");
            if (nd.label != DLabel::Unlabeled && !is_bottom)
                rep.fail("labeled root is not a strong split bottom");
        }
    }
    return rep;
}

} // namespace splitdec

#include "splitdec/io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace splitdec {

Graph parse_edge_list(const std::string& text) {
    std::map<std::string, int> index;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto intern = [&](const std::string& tok) {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        int id = (int)labels.size();
        index.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;          // blank line
        if (a[0] == '#') continue;         // comment
        if (!(ls >> b) || (ls >> extra))
            throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                     ": expected two vertex tokens");
        int u = intern(a), v = intern(b);
        if (u == v)
            throw std::runtime_error("self-loop at line " + std::to_string(lineno) +
                                     " on vertex '" + a + "'");
        edges.emplace_back(u, v);
    }
    if (labels.empty()) throw std::runtime_error("parse error: empty graph");
    int n = (int)labels.size();
    return Graph(n, std::move(edges), std::move(labels));
}

Graph load_graph(const std::string& text) {
    Graph g = parse_edge_list(text);
    auto [a, b] = g.disconnected_witness();
    if (a >= 0)
        throw std::runtime_error("disconnected graph: no path between '" + g.label(a) +
                                 "' and '" + g.label(b) + "'");
    return g;
}

namespace {

// Nodes are renumbered in a BFS from the presentational root (the neighbor
// of vertex 0's leaf) so equal trees serialize identically.
struct JsonOrder {
    std::vector<int> order;  // new id -> old id
    std::vector<int> remap;  // old id -> new id
    int root_old = -1;
};

JsonOrder json_order(const SplitTree& t) {
    JsonOrder jo;
    jo.remap.assign(t.size(), -1);
    int start = t.leaf_of_vertex(0);
    int root = t.node(start).adj.empty() ? start : t.node(start).adj[0];
    jo.root_old = root;

    std::vector<int> minv(t.size(), -1);
    std::function<int(int, int)> mins = [&](int u, int parent) -> int {
        if (t.node(u).leaf) return minv[u] = t.node(u).vertex;
        int best = INT32_MAX;
        for (int w : t.node(u).adj)
            if (w != parent) best = std::min(best, mins(w, u));
        return minv[u] = best;
    };
    if (root != start) { mins(root, start); minv[start] = 0; }
    else minv[start] = 0;

    std::function<void(int, int)> visit = [&](int u, int parent) {
        jo.remap[u] = (int)jo.order.size();
        jo.order.push_back(u);
        std::vector<int> kids;
        for (int w : t.node(u).adj)
            if (w != parent) kids.push_back(w);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) { return minv[a] < minv[b]; });
        for (int k : kids) visit(k, u);
    };
    visit(root, -1);
    if (root != start) visit(start, root);
    return jo;
}

const char* kind_name(const SplitTree::Node& n) {
    if (n.leaf) return "leaf";
    switch (n.label) {
        case NodeLabel::Prime: return "prime";
        case NodeLabel::Clique: return "clique";
        default: return "star";
    }
}

} // namespace

std::string to_json(const SplitTree& t, const std::vector<std::string>& labels) {
    nlohmann::ordered_json j;
    JsonOrder jo = json_order(t);
    j["root"] = jo.remap[jo.root_old];
    auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
    for (int id = 0; id < (int)jo.order.size(); ++id) {
        const auto& n = t.node(jo.order[id]);
        nlohmann::ordered_json jn;
        jn["id"] = id;
        jn["kind"] = kind_name(n);
        if (n.leaf) jn["vertex"] = labels[n.vertex];
        if (!n.leaf && n.label == NodeLabel::Star && n.center >= 0)
            jn["center"] = jo.remap[n.center];
        nodes.push_back(std::move(jn));
    }
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (int id = 0; id < (int)jo.order.size(); ++id) {
        const auto& n = t.node(jo.order[id]);
        for (int w : n.adj)
            if (jo.remap[w] > id) edges.push_back({id, jo.remap[w]});
    }
    return j.dump(2) + "\n";
}

SplitTree from_json(const std::string& text, std::vector<std::string>* labels_out) {
    auto j = nlohmann::json::parse(text);
    SplitTree t;
    std::vector<std::string> labels;
    std::map<std::string, int> seen;
    std::vector<int> centers;
    for (const auto& jn : j.at("nodes")) {
        std::string kind = jn.at("kind");
        if (kind == "leaf") {
            std::string lab = jn.at("vertex");
            int v;
            auto it = seen.find(lab);
            if (it != seen.end()) v = it->second;
            else {
                v = (int)labels.size();
                seen.emplace(lab, v);
                labels.push_back(lab);
            }
            t.add_leaf(v);
            centers.push_back(-1);
        } else {
            NodeLabel l = kind == "prime"    ? NodeLabel::Prime
                          : kind == "clique" ? NodeLabel::Clique
                                             : NodeLabel::Star;
            t.add_internal(l);
            centers.push_back(jn.contains("center") ? (int)jn.at("center") : -1);
        }
    }
    for (int i = 0; i < (int)centers.size(); ++i)
        if (centers[i] >= 0) t.node(i).center = centers[i];
    for (const auto& je : j.at("edges")) t.add_edge(je.at(0), je.at(1));
    // JSON leaves carry labels in node order; re-index so vertex i is the
    // i-th distinct label, matching load order of the original graph.
    if (labels_out) *labels_out = labels;
    return t;
}

std::string to_dot(const SplitTree& t, const std::vector<std::string>& labels) {
    std::string out = "graph splittree {\n";
    JsonOrder jo = json_order(t);
    for (int id = 0; id < (int)jo.order.size(); ++id) {
        const auto& n = t.node(jo.order[id]);
        if (n.leaf)
            out += "  n" + std::to_string(id) + " [label=\"" + labels[n.vertex] + "\"];\n";
        else
            out += "  n" + std::to_string(id) + " [shape=box, label=\"" +
                   std::string(1, label_char(n.label)) + "\"];\n";
    }
    for (int id = 0; id < (int)jo.order.size(); ++id) {
        const auto& n = t.node(jo.order[id]);
        for (int w : n.adj) {
            int wid = jo.remap[w];
            if (wid < id) continue;
            std::string attr;
            bool fwd = !n.leaf && n.label == NodeLabel::Star && n.center == w;
            const auto& m = t.node(w);
            bool bwd = !m.leaf && m.label == NodeLabel::Star && m.center == jo.order[id];
            if (fwd && bwd) attr = " [dir=both]";
            else if (fwd) attr = " [dir=forward]";
            else if (bwd) attr = " [dir=back]";
            out += "  n" + std::to_string(id) + " -- n" + std::to_string(wid) + attr + ";\n";
        }
    }
    out += "}\n";
    return out;
}

} // namespace splitdec

#include "flatgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace flatgraph {

AbstractGraph AbstractGraph::make(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) throw Error("negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw LoopError("loop edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    return AbstractGraph{n, std::move(edge_list)};
}

bool AbstractGraph::is_simple() const {
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) return false;
    return true;
}

bool AbstractGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int AbstractGraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

std::vector<std::vector<int>> AbstractGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

int AbstractGraph::component_count() const {
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = vertex_count;
    for (const auto& [u, v] : edges) {
        int a = find(u), b = find(v);
        if (a != b) { parent[a] = b; --comps; }
    }
    return comps;
}

bool is_three_connected(const AbstractGraph& g) {
    if (g.vertex_count < 4) return false;
    auto adj = g.adjacency();
    auto connected_without = [&](int skip1, int skip2) {
        int start = -1;
        for (int v = 0; v < g.vertex_count; ++v)
            if (v != skip1 && v != skip2) { start = v; break; }
        std::vector<char> seen(g.vertex_count, 0);
        std::vector<int> stack = {start};
        seen[start] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (w == skip1 || w == skip2 || seen[w]) continue;
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
        return count == g.vertex_count - (skip1 >= 0) - (skip2 >= 0);
    };
    if (!connected_without(-1, -1)) return false;
    for (int a = 0; a < g.vertex_count; ++a)
        for (int b = a; b < g.vertex_count; ++b)
            if (!connected_without(a, b == a ? -1 : b)) return false;
    return true;
}

namespace {

bool iso_extend(const AbstractGraph& a, const AbstractGraph& b,
                const std::vector<std::multiset<int>>& adj_a,
                const std::vector<std::multiset<int>>& adj_b,
                std::vector<int>& map_ab, std::vector<int>& map_ba, int next) {
    if (next == a.vertex_count) return true;
    for (int cand = 0; cand < b.vertex_count; ++cand) {
        if (map_ba[cand] != -1) continue;
        if (adj_a[next].size() != adj_b[cand].size()) continue;
        // every already-mapped neighbor must match with equal multiplicity
        bool ok = true;
        std::multiset<int> need;
        for (int w : adj_a[next])
            if (map_ab[w] != -1) need.insert(map_ab[w]);
        for (int w : need)
            if (adj_b[cand].count(w) < need.count(w)) { ok = false; break; }
        if (ok) {
            // and conversely no mapped b-neighbor may be unaccounted for
            std::multiset<int> have;
            for (int w : adj_b[cand])
                if (map_ba[w] != -1 && map_ba[w] < next) have.insert(w);
            if (have != need) ok = false;
        }
        if (!ok) continue;
        map_ab[next] = cand;
        map_ba[cand] = next;
        if (iso_extend(a, b, adj_a, adj_b, map_ab, map_ba, next + 1)) return true;
        map_ab[next] = -1;
        map_ba[cand] = -1;
    }
    return false;
}

} // namespace

bool isomorphic(const AbstractGraph& a, const AbstractGraph& b) {
    if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
    std::vector<std::multiset<int>> adj_a(a.vertex_count), adj_b(b.vertex_count);
    for (const auto& [u, v] : a.edges) { adj_a[u].insert(v); adj_a[v].insert(u); }
    for (const auto& [u, v] : b.edges) { adj_b[u].insert(v); adj_b[v].insert(u); }
    std::vector<size_t> deg_a, deg_b;
    for (const auto& s : adj_a) deg_a.push_back(s.size());
    for (const auto& s : adj_b) deg_b.push_back(s.size());
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) return false;
    std::vector<int> map_ab(a.vertex_count, -1), map_ba(b.vertex_count, -1);
    return iso_extend(a, b, adj_a, adj_b, map_ab, map_ba, 0);
}

AbstractGraph contract_edges(const AbstractGraph& g,
                             const std::vector<std::pair<int, int>>& sequence) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    // current adjacency between class representatives
    std::set<std::pair<int, int>> cur;
    for (const auto& [u, v] : g.edges)
        cur.insert(std::minmax(u, v));

    for (const auto& [u, v] : sequence) {
        if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
            throw MissingEdgeError("contraction endpoint out of range");
        int a = find(u), b = find(v);
        if (a == b || !cur.count(std::minmax(a, b)))
            throw MissingEdgeError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                   "} absent at its contraction step");
        int keep = std::min(a, b), gone = std::max(a, b);
        parent[gone] = keep;
        std::set<std::pair<int, int>> next;
        for (auto [x, y] : cur) {
            if (x == gone) x = keep;
            if (y == gone) y = keep;
            if (x != y) next.insert(std::minmax(x, y));
        }
        cur = std::move(next);
    }

    // compact surviving labels
    std::vector<int> label(g.vertex_count, -1);
    int n = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (find(v) == v) label[v] = n++;
    std::vector<std::pair<int, int>> out;
    for (const auto& [x, y] : cur)
        out.emplace_back(label[x], label[y]);
    return AbstractGraph::make(n, std::move(out));
}

bool contains_subdivision(const AbstractGraph& g, const AbstractGraph& pattern,
                          const SubdivisionWitness& w) {
    if (static_cast<int>(w.branch.size()) != pattern.vertex_count) return false;
    if (w.paths.size() != pattern.edges.size()) return false;

    std::set<int> branch_set;
    for (int b : w.branch) {
        if (b < 0 || b >= g.vertex_count) return false;
        if (!branch_set.insert(b).second) return false; // injective
    }

    std::set<int> interior_used;
    for (size_t e = 0; e < pattern.edges.size(); ++e) {
        const auto& path = w.paths[e];
        auto [pu, pv] = pattern.edges[e];
        if (path.size() < 2) return false;
        bool fwd = path.front() == w.branch[pu] && path.back() == w.branch[pv];
        bool rev = path.front() == w.branch[pv] && path.back() == w.branch[pu];
        if (!fwd && !rev) return false;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1])) return false;
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            int x = path[i];
            if (x < 0 || x >= g.vertex_count) return false;
            if (branch_set.count(x)) return false;
            if (!interior_used.insert(x).second) return false; // internally disjoint
        }
    }
    return true;
}

} // namespace flatgraph

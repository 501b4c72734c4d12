#pragma once

#include "flatgraph/plane_map.hpp"
#include "flatgraph/wbw.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace flatgraph::testing {

inline PlaneMap cycle_map(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) {
        int prev = (i + n - 1) % n;
        // dart of edge i at vertex i is 2i; dart of edge prev at vertex i is 2*prev+1
        rot[i] = {2 * i, 2 * prev + 1};
    }
    return build_plane_map(n, edges, rot);
}

inline PlaneMap path_map(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0) rot[i].push_back(2 * (i - 1) + 1);
        if (i + 1 < n) rot[i].push_back(2 * i);
    }
    return build_plane_map(n, edges, rot);
}

/// Star K_{1,k}: center 0, leaves 1..k in rotation order.
inline PlaneMap star_map(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(0, i + 1);
    std::vector<std::vector<int>> rot(k + 1);
    for (int i = 0; i < k; ++i) {
        rot[0].push_back(2 * i);
        rot[i + 1] = {2 * i + 1};
    }
    return build_plane_map(k + 1, edges, rot);
}

inline AbstractGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return AbstractGraph::make(n, edges);
}

inline AbstractGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return AbstractGraph::make(a + b, edges);
}

inline AbstractGraph octahedron_graph() {
    // antipodal pairs (0,1), (2,3), (4,5)
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(i / 2 == j / 2)) edges.emplace_back(i, j);
    return AbstractGraph::make(6, edges);
}

inline AbstractGraph icosahedron_graph() {
    static const int e[30][2] = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},  {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 1},
        {1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8},  {3, 9},  {4, 9},  {4, 10}, {5, 10}, {5, 6},
        {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 6}, {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11}};
    std::vector<std::pair<int, int>> edges;
    for (auto& p : e) edges.emplace_back(p[0], p[1]);
    return AbstractGraph::make(12, edges);
}

/// Exhaustive wbw oracle: DFS over all distinct-edge sequences whose
/// consecutive members are attached, pruned at max_len. Independent of the
/// BFS implementation.
inline std::optional<int> wbw_oracle(const PlaneMap& m, int x, int y, int max_len = 12) {
    auto incident = [&](int e, int v) {
        return m.edges[e].first == v || m.edges[e].second == v;
    };
    int best = -1;
    std::vector<int> walk;
    std::vector<bool> used(m.edge_count(), false);
    auto dfs = [&](auto&& self, int last) -> void {
        int len = static_cast<int>(walk.size());
        if (best != -1 && len >= best) return;
        if (len > max_len) return;
        if (len > 0 && incident(last, y)) {
            best = len;
            return;
        }
        for (int f = 0; f < m.edge_count(); ++f) {
            if (used[f]) continue;
            if (len == 0 ? !incident(f, x) : !attached(m, last, f)) continue;
            used[f] = true;
            walk.push_back(f);
            self(self, f);
            walk.pop_back();
            used[f] = false;
        }
    };
    dfs(dfs, -1);
    if (best == -1) return std::nullopt;
    return best;
}

/// Deterministic 64-bit generator for test drivers.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

} // namespace flatgraph::testing

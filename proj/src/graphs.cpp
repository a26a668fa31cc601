#include "cspsieve/graphs.hpp"

#include <algorithm>

namespace cspsieve {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
             std::optional<FamilyTag> family)
    : n_(n), adj_(static_cast<size_t>(std::max(n, 0))), family_(std::move(family)) {
    if (n < 0) throw InvalidParams("Graph: negative vertex count");
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidParams("Graph: edge endpoint out of range");
        if (u == v) throw InvalidParams("Graph: self-loop");
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        n_edges_ += static_cast<long long>(nbrs.size());
    }
    n_edges_ /= 2;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw InvalidParams("Graph: vertex id out of range");
    return adj_[static_cast<size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = neighbors(u);
    if (v < 0 || v >= n_) throw InvalidParams("Graph: vertex id out of range");
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_family(FamilyTag tag) const {
    Graph g = *this;
    g.family_ = std::move(tag);
    return g;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

Graph cycle_power(int n, int r) {
    if (n < 1) throw InvalidParams("cycle_power: n must be positive");
    if (r < 0) throw InvalidParams("cycle_power: r must be nonnegative");
    if (2 * r >= n) throw InvalidParams("cycle_power: requires 2r < n");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int l = 1; l <= r; ++l) edges.emplace_back(i, (i + l) % n);
    return Graph(n, edges, FamilyTag{"cycle-power", {{"n", n}, {"r", r}}});
}

Graph path_power(int n, int r) {
    if (n < 0) throw InvalidParams("path_power: n must be nonnegative");
    if (r < 0) throw InvalidParams("path_power: r must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= r && i + j < n; ++j) edges.emplace_back(i, i + j);
    return Graph(n, edges, FamilyTag{"path-power", {{"n", n}, {"r", r}}});
}

Graph whisker(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, v + n);
    FamilyTag tag{"whisker", {{"core", n}}};
    if (g.family()) {
        tag.name = "whisker(" + g.family()->name + ")";
        for (const auto& [key, val] : g.family()->params) tag.params.emplace(key, val);
    }
    return Graph(2 * n, edges, std::move(tag));
}

Graph gear(int n) {
    if (n < 2) throw InvalidParams("gear: n must be at least 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 2 * n; ++i) edges.emplace_back(i, (i + 1) % (2 * n));
    for (int i = 0; i < n; ++i) edges.emplace_back(2 * n, 2 * i);
    return Graph(2 * n + 1, edges, FamilyTag{"gear", {{"n", n}}});
}

Graph helm(int n) {
    if (n < 3) throw InvalidParams("helm: n must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n); // cycle
        edges.emplace_back(i, i + n);       // pendant
        edges.emplace_back(i, 2 * n);       // center spoke
    }
    return Graph(2 * n + 1, edges, FamilyTag{"helm", {{"n", n}}});
}

Graph book(int n) {
    if (n < 1) throw InvalidParams("book: n must be positive");
    const auto id = [n](int i, int sign) { return sign > 0 ? i : n + 1 + i; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(id(i, +1), id(n, +1));
        edges.emplace_back(id(i, -1), id(n, -1));
        edges.emplace_back(id(i, +1), id(i, -1));
    }
    edges.emplace_back(id(n, +1), id(n, -1)); // spine
    return Graph(2 * n + 2, edges, FamilyTag{"book", {{"n", n}}});
}

namespace {

DeletionResult induced_subgraph(const Graph& g, const std::vector<char>& keep) {
    const int n = g.n_vertices();
    DeletionResult out;
    out.old_to_new.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (!keep[static_cast<size_t>(v)]) continue;
        out.old_to_new[static_cast<size_t>(v)] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        if (keep[static_cast<size_t>(u)] && keep[static_cast<size_t>(v)])
            edges.emplace_back(out.old_to_new[static_cast<size_t>(u)],
                               out.old_to_new[static_cast<size_t>(v)]);
    out.graph = Graph(static_cast<int>(out.new_to_old.size()), edges);
    return out;
}

} // namespace

DeletionResult delete_vertex(const Graph& g, int x) {
    if (x < 0 || x >= g.n_vertices()) throw InvalidParams("delete_vertex: x out of range");
    std::vector<char> keep(static_cast<size_t>(g.n_vertices()), 1);
    keep[static_cast<size_t>(x)] = 0;
    return induced_subgraph(g, keep);
}

DeletionResult delete_closed_neighborhood(const Graph& g, int x) {
    if (x < 0 || x >= g.n_vertices())
        throw InvalidParams("delete_closed_neighborhood: x out of range");
    std::vector<char> keep(static_cast<size_t>(g.n_vertices()), 1);
    keep[static_cast<size_t>(x)] = 0;
    for (int v : g.neighbors(x)) keep[static_cast<size_t>(v)] = 0;
    return induced_subgraph(g, keep);
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
    if (perm.size() != g.n_vertices()) return false;
    for (int u = 0; u < g.n_vertices(); ++u) {
        std::vector<int> mapped;
        mapped.reserve(g.neighbors(u).size());
        for (int v : g.neighbors(u)) mapped.push_back(perm(v));
        std::sort(mapped.begin(), mapped.end());
        if (mapped != g.neighbors(perm(u))) return false;
    }
    return true;
}

QuotientResult quotient(const Graph& g, const Permutation& perm) {
    if (!is_automorphism(g, perm))
        throw NotAutomorphism("quotient: permutation is not an automorphism");

    QuotientResult out;
    out.cycles = perm.cycles();
    const int m = static_cast<int>(out.cycles.size());
    std::vector<int> cycle_of(static_cast<size_t>(g.n_vertices()));
    for (int c = 0; c < m; ++c) {
        out.min_labels.push_back(out.cycles[static_cast<size_t>(c)].front());
        for (int v : out.cycles[static_cast<size_t>(c)]) cycle_of[static_cast<size_t>(v)] = c;
    }

    out.has_inner_edge.assign(static_cast<size_t>(m), 0);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        int cu = cycle_of[static_cast<size_t>(u)];
        int cv = cycle_of[static_cast<size_t>(v)];
        if (cu == cv)
            out.has_inner_edge[static_cast<size_t>(cu)] = 1;
        else
            edges.emplace_back(cu, cv);
    }
    out.graph = Graph(m, edges);
    return out;
}

} // namespace cspsieve

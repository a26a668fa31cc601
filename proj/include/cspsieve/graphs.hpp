#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cspsieve/errors.hpp"
#include "cspsieve/perm.hpp"

namespace cspsieve {

/// Strictly increasing vertex ids; the representation of an independent set.
using VertexSet = std::vector<int>;

/// Names the construction a graph came from, e.g. {"gear", {{"n", 3}}}.
/// Whiskerings record the original vertex count under key "core".
struct FamilyTag {
    std::string name;
    std::map<std::string, long long> params;
};

/// Finite simple graph: vertex ids 0..n-1, sorted neighbor lists. Symmetry
/// and simplicity are enforced at construction; instances are immutable.
class Graph {
  public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
          std::optional<FamilyTag> family = std::nullopt);

    int n_vertices() const { return n_; }
    long long n_edges() const { return n_edges_; }
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const; // u < v, sorted

    const std::optional<FamilyTag>& family() const { return family_; }
    Graph with_family(FamilyTag tag) const;

    // structural equality; family tags do not participate
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    int n_ = 0;
    long long n_edges_ = 0;
    std::vector<std::vector<int>> adj_;
    std::optional<FamilyTag> family_;
};

// no two members adjacent
bool is_independent(const Graph& g, const VertexSet& s);

// C_n^r: vertices 0..n-1, i ~ j iff circular distance in [1, r]; r = 0 is
// edgeless. Requires 2r < n so all edges are simple.
Graph cycle_power(int n, int r);

// P_n^r: i ~ j iff 1 <= |i - j| <= r. n = 0 gives the empty graph.
Graph path_power(int n, int r);

// w(G): pendant vertex v + n attached to each vertex v of g.
Graph whisker(const Graph& g);

// Gear: outer cycle 0..2n-1 plus hub 2n adjacent to the even outer vertices.
Graph gear(int n);

// Helm: whiskered n-cycle (cycle 0..n-1, pendants n..2n-1) plus center 2n
// adjacent to the cycle vertices.
Graph helm(int n);

// Book: pages (i,+1) -> i and (i,-1) -> n+1+i for i in 0..n; page edges to
// the same-sign spine vertex, rung edges (i,+1) ~ (i,-1) for i < n, and the
// spine edge (n,+1) ~ (n,-1).
Graph book(int n);

/// Induced subgraph with the id compression that produced it.
struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new; // -1 for removed vertices
    std::vector<int> new_to_old;
};

DeletionResult delete_vertex(const Graph& g, int x);
DeletionResult delete_closed_neighborhood(const Graph& g, int x);

bool is_automorphism(const Graph& g, const Permutation& perm);

/// Quotient by an automorphism: one vertex per cycle of the permutation,
/// ordered by minimum element. An edge of g inside a single cycle cannot be
/// drawn in a simple graph; such cycles are flagged instead (their vertex can
/// never sit in an independent set of g).
struct QuotientResult {
    Graph graph;
    std::vector<std::vector<int>> cycles; // min-first, sorted by minima
    std::vector<int> min_labels;
    std::vector<char> has_inner_edge;
};

QuotientResult quotient(const Graph& g, const Permutation& perm);

} // namespace cspsieve

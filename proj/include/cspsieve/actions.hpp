#pragma once

#include <vector>

#include "cspsieve/graphs.hpp"
#include "cspsieve/perm.hpp"

namespace cspsieve {

/// A cyclic group acting on a graph, held as its generator. The generator is
/// checked to be an automorphism at construction; the order is the lcm of its
/// cycle lengths. Immutable once built.
class CyclicAction {
  public:
    CyclicAction(Graph graph, Permutation generator);

    const Graph& graph() const { return graph_; }
    const Permutation& generator() const { return generator_; }
    long long order() const { return order_; }

    // generator composed t times (t taken mod order, negatives allowed)
    Permutation element(long long t) const { return generator_.power(t); }

    // only the identity fixes a vertex, i.e. every generator cycle has full
    // length
    bool is_free() const;

  private:
    Graph graph_;
    Permutation generator_;
    long long order_;
};

// i -> i+1 mod n on a graph with vertex set 0..n-1.
CyclicAction rotation_action(int n, Graph graph);

// Extends an action on g to w(g): v -> gen(v), v+n -> gen(v)+n.
CyclicAction whisker_extend(const CyclicAction& base, Graph whiskered);

// Index-2 rotation subgroup on gear(n): i -> i+2 mod 2n, hub fixed; order n.
CyclicAction gear_action(int n, Graph g);

// Rotation on helm(n): cycle and pendants rotate together, center fixed.
CyclicAction helm_action(int n, Graph g);

// Page rotation on book(n): i -> i+1 mod n on both signs, spine fixed.
CyclicAction book_action(int n, Graph g);

// All independent k-sets S with perm(S) = S, lexicographically sorted.
// Composes whole orbits of perm rather than filtering all of I_k.
std::vector<VertexSet> fixed_independent_sets(const Graph& g, const Permutation& perm, int k);

// |I_k(g)^perm| via the quotient graph, for perm = element(t) generating a
// freely acting subgroup of order d: |I_{k/d}(g/perm)| when d | k, else 0.
// Quotient vertices whose cycle carries an inner edge are excluded (they can
// never lie inside an independent set).
long long fixed_count_via_quotient(const Graph& g, const CyclicAction& action, long long t,
                                   int k);

} // namespace cspsieve

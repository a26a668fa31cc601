#pragma once

#include <map>
#include <vector>

#include "cspsieve/graphs.hpp"
#include "cspsieve/qpoly.hpp"

namespace cspsieve {

/// Parameters of the shifted-sum statistic: -(r+1)*C(k,2) + sum of members.
struct StatParams {
    long long r = 0;
    int k = 0;
};

/// All independent k-sets of a graph, lexicographically sorted.
struct IndepFamily {
    Graph graph;
    int k = 0;
    std::vector<VertexSet> sets;
};

// Backtracking over ascending vertex ids with neighbor pruning; bitmask fast
// path for n <= 64. k = 0 yields the single empty set.
IndepFamily enumerate_independent(const Graph& g, int k);

// May be negative for arbitrary sets; throws SizeMismatch when |a| != p.k.
long long ssum(const VertexSet& a, const StatParams& p);

// sum over the family of q^ssum; a Laurent polynomial in general.
IntLaurentPoly gen_fun(const std::vector<VertexSet>& sets, const StatParams& p);
IntLaurentPoly gen_fun(const IndepFamily& fam, const StatParams& p);

// Partition of a family over a whiskered graph by j = |A intersect core|,
// for j = 0..k. Requires the graph's family tag to record "core".
std::map<int, std::vector<VertexSet>> split_by_core(const IndepFamily& fam);

} // namespace cspsieve

#include "cspsieve/indep.hpp"

#include <cstdint>

namespace cspsieve {

namespace {

void enumerate_bitmask(const Graph& g, int k, std::vector<VertexSet>& out) {
    const int n = g.n_vertices();
    std::vector<std::uint64_t> nb(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nb[static_cast<size_t>(v)] |= std::uint64_t(1) << u;

    VertexSet cur;
    cur.reserve(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int start, int remaining, std::uint64_t banned) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - remaining; ++v) {
            if ((banned >> v) & 1) continue;
            cur.push_back(v);
            self(self, v + 1, remaining - 1, banned | nb[static_cast<size_t>(v)]);
            cur.pop_back();
        }
    };
    rec(rec, 0, k, 0);
}

void enumerate_generic(const Graph& g, int k, std::vector<VertexSet>& out) {
    const int n = g.n_vertices();
    std::vector<int> blocked(static_cast<size_t>(n), 0);
    VertexSet cur;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - remaining; ++v) {
            if (blocked[static_cast<size_t>(v)]) continue;
            cur.push_back(v);
            for (int u : g.neighbors(v)) ++blocked[static_cast<size_t>(u)];
            self(self, v + 1, remaining - 1);
            for (int u : g.neighbors(v)) --blocked[static_cast<size_t>(u)];
            cur.pop_back();
        }
    };
    rec(rec, 0, k);
}

} // namespace

IndepFamily enumerate_independent(const Graph& g, int k) {
    if (k < 0 || k > g.n_vertices())
        throw InvalidParams("enumerate_independent: k out of range");
    IndepFamily fam{g, k, {}};
    if (g.n_vertices() <= 64)
        enumerate_bitmask(g, k, fam.sets);
    else
        enumerate_generic(g, k, fam.sets);
    return fam;
}

long long ssum(const VertexSet& a, const StatParams& p) {
    if (static_cast<int>(a.size()) != p.k)
        throw SizeMismatch("ssum: set size differs from k");
    long long s = -(p.r + 1) * (static_cast<long long>(p.k) * (p.k - 1) / 2);
    for (int v : a) s += v;
    return s;
}

IntLaurentPoly gen_fun(const std::vector<VertexSet>& sets, const StatParams& p) {
    std::vector<std::pair<int, Int>> terms;
    terms.reserve(sets.size());
    for (const auto& a : sets) terms.emplace_back(static_cast<int>(ssum(a, p)), Int(1));
    return IntLaurentPoly::from_terms(terms);
}

IntLaurentPoly gen_fun(const IndepFamily& fam, const StatParams& p) {
    return gen_fun(fam.sets, p);
}

std::map<int, std::vector<VertexSet>> split_by_core(const IndepFamily& fam) {
    const auto& tag = fam.graph.family();
    if (!tag || !tag->params.count("core"))
        throw InvalidParams("split_by_core: graph does not record a whisker core");
    const long long core = tag->params.at("core");

    std::map<int, std::vector<VertexSet>> parts;
    for (int j = 0; j <= fam.k; ++j) parts[j];
    for (const auto& a : fam.sets) {
        int j = 0;
        for (int v : a)
            if (v < core) ++j;
        parts[j].push_back(a);
    }
    return parts;
}

} // namespace cspsieve

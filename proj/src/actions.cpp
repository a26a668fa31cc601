#include "cspsieve/actions.hpp"

#include <algorithm>

#include "cspsieve/indep.hpp"

namespace cspsieve {

CyclicAction::CyclicAction(Graph graph, Permutation generator)
    : graph_(std::move(graph)), generator_(std::move(generator)), order_(0) {
    if (generator_.size() != graph_.n_vertices())
        throw InvalidParams("CyclicAction: permutation size != vertex count");
    if (!is_automorphism(graph_, generator_))
        throw NotAutomorphism("CyclicAction: generator does not preserve adjacency");
    order_ = generator_.order();
}

bool CyclicAction::is_free() const {
    for (const auto& cyc : generator_.cycles())
        if (static_cast<long long>(cyc.size()) != order_) return false;
    return true;
}

CyclicAction rotation_action(int n, Graph graph) {
    if (graph.n_vertices() != n)
        throw InvalidParams("rotation_action: graph does not have n vertices");
    std::vector<int> image(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = (i + 1) % n;
    return CyclicAction(std::move(graph), Permutation(std::move(image)));
}

CyclicAction whisker_extend(const CyclicAction& base, Graph whiskered) {
    const int n = base.graph().n_vertices();
    if (whiskered.n_vertices() != 2 * n || !(whiskered == whisker(base.graph())))
        throw InvalidParams("whisker_extend: graph is not the whiskering of the base");
    std::vector<int> image(static_cast<size_t>(2 * n));
    for (int v = 0; v < n; ++v) {
        image[static_cast<size_t>(v)] = base.generator()(v);
        image[static_cast<size_t>(v + n)] = base.generator()(v) + n;
    }
    return CyclicAction(std::move(whiskered), Permutation(std::move(image)));
}

CyclicAction gear_action(int n, Graph g) {
    if (n < 2 || !(g == gear(n))) throw InvalidParams("gear_action: graph is not gear(n)");
    std::vector<int> image(static_cast<size_t>(2 * n + 1));
    for (int i = 0; i < 2 * n; ++i) image[static_cast<size_t>(i)] = (i + 2) % (2 * n);
    image[static_cast<size_t>(2 * n)] = 2 * n; // hub fixed
    return CyclicAction(std::move(g), Permutation(std::move(image)));
}

CyclicAction helm_action(int n, Graph g) {
    if (n < 3 || !(g == helm(n))) throw InvalidParams("helm_action: graph is not helm(n)");
    std::vector<int> image(static_cast<size_t>(2 * n + 1));
    for (int i = 0; i < n; ++i) {
        image[static_cast<size_t>(i)] = (i + 1) % n;
        image[static_cast<size_t>(n + i)] = n + (i + 1) % n;
    }
    image[static_cast<size_t>(2 * n)] = 2 * n; // center fixed
    return CyclicAction(std::move(g), Permutation(std::move(image)));
}

CyclicAction book_action(int n, Graph g) {
    if (n < 1 || !(g == book(n))) throw InvalidParams("book_action: graph is not book(n)");
    std::vector<int> image(static_cast<size_t>(2 * n + 2));
    for (int i = 0; i < n; ++i) {
        image[static_cast<size_t>(i)] = (i + 1) % n;
        image[static_cast<size_t>(n + 1 + i)] = n + 1 + (i + 1) % n;
    }
    image[static_cast<size_t>(n)] = n; // spine fixed pointwise
    image[static_cast<size_t>(2 * n + 1)] = 2 * n + 1;
    return CyclicAction(std::move(g), Permutation(std::move(image)));
}

std::vector<VertexSet> fixed_independent_sets(const Graph& g, const Permutation& perm, int k) {
    if (!is_automorphism(g, perm))
        throw NotAutomorphism("fixed_independent_sets: not an automorphism");
    if (k < 0) throw InvalidParams("fixed_independent_sets: k must be nonnegative");

    // A fixed set is a union of whole orbits of perm.
    const auto orbits = perm.cycles();
    const int m = static_cast<int>(orbits.size());
    std::vector<int> orbit_of(static_cast<size_t>(g.n_vertices()));
    for (int c = 0; c < m; ++c)
        for (int v : orbits[static_cast<size_t>(c)]) orbit_of[static_cast<size_t>(v)] = c;

    std::vector<char> usable(static_cast<size_t>(m), 1);
    std::vector<std::vector<char>> conflict(static_cast<size_t>(m),
                                            std::vector<char>(static_cast<size_t>(m), 0));
    for (const auto& [u, v] : g.edges()) {
        int cu = orbit_of[static_cast<size_t>(u)];
        int cv = orbit_of[static_cast<size_t>(v)];
        if (cu == cv)
            usable[static_cast<size_t>(cu)] = 0;
        else
            conflict[static_cast<size_t>(cu)][static_cast<size_t>(cv)] =
                conflict[static_cast<size_t>(cv)][static_cast<size_t>(cu)] = 1;
    }

    // suffix[i] = total size of orbits i..m-1, for pruning
    std::vector<int> suffix(static_cast<size_t>(m) + 1, 0);
    for (int i = m; i-- > 0;)
        suffix[static_cast<size_t>(i)] =
            suffix[static_cast<size_t>(i) + 1] + static_cast<int>(orbits[static_cast<size_t>(i)].size());

    std::vector<VertexSet> out;
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int idx, int remaining) -> void {
        if (remaining == 0) {
            VertexSet s;
            for (int c : chosen)
                s.insert(s.end(), orbits[static_cast<size_t>(c)].begin(),
                         orbits[static_cast<size_t>(c)].end());
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        if (idx == m || suffix[static_cast<size_t>(idx)] < remaining) return;
        const int sz = static_cast<int>(orbits[static_cast<size_t>(idx)].size());
        if (usable[static_cast<size_t>(idx)] && sz <= remaining) {
            bool ok = true;
            for (int c : chosen)
                if (conflict[static_cast<size_t>(c)][static_cast<size_t>(idx)]) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen.push_back(idx);
                self(self, idx + 1, remaining - sz);
                chosen.pop_back();
            }
        }
        self(self, idx + 1, remaining);
    };
    dfs(dfs, 0, k);

    std::sort(out.begin(), out.end());
    return out;
}

long long fixed_count_via_quotient(const Graph& g, const CyclicAction& action, long long t,
                                   int k) {
    const Permutation perm = action.element(t);
    const long long d = perm.order();
    for (const auto& cyc : perm.cycles())
        if (static_cast<long long>(cyc.size()) != d)
            throw NotFreeAction("fixed_count_via_quotient: subgroup has a fixed vertex");

    if (k < 0 || k % d != 0) return 0;

    QuotientResult qr = quotient(g, perm);
    // Drop classes that carry an inner edge; they cannot join any independent
    // set of g. (None exist in the freely-acting cases the lemma targets, but
    // degenerate quotients do occur, e.g. small n/d with large r.)
    std::vector<int> new_id(static_cast<size_t>(qr.graph.n_vertices()), -1);
    int m = 0;
    for (int v = 0; v < qr.graph.n_vertices(); ++v)
        if (!qr.has_inner_edge[static_cast<size_t>(v)]) new_id[static_cast<size_t>(v)] = m++;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : qr.graph.edges())
        if (new_id[static_cast<size_t>(u)] >= 0 && new_id[static_cast<size_t>(v)] >= 0)
            edges.emplace_back(new_id[static_cast<size_t>(u)], new_id[static_cast<size_t>(v)]);
    Graph reduced(m, edges);

    return static_cast<long long>(
        enumerate_independent(reduced, k / static_cast<int>(d)).sets.size());
}

} // namespace cspsieve

#include "hfree/graph.hpp"

#include <algorithm>
#include <cassert>

namespace hfree {

IndependentSet::IndependentSet(const Graph& host, std::vector<int> vertices)
    : host_(&host), vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (size_t i = 0; i < vertices_.size(); ++i) {
        host.check_vertex(vertices_[i]);
        if (i > 0 && vertices_[i] == vertices_[i - 1])
            throw InputError("independent set repeats a vertex");
    }
    if (!is_independent(host, vertices_))
        throw InputError("set is not independent in its host graph");
}

bool is_independent(const Graph& g, std::span<const int> s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
    Bitset seen(g.num_vertices());
    for (int v : s) {
        g.check_vertex(v);
        if (seen.test(v)) throw InputError("induced_subgraph: repeated vertex");
        seen.set(v);
    }
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(s.size()));
    out.vertices.assign(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

namespace {

struct CrossEdge {
    int u, w;  // u in a, w in b
};

// Max independent set in the conflict structure over cross edges: two cross
// edges conflict when they share a vertex or any g-edge joins their
// endpoints.  Plain branch and bound; edge counts here are tiny.
void matching_search(const std::vector<Bitset>& conflict, Bitset alive, int cur,
                     int& best) {
    if (cur + static_cast<int>(alive.count()) <= best) return;
    auto i = alive.find_first();
    if (i == Bitset::npos) {
        best = std::max(best, cur);
        return;
    }
    alive.reset(i);
    matching_search(conflict, alive - conflict[i], cur + 1, best);  // take i
    matching_search(conflict, alive, cur, best);                    // skip i
}

}  // namespace

int max_induced_matching_between(const Graph& g, std::span<const int> a,
                                 std::span<const int> b) {
    Bitset in_a = make_bitset(g.num_vertices(), a);
    Bitset in_b = make_bitset(g.num_vertices(), b);
    if ((in_a & in_b).any())
        throw InputError("max_induced_matching_between: sets overlap");

    std::vector<CrossEdge> es;
    for (int u : a)
        for (int w : b)
            if (g.has_edge(u, w)) es.push_back({u, w});

    auto n = es.size();
    std::vector<Bitset> conflict(n, Bitset(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const auto& e = es[i];
            const auto& f = es[j];
            bool touch = e.u == f.u || e.w == f.w;
            bool adj = g.has_edge(e.u, f.u) || g.has_edge(e.u, f.w) ||
                       g.has_edge(e.w, f.u) || g.has_edge(e.w, f.w);
            if (touch || adj) {
                conflict[i].set(j);
                conflict[j].set(i);
            }
        }

    int best = 0;
    Bitset all(n);
    all.set();
    matching_search(conflict, all, 0, best);
    return best;
}

void VertexPartition::validate(int n) const {
    Bitset seen(n);
    long long total = 0;
    for (const auto& part : parts) {
        for (int v : part) {
            if (v < 0 || v >= n) throw InputError("partition: vertex out of range");
            if (seen.test(v)) throw InputError("partition: parts overlap");
            seen.set(v);
        }
        total += static_cast<long long>(part.size());
    }
    if (total != n) throw InputError("partition: parts do not cover all vertices");
}

std::vector<int> VertexPartition::part_of(int n) const {
    validate(n);
    std::vector<int> owner(n, -1);
    for (int i = 0; i < num_parts(); ++i)
        for (int v : parts[i]) owner[v] = i;
    return owner;
}

}  // namespace hfree

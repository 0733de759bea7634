#pragma once

#include <boost/dynamic_bitset.hpp>
#include <span>
#include <utility>
#include <vector>

#include "hfree/errors.hpp"

namespace hfree {

using Bitset = boost::dynamic_bitset<>;

// Simple undirected graph on vertices 0..n-1, one adjacency bitset per vertex.
// Build it with add_edge and treat it as immutable afterwards; const instances
// are safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n)
        : n_(checked_size(n)),
          adj_(static_cast<size_t>(n_), Bitset(static_cast<size_t>(n_))) {}

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }

    // Loops are rejected; re-adding an existing edge is a no-op.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("loops are not allowed");
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].count()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = static_cast<int>(adj_[u].find_next(u)); v != npos();
                 v = static_cast<int>(adj_[u].find_next(v)))
                out.emplace_back(u, v);
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex id out of range");
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    static int npos() { return static_cast<int>(Bitset::npos); }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        return g;
    }

    static Graph cycle(int n) {
        Graph g = path(n);
        if (n >= 3) g.add_edge(n - 1, 0);
        return g;
    }

    // K_{1,c}: vertex 0 is the center, 1..c are the leaves.
    static Graph star(int c) {
        Graph g(c + 1);
        for (int v = 1; v <= c; ++v) g.add_edge(0, v);
        return g;
    }

private:
    static int checked_size(int n) {
        if (n < 0) throw InputError("graph size must be non-negative");
        return n;
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// Iterate the set bits of a bitset as ints.
template <typename F>
void for_each_bit(const Bitset& b, F f) {
    for (auto v = b.find_first(); v != Bitset::npos; v = b.find_next(v))
        f(static_cast<int>(v));
}

inline Bitset make_bitset(int n, std::span<const int> vertices) {
    Bitset b(n);
    for (int v : vertices) {
        if (v < 0 || v >= n) throw InputError("vertex id out of range");
        b.set(v);
    }
    return b;
}

inline std::vector<int> bitset_to_vector(const Bitset& b) {
    std::vector<int> out;
    for_each_bit(b, [&](int v) { out.push_back(v); });
    return out;
}

// A set of pairwise non-adjacent vertices of a fixed host graph.  The
// constructor validates, so an instance is trustworthy once it exists; the
// host must outlive it.
class IndependentSet {
public:
    IndependentSet(const Graph& host, std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const Graph& host() const { return *host_; }

private:
    const Graph* host_;
    std::vector<int> vertices_;  // kept sorted ascending
};

bool is_independent(const Graph& g, std::span<const int> s);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // vertices[new id] = original id, in input order
};

// g[s]; s must not repeat vertices.  New ids follow the order of s, so a
// witness list maps positionally onto a pattern graph.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

// Largest set of cross edges (one end in a, one in b) that pairwise share no
// vertex and have no g-edge between their endpoints, adjacency judged inside
// g[a∪b].  Exhaustive; meant for |a|, |b| <= 12.
int max_induced_matching_between(const Graph& g, std::span<const int> a,
                                 std::span<const int> b);

// Ordered parts; together they must cover 0..n-1 without overlap.
struct VertexPartition {
    std::vector<std::vector<int>> parts;

    int num_parts() const { return static_cast<int>(parts.size()); }
    void validate(int n) const;
    // vertex -> part index
    std::vector<int> part_of(int n) const;
};

}  // namespace hfree

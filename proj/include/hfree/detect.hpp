#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

// Embeddings are positional: entry i is the host vertex playing pattern
// vertex i, so induced_subgraph(g, embedding).graph == pattern re-checks any
// witness.

std::optional<std::vector<int>> contains_induced(const Graph& g,
                                                 const Graph& pattern);

struct StarWitness {
    int center;
    std::vector<int> leaves;
    // matches Graph::star(c): center first
    std::vector<int> as_vertices() const;
};

// Induced K_{1,c}: a vertex with c pairwise non-adjacent neighbors.
std::optional<StarWitness> find_induced_star(const Graph& g, int c);

// Chordless cycle with length in [lo, hi], 3 <= lo <= hi; returned in cycle
// order.
std::optional<std::vector<int>> find_induced_cycle_in_range(const Graph& g,
                                                            int lo, int hi);

// Minimal trees with two branch vertices at distance <= s: the double
// spiders H_1..H_s.  H_q is two degree-3 centers joined by a path with q-1
// inner vertices, plus two pendant leaves on each center (q+5 vertices).
//
// Checking only these suffices for the whole family of trees with two branch
// vertices at distance <= s.  Any such tree T holds both branch vertices,
// the path between them, and two further neighbors of each branch vertex
// (degree >= 3 leaves at most one path edge at each end); that vertex set
// induces exactly H_q in T because T is acyclic, and an induced subgraph of
// an induced subtree is induced in the host.  Conversely every H_q is itself
// such a tree, so a host contains a family member iff it contains some H_q.
std::vector<Graph> minimal_ts_trees(int s);

struct TsTreeWitness {
    int distance;   // q: distance between the two centers
    Graph pattern;  // H_q
    std::vector<int> vertices;
};

std::optional<TsTreeWitness> find_ts_tree(const Graph& g, int s);

enum class PatternKind { Star, CycleRange, TreeFamily, Explicit };

struct PatternFamily {
    PatternKind kind = PatternKind::Explicit;
    int star_leaves = 0;
    int cycle_lo = 0;
    int cycle_hi = 0;
    int tree_reach = 0;
    Graph pattern;     // Explicit only
    std::string name;  // Explicit only

    std::string label() const;

    bool operator==(const PatternFamily&) const = default;

    static PatternFamily star(int c);
    static PatternFamily cycles(int lo, int hi);
    static PatternFamily trees(int s);
    static PatternFamily explicit_pattern(std::string name, Graph pattern);
};

struct FamilyCheck {
    PatternFamily family;
    // empty: the graph is free of this family; otherwise an embedding of the
    // found member (positional against family_pattern)
    std::optional<std::vector<int>> witness;
    Graph found_pattern;  // the concrete member the witness embeds
};

// Runs the matching detector per family and re-checks every witness before
// returning it.
std::vector<FamilyCheck> check_freeness(const Graph& g,
                                        const std::vector<PatternFamily>& fams);

}  // namespace hfree

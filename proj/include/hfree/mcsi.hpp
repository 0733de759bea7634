#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/rational.hpp"

namespace hfree {

// A graph g whose vertices are split into parts V_1..V_l, plus a constraint
// graph j on the part indices.  An assignment picks one vertex per part and
// scores the fraction of j-edges realized by g-edges.
struct McsiInstance {
    Graph g;
    VertexPartition partition;
    Graph j;

    int num_parts() const { return partition.num_parts(); }
    // structural sanity: partition matches g, j matches the part count
    void validate() const;

    bool operator==(const McsiInstance& o) const {
        return g == o.g && partition.parts == o.partition.parts && j == o.j;
    }
};

// part index -> chosen vertex (global id)
using Assignment = std::vector<int>;

// Fraction of j-edges ij with a g-edge between phi[i] and phi[j].
Rational value(const McsiInstance& inst, const Assignment& phi);

// Number of g-edges running between parts i and j, for each j-edge.
long long count_pair_edges(const McsiInstance& inst, int i, int j);

// True when: no intra-part g-edges, every g-edge's part pair is a j-edge,
// every j-edge has at least one g-edge, no isolated j-vertices, and j has at
// least one edge.
bool is_normalized(const McsiInstance& inst);

// Establishes the invariants above: drops intra-part edges, g-edges across
// non-j pairs, j-edges with no g-edges, then isolated j-vertices together
// with their parts (re-indexing both parts and vertex ids).  Idempotent.
// Throws DegenerateInstanceError when nothing usable remains.
McsiInstance normalize(const McsiInstance& inst);

// Random instance with a planted value-1 assignment: J is a near-regular
// graph with max degree <= max_j_degree thinned by random edge deletion,
// parts have part_size vertices each, and every non-planted cross pair along
// a j-edge appears with probability extra_edge_prob.  Deterministic per
// seed; the result is normalized.
McsiInstance gen_planted(int parts, int max_j_degree, int part_size,
                         double extra_edge_prob, uint64_t seed);

// Builds a graph realizing the degree sequence (sorted non-increasing;
// vertex i gets degree seq[i]).  Odd sum -> ParityError; an Erdos-Gallai
// violation -> InfeasibleSequenceError naming the violated prefix.
Graph realize_degree_sequence(const std::vector<int>& seq);

// t-regular graph on l vertices when t*l is even, else degrees
// (t,...,t,t-1); needs 1 <= t < l.
Graph near_regular_graph(int l, int t);

// Replaces a complete constraint graph by a near-regular one and drops the
// g-edges it no longer covers.  inst must be normalized with complete J.
McsiInstance sparsify(const McsiInstance& inst, int t);

// Text format, 1-indexed, every line newline-terminated:
//   mcsi <l> <n>
//   part <i> <v ...>     for i = 1..l in order
//   jedge <i> <j>        1 <= i < j <= l
//   gedge <u> <w>        u < w
// Unknown keywords, overlaps, duplicates or out-of-range ids are parse
// errors.  write_mcsi sorts everything, and read_mcsi(write_mcsi(x)) == x.
McsiInstance read_mcsi(std::istream& in);
void write_mcsi(std::ostream& out, const McsiInstance& inst);

McsiInstance read_mcsi_file(const std::string& path);
void write_mcsi_file(const std::string& path, const McsiInstance& inst);

McsiInstance mcsi_from_string(const std::string& text);
std::string mcsi_to_string(const McsiInstance& inst);

}  // namespace hfree

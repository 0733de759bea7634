#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "hfree/detect.hpp"
#include "hfree/graph.hpp"
#include "hfree/mcsi.hpp"
#include "hfree/rational.hpp"

namespace hfree {

enum class CliqueKind { Primary, Secondary, Cycle, Equality };

struct SoundnessParams {
    int s = 0;        // copies per base clique in the construction
    int divisor = 1;  // D in gamma' = gamma * |E(J)| / (D * target_k)

    bool operator==(const SoundnessParams&) const = default;
};

// A gadget graph built from an instance.  Vertices are grouped into
// target_k base cliques; every vertex stands for one g-edge of the source
// instance (rep_edge, endpoints in source ids).
struct ReductionOutput {
    Graph graph;
    int target_k = 0;
    std::vector<int> clique_of;                    // per vertex
    std::vector<CliqueKind> clique_kind;           // per clique
    std::vector<std::pair<int, int>> rep_edge;     // per vertex, source edge u < w
    std::vector<std::pair<int, int>> clique_jedge; // per clique, source j-edge i < j
    std::vector<PatternFamily> promised_class;
    SoundnessParams soundness;

    // members of each base clique, grouped by clique id
    std::vector<std::vector<int>> cliques() const;
    // the endpoint of rep_edge[v] lying in the given part
    int rep_vertex(const McsiInstance& inst, int v, int part) const;
};

// One vertex per g-edge; edges join representatives of the same j-edge
// always, and representatives of j-edges sharing a part exactly when the
// g-edges are vertex-disjoint.  alpha of the output equals the maximum
// number of simultaneously satisfiable j-edges, and the output is K_{1,d}-
// free for d = 2*max_deg(J)+2.
ReductionOutput reduce_k1d(const McsiInstance& inst);

// One clique per j-edge plus s copies of it in each endpoint's cycle of
// cliques, consecutive cliques joined by half-graphs over the shared part's
// vertex order.  Needs max_deg(J) <= 3 and z >= 5; s = ceil((z-1)/2).
// Output promises: no induced C_p for p in [4,z], no K_{1,5}, no tree with
// two branch vertices within distance s.
ReductionOutput reduce_vertex_cycle(const McsiInstance& inst, int z);

// Four cliques per j-edge arranged in a cycle with s copies each
// (half-graphs over the j-edge's own g-edge order), plus an equality gadget
// (antimatching chain) between the cycles of any two intersecting j-edges.
// Needs max_deg(J) <= 3 and z >= 5; s = ceil((z-3)/4).  Output promises: no
// induced C_p for p in [5,z], no K_{1,4}.
ReductionOutput reduce_edge_cycle(const McsiInstance& inst, int z);

struct MulticoloredIsInstance {
    Graph g;
    std::vector<std::vector<int>> classes;  // disjoint, covering, non-empty
};

// Turns every class into a clique; the result has an independent set of
// size #classes iff the input has one vertex per class, pairwise
// non-adjacent.  Returns the graph and k = #classes.
std::pair<Graph, int> cliqueify(const MulticoloredIsInstance& inst);

struct CompletenessReport {
    Rational value{0};
    int target_k = 0;
    int alpha = 0;
    bool value_is_one = false;
    bool witness_ok = false;        // meaningful when value_is_one
    std::vector<int> witness;       // representing vertex per clique
    bool pass = false;              // value=1 implies alpha=target_k (+witness)
};

CompletenessReport check_completeness(const McsiInstance& inst,
                                      const ReductionOutput& out);

struct SoundnessReport {
    Rational gamma{0};
    Rational gamma_prime{0};
    Rational value{0};
    int target_k = 0;
    int alpha = 0;
    bool premise = false;     // alpha >= (1-gamma')*target_k
    bool conclusion = false;  // value >= 1-gamma
    bool pass = false;        // premise implies conclusion
};

// gamma' = gamma * |E(J)| / (D * target_k), exact arithmetic throughout.
SoundnessReport check_soundness(const McsiInstance& inst,
                                const ReductionOutput& out,
                                const Rational& gamma);

// Serialized reduction metadata, 1-indexed:
//   target_k <k> s <s> D <D>
//   promised (cycles <lo> <hi> | star <c> | trees <s>)   per family
//   v <id> clique <cid> kind <p|s|c|q> rep <u> <w>       per vertex, in order
struct Sidecar {
    int target_k = 0;
    SoundnessParams soundness;
    std::vector<PatternFamily> promised;

    struct VertexMeta {
        int clique;
        CliqueKind kind;
        std::pair<int, int> rep;

        bool operator==(const VertexMeta&) const = default;
    };
    std::vector<VertexMeta> vertices;

    bool operator==(const Sidecar&) const = default;
};

Sidecar make_sidecar(const ReductionOutput& out);

// Rebuilds the full metadata against the (normalized) source instance and
// the gadget graph the sidecar shipped with.
ReductionOutput apply_sidecar(const McsiInstance& inst, Graph graph,
                              const Sidecar& sc);

void write_sidecar(std::ostream& out, const Sidecar& sc);
Sidecar read_sidecar(std::istream& in);

Sidecar read_sidecar_file(const std::string& path);
void write_sidecar_file(const std::string& path, const Sidecar& sc);

Sidecar sidecar_from_string(const std::string& text);
std::string sidecar_to_string(const Sidecar& sc);

}  // namespace hfree

#include <numeric>
#include <vector>

#include "doctest.h"
#include "hfree/detect.hpp"
#include "hfree/errors.hpp"
#include "hfree/exact.hpp"
#include "hfree/graph.hpp"
#include "hfree/mcsi.hpp"
#include "hfree/rational.hpp"
#include "hfree/reductions.hpp"

using namespace hfree;

namespace {

// one constraint, class of three parallel edges
McsiInstance one_edge_three() {
    McsiInstance inst;
    inst.g = Graph(6);
    inst.g.add_edge(0, 3);
    inst.g.add_edge(1, 4);
    inst.g.add_edge(2, 5);
    inst.partition.parts = {{0, 1, 2}, {3, 4, 5}};
    inst.j = Graph(2);
    inst.j.add_edge(0, 1);
    return inst;
}

McsiInstance single_edge() {
    McsiInstance inst;
    inst.g = Graph(2);
    inst.g.add_edge(0, 1);
    inst.partition.parts = {{0}, {1}};
    inst.j = Graph(2);
    inst.j.add_edge(0, 1);
    return inst;
}

long long sum_degrees(const Graph& j) {
    long long s = 0;
    for (int v = 0; v < j.num_vertices(); ++v) s += j.degree(v);
    return s;
}

void check_roundtrip_and_apply(const McsiInstance& inst,
                               const ReductionOutput& out) {
    auto sc = make_sidecar(out);
    CHECK(sidecar_from_string(sidecar_to_string(sc)) == sc);
    auto back = apply_sidecar(inst, out.graph, sc);
    CHECK(back.graph == out.graph);
    CHECK(back.target_k == out.target_k);
    CHECK(back.clique_of == out.clique_of);
    CHECK(back.clique_kind == out.clique_kind);
    CHECK(back.rep_edge == out.rep_edge);
    CHECK(back.clique_jedge == out.clique_jedge);
    CHECK(back.promised_class == out.promised_class);
    CHECK(back.soundness == out.soundness);
}

}  // namespace

TEST_CASE("reduce_k1d") {
    auto out = reduce_k1d(one_edge_three());
    CHECK(out.graph == Graph::complete(3));
    CHECK(out.target_k == 1);
    CHECK(alpha_exact(out.graph).alpha == 1);
    CHECK(out.promised_class ==
          std::vector<PatternFamily>{PatternFamily::star(4)});
    CHECK(out.soundness == SoundnessParams{0, 1});
    CHECK(out.cliques() == std::vector<std::vector<int>>{{0, 1, 2}});

    // optimum transfer is exact: alpha equals the satisfiable count
    for (uint64_t seed : {21, 22, 23}) {
        auto inst = gen_planted(4, 3, 2, 0.5, seed);
        auto o = reduce_k1d(inst);
        CHECK(alpha_exact(o.graph).alpha == mcsi_value_exact(inst).satisfied);
        CHECK(!find_induced_star(o.graph, 2 * inst.j.max_degree() + 2));
    }
}

TEST_CASE("reduce_vertex_cycle hand trace") {
    auto out = reduce_vertex_cycle(single_edge(), 5);
    CHECK(out.target_k == 5);
    CHECK(out.graph.num_vertices() == 5);
    CHECK(out.graph.num_edges() == 0);  // u < u never holds in a copy chain
    CHECK(alpha_exact(out.graph).alpha == 5);
    CHECK(out.promised_class ==
          std::vector<PatternFamily>{PatternFamily::cycles(4, 5),
                                     PatternFamily::star(5),
                                     PatternFamily::trees(2)});
    CHECK(out.soundness == SoundnessParams{2, 6});
    CHECK(out.clique_kind[0] == CliqueKind::Primary);
    for (int c = 1; c < 5; ++c) CHECK(out.clique_kind[c] == CliqueKind::Secondary);

    CHECK(reduce_vertex_cycle(single_edge(), 7).target_k == 7);  // s = 3
    CHECK(sidecar_to_string(make_sidecar(out)) ==
          "target_k 5 s 2 D 6\n"
          "promised cycles 4 5\n"
          "promised star 5\n"
          "promised trees 2\n"
          "v 1 clique 1 kind p rep 1 2\n"
          "v 2 clique 2 kind s rep 1 2\n"
          "v 3 clique 3 kind s rep 1 2\n"
          "v 4 clique 4 kind s rep 1 2\n"
          "v 5 clique 5 kind s rep 1 2\n");
}

TEST_CASE("reduction preconditions") {
    CHECK_THROWS_AS(reduce_vertex_cycle(single_edge(), 4), InputError);
    CHECK_THROWS_AS(reduce_edge_cycle(single_edge(), 3), InputError);

    McsiInstance star5;  // constraint star with a degree-4 center
    star5.g = Graph(5);
    star5.j = Graph::star(4);
    star5.partition.parts = {{0}, {1}, {2}, {3}, {4}};
    for (int leaf = 1; leaf <= 4; ++leaf) star5.g.add_edge(0, leaf);
    CHECK(is_normalized(star5));
    CHECK_THROWS_AS(reduce_vertex_cycle(star5, 5), InputError);
    CHECK_THROWS_AS(reduce_edge_cycle(star5, 5), InputError);
    CHECK_NOTHROW(reduce_k1d(star5));  // no degree cap here

    McsiInstance intra = one_edge_three();
    intra.g.add_edge(0, 1);  // intra-part edge: not normalized
    CHECK_THROWS_AS(reduce_vertex_cycle(intra, 5), InputError);
    CHECK_THROWS_AS(reduce_edge_cycle(intra, 5), InputError);
    CHECK_THROWS_AS(reduce_k1d(intra), InputError);
}

TEST_CASE("reduce_edge_cycle hand trace") {
    auto out = reduce_edge_cycle(single_edge(), 5);  // s = 1
    CHECK(out.target_k == 8);  // 4 primaries + 4 copies, no equality gadgets
    CHECK(out.graph.num_vertices() == 8);
    CHECK(out.graph.num_edges() == 0);
    CHECK(alpha_exact(out.graph).alpha == 8);
    CHECK(out.promised_class ==
          std::vector<PatternFamily>{PatternFamily::cycles(5, 5),
                                     PatternFamily::star(4)});
    CHECK(out.soundness == SoundnessParams{1, 9});
}

TEST_CASE("gadget counting identities") {
    for (uint64_t seed : {31, 32, 33, 34}) {
        auto inst = gen_planted(4, 3, 2, 0.5, seed);
        long long mj = inst.j.num_edges();
        for (int z : {5, 6, 9}) {
            auto vc = reduce_vertex_cycle(inst, z);
            CHECK(vc.target_k == mj + (z / 2) * sum_degrees(inst.j));

            auto ec = reduce_edge_cycle(inst, z);
            long long pairs = 0;
            for (int i = 0; i < inst.num_parts(); ++i) {
                long long d = inst.j.degree(i);
                pairs += d * (d - 1) / 2;
            }
            CHECK(ec.target_k == 4 * mj * (z / 4 + 1) + (z / 4) * pairs);
        }
    }
}

TEST_CASE("sidecar round trip and reapply") {
    for (uint64_t seed : {41, 42}) {
        auto inst = gen_planted(4, 3, 2, 0.4, seed);
        check_roundtrip_and_apply(inst, reduce_k1d(inst));
        check_roundtrip_and_apply(inst, reduce_vertex_cycle(inst, 5));
        check_roundtrip_and_apply(inst, reduce_edge_cycle(inst, 6));
    }
}

TEST_CASE("sidecar parser rejects malformed input") {
    const std::string good =
        "target_k 2 s 0 D 1\n"
        "promised star 4\n"
        "v 1 clique 1 kind p rep 1 2\n"
        "v 2 clique 2 kind p rep 1 3\n";
    CHECK(sidecar_from_string(good).target_k == 2);

    auto corrupt = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    CHECK_THROWS_AS(sidecar_from_string(corrupt("kind p rep 1 2", "kind x rep 1 2")),
                    ParseError);
    CHECK_THROWS_AS(sidecar_from_string(corrupt("v 2", "v 3")), ParseError);
    CHECK_THROWS_AS(sidecar_from_string(corrupt("target_k 2 s 0 D 1", "target_k 2")),
                    ParseError);
    CHECK_THROWS_AS(sidecar_from_string(corrupt("rep 1 3", "rep 1")), ParseError);
    CHECK_THROWS_AS(sidecar_from_string(good + "promised star 4\n"), ParseError);
    CHECK_THROWS_AS(sidecar_from_string(""), ParseError);
}

TEST_CASE("apply_sidecar validates against instance and graph") {
    auto inst = one_edge_three();
    auto out = reduce_vertex_cycle(inst, 5);
    auto sc = make_sidecar(out);

    CHECK_THROWS_AS(apply_sidecar(inst, Graph(3), sc), InputError);  // size
    auto wrong_k = sc;
    wrong_k.target_k = 4;
    CHECK_THROWS_AS(apply_sidecar(inst, out.graph, wrong_k), InputError);
    auto wrong_rep = sc;
    wrong_rep.vertices[0].rep = {0, 2};  // not an instance edge
    CHECK_THROWS_AS(apply_sidecar(inst, out.graph, wrong_rep), InputError);
}

TEST_CASE("completeness and soundness harnesses") {
    auto inst = gen_planted(4, 3, 2, 0.4, 77);
    for (const auto& out :
         {reduce_k1d(inst), reduce_vertex_cycle(inst, 5),
          reduce_edge_cycle(inst, 5)}) {
        auto rep = check_completeness(inst, out);
        CHECK(rep.value_is_one);
        CHECK(rep.alpha == rep.target_k);
        CHECK(rep.witness_ok);
        CHECK(rep.pass);
        CHECK(is_independent(out.graph, rep.witness));

        auto srep = check_soundness(inst, out, Rational(1, 10));
        CHECK(srep.pass);
    }
    auto out = reduce_k1d(inst);
    CHECK_THROWS_AS(check_soundness(inst, out, Rational(0)), InputError);
    CHECK_THROWS_AS(check_soundness(inst, out, Rational(1)), InputError);
    CHECK_THROWS_AS(check_soundness(inst, out, Rational(-1, 2)), InputError);
}

TEST_CASE("cliqueify") {
    Graph g(5);
    g.add_edge(0, 2);  // one cross edge
    auto [out, k] = cliqueify({g, {{0, 1}, {2, 3, 4}}});
    CHECK(k == 2);
    CHECK(out.has_edge(0, 1));
    CHECK(out.has_edge(2, 3));
    CHECK(out.has_edge(2, 4));
    CHECK(out.has_edge(3, 4));
    CHECK(out.has_edge(0, 2));  // original edge kept
    CHECK(alpha_exact(out).alpha == 2);  // e.g. {1, 2}

    CHECK_THROWS_AS(cliqueify({g, {{0, 1}, {2, 3}}}), InputError);  // no cover
    CHECK_THROWS_AS(cliqueify({g, {{0, 1, 2}, {2, 3, 4}}}), InputError);
    CHECK_THROWS_AS(cliqueify({g, {{}, {0, 1, 2, 3, 4}}}), InputError);
}

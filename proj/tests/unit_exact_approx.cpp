#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hfree/approx.hpp"
#include "hfree/errors.hpp"
#include "hfree/exact.hpp"
#include "hfree/graph.hpp"
#include "hfree/mcsi.hpp"

using namespace hfree;

namespace {

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v + 5, (v + 2) % 5 + 5);
        g.add_edge(v, v + 5);
    }
    return g;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
    return g;
}

// independent-set brute force over vertex subsets, n <= 20
int alpha_brute(const Graph& g) {
    int n = g.num_vertices(), best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (mask >> u & 1)
                for (int v = u + 1; v < n && ok; ++v)
                    if ((mask >> v & 1) && g.has_edge(u, v)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

std::vector<std::vector<int>> greedy_cover(const Graph& g) {
    std::vector<std::vector<int>> cover;
    Bitset left(g.num_vertices());
    left.set();
    while (left.any()) {
        int v = static_cast<int>(left.find_first());
        std::vector<int> cl{v};
        Bitset cand = left & g.neighbors(v);
        while (cand.any()) {
            int w = static_cast<int>(cand.find_first());
            cl.push_back(w);
            cand &= g.neighbors(w);
        }
        for (int w : cl) left.reset(w);
        cover.push_back(cl);
    }
    return cover;
}

}  // namespace

TEST_CASE("alpha_exact on known graphs") {
    CHECK(alpha_exact(petersen()).alpha == 4);
    CHECK(alpha_exact(Graph::cycle(5)).alpha == 2);
    CHECK(alpha_exact(Graph::cycle(7)).alpha == 3);
    CHECK(alpha_exact(Graph::complete(6)).alpha == 1);
    CHECK(alpha_exact(Graph(7)).alpha == 7);
    CHECK(alpha_exact(Graph::path(7)).alpha == 4);
    CHECK(alpha_exact(Graph(0)).alpha == 0);
}

TEST_CASE("alpha_exact matches brute force and certifies itself") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 12),
                               0.15 + 0.1 * (t % 7));
        auto res = alpha_exact(g);
        CHECK(res.alpha == alpha_brute(g));
        CHECK(res.witness.size() == res.alpha);  // constructor validated it
    }
}

TEST_CASE("alpha_exact respects its node budget") {
    std::mt19937_64 rng(5);
    Graph g = random_graph(rng, 30, 0.2);
    CHECK_THROWS_AS(alpha_exact(g, 3), BudgetExceededError);
}

TEST_CASE("alpha_exact_cliquecover") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 12), 0.4);
        auto res = alpha_exact_cliquecover(g, greedy_cover(g));
        CHECK(res.alpha == alpha_exact(g).alpha);
        CHECK(res.witness.size() == res.alpha);
    }

    Graph g = Graph::complete(3);
    CHECK_THROWS_AS(alpha_exact_cliquecover(g, {{0, 1}}), InputError);
    CHECK_THROWS_AS(alpha_exact_cliquecover(g, {{0, 1}, {1, 2}}), InputError);
    Graph p3 = Graph::path(3);
    CHECK_THROWS_AS(alpha_exact_cliquecover(p3, {{0, 2}, {1}}), InputError);
}

TEST_CASE("mcsi_value_exact") {
    // parts {0},{1},{2}, triangle constraints, only two of them satisfiable
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    McsiInstance inst{g, VertexPartition{{{0}, {1}, {2}}}, Graph(3)};
    inst.j.add_edge(0, 1);
    inst.j.add_edge(0, 2);
    inst.j.add_edge(1, 2);
    auto res = mcsi_value_exact(inst);
    CHECK(res.value == Rational(2, 3));
    CHECK(res.satisfied == 2);
    CHECK(res.assignment == Assignment{0, 1, 2});

    auto planted = gen_planted(4, 3, 2, 0.3, 99);
    CHECK(mcsi_value_exact(planted).value == Rational(1));

    // the assignment-space guard: 11^8 > 1e7
    McsiInstance big;
    big.g = Graph(88);
    big.j = Graph(8);
    big.partition.parts.resize(8);
    for (int i = 0; i < 8; ++i) {
        for (int v = 0; v < 11; ++v) big.partition.parts[i].push_back(i * 11 + v);
        big.j.add_edge(i, (i + 1) % 8);
    }
    for (int i = 0; i < 8; ++i)
        big.g.add_edge(i * 11, ((i + 1) % 8) * 11);
    CHECK_THROWS_AS(mcsi_value_exact(big), BudgetExceededError);
}

TEST_CASE("greedy_maximal_is") {
    CHECK(greedy_maximal_is(Graph::cycle(5)).vertices() ==
          std::vector<int>{0, 2});
    CHECK(greedy_maximal_is(Graph::complete(4)).vertices() ==
          std::vector<int>{0});
    CHECK(greedy_maximal_is(Graph(3)).size() == 3);
}

TEST_CASE("local_search_kab") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 10), 0.35);
        auto [set1, trace1] = local_search_kab(g, 1, 3);
        CHECK(set1.vertices() == greedy_maximal_is(g).vertices());
        CHECK(trace1.steps.empty());

        auto [set2, trace2] = local_search_kab(g, 2, 3);
        CHECK(is_kab_local_optimum(g, set2, 2));
        CHECK(static_cast<size_t>(set2.size()) ==
              static_cast<size_t>(trace2.initial_size) + trace2.steps.size());
        for (const auto& step : trace2.steps)
            CHECK(step.added.size() == step.removed.size() + 1);
        CHECK(set2.size() >= set1.size());
    }
    CHECK_THROWS_AS(local_search_kab(Graph(2), 0, 3), InputError);
    CHECK_THROWS_AS(local_search_kab(Graph(2), 3, 2), InputError);
    CHECK_THROWS_AS(local_search_kab(Graph(2), 5, 5), InputError);
}

TEST_CASE("kab_alpha_bound") {
    CHECK(kab_alpha_bound(1, 3, 5) == doctest::Approx(10.0));
    CHECK(kab_alpha_bound(1, 2, 7) == doctest::Approx(7.0));
    CHECK(kab_alpha_bound(2, 2, 3) ==
          doctest::Approx(3 * std::exp(1.0) + 9.0));
    CHECK(kab_alpha_bound(2, 3, 4) ==
          doctest::Approx(4 * std::exp(1.0) + 2 * 16.0));
}

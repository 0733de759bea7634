#pragma once

#include <utility>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

// Take vertices in ascending id, skipping neighbors of taken ones.
IndependentSet greedy_maximal_is(const Graph& g);

struct LocalSearchStep {
    std::vector<int> removed;  // empty when the step just restores maximality
    std::vector<int> added;    // always one larger than removed
};

struct LocalSearchTrace {
    int initial_size = 0;
    std::vector<LocalSearchStep> steps;
};

// (c -> c+1)-swap local search for K_{a,b}-free graphs, 1 <= a <= b, a <= 4.
// Starts from the greedy maximal set; repeatedly, in lexicographic (C, I')
// order, replaces some C subset of I (|C| <= a-1, including the empty set so
// the result stays maximal) by an independent I' of size |C|+1 drawn from
// C plus the outside vertices whose I-neighborhood is exactly C.  For a = 1
// the swap range is empty and the result is exactly the greedy set.
std::pair<IndependentSet, LocalSearchTrace> local_search_kab(const Graph& g,
                                                             int a, int b);

// No improvement step applies to I: maximal, and every C subset of I with
// |C| in [1, a-1] has alpha(V_C union C) <= |C|.
bool is_kab_local_optimum(const Graph& g, const IndependentSet& I, int a);

// (a-1) * (e*k)^(a-1) + (b-1) * k^a: the independence-number bound certified
// by a size-k local optimum in a K_{a,b}-free graph.
double kab_alpha_bound(int a, int b, int k);

}  // namespace hfree

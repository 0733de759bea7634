#pragma once

#include <cstdint>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/mcsi.hpp"

namespace hfree {

// Generous default; solvers throw BudgetExceededError beyond it rather than
// ever returning a wrong answer.
inline constexpr uint64_t kDefaultNodeBudget = 2'000'000'000ull;

struct AlphaResult {
    int alpha;
    IndependentSet witness;
    uint64_t nodes_explored;
};

// Branch and bound: branch on the max-degree candidate (smallest id on
// ties), greedy-clique-cover upper bound refreshed every 64 nodes.
// Deterministic.
AlphaResult alpha_exact(const Graph& g,
                        uint64_t node_budget = kDefaultNodeBudget);

// Same answer as alpha_exact, but branches clique by clique over a given
// partition of V(g) into cliques (at most one pick per clique).  The cover
// is validated first.
AlphaResult alpha_exact_cliquecover(const Graph& g,
                                    const std::vector<std::vector<int>>& cover,
                                    uint64_t node_budget = kDefaultNodeBudget);

struct McsiValueResult {
    Rational value;
    Assignment assignment;  // lexicographically first maximizer
    long long satisfied;
};

// Exhaustive over all assignments; guarded by a 1e7 product cap on part
// sizes (BudgetExceededError beyond).
McsiValueResult mcsi_value_exact(const McsiInstance& inst);

}  // namespace hfree

#include "hfree/exact.hpp"

#include <algorithm>

namespace hfree {

namespace {

// Greedily covers cand with cliques; stops early once the count exceeds
// cap, since the caller only prunes on small covers.
int greedy_clique_cover_size(const Graph& g, const Bitset& cand, int cap) {
    Bitset left = cand;
    int cliques = 0;
    while (left.any()) {
        auto u = left.find_first();
        left.reset(u);
        Bitset common = left & g.neighbors(static_cast<int>(u));
        while (common.any()) {
            auto w = common.find_first();
            left.reset(w);
            common &= g.neighbors(static_cast<int>(w));
            common &= left;
        }
        if (++cliques > cap) return cliques;
    }
    return cliques;
}

struct AlphaSearch {
    const Graph& g;
    uint64_t budget;
    uint64_t nodes = 0;
    int best = -1;
    std::vector<int> best_set;
    std::vector<int> cur;

    void rec(Bitset cand) {
        if (++nodes > budget)
            throw BudgetExceededError("alpha_exact: node budget exceeded");
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_set = cur;
        }
        if (cand.none()) return;
        // clique-cover bound with an early exit once pruning is impossible
        int slack = best - static_cast<int>(cur.size());
        if (slack >= 0 && static_cast<int>(cand.count()) <= slack) return;
        if (slack >= 0 && greedy_clique_cover_size(g, cand, slack) <= slack)
            return;

        int pick = -1, pick_deg = -1;
        for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
            int d = static_cast<int>((g.neighbors(static_cast<int>(v)) & cand).count());
            if (d > pick_deg) {
                pick = static_cast<int>(v);
                pick_deg = d;
            }
        }
        Bitset incl = cand;
        incl.reset(pick);
        incl -= g.neighbors(pick);
        cur.push_back(pick);
        rec(incl);
        cur.pop_back();
        cand.reset(pick);
        rec(cand);
    }
};

}  // namespace

AlphaResult alpha_exact(const Graph& g, uint64_t node_budget) {
    AlphaSearch s{g, node_budget, 0, -1, {}, {}};
    Bitset all(g.num_vertices());
    all.set();
    s.rec(all);
    return AlphaResult{s.best, IndependentSet(g, std::move(s.best_set)), s.nodes};
}

namespace {

struct CoverSearch {
    const Graph& g;
    const std::vector<std::vector<int>>& cover;
    uint64_t budget;
    uint64_t nodes = 0;
    int best = -1;
    std::vector<int> best_set;
    std::vector<int> cur;

    // one pick per clique at most; branch on the remaining clique with the
    // fewest unblocked vertices (smallest id on ties)
    void rec(const std::vector<int>& rem, const Bitset& blocked) {
        if (++nodes > budget)
            throw BudgetExceededError("alpha_exact_cliquecover: node budget exceeded");
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_set = cur;
        }
        if (rem.empty()) return;
        int open = 0, pick = -1, pick_count = -1;
        for (int j : rem) {
            int count = 0;
            for (int v : cover[j])
                if (!blocked.test(v)) ++count;
            if (count > 0) ++open;
            if (pick_count < 0 || count < pick_count) {
                pick = j;
                pick_count = count;
            }
        }
        if (static_cast<int>(cur.size()) + open <= best) return;

        std::vector<int> next;
        next.reserve(rem.size() - 1);
        for (int j : rem)
            if (j != pick) next.push_back(j);
        for (int v : cover[pick]) {
            if (blocked.test(v)) continue;
            cur.push_back(v);
            rec(next, blocked | g.neighbors(v));
            cur.pop_back();
        }
        rec(next, blocked);
    }
};

}  // namespace

AlphaResult alpha_exact_cliquecover(const Graph& g,
                                    const std::vector<std::vector<int>>& cover,
                                    uint64_t node_budget) {
    Bitset seen(g.num_vertices());
    for (const auto& clique : cover) {
        for (int v : clique) {
            g.check_vertex(v);
            if (seen.test(v))
                throw InputError("clique cover: vertex in two cliques");
            seen.set(v);
        }
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                if (!g.has_edge(clique[i], clique[j]))
                    throw InputError("clique cover: part is not a clique");
    }
    if (static_cast<int>(seen.count()) != g.num_vertices())
        throw InputError("clique cover: does not cover all vertices");

    CoverSearch s{g, cover, node_budget, 0, -1, {}, {}};
    std::vector<int> rem(cover.size());
    for (size_t i = 0; i < cover.size(); ++i) rem[i] = static_cast<int>(i);
    s.rec(rem, Bitset(g.num_vertices()));
    return AlphaResult{s.best, IndependentSet(g, std::move(s.best_set)), s.nodes};
}

McsiValueResult mcsi_value_exact(const McsiInstance& inst) {
    inst.validate();
    auto jedges = inst.j.edges();
    if (jedges.empty())
        throw InputError("mcsi_value_exact: constraint graph has no edges");
    long long combos = 1;
    for (const auto& part : inst.partition.parts) {
        if (part.empty()) throw InputError("mcsi_value_exact: empty part");
        combos *= static_cast<long long>(part.size());
        if (combos > 10'000'000)
            throw BudgetExceededError("mcsi_value_exact: assignment space too large");
    }

    int l = inst.num_parts();
    auto parts = inst.partition.parts;
    for (auto& part : parts) std::sort(part.begin(), part.end());

    std::vector<int> idx(l, 0);
    Assignment phi(l);
    for (int i = 0; i < l; ++i) phi[i] = parts[i][0];

    long long best = -1;
    Assignment best_phi;
    for (;;) {
        long long sat = 0;
        for (auto [i, j] : jedges)
            if (inst.g.has_edge(phi[i], phi[j])) ++sat;
        if (sat > best) {
            best = sat;
            best_phi = phi;
        }
        // odometer, last part fastest: lexicographic enumeration
        int pos = l - 1;
        while (pos >= 0) {
            if (++idx[pos] < static_cast<int>(parts[pos].size())) {
                phi[pos] = parts[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            phi[pos] = parts[pos][0];
            --pos;
        }
        if (pos < 0) break;
    }
    return McsiValueResult{Rational(best, static_cast<long long>(jedges.size())),
                           std::move(best_phi), best};
}

}  // namespace hfree

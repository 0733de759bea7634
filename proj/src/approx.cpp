#include "hfree/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hfree {

IndependentSet greedy_maximal_is(const Graph& g) {
    int n = g.num_vertices();
    Bitset taken(n), blocked(n);
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (blocked.test(v)) continue;
        taken.set(v);
        blocked |= g.neighbors(v);
        out.push_back(v);
    }
    return IndependentSet(g, std::move(out));
}

namespace {

// lexicographically first independent subset of size c drawn from cand
bool first_independent_subset(const Graph& g, Bitset cand, int c,
                              std::vector<int>& out) {
    if (c == 0) return true;
    if (static_cast<int>(cand.count()) < c) return false;
    for (auto u = cand.find_first(); u != Bitset::npos; u = cand.find_next(u)) {
        out.push_back(static_cast<int>(u));
        Bitset rest = cand;
        rest -= g.neighbors(static_cast<int>(u));
        for (auto w = rest.find_first(); w != Bitset::npos && w <= u;
             w = rest.find_next(w))
            rest.reset(w);
        if (first_independent_subset(g, rest, c - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

// all c-subsets of the sorted vector base, lexicographic; f returns true to stop
template <typename F>
bool subsets_rec(const std::vector<int>& base, size_t from, int left,
                 std::vector<int>& pick, F& f) {
    if (left == 0) return f(pick);
    for (size_t i = from; i + left <= base.size(); ++i) {
        pick.push_back(base[i]);
        if (subsets_rec(base, i + 1, left - 1, pick, f)) return true;
        pick.pop_back();
    }
    return false;
}

template <typename F>
bool for_each_subset(const std::vector<int>& base, int c, F f) {
    std::vector<int> pick;
    return subsets_rec(base, 0, c, pick, f);
}

}  // namespace

std::pair<IndependentSet, LocalSearchTrace> local_search_kab(const Graph& g,
                                                             int a, int b) {
    if (a < 1 || a > 4) throw InputError("local_search_kab: need 1 <= a <= 4");
    if (b < a) throw InputError("local_search_kab: need b >= a");

    int n = g.num_vertices();
    auto greedy = greedy_maximal_is(g);
    std::vector<int> cur = greedy.vertices();
    Bitset in_set = make_bitset(n, cur);

    LocalSearchTrace trace;
    trace.initial_size = static_cast<int>(cur.size());

    auto apply = [&](const std::vector<int>& removed,
                     const std::vector<int>& added) {
        for (int v : removed) in_set.reset(v);
        for (int v : added) in_set.set(v);
        cur = bitset_to_vector(in_set);
        trace.steps.push_back({removed, added});
    };

    bool improved = true;
    while (improved) {
        improved = false;
        // restore maximality first (the empty-C swap)
        for (int v = 0; v < n && !improved; ++v) {
            if (in_set.test(v)) continue;
            if ((g.neighbors(v) & in_set).none()) {
                apply({}, {v});
                improved = true;
            }
        }
        if (improved) continue;

        for (int c = 1; c <= a - 1 && !improved; ++c) {
            improved = for_each_subset(cur, c, [&](const std::vector<int>& C) {
                Bitset c_bits = make_bitset(n, C);
                // candidates outside I adjacent to all of C
                Bitset vc(n);
                vc.set();
                for (int u : C) vc &= g.neighbors(u);
                vc -= in_set;
                Bitset exact(n);
                for (auto v = vc.find_first(); v != Bitset::npos;
                     v = vc.find_next(v))
                    if ((g.neighbors(static_cast<int>(v)) & in_set) == c_bits)
                        exact.set(v);
                std::vector<int> grown;
                if (!first_independent_subset(g, exact | c_bits, c + 1, grown))
                    return false;
                apply(C, grown);
                return true;
            });
        }
    }
    return {IndependentSet(g, std::move(cur)), std::move(trace)};
}

bool is_kab_local_optimum(const Graph& g, const IndependentSet& I, int a) {
    if (a < 1 || a > 4) throw InputError("is_kab_local_optimum: need 1 <= a <= 4");
    int n = g.num_vertices();
    Bitset in_set = make_bitset(n, I.vertices());
    for (int v = 0; v < n; ++v)
        if (!in_set.test(v) && (g.neighbors(v) & in_set).none())
            return false;  // not maximal
    for (int c = 1; c <= a - 1; ++c) {
        bool found = for_each_subset(I.vertices(), c, [&](const std::vector<int>& C) {
            Bitset c_bits = make_bitset(n, C);
            Bitset vc(n);
            vc.set();
            for (int u : C) vc &= g.neighbors(u);
            vc -= in_set;
            Bitset exact(n);
            for (auto v = vc.find_first(); v != Bitset::npos; v = vc.find_next(v))
                if ((g.neighbors(static_cast<int>(v)) & in_set) == c_bits)
                    exact.set(v);
            std::vector<int> grown;
            return first_independent_subset(g, exact | c_bits, c + 1, grown);
        });
        if (found) return false;
    }
    return true;
}

double kab_alpha_bound(int a, int b, int k) {
    if (a < 1 || a > 4) throw InputError("kab_alpha_bound: need 1 <= a <= 4");
    if (b < a) throw InputError("kab_alpha_bound: need b >= a");
    if (k < 0) throw InputError("kab_alpha_bound: need k >= 0");
    double e = std::numbers::e;
    double first = (a - 1) * std::pow(e * k, a - 1);
    double second = (b - 1) * std::pow(static_cast<double>(k), a);
    return first + second;
}

}  // namespace hfree

#include "hfree/detect.hpp"

#include <algorithm>
#include <cassert>

namespace hfree {

namespace {

struct Matcher {
    const Graph& g;
    const Graph& p;
    std::vector<int> order;  // pattern vertices, most-constrained first
    std::vector<int> emb;    // pattern vertex -> host vertex
    Bitset used;

    Matcher(const Graph& host, const Graph& pattern) : g(host), p(pattern) {
        int np = p.num_vertices();
        emb.assign(np, -1);
        used = Bitset(g.num_vertices());
        std::vector<bool> placed(np, false);
        for (int step = 0; step < np; ++step) {
            int pick = -1, best_mapped = -1, best_deg = -1;
            for (int u = 0; u < np; ++u) {
                if (placed[u]) continue;
                int mapped = 0;
                for (int q : order)
                    if (p.has_edge(u, q)) ++mapped;
                if (mapped > best_mapped ||
                    (mapped == best_mapped && p.degree(u) > best_deg)) {
                    pick = u;
                    best_mapped = mapped;
                    best_deg = p.degree(u);
                }
            }
            order.push_back(pick);
            placed[pick] = true;
        }
    }

    bool dfs(size_t i) {
        if (i == order.size()) return true;
        int u = order[i];
        Bitset cand(g.num_vertices());
        cand.set();
        cand -= used;
        for (size_t j = 0; j < i; ++j) {
            int q = order[j];
            if (p.has_edge(u, q))
                cand &= g.neighbors(emb[q]);
            else
                cand -= g.neighbors(emb[q]);
        }
        int need = p.degree(u);
        for (auto w = cand.find_first(); w != Bitset::npos; w = cand.find_next(w)) {
            if (g.degree(static_cast<int>(w)) < need) continue;
            emb[u] = static_cast<int>(w);
            used.set(w);
            if (dfs(i + 1)) return true;
            used.reset(w);
        }
        emb[u] = -1;
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g,
                                                 const Graph& pattern) {
    if (pattern.num_vertices() > g.num_vertices()) return std::nullopt;
    if (pattern.num_vertices() == 0) return std::vector<int>{};
    Matcher m(g, pattern);
    if (!m.dfs(0)) return std::nullopt;
    return m.emb;
}

std::vector<int> StarWitness::as_vertices() const {
    std::vector<int> out{center};
    out.insert(out.end(), leaves.begin(), leaves.end());
    return out;
}

namespace {

// Independent c-subset of cand, smallest-id first; appends into out.
bool independent_subset(const Graph& g, Bitset cand, int c,
                        std::vector<int>& out) {
    if (c == 0) return true;
    if (static_cast<int>(cand.count()) < c) return false;
    for (auto u = cand.find_first(); u != Bitset::npos; u = cand.find_next(u)) {
        out.push_back(static_cast<int>(u));
        Bitset rest = cand;
        rest -= g.neighbors(static_cast<int>(u));
        // keep ids ascending to stay deterministic
        for (auto w = rest.find_first(); w != Bitset::npos && w <= u;
             w = rest.find_next(w))
            rest.reset(w);
        if (independent_subset(g, rest, c - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::optional<StarWitness> find_induced_star(const Graph& g, int c) {
    if (c < 1) throw InputError("find_induced_star: need c >= 1");
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < c) continue;
        std::vector<int> leaves;
        if (independent_subset(g, g.neighbors(v), c, leaves))
            return StarWitness{v, std::move(leaves)};
    }
    return std::nullopt;
}

namespace {

struct CycleSearch {
    const Graph& g;
    int lo, hi;
    std::vector<int> path;
    std::vector<int> found;

    // ban holds everything unusable even for closing: ids <= path[0], the
    // path itself, and neighborhoods of path[1..k-2].
    bool dfs(Bitset ban) {
        int k = static_cast<int>(path.size());
        int last = path.back();
        int p0 = path.front();
        if (k >= 2 && k + 1 >= lo && k + 1 <= hi) {
            Bitset close = g.neighbors(last) & g.neighbors(p0);
            close -= ban;
            for (auto w = close.find_first(); w != Bitset::npos;
                 w = close.find_next(w)) {
                if (path[1] >= static_cast<int>(w)) continue;  // direction dedup
                found = path;
                found.push_back(static_cast<int>(w));
                return true;
            }
        }
        if (k + 2 > hi) return false;  // no room to extend and still close
        Bitset ext = g.neighbors(last);
        ext -= ban;
        if (k >= 2) ext -= g.neighbors(p0);
        for (auto w = ext.find_first(); w != Bitset::npos; w = ext.find_next(w)) {
            Bitset ban2 = ban;
            ban2.set(w);
            if (k >= 2) ban2 |= g.neighbors(last);
            path.push_back(static_cast<int>(w));
            if (dfs(ban2)) return true;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced_cycle_in_range(const Graph& g,
                                                            int lo, int hi) {
    if (lo < 3 || lo > hi)
        throw InputError("find_induced_cycle_in_range: need 3 <= lo <= hi");
    int n = g.num_vertices();
    CycleSearch cs{g, lo, hi, {}, {}};
    for (int p0 = 0; p0 < n; ++p0) {
        Bitset ban(n);
        for (int v = 0; v <= p0; ++v) ban.set(v);
        cs.path.assign(1, p0);
        if (cs.dfs(ban)) return cs.found;
    }
    return std::nullopt;
}

std::vector<Graph> minimal_ts_trees(int s) {
    if (s < 1) throw InputError("minimal_ts_trees: need s >= 1");
    std::vector<Graph> out;
    for (int q = 1; q <= s; ++q) {
        // 0, 1 centers; 2..q inner path; q+1..q+4 leaves
        Graph h(q + 5);
        if (q == 1) {
            h.add_edge(0, 1);
        } else {
            h.add_edge(0, 2);
            for (int i = 2; i < q; ++i) h.add_edge(i, i + 1);
            h.add_edge(q, 1);
        }
        h.add_edge(0, q + 1);
        h.add_edge(0, q + 2);
        h.add_edge(1, q + 3);
        h.add_edge(1, q + 4);
        out.push_back(std::move(h));
    }
    return out;
}

std::optional<TsTreeWitness> find_ts_tree(const Graph& g, int s) {
    auto trees = minimal_ts_trees(s);
    for (int q = 1; q <= s; ++q) {
        if (auto emb = contains_induced(g, trees[q - 1]))
            return TsTreeWitness{q, trees[q - 1], std::move(*emb)};
    }
    return std::nullopt;
}

std::string PatternFamily::label() const {
    switch (kind) {
        case PatternKind::Star:
            return "K1," + std::to_string(star_leaves);
        case PatternKind::CycleRange:
            return "C[" + std::to_string(cycle_lo) + "," +
                   std::to_string(cycle_hi) + "]";
        case PatternKind::TreeFamily:
            return "T(" + std::to_string(tree_reach) + ")";
        case PatternKind::Explicit:
            return name;
    }
    return "?";
}

PatternFamily PatternFamily::star(int c) {
    PatternFamily f;
    f.kind = PatternKind::Star;
    f.star_leaves = c;
    return f;
}

PatternFamily PatternFamily::cycles(int lo, int hi) {
    PatternFamily f;
    f.kind = PatternKind::CycleRange;
    f.cycle_lo = lo;
    f.cycle_hi = hi;
    return f;
}

PatternFamily PatternFamily::trees(int s) {
    PatternFamily f;
    f.kind = PatternKind::TreeFamily;
    f.tree_reach = s;
    return f;
}

PatternFamily PatternFamily::explicit_pattern(std::string name, Graph pattern) {
    PatternFamily f;
    f.kind = PatternKind::Explicit;
    f.name = std::move(name);
    f.pattern = std::move(pattern);
    return f;
}

std::vector<FamilyCheck> check_freeness(const Graph& g,
                                        const std::vector<PatternFamily>& fams) {
    std::vector<FamilyCheck> out;
    for (const auto& fam : fams) {
        FamilyCheck fc;
        fc.family = fam;
        switch (fam.kind) {
            case PatternKind::Star:
                if (auto w = find_induced_star(g, fam.star_leaves)) {
                    fc.witness = w->as_vertices();
                    fc.found_pattern = Graph::star(fam.star_leaves);
                }
                break;
            case PatternKind::CycleRange:
                if (auto w = find_induced_cycle_in_range(g, fam.cycle_lo,
                                                         fam.cycle_hi)) {
                    fc.found_pattern = Graph::cycle(static_cast<int>(w->size()));
                    fc.witness = std::move(*w);
                }
                break;
            case PatternKind::TreeFamily:
                if (auto w = find_ts_tree(g, fam.tree_reach)) {
                    fc.found_pattern = w->pattern;
                    fc.witness = std::move(w->vertices);
                }
                break;
            case PatternKind::Explicit:
                if (auto w = contains_induced(g, fam.pattern)) {
                    fc.found_pattern = fam.pattern;
                    fc.witness = std::move(*w);
                }
                break;
        }
        if (fc.witness) {
            // a witness that does not re-check is a detector bug
            auto sub = induced_subgraph(g, *fc.witness);
            assert(sub.graph == fc.found_pattern);
            (void)sub;
        }
        out.push_back(std::move(fc));
    }
    return out;
}

}  // namespace hfree

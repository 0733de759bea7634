#include "hfree/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

#include "format_util.hpp"
#include "hfree/errors.hpp"
#include "hfree/exact.hpp"

namespace hfree {

std::vector<std::vector<int>> ReductionOutput::cliques() const {
    std::vector<std::vector<int>> out(clique_kind.size());
    for (size_t v = 0; v < clique_of.size(); ++v)
        out[clique_of[v]].push_back(static_cast<int>(v));
    return out;
}

int ReductionOutput::rep_vertex(const McsiInstance& inst, int v, int part) const {
    graph.check_vertex(v);
    auto owner = inst.partition.part_of(inst.g.num_vertices());
    auto [a, b] = rep_edge[v];
    if (owner[a] == part) return a;
    if (owner[b] == part) return b;
    throw InputError("rep_vertex: represented edge does not touch that part");
}

namespace {

// g-edges grouped per j-edge; both lists lexicographically sorted, so the
// position of an edge inside its class is a canonical order.
struct EdgeClasses {
    std::vector<std::pair<int, int>> jedges;
    std::vector<std::vector<std::pair<int, int>>> edges;  // per j-edge
    std::vector<int> owner;                               // vertex -> part

    int index(int i, int j) const {
        std::pair<int, int> key{std::min(i, j), std::max(i, j)};
        auto it = std::lower_bound(jedges.begin(), jedges.end(), key);
        assert(it != jedges.end() && *it == key);
        return static_cast<int>(it - jedges.begin());
    }
};

EdgeClasses collect_classes(const McsiInstance& inst) {
    EdgeClasses ec;
    ec.owner = inst.partition.part_of(inst.g.num_vertices());
    ec.jedges = inst.j.edges();
    ec.edges.resize(ec.jedges.size());
    for (auto [u, w] : inst.g.edges()) {
        int i = std::min(ec.owner[u], ec.owner[w]);
        int j = std::max(ec.owner[u], ec.owner[w]);
        ec.edges[ec.index(i, j)].emplace_back(u, w);
    }
    return ec;
}

enum class LinkRule { HalfGraph, Antimatching };

// Lays cliques out one after another so vertex ids stay contiguous per
// clique and vertex order inside a clique follows the class order.
struct GadgetBuilder {
    ReductionOutput out;
    std::vector<std::vector<int>> members;  // per clique

    int add_clique(CliqueKind kind, std::pair<int, int> jedge,
                   const std::vector<std::pair<int, int>>& reps) {
        int id = static_cast<int>(members.size());
        members.emplace_back();
        out.clique_kind.push_back(kind);
        out.clique_jedge.push_back(jedge);
        for (auto rep : reps) {
            int v = static_cast<int>(out.rep_edge.size());
            out.rep_edge.push_back(rep);
            out.clique_of.push_back(id);
            members[id].push_back(v);
        }
        return id;
    }

    // call once all cliques exist; fills in the graph's intra-clique edges
    void seal() {
        out.graph = Graph(static_cast<int>(out.rep_edge.size()));
        for (const auto& clique : members)
            for (size_t i = 0; i < clique.size(); ++i)
                for (size_t j = i + 1; j < clique.size(); ++j)
                    out.graph.add_edge(clique[i], clique[j]);
        out.target_k = static_cast<int>(members.size());
    }

    // keys run parallel to the members of each side; HalfGraph joins v in
    // `from` to w in `to` when key(v) < key(w), Antimatching when they differ
    void link(int from, int to, const std::vector<long long>& from_keys,
              const std::vector<long long>& to_keys, LinkRule rule) {
        const auto& a = members[from];
        const auto& b = members[to];
        assert(from_keys.size() == a.size() && to_keys.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) {
                bool adj = rule == LinkRule::HalfGraph
                               ? from_keys[i] < to_keys[j]
                               : from_keys[i] != to_keys[j];
                if (adj) out.graph.add_edge(a[i], b[j]);
            }
    }

    // per member, the global id of the rep-edge endpoint in `part`
    std::vector<long long> keys_by_part(int clique, const std::vector<int>& owner,
                                        int part) const {
        std::vector<long long> keys;
        keys.reserve(members[clique].size());
        for (int v : members[clique]) {
            auto [u, w] = out.rep_edge[v];
            assert(owner[u] == part || owner[w] == part);
            keys.push_back(owner[u] == part ? u : w);
        }
        return keys;
    }

    // per member, its position in the class (members follow class order)
    std::vector<long long> keys_by_position(int clique) const {
        std::vector<long long> keys(members[clique].size());
        for (size_t i = 0; i < keys.size(); ++i)
            keys[i] = static_cast<long long>(i);
        return keys;
    }
};

void require_reducible(const McsiInstance& inst, const char* who, int z,
                       bool cap_degree) {
    if (!is_normalized(inst))
        throw InputError(std::string(who) + ": instance must be normalized");
    if (z >= 0 && z < 5) throw InputError(std::string(who) + ": need z >= 5");
    if (cap_degree && inst.j.max_degree() > 3)
        throw InputError(std::string(who) +
                         ": constraint graph max degree must be <= 3");
}

}  // namespace

ReductionOutput reduce_k1d(const McsiInstance& inst) {
    require_reducible(inst, "reduce_k1d", -1, false);
    auto ec = collect_classes(inst);
    int mj = static_cast<int>(ec.jedges.size());

    GadgetBuilder gb;
    for (int je = 0; je < mj; ++je)
        gb.add_clique(CliqueKind::Primary, ec.jedges[je], ec.edges[je]);
    gb.seal();

    // j-edges sharing one part: representatives clash exactly when their
    // g-edges avoid each other
    auto shares_part = [](std::pair<int, int> a, std::pair<int, int> b) {
        return a.first == b.first || a.first == b.second ||
               a.second == b.first || a.second == b.second;
    };
    auto disjoint = [](std::pair<int, int> e, std::pair<int, int> f) {
        return e.first != f.first && e.first != f.second &&
               e.second != f.first && e.second != f.second;
    };
    for (int x = 0; x < mj; ++x)
        for (int y = x + 1; y < mj; ++y) {
            if (!shares_part(ec.jedges[x], ec.jedges[y])) continue;
            for (int v : gb.members[x])
                for (int w : gb.members[y])
                    if (disjoint(gb.out.rep_edge[v], gb.out.rep_edge[w]))
                        gb.out.graph.add_edge(v, w);
        }

    gb.out.promised_class = {PatternFamily::star(2 * inst.j.max_degree() + 2)};
    gb.out.soundness = {0, 1};
    return std::move(gb.out);
}

ReductionOutput reduce_vertex_cycle(const McsiInstance& inst, int z) {
    require_reducible(inst, "reduce_vertex_cycle", z, true);
    const int s = z / 2;  // = ceil((z-1)/2)
    auto ec = collect_classes(inst);
    int mj = static_cast<int>(ec.jedges.size());
    int l = inst.num_parts();

    GadgetBuilder gb;
    for (int je = 0; je < mj; ++je)
        gb.add_clique(CliqueKind::Primary, ec.jedges[je], ec.edges[je]);

    // per part, a cycle of cliques: each incident j-edge's primary followed
    // by s fresh copies owned by this cycle
    std::vector<std::vector<int>> cycle_of_part(l);
    for (int i = 0; i < l; ++i) {
        const auto& nb = inst.j.neighbors(i);
        for (auto jn = nb.find_first(); jn != Bitset::npos;
             jn = nb.find_next(jn)) {
            int je = ec.index(i, static_cast<int>(jn));
            cycle_of_part[i].push_back(je);
            for (int p = 0; p < s; ++p)
                cycle_of_part[i].push_back(gb.add_clique(
                    CliqueKind::Secondary, ec.jedges[je], ec.edges[je]));
        }
    }
    gb.seal();
    assert(gb.out.target_k == mj * (1 + 2 * s));

    // consecutive cliques joined by a half-graph over this part's vertex ids
    for (int i = 0; i < l; ++i) {
        const auto& cyc = cycle_of_part[i];
        int len = static_cast<int>(cyc.size());
        for (int p = 0; p < len; ++p) {
            int from = cyc[p];
            int to = cyc[(p + 1) % len];
            gb.link(from, to, gb.keys_by_part(from, ec.owner, i),
                    gb.keys_by_part(to, ec.owner, i), LinkRule::HalfGraph);
        }
    }

    gb.out.promised_class = {PatternFamily::cycles(4, z), PatternFamily::star(5),
                             PatternFamily::trees(s)};
    gb.out.soundness = {s, 6};
    return std::move(gb.out);
}

ReductionOutput reduce_edge_cycle(const McsiInstance& inst, int z) {
    require_reducible(inst, "reduce_edge_cycle", z, true);
    const int s = z / 4;  // = ceil((z-3)/4)
    auto ec = collect_classes(inst);
    int mj = static_cast<int>(ec.jedges.size());
    int l = inst.num_parts();

    GadgetBuilder gb;
    // per j-edge, a cycle of 4*(s+1) copies of its class: four primaries,
    // each trailed by s cycle copies
    std::vector<int> cycle_start(mj);
    for (int je = 0; je < mj; ++je) {
        cycle_start[je] = static_cast<int>(gb.members.size());
        for (int q = 0; q < 4; ++q) {
            gb.add_clique(CliqueKind::Primary, ec.jedges[je], ec.edges[je]);
            for (int p = 0; p < s; ++p)
                gb.add_clique(CliqueKind::Cycle, ec.jedges[je], ec.edges[je]);
        }
    }

    // equality gadget per pair of j-edges meeting at a part: a chain of s
    // copies of the first class between one primary of each
    struct Gadget {
        int part;
        int pa, pb;                 // chosen primaries
        std::vector<int> chain;     // the s fresh copies
    };
    std::vector<Gadget> gadgets;
    std::vector<int> used_primaries(mj, 0);
    for (int i = 0; i < l; ++i) {
        std::vector<int> nb;
        const auto& row = inst.j.neighbors(i);
        for (auto jn = row.find_first(); jn != Bitset::npos;
             jn = row.find_next(jn))
            nb.push_back(static_cast<int>(jn));
        for (size_t x = 0; x < nb.size(); ++x)
            for (size_t y = x + 1; y < nb.size(); ++y) {
                int jea = ec.index(i, nb[x]);
                int jeb = ec.index(i, nb[y]);
                Gadget gd;
                gd.part = i;
                gd.pa = cycle_start[jea] + (s + 1) * used_primaries[jea]++;
                gd.pb = cycle_start[jeb] + (s + 1) * used_primaries[jeb]++;
                for (int p = 0; p < s; ++p)
                    gd.chain.push_back(gb.add_clique(
                        CliqueKind::Equality, ec.jedges[jea], ec.edges[jea]));
                gadgets.push_back(std::move(gd));
            }
    }
    for (int je = 0; je < mj; ++je) assert(used_primaries[je] <= 4);
    gb.seal();
    {
        long long pairs = 0;
        for (int i = 0; i < l; ++i) {
            long long d = static_cast<long long>(inst.j.degree(i));
            pairs += d * (d - 1) / 2;
        }
        assert(gb.out.target_k == 4LL * mj * (s + 1) + s * pairs);
    }

    // edge cycles: half-graph over the class's own edge order
    for (int je = 0; je < mj; ++je) {
        int len = 4 * (s + 1);
        for (int p = 0; p < len; ++p) {
            int from = cycle_start[je] + p;
            int to = cycle_start[je] + (p + 1) % len;
            gb.link(from, to, gb.keys_by_position(from), gb.keys_by_position(to),
                    LinkRule::HalfGraph);
        }
    }

    // equality chains: consecutive copies of the same class disagree on the
    // represented edge; the final hop onto the second class disagrees on the
    // shared part's endpoint
    for (const auto& gd : gadgets) {
        std::vector<int> seq;
        seq.push_back(gd.pa);
        seq.insert(seq.end(), gd.chain.begin(), gd.chain.end());
        for (size_t p = 0; p + 1 < seq.size(); ++p)
            gb.link(seq[p], seq[p + 1], gb.keys_by_position(seq[p]),
                    gb.keys_by_position(seq[p + 1]), LinkRule::Antimatching);
        int last = seq.back();
        gb.link(last, gd.pb, gb.keys_by_part(last, ec.owner, gd.part),
                gb.keys_by_part(gd.pb, ec.owner, gd.part),
                LinkRule::Antimatching);
    }

    gb.out.promised_class = {PatternFamily::cycles(5, z), PatternFamily::star(4)};
    gb.out.soundness = {s, 9};
    return std::move(gb.out);
}

std::pair<Graph, int> cliqueify(const MulticoloredIsInstance& inst) {
    VertexPartition vp{inst.classes};
    vp.validate(inst.g.num_vertices());
    for (const auto& cls : inst.classes)
        if (cls.empty()) throw InputError("cliqueify: empty class");
    Graph g = inst.g;
    for (const auto& cls : inst.classes)
        for (size_t i = 0; i < cls.size(); ++i)
            for (size_t j = i + 1; j < cls.size(); ++j)
                if (cls[i] != cls[j]) g.add_edge(cls[i], cls[j]);
    return {std::move(g), static_cast<int>(inst.classes.size())};
}

CompletenessReport check_completeness(const McsiInstance& inst,
                                      const ReductionOutput& out) {
    CompletenessReport rep;
    rep.target_k = out.target_k;
    auto mv = mcsi_value_exact(inst);
    rep.value = mv.value;
    rep.value_is_one = mv.value == Rational(1);
    rep.alpha = alpha_exact_cliquecover(out.graph, out.cliques()).alpha;

    if (rep.value_is_one) {
        // pick in each clique the vertex standing for the satisfying
        // assignment's own edge
        auto groups = out.cliques();
        rep.witness_ok = true;
        for (int c = 0; c < out.target_k && rep.witness_ok; ++c) {
            auto [i, j] = out.clique_jedge[c];
            std::pair<int, int> want{
                std::min(mv.assignment[i], mv.assignment[j]),
                std::max(mv.assignment[i], mv.assignment[j])};
            int found = -1;
            for (int v : groups[c])
                if (out.rep_edge[v] == want) {
                    found = v;
                    break;
                }
            if (found < 0)
                rep.witness_ok = false;
            else
                rep.witness.push_back(found);
        }
        if (rep.witness_ok)
            rep.witness_ok =
                static_cast<int>(rep.witness.size()) == out.target_k &&
                is_independent(out.graph, rep.witness);
        if (!rep.witness_ok) rep.witness.clear();
    }

    rep.pass = !rep.value_is_one ||
               (rep.alpha == rep.target_k && rep.witness_ok);
    return rep;
}

SoundnessReport check_soundness(const McsiInstance& inst,
                                const ReductionOutput& out,
                                const Rational& gamma) {
    if (gamma <= Rational(0) || gamma >= Rational(1))
        throw InputError("check_soundness: gamma must lie strictly in (0,1)");
    SoundnessReport rep;
    rep.gamma = gamma;
    rep.target_k = out.target_k;
    long long mj = inst.j.num_edges();
    rep.gamma_prime =
        gamma * Rational(mj, static_cast<long long>(out.soundness.divisor) *
                                 out.target_k);
    rep.alpha = alpha_exact(out.graph).alpha;
    rep.value = mcsi_value_exact(inst).value;
    rep.premise = Rational(rep.alpha) >=
                  (Rational(1) - rep.gamma_prime) * Rational(rep.target_k);
    rep.conclusion = rep.value >= Rational(1) - gamma;
    rep.pass = !rep.premise || rep.conclusion;
    return rep;
}

Sidecar make_sidecar(const ReductionOutput& out) {
    Sidecar sc;
    sc.target_k = out.target_k;
    sc.soundness = out.soundness;
    sc.promised = out.promised_class;
    sc.vertices.reserve(out.rep_edge.size());
    for (size_t v = 0; v < out.rep_edge.size(); ++v) {
        int c = out.clique_of[v];
        sc.vertices.push_back({c, out.clique_kind[c], out.rep_edge[v]});
    }
    return sc;
}

ReductionOutput apply_sidecar(const McsiInstance& inst, Graph graph,
                              const Sidecar& sc) {
    if (!is_normalized(inst))
        throw InputError("apply_sidecar: instance must be normalized");
    if (static_cast<size_t>(graph.num_vertices()) != sc.vertices.size())
        throw InputError("apply_sidecar: vertex count mismatch with graph");
    if (sc.soundness.s < 0 || sc.soundness.divisor < 1)
        throw InputError("apply_sidecar: bad soundness parameters");

    ReductionOutput out;
    out.target_k = sc.target_k;
    out.soundness = sc.soundness;
    out.promised_class = sc.promised;

    auto owner = inst.partition.part_of(inst.g.num_vertices());
    int n_src = inst.g.num_vertices();
    int num_cliques = 0;
    for (const auto& vm : sc.vertices) {
        if (vm.clique < 0) throw InputError("apply_sidecar: negative clique id");
        num_cliques = std::max(num_cliques, vm.clique + 1);
    }
    if (num_cliques != sc.target_k)
        throw InputError("apply_sidecar: target_k does not match clique count");

    out.clique_kind.assign(num_cliques, CliqueKind::Primary);
    out.clique_jedge.assign(num_cliques, {-1, -1});
    std::vector<bool> seen(num_cliques, false);
    for (const auto& vm : sc.vertices) {
        auto [u, w] = vm.rep;
        if (u < 0 || w < 0 || u >= n_src || w >= n_src || u >= w)
            throw InputError("apply_sidecar: malformed represented edge");
        if (!inst.g.has_edge(u, w))
            throw InputError("apply_sidecar: represented edge not in instance");
        std::pair<int, int> je{std::min(owner[u], owner[w]),
                               std::max(owner[u], owner[w])};
        if (!seen[vm.clique]) {
            seen[vm.clique] = true;
            out.clique_kind[vm.clique] = vm.kind;
            out.clique_jedge[vm.clique] = je;
        } else {
            if (out.clique_kind[vm.clique] != vm.kind)
                throw InputError("apply_sidecar: clique kind disagreement");
            if (out.clique_jedge[vm.clique] != je)
                throw InputError(
                    "apply_sidecar: clique spans several part pairs");
        }
        out.clique_of.push_back(vm.clique);
        out.rep_edge.push_back(vm.rep);
    }
    for (int c = 0; c < num_cliques; ++c)
        if (!seen[c]) throw InputError("apply_sidecar: empty clique id");

    out.graph = std::move(graph);
    return out;
}

namespace {

char kind_letter(CliqueKind k) {
    switch (k) {
        case CliqueKind::Primary: return 'p';
        case CliqueKind::Secondary: return 's';
        case CliqueKind::Cycle: return 'c';
        case CliqueKind::Equality: return 'q';
    }
    throw InputError("unknown clique kind");
}

CliqueKind kind_from_letter(const std::string& t) {
    if (t == "p") return CliqueKind::Primary;
    if (t == "s") return CliqueKind::Secondary;
    if (t == "c") return CliqueKind::Cycle;
    if (t == "q") return CliqueKind::Equality;
    throw ParseError("sidecar: unknown clique kind '" + t + "'");
}

}  // namespace

void write_sidecar(std::ostream& os, const Sidecar& sc) {
    os << "target_k " << sc.target_k << " s " << sc.soundness.s << " D "
       << sc.soundness.divisor << "\n";
    for (const auto& fam : sc.promised) {
        switch (fam.kind) {
            case PatternKind::Star:
                os << "promised star " << fam.star_leaves << "\n";
                break;
            case PatternKind::CycleRange:
                os << "promised cycles " << fam.cycle_lo << " " << fam.cycle_hi
                   << "\n";
                break;
            case PatternKind::TreeFamily:
                os << "promised trees " << fam.tree_reach << "\n";
                break;
            case PatternKind::Explicit:
                throw InputError(
                    "sidecar: explicit pattern families are not serializable");
        }
    }
    for (size_t v = 0; v < sc.vertices.size(); ++v) {
        const auto& vm = sc.vertices[v];
        os << "v " << v + 1 << " clique " << vm.clique + 1 << " kind "
           << kind_letter(vm.kind) << " rep " << vm.rep.first + 1 << " "
           << vm.rep.second + 1 << "\n";
    }
}

Sidecar read_sidecar(std::istream& in) {
    detail::LineReader lines(in);
    Sidecar sc;

    std::string line;
    if (!lines.next(line)) throw ParseError("sidecar: empty input");
    {
        auto f = detail::split_fields(line);
        if (f.size() != 6 || f[0] != "target_k" || f[2] != "s" || f[4] != "D")
            throw ParseError("sidecar: bad header line");
        sc.target_k = static_cast<int>(detail::parse_int(f[1], "target_k"));
        sc.soundness.s = static_cast<int>(detail::parse_int(f[3], "s"));
        sc.soundness.divisor =
            static_cast<int>(detail::parse_int(f[5], "D"));
        if (sc.target_k < 0 || sc.soundness.s < 0 || sc.soundness.divisor < 1)
            throw ParseError("sidecar: header values out of range");
    }

    bool in_vertices = false;
    while (lines.next(line)) {
        auto f = detail::split_fields(line);
        if (f.empty()) throw ParseError("sidecar: blank line");
        if (f[0] == "promised") {
            if (in_vertices)
                throw ParseError("sidecar: promised line after vertex lines");
            if (f.size() == 3 && f[1] == "star") {
                int c = static_cast<int>(detail::parse_int(f[2], "star size"));
                if (c < 1) throw ParseError("sidecar: star needs >= 1 leaf");
                sc.promised.push_back(PatternFamily::star(c));
            } else if (f.size() == 4 && f[1] == "cycles") {
                int lo = static_cast<int>(detail::parse_int(f[2], "cycle lo"));
                int hi = static_cast<int>(detail::parse_int(f[3], "cycle hi"));
                if (lo < 3 || hi < lo)
                    throw ParseError("sidecar: bad cycle range");
                sc.promised.push_back(PatternFamily::cycles(lo, hi));
            } else if (f.size() == 3 && f[1] == "trees") {
                int s = static_cast<int>(detail::parse_int(f[2], "tree reach"));
                if (s < 1) throw ParseError("sidecar: trees needs s >= 1");
                sc.promised.push_back(PatternFamily::trees(s));
            } else {
                throw ParseError("sidecar: bad promised line");
            }
        } else if (f[0] == "v") {
            in_vertices = true;
            if (f.size() != 9 || f[2] != "clique" || f[4] != "kind" ||
                f[6] != "rep")
                throw ParseError("sidecar: bad vertex line");
            int id = static_cast<int>(detail::parse_int(f[1], "vertex id"));
            if (id != static_cast<int>(sc.vertices.size()) + 1)
                throw ParseError("sidecar: vertex lines must run 1..n in order");
            int clique = static_cast<int>(detail::parse_int(f[3], "clique id"));
            CliqueKind kind = kind_from_letter(f[5]);
            int u = static_cast<int>(detail::parse_int(f[7], "rep endpoint"));
            int w = static_cast<int>(detail::parse_int(f[8], "rep endpoint"));
            if (clique < 1 || u < 1 || w < 1 || u >= w)
                throw ParseError("sidecar: vertex line values out of range");
            sc.vertices.push_back({clique - 1, kind, {u - 1, w - 1}});
        } else {
            throw ParseError("sidecar: unknown line '" + f[0] + "'");
        }
    }
    return sc;
}

Sidecar read_sidecar_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_sidecar(in);
}

void write_sidecar_file(const std::string& path, const Sidecar& sc) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    write_sidecar(out, sc);
}

Sidecar sidecar_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_sidecar(in);
}

std::string sidecar_to_string(const Sidecar& sc) {
    std::ostringstream out;
    write_sidecar(out, sc);
    return out.str();
}

}  // namespace hfree

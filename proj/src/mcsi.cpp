#include "hfree/mcsi.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "format_util.hpp"

namespace hfree {

void McsiInstance::validate() const {
    partition.validate(g.num_vertices());
    if (j.num_vertices() != num_parts())
        throw InputError("constraint graph size does not match part count");
}

Rational value(const McsiInstance& inst, const Assignment& phi) {
    inst.validate();
    auto jedges = inst.j.edges();
    if (jedges.empty()) throw InputError("value: constraint graph has no edges");
    if (static_cast<int>(phi.size()) != inst.num_parts())
        throw InputError("value: assignment length does not match part count");
    auto owner = inst.partition.part_of(inst.g.num_vertices());
    for (int i = 0; i < inst.num_parts(); ++i) {
        inst.g.check_vertex(phi[i]);
        if (owner[phi[i]] != i)
            throw InputError("value: assigned vertex is not in its part");
    }
    long long sat = 0;
    for (auto [i, j] : jedges)
        if (inst.g.has_edge(phi[i], phi[j])) ++sat;
    return Rational(sat, static_cast<long long>(jedges.size()));
}

long long count_pair_edges(const McsiInstance& inst, int i, int j) {
    const auto& a = inst.partition.parts.at(i);
    Bitset in_b = make_bitset(inst.g.num_vertices(), inst.partition.parts.at(j));
    long long count = 0;
    for (int u : a) count += static_cast<long long>((inst.g.neighbors(u) & in_b).count());
    return count;
}

bool is_normalized(const McsiInstance& inst) {
    inst.validate();
    if (inst.j.num_edges() == 0) return false;
    auto owner = inst.partition.part_of(inst.g.num_vertices());
    for (auto [u, w] : inst.g.edges()) {
        if (owner[u] == owner[w]) return false;
        if (!inst.j.has_edge(owner[u], owner[w])) return false;
    }
    for (auto [i, j] : inst.j.edges())
        if (count_pair_edges(inst, i, j) == 0) return false;
    for (int i = 0; i < inst.num_parts(); ++i)
        if (inst.j.degree(i) == 0) return false;
    return true;
}

McsiInstance normalize(const McsiInstance& inst) {
    inst.validate();
    int n = inst.g.num_vertices();
    int l = inst.num_parts();
    auto owner = inst.partition.part_of(n);

    // keep only cross-part edges covered by j
    Graph g1(n);
    for (auto [u, w] : inst.g.edges())
        if (owner[u] != owner[w] && inst.j.has_edge(owner[u], owner[w]))
            g1.add_edge(u, w);

    McsiInstance stage{g1, inst.partition, inst.j};
    Graph j2(l);
    for (auto [i, j] : inst.j.edges())
        if (count_pair_edges(stage, i, j) > 0) j2.add_edge(i, j);

    std::vector<int> kept_parts;
    for (int i = 0; i < l; ++i)
        if (j2.degree(i) > 0) kept_parts.push_back(i);
    if (kept_parts.empty())
        throw DegenerateInstanceError("normalize: no usable constraint edges remain");

    std::vector<int> new_part(l, -1);
    for (size_t i = 0; i < kept_parts.size(); ++i)
        new_part[kept_parts[i]] = static_cast<int>(i);

    std::vector<int> kept_vertices;
    for (int v = 0; v < n; ++v)
        if (new_part[owner[v]] != -1) kept_vertices.push_back(v);
    std::vector<int> new_id(n, -1);
    for (size_t i = 0; i < kept_vertices.size(); ++i)
        new_id[kept_vertices[i]] = static_cast<int>(i);

    McsiInstance out;
    out.g = Graph(static_cast<int>(kept_vertices.size()));
    for (auto [u, w] : g1.edges())
        if (new_id[u] != -1 && new_id[w] != -1) out.g.add_edge(new_id[u], new_id[w]);

    out.partition.parts.resize(kept_parts.size());
    for (size_t i = 0; i < kept_parts.size(); ++i) {
        for (int v : inst.partition.parts[kept_parts[i]])
            out.partition.parts[i].push_back(new_id[v]);
        std::sort(out.partition.parts[i].begin(), out.partition.parts[i].end());
    }

    out.j = Graph(static_cast<int>(kept_parts.size()));
    for (auto [i, j] : j2.edges()) out.j.add_edge(new_part[i], new_part[j]);

    assert(is_normalized(out));
    return out;
}

namespace {

// deterministic draw helpers on top of mt19937_64
int draw_below(std::mt19937_64& rng, int k) {
    return static_cast<int>(rng() % static_cast<uint64_t>(k));
}

bool draw_chance(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

McsiInstance gen_planted(int parts, int max_j_degree, int part_size,
                         double extra_edge_prob, uint64_t seed) {
    if (parts < 1) throw InputError("gen_planted: need at least one part");
    if (part_size < 1) throw InputError("gen_planted: need part_size >= 1");
    if (extra_edge_prob < 0.0 || extra_edge_prob > 1.0)
        throw InputError("gen_planted: extra_edge_prob must be in [0,1]");
    int t = std::min(max_j_degree, parts - 1);
    if (t < 1)
        throw DegenerateInstanceError("gen_planted: parameters force an empty constraint graph");

    std::mt19937_64 rng(seed);
    Graph full_j = near_regular_graph(parts, t);
    Graph j(parts);
    auto jedges_full = full_j.edges();
    for (auto [a, b] : jedges_full)
        if (!draw_chance(rng, 0.2)) j.add_edge(a, b);
    if (j.num_edges() == 0) j.add_edge(jedges_full[0].first, jedges_full[0].second);

    McsiInstance inst;
    inst.g = Graph(parts * part_size);
    inst.j = j;
    inst.partition.parts.resize(parts);
    for (int i = 0; i < parts; ++i)
        for (int v = 0; v < part_size; ++v)
            inst.partition.parts[i].push_back(i * part_size + v);

    Assignment phi(parts);
    for (int i = 0; i < parts; ++i)
        phi[i] = inst.partition.parts[i][draw_below(rng, part_size)];

    for (auto [a, b] : j.edges()) {
        inst.g.add_edge(phi[a], phi[b]);
        for (int u : inst.partition.parts[a])
            for (int w : inst.partition.parts[b]) {
                if (u == phi[a] && w == phi[b]) continue;
                if (draw_chance(rng, extra_edge_prob)) inst.g.add_edge(u, w);
            }
    }
    return normalize(inst);
}

Graph realize_degree_sequence(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size());
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        if (seq[i] < 0) throw InputError("degree sequence: negative degree");
        if (i > 0 && seq[i] > seq[i - 1])
            throw InputError("degree sequence: not sorted non-increasing");
        sum += seq[i];
    }
    if (sum % 2 != 0) throw ParityError("degree sequence: odd degree sum");

    // Erdos-Gallai: sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += seq[k - 1];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(seq[i], k);
        if (prefix > rhs)
            throw InfeasibleSequenceError(
                "degree sequence: Erdos-Gallai inequality fails at k=" +
                    std::to_string(k),
                k);
    }

    // Havel-Hakimi with original indices, so vertex i ends at degree seq[i]
    Graph g(n);
    std::vector<std::pair<int, int>> rem(n);  // (remaining degree, vertex)
    for (int i = 0; i < n; ++i) rem[i] = {seq[i], i};
    for (;;) {
        std::sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        if (rem[0].first == 0) break;
        int d = rem[0].first;
        int v = rem[0].second;
        rem[0].first = 0;
        assert(d < static_cast<int>(rem.size()));
        for (int k = 1; k <= d; ++k) {
            assert(rem[k].first > 0);
            g.add_edge(v, rem[k].second);
            --rem[k].first;
        }
    }
    for (int i = 0; i < n; ++i) assert(g.degree(i) == seq[i]);
    return g;
}

Graph near_regular_graph(int l, int t) {
    if (t < 1 || t >= l)
        throw InputError("near_regular_graph: need 1 <= t < l");
    std::vector<int> seq(l, t);
    if ((static_cast<long long>(t) * l) % 2 != 0) seq[l - 1] = t - 1;
    return realize_degree_sequence(seq);
}

McsiInstance sparsify(const McsiInstance& inst, int t) {
    if (!is_normalized(inst)) throw InputError("sparsify: instance not normalized");
    int l = inst.num_parts();
    if (inst.j != Graph::complete(l))
        throw InputError("sparsify: constraint graph must be complete");
    if (t < 1 || t >= l) throw InputError("sparsify: need 1 <= t < l");

    Graph jprime = near_regular_graph(l, t);
    auto owner = inst.partition.part_of(inst.g.num_vertices());
    McsiInstance out;
    out.g = Graph(inst.g.num_vertices());
    for (auto [u, w] : inst.g.edges())
        if (jprime.has_edge(owner[u], owner[w])) out.g.add_edge(u, w);
    out.partition = inst.partition;
    out.j = jprime;
    return normalize(out);
}

using detail::LineReader;
using detail::parse_int;
using detail::split_fields;

McsiInstance read_mcsi(std::istream& in) {
    LineReader lines(in);
    std::string line;
    if (!lines.next(line)) throw ParseError("empty mcsi file");
    auto f = split_fields(line);
    if (f.size() != 3 || f[0] != "mcsi")
        throw ParseError("expected 'mcsi <l> <n>' header");
    long long l = parse_int(f[1], "l");
    long long n = parse_int(f[2], "n");
    if (l < 1) throw ParseError("mcsi: need at least one part");
    if (l > 1'000'000 || n > 10'000'000) throw ParseError("mcsi: too large");

    McsiInstance inst;
    inst.g = Graph(static_cast<int>(n));
    inst.j = Graph(static_cast<int>(l));
    inst.partition.parts.resize(static_cast<size_t>(l));

    Bitset seen(static_cast<size_t>(n));
    for (long long i = 1; i <= l; ++i) {
        if (!lines.next(line)) throw ParseError("mcsi: missing part line");
        f = split_fields(line);
        if (f.size() < 2 || f[0] != "part")
            throw ParseError("mcsi: expected 'part <i> <v ...>' line");
        if (parse_int(f[1], "part index") != i)
            throw ParseError("mcsi: part lines must appear in order 1..l");
        for (size_t k = 2; k < f.size(); ++k) {
            long long v = parse_int(f[k], "part vertex");
            if (v < 1 || v > n) throw ParseError("mcsi: part vertex out of range");
            if (seen.test(static_cast<size_t>(v - 1)))
                throw ParseError("mcsi: parts overlap");
            seen.set(static_cast<size_t>(v - 1));
            inst.partition.parts[static_cast<size_t>(i - 1)].push_back(
                static_cast<int>(v - 1));
        }
    }
    if (static_cast<long long>(seen.count()) != n)
        throw ParseError("mcsi: parts do not cover all vertices");

    bool in_gedges = false;
    while (lines.next(line)) {
        f = split_fields(line);
        if (f.size() == 3 && f[0] == "jedge") {
            if (in_gedges) throw ParseError("mcsi: jedge after gedge lines");
            long long a = parse_int(f[1], "jedge i");
            long long b = parse_int(f[2], "jedge j");
            if (a < 1 || b < 1 || a > l || b > l)
                throw ParseError("mcsi: jedge index out of range");
            if (a >= b) throw ParseError("mcsi: jedge needs i < j");
            if (inst.j.has_edge(static_cast<int>(a - 1), static_cast<int>(b - 1)))
                throw ParseError("mcsi: duplicate jedge");
            inst.j.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
        } else if (f.size() == 3 && f[0] == "gedge") {
            in_gedges = true;
            long long u = parse_int(f[1], "gedge u");
            long long w = parse_int(f[2], "gedge w");
            if (u < 1 || w < 1 || u > n || w > n)
                throw ParseError("mcsi: gedge endpoint out of range");
            if (u >= w) throw ParseError("mcsi: gedge needs u < w");
            if (inst.g.has_edge(static_cast<int>(u - 1), static_cast<int>(w - 1)))
                throw ParseError("mcsi: duplicate gedge");
            inst.g.add_edge(static_cast<int>(u - 1), static_cast<int>(w - 1));
        } else {
            throw ParseError("mcsi: unknown line '" + line + "'");
        }
    }
    inst.validate();
    return inst;
}

void write_mcsi(std::ostream& out, const McsiInstance& inst) {
    inst.validate();
    out << "mcsi " << inst.num_parts() << ' ' << inst.g.num_vertices() << '\n';
    for (int i = 0; i < inst.num_parts(); ++i) {
        out << "part " << i + 1;
        for (int v : inst.partition.parts[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : inst.j.edges())
        out << "jedge " << a + 1 << ' ' << b + 1 << '\n';
    for (auto [u, w] : inst.g.edges())
        out << "gedge " << u + 1 << ' ' << w + 1 << '\n';
}

McsiInstance read_mcsi_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_mcsi(in);
}

void write_mcsi_file(const std::string& path, const McsiInstance& inst) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    write_mcsi(out, inst);
}

McsiInstance mcsi_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_mcsi(in);
}

std::string mcsi_to_string(const McsiInstance& inst) {
    std::ostringstream out;
    write_mcsi(out, inst);
    return out.str();
}

}  // namespace hfree

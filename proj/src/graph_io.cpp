#include "hfree/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "format_util.hpp"

namespace hfree {

using detail::LineReader;
using detail::parse_int;
using detail::split_fields;

Graph read_graph(std::istream& in) {
    LineReader lines(in);
    std::string line;
    bool have_header = false;
    Graph g;
    long long declared_m = 0, seen_m = 0;

    while (lines.next(line)) {
        if (line.rfind("c ", 0) == 0) continue;
        auto f = split_fields(line);
        if (!have_header) {
            if (f.size() != 4 || f[0] != "p" || f[1] != "edge")
                throw ParseError("expected 'p edge <n> <m>' header");
            long long n = parse_int(f[2], "n");
            declared_m = parse_int(f[3], "m");
            if (n > 10'000'000) throw ParseError("graph too large");
            g = Graph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        if (f.size() != 3 || f[0] != "e")
            throw ParseError("expected 'e <u> <v>' line");
        long long u = parse_int(f[1], "u");
        long long v = parse_int(f[2], "v");
        if (u < 1 || v < 1 || u > g.num_vertices() || v > g.num_vertices())
            throw ParseError("edge endpoint out of range");
        if (u >= v) throw ParseError("edge endpoints must satisfy u < v");
        if (++seen_m > declared_m) throw ParseError("more edges than declared");
        int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
        if (g.has_edge(a, b)) throw ParseError("duplicate edge line");
        g.add_edge(a, b);
    }
    if (!have_header) throw ParseError("missing 'p edge' header");
    if (seen_m != declared_m) throw ParseError("fewer edges than declared");
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    write_graph(out, g);
}

Graph graph_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace hfree

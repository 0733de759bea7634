// Batch front door: generators, reductions, solvers, detectors and the
// completeness/soundness harnesses, all line-oriented and scriptable.
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hfree/approx.hpp"
#include "hfree/detect.hpp"
#include "hfree/errors.hpp"
#include "hfree/exact.hpp"
#include "hfree/graph.hpp"
#include "hfree/graph_io.hpp"
#include "hfree/mcsi.hpp"
#include "hfree/rational.hpp"
#include "hfree/reductions.hpp"
#include "hfree/selftest.hpp"

namespace {

using nlohmann::json;

// Every text line has a structural twin; --json-lines swaps them in.
struct Emitter {
    bool json_lines = false;

    void line(const json& rec, const std::string& text) const {
        if (json_lines)
            std::cout << rec.dump() << '\n';
        else
            std::cout << text << '\n';
    }
};

std::vector<int> one_indexed(const std::vector<int>& ids) {
    std::vector<int> out;
    out.reserve(ids.size());
    for (int v : ids) out.push_back(v + 1);
    return out;
}

std::string join(const std::vector<int>& ids) {
    std::ostringstream os;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ' ';
        os << ids[i];
    }
    return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int emit_family_checks(const Emitter& em,
                       const std::vector<hfree::FamilyCheck>& checks) {
    int witnesses = 0;
    for (const auto& fc : checks) {
        std::string label = fc.family.label();
        if (fc.witness) {
            ++witnesses;
            auto ids = one_indexed(*fc.witness);
            em.line({{"verdict", "witness"},
                     {"family", label},
                     {"vertices", ids}},
                    "witness " + label + " " + join(ids));
        } else {
            em.line({{"verdict", "free"}, {"family", label}},
                    "free " + label);
        }
    }
    return witnesses;
}

hfree::McsiInstance load_instance(const std::string& path) {
    return hfree::normalize(hfree::read_mcsi_file(path));
}

int run_reduce(const Emitter& em, const hfree::McsiInstance& inst,
               const hfree::ReductionOutput& out, const std::string& graph_path,
               const std::string& meta_path) {
    (void)inst;
    hfree::write_graph_file(graph_path, out.graph);
    hfree::write_sidecar_file(meta_path, hfree::make_sidecar(out));
    std::ostringstream os;
    os << "target_k " << out.target_k << " vertices "
       << out.graph.num_vertices() << " edges " << out.graph.num_edges()
       << " s " << out.soundness.s << " D " << out.soundness.divisor;
    em.line({{"target_k", out.target_k},
             {"vertices", out.graph.num_vertices()},
             {"edges", out.graph.num_edges()},
             {"s", out.soundness.s},
             {"D", out.soundness.divisor}},
            os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gadget reductions, exact and local-search independent set solvers, "
        "and forbidden-pattern detectors for hereditary graph classes"};
    app.require_subcommand(1);
    app.fallthrough();

    Emitter em;
    uint64_t budget = hfree::kDefaultNodeBudget;
    app.add_flag("--json-lines", em.json_lines,
                 "emit one JSON record per output line");
    app.add_option("--budget", budget, "node budget for the exact solvers")
        ->envname("HFREE_BUDGET");

    std::function<int()> action;

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand(
        "gen", "generate a planted-assignment instance (value 1 by design)");
    gen->fallthrough();
    struct {
        int parts = 4, max_j_degree = 3, part_size = 2;
        double extra_edge_prob = 0.3;
        uint64_t seed = 1;
        std::string out;
    } g;
    gen->add_option("--parts", g.parts, "number of parts (>= 2)");
    gen->add_option("--max-j-degree", g.max_j_degree,
                    "constraint graph degree cap");
    gen->add_option("--part-size", g.part_size, "vertices per part");
    gen->add_option("--extra-edge-prob", g.extra_edge_prob,
                    "density of non-planted candidate edges");
    gen->add_option("--seed", g.seed, "RNG seed; output is a pure function of it");
    gen->add_option("output", g.out, "instance file to write")->required();
    gen->callback([&] {
        action = [&]() {
            auto inst = hfree::gen_planted(g.parts, g.max_j_degree, g.part_size,
                                           g.extra_edge_prob, g.seed);
            hfree::write_mcsi_file(g.out, inst);
            std::ostringstream os;
            os << "generated " << g.out << " parts " << inst.num_parts()
               << " vertices " << inst.g.num_vertices() << " jedges "
               << inst.j.num_edges() << " gedges " << inst.g.num_edges();
            em.line({{"file", g.out},
                     {"parts", inst.num_parts()},
                     {"vertices", inst.g.num_vertices()},
                     {"jedges", inst.j.num_edges()},
                     {"gedges", inst.g.num_edges()}},
                    os.str());
            return 0;
        };
    });

    // reduce ---------------------------------------------------------------
    auto* reduce = app.add_subcommand(
        "reduce", "turn an instance into a gadget graph plus metadata sidecar");
    reduce->require_subcommand(1);
    reduce->fallthrough();
    struct {
        int z = 5, t = 2;
        std::string in, out_graph, out_meta;
    } r;

    auto add_gadget_sub = [&](const std::string& name, const std::string& help,
                              auto make) {
        auto* sub = reduce->add_subcommand(name, help);
        sub->fallthrough();
        if (name != "k1d")
            sub->add_option("--z", r.z, "forbidden cycle lengths reach up to z");
        sub->add_option("input", r.in, "instance file")->required();
        sub->add_option("graph", r.out_graph, "gadget graph file to write")
            ->required();
        sub->add_option("meta", r.out_meta, "metadata sidecar to write")
            ->required();
        sub->callback([&, make] {
            action = [&, make]() {
                auto inst = load_instance(r.in);
                return run_reduce(em, inst, make(inst), r.out_graph, r.out_meta);
            };
        });
    };
    add_gadget_sub("k1d", "pair-conflict graph: one vertex per instance edge",
                   [&](const hfree::McsiInstance& i) { return hfree::reduce_k1d(i); });
    add_gadget_sub("vcycle",
                   "per-part cycles of cliques linked by half-graphs",
                   [&](const hfree::McsiInstance& i) {
                       return hfree::reduce_vertex_cycle(i, r.z);
                   });
    add_gadget_sub("ecycle",
                   "per-constraint clique cycles joined by equality gadgets",
                   [&](const hfree::McsiInstance& i) {
                       return hfree::reduce_edge_cycle(i, r.z);
                   });

    auto* sparsify = reduce->add_subcommand(
        "sparsify", "replace a complete constraint graph by a near-regular one");
    sparsify->fallthrough();
    sparsify->add_option("--t", r.t, "target constraint degree")->required();
    sparsify->add_option("input", r.in, "instance file (complete constraints)")
        ->required();
    sparsify->add_option("output", r.out_graph, "instance file to write")
        ->required();
    sparsify->callback([&] {
        action = [&]() {
            auto inst = hfree::sparsify(load_instance(r.in), r.t);
            hfree::write_mcsi_file(r.out_graph, inst);
            std::ostringstream os;
            os << "sparsified parts " << inst.num_parts() << " jedges "
               << inst.j.num_edges() << " gedges " << inst.g.num_edges();
            em.line({{"parts", inst.num_parts()},
                     {"jedges", inst.j.num_edges()},
                     {"gedges", inst.g.num_edges()}},
                    os.str());
            return 0;
        };
    });

    auto* cliqueify = reduce->add_subcommand(
        "cliqueify", "complete each part into a clique (parts act as colors)");
    cliqueify->fallthrough();
    cliqueify->add_option("input", r.in, "instance file; constraints ignored")
        ->required();
    cliqueify->add_option("graph", r.out_graph, "graph file to write")
        ->required();
    cliqueify->callback([&] {
        action = [&]() {
            auto inst = hfree::read_mcsi_file(r.in);
            auto [graph, k] =
                hfree::cliqueify({inst.g, inst.partition.parts});
            hfree::write_graph_file(r.out_graph, graph);
            em.line({{"k", k}}, "k " + std::to_string(k));
            return 0;
        };
    });

    // solve ----------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "independent set solvers");
    solve->require_subcommand(1);
    solve->fallthrough();
    struct {
        int a = 1, b = 3;
        std::string in;
    } s;

    auto* exact = solve->add_subcommand("exact", "branch-and-bound optimum");
    exact->fallthrough();
    exact->add_option("input", s.in, "graph file")->required();
    exact->callback([&] {
        action = [&]() {
            auto g2 = hfree::read_graph_file(s.in);
            auto res = hfree::alpha_exact(g2, budget);
            em.line({{"alpha", res.alpha}}, "alpha " + std::to_string(res.alpha));
            em.line({{"nodes", res.nodes_explored}},
                    "nodes " + std::to_string(res.nodes_explored));
            auto ids = one_indexed(res.witness.vertices());
            em.line({{"witness", ids}}, "witness " + join(ids));
            return 0;
        };
    });

    auto* approx = solve->add_subcommand(
        "approx", "swap local search with a certified size bound");
    approx->fallthrough();
    approx->add_option("--a", s.a, "forbidden biclique side a (1 <= a <= 4)");
    approx->add_option("--b", s.b, "forbidden biclique side b (a <= b)");
    approx->add_option("input", s.in, "graph file")->required();
    approx->callback([&] {
        action = [&]() {
            auto g2 = hfree::read_graph_file(s.in);
            auto [set, trace] = hfree::local_search_kab(g2, s.a, s.b);
            int size = static_cast<int>(set.vertices().size());
            em.line({{"size", size}}, "size " + std::to_string(size));
            em.line({{"steps", trace.steps.size()}},
                    "steps " + std::to_string(trace.steps.size()));
            std::ostringstream os;
            os << "bound " << hfree::kab_alpha_bound(s.a, s.b, size);
            em.line({{"bound", hfree::kab_alpha_bound(s.a, s.b, size)}},
                    os.str());
            auto ids = one_indexed(set.vertices());
            em.line({{"witness", ids}}, "witness " + join(ids));
            return 0;
        };
    });

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "search a graph for forbidden induced patterns");
    verify->require_subcommand(1);
    verify->fallthrough();
    struct {
        int c = 0, lo = 0, hi = 0, s = 0;
        std::string in, meta;
    } v;

    auto family_action = [&](hfree::PatternFamily fam) {
        auto g2 = hfree::read_graph_file(v.in);
        int witnesses = emit_family_checks(em, hfree::check_freeness(g2, {fam}));
        return witnesses ? 1 : 0;
    };

    auto* stars = verify->add_subcommand("stars", "induced K_{1,c}");
    stars->fallthrough();
    stars->add_option("c", v.c, "number of leaves")->required();
    stars->add_option("input", v.in, "graph file")->required();
    stars->callback([&, family_action] {
        action = [&, family_action]() {
            if (v.c < 1) throw hfree::InputError("stars: c must be >= 1");
            return family_action(hfree::PatternFamily::star(v.c));
        };
    });

    auto* cycles = verify->add_subcommand("cycles", "induced C_p, p in [lo,hi]");
    cycles->fallthrough();
    cycles->add_option("lo", v.lo, "shortest length, >= 3")->required();
    cycles->add_option("hi", v.hi, "longest length")->required();
    cycles->add_option("input", v.in, "graph file")->required();
    cycles->callback([&, family_action] {
        action = [&, family_action]() {
            if (v.lo < 3 || v.hi < v.lo)
                throw hfree::InputError("cycles: need 3 <= lo <= hi");
            return family_action(hfree::PatternFamily::cycles(v.lo, v.hi));
        };
    });

    auto* trees = verify->add_subcommand(
        "trees", "induced trees with two branch vertices within distance s");
    trees->fallthrough();
    trees->add_option("s", v.s, "branch vertex distance reach, >= 1")
        ->required();
    trees->add_option("input", v.in, "graph file")->required();
    trees->callback([&, family_action] {
        action = [&, family_action]() {
            if (v.s < 1) throw hfree::InputError("trees: s must be >= 1");
            return family_action(hfree::PatternFamily::trees(v.s));
        };
    });

    auto* promised = verify->add_subcommand(
        "promised", "check every pattern family promised by a sidecar");
    promised->fallthrough();
    promised->add_option("input", v.in, "graph file")->required();
    promised->add_option("meta", v.meta, "metadata sidecar")->required();
    promised->callback([&] {
        action = [&]() {
            auto g2 = hfree::read_graph_file(v.in);
            auto sc = hfree::read_sidecar_file(v.meta);
            int witnesses =
                emit_family_checks(em, hfree::check_freeness(g2, sc.promised));
            return witnesses ? 1 : 0;
        };
    });

    // check ----------------------------------------------------------------
    auto* check = app.add_subcommand(
        "check", "replay a reduction's optimum-transfer guarantees");
    check->require_subcommand(1);
    check->fallthrough();
    struct {
        std::string inst, graph, meta, gamma = "1/10";
    } c;

    auto load_output = [&](const hfree::McsiInstance& inst) {
        return hfree::apply_sidecar(inst, hfree::read_graph_file(c.graph),
                                    hfree::read_sidecar_file(c.meta));
    };

    auto* completeness = check->add_subcommand(
        "completeness", "value 1 must force an independent set of size target_k");
    completeness->fallthrough();
    completeness->add_option("instance", c.inst, "source instance file")
        ->required();
    completeness->add_option("graph", c.graph, "gadget graph file")->required();
    completeness->add_option("meta", c.meta, "metadata sidecar")->required();
    completeness->callback([&, load_output] {
        action = [&, load_output]() {
            auto inst = load_instance(c.inst);
            auto rep = hfree::check_completeness(inst, load_output(inst));
            em.line({{"value", hfree::to_string(rep.value)}},
                    "value " + hfree::to_string(rep.value));
            em.line({{"target_k", rep.target_k}},
                    "target_k " + std::to_string(rep.target_k));
            em.line({{"alpha", rep.alpha}}, "alpha " + std::to_string(rep.alpha));
            if (rep.value_is_one) {
                auto ids = one_indexed(rep.witness);
                em.line({{"witness", ids}, {"independent", rep.witness_ok}},
                        "witness " + join(ids));
            }
            em.line({{"completeness", rep.pass}},
                    std::string("completeness ") + (rep.pass ? "PASS" : "FAIL"));
            return rep.pass ? 0 : 1;
        };
    });

    auto* soundness = check->add_subcommand(
        "soundness",
        "a near-target_k independent set must force a near-1 value");
    soundness->fallthrough();
    soundness->add_option("--gamma", c.gamma, "value slack, in (0,1)")
        ->required();
    soundness->add_option("instance", c.inst, "source instance file")
        ->required();
    soundness->add_option("graph", c.graph, "gadget graph file")->required();
    soundness->add_option("meta", c.meta, "metadata sidecar")->required();
    soundness->callback([&, load_output] {
        action = [&, load_output]() {
            auto inst = load_instance(c.inst);
            auto gamma = hfree::rational_from_string(c.gamma);
            auto rep = hfree::check_soundness(inst, load_output(inst), gamma);
            em.line({{"gamma", hfree::to_string(rep.gamma)}},
                    "gamma " + hfree::to_string(rep.gamma));
            em.line({{"gamma_prime", hfree::to_string(rep.gamma_prime)}},
                    "gamma_prime " + hfree::to_string(rep.gamma_prime));
            em.line({{"target_k", rep.target_k}},
                    "target_k " + std::to_string(rep.target_k));
            em.line({{"alpha", rep.alpha}}, "alpha " + std::to_string(rep.alpha));
            em.line({{"value", hfree::to_string(rep.value)}},
                    "value " + hfree::to_string(rep.value));
            em.line({{"premise", rep.premise}},
                    std::string("premise ") + yesno(rep.premise));
            em.line({{"conclusion", rep.conclusion}},
                    std::string("conclusion ") + yesno(rep.conclusion));
            em.line({{"soundness", rep.pass}},
                    std::string("soundness ") + (rep.pass ? "PASS" : "FAIL"));
            return rep.pass ? 0 : 1;
        };
    });

    // selftest ---------------------------------------------------------------
    auto* selftest = app.add_subcommand(
        "selftest", "run the acceptance checks (optionally a named subset)");
    selftest->fallthrough();
    std::vector<std::string> chosen;
    selftest->add_option("checks", chosen, "check names (default: all)");
    selftest->callback([&] {
        action = [&]() {
            bool all = true;
            hfree::run_acceptance_checks(chosen, [&](const hfree::CheckResult& r) {
                all = all && r.pass;
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.1f", r.seconds);
                em.line({{"check", r.name},
                         {"pass", r.pass},
                         {"seconds", r.seconds},
                         {"detail", r.detail}},
                        std::string(r.pass ? "PASS " : "FAIL ") + r.name + " (" +
                            buf + "s) " + r.detail);
            });
            return all ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        return action();
    } catch (const hfree::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const hfree::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

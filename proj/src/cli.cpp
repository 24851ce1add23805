#include "cgkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "cgkit/dependence.hpp"
#include "cgkit/equivalence.hpp"
#include "cgkit/errors.hpp"
#include "cgkit/gaussian.hpp"
#include "cgkit/graph_io.hpp"
#include "cgkit/independence.hpp"
#include "cgkit/learn_amp.hpp"
#include "cgkit/learn_mccg.hpp"
#include "cgkit/oracle.hpp"
#include "cgkit/separation.hpp"
#include "cgkit/verify.hpp"

namespace cgkit {

namespace {

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

NodeSet parse_set(const MixedGraph& g, const std::string& csv) {
    return mask_of(g, split_csv(csv));
}

std::string join_names(const MixedGraph& g, NodeSet s) {
    std::string out;
    for (int v : set_nodes(s)) {
        if (!out.empty()) out += ",";
        out += g.name_of(v);
    }
    return out;
}

std::string render_path(const MixedGraph& g, const std::vector<int>& path) {
    std::string out = g.name_of(path.front());
    for (std::size_t i = 1; i < path.size(); ++i) {
        int p = path[i - 1], q = path[i];
        switch (*g.edge_type(p, q)) {
            case EdgeType::Undirected: out += "--"; break;
            case EdgeType::Bidirected: out += "<->"; break;
            case EdgeType::Directed: out += g.has_edge(p, q, EdgeType::Directed) ? "->" : "<-"; break;
        }
        out += g.name_of(q);
    }
    return out;
}

void emit_graph(const MixedGraph& g, const std::string& out_path, const std::string& dot_path) {
    if (out_path.empty()) {
        std::cout << graph_to_json(g) << "\n";
    } else {
        save_graph(g, out_path);
    }
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw input_error("cannot write " + dot_path);
        f << graph_to_dot(g);
    }
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw input_error("cannot write " + out_path);
    f << text;
}

std::unique_ptr<IndependenceOracle> make_oracle(const std::string& graph_path,
                                                const std::string& data_path, double alpha,
                                                SepKind kind) {
    if (!graph_path.empty()) {
        return std::make_unique<GraphOracle>(load_graph(graph_path), kind);
    }
    auto [names, data] = load_csv(data_path);
    return std::make_unique<FisherZOracle>(std::move(names), data, alpha);
}

std::string seps_to_json(const MixedGraph& g, const SeparatorTable& seps) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [pair, s] : seps.entries())
        j[g.name_of(pair.first) + "|" + g.name_of(pair.second)] = names_of(g, s);
    return j.dump(2) + "\n";
}

std::vector<NodeSet> load_partition(const MixedGraph& g, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(path + ": " + e.what());
    }
    if (!j.is_array()) throw input_error(path + ": expected an array of name arrays");
    std::vector<NodeSet> q;
    for (const auto& block : j) {
        if (!block.is_array()) throw input_error(path + ": expected an array of name arrays");
        q.push_back(mask_of(g, block.get<std::vector<std::string>>()));
    }
    return q;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"chain graph and covariance-concentration graph toolkit"};
    app.require_subcommand(1);

    // shared option storage; each subcommand binds the pieces it needs
    std::string graph_path, other_path, data_path, out_path, dot_path, seps_path, partition_path;
    std::string xs, ys, zs, kind = "auto", base = "local", family = "auto";
    double alpha = 0.01;
    int rows = 100000, bound = 5;
    std::uint64_t seed = 0;

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", graph_path, "graph JSON file")
            ->required()
            ->check(CLI::ExistingFile);
    };
    auto add_xyz = [&](CLI::App* sub) {
        sub->add_option("--x", xs, "first node set, comma separated")->required();
        sub->add_option("--y", ys, "second node set, comma separated")->required();
        sub->add_option("--z", zs, "conditioning set, comma separated");
    };
    auto add_out = [&](CLI::App* sub, bool required = false) {
        CLI::Option* o = sub->add_option("-o,--out", out_path, "output file (default stdout)");
        if (required) o->required();
        sub->add_option("--dot", dot_path, "also write a DOT rendering here");
    };
    auto add_learn = [&](CLI::App* sub) {
        CLI::Option* og = sub->add_option("--graph", graph_path, "truth graph for a faithful oracle")
                              ->check(CLI::ExistingFile);
        CLI::Option* od = sub->add_option("--data", data_path, "sample CSV for a Fisher z oracle")
                              ->check(CLI::ExistingFile);
        og->excludes(od);
        sub->add_option("--alpha", alpha, "significance level for the Fisher z test")
            ->check(CLI::Range(0.0, 1.0));
        add_out(sub);
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check a graph file against its family");
    add_graph(c_validate);
    c_validate->add_option("--kind", kind, "cg, mccg or auto")
        ->check(CLI::IsMember({"cg", "mccg", "auto"}));

    CLI::App* c_sep = app.add_subcommand("sep", "decide a separation query");
    add_graph(c_sep);
    add_xyz(c_sep);
    c_sep->add_option("--kind", kind, "amp, mccg, mag or auto")
        ->check(CLI::IsMember({"amp", "mccg", "mag", "auto"}));

    CLI::App* c_learn_amp = app.add_subcommand("learn-amp", "learn a chain graph from an oracle");
    add_learn(c_learn_amp);
    c_learn_amp->add_option("--dump-seps", seps_path, "write the separators found as JSON");

    CLI::App* c_learn_mccg = app.add_subcommand("learn-mccg", "learn an MCCG from an oracle");
    add_learn(c_learn_mccg);

    CLI::App* c_equiv = app.add_subcommand("equiv", "test two graphs for triplex equivalence");
    c_equiv->add_option("first", graph_path, "graph JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    c_equiv->add_option("second", other_path, "graph JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    c_equiv->add_option("--family", family, "cg, mccg or auto")
        ->check(CLI::IsMember({"cg", "mccg", "auto"}));

    CLI::App* c_blargest = app.add_subcommand("blargest", "canonical class member of an MCCG");
    c_blargest->add_option("graph", graph_path, "graph JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    add_out(c_blargest);

    CLI::App* c_marg = app.add_subcommand("marginalize", "marginal MCCG over kept nodes");
    add_graph(c_marg);
    c_marg->add_option("--keep", xs, "nodes to keep, comma separated")->required();
    add_out(c_marg);

    CLI::App* c_project = app.add_subcommand("project", "covariance or concentration projection");
    add_graph(c_project);
    c_project->add_option("--kind", kind, "cov or conc")
        ->required()
        ->check(CLI::IsMember({"cov", "conc"}));
    add_out(c_project);

    CLI::App* c_mag = app.add_subcommand("mag-translate", "rewrite an MCCG as an ancestral graph");
    add_graph(c_mag);
    add_out(c_mag);

    CLI::App* c_closure = app.add_subcommand("closure", "close a separation base and print it");
    add_graph(c_closure);
    c_closure->add_option("--base", base, "local or pairwise")
        ->check(CLI::IsMember({"local", "pairwise"}));
    c_closure->add_option("--partition", partition_path, "partition JSON for the pairwise base")
        ->check(CLI::ExistingFile);
    c_closure->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* c_read = app.add_subcommand("read-deps", "decide the dependence reading of a query");
    add_graph(c_read);
    add_xyz(c_read);

    CLI::App* c_vdeps = app.add_subcommand("verify-deps", "dependence criterion vs closure on one graph");
    add_graph(c_vdeps);
    c_vdeps->add_option("--bound", bound, "node bound")->check(CLI::Range(2, 5));

    CLI::App* c_gen = app.add_subcommand("gen", "sample data from a graph's Gaussian model");
    add_graph(c_gen);
    c_gen->add_option("--n", rows, "number of rows")->check(CLI::PositiveNumber);
    c_gen->add_option("--seed", seed, "random seed");
    c_gen->add_option("-o,--out", out_path, "output CSV")->required();

    CLI::App* c_gencov = app.add_subcommand("gen-cov", "emit a graph's Gaussian covariance");
    add_graph(c_gencov);
    c_gencov->add_option("--seed", seed, "random seed");
    c_gencov->add_option("-o,--out", out_path, "output JSON")->required();

    CLI::App* c_vall = app.add_subcommand("verify-all", "run the exhaustive property checks");
    c_vall->add_option("--bound", bound, "node bound")->check(CLI::Range(2, 5));

    std::vector<const char*> argv;
    argv.push_back("cgkit");
    for (const std::string& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_validate->parsed()) {
            MixedGraph g = load_graph(graph_path);
            std::string k = kind == "auto" ? (g.has_bidirected() ? "mccg" : "cg") : kind;
            if (k == "cg") {
                if (is_chain_graph(g)) {
                    std::cout << "VALID chain graph\n";
                    return 0;
                }
                std::cout << (g.has_bidirected() ? "INVALID chain graph: bidirected edge present\n"
                                                 : "INVALID chain graph: semidirected cycle\n");
                return 1;
            }
            std::vector<std::string> problems = diagnose_mccg(g);
            if (problems.empty()) {
                std::cout << "VALID MCCG\n";
                return 0;
            }
            for (const std::string& p : problems) std::cout << "INVALID MCCG: " << p << "\n";
            return 1;
        }

        if (c_sep->parsed()) {
            MixedGraph g = load_graph(graph_path);
            NodeSet x = parse_set(g, xs), y = parse_set(g, ys), z = parse_set(g, zs);
            bool sep;
            if (kind == "amp") sep = amp_separated(g, x, y, z);
            else if (kind == "mccg") sep = mccg_separated(g, x, y, z);
            else if (kind == "mag")
                sep = g.has_directed() ? mag_separated(g, x, y, z)
                                       : mag_separated(mag_translate(g), x, y, z);
            else sep = separated(g, auto_sep_kind(g), x, y, z);
            std::cout << (sep ? "SEPARATED" : "CONNECTED") << "\n";
            return 0;
        }

        if (c_learn_amp->parsed()) {
            if (graph_path.empty() && data_path.empty())
                throw input_error("learn-amp needs --graph or --data");
            auto oracle = make_oracle(graph_path, data_path, alpha, SepKind::Amp);
            AmpLearnResult res = learn_amp(*oracle);
            if (!seps_path.empty()) write_text(seps_path, seps_to_json(res.graph, res.seps));
            if (!res.ok) {
                std::cerr << "learn-amp: " << res.diagnostic << "\n";
                return 1;
            }
            emit_graph(res.graph, out_path, dot_path);
            return 0;
        }

        if (c_learn_mccg->parsed()) {
            if (graph_path.empty() && data_path.empty())
                throw input_error("learn-mccg needs --graph or --data");
            auto oracle = make_oracle(graph_path, data_path, alpha, SepKind::Mccg);
            MccgLearnResult res = learn_mccg(*oracle);
            if (!res.ok) {
                std::cerr << "learn-mccg: " << res.diagnostic << "\n";
                return 1;
            }
            emit_graph(res.graph, out_path, dot_path);
            return 0;
        }

        if (c_equiv->parsed()) {
            MixedGraph a = load_graph(graph_path), b = load_graph(other_path);
            bool eq;
            if (family == "auto") eq = triplex_equivalent(a, b);
            else
                eq = triplex_equivalent(
                    a, b, family == "cg" ? GraphFamily::ChainGraph : GraphFamily::Mccg);
            std::cout << (eq ? "EQUIVALENT" : "NOT-EQUIVALENT") << "\n";
            return 0;
        }

        if (c_blargest->parsed()) {
            emit_graph(blargest(load_graph(graph_path)), out_path, dot_path);
            return 0;
        }

        if (c_marg->parsed()) {
            MixedGraph g = load_graph(graph_path);
            emit_graph(marginalize_mccg(g, parse_set(g, xs)), out_path, dot_path);
            return 0;
        }

        if (c_project->parsed()) {
            MixedGraph g = load_graph(graph_path);
            emit_graph(kind == "cov" ? covariance_projection(g) : concentration_projection(g),
                       out_path, dot_path);
            return 0;
        }

        if (c_mag->parsed()) {
            emit_graph(mag_translate(load_graph(graph_path)), out_path, dot_path);
            return 0;
        }

        if (c_closure->parsed()) {
            MixedGraph g = load_graph(graph_path);
            IndependenceModel m = [&] {
                if (base == "local") return local_base(g);
                std::vector<NodeSet> q = partition_path.empty() ? default_partition(g)
                                                                : load_partition(g, partition_path);
                check_consistent_partition(g, q);
                return pairwise_base(g, q);
            }();
            std::string text;
            for (const CiTriple& t : wtc_closure(m).triples())
                text += triple_to_string(g, t) + "\n";
            write_text(out_path, text);
            return 0;
        }

        if (c_read->parsed()) {
            MixedGraph g = load_graph(graph_path);
            JoinedWitness w = joined_witness(g, parse_set(g, xs), parse_set(g, ys), parse_set(g, zs));
            if (!w.joined) {
                std::cout << "NOT-JOINED\n";
                return 0;
            }
            std::cout << "JOINED path=" << render_path(g, w.path) << " u={" << join_names(g, w.u)
                      << "}\n";
            return 0;
        }

        if (c_vdeps->parsed()) {
            VerifyReport rep = verify_sound_complete(load_graph(graph_path), bound);
            std::cout << render_reports({rep});
            return rep.ok() ? 0 : 1;
        }

        if (c_gen->parsed()) {
            MixedGraph g = load_graph(graph_path);
            GaussianModel m = gen_gaussian(g, seed);
            save_csv(out_path, m.names, sample_data(m, rows, seed + 1));
            std::cout << "wrote " << rows << " rows (seed " << seed << ") to " << out_path << "\n";
            return 0;
        }

        if (c_gencov->parsed()) {
            MixedGraph g = load_graph(graph_path);
            save_cov_json(out_path, gen_gaussian(g, seed));
            std::cout << "wrote covariance (seed " << seed << ") to " << out_path << "\n";
            return 0;
        }

        if (c_vall->parsed()) {
            std::vector<VerifyReport> reports = verify_all(bound);
            std::cout << render_reports(reports);
            return all_ok(reports) ? 0 : 1;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const algorithm_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace cgkit

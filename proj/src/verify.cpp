#include "cgkit/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cgkit/dependence.hpp"
#include "cgkit/enumerate.hpp"
#include "cgkit/equivalence.hpp"
#include "cgkit/errors.hpp"
#include "cgkit/gaussian.hpp"
#include "cgkit/graph_io.hpp"
#include "cgkit/independence.hpp"
#include "cgkit/learn_amp.hpp"
#include "cgkit/learn_mccg.hpp"
#include "cgkit/oracle.hpp"
#include "cgkit/separation.hpp"

namespace cgkit {

namespace {

constexpr int kFailuresKept = 5;

void fail(VerifyReport& rep, const std::string& what) {
    if (++rep.failure_count <= kFailuresKept) rep.failures.push_back(what);
}

template <typename F>
void for_each_query(int n, F&& f) {
    NodeSet all = (NodeSet{1} << n) - 1;
    for_each_subset(all, [&](NodeSet x) {
        if (!x) return;
        for_each_subset(all & ~x, [&](NodeSet y) {
            if (!y) return;
            for_each_subset(all & ~(x | y), [&](NodeSet z) { f(x, y, z); });
        });
    });
}

std::string describe(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z) {
    return graph_to_json(g) + " query " + triple_to_string(g, {x, y, z});
}

VerifyReport check_amp_separation(int cap) {
    VerifyReport rep{"separation: reachability vs route enumeration"};
    for (int n = 2; n <= cap; ++n) {
        for_each_chain_graph(n, [&](const MixedGraph& g) {
            for_each_query(n, [&](NodeSet x, NodeSet y, NodeSet z) {
                ++rep.checked;
                if (amp_separated(g, x, y, z) != brute_force_amp_separated(g, x, y, z))
                    fail(rep, describe(g, x, y, z));
            });
        });
    }
    return rep;
}

VerifyReport check_mccg_separation(int cap) {
    VerifyReport rep{"separation: state search vs latent expansion"};
    for (int n = 2; n <= cap; ++n) {
        for_each_mccg(n, [&](const MixedGraph& g) {
            MixedGraph ex = latent_expand(g);
            std::vector<int> where(n);
            for (int i = 0; i < n; ++i) where[i] = ex.index_of(g.name_of(i));
            auto lift = [&](NodeSet s) {
                NodeSet out = 0;
                for (int i : set_nodes(s)) out |= bit(where[i]);
                return out;
            };
            for_each_query(n, [&](NodeSet x, NodeSet y, NodeSet z) {
                ++rep.checked;
                if (mccg_separated(g, x, y, z) != amp_separated(ex, lift(x), lift(y), lift(z)))
                    fail(rep, describe(g, x, y, z));
            });
        });
    }
    return rep;
}

VerifyReport check_learn_amp(int cap) {
    VerifyReport rep{"learning: chain graph recovery"};
    for (int n = 2; n <= cap; ++n) {
        for_each_chain_graph(n, [&](const MixedGraph& g) {
            ++rep.checked;
            GraphOracle oracle(g, SepKind::Amp);
            AmpLearnResult res = learn_amp(oracle);
            if (!res.ok || !triplex_equivalent(res.graph, g, GraphFamily::ChainGraph) ||
                !is_deflagged(res.graph) || res.graph != learn_amp(oracle, RuleSchedule::Reversed).graph)
                fail(rep, graph_to_json(g));
        });
    }
    return rep;
}

VerifyReport check_learn_mccg(int cap) {
    VerifyReport rep{"learning: blargest recovery"};
    for (int n = 2; n <= cap; ++n) {
        for_each_mccg(n, [&](const MixedGraph& g) {
            ++rep.checked;
            GraphOracle oracle(g, SepKind::Mccg);
            if (learn_mccg(oracle).graph != blargest(g)) fail(rep, graph_to_json(g));
        });
    }
    return rep;
}

VerifyReport check_closures(int cap) {
    VerifyReport rep{"closure: full model vs local and pairwise bases"};
    for (int n = 2; n <= cap; ++n) {
        for_each_mccg(n, [&](const MixedGraph& g) {
            ++rep.checked;
            IndependenceModel full = full_model(g, SepKind::Mccg);
            if (wtc_closure(local_base(g)) != full) fail(rep, graph_to_json(g) + " local base");
            if (wtc_closure(pairwise_base(g, default_partition(g))) != full)
                fail(rep, graph_to_json(g) + " pairwise base");
        });
    }
    return rep;
}

VerifyReport check_equivalence(int cap) {
    VerifyReport rep{"equivalence: triplexes vs full separation model"};
    for (int n = 2; n <= cap; ++n) {
        std::map<std::vector<std::pair<int, int>>, std::vector<std::pair<MixedGraph, IndependenceModel>>>
            by_skeleton;
        for_each_mccg(n, [&](const MixedGraph& g) {
            std::vector<std::pair<int, int>> key;
            for (const Edge& e : g.edge_list()) {
                int ia = g.index_of(e.a);
                int ib = g.index_of(e.b);
                key.push_back({std::min(ia, ib), std::max(ia, ib)});
            }
            by_skeleton[key].push_back({g, full_model(g, SepKind::Mccg)});
        });
        for (const auto& [key, group] : by_skeleton) {
            for (std::size_t i = 0; i < group.size(); ++i) {
                for (std::size_t j = i + 1; j < group.size(); ++j) {
                    ++rep.checked;
                    bool te = triplex_equivalent(group[i].first, group[j].first, GraphFamily::Mccg);
                    if (te != (group[i].second == group[j].second))
                        fail(rep, graph_to_json(group[i].first) + " vs " + graph_to_json(group[j].first));
                }
            }
        }
    }
    return rep;
}

VerifyReport check_dependence(int cap) {
    VerifyReport rep{"dependence: joined vs dependence closure"};
    for (int n = 2; n <= cap; ++n) {
        for_each_mccg(n, [&](const MixedGraph& g) {
            if (mixed_cycle_free(g) != brute_force_mixed_cycle_free(g))
                fail(rep, graph_to_json(g) + " mixed cycle test disagreement");
            if (!mixed_cycle_free(g)) return;
            VerifyReport sub = verify_sound_complete(g, cap);
            rep.checked += sub.checked;
            rep.failure_count += sub.failure_count;
            for (const std::string& s : sub.failures)
                if (static_cast<int>(rep.failures.size()) < kFailuresKept) rep.failures.push_back(s);
        });
    }
    return rep;
}

VerifyReport check_faithfulness(int cap) {
    VerifyReport rep{"dependence: faithfulness on forests"};
    for (int n = 2; n <= cap; ++n) {
        for_each_mccg(n, [&](const MixedGraph& g) {
            if (!skeleton_forest(g)) return;
            ++rep.checked;
            if (!faithful_if_acyclic(g)) fail(rep, graph_to_json(g));
        });
    }
    return rep;
}

VerifyReport check_gaussian(int cap) {
    VerifyReport rep{"gaussian: exact oracle vs graph"};
    auto probe = [&](const MixedGraph& g, SepKind kind) {
        ++rep.checked;
        GaussianModel model;
        try {
            model = gen_gaussian(g, kind, 1);
        } catch (const algorithm_error& e) {
            fail(rep, graph_to_json(g) + " generation: " + e.what());
            return;
        }
        ExactGaussianOracle oracle(std::move(model));
        const int n = g.node_count();
        NodeSet all = g.all_nodes();
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                bool bad = false;
                for_each_subset(all & ~bit(a) & ~bit(b), [&](NodeSet s) {
                    if (!bad && oracle.independent(a, b, s) !=
                                    separated_unchecked(g, kind, bit(a), bit(b), s))
                        bad = true;
                });
                if (bad) {
                    fail(rep, graph_to_json(g) + " pair " + g.name_of(a) + "," + g.name_of(b));
                    return;
                }
            }
        }
    };
    for (int n = 2; n <= cap; ++n) {
        for_each_chain_graph(n, [&](const MixedGraph& g) { probe(g, SepKind::Amp); });
        for_each_mccg(n, [&](const MixedGraph& g) {
            if (g.has_bidirected()) probe(g, SepKind::Mccg);  // pure undirected already covered
        });
    }
    return rep;
}

}  // namespace

VerifyReport verify_sound_complete(const MixedGraph& g, int bound) {
    const int n = g.node_count();
    if (n > bound) throw input_error("verify_sound_complete: graph exceeds the node bound");
    if (!is_mccg(g)) throw input_error("verify_sound_complete requires an MCCG");
    if (!mixed_cycle_free(g))
        throw input_error("verify_sound_complete requires a graph with no mixed cycle");
    VerifyReport rep{"dependence: joined vs dependence closure"};
    IndependenceModel seps = full_model(g, SepKind::Mccg);
    TripleSet deps = wtc_dependence_closure(dependence_base(g), seps);
    for_each_query(n, [&](NodeSet x, NodeSet y, NodeSet z) {
        ++rep.checked;
        if (joined(g, x, y, z) != deps.contains(x, y, z)) fail(rep, describe(g, x, y, z));
    });
    return rep;
}

bool faithful_if_acyclic(const MixedGraph& g) {
    if (!is_mccg(g)) throw input_error("faithful_if_acyclic requires an MCCG");
    if (!skeleton_forest(g)) throw input_error("faithful_if_acyclic requires a graph with no cycle");
    bool ok = true;
    for_each_query(g.node_count(), [&](NodeSet x, NodeSet y, NodeSet z) {
        if (ok && joined(g, x, y, z) == separated_unchecked(g, SepKind::Mccg, x, y, z)) ok = false;
    });
    return ok;
}

std::vector<VerifyReport> verify_all(int bound) {
    if (bound < 2 || bound > 5) throw input_error("verify_all bound must lie between 2 and 5");
    const int small = std::min(bound, 4);
    std::vector<VerifyReport> out;
    out.push_back(check_amp_separation(small));
    out.push_back(check_mccg_separation(small));
    out.push_back(check_learn_amp(small));
    out.push_back(check_learn_mccg(small));
    out.push_back(check_closures(bound));
    out.push_back(check_equivalence(small));
    out.push_back(check_dependence(small));
    out.push_back(check_faithfulness(bound));
    out.push_back(check_gaussian(small));
    return out;
}

bool all_ok(const std::vector<VerifyReport>& reports) {
    for (const VerifyReport& r : reports)
        if (!r.ok()) return false;
    return true;
}

std::string render_reports(const std::vector<VerifyReport>& reports) {
    std::ostringstream os;
    for (const VerifyReport& r : reports) {
        os << (r.ok() ? "PASS" : "FAIL") << "  " << r.name << "  (checked " << r.checked;
        if (!r.ok()) os << ", failures " << r.failure_count;
        os << ")\n";
        for (const std::string& s : r.failures) os << "      counterexample: " << s << "\n";
    }
    return os.str();
}

}  // namespace cgkit

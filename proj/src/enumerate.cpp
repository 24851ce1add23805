#include "cgkit/enumerate.hpp"

#include "cgkit/errors.hpp"
#include "cgkit/rng.hpp"

namespace cgkit {

std::vector<std::string> default_names(int n) {
    if (n < 0 || n > 26) throw input_error("default_names covers 0 to 26 nodes");
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
    return names;
}

namespace {

struct PairList {
    std::vector<std::pair<int, int>> pairs;
    explicit PairList(int n) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    }
};

// odometer over per-pair edge choices; option 0 always means "no edge"
void enumerate_graphs(int n, int radix, const std::function<Edge(const std::vector<std::string>&, int, int, int)>& make,
                      const std::function<bool(const MixedGraph&)>& valid,
                      const std::function<void(const MixedGraph&)>& f) {
    std::vector<std::string> names = default_names(n);
    PairList pl(n);
    std::vector<int> digit(pl.pairs.size(), 0);
    while (true) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < digit.size(); ++i) {
            if (digit[i] == 0) continue;
            auto [a, b] = pl.pairs[i];
            edges.push_back(make(names, a, b, digit[i]));
        }
        MixedGraph g(names, edges);
        if (valid(g)) f(g);
        std::size_t i = 0;
        while (i < digit.size() && digit[i] == radix - 1) digit[i++] = 0;
        if (i == digit.size()) return;
        ++digit[i];
    }
}

}  // namespace

void for_each_chain_graph(int n, const std::function<void(const MixedGraph&)>& f) {
    enumerate_graphs(
        n, 4,
        [](const std::vector<std::string>& names, int a, int b, int opt) {
            if (opt == 1) return und(names[a], names[b]);
            if (opt == 2) return dir(names[a], names[b]);
            return dir(names[b], names[a]);
        },
        [](const MixedGraph& g) { return is_chain_graph(g); }, f);
}

void for_each_mccg(int n, const std::function<void(const MixedGraph&)>& f) {
    enumerate_graphs(
        n, 3,
        [](const std::vector<std::string>& names, int a, int b, int opt) {
            return opt == 1 ? und(names[a], names[b]) : bid(names[a], names[b]);
        },
        [](const MixedGraph& g) { return is_mccg(g); }, f);
}

namespace {

MixedGraph random_graph(int n, std::uint64_t seed, double edge_prob, int kinds,
                        const std::function<bool(const MixedGraph&)>& valid) {
    std::vector<std::string> names = default_names(n);
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (!rng.bernoulli(edge_prob)) continue;
                int k = rng.uniform_int(kinds);
                if (k == 0) edges.push_back(und(names[a], names[b]));
                else if (kinds == 3) edges.push_back(k == 1 ? dir(names[a], names[b]) : dir(names[b], names[a]));
                else edges.push_back(bid(names[a], names[b]));
            }
        }
        MixedGraph g(names, edges);
        if (valid(g)) return g;
    }
    throw algorithm_error("random graph sampling exhausted its attempts");
}

}  // namespace

MixedGraph random_chain_graph(int n, std::uint64_t seed, double edge_prob) {
    return random_graph(n, seed, edge_prob, 3, [](const MixedGraph& g) { return is_chain_graph(g); });
}

MixedGraph random_mccg(int n, std::uint64_t seed, double edge_prob) {
    return random_graph(n, seed, edge_prob, 2, [](const MixedGraph& g) { return is_mccg(g); });
}

}  // namespace cgkit

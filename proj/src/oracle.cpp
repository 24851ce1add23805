#include "cgkit/oracle.hpp"

#include "cgkit/errors.hpp"

namespace cgkit {

bool IndependenceOracle::independent_sets(NodeSet x, NodeSet y, NodeSet z) const {
    for (int a : set_nodes(x))
        for (int b : set_nodes(y))
            if (!independent(a, b, z)) return false;
    return true;
}

GraphOracle::GraphOracle(MixedGraph g) : g_(std::move(g)), kind_(auto_sep_kind(g_)) {
    if (kind_ == SepKind::Amp ? !is_chain_graph(g_) : !is_mccg(g_))
        throw input_error("GraphOracle requires a chain graph or an MCCG");
}

GraphOracle::GraphOracle(MixedGraph g, SepKind kind) : g_(std::move(g)), kind_(kind) {
    if (kind_ == SepKind::Amp ? !is_chain_graph(g_) : !is_mccg(g_))
        throw input_error("graph does not match the requested separation kind");
}

bool GraphOracle::independent(int a, int b, NodeSet s) const {
    return separated(g_, kind_, bit(a), bit(b), s);
}

bool GraphOracle::independent_sets(NodeSet x, NodeSet y, NodeSet z) const {
    return separated(g_, kind_, x, y, z);
}

}  // namespace cgkit

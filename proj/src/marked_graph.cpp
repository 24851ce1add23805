#include "cgkit/marked_graph.hpp"

#include <algorithm>

#include "cgkit/errors.hpp"

namespace cgkit {

MarkedGraph::MarkedGraph(const MixedGraph& skeleton)
    : names_(skeleton.names()), adj_(skeleton.node_count(), 0) {
    for (const Edge& e : skeleton.edge_list()) {
        int ia = skeleton.index_of(e.a);
        int ib = skeleton.index_of(e.b);
        int lo = std::min(ia, ib);
        int hi = std::max(ia, ib);
        adj_[lo] |= bit(hi);
        adj_[hi] |= bit(lo);
        marks_[{lo, hi}] = {EndMark::Circle, EndMark::Circle};
    }
}

EndMark MarkedGraph::mark(int at, int other) const {
    int lo = at < other ? at : other;
    int hi = at < other ? other : at;
    auto it = marks_.find({lo, hi});
    if (it == marks_.end()) throw input_error("mark: no such edge");
    return at == lo ? it->second.first : it->second.second;
}

bool MarkedGraph::set_block(int at, int other) {
    int lo = at < other ? at : other;
    int hi = at < other ? other : at;
    auto it = marks_.find({lo, hi});
    if (it == marks_.end()) throw input_error("set_block: no such edge");
    EndMark& slot = at == lo ? it->second.first : it->second.second;
    if (slot == EndMark::Block) return false;
    slot = EndMark::Block;
    return true;
}

MixedGraph MarkedGraph::finalize() const {
    std::vector<Edge> edges;
    edges.reserve(marks_.size());
    for (const auto& [key, m] : marks_) {
        auto [lo, hi] = key;
        auto [at_lo, at_hi] = m;
        if (at_lo == EndMark::Block && at_hi == EndMark::Circle) {
            edges.push_back(dir(names_[lo], names_[hi]));
        } else if (at_lo == EndMark::Circle && at_hi == EndMark::Block) {
            edges.push_back(dir(names_[hi], names_[lo]));
        } else {
            edges.push_back(und(names_[lo], names_[hi]));
        }
    }
    return MixedGraph(names_, edges);
}

}  // namespace cgkit

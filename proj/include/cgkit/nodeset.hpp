#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cgkit {

// node sets are bitmasks over the graph's node indices (capacity 64 nodes)
using NodeSet = std::uint64_t;

inline constexpr NodeSet bit(int i) { return NodeSet{1} << i; }

inline constexpr bool contains(NodeSet s, int i) { return (s >> i) & 1; }

inline constexpr int set_size(NodeSet s) { return std::popcount(s); }

inline constexpr int lowest_node(NodeSet s) { return std::countr_zero(s); }

inline std::vector<int> set_nodes(NodeSet s) {
    std::vector<int> out;
    while (s) {
        int i = std::countr_zero(s);
        out.push_back(i);
        s &= s - 1;
    }
    return out;
}

// iterate subsets of mask, including 0 and mask itself, in increasing numeric order
template <typename F>
void for_each_subset(NodeSet mask, F&& f) {
    NodeSet sub = 0;
    while (true) {
        f(sub);
        if (sub == mask) break;
        sub = (sub - mask) & mask;
    }
}

}  // namespace cgkit

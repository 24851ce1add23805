#pragma once

#include <map>
#include <optional>
#include <utility>

#include "cgkit/nodeset.hpp"

namespace cgkit {

// separators found during skeleton recovery, symmetric in the node pair
class SeparatorTable {
  public:
    void set(int a, int b, NodeSet s) { table_[key(a, b)] = s; }

    std::optional<NodeSet> find(int a, int b) const {
        auto it = table_.find(key(a, b));
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<std::pair<int, int>, NodeSet>& entries() const { return table_; }

  private:
    static std::pair<int, int> key(int a, int b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }

    std::map<std::pair<int, int>, NodeSet> table_;
};

}  // namespace cgkit

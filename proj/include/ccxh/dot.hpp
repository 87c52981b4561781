#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ccxh/interpreter.hpp"
#include "ccxh/render.hpp"

namespace ccxh {

namespace detail {

struct DotBuilder {
  std::string out;
  std::size_t next_id = 0;
  std::vector<std::pair<std::size_t, WeightedState>> leaves;

  std::size_t emit(const EvalTree& node) {
    const std::size_t id = next_id++;
    out += "  n" + std::to_string(id) + " [label=\"" + ket_str(node.value.state) + "\"];\n";
    if (node.is_leaf()) {
      leaves.emplace_back(id, node.value);
      return id;
    }
    for (const EvalTree* child : {node.left.get(), node.right.get()}) {
      const std::size_t cid = emit(*child);
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(cid) + " [label=\"" +
             format_amplitude(child->value.amp) + "\"];\n";
    }
    return id;
  }

  void connect(std::size_t a, std::size_t b, const char* style, const char* color) {
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [dir=none, constraint=false, style=" + style +
           ", color=" + color + "];\n";
  }

  // Leaves reaching the same state interfere: each opposite-sign pair
  // annihilates (dashed red), remaining same-sign leaves pair up
  // consecutively and reinforce (solid blue).
  void annotate() {
    std::unordered_map<BasisState, std::vector<std::pair<std::size_t, bool>>, BasisStateHash> groups;
    std::vector<BasisState> order;
    for (const auto& [id, v] : leaves) {
      auto [it, fresh] = groups.try_emplace(v.state);
      if (fresh) order.push_back(v.state);
      it->second.emplace_back(id, v.amp.numerator() > 0);
    }
    for (const BasisState& s : order) {
      std::vector<std::size_t> pos, neg;
      for (const auto& [id, positive] : groups[s]) (positive ? pos : neg).push_back(id);
      const std::size_t pairs = std::min(pos.size(), neg.size());
      for (std::size_t i = 0; i < pairs; ++i) connect(pos[i], neg[i], "dashed", "red");
      const auto& rest = pos.size() > neg.size() ? pos : neg;
      for (std::size_t i = pairs; i + 1 < rest.size(); i += 2) connect(rest[i], rest[i + 1], "solid", "blue");
    }
  }
};

}  // namespace detail

// Renders the evaluation tree as a DOT digraph: nodes are ket labels,
// tree edges carry the child's amplitude, and non-constraining extra edges
// mark which leaves annihilate or reinforce.
inline std::string to_dot(const EvalTree& tree) {
  detail::DotBuilder b;
  b.out = "digraph evaltree {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  b.emit(tree);
  b.annotate();
  b.out += "}\n";
  return b.out;
}

}  // namespace ccxh

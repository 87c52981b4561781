#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ccxh/amplitude.hpp"
#include "ccxh/circuit.hpp"
#include "ccxh/errors.hpp"

namespace ccxh {

// One leaf of the evaluation tree: a basis state with its signed amplitude.
struct WeightedState {
  Amplitude amp;
  BasisState state;

  bool operator==(const WeightedState&) const = default;
};

// Sparse signed superposition. Entries with numerator zero are removed, so
// a state that fully cancels disappears. Print order is fixed by the first
// time each state was reached; the rank survives cancellation so a state
// that cancels and later reappears keeps its original slot.
class Ket {
 public:
  Ket() = default;

  void add(const BasisState& s, const Amplitude& a) {
    if (!rank_.count(s)) {
      rank_.emplace(s, seen_.size());
      seen_.push_back(s);
    }
    auto it = entries_.find(s);
    if (it == entries_.end()) {
      if (!a.is_zero()) entries_.emplace(s, a);
      return;
    }
    Amplitude sum = it->second + a;
    if (sum.is_zero()) {
      entries_.erase(it);
    } else {
      it->second = sum;
    }
  }

  // Folds rhs into this, preserving rhs's first-seen order for new states.
  void merge(const Ket& rhs) {
    for (const BasisState& s : rhs.seen_) {
      auto it = rhs.entries_.find(s);
      add(s, it == rhs.entries_.end() ? Amplitude() : it->second);
    }
  }

  bool contains(const BasisState& s) const { return entries_.count(s) != 0; }

  Amplitude at(const BasisState& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? Amplitude() : it->second;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Surviving entries in first-reached order.
  std::vector<WeightedState> ordered_entries() const {
    std::vector<WeightedState> out;
    out.reserve(entries_.size());
    for (const BasisState& s : seen_) {
      auto it = entries_.find(s);
      if (it != entries_.end()) out.push_back({it->second, s});
    }
    return out;
  }

  Rational total_prob() const {
    Rational sum(0);
    for (const auto& [s, a] : entries_) sum += a.prob();
    return sum;
  }

  // Semantic equality: same surviving entries, regardless of arrival order.
  bool operator==(const Ket& rhs) const { return entries_ == rhs.entries_; }

 private:
  std::unordered_map<BasisState, Amplitude, BasisStateHash> entries_;
  std::vector<BasisState> seen_;
  std::unordered_map<BasisState, std::size_t, BasisStateHash> rank_;
};

// A collector decides what happens at the leaves and how sibling subtree
// results combine. merge(left, right) always receives the left subtree's
// result first; collectors may rely on that order.
template <typename C>
concept Collector = requires(C c, const Amplitude& a, const BasisState& s, typename C::result_type r) {
  typename C::result_type;
  { c.inject(a, s) } -> std::same_as<typename C::result_type>;
  { c.merge(std::move(r), std::move(r)) } -> std::same_as<typename C::result_type>;
};

// Every leaf in evaluation order, duplicates and cancellations included.
struct ListCollector {
  using result_type = std::vector<WeightedState>;

  result_type inject(const Amplitude& a, const BasisState& s) const { return {{a, s}}; }

  result_type merge(result_type left, result_type right) const {
    left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
    return left;
  }
};

// Accumulates leaves into a Ket, summing amplitudes per state.
struct HashCollector {
  using result_type = Ket;

  result_type inject(const Amplitude& a, const BasisState& s) const {
    Ket k;
    k.add(s, a);
    return k;
  }

  result_type merge(result_type left, result_type right) const {
    left.merge(right);
    return left;
  }
};

// CCX: negate the target bit iff both controls are satisfied. A fixed-false
// control makes the gate the identity.
inline WeightedState apply_ccx(WeightedState v, const Control& c1, const Control& c2, std::uint32_t target) {
  if (c1.satisfied(v.state) && c2.satisfied(v.state)) v.state.flip(target);
  return v;
}

inline WeightedState apply_ccx(WeightedState v, const Gate& g) {
  return apply_ccx(std::move(v), g.ctrl1, g.ctrl2, g.target);
}

// H on the target wire splits one weighted state into two, scaling each
// amplitude by 1/sqrt(2). Branch order is part of the semantics:
//   target unset: the unchanged state first, then the flipped one;
//   target set:   the flipped state first, the original keeps the negated
//                 amplitude and comes second.
inline std::pair<WeightedState, WeightedState> h_split(const WeightedState& v, std::uint32_t target) {
  Amplitude scaled = v.amp.hscaled();
  WeightedState flipped{scaled, v.state.flipped(target)};
  WeightedState same{scaled, v.state};
  if (v.state.get(target)) {
    same.amp = -same.amp;
    return {std::move(flipped), std::move(same)};
  }
  return {std::move(same), std::move(flipped)};
}

// Evaluates the remaining gates over one weighted state. CCX gates advance
// in place; each H forks the evaluation and the collector merges the two
// subtree results, left branch strictly before right.
template <Collector C>
typename C::result_type eval_circuit(WeightedState v, std::span<const Gate> gates, const C& c) {
  std::size_t i = 0;
  while (i < gates.size() && gates[i].kind == Gate::Kind::CCX) {
    v = apply_ccx(std::move(v), gates[i]);
    ++i;
  }
  if (i == gates.size()) return c.inject(v.amp, v.state);
  auto [first, second] = h_split(v, gates[i].target);
  auto rest = gates.subspan(i + 1);
  auto left = eval_circuit(std::move(first), rest, c);
  auto right = eval_circuit(std::move(second), rest, c);
  return c.merge(std::move(left), std::move(right));
}

template <Collector C>
typename C::result_type run_collect(const Circuit& circ, const BasisState& init, const C& c) {
  circ.validate();
  if (init.width() != circ.qubit_count) {
    throw ValidationError("initial state width " + std::to_string(init.width()) +
                          " does not match circuit qubit count " + std::to_string(circ.qubit_count));
  }
  return eval_circuit(WeightedState{Amplitude::one(), init}, std::span(circ.gates), c);
}

inline std::vector<WeightedState> run_list(const Circuit& circ, const BasisState& init) {
  return run_collect(circ, init, ListCollector{});
}

inline Ket run_hash(const Circuit& circ, const BasisState& init) {
  return run_collect(circ, init, HashCollector{});
}

// Runs the circuit from a superposition: each input entry evaluates
// independently and the results sum. Entries evaluate in the input ket's
// first-reached order so output ordering stays deterministic.
inline Ket run_hash(const Circuit& circ, const Ket& init) {
  circ.validate();
  Ket out;
  for (const WeightedState& e : init.ordered_entries()) {
    if (e.state.width() != circ.qubit_count) {
      throw ValidationError("ket entry width " + std::to_string(e.state.width()) +
                            " does not match circuit qubit count " + std::to_string(circ.qubit_count));
    }
    out.merge(eval_circuit(WeightedState{e.amp, e.state}, std::span(circ.gates), HashCollector{}));
  }
  return out;
}

// Materialized evaluation tree. Each node records the weighted state at
// the moment evaluation reached it (after the preceding CCX run); interior
// nodes are H split points, leaves are final states. The left-to-right
// leaf sequence equals run_list's output.
struct EvalTree {
  WeightedState value;
  std::unique_ptr<EvalTree> left;
  std::unique_ptr<EvalTree> right;

  bool is_leaf() const { return !left && !right; }

  std::size_t leaf_count() const {
    if (is_leaf()) return 1;
    return left->leaf_count() + right->leaf_count();
  }

  void leaves(std::vector<WeightedState>& out) const {
    if (is_leaf()) {
      out.push_back(value);
      return;
    }
    left->leaves(out);
    right->leaves(out);
  }

  std::vector<WeightedState> leaves() const {
    std::vector<WeightedState> out;
    leaves(out);
    return out;
  }
};

inline constexpr std::uint32_t kDefaultMaxTreeH = 20;

namespace detail {

inline std::unique_ptr<EvalTree> build_tree(WeightedState v, std::span<const Gate> gates) {
  std::size_t i = 0;
  while (i < gates.size() && gates[i].kind == Gate::Kind::CCX) {
    v = apply_ccx(std::move(v), gates[i]);
    ++i;
  }
  auto node = std::make_unique<EvalTree>();
  node->value = v;
  if (i == gates.size()) return node;
  auto [first, second] = h_split(v, gates[i].target);
  auto rest = gates.subspan(i + 1);
  node->left = build_tree(std::move(first), rest);
  node->right = build_tree(std::move(second), rest);
  return node;
}

}  // namespace detail

// Builds the full evaluation tree. The tree has 2^h leaves for h H gates,
// so refuse circuits past max_h rather than exhaust memory.
inline std::unique_ptr<EvalTree> trace_tree(const Circuit& circ, const BasisState& init,
                                            std::uint32_t max_h = kDefaultMaxTreeH) {
  circ.validate();
  if (init.width() != circ.qubit_count) {
    throw ValidationError("initial state width " + std::to_string(init.width()) +
                          " does not match circuit qubit count " + std::to_string(circ.qubit_count));
  }
  if (circ.h_count() > max_h) {
    throw LimitError("circuit has " + std::to_string(circ.h_count()) + " H gates; tree tracing is limited to " +
                     std::to_string(max_h));
  }
  return detail::build_tree(WeightedState{Amplitude::one(), init}, std::span(circ.gates));
}

}  // namespace ccxh

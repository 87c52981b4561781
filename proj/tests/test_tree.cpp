#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "ccxh/dot.hpp"
#include "ccxh/interpreter.hpp"
#include "test_support.hpp"

using ccxh::Amplitude;
using ccxh::BasisState;
using ccxh::Circuit;
using ccxh::EvalTree;
using ccxh::Gate;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + needle.size())) ++n;
  return n;
}

}  // namespace

TEST_CASE("a single hadamard makes a three-node tree", "[tree]") {
  const auto tree = ccxh::trace_tree(Circuit{1, {Gate::h(0)}}, BasisState(1));
  REQUIRE_FALSE(tree->is_leaf());
  CHECK(tree->value.amp == Amplitude::one());
  CHECK(tree->value.state.str() == "0");
  CHECK(tree->leaf_count() == 2);
  CHECK(tree->left->is_leaf());
  CHECK(tree->right->is_leaf());
  CHECK(tree->left->value.amp == Amplitude::make(1, 1));
  CHECK(tree->left->value.state.str() == "0");
  CHECK(tree->right->value.amp == Amplitude::make(1, 1));
  CHECK(tree->right->value.state.str() == "1");
}

TEST_CASE("nodes record the state after the preceding ccx run", "[tree]") {
  const auto tree = ccxh::trace_tree(Circuit{1, {ccxh::mk_x(0), Gate::h(0)}}, BasisState(1));
  CHECK(tree->value.state.str() == "1");
  CHECK(tree->left->value == ccxh::WeightedState{Amplitude::make(1, 1), BasisState::parse("0")});
  CHECK(tree->right->value == ccxh::WeightedState{Amplitude::make(-1, 1), BasisState::parse("1")});
}

TEST_CASE("leaf counts grow with the hadamard count", "[tree]") {
  CHECK(ccxh::trace_tree(test_support::hxh_circuit(), BasisState(1))->leaf_count() == 4);
  CHECK(ccxh::trace_tree(test_support::simon_circuit(), BasisState(4))->leaf_count() == 16);
}

TEST_CASE("tree leaves equal the path list", "[tree]") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 100; ++i) {
    const Circuit c = test_support::random_circuit(rng, 5, 10);
    const BasisState init = test_support::random_state(rng, c.qubit_count);
    CHECK(ccxh::trace_tree(c, init)->leaves() == ccxh::run_list(c, init));
  }
}

TEST_CASE("tracing refuses oversized trees", "[tree]") {
  Circuit c{1, {}};
  for (int i = 0; i < 5; ++i) c.gates.push_back(Gate::h(0));
  CHECK_THROWS_AS(ccxh::trace_tree(c, BasisState(1), 4), ccxh::LimitError);
  CHECK(ccxh::trace_tree(c, BasisState(1), 5)->leaf_count() == 32);
}

TEST_CASE("dot output is a structurally valid digraph", "[tree][dot]") {
  const std::string dot = ccxh::to_dot(*ccxh::trace_tree(test_support::simon_circuit(), BasisState(4)));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count_occurrences(dot, "{") == count_occurrences(dot, "}"));
  CHECK(dot.back() == '\n');

  // 16 leaves, 15 interior nodes, every label a ket.
  CHECK(count_occurrences(dot, "label=\"|") == 31);
  CHECK(count_occurrences(dot, "⟩\"") == 31);

  // 30 tree edges; leaf edges carry the quarter-amplitudes.
  CHECK(count_occurrences(dot, "label=\"+0.25\"") + count_occurrences(dot, "label=\"-0.25\"") == 16);
}

TEST_CASE("dot output marks the interference pairs", "[tree][dot]") {
  const std::string dot = ccxh::to_dot(*ccxh::trace_tree(test_support::simon_circuit(), BasisState(4)));
  CHECK(count_occurrences(dot, "style=dashed, color=red") == 4);
  CHECK(count_occurrences(dot, "style=solid, color=blue") == 4);
}

TEST_CASE("dot pairing on the h x h circuit", "[tree][dot]") {
  const std::string dot = ccxh::to_dot(*ccxh::trace_tree(test_support::hxh_circuit(), BasisState(1)));
  CHECK(count_occurrences(dot, "style=dashed, color=red") == 1);
  CHECK(count_occurrences(dot, "style=solid, color=blue") == 1);
}

TEST_CASE("dot for a lone hadamard has no interference pairs", "[tree][dot]") {
  const std::string dot = ccxh::to_dot(*ccxh::trace_tree(Circuit{1, {Gate::h(0)}}, BasisState(1)));
  CHECK(count_occurrences(dot, "label=\"|") == 3);
  CHECK(count_occurrences(dot, "style=dashed") == 0);
  CHECK(count_occurrences(dot, "style=solid") == 0);
  CHECK(count_occurrences(dot, "label=\"+0.7071067811865476\"") == 2);
}

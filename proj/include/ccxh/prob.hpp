#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ccxh/circuit.hpp"
#include "ccxh/interpreter.hpp"

namespace ccxh {

// Classical probability encoded with continuations: an event maps a value
// to a real, a distribution maps an event to its expectation. Built this
// way, amplitudes never meet, so quantum interference cannot happen; the
// encoding is kept as a demonstration of that limit.

using Event = std::function<double(const WeightedState&)>;

class Distribution {
 public:
  explicit Distribution(std::function<double(const Event&)> k) : k_(std::move(k)) {}

  double operator()(const Event& f) const { return k_(f); }

 private:
  std::function<double(const Event&)> k_;
};

// The distribution concentrated on one value: D(f) = f(a).
inline Distribution const_p(WeightedState a) {
  return Distribution([a = std::move(a)](const Event& f) { return f(a); });
}

// Convex combination: D(f) = p·k1(f) + (1-p)·k2(f). k1 is evaluated before
// k2 so events with effects observe the leaves in left-to-right order.
inline Distribution choose_p(double p, Distribution k1, Distribution k2) {
  return Distribution([p, k1 = std::move(k1), k2 = std::move(k2)](const Event& f) {
    const double p1 = p * k1(f);
    const double p2 = (1.0 - p) * k2(f);
    return p1 + p2;
  });
}

inline double expectation(const Event& f, const Distribution& k) { return k(f); }

// Collector whose result is an expectation functional: leaves become point
// distributions, each H split becomes an unbiased choice.
struct ProbCollector {
  using result_type = Distribution;

  result_type inject(const Amplitude& a, const BasisState& s) const { return const_p({a, s}); }

  result_type merge(result_type left, result_type right) const {
    return choose_p(0.5, std::move(left), std::move(right));
  }
};

inline Distribution run_dist(const Circuit& circ, const BasisState& init) {
  return run_collect(circ, init, ProbCollector{});
}

// Enumerates the leaf contributions behind the distribution by probing it
// with a recording event. Every path survives with its signed amplitude:
// per-state sums are never combined, so nothing cancels.
inline std::vector<WeightedState> run_prob(const Circuit& circ, const BasisState& init) {
  Distribution d = run_dist(circ, init);
  std::vector<WeightedState> leaves;
  expectation(
      [&leaves](const WeightedState& v) {
        leaves.push_back(v);
        return 0.0;
      },
      d);
  return leaves;
}

}  // namespace ccxh

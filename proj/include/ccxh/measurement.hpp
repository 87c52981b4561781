#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ccxh/amplitude.hpp"
#include "ccxh/circuit.hpp"
#include "ccxh/errors.hpp"
#include "ccxh/interpreter.hpp"

namespace ccxh {

// Result of observing a bit pattern on a qubit subset. The collapsed ket
// keeps its original (unrenormalized) amplitudes; norm_sq carries the
// renormalization factor 1/sqrt(norm_sq) symbolically, so the arithmetic
// stays exact even though the factor itself is irrational.
struct MeasurementOutcome {
  std::string observed;
  Rational probability;
  Ket collapsed;
  Rational norm_sq;
};

namespace detail {

inline void check_qubits(const std::vector<std::uint32_t>& qubits, std::uint32_t width) {
  if (qubits.empty()) throw MeasurementError("no qubits selected for measurement");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= width) {
      throw MeasurementError("measured qubit " + std::to_string(qubits[i]) + " out of range for width " +
                             std::to_string(width));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[j] == qubits[i]) {
        throw MeasurementError("duplicate measured qubit " + std::to_string(qubits[i]));
      }
    }
  }
}

inline std::string project(const BasisState& s, const std::vector<std::uint32_t>& qubits) {
  std::string out;
  out.reserve(qubits.size());
  for (std::uint32_t q : qubits) out.push_back(s.get(q) ? '1' : '0');
  return out;
}

inline std::uint32_t entry_width(const Ket& k) {
  auto entries = k.ordered_entries();
  if (entries.empty()) throw MeasurementError("cannot measure an empty ket");
  return entries.front().state.width();
}

}  // namespace detail

// Exact probability of each observable pattern on the given qubits.
// The total squared amplitude divides out, so unnormalized kets (e.g. a
// collapsed ket still carrying its norm_sq) measure correctly.
inline std::map<std::string, Rational> outcome_distribution(const Ket& k, const std::vector<std::uint32_t>& qubits) {
  detail::check_qubits(qubits, detail::entry_width(k));
  std::map<std::string, Rational> dist;
  Rational total(0);
  for (const WeightedState& e : k.ordered_entries()) {
    Rational p = e.amp.prob();
    dist[detail::project(e.state, qubits)] += p;
    total += p;
  }
  for (auto& [pattern, p] : dist) p /= total;
  return dist;
}

inline MeasurementOutcome collapse(const Ket& k, const std::vector<std::uint32_t>& qubits,
                                   const std::string& observed) {
  detail::check_qubits(qubits, detail::entry_width(k));
  if (observed.size() != qubits.size()) {
    throw MeasurementError("observed pattern length " + std::to_string(observed.size()) + " does not match " +
                           std::to_string(qubits.size()) + " measured qubits");
  }
  Ket kept;
  Rational matched(0);
  Rational total(0);
  for (const WeightedState& e : k.ordered_entries()) {
    Rational p = e.amp.prob();
    total += p;
    if (detail::project(e.state, qubits) == observed) {
      kept.add(e.state, e.amp);
      matched += p;
    }
  }
  if (matched == Rational(0)) {
    throw MeasurementError("outcome " + observed + " has zero probability");
  }
  return {observed, matched / total, std::move(kept), matched / total};
}

// Draws `shots` independent samples from outcome_distribution. Fixed
// generator (mt19937_64) and fixed traversal order (lexicographic patterns)
// make seed+ket+qubits fully determine the output.
inline std::map<std::string, std::uint64_t> sample(const Ket& k, const std::vector<std::uint32_t>& qubits,
                                                   std::uint64_t rng_seed, std::uint64_t shots) {
  auto dist = outcome_distribution(k, qubits);
  std::mt19937_64 eng(rng_seed);
  std::map<std::string, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < shots; ++i) {
    // 53 uniform bits in [0, 1); boost::rational compares exactly against
    // the double via its own conversion, so walk with doubles.
    const double u = double(eng() >> 11) * 0x1.0p-53;
    double cumulative = 0.0;
    const std::string* chosen = nullptr;
    for (const auto& [pattern, p] : dist) {
      cumulative += to_double(p);
      chosen = &pattern;
      if (u < cumulative) break;
    }
    ++counts[*chosen];  // float round-off at the tail falls into the last pattern
  }
  return counts;
}

}  // namespace ccxh

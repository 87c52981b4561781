#pragma once

#include <cstdint>
#include <vector>

#include "ccxh/amplitude.hpp"
#include "ccxh/circuit.hpp"
#include "ccxh/errors.hpp"

namespace ccxh {

inline constexpr std::uint32_t kMaxDenseQubits = 26;

// Reference simulator: the full 2^n real state vector with direct matrix
// action per gate. Deliberately unclever; it exists to cross-check the tree
// evaluator, not to be fast. Amplitudes over {CCX, H} are real, so no
// complex support.
class StateVector {
 public:
  explicit StateVector(const BasisState& init) : n_(init.width()), a_(std::size_t(1) << init.width(), 0.0) {
    if (n_ > kMaxDenseQubits) {
      throw LimitError("dense simulation is limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    a_[init.index()] = 1.0;
  }

  std::uint32_t width() const { return n_; }
  std::size_t dim() const { return a_.size(); }
  double operator[](std::size_t i) const { return a_[i]; }

  void apply(const Gate& g) {
    if (g.kind == Gate::Kind::H) {
      apply_h(g.target);
    } else {
      apply_ccx(g);
    }
  }

  double norm_sq() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return s;
  }

 private:
  std::uint32_t n_;
  std::vector<double> a_;

  // Index bit of qubit q (qubit 0 is the most significant index bit).
  std::uint64_t mask(std::uint32_t q) const { return std::uint64_t(1) << (n_ - 1 - q); }

  // |0⟩ -> (|0⟩+|1⟩)/sqrt(2), |1⟩ -> (|0⟩-|1⟩)/sqrt(2) on the target wire:
  // every index pair (i, i|m) maps (a, b) to ((a+b)/sqrt(2), (a-b)/sqrt(2)).
  void apply_h(std::uint32_t target) {
    const std::uint64_t m = mask(target);
    for (std::uint64_t i = 0; i < a_.size(); ++i) {
      if (i & m) continue;
      const double lo = a_[i];
      const double hi = a_[i | m];
      a_[i] = (lo + hi) * kInvSqrt2;
      a_[i | m] = (lo - hi) * kInvSqrt2;
    }
  }

  // Swaps the amplitudes of each index pair differing only in the target
  // bit whose control bits are all set. Controls never alias the target
  // (validation), so both pair members agree on every control bit.
  void apply_ccx(const Gate& g) {
    std::uint64_t ctrl_mask = 0;
    for (const Control& c : {g.ctrl1, g.ctrl2}) {
      if (c.is_wire()) {
        ctrl_mask |= mask(c.wire_index());
      } else if (!c.fixed_value()) {
        return;  // fixed-false control: identity
      }
    }
    const std::uint64_t m = mask(g.target);
    for (std::uint64_t i = 0; i < a_.size(); ++i) {
      if ((i & m) || (i & ctrl_mask) != ctrl_mask) continue;
      std::swap(a_[i], a_[i | m]);
    }
  }
};

inline StateVector dense_run(const Circuit& circ, const BasisState& init) {
  circ.validate();
  if (init.width() != circ.qubit_count) {
    throw ValidationError("initial state width " + std::to_string(init.width()) +
                          " does not match circuit qubit count " + std::to_string(circ.qubit_count));
  }
  StateVector sv(init);
  for (const Gate& g : circ.gates) sv.apply(g);
  return sv;
}

}  // namespace ccxh

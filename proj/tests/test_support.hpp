#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ccxh/ccxh.hpp"

namespace test_support {

inline ccxh::Circuit bell_circuit() {
  return {2, {ccxh::Gate::h(0), ccxh::Gate::cx(0, 1)}};
}

inline ccxh::Circuit hxh_circuit() {
  return {1, {ccxh::Gate::h(0), ccxh::Gate::x(0), ccxh::Gate::h(0)}};
}

// Pure part of the Simon instance with hidden shift 3: both output wires
// accumulate x0 xor x1.
inline ccxh::Circuit simon_circuit() {
  return {4,
          {ccxh::Gate::h(0), ccxh::Gate::h(1), ccxh::Gate::cx(0, 2), ccxh::Gate::cx(0, 3), ccxh::Gate::cx(1, 2),
           ccxh::Gate::cx(1, 3), ccxh::Gate::h(0), ccxh::Gate::h(1)}};
}

// Uniform random circuit: up to max_gates gates over 1..max_qubits wires.
// Controls mix wire references and fixed booleans; wires stay distinct
// within a gate.
inline ccxh::Circuit random_circuit(std::mt19937_64& rng, std::uint32_t max_qubits = 6, std::size_t max_gates = 12) {
  const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(1, max_qubits)(rng);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(0, max_gates)(rng);
  ccxh::Circuit circ{n, {}};
  std::uniform_int_distribution<std::uint32_t> wire(0, n - 1);
  std::uniform_int_distribution<int> pct(0, 99);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t target = wire(rng);
    if (pct(rng) < 45) {
      circ.gates.push_back(ccxh::Gate::h(target));
      continue;
    }
    std::vector<std::uint32_t> free_wires;
    for (std::uint32_t q = 0; q < n; ++q) {
      if (q != target) free_wires.push_back(q);
    }
    auto pick_control = [&]() {
      if (!free_wires.empty() && pct(rng) < 70) {
        const std::size_t j = std::uniform_int_distribution<std::size_t>(0, free_wires.size() - 1)(rng);
        const std::uint32_t q = free_wires[j];
        free_wires.erase(free_wires.begin() + j);
        return ccxh::Control::wire(q);
      }
      return ccxh::Control::fixed(pct(rng) < 80);
    };
    ccxh::Control c1 = pick_control();
    ccxh::Control c2 = pick_control();
    circ.gates.push_back({ccxh::Gate::Kind::CCX, c1, c2, target});
  }
  return circ;
}

inline ccxh::BasisState random_state(std::mt19937_64& rng, std::uint32_t width) {
  const std::uint64_t limit = width >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << width) - 1;
  return ccxh::BasisState(width, std::uniform_int_distribution<std::uint64_t>(0, limit)(rng));
}

struct CommandResult {
  int status = -1;
  std::string out;
};

// Runs a shell command, capturing stdout and the exit status.
inline CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}

inline std::string cli_binary() {
  const char* bin = std::getenv("CCXH_BIN");
  return bin ? bin : "";
}

inline std::string source_root() {
  const char* root = std::getenv("CCXH_ROOT");
  return root ? root : "";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace test_support

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccxh/ccxh.hpp"
#include "json.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitLimit = 4;
constexpr int kExitDomain = 5;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ccxh::ValidationError("cannot open circuit file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ccxh::BasisState initial_state(const ccxh::Circuit& circ, const std::string& init) {
  if (init.empty()) return ccxh::BasisState(circ.qubit_count);
  ccxh::BasisState s = ccxh::BasisState::parse(init);
  if (s.width() != circ.qubit_count) {
    throw ccxh::ValidationError("initial state width " + std::to_string(s.width()) +
                                " does not match circuit qubit count " + std::to_string(circ.qubit_count));
  }
  return s;
}

void print_entries(const std::vector<ccxh::WeightedState>& entries, bool as_json, bool ascii) {
  if (!as_json) {
    std::cout << ccxh::render_entries(entries, ascii);
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const ccxh::WeightedState& e : entries) {
    arr.push_back({{"state", e.state.str()},
                   {"amplitude", e.amp.to_double()},
                   {"numerator", e.amp.numerator()},
                   {"half_exp", e.amp.half_exp()}});
  }
  std::cout << arr.dump(2) << "\n";
}

void run_dense(const ccxh::Circuit& circ, const ccxh::BasisState& init, bool as_json, bool ascii) {
  ccxh::StateVector sv = ccxh::dense_run(circ, init);
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < sv.dim(); ++i) {
    if (std::abs(sv[i]) <= 1e-12) continue;
    ccxh::BasisState s(sv.width(), i);
    if (as_json) {
      arr.push_back({{"state", s.str()}, {"amplitude", sv[i]}});
    } else {
      std::cout << ccxh::entry_line(sv[i], s, ascii) << "\n";
    }
  }
  if (as_json) std::cout << arr.dump(2) << "\n";
}

std::vector<std::uint32_t> parse_qubit_list(const std::string& text, std::uint32_t width) {
  std::vector<std::uint32_t> out;
  if (text.empty()) {
    for (std::uint32_t q = 0; q < width; ++q) out.push_back(q);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(std::uint32_t(v));
    } catch (const std::exception&) {
      throw ccxh::ValidationError("bad qubit index '" + item + "' in --qubits");
    }
  }
  return out;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact simulator for {CCX, H} circuits"};
  app.require_subcommand(1);

  std::string file;
  std::string init;
  std::string collector = "hash";
  std::string format = "text";
  std::string qubits;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::uint32_t max_h = ccxh::kDefaultMaxTreeH;
  bool ascii = false;

  CLI::App* run = app.add_subcommand("run", "Evaluate a circuit and print the resulting entries");
  run->add_option("file", file, "circuit file, or - for stdin")->required();
  run->add_option("--collector", collector, "result strategy")
      ->check(CLI::IsMember({"list", "hash", "prob", "dense"}))
      ->capture_default_str();
  run->add_option("--init", init, "initial basis state bits (default all zeros)");
  run->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  run->add_flag("--ascii", ascii, "render kets as |bits> instead of |bits⟩");

  CLI::App* tree = app.add_subcommand("tree", "Emit the evaluation tree as DOT");
  tree->add_option("file", file, "circuit file, or - for stdin")->required();
  tree->add_option("--init", init, "initial basis state bits (default all zeros)");
  tree->add_option("--max-h", max_h, "largest H count to trace")->capture_default_str();

  CLI::App* measure = app.add_subcommand("measure", "Measure the final ket");
  measure->add_option("file", file, "circuit file, or - for stdin")->required();
  measure->add_option("--init", init, "initial basis state bits (default all zeros)");
  measure->add_option("--qubits", qubits, "comma-separated qubit indices (default all)");
  measure->add_option("--shots", shots, "number of samples to draw")->capture_default_str();
  measure->add_option("--seed", seed, "sampling seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const ccxh::Circuit circ = ccxh::parse_circuit(read_input(file));
  const ccxh::BasisState start = initial_state(circ, init);
  const bool as_json = format == "json";

  if (run->parsed()) {
    if (collector == "list") {
      print_entries(ccxh::run_list(circ, start), as_json, ascii);
    } else if (collector == "hash") {
      print_entries(ccxh::run_hash(circ, start).ordered_entries(), as_json, ascii);
    } else if (collector == "prob") {
      print_entries(ccxh::run_prob(circ, start), as_json, ascii);
    } else {
      run_dense(circ, start, as_json, ascii);
    }
  } else if (tree->parsed()) {
    std::cout << ccxh::to_dot(*ccxh::trace_tree(circ, start, max_h));
  } else {
    const ccxh::Ket ket = ccxh::run_hash(circ, start);
    const std::vector<std::uint32_t> qs = parse_qubit_list(qubits, circ.qubit_count);
    for (const auto& [pattern, p] : ccxh::outcome_distribution(ket, qs)) {
      std::cout << pattern << " " << ccxh::format_rational(p) << "\n";
    }
    if (shots > 0) {
      std::cout << "\ncounts:\n";
      for (const auto& [pattern, n] : ccxh::sample(ket, qs, seed, shots)) {
        std::cout << pattern << " " << n << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ccxh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ccxh::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ccxh::LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ccxh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

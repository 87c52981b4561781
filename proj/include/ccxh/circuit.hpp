#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccxh/errors.hpp"

namespace ccxh {

inline constexpr std::uint32_t kMaxQubits = 64;

// Basis state over n qubits. Qubit 0 is the top wire; it is the leftmost
// character of the |...⟩ display and the most significant bit of index(),
// matching the dense simulator's indexing.
class BasisState {
 public:
  BasisState() = default;  // width-0 placeholder; real states come from the ctor below

  explicit BasisState(std::uint32_t width, std::uint64_t index = 0) : n_(width), bits_(index) {
    if (width == 0 || width > kMaxQubits) {
      throw ValidationError("basis state width must be between 1 and " + std::to_string(kMaxQubits));
    }
    if (width < kMaxQubits && index >> width != 0) {
      throw ValidationError("basis state index out of range for width " + std::to_string(width));
    }
  }

  // Parses a bitstring such as "0101", qubit 0 first.
  static BasisState parse(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxQubits) {
      throw ValidationError("bitstring must have between 1 and " + std::to_string(kMaxQubits) + " characters");
    }
    std::uint64_t v = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw ValidationError("bitstring may contain only '0' and '1'");
      v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BasisState(static_cast<std::uint32_t>(bits.size()), v);
  }

  std::uint32_t width() const { return n_; }

  bool get(std::uint32_t qubit) const { return (bits_ >> pos(qubit)) & 1u; }

  void flip(std::uint32_t qubit) { bits_ ^= std::uint64_t(1) << pos(qubit); }

  BasisState flipped(std::uint32_t qubit) const {
    BasisState s = *this;
    s.flip(qubit);
    return s;
  }

  // Integer index with qubit 0 as the most significant bit.
  std::uint64_t index() const { return bits_; }

  std::string str() const {
    std::string s(n_, '0');
    for (std::uint32_t q = 0; q < n_; ++q) {
      if (get(q)) s[q] = '1';
    }
    return s;
  }

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::uint32_t pos(std::uint32_t qubit) const { return n_ - 1 - qubit; }

  std::uint32_t n_ = 0;
  std::uint64_t bits_ = 0;
};

struct BasisStateHash {
  std::size_t operator()(const BasisState& s) const {
    return std::hash<std::uint64_t>{}(s.index() * 0x9e3779b97f4a7c15ull + s.width());
  }
};

// One CCX control: a wire, or a boolean fixed at circuit-construction time.
// X and CX are CCX with fixed-true controls, so fixed values are first-class
// here; a fixed-false control makes the gate the identity.
class Control {
 public:
  static Control wire(std::uint32_t q) { return Control(q); }
  static Control fixed(bool v) { return Control(v); }

  bool is_wire() const { return std::holds_alternative<std::uint32_t>(v_); }
  std::uint32_t wire_index() const { return std::get<std::uint32_t>(v_); }
  bool fixed_value() const { return std::get<bool>(v_); }

  bool satisfied(const BasisState& s) const { return is_wire() ? s.get(wire_index()) : fixed_value(); }

  friend bool operator==(const Control&, const Control&) = default;

 private:
  explicit Control(std::uint32_t q) : v_(q) {}
  explicit Control(bool v) : v_(v) {}
  std::variant<std::uint32_t, bool> v_;
};

struct Gate {
  enum class Kind : std::uint8_t { CCX, H };

  Kind kind = Kind::H;
  Control ctrl1 = Control::fixed(true);  // CCX only
  Control ctrl2 = Control::fixed(true);  // CCX only
  std::uint32_t target = 0;

  static Gate h(std::uint32_t t) { return Gate{Kind::H, Control::fixed(true), Control::fixed(true), t}; }
  static Gate ccx(Control a, Control b, std::uint32_t t) { return Gate{Kind::CCX, a, b, t}; }
  static Gate x(std::uint32_t t) { return ccx(Control::fixed(true), Control::fixed(true), t); }
  static Gate cx(std::uint32_t c, std::uint32_t t) { return ccx(Control::fixed(true), Control::wire(c), t); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

namespace detail {

inline void validate_gate(const Gate& g, std::uint32_t qubit_count, const std::string& where) {
  if (g.target >= qubit_count) {
    throw ValidationError(where + "target " + std::to_string(g.target) + " out of range");
  }
  if (g.kind == Gate::Kind::H) return;
  std::vector<std::uint32_t> wires{g.target};
  for (const Control& c : {g.ctrl1, g.ctrl2}) {
    if (!c.is_wire()) continue;
    const std::uint32_t w = c.wire_index();
    if (w >= qubit_count) {
      throw ValidationError(where + "control wire " + std::to_string(w) + " out of range");
    }
    for (std::uint32_t seen : wires) {
      if (seen == w) {
        throw ValidationError(where + "duplicate wire " + std::to_string(w) + " within one gate");
      }
    }
    wires.push_back(w);
  }
}

}  // namespace detail

struct Circuit {
  std::uint32_t qubit_count = 0;
  std::vector<Gate> gates;

  void validate() const {
    if (qubit_count == 0 || qubit_count > kMaxQubits) {
      throw ValidationError("qubit count must be between 1 and " + std::to_string(kMaxQubits));
    }
    for (std::size_t i = 0; i < gates.size(); ++i) {
      detail::validate_gate(gates[i], qubit_count, "gate " + std::to_string(i) + ": ");
    }
  }

  std::size_t h_count() const {
    std::size_t n = 0;
    for (const Gate& g : gates) n += g.kind == Gate::Kind::H;
    return n;
  }

  // Inverse of parse_circuit. Gates whose controls fit the x/cx sugar are
  // printed in sugared form; other fixed controls print as 't'/'f' tokens.
  std::string to_text() const {
    std::ostringstream out;
    out << "qubits " << qubit_count << "\n";
    for (const Gate& g : gates) {
      if (g.kind == Gate::Kind::H) {
        out << "h " << g.target << "\n";
        continue;
      }
      const bool c1_true = !g.ctrl1.is_wire() && g.ctrl1.fixed_value();
      const bool c2_true = !g.ctrl2.is_wire() && g.ctrl2.fixed_value();
      if (c1_true && c2_true) {
        out << "x " << g.target << "\n";
      } else if (c1_true && g.ctrl2.is_wire()) {
        out << "cx " << g.ctrl2.wire_index() << " " << g.target << "\n";
      } else {
        auto tok = [](const Control& c) {
          return c.is_wire() ? std::to_string(c.wire_index()) : std::string(c.fixed_value() ? "t" : "f");
        };
        out << "ccx " << tok(g.ctrl1) << " " << tok(g.ctrl2) << " " << g.target << "\n";
      }
    }
    return out.str();
  }
};

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

inline std::uint32_t parse_index(const std::string& tok, int line_no) {
  if (tok.empty() || tok.size() > 9) throw ParseError(line_no, "expected a wire index, got '" + tok + "'");
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError(line_no, "expected a wire index, got '" + tok + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return static_cast<std::uint32_t>(v);
}

// Control token: wire index, or 't'/'f' for a fixed control (the form
// to_text uses for gates outside the x/cx sugar).
inline Control parse_control(const std::string& tok, int line_no) {
  if (tok == "t") return Control::fixed(true);
  if (tok == "f") return Control::fixed(false);
  return Control::wire(parse_index(tok, line_no));
}

}  // namespace detail

// Line-oriented circuit text:
//
//   # comment            (blank lines and '#' comments are ignored)
//   qubits <n>           (first significant line)
//   h <t> | x <t> | cx <c> <t> | ccx <c1> <c2> <t>
//
// Returns a validated circuit; range and duplicate-wire problems are
// reported with the offending line number.
inline Circuit parse_circuit(std::string_view text) {
  Circuit circ;
  bool have_header = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string> toks = detail::tokenize(line);
    if (toks.empty()) continue;

    if (!have_header) {
      if (toks[0] != "qubits") throw ParseError(line_no, "expected 'qubits <n>' before any gate");
      if (toks.size() != 2) throw ParseError(line_no, "expected 'qubits <n>'");
      const std::uint32_t n = detail::parse_index(toks[1], line_no);
      if (n == 0 || n > kMaxQubits) {
        throw ValidationError("line " + std::to_string(line_no) + ": qubit count must be between 1 and " +
                              std::to_string(kMaxQubits));
      }
      circ.qubit_count = n;
      have_header = true;
      continue;
    }

    Gate g = Gate::h(0);
    if (toks[0] == "h" && toks.size() == 2) {
      g = Gate::h(detail::parse_index(toks[1], line_no));
    } else if (toks[0] == "x" && toks.size() == 2) {
      g = Gate::x(detail::parse_index(toks[1], line_no));
    } else if (toks[0] == "cx" && toks.size() == 3) {
      g = Gate::cx(detail::parse_index(toks[1], line_no), detail::parse_index(toks[2], line_no));
    } else if (toks[0] == "ccx" && toks.size() == 4) {
      g = Gate::ccx(detail::parse_control(toks[1], line_no), detail::parse_control(toks[2], line_no),
                    detail::parse_index(toks[3], line_no));
    } else {
      throw ParseError(line_no, "unrecognized gate line '" + std::string(line) + "'");
    }

    try {
      detail::validate_gate(g, circ.qubit_count, "");
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
    circ.gates.push_back(g);
  }
  if (!have_header) throw ParseError(line_no, "missing 'qubits <n>' header");
  return circ;
}

// Gate sugar: X negates unconditionally, CX negates when the control wire
// is set. Both are CCX with fixed-true controls.
inline Gate mk_x(std::uint32_t target) { return Gate::x(target); }
inline Gate mk_cx(std::uint32_t ctrl, std::uint32_t target) { return Gate::cx(ctrl, target); }

}  // namespace ccxh

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ccxh/amplitude.hpp"
#include "ccxh/circuit.hpp"
#include "ccxh/interpreter.hpp"

namespace ccxh {

namespace detail {

inline std::string two_decimals(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.2f", v);
  return buf;
}

// Shortest decimal string that round-trips, with an explicit sign.
inline std::string full_repr(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (!s.empty() && s[0] != '-') s.insert(s.begin(), '+');
  return s;
}

}  // namespace detail

// Sign always shown; two decimals when the value is an exact multiple of
// 0.01, full repr otherwise. Canonical amplitudes hit the two-decimal path
// exactly when h is even and 2^(h/2) divides 100k.
inline std::string format_amplitude(const Amplitude& a) {
  if (a.half_exp() % 2 == 0) {
    const unsigned shift = a.half_exp() / 2;
    const __int128 hundredths = __int128(a.numerator()) * 100;
    if (shift < 127 && hundredths % (__int128(1) << shift) == 0) {
      return detail::two_decimals(a.to_double());
    }
  }
  return detail::full_repr(a.to_double());
}

// Same display rule for plain floats (dense-oracle entries), with the
// multiple-of-0.01 test done approximately.
inline std::string format_amplitude(double v) {
  const double scaled = v * 100.0;
  if (std::abs(scaled) < 1e15 && std::abs(scaled - std::round(scaled)) < 1e-9) {
    return detail::two_decimals(v);
  }
  return detail::full_repr(v);
}

inline std::string ket_str(const BasisState& s, bool ascii = false) {
  return "|" + s.str() + (ascii ? ">" : "⟩");
}

inline std::string entry_line(const Amplitude& a, const BasisState& s, bool ascii = false) {
  return "(" + format_amplitude(a) + ket_str(s, ascii) + ")";
}

inline std::string entry_line(double v, const BasisState& s, bool ascii = false) {
  return "(" + format_amplitude(v) + ket_str(s, ascii) + ")";
}

inline std::string render_entries(const std::vector<WeightedState>& entries, bool ascii = false) {
  std::string out;
  for (const WeightedState& e : entries) {
    out += entry_line(e.amp, e.state, ascii);
    out += '\n';
  }
  return out;
}

inline std::string format_rational(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace ccxh

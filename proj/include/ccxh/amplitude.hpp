#pragma once

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <limits>

#include "ccxh/errors.hpp"

namespace ccxh {

// Exact probability for measurement arithmetic.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline constexpr double kInvSqrt2 = 0.70710678118654752440084436210484903928;

// Signed probability amplitude k * (1/sqrt(2))^h with integer numerator k
// and non-negative half-exponent h.
//
// Every amplitude produced by a circuit over {CCX, H} is of this form: each
// H gate contributes one factor of 1/sqrt(2), and every root-to-leaf branch
// crosses every H gate exactly once, so all leaves of one run share the
// denominator sqrt(2)^h. Keeping k as an integer makes destructive
// interference cancel to an exact zero; floating point is display-only.
//
// Canonical form: k == 0 implies h == 0; otherwise k is odd or h < 2
// (while k is even and h >= 2, reduce k /= 2, h -= 2; the value k/2^(h/2)
// is unchanged).
class Amplitude {
 public:
  // Zero.
  constexpr Amplitude() = default;

  static Amplitude one() { return make(1, 0); }

  // Canonicalizing constructor.
  static Amplitude make(std::int64_t numerator, std::uint32_t half_exp) {
    while (numerator != 0 && numerator % 2 == 0 && half_exp >= 2) {
      numerator /= 2;
      half_exp -= 2;
    }
    if (numerator == 0) half_exp = 0;
    Amplitude a;
    a.num_ = numerator;
    a.half_exp_ = half_exp;
    return a;
  }

  std::int64_t numerator() const { return num_; }
  std::uint32_t half_exp() const { return half_exp_; }
  bool is_zero() const { return num_ == 0; }

  // Value scaled by 1/sqrt(2).
  Amplitude hscaled() const {
    if (num_ == 0) return Amplitude{};
    return make(num_, half_exp_ + 1);
  }

  Amplitude operator-() const { return make(-num_, half_exp_); }

  // Exact sum. Operands are lifted to the larger half-exponent; a gap with
  // odd parity cannot arise between amplitudes of a single circuit run, so
  // it is reported as an error rather than approximated.
  friend Amplitude operator+(const Amplitude& a, const Amplitude& b) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    const Amplitude& lo = a.half_exp_ <= b.half_exp_ ? a : b;
    const Amplitude& hi = a.half_exp_ <= b.half_exp_ ? b : a;
    const std::uint32_t gap = hi.half_exp_ - lo.half_exp_;
    if (gap % 2 != 0) {
      throw AmplitudeError(
          "cannot add amplitudes whose half-exponents differ by an odd amount "
          "(h=" + std::to_string(a.half_exp_) + " vs h=" + std::to_string(b.half_exp_) + ")");
    }
    const std::uint32_t shift = gap / 2;
    if (shift >= 63) throw std::overflow_error("amplitude half-exponent gap too large");
    std::int64_t lifted = 0;
    if (__builtin_mul_overflow(lo.num_, std::int64_t(1) << shift, &lifted)) {
      throw std::overflow_error("amplitude numerator overflow while lifting");
    }
    std::int64_t sum = 0;
    if (__builtin_add_overflow(lifted, hi.num_, &sum)) {
      throw std::overflow_error("amplitude numerator overflow in addition");
    }
    return make(sum, hi.half_exp_);
  }

  // k / 2^(h/2), correctly rounded.
  double to_double() const {
    if (num_ == 0) return 0.0;
    double r = std::ldexp(static_cast<double>(num_), -static_cast<int>(half_exp_ / 2));
    if (half_exp_ % 2 != 0) r *= kInvSqrt2;
    return r;
  }

  // Squared magnitude k^2 / 2^h as an exact rational.
  Rational prob() const {
    if (num_ == 0) return Rational(0);
    if (half_exp_ >= 63) throw std::overflow_error("amplitude half-exponent too large for exact probability");
    constexpr std::int64_t kMaxSquarable = 3037000499;  // floor(sqrt(2^63 - 1))
    if (num_ > kMaxSquarable || num_ < -kMaxSquarable) {
      throw std::overflow_error("amplitude numerator too large for exact probability");
    }
    return Rational(num_ * num_, std::int64_t(1) << half_exp_);
  }

  friend bool operator==(const Amplitude&, const Amplitude&) = default;

 private:
  std::int64_t num_ = 0;
  std::uint32_t half_exp_ = 0;
};

}  // namespace ccxh

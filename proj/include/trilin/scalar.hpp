#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <complex>
#include <string>

namespace trilin {

using Rational = mpq_class;
using Complex = std::complex<double>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_rational(const Rational& v) { return v; }
  static std::string str(const Rational& v) { return v.get_str(); }
  static bool is_negative(const Rational& v) { return sgn(v) < 0; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
  static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
  static Complex from_rational(const Rational& v) { return Complex(v.get_d(), 0.0); }
  static std::string str(const Complex& v);
  static bool is_negative(const Complex& v) { return v.imag() == 0.0 && v.real() < 0.0; }
};

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string ScalarTraits<Complex>::str(const Complex& v) {
  if (v.imag() == 0.0) return format_double(v.real());
  if (v.real() == 0.0) return v.imag() == 1.0 ? "i" : v.imag() == -1.0 ? "-i" : format_double(v.imag()) + "*i";
  return "(" + format_double(v.real()) + (v.imag() < 0 ? " - " : " + ") + format_double(std::abs(v.imag())) +
         "*i)";
}

}  // namespace trilin

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace slbethe {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using CD  = std::complex<double>;

// The two coefficient fields everything is templated on. The exact field
// supports decidable equality and gcd normalization; the floating field is
// used for solver workflows where roots are only known numerically.
template <class K> struct field;

template <> struct field<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& x) { return x.is_zero(); }
  static double to_double(const Rat& x) { return x.template convert_to<double>(); }
};

template <> struct field<CD> {
  static constexpr bool exact = false;
  static CD zero() { return CD(0.0, 0.0); }
  static CD one() { return CD(1.0, 0.0); }
  // exact comparison on purpose: trimming of floating polynomials must not
  // silently drop small nonzero coefficients
  static bool is_zero(const CD& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static double to_double(const CD& x) { return std::abs(x); }
};

inline CD to_complex(const Rat& x) { return CD(field<Rat>::to_double(x), 0.0); }
inline CD to_complex(const CD& x) { return x; }

template <class K> K scalar_from_int(long v);
template <> inline Rat scalar_from_int<Rat>(long v) { return Rat(v); }
template <> inline CD scalar_from_int<CD>(long v) { return CD(double(v), 0.0); }

template <class K> K scalar_from_rat(const Rat& v);
template <> inline Rat scalar_from_rat<Rat>(const Rat& v) { return v; }
template <> inline CD scalar_from_rat<CD>(const Rat& v) { return to_complex(v); }

// serialized form used everywhere: "n" or "n/d", lowest terms, d > 0
inline std::string rat_to_string(const Rat& x) {
  const Int n = boost::multiprecision::numerator(x);
  const Int d = boost::multiprecision::denominator(x);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    const Int n(s.substr(0, slash));
    const Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

}  // namespace slbethe

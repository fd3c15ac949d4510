#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace parahull {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

inline Int abs_of(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_of(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_of(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_of(a / gcd_of(a, b) * b);
}

// Floor division and the matching non-negative remainder, for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - b * floor_div(a, b); }

inline Int numerator_of(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rat& q) { return boost::multiprecision::denominator(q); }

// cpp_rational rejects negative denominators; normalize the sign here.
inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(std::move(num), std::move(den));
}

inline Int rat_floor(const Rat& q) { return floor_div(numerator_of(q), denominator_of(q)); }
inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline bool is_integer(const Rat& q) { return denominator_of(q) == 1; }

// Error taxonomy shared across the library.
struct NotEventuallyPositive : std::runtime_error {
  explicit NotEventuallyPositive(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidCycle : std::runtime_error {
  explicit InvalidCycle(const std::string& m) : std::runtime_error(m) {}
};
struct SizeTooLarge : std::runtime_error {
  explicit SizeTooLarge(const std::string& m) : std::runtime_error(m) {}
};
struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct DegenerateDirection : std::runtime_error {
  explicit DegenerateDirection(const std::string& m) : std::runtime_error(m) {}
};
struct NotPointed : std::runtime_error {
  explicit NotPointed(const std::string& m) : std::runtime_error(m) {}
};
struct BelowThreshold : std::runtime_error {
  explicit BelowThreshold(const std::string& m) : std::runtime_error(m) {}
};
struct Unbounded : std::runtime_error {
  explicit Unbounded(const std::string& m) : std::runtime_error(m) {}
};
struct Infeasible : std::runtime_error {
  explicit Infeasible(const std::string& m) : std::runtime_error(m) {}
};
struct UnboundedLP : std::runtime_error {
  explicit UnboundedLP(const std::string& m) : std::runtime_error(m) {}
};
struct InsufficientSamples : std::runtime_error {
  explicit InsufficientSamples(const std::string& m) : std::runtime_error(m) {}
};
struct NoLimitCone : std::runtime_error {
  explicit NoLimitCone(const std::string& m) : std::runtime_error(m) {}
};
struct EmptyD : std::runtime_error {
  explicit EmptyD(const std::string& m) : std::runtime_error(m) {}
};
struct OutsideCone : std::runtime_error {
  explicit OutsideCone(const std::string& m) : std::runtime_error(m) {}
};
struct UnsupportedInput : std::runtime_error {
  explicit UnsupportedInput(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : std::runtime_error {
  ParseError(const std::string& m, int line, int col)
      : std::runtime_error(m), line(line), col(col) {}
  int line;
  int col;
};

}  // namespace parahull

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parahull/intpoly.hpp"

namespace parahull {

// Integral quasipolynomial: value(n) = components[n % period](n), with the
// least period as canonical form.
class QuasiPoly {
 public:
  QuasiPoly() : comps_(1) {}
  explicit QuasiPoly(IntPoly p) : comps_{std::move(p)} {}
  QuasiPoly(std::int64_t period, std::vector<IntPoly> comps);

  std::int64_t period() const { return static_cast<std::int64_t>(comps_.size()); }
  const IntPoly& component(const Int& residue) const;
  const std::vector<IntPoly>& components() const { return comps_; }

  bool is_zero() const;
  // max degree over components; -1 for zero
  int degree() const;

  Int operator()(const Int& n) const;

  QuasiPoly operator-() const;
  QuasiPoly operator+(const QuasiPoly& o) const;
  QuasiPoly operator-(const QuasiPoly& o) const;
  QuasiPoly operator*(const QuasiPoly& o) const;
  QuasiPoly operator*(const Int& c) const;
  bool operator==(const QuasiPoly& o) const { return comps_ == o.comps_; }
  bool operator!=(const QuasiPoly& o) const { return !(*this == o); }

  // Expand to a representation with period m (m must be a multiple).
  QuasiPoly expanded(std::int64_t m) const;

  // q(a*m + b) as a quasipolynomial in m, integer a >= 1, b >= 0.
  QuasiPoly compose_affine(const Int& a, const Int& b) const;

  Int content() const;
  QuasiPoly divide_content(const Int& d) const;

  std::string str(const std::string& var = "n") const;

 private:
  void reduce_period();
  std::vector<IntPoly> comps_;
};

// Guard for runaway periods from repeated lcm composition.
inline constexpr std::int64_t kMaxPeriod = 1 << 18;

std::int64_t checked_period_lcm(std::int64_t a, std::int64_t b);

}  // namespace parahull

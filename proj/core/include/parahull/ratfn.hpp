#pragma once

#include <string>
#include <vector>

#include "parahull/iq.hpp"

namespace parahull {

// Ratio of two integer polynomials in one integer parameter. Canonical form:
// nonzero denominator with positive leading coefficient, numerator and
// denominator coprime in Z[n] (including integer content).
class RatFn {
 public:
  RatFn() : num_(), den_(Int(1)) {}
  explicit RatFn(Int constant) : num_(std::move(constant)), den_(Int(1)) {}
  explicit RatFn(const Rat& q);
  explicit RatFn(IntPoly num) : num_(std::move(num)), den_(Int(1)) {}
  RatFn(IntPoly num, IntPoly den);
  static RatFn variable() { return RatFn(IntPoly::variable()); }
  static RatFn from_ratpoly(const RatPoly& p);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  // deg num - deg den; the zero function reports INT_MIN.
  int size_class() const;

  Rat operator()(const Int& n) const;  // requires den(n) != 0

  RatFn operator-() const;
  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;
  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  std::string str(const std::string& var = "n") const;

 private:
  IntPoly num_;
  IntPoly den_;
};

// Certified eventual sign: sign(r(n)) == sign and den(n) != 0 for all
// integers n >= threshold.
struct EventualSign {
  int sign = 0;
  Int threshold = 0;
};
EventualSign eventual_sign(const RatFn& r);

// r(n) = linear(n) + tail_{n mod modulus}(n) for n >= threshold, where linear
// is an integer-valued function of degree <= 1 and each tail has size O(1).
// The linear part is floor(q) for the degree-<=1 polynomial quotient q of
// num by den, realized as floor((a n + b)/c).
struct RatFnSplit {
  Iq linear;
  Int modulus;               // tails are indexed by n mod modulus
  std::vector<RatFn> tails;  // size() == modulus
  Int threshold;             // den-root bound: identity valid beyond it

  const RatFn& tail(const Int& n) const {
    return tails[static_cast<size_t>(mod_floor(n, modulus).convert_to<std::int64_t>())];
  }
};
RatFnSplit ratfn_split(const RatFn& r);  // throws SizeTooLarge when size > O(n)

// Sign queries made "for n large enough", accumulating the largest certified
// threshold that the enclosing computation depends on.
struct EvContext {
  Int threshold = 0;
  void bump(const Int& t) {
    if (t > threshold) threshold = t;
  }
  int sign(const RatFn& r) {
    EventualSign s = eventual_sign(r);
    bump(s.threshold);
    return s.sign;
  }
  bool positive(const RatFn& r) { return sign(r) > 0; }
  bool nonnegative(const RatFn& r) { return sign(r) >= 0; }
};

}  // namespace parahull

#pragma once

#include <string>
#include <vector>

#include "parahull/cycle.hpp"
#include "parahull/quasipoly.hpp"

namespace parahull {

// Integer-valued function of the form p(n)/C, p an integral quasipolynomial
// and C a positive integer dividing p(n) for every n >= 0.
class Iq {
 public:
  Iq() : num_(), den_(1) {}
  explicit Iq(Int constant) : num_(IntPoly(std::move(constant))), den_(1) {}
  explicit Iq(IntPoly p) : num_(QuasiPoly(std::move(p))), den_(1) {}
  explicit Iq(QuasiPoly p) : num_(std::move(p)), den_(1) {}
  // Checked: verifies C | p(a) on a full window [0, lcm(period, C)).
  Iq(QuasiPoly p, Int den);

  static Iq variable() { return Iq(IntPoly::variable()); }
  // floor((a*n + b) / c), c > 0; period divides c.
  static Iq floor_div_linear(const Int& a, const Int& b, const Int& c);

  const QuasiPoly& numerator() const { return num_; }
  const Int& denominator() const { return den_; }
  std::int64_t period() const { return num_.period(); }
  bool is_zero() const { return num_.is_zero(); }
  int degree() const { return num_.degree(); }

  Int operator()(const Int& n) const;
  // Value on the residue class {n % period() == r} as a polynomial over Q.
  RatPoly class_poly(const Int& r) const;

  Iq operator-() const;
  Iq operator+(const Iq& o) const;
  Iq operator-(const Iq& o) const;
  Iq operator*(const Iq& o) const;
  bool operator==(const Iq& o) const { return den_ == o.den_ && num_ == o.num_; }
  bool operator!=(const Iq& o) const { return !(*this == o); }

  // A modulus m such that q(m*t + a) is an integer polynomial in t for every
  // a; lcm(period, C) always works.
  Int cycle_modulus() const;

  // q(pi*t + a) as an integer polynomial in t. Throws InvalidCycle when pi is
  // not a multiple of a valid cycle modulus for q.
  IntPoly pass_to_cycle(const Int& pi, const Int& a) const;

  // q(a*t + b) as an Iq in t, for a >= 1 and b >= 0.
  Iq compose_affine(const Int& a, const Int& b) const;

  // True when every residue-class component is eventually strictly positive;
  // reports the largest per-class stability threshold.
  bool eventually_positive(Int* threshold = nullptr) const;

  std::string str(const std::string& var = "n") const;

  // Assembles p/C from per-class polynomials over Q (value q_r on class r mod
  // modulus). The values must be integers on each class; this is checked on a
  // sample window rather than re-proved.
  static Iq from_class_polys(const Int& modulus, const std::vector<RatPoly>& per_class);

 private:
  struct Trusted {};
  Iq(QuasiPoly p, Int den, Trusted) : num_(std::move(p)), den_(std::move(den)) { normalize(); }
  void normalize();
  QuasiPoly num_;
  Int den_;
};

struct IqDivMod {
  Iq quot;
  Iq rem;
  Int threshold;  // identity and 0 <= rem < divisor certified for n >= threshold
};

struct IqGcd {
  Iq g;
  Iq a;
  Iq b;
  Int threshold;
};

// Integer quotient/remainder of a by b, pointwise for n >= threshold.
// Requires both arguments eventually positive on every residue class.
IqDivMod iq_divmod(const Iq& a, const Iq& b);

// gcd with Bezout data: g(n) = gcd(s(n), t(n)) = a(n)s(n) + b(n)t(n) for
// n >= threshold, via the Euclidean algorithm over iq_divmod.
IqGcd iq_gcd(const Iq& s, const Iq& t);

namespace detail {
// Floor-division of class-local polynomials: on the cycle, a(n) and b(n) are
// the given polynomials and b is eventually positive. Each leaf refines the
// cycle and carries the quotient/remainder polynomials plus a threshold from
// the sign decisions taken on that branch.
struct ClassQR {
  Cycle cls;
  RatPoly q;
  RatPoly r;
  Int threshold;
};
std::vector<ClassQR> divmod_on_class(const RatPoly& a, const RatPoly& b, const Cycle& cls);

// Like iq_divmod but the dividend may be negative, zero, or of mixed sign
// across classes; only the divisor must be eventually positive. Used by the
// matrix reduction, which divides entries of arbitrary sign by a pivot.
IqDivMod iq_divmod_any_sign(const Iq& a, const Iq& b);

// Exact division: a = q*b as an identity of class polynomials. Throws
// logic_error when b does not divide a.
Iq iq_divide_exact(const Iq& a, const Iq& b);
}  // namespace detail

}  // namespace parahull

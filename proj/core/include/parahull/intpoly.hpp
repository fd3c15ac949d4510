#pragma once

#include <string>
#include <vector>

#include "parahull/numeric.hpp"

namespace parahull {

// Univariate polynomial over Z, coefficients ascending by degree.
// The zero polynomial is the empty coefficient sequence; its degree is
// reported as -1 (standing in for -infinity).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(Int constant);
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<Int> coeffs) : IntPoly(std::vector<Int>(coeffs)) {}

  static IntPoly variable();                 // n
  static IntPoly linear(Int a, Int b);       // a*n + b
  static IntPoly monomial(Int c, int k);     // c*n^k

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int k) const;
  const Int& leading() const;

  Int operator()(const Int& n) const;
  Rat eval_rat(const Rat& x) const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& c) const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }

  IntPoly derivative() const;

  // gcd of all coefficients (0 for the zero polynomial)
  Int content() const;
  // Divides every coefficient by d; requires exactness.
  IntPoly divide_content(const Int& d) const;

  // p(a*m + b) as a polynomial in m.
  IntPoly compose_affine(const Int& a, const Int& b) const;

  std::string str(const std::string& var = "n") const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

// Polynomial gcd over Z[n], normalized primitive with positive leading
// coefficient (up to integer content handled separately by callers).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Univariate polynomial over Q; internal workhorse for division, Sturm
// chains and class-local arithmetic. Same conventions as IntPoly.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(Rat constant);
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<Rat> coeffs) : RatPoly(std::vector<Rat>(coeffs)) {}
  explicit RatPoly(const IntPoly& p);

  static RatPoly linear(Rat a, Rat b);  // a*n + b

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int k) const;
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& c) const;
  bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const RatPoly& o) const { return coeffs_ != o.coeffs_; }

  // Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

  // lcm of coefficient denominators (1 for the zero polynomial).
  Int denominator_lcm() const;
  // Multiplied out by denominator_lcm(); exact.
  IntPoly scaled_integer(Int* scale = nullptr) const;

  // p(a*m + b) in m, rational a, b.
  RatPoly compose_affine(const Rat& a, const Rat& b) const;

  std::string str(const std::string& var = "n") const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

// Eventual sign of p(n) for integer n -> +infinity, with a certified
// threshold: sign(p(n)) == s for all n >= N0. The threshold is the first
// integer beyond every real root (located by a Sturm chain bisection
// inside a Cauchy bound), clamped to be >= 0.
struct StableSign {
  int sign = 0;
  Int threshold = 0;
};
StableSign stable_sign(const IntPoly& p);
StableSign stable_sign(const RatPoly& p);

}  // namespace parahull

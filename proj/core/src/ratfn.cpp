#include "parahull/ratfn.hpp"

#include <climits>
#include <sstream>

namespace parahull {

RatFn::RatFn(const Rat& q)
    : num_(IntPoly(numerator_of(q))), den_(IntPoly(denominator_of(q))) {}

RatFn::RatFn(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFn: zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly(Int(1));
    return;
  }
  IntPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0 || abs_of(g.leading()) > 1) {
    // g is the Z[n] gcd, so both divisions are exact over Z.
    auto [qn, rn] = RatPoly(num_).divmod(RatPoly(g));
    auto [qd, rd] = RatPoly(den_).divmod(RatPoly(g));
    if (!rn.is_zero() || !rd.is_zero()) throw std::logic_error("RatFn: gcd division not exact");
    Int sn, sd;
    num_ = qn.scaled_integer(&sn);
    den_ = qd.scaled_integer(&sd);
    if (sn != 1 || sd != 1) throw std::logic_error("RatFn: gcd is not a divisor over Z");
  }
  if (den_.leading() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

RatFn RatFn::from_ratpoly(const RatPoly& p) {
  Int s;
  IntPoly n = p.scaled_integer(&s);
  return RatFn(std::move(n), IntPoly(s));
}

int RatFn::size_class() const {
  if (num_.is_zero()) return INT_MIN;
  return num_.degree() - den_.degree();
}

Rat RatFn::operator()(const Int& n) const {
  Int d = den_(n);
  if (d == 0) throw std::domain_error("RatFn: evaluation at a denominator root");
  return make_rat(num_(n), d);
}

RatFn RatFn::operator-() const {
  RatFn r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const { return RatFn(num_ * o.num_, den_ * o.den_); }

RatFn RatFn::operator/(const RatFn& o) const {
  if (o.is_zero()) throw std::domain_error("RatFn: division by the zero function");
  return RatFn(num_ * o.den_, den_ * o.num_);
}

std::string RatFn::str(const std::string& var) const {
  if (den_.degree() == 0 && den_.leading() == 1) return num_.str(var);
  std::ostringstream os;
  bool np = num_.degree() > 0;
  bool dp = den_.degree() > 0;
  os << (np ? "(" : "") << num_.str(var) << (np ? ")" : "");
  os << "/";
  os << (dp ? "(" : "") << den_.str(var) << (dp ? ")" : "");
  return os.str();
}

EventualSign eventual_sign(const RatFn& r) {
  EventualSign out;
  StableSign sd = stable_sign(r.den());
  if (r.is_zero()) {
    out.sign = 0;
    out.threshold = 0;
    return out;
  }
  StableSign sn = stable_sign(r.num());
  out.sign = sn.sign * sd.sign;
  out.threshold = sn.threshold > sd.threshold ? sn.threshold : sd.threshold;
  return out;
}

RatFnSplit ratfn_split(const RatFn& r) {
  if (!r.is_zero() && r.size_class() > 1)
    throw SizeTooLarge("ratfn_split: input grows faster than O(n)");
  auto [q, rem] = RatPoly(r.num()).divmod(RatPoly(r.den()));
  // q has degree <= 1; write it as (a n + b)/c and take the floor.
  Rat qa = q.coeff(1), qb = q.coeff(0);
  Int c = lcm_of(denominator_of(qa), denominator_of(qb));
  Int a = numerator_of(qa * Rat(c));
  Int b = numerator_of(qb * Rat(c));

  RatFnSplit out;
  out.linear = Iq::floor_div_linear(a, b, c);
  out.modulus = c;
  std::int64_t m = c.convert_to<std::int64_t>();
  out.tails.reserve(static_cast<size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) {
    Int rho = mod_floor(a * k + b, c);
    // tail = r - (a n + b - rho)/c on the class n == k (mod c)
    RatFn lin(IntPoly::linear(a, b - rho), IntPoly(c));
    out.tails.push_back(r - lin);
  }
  StableSign sd = stable_sign(r.den());
  out.threshold = sd.threshold;
  return out;
}

}  // namespace parahull

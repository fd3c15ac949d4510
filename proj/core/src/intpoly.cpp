#include "parahull/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace parahull {

IntPoly::IntPoly(Int constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::variable() { return IntPoly({Int(0), Int(1)}); }

IntPoly IntPoly::linear(Int a, Int b) { return IntPoly({std::move(b), std::move(a)}); }

IntPoly IntPoly::monomial(Int c, int k) {
  std::vector<Int> v(static_cast<size_t>(k) + 1, Int(0));
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Int(0);
  return coeffs_[static_cast<size_t>(k)];
}

const Int& IntPoly::leading() const {
  static const Int zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

Int IntPoly::operator()(const Int& n) const {
  Int acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Rat IntPoly::eval_rat(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& c) const {
  if (c == 0) return IntPoly();
  IntPoly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<Int> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
  return IntPoly(std::move(v));
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& c : coeffs_) g = gcd_of(g, c);
  return g;
}

IntPoly IntPoly::divide_content(const Int& d) const {
  IntPoly r(*this);
  for (auto& c : r.coeffs_) {
    if (c % d != 0) throw std::logic_error("divide_content: not exact");
    c /= d;
  }
  return r;
}

IntPoly IntPoly::compose_affine(const Int& a, const Int& b) const {
  IntPoly arg = IntPoly::linear(a, b);
  IntPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * arg + IntPoly(*it);
  return acc;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = abs_of(c);
    if (k == 0 || a != 1) os << a.str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  // Monic Euclid over Q, then restore a primitive integer representative.
  RatPoly r0{a}, r1{b};
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    (void)q;
    r0 = r1;
    r1 = r;
  }
  IntPoly g = r0.scaled_integer();
  Int c = g.content();
  if (c != 0) g = g.divide_content(c);
  if (g.leading() < 0) g = -g;
  // The polynomial part is primitive; fold back the integer content gcd.
  Int ca = a.content(), cb = b.content();
  return g * gcd_of(ca, cb);
}

RatPoly::RatPoly(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

RatPoly RatPoly::linear(Rat a, Rat b) { return RatPoly({std::move(b), std::move(a)}); }

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<size_t>(k)];
}

const Rat& RatPoly::leading() const {
  static const Rat zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

Rat RatPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::operator-() const {
  RatPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rat& c) const {
  if (c == 0) return RatPoly();
  RatPoly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw std::logic_error("RatPoly::divmod by zero");
  RatPoly r(*this);
  std::vector<Rat> q;
  int dd = d.degree();
  if (r.degree() >= dd) q.assign(static_cast<size_t>(r.degree() - dd) + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= dd) {
    int k = r.degree() - dd;
    Rat f = r.leading() / d.leading();
    q[static_cast<size_t>(k)] = f;
    // r -= f * n^k * d
    std::vector<Rat> sub(static_cast<size_t>(k), Rat(0));
    for (const auto& c : d.coeffs()) sub.push_back(c * f);
    r = r - RatPoly(std::move(sub));
  }
  return {RatPoly(std::move(q)), r};
}

Int RatPoly::denominator_lcm() const {
  Int l(1);
  for (const auto& c : coeffs_) l = lcm_of(l, denominator_of(c));
  return l;
}

IntPoly RatPoly::scaled_integer(Int* scale) const {
  Int l = denominator_lcm();
  if (scale) *scale = l;
  std::vector<Int> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Rat s = c * Rat(l);
    v.push_back(numerator_of(s));
  }
  return IntPoly(std::move(v));
}

RatPoly RatPoly::compose_affine(const Rat& a, const Rat& b) const {
  RatPoly arg = RatPoly::linear(a, b);
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * arg + RatPoly(*it);
  return acc;
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = c < 0 ? Rat(-c) : c;
    if (k == 0 || a != 1) {
      os << numerator_of(a).str();
      if (denominator_of(a) != 1) os << "/" << denominator_of(a).str();
    }
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Sturm chain of the square-free part; counts distinct real roots in (x, inf).
struct SturmChain {
  std::vector<RatPoly> seq;

  explicit SturmChain(const RatPoly& p) {
    RatPoly p0 = p;
    RatPoly p1;
    {
      // derivative
      std::vector<Rat> v;
      for (size_t i = 1; i < p.coeffs().size(); ++i)
        v.push_back(p.coeffs()[i] * Rat(static_cast<long>(i)));
      p1 = RatPoly(std::move(v));
    }
    seq.push_back(p0);
    if (!p1.is_zero()) seq.push_back(p1);
    while (seq.size() >= 2 && !seq.back().is_zero()) {
      auto [q, r] = seq[seq.size() - 2].divmod(seq.back());
      (void)q;
      if (r.is_zero()) break;
      seq.push_back(-r);
    }
  }

  int variations_at(const Rat& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq) {
      int s = sign_of(p(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  int variations_at_inf() const {
    int v = 0, last = 0;
    for (const auto& p : seq) {
      if (p.is_zero()) continue;
      int s = sign_of(p.leading());
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Distinct real roots in (x, +inf); nudges x off roots of the chain head.
  int roots_above(Rat x) const {
    const RatPoly& head = seq.front();
    Int k(2);
    while (head(x) == 0) {
      x += Rat(1, k);
      k *= 2;
    }
    return variations_at(x) - variations_at_inf();
  }
};

Int cauchy_bound(const RatPoly& p) {
  // 1 + max |c_i| / |lead|
  Rat lead = p.leading();
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat a = p.coeff(i) / lead;
    if (a < 0) a = -a;
    if (a > m) m = a;
  }
  return rat_ceil(m) + 1;
}

}  // namespace

StableSign stable_sign(const RatPoly& p) {
  StableSign out;
  if (p.is_zero()) return out;
  out.sign = sign_of(p.leading());
  if (p.degree() == 0) {
    out.threshold = 0;
    return out;
  }
  SturmChain chain(p);
  Int hi = cauchy_bound(p);
  Int lo = -hi - 1;
  if (chain.roots_above(Rat(lo)) == 0) {
    out.threshold = 0;
    return out;
  }
  // Smallest integer t in (lo, hi] with no roots above t.
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;  // truncation is fine: lo < mid < hi for the mixed-sign case too
    if (lo + hi < 0 && (lo + hi) % 2 != 0) --mid;
    if (chain.roots_above(Rat(mid)) == 0)
      hi = mid;
    else
      lo = mid;
  }
  Int t = hi;
  Rat pt = p(Rat(t));
  Int n0 = (pt == 0) ? t + 1 : t;
  out.threshold = n0 < 0 ? Int(0) : n0;
  return out;
}

StableSign stable_sign(const IntPoly& p) { return stable_sign(RatPoly(p)); }

}  // namespace parahull

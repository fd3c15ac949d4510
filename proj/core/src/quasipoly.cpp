#include "parahull/quasipoly.hpp"

#include <numeric>
#include <sstream>

namespace parahull {

std::int64_t checked_period_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t l = a / g;
  if (l > kMaxPeriod / b) throw UnsupportedInput("quasipolynomial period overflow");
  return l * b;
}

QuasiPoly::QuasiPoly(std::int64_t period, std::vector<IntPoly> comps) : comps_(std::move(comps)) {
  if (period <= 0 || static_cast<std::int64_t>(comps_.size()) != period)
    throw std::logic_error("QuasiPoly: component count must equal the period");
  reduce_period();
}

void QuasiPoly::reduce_period() {
  std::int64_t p = period();
  for (std::int64_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::int64_t r = d; r < p && ok; ++r)
      if (comps_[static_cast<size_t>(r)] != comps_[static_cast<size_t>(r % d)]) ok = false;
    if (ok) {
      comps_.resize(static_cast<size_t>(d));
      return;
    }
  }
}

const IntPoly& QuasiPoly::component(const Int& residue) const {
  Int r = mod_floor(residue, Int(period()));
  return comps_[static_cast<size_t>(r.convert_to<std::int64_t>())];
}

bool QuasiPoly::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

int QuasiPoly::degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

Int QuasiPoly::operator()(const Int& n) const { return component(n)(n); }

QuasiPoly QuasiPoly::operator-() const {
  QuasiPoly r(*this);
  for (auto& c : r.comps_) c = -c;
  return r;
}

QuasiPoly QuasiPoly::expanded(std::int64_t m) const {
  if (m % period() != 0) throw std::logic_error("QuasiPoly::expanded: not a multiple");
  std::vector<IntPoly> v;
  v.reserve(static_cast<size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) v.push_back(comps_[static_cast<size_t>(r % period())]);
  QuasiPoly q;
  q.comps_ = std::move(v);  // deliberately unreduced
  return q;
}

QuasiPoly QuasiPoly::operator+(const QuasiPoly& o) const {
  std::int64_t m = checked_period_lcm(period(), o.period());
  std::vector<IntPoly> v(static_cast<size_t>(m));
  for (std::int64_t r = 0; r < m; ++r)
    v[static_cast<size_t>(r)] =
        comps_[static_cast<size_t>(r % period())] + o.comps_[static_cast<size_t>(r % o.period())];
  return QuasiPoly(m, std::move(v));
}

QuasiPoly QuasiPoly::operator-(const QuasiPoly& o) const { return *this + (-o); }

QuasiPoly QuasiPoly::operator*(const QuasiPoly& o) const {
  std::int64_t m = checked_period_lcm(period(), o.period());
  std::vector<IntPoly> v(static_cast<size_t>(m));
  for (std::int64_t r = 0; r < m; ++r)
    v[static_cast<size_t>(r)] =
        comps_[static_cast<size_t>(r % period())] * o.comps_[static_cast<size_t>(r % o.period())];
  return QuasiPoly(m, std::move(v));
}

QuasiPoly QuasiPoly::operator*(const Int& c) const {
  QuasiPoly r(*this);
  for (auto& p : r.comps_) p = p * c;
  r.reduce_period();
  return r;
}

QuasiPoly QuasiPoly::compose_affine(const Int& a, const Int& b) const {
  if (a <= 0 || b < 0) throw std::logic_error("QuasiPoly::compose_affine: need a >= 1, b >= 0");
  std::int64_t p = period();
  Int g = gcd_of(a, Int(p));
  std::int64_t np = p / g.convert_to<std::int64_t>();
  std::vector<IntPoly> v(static_cast<size_t>(np));
  for (std::int64_t s = 0; s < np; ++s) {
    Int idx = mod_floor(a * s + b, Int(p));
    v[static_cast<size_t>(s)] =
        comps_[static_cast<size_t>(idx.convert_to<std::int64_t>())].compose_affine(a, b);
  }
  return QuasiPoly(np, std::move(v));
}

Int QuasiPoly::content() const {
  Int g(0);
  for (const auto& c : comps_) g = gcd_of(g, c.content());
  return g;
}

QuasiPoly QuasiPoly::divide_content(const Int& d) const {
  QuasiPoly r(*this);
  for (auto& c : r.comps_) c = c.divide_content(d);
  return r;
}

std::string QuasiPoly::str(const std::string& var) const {
  if (period() == 1) return comps_[0].str(var);
  std::ostringstream os;
  os << "{";
  for (std::int64_t r = 0; r < period(); ++r) {
    if (r) os << "; ";
    os << r << ": " << comps_[static_cast<size_t>(r)].str(var);
  }
  os << "}@" << period();
  return os.str();
}

}  // namespace parahull

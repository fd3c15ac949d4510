#include "parahull/iq.hpp"

#include <sstream>

namespace parahull {

namespace {
constexpr int kMaxDivDepth = 512;
}  // namespace

Iq::Iq(QuasiPoly p, Int den) : num_(std::move(p)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Iq: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  // Divisibility on one full window decides it for every n >= 0: p(n) mod C
  // is periodic with period dividing lcm(period, C).
  Int window = lcm_of(Int(num_.period()), den_);
  if (window > (Int(1) << 22)) throw UnsupportedInput("Iq: verification window too large");
  for (Int n = 0; n < window; ++n)
    if (num_(n) % den_ != 0) throw std::invalid_argument("Iq: denominator does not divide values");
  normalize();
}

void Iq::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    num_ = QuasiPoly();
    return;
  }
  Int g = gcd_of(num_.content(), den_);
  if (g > 1) {
    num_ = num_.divide_content(g);
    den_ /= g;
  }
}

Iq Iq::floor_div_linear(const Int& a, const Int& b, const Int& c) {
  if (c <= 0) throw std::invalid_argument("floor_div_linear: modulus must be positive");
  std::int64_t per = c.convert_to<std::int64_t>();
  if (per > kMaxPeriod) throw UnsupportedInput("floor_div_linear: modulus too large");
  std::vector<IntPoly> comps(static_cast<size_t>(per));
  for (std::int64_t r = 0; r < per; ++r) {
    Int rho = mod_floor(a * r + b, c);
    comps[static_cast<size_t>(r)] = IntPoly::linear(a, b - rho);
  }
  Iq out(QuasiPoly(per, std::move(comps)), c, Trusted{});
  return out;
}

Int Iq::operator()(const Int& n) const {
  Int v = num_(n);
  return v / den_;
}

RatPoly Iq::class_poly(const Int& r) const {
  RatPoly p(num_.component(r));
  return p * Rat(Int(1), den_);
}

Iq Iq::operator-() const { return Iq(-num_, den_, Trusted{}); }

Iq Iq::operator+(const Iq& o) const {
  Int l = lcm_of(den_, o.den_);
  QuasiPoly p = num_ * (l / den_) + o.num_ * (l / o.den_);
  return Iq(std::move(p), l, Trusted{});
}

Iq Iq::operator-(const Iq& o) const { return *this + (-o); }

Iq Iq::operator*(const Iq& o) const {
  return Iq(num_ * o.num_, den_ * o.den_, Trusted{});
}

Int Iq::cycle_modulus() const { return lcm_of(Int(num_.period()), den_); }

IntPoly Iq::pass_to_cycle(const Int& pi, const Int& a) const {
  if (pi <= 0 || a < 0 || a >= pi) throw std::invalid_argument("pass_to_cycle: need 0 <= a < pi");
  Int per(num_.period());
  Int g = gcd_of(pi, per);
  // All components hit by {pi*t + a} must agree.
  const IntPoly& f = num_.component(a);
  for (Int r = mod_floor(a, g); r < per; r += g)
    if (num_.component(r) != f)
      throw InvalidCycle("pass_to_cycle: value depends on a finer residue class");
  IntPoly expanded = f.compose_affine(pi, a);
  for (const auto& c : expanded.coeffs())
    if (c % den_ != 0) throw InvalidCycle("pass_to_cycle: result not an integer polynomial");
  return expanded.divide_content(den_);
}

Iq Iq::compose_affine(const Int& a, const Int& b) const {
  return Iq(num_.compose_affine(a, b), den_, Trusted{});
}

bool Iq::eventually_positive(Int* threshold) const {
  Int thr(0);
  for (std::int64_t r = 0; r < period(); ++r) {
    const IntPoly& p = num_.component(Int(r));
    if (p.is_zero()) return false;
    StableSign s = stable_sign(p);
    if (s.sign <= 0) return false;
    if (s.threshold > thr) thr = s.threshold;
  }
  if (threshold) *threshold = thr;
  return true;
}

std::string Iq::str(const std::string& var) const {
  std::ostringstream os;
  std::string body = num_.str(var);
  if (den_ != 1 && num_.period() == 1 && body.find(' ') != std::string::npos)
    os << "(" << body << ")";
  else
    os << body;
  if (den_ != 1) os << "/" << den_.str();
  return os.str();
}

Iq Iq::from_class_polys(const Int& modulus, const std::vector<RatPoly>& per_class) {
  if (modulus <= 0 || modulus > kMaxPeriod) throw UnsupportedInput("from_class_polys: bad modulus");
  std::int64_t m = modulus.convert_to<std::int64_t>();
  if (static_cast<std::int64_t>(per_class.size()) != m)
    throw std::logic_error("from_class_polys: class count mismatch");
  Int den(1);
  for (const auto& q : per_class) den = lcm_of(den, q.denominator_lcm());
  std::vector<IntPoly> comps(per_class.size());
  for (size_t i = 0; i < per_class.size(); ++i) {
    RatPoly scaled = per_class[i] * Rat(den);
    if (scaled.denominator_lcm() != 1) throw std::logic_error("from_class_polys: scaling failed");
    comps[i] = scaled.scaled_integer();
  }
  Iq out(QuasiPoly(m, std::move(comps)), den, Trusted{});
  // Spot check integrality; full integrality follows from integer-valuedness
  // of each class polynomial on its (infinite) class.
  Int cap = out.cycle_modulus();
  if (cap > 256) cap = 256;
  for (Int n = 0; n < cap; ++n)
    if (out.num_(n) % out.den_ != 0)
      throw std::logic_error("from_class_polys: non-integral assembly");
  return out;
}

namespace detail {

namespace {

struct WorkItem {
  Cycle cls;
  Int threshold;
};

void emit_leaf(const Cycle& cls, RatPoly q, RatPoly r, Int thr, const RatPoly& divisor,
               std::vector<ClassQR>& out) {
  // Certify 0 <= r < divisor eventually and fold those thresholds in.
  if (!r.is_zero()) {
    StableSign sr = stable_sign(r);
    if (sr.sign <= 0) throw std::logic_error("iq divmod: remainder not eventually nonnegative");
    if (sr.threshold > thr) thr = sr.threshold;
  }
  StableSign sd = stable_sign(divisor - r);
  if (sd.sign <= 0) throw std::logic_error("iq divmod: remainder not below divisor");
  if (sd.threshold > thr) thr = sd.threshold;
  out.push_back(ClassQR{cls, std::move(q), std::move(r), std::move(thr)});
}

// Floor division of integer polynomials on a cycle; b eventually positive.
// Follows the degree/leading-coefficient induction: equal degrees give a
// constant quotient, a dominant leading coefficient peels a monomial times
// the divisor, and a small leading coefficient peels a floor of a linear
// form, which is where residue classes split.
void core(const IntPoly& A, const IntPoly& B, const Cycle& cls, Int thr,
          std::vector<ClassQR>& out, int depth) {
  if (depth > kMaxDivDepth) throw std::logic_error("iq divmod: recursion depth exceeded");
  const RatPoly rb{B};
  if (A.is_zero()) {
    emit_leaf(cls, RatPoly(), RatPoly(), std::move(thr), rb, out);
    return;
  }
  if (A.leading() < 0) {
    std::vector<ClassQR> inner;
    core(-A, B, cls, thr, inner, depth + 1);
    for (auto& leaf : inner) {
      if (leaf.r.is_zero()) {
        emit_leaf(leaf.cls, -leaf.q, RatPoly(), std::move(leaf.threshold), rb, out);
      } else {
        emit_leaf(leaf.cls, -leaf.q - RatPoly(Rat(1)), rb - leaf.r, std::move(leaf.threshold), rb,
                  out);
      }
    }
    return;
  }

  const int k = A.degree();
  const int l = B.degree();
  const Int& ak = A.leading();
  const Int& bl = B.leading();

  if (k < l) {
    emit_leaf(cls, RatPoly(), RatPoly(A), std::move(thr), rb, out);
    return;
  }

  if (k == l) {
    Int div = floor_div(ak, bl);
    if (div == 0) {
      emit_leaf(cls, RatPoly(), RatPoly(A), std::move(thr), rb, out);
      return;
    }
    IntPoly D = A - B * div;
    Int e(0);
    if (!D.is_zero()) {
      StableSign s = stable_sign(D);
      if (s.sign < 0) e = 1;
      if (s.threshold > thr) thr = s.threshold;
    }
    Int qhat = div - e;
    IntPoly R = A - B * qhat;
    emit_leaf(cls, RatPoly(Rat(qhat)), RatPoly(R), std::move(thr), rb, out);
    return;
  }

  // k > l
  if (ak > bl) {
    Int div = floor_div(ak, bl);
    IntPoly mono = IntPoly::monomial(div, k - l);
    IntPoly D = A - B * mono;
    Int e(0);
    if (!D.is_zero()) {
      StableSign s = stable_sign(D);
      if (s.sign < 0) e = 1;
      if (s.threshold > thr) thr = s.threshold;
    }
    if (div - e <= 0) throw std::logic_error("iq divmod: quotient head vanished");
    IntPoly head = IntPoly::monomial(div - e, k - l);
    IntPoly A1 = A - B * head;
    std::vector<ClassQR> inner;
    core(A1, B, cls, thr, inner, depth + 1);
    RatPoly headq{head};
    for (auto& leaf : inner)
      out.push_back(ClassQR{leaf.cls, leaf.q + headq, leaf.r, leaf.threshold});
    return;
  }

  // a_k <= b_l with k > l: peel floor((a_k n + a_{k-1})/b_l) * n^(k-l-1).
  Int ak1 = A.coeff(k - 1);
  Int split = bl / gcd_of(bl, ak * cls.mod);
  if (Int(cls.mod) * split > kMaxPeriod) throw UnsupportedInput("iq divmod: cycle blow-up");
  std::int64_t nsplit = split.convert_to<std::int64_t>();
  for (std::int64_t j = 0; j < nsplit; ++j) {
    Cycle sub = cls.sub(split, Int(j));
    Int rho = mod_floor(ak * sub.res + ak1, bl);
    IntPoly lin = IntPoly::linear(ak, ak1 - rho);
    IntPoly A1 = A * bl - lin * IntPoly::monomial(Int(1), k - l - 1) * B;
    if (A1.degree() >= k) throw std::logic_error("iq divmod: degree did not drop");
    std::vector<ClassQR> inner;
    core(A1, B * bl, sub, thr, inner, depth + 1);
    RatPoly headq = RatPoly(lin * IntPoly::monomial(Int(1), k - l - 1)) * Rat(Int(1), bl);
    Rat unscale(Int(1), bl);
    for (auto& leaf : inner)
      out.push_back(ClassQR{leaf.cls, leaf.q + headq, leaf.r * unscale, leaf.threshold});
  }
}

}  // namespace

std::vector<ClassQR> divmod_on_class(const RatPoly& a, const RatPoly& b, const Cycle& cls) {
  Int w = lcm_of(a.denominator_lcm(), b.denominator_lcm());
  IntPoly A = (a * Rat(w)).scaled_integer();
  IntPoly B = (b * Rat(w)).scaled_integer();
  std::vector<ClassQR> leaves;
  core(A, B, cls, Int(0), leaves, 0);
  if (w != 1) {
    Rat unscale(Int(1), w);
    for (auto& leaf : leaves) leaf.r = leaf.r * unscale;
  }
  return leaves;
}

}  // namespace detail

namespace {

// Partition refinement glue: leaves live on subcycles of the initial classes;
// rebuild a single per-residue table modulo the lcm of all leaf moduli.
struct LeafTable {
  Int modulus;
  std::vector<const detail::ClassQR*> by_residue;
  Int threshold;

  explicit LeafTable(const std::vector<detail::ClassQR>& leaves) : modulus(1), threshold(0) {
    for (const auto& leaf : leaves) {
      modulus = lcm_of(modulus, leaf.cls.mod);
      if (leaf.threshold > threshold) threshold = leaf.threshold;
    }
    if (modulus > kMaxPeriod) throw UnsupportedInput("iq divmod: assembled period too large");
    std::int64_t m = modulus.convert_to<std::int64_t>();
    by_residue.assign(static_cast<size_t>(m), nullptr);
    for (const auto& leaf : leaves) {
      std::int64_t step = leaf.cls.mod.convert_to<std::int64_t>();
      for (Int r = mod_floor(leaf.cls.res, leaf.cls.mod); r < modulus; r += step) {
        auto idx = static_cast<size_t>(r.convert_to<std::int64_t>());
        if (by_residue[idx]) throw std::logic_error("iq divmod: overlapping leaves");
        by_residue[idx] = &leaf;
      }
    }
    for (auto* p : by_residue)
      if (!p) throw std::logic_error("iq divmod: uncovered residue class");
  }
};

Int positivity_threshold(const Iq& v, const char* who) {
  Int thr(0);
  if (!v.eventually_positive(&thr))
    throw NotEventuallyPositive(std::string(who) + " is not eventually positive on every class");
  return thr;
}

}  // namespace

namespace {

IqDivMod divmod_impl(const Iq& a, const Iq& b, Int thr) {
  std::int64_t m0 = checked_period_lcm(a.period(), b.period());
  std::vector<detail::ClassQR> leaves;
  for (std::int64_t r = 0; r < m0; ++r) {
    auto part = detail::divmod_on_class(a.class_poly(Int(r)), b.class_poly(Int(r)),
                                        Cycle{Int(m0), Int(r)});
    for (auto& leaf : part) leaves.push_back(std::move(leaf));
  }
  LeafTable table(leaves);
  std::int64_t m = table.modulus.convert_to<std::int64_t>();
  std::vector<RatPoly> qs(static_cast<size_t>(m)), rs(static_cast<size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) {
    qs[static_cast<size_t>(r)] = table.by_residue[static_cast<size_t>(r)]->q;
    rs[static_cast<size_t>(r)] = table.by_residue[static_cast<size_t>(r)]->r;
  }
  return IqDivMod{Iq::from_class_polys(table.modulus, qs),
                  Iq::from_class_polys(table.modulus, rs),
                  table.threshold > thr ? table.threshold : thr};
}

}  // namespace

IqDivMod iq_divmod(const Iq& a, const Iq& b) {
  Int thr = positivity_threshold(a, "dividend");
  Int tb = positivity_threshold(b, "divisor");
  if (tb > thr) thr = tb;
  return divmod_impl(a, b, thr);
}

namespace detail {

IqDivMod iq_divmod_any_sign(const Iq& a, const Iq& b) {
  Int thr = positivity_threshold(b, "divisor");
  return divmod_impl(a, b, thr);
}

Iq iq_divide_exact(const Iq& a, const Iq& b) {
  IqDivMod qr = iq_divmod_any_sign(a, b);
  if (!qr.rem.is_zero()) throw std::logic_error("iq_divide_exact: not divisible");
  return qr.quot;
}

}  // namespace detail

namespace {

struct GcdLeaf {
  Cycle cls;
  RatPoly g, x, y;
  Int threshold;
};

void euclid(const RatPoly& r0, const RatPoly& x0, const RatPoly& y0, const RatPoly& r1,
            const RatPoly& x1, const RatPoly& y1, const Cycle& cls, Int thr,
            std::vector<GcdLeaf>& out, int depth) {
  if (depth > kMaxDivDepth) throw std::logic_error("iq gcd: recursion depth exceeded");
  if (r1.is_zero()) {
    out.push_back(GcdLeaf{cls, r0, x0, y0, std::move(thr)});
    return;
  }
  auto leaves = detail::divmod_on_class(r0, r1, cls);
  for (auto& leaf : leaves) {
    RatPoly x2 = x0 - leaf.q * x1;
    RatPoly y2 = y0 - leaf.q * y1;
    Int t = thr > leaf.threshold ? thr : leaf.threshold;
    euclid(r1, x1, y1, leaf.r, x2, y2, leaf.cls, std::move(t), out, depth + 1);
  }
}

}  // namespace

IqGcd iq_gcd(const Iq& s, const Iq& t) {
  Int thr = positivity_threshold(s, "first argument");
  Int tt = positivity_threshold(t, "second argument");
  if (tt > thr) thr = tt;

  std::int64_t m0 = checked_period_lcm(s.period(), t.period());
  std::vector<GcdLeaf> leaves;
  for (std::int64_t r = 0; r < m0; ++r) {
    euclid(s.class_poly(Int(r)), RatPoly(Rat(1)), RatPoly(), t.class_poly(Int(r)), RatPoly(),
           RatPoly(Rat(1)), Cycle{Int(m0), Int(r)}, thr, leaves, 0);
  }

  Int modulus(1);
  Int threshold = thr;
  for (const auto& leaf : leaves) {
    modulus = lcm_of(modulus, leaf.cls.mod);
    if (leaf.threshold > threshold) threshold = leaf.threshold;
  }
  if (modulus > kMaxPeriod) throw UnsupportedInput("iq gcd: assembled period too large");
  std::int64_t m = modulus.convert_to<std::int64_t>();
  std::vector<RatPoly> gs(static_cast<size_t>(m)), xs(static_cast<size_t>(m)),
      ys(static_cast<size_t>(m));
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (const auto& leaf : leaves) {
    std::int64_t step = leaf.cls.mod.convert_to<std::int64_t>();
    for (Int r = mod_floor(leaf.cls.res, leaf.cls.mod); r < modulus; r += step) {
      auto idx = static_cast<size_t>(r.convert_to<std::int64_t>());
      if (seen[idx]) throw std::logic_error("iq gcd: overlapping leaves");
      seen[idx] = true;
      gs[idx] = leaf.g;
      xs[idx] = leaf.x;
      ys[idx] = leaf.y;
    }
  }
  for (bool b : seen)
    if (!b) throw std::logic_error("iq gcd: uncovered residue class");

  return IqGcd{Iq::from_class_polys(modulus, gs), Iq::from_class_polys(modulus, xs),
               Iq::from_class_polys(modulus, ys), threshold};
}

}  // namespace parahull

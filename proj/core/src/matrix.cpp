#include "parahull/matrix.hpp"

#include <optional>

namespace parahull {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("IntMatrix: product shapes");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant: square only");
  int n = rows_;
  if (n == 0) return Int(1);
  // Bareiss fraction-free elimination.
  IntMatrix a(*this);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = v / prev;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMatrix IntMatrix::inverse_unimodular() const {
  Int d = determinant();
  if (d != 1 && d != -1) throw std::logic_error("inverse_unimodular: determinant not a unit");
  int n = rows_;
  // Integer Gauss-Jordan against the identity; pivots stay units in spirit,
  // intermediate values rational-free via adjugate-style elimination is
  // overkill at these sizes, so do exact rational elimination instead.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(at(i, j));
    a[i][n + i] = Rat(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw std::logic_error("inverse_unimodular: singular");
    std::swap(a[c], a[p]);
    Rat inv = Rat(1) / a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix res(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integer(a[i][n + j])) throw std::logic_error("inverse_unimodular: non-integer");
      res.at(i, j) = numerator_of(a[i][n + j]);
    }
  return res;
}

Egcd egcd(const Int& x, const Int& y) {
  Int old_r = x, r = y;
  Int old_s(1), s(0);
  Int old_t(0), t(1);
  while (r != 0) {
    Int q = old_r / r;  // truncated is fine for the invariant
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return Egcd{old_r, old_s, old_t};
}

namespace {

// Row transform rows (p, r) of b by [[a, c], [d, e]]; mirrors the inverse as
// column operations on u so that u*b is preserved.
struct HnfIntState {
  IntMatrix b;
  IntMatrix u;

  void row2(int p, int r, const Int& a, const Int& c, const Int& d, const Int& e) {
    // det must be +1: inverse = [[e, -c], [-d, a]]
    for (int j = 0; j < b.cols(); ++j) {
      Int x = b.at(p, j), y = b.at(r, j);
      b.at(p, j) = a * x + c * y;
      b.at(r, j) = d * x + e * y;
    }
    for (int i = 0; i < u.rows(); ++i) {
      Int x = u.at(i, p), y = u.at(i, r);
      u.at(i, p) = x * e - y * d;
      u.at(i, r) = -x * c + y * a;
    }
  }

  void add_row(int dst, int src, const Int& f) {  // row_dst += f * row_src
    for (int j = 0; j < b.cols(); ++j) b.at(dst, j) += f * b.at(src, j);
    for (int i = 0; i < u.rows(); ++i) u.at(i, src) -= f * u.at(i, dst);
  }

  void negate_row(int r) {
    for (int j = 0; j < b.cols(); ++j) b.at(r, j) = -b.at(r, j);
    for (int i = 0; i < u.rows(); ++i) u.at(i, r) = -u.at(i, r);
  }

  void swap_rows(int p, int r) {
    for (int j = 0; j < b.cols(); ++j) std::swap(b.at(p, j), b.at(r, j));
    for (int i = 0; i < u.rows(); ++i) std::swap(u.at(i, p), u.at(i, r));
  }
};

}  // namespace

HnfInt hnf_int(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw DimensionMismatch("hnf_int: empty matrix");
  HnfIntState st{m, IntMatrix::identity(m.rows())};
  int pivot = 0;
  for (int col = 0; col < m.cols() && pivot < m.rows(); ++col) {
    int first = -1;
    for (int i = pivot; i < m.rows(); ++i)
      if (st.b.at(i, col) != 0) {
        first = i;
        break;
      }
    if (first < 0) continue;
    if (first != pivot) st.swap_rows(pivot, first);
    for (int i = pivot + 1; i < m.rows(); ++i) {
      if (st.b.at(i, col) == 0) continue;
      Int x = st.b.at(pivot, col), y = st.b.at(i, col);
      Egcd e = egcd(x, y);
      st.row2(pivot, i, e.a, e.b, -(y / e.g), x / e.g);
    }
    if (st.b.at(pivot, col) < 0) st.negate_row(pivot);
    const Int& d = st.b.at(pivot, col);
    for (int i = 0; i < pivot; ++i) {
      Int q = floor_div(st.b.at(i, col), d);
      if (q != 0) st.add_row(i, pivot, -q);
    }
    ++pivot;
  }
  return HnfInt{std::move(st.u), std::move(st.b)};
}

IqMatrix::IqMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  e_.reserve(size_t(rows_) * cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) e_.emplace_back(Iq(m.at(i, j)));
}

IntMatrix IqMatrix::eval(const Int& n) const {
  IntMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j)(n);
  return r;
}

namespace {

// Signals that the active class must be split into `period` subclasses
// before the sign of some entry is well defined.
struct RefineRequest {
  std::int64_t period;
};

// Eventual sign of an Iq that must agree across its residue classes.
int uniform_sign(const Iq& v, Int& threshold) {
  int sign = 2;
  for (std::int64_t r = 0; r < v.period(); ++r) {
    const IntPoly& p = v.numerator().component(Int(r));
    int s;
    Int t(0);
    if (p.is_zero()) {
      s = 0;
    } else {
      StableSign ss = stable_sign(p);
      s = ss.sign;
      t = ss.threshold;
    }
    if (sign == 2) sign = s;
    if (s != sign) throw RefineRequest{v.period()};
    if (t > threshold) threshold = t;
  }
  return sign;
}

struct HnfIqState {
  IqMatrix b;
  IqMatrix u;
  Int threshold{0};

  void bump(const Int& t) {
    if (t > threshold) threshold = t;
  }

  void row2(int p, int r, const Iq& a, const Iq& c, const Iq& d, const Iq& e) {
    for (int j = 0; j < b.cols(); ++j) {
      Iq x = b.at(p, j), y = b.at(r, j);
      b.at(p, j) = a * x + c * y;
      b.at(r, j) = d * x + e * y;
    }
    for (int i = 0; i < u.rows(); ++i) {
      Iq x = u.at(i, p), y = u.at(i, r);
      u.at(i, p) = x * e - y * d;
      u.at(i, r) = y * a - x * c;
    }
  }

  void add_row(int dst, int src, const Iq& f) {
    for (int j = 0; j < b.cols(); ++j) b.at(dst, j) = b.at(dst, j) + f * b.at(src, j);
    for (int i = 0; i < u.rows(); ++i) u.at(i, src) = u.at(i, src) - f * u.at(i, dst);
  }

  void negate_row(int r) {
    for (int j = 0; j < b.cols(); ++j) b.at(r, j) = -b.at(r, j);
    for (int i = 0; i < u.rows(); ++i) u.at(i, r) = -u.at(i, r);
  }

  void swap_rows(int p, int r) {
    for (int j = 0; j < b.cols(); ++j) std::swap(b.at(p, j), b.at(r, j));
    for (int i = 0; i < u.rows(); ++i) std::swap(u.at(i, p), u.at(i, r));
  }
};

// One full HNF run over the IQ ring on a fixed class (entries already
// substituted). Throws RefineRequest when a sign decision is ambiguous.
HnfIqState hnf_iq_run(const IqMatrix& m) {
  HnfIqState st{m, IqMatrix(IntMatrix::identity(m.rows()))};
  int pivot = 0;
  for (int col = 0; col < m.cols() && pivot < m.rows(); ++col) {
    int first = -1;
    for (int i = pivot; i < m.rows(); ++i)
      if (!st.b.at(i, col).is_zero()) {
        first = i;
        break;
      }
    if (first < 0) continue;
    if (first != pivot) st.swap_rows(pivot, first);
    {
      Int t(0);
      int s = uniform_sign(st.b.at(pivot, col), t);
      st.bump(t);
      if (s < 0) st.negate_row(pivot);
    }
    for (int i = pivot + 1; i < m.rows(); ++i) {
      if (st.b.at(i, col).is_zero()) continue;
      Int t(0);
      int s = uniform_sign(st.b.at(i, col), t);
      st.bump(t);
      if (s < 0) st.negate_row(i);
      Iq x = st.b.at(pivot, col), y = st.b.at(i, col);
      IqGcd g = iq_gcd(x, y);
      st.bump(g.threshold);
      Iq xr = detail::iq_divide_exact(x, g.g);
      Iq yr = detail::iq_divide_exact(y, g.g);
      st.row2(pivot, i, g.a, g.b, -yr, xr);
    }
    const Iq& d = st.b.at(pivot, col);
    for (int i = 0; i < pivot; ++i) {
      if (st.b.at(i, col).is_zero()) continue;
      IqDivMod qr = detail::iq_divmod_any_sign(st.b.at(i, col), d);
      st.bump(qr.threshold);
      if (!qr.quot.is_zero()) st.add_row(i, pivot, -qr.quot);
    }
    ++pivot;
  }
  return st;
}

struct ClassResult {
  Cycle cls;
  HnfIqState state;
};

Iq substitute(const Iq& v, const Cycle& cls) { return v.compose_affine(cls.mod, cls.res); }

IqMatrix substitute(const IqMatrix& m, const Cycle& cls) {
  IqMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = substitute(m.at(i, j), cls);
  return r;
}

// Per-entry reassembly of class-local results into one Iq in the original
// parameter.
class ClassAssembler {
 public:
  void add(const Cycle& cls, RatPoly p) { pieces_.push_back({cls, std::move(p)}); }

  Iq build() const {
    Int modulus(1);
    for (const auto& [cls, p] : pieces_) modulus = lcm_of(modulus, cls.mod);
    if (modulus > kMaxPeriod) throw UnsupportedInput("class assembly: period too large");
    std::int64_t m = modulus.convert_to<std::int64_t>();
    std::vector<RatPoly> table(static_cast<size_t>(m));
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (const auto& [cls, p] : pieces_) {
      std::int64_t step = cls.mod.convert_to<std::int64_t>();
      for (Int r = mod_floor(cls.res, cls.mod); r < modulus; r += step) {
        auto idx = static_cast<size_t>(r.convert_to<std::int64_t>());
        if (seen[idx]) throw std::logic_error("class assembly: overlap");
        seen[idx] = true;
        table[idx] = p;
      }
    }
    for (bool s : seen)
      if (!s) throw std::logic_error("class assembly: gap");
    return Iq::from_class_polys(modulus, table);
  }

 private:
  std::vector<std::pair<Cycle, RatPoly>> pieces_;
};

}  // namespace

HnfIq hnf_iq(const IqMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw DimensionMismatch("hnf_iq: empty matrix");

  std::vector<Cycle> work{Cycle{Int(1), Int(0)}};
  std::vector<ClassResult> done;
  int guard = 0;
  while (!work.empty()) {
    if (++guard > 1 << 16) throw UnsupportedInput("hnf_iq: class refinement blow-up");
    Cycle cls = work.back();
    work.pop_back();
    IqMatrix local = substitute(m, cls);
    try {
      done.push_back(ClassResult{cls, hnf_iq_run(local)});
    } catch (const RefineRequest& rr) {
      if (cls.mod * rr.period > kMaxPeriod)
        throw UnsupportedInput("hnf_iq: refinement period too large");
      for (std::int64_t j = 0; j < rr.period; ++j) work.push_back(cls.sub(Int(rr.period), Int(j)));
    }
  }

  HnfIq out;
  out.u = IqMatrix(m.rows(), m.rows());
  out.b = IqMatrix(m.rows(), m.cols());
  out.threshold = 0;

  auto assemble = [&](auto&& get, int rows, int cols, IqMatrix& dst) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        ClassAssembler acc;
        for (const auto& res : done) {
          const Iq& v = get(res.state, i, j);
          for (std::int64_t w = 0; w < v.period(); ++w) {
            // class in the original parameter: n == res + mod*w (mod mod*P)
            Cycle piece{res.cls.mod * v.period(), res.cls.res + res.cls.mod * w};
            RatPoly in_u = v.class_poly(Int(w));
            RatPoly in_n =
                in_u.compose_affine(Rat(Int(1), res.cls.mod), Rat(-res.cls.res, res.cls.mod));
            acc.add(piece, std::move(in_n));
          }
        }
        dst.at(i, j) = acc.build();
      }
  };
  assemble([](const HnfIqState& st, int i, int j) -> const Iq& { return st.u.at(i, j); },
           m.rows(), m.rows(), out.u);
  assemble([](const HnfIqState& st, int i, int j) -> const Iq& { return st.b.at(i, j); },
           m.rows(), m.cols(), out.b);
  for (const auto& res : done) {
    Int t = res.cls.res + res.cls.mod * res.state.threshold;
    if (t > out.threshold) out.threshold = t;
  }
  return out;
}

}  // namespace parahull

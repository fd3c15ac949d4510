#pragma once

#include <random>
#include <vector>

#include "parahull/iq.hpp"
#include "parahull/matrix.hpp"
#include "parahull/ratfn.hpp"

namespace ptest {

using namespace parahull;

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Int(d(rng));
}

inline IntPoly rand_intpoly(Rng& rng, int max_deg, long coeff_mag, bool nonzero = true) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  int deg = dd(rng);
  std::vector<Int> c(static_cast<size_t>(deg) + 1);
  for (auto& x : c) x = rand_int(rng, -coeff_mag, coeff_mag);
  IntPoly p{std::move(c)};
  if (nonzero && p.is_zero()) return IntPoly(rand_int(rng, 1, coeff_mag));
  return p;
}

inline QuasiPoly rand_quasipoly(Rng& rng, int max_period, int max_deg, long coeff_mag) {
  std::uniform_int_distribution<int> dp(1, max_period);
  int per = dp(rng);
  std::vector<IntPoly> comps(static_cast<size_t>(per));
  for (auto& c : comps) c = rand_intpoly(rng, max_deg, coeff_mag, false);
  return QuasiPoly(per, std::move(comps));
}

// Random genuinely fractional integer-valued functions: polynomial plus a
// couple of floor terms.
inline Iq rand_iq(Rng& rng, int max_deg = 2, long mag = 6) {
  Iq v(rand_intpoly(rng, max_deg, mag, false));
  std::uniform_int_distribution<int> dt(0, 2);
  int terms = dt(rng);
  for (int i = 0; i < terms; ++i) {
    Iq f = Iq::floor_div_linear(rand_int(rng, -mag, mag), rand_int(rng, -mag, mag),
                                rand_int(rng, 1, 4));
    if (dt(rng) == 0)
      v = v * f;
    else
      v = v + f;
  }
  return v;
}

// Mostly-linear Iq: a small linear polynomial plus at most one floor term.
// Keeps Euclidean-algorithm periods at desk scale.
inline Iq rand_iq_linearish(Rng& rng, long mag = 4) {
  Iq v(IntPoly::linear(rand_int(rng, 1, mag), rand_int(rng, -mag, mag)));
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng))
    v = v + Iq::floor_div_linear(rand_int(rng, 0, mag), rand_int(rng, -mag, mag),
                                 rand_int(rng, 1, 3));
  return v;
}

// Random IqMatrix kept at desk scale: HNF entry periods grow with products of
// pivot constants, so floors appear only on small shapes and slopes stay tiny.
inline IqMatrix rand_iq_matrix(Rng& rng, int rows, int cols) {
  bool small = rows * cols <= 4;
  IqMatrix m(rows, cols);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Iq v(IntPoly::linear(rand_int(rng, 1, small ? 3 : 2), rand_int(rng, -3, 3)));
      if (small && coin(rng) == 0)
        v = v + Iq::floor_div_linear(rand_int(rng, 0, 1), rand_int(rng, -2, 2), Int(2));
      if (coin(rng) == 0) v = -v;
      m.at(i, j) = v;
    }
  return m;
}

// Random eventually positive Iq without inflating the degree.
inline Iq rand_iq_positive(Rng& rng, int max_deg = 2, long mag = 6) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Iq v = rand_iq(rng, max_deg, mag);
    if (v.eventually_positive()) return v;
    Iq w = -v;
    if (w.eventually_positive()) return w;
    w = v + Iq(Int(20 * mag));
    if (w.eventually_positive()) return w;
  }
  throw std::logic_error("rand_iq_positive: could not generate");
}

// Lagrange interpolation oracle: least-degree rational polynomial through the
// sample points (m, value).
inline RatPoly interpolate(const std::vector<std::pair<Int, Int>>& pts) {
  RatPoly acc;
  for (size_t i = 0; i < pts.size(); ++i) {
    RatPoly term{Rat(pts[i].second)};
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      Rat scale = make_rat(Int(1), pts[i].first - pts[j].first);
      term = term * RatPoly({Rat(Int(-pts[j].first)) * scale, scale});
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace ptest

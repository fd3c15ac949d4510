#include "doctest.h"
#include "support.hpp"

#include "parahull/matrix.hpp"

using namespace parahull;
using ptest::Rng;

namespace {

IntMatrix mat2(long a, long b, long c, long d) {
  IntMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

bool is_hnf(const IntMatrix& b) {
  // upper triangular
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < std::min(i, b.cols()); ++j)
      if (b.at(i, j) != 0) return false;
  // column entries reduced against a nonzero diagonal
  for (int j = 0; j < std::min(b.rows(), b.cols()); ++j) {
    const Int& d = b.at(j, j);
    if (d == 0) continue;
    if (d < 0) return false;
    for (int i = 0; i < j; ++i)
      if (b.at(i, j) < 0 || b.at(i, j) >= d) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf_int identity") {
  auto [u, b] = hnf_int(IntMatrix::identity(3));
  CHECK(u == IntMatrix::identity(3));
  CHECK(b == IntMatrix::identity(3));
}

TEST_CASE("hnf_int worked 2x2 example") {
  IntMatrix m = mat2(2, 4, 1, 3);
  auto [u, b] = hnf_int(m);
  CHECK(b == mat2(1, 1, 0, 2));
  Int det = u.determinant();
  CHECK((det == 1 || det == -1));
  CHECK(u * b == m);
}

TEST_CASE("hnf_int on a column vector") {
  IntMatrix m(2, 1);
  m.at(0, 0) = 2;
  m.at(1, 0) = 4;
  auto [u, b] = hnf_int(m);
  CHECK(b.at(0, 0) == 2);
  CHECK(b.at(1, 0) == 0);
  CHECK(u * b == m);
  Int det = u.determinant();
  CHECK((det == 1 || det == -1));
}

TEST_CASE("hnf_int random property suite") {
  Rng rng(20240813);
  for (int iter = 0; iter < 120; ++iter) {
    std::uniform_int_distribution<int> dd(1, 5);
    int r = dd(rng), c = dd(rng);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = ptest::rand_int(rng, -50, 50);
    auto [u, b] = hnf_int(m);
    Int det = u.determinant();
    CHECK((det == 1 || det == -1));
    CHECK(u * b == m);
    CHECK(is_hnf(b));
  }
}

TEST_CASE("hnf_iq on the column (2n, 4n)") {
  IqMatrix m(2, 1);
  m.at(0, 0) = Iq(IntPoly::linear(Int(2), Int(0)));
  m.at(1, 0) = Iq(IntPoly::linear(Int(4), Int(0)));
  HnfIq h = hnf_iq(m);
  CHECK(h.b.at(0, 0) == Iq(IntPoly::linear(Int(2), Int(0))));
  CHECK(h.b.at(1, 0).is_zero());
  for (Int n = std::max(h.threshold, Int(1)); n <= 50; ++n) {
    IntMatrix un = h.u.eval(n);
    Int det = un.determinant();
    CHECK((det == 1 || det == -1));
    CHECK(un * h.b.eval(n) == m.eval(n));
  }
}

TEST_CASE("hnf_iq of a diagonal matrix is itself") {
  IqMatrix m(2, 2);
  m.at(0, 0) = Iq::variable();
  m.at(1, 1) = Iq::variable();
  HnfIq h = hnf_iq(m);
  CHECK(h.b.at(0, 0) == Iq::variable());
  CHECK(h.b.at(1, 1) == Iq::variable());
  CHECK(h.b.at(0, 1).is_zero());
  CHECK(h.b.at(1, 0).is_zero());
  CHECK(h.u.at(0, 0) == Iq(Int(1)));
  CHECK(h.u.at(1, 1) == Iq(Int(1)));
}

TEST_CASE("hnf_iq on the column (n, n+2) splits by parity") {
  IqMatrix m(2, 1);
  m.at(0, 0) = Iq::variable();
  m.at(1, 0) = Iq(IntPoly::linear(Int(1), Int(2)));
  HnfIq h = hnf_iq(m);
  CHECK(h.b.at(1, 0).is_zero());
  const Iq& g = h.b.at(0, 0);
  for (Int n = std::max(h.threshold, Int(2)); n <= 60; ++n) {
    CHECK(g(n) == gcd_of(n, n + 2));
    auto [cu, cb] = hnf_int(m.eval(n));
    CHECK(h.b.eval(n) == cb);
    IntMatrix un = h.u.eval(n);
    Int det = un.determinant();
    CHECK((det == 1 || det == -1));
    CHECK(un * h.b.eval(n) == m.eval(n));
  }
}

TEST_CASE("hnf_iq commutation with evaluation on random matrices") {
  Rng rng(97531);
  for (int iter = 0; iter < 25; ++iter) {
    std::uniform_int_distribution<int> dd(1, 3);
    int r = dd(rng), c = dd(rng);
    IqMatrix m = ptest::rand_iq_matrix(rng, r, c);
    HnfIq h = hnf_iq(m);
    for (Int n = h.threshold; n < h.threshold + 25; ++n) {
      auto [cu, cb] = hnf_int(m.eval(n));
      CHECK(h.b.eval(n) == cb);
      IntMatrix un = h.u.eval(n);
      Int det = un.determinant();
      CHECK((det == 1 || det == -1));
      CHECK(un * h.b.eval(n) == m.eval(n));
    }
  }
}

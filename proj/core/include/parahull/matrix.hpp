#pragma once

#include <vector>

#include "parahull/iq.hpp"

namespace parahull {

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Int(0)) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  Int determinant() const;  // square only; fraction-free elimination
  IntMatrix inverse_unimodular() const;  // requires det = +-1

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

struct HnfInt {
  IntMatrix u;  // unimodular, m = u * b
  IntMatrix b;  // row-style Hermite normal form (echelon, pivots positive,
                // entries above a pivot reduced into [0, pivot))
};

// Deterministic Hermite normal form with multiplier on the left: M = U * B.
// Columns are processed left to right; below-pivot entries are cleared by a
// single extended-gcd row transform; entries above each pivot are reduced
// modulo it. Zero columns are allowed and leave no pivot.
HnfInt hnf_int(const IntMatrix& m);

// Extended gcd: g = gcd(x, y) >= 0 with a*x + b*y = g.
struct Egcd {
  Int g, a, b;
};
Egcd egcd(const Int& x, const Int& y);

class IqMatrix {
 public:
  IqMatrix() : rows_(0), cols_(0) {}
  IqMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  explicit IqMatrix(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Iq& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Iq& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  IntMatrix eval(const Int& n) const;

 private:
  int rows_, cols_;
  std::vector<Iq> e_;
};

struct HnfIq {
  IqMatrix u;
  IqMatrix b;
  Int threshold;  // U(n) unimodular, M(n) = U(n)B(n), B(n) in HNF for n >= threshold
};

// The integer HNF algorithm run over the IQ ring: pivots via iq_gcd, entry
// reduction via iq_divmod, branch decisions fixed by eventual signs. Residue
// classes are refined (and the run restarted on the finer class) whenever a
// sign decision differs between classes of an entry.
HnfIq hnf_iq(const IqMatrix& m);

}  // namespace parahull

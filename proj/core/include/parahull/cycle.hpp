#pragma once

#include "parahull/numeric.hpp"

namespace parahull {

// Arithmetic progression {n >= 0 : n == res (mod mod)}, mod >= 1.
struct Cycle {
  Int mod = 1;
  Int res = 0;

  bool contains(const Int& n) const { return mod_floor(n - res, mod) == 0; }

  // Refine by an extra modulus m: the cycle splits into m/gcd-ish pieces;
  // piece k is {n == res + mod*k (mod mod*m)}.
  Cycle sub(const Int& m, const Int& k) const { return Cycle{mod * m, res + mod * k}; }

  bool operator==(const Cycle& o) const { return mod == o.mod && res == o.res; }
};

}  // namespace parahull

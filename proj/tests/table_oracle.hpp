#pragma once

// Character values transcribed from the printed tables for T_4n, built with
// roots of unity of the smallest order that contains them.

#include <string>

#include "brsym/cyclotomic.hpp"
#include "brsym/dicyclic.hpp"

namespace oracle {

using brsym::Cyclotomic;

// Table position: 0..3 are psi_0..psi_3, 3 + h is chi_h.
inline Cyclotomic table_value(int n, int pos, const brsym::DicyclicElement& g) {
  const Cyclotomic one(1L), minus_one(-1L), zero(0L);
  const Cyclotomic i = brsym::root_of_unity(4, 1);
  if (pos >= 4) {
    const int h = pos - 3;
    if (g.b) return zero;
    if (g.a == 0) return Cyclotomic(2L);
    if (g.a == n) return Cyclotomic(h % 2 ? -2L : 2L);
    const int k = g.a < n ? g.a : 2 * n - g.a;
    return brsym::root_of_unity(2 * n, static_cast<long>(k) * h) +
           brsym::root_of_unity(2 * n, -static_cast<long>(k) * h);
  }
  // Columns: e, r^n, r^k, s, rs.
  int column;
  int k = 0;
  if (g.b) {
    column = g.a % 2 == 0 ? 3 : 4;
  } else if (g.a == 0) {
    column = 0;
  } else if (g.a == n) {
    column = 1;
  } else {
    column = 2;
    k = g.a < n ? g.a : 2 * n - g.a;
  }
  const Cyclotomic sign_k = k % 2 ? minus_one : one;
  const bool even = n % 2 == 0;
  switch (pos) {
    case 0:
      return one;
    case 1: {
      const Cyclotomic row[5] = {one, even ? one : minus_one, sign_k, even ? one : i, even ? minus_one : -i};
      return row[column];
    }
    case 2: {
      const Cyclotomic row[5] = {one, one, one, minus_one, minus_one};
      return row[column];
    }
    default: {
      const Cyclotomic row[5] = {one, even ? one : minus_one, sign_k, even ? minus_one : -i, even ? one : i};
      return row[column];
    }
  }
}

}  // namespace oracle

/*
  This is qpoly.hpp: exact integer polynomials in q, and Laurent
  polynomials in v with q = v^2 (v is the grading parameter read off at
  the multiplicity-extraction boundary).

  QPoly stores coefficients densely from q^0 with no trailing zero;
  the zero polynomial is the empty list.  LPoly stores a contiguous
  coefficient window with an explicit lowest exponent and is normalized
  the same way at both ends.
*/

#pragma once

#include "wsk/types.hpp"

namespace wsk {

struct QPoly {
  std::vector<Int> c;  // c[i] = coefficient of q^i

  static QPoly zero() { return {}; }
  static QPoly one() { return {{1}}; }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : 0;
  }
  Int eval_one() const {
    Int s = 0;
    for (Int x : c) s += x;
    return s;
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const QPoly& o) const { return c == o.c; }
};

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly shift(const QPoly& a, int k);  // multiply by q^k, k >= 0
QPoly scale(const QPoly& a, Int k);
std::string to_string(const QPoly& a);

struct LPoly {
  int lo = 0;
  std::vector<Int> c;  // c[i] = coefficient of v^(lo + i)

  static LPoly zero() { return {}; }
  static LPoly unit() { return {0, {1}}; }

  bool is_zero() const { return c.empty(); }
  Int coeff(int k) const {
    int i = k - lo;
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : 0;
  }
  int min_exp() const { return lo; }
  int max_exp() const { return lo + static_cast<int>(c.size()) - 1; }
  Int eval_one() const {
    Int s = 0;
    for (Int x : c) s += x;
    return s;
  }
  // true when every nonzero coefficient sits in strictly positive degree
  bool positive_exponents_only() const { return is_zero() || lo >= 1; }
  void normalize();

  bool operator==(const LPoly& o) const { return lo == o.lo && c == o.c; }
};

// a += k * v^shift * b
void add_scaled(LPoly& a, const LPoly& b, Int k, int shift);
std::string to_string(const LPoly& a);

}  // namespace wsk

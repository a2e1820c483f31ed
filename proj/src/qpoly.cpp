/*
  This is qpoly.cpp: arithmetic for the exact polynomial types.
*/

#include "wsk/qpoly.hpp"

#include <algorithm>

namespace wsk {

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  r.trim();
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  r.trim();
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly::zero();
  QPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

QPoly shift(const QPoly& a, int k) {
  if (a.is_zero()) return a;
  QPoly r;
  r.c.assign(a.c.size() + static_cast<std::size_t>(k), 0);
  std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
  return r;
}

QPoly scale(const QPoly& a, Int k) {
  if (k == 0) return QPoly::zero();
  QPoly r = a;
  for (Int& x : r.c) x *= k;
  return r;
}

std::string to_string(const QPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(a.c[i]);
    if (i > 0) s += "q^" + std::to_string(i);
  }
  return s;
}

void LPoly::normalize() {
  std::size_t front = 0;
  while (front < c.size() && c[front] == 0) ++front;
  if (front == c.size()) {
    lo = 0;
    c.clear();
    return;
  }
  if (front > 0) {
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(front));
    lo += static_cast<int>(front);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void add_scaled(LPoly& a, const LPoly& b, Int k, int shift) {
  if (k == 0 || b.is_zero()) return;
  int blo = b.lo + shift;
  int bhi = blo + static_cast<int>(b.c.size()) - 1;
  if (a.is_zero()) {
    a.lo = blo;
    a.c.assign(b.c.begin(), b.c.end());
    for (Int& x : a.c) x *= k;
    a.normalize();
    return;
  }
  int lo = std::min(a.lo, blo);
  int hi = std::max(a.max_exp(), bhi);
  std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out[static_cast<std::size_t>(a.lo - lo) + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[static_cast<std::size_t>(blo - lo) + i] += k * b.c[i];
  a.lo = lo;
  a.c = std::move(out);
  a.normalize();
}

std::string to_string(const LPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (int k = a.min_exp(); k <= a.max_exp(); ++k) {
    Int x = a.coeff(k);
    if (x == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(x);
    if (k != 0) s += "v^" + std::to_string(k);
  }
  return s;
}

}  // namespace wsk

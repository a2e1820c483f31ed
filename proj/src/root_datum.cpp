/*
  This is root_datum.cpp: construction of the A and D root data.
*/

#include "wsk/root_datum.hpp"

#include <algorithm>
#include <set>

namespace wsk {

namespace {

Mat cartan_matrix(Family family, int rank) {
  Mat c = Mat::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) c(i, i) = 2;
  if (family == Family::A) {
    if (rank < 1) throw InvalidInputError("family A requires rank >= 1");
    for (int i = 0; i + 1 < rank; ++i) {
      c(i, i + 1) = -1;
      c(i + 1, i) = -1;
    }
  } else {
    if (rank < 3) throw InvalidInputError("family D requires rank >= 3");
    for (int i = 0; i + 1 < rank - 1; ++i) {
      c(i, i + 1) = -1;
      c(i + 1, i) = -1;
    }
    c(rank - 3, rank - 1) = -1;
    c(rank - 1, rank - 3) = -1;
  }
  return c;
}

}  // namespace

RootDatum build_root_datum(Family family, int rank) {
  RootDatum d;
  d.family = family;
  d.rank = rank;
  d.cartan = cartan_matrix(family, rank);
  d.rho = Vec::Ones(rank);

  /*
    Positive roots by closure: seed with the simple roots, then repeatedly
    apply simple reflections and keep every image that is still a sum of
    simple roots with nonnegative coefficients.  For the simply laced data
    this produces each positive root exactly once; processing by increasing
    height makes the order deterministic.
  */
  std::set<std::vector<Int>> seen;
  std::vector<Root> roots;
  for (int i = 0; i < rank; ++i) {
    Root r;
    r.fw = d.cartan.col(i);
    r.rc = Vec::Zero(rank);
    r.rc[i] = 1;
    seen.insert(to_std(r.rc));
    roots.push_back(std::move(r));
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    Root cur = roots[head];
    for (int i = 0; i < rank; ++i) {
      Int pair = cur.fw[i];  // <cur, alpha_i^vee>
      Root img;
      img.fw = cur.fw - pair * d.cartan.col(i);
      img.rc = cur.rc;
      img.rc[i] -= pair;
      if ((img.rc.array() < 0).any()) continue;
      if (seen.insert(to_std(img.rc)).second) roots.push_back(std::move(img));
    }
  }
  // ties within a height break by descending coefficient vectors, which
  // places the i-th simple root at index i; reflection_matrix and the
  // affine generators index simple roots by coordinate and rely on this
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    Int ha = a.rc.sum(), hb = b.rc.sum();
    if (ha != hb) return ha < hb;
    return to_std(a.rc) > to_std(b.rc);
  });
  d.positive = std::move(roots);

  Int best = -1;
  for (std::size_t i = 0; i < d.positive.size(); ++i) {
    Int h = d.positive[i].rc.sum();
    if (h > best) {
      best = h;
      d.theta_index = static_cast<int>(i);
    }
  }

  for (std::size_t i = 0; i < d.positive.size(); ++i) {
    d.lookup[to_std(d.positive[i].fw)] = {+1, static_cast<int>(i)};
    d.lookup[to_std(Vec(-d.positive[i].fw))] = {-1, static_cast<int>(i)};
  }
  return d;
}

Mat reflection_matrix(const RootDatum& datum, int root_index) {
  const Root& beta = datum.positive[static_cast<std::size_t>(root_index)];
  Mat m = Mat::Identity(datum.rank, datum.rank);
  m -= beta.fw * beta.rc.transpose();
  return m;
}

}  // namespace wsk

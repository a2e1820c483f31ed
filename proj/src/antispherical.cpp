/*
  This is antispherical.cpp: canonical basis recursion for the
  antispherical module.
*/

#include "wsk/antispherical.hpp"

namespace wsk {

const Antispherical::Row& Antispherical::canonical_row(Id w) {
  auto hit = memo_.find(w);
  if (hit != memo_.end()) return hit->second;
  internal_check(ctx_->dominant_alcove(w), "canonical row requested off the dominant cone");
  if (memo_.size() >= row_cap_)
    throw ResourceCapError("canonical-basis row cap exceeded at " + std::to_string(row_cap_));

  Row x;
  if (w == ctx_->identity()) {
    x.emplace(w, LPoly::unit());
    return memo_.emplace(w, std::move(x)).first->second;
  }

  int s = 0;
  while (!ctx_->is_right_descent(w, s)) ++s;
  Id wp = ctx_->multiply_gen(w, s);
  internal_check(ctx_->dominant_alcove(wp),
                 "right descent left the dominant cone");

  /*
    Multiply Nbar_{wp} by (H_s + v).  Descents of minimal coset
    representatives stay minimal, so the wall case can only hit support
    elements y with ys > y.
  */
  {
    const Row& base = canonical_row(wp);
    for (const auto& [z, c] : base) {
      Id zs = ctx_->multiply_gen(z, s);
      bool up = ctx_->length(zs) > ctx_->length(z);
      if (up && !ctx_->dominant_alcove(zs)) continue;
      add_scaled(x[zs], c, 1, 0);
      add_scaled(x[z], c, 1, up ? 1 : -1);
    }
  }

  /*
    Remove integer constant terms at indices below w, longest first; each
    subtraction of c0 Nbar_z clears the constant at z and only touches
    strictly positive v-degrees elsewhere.
  */
  while (true) {
    Id target = -1;
    Int best_len = -1;
    for (const auto& [z, c] : x) {
      if (z == w || c.coeff(0) == 0) continue;
      Int len = ctx_->length(z);
      if (len > best_len || (len == best_len && z > target)) {
        best_len = len;
        target = z;
      }
    }
    if (target < 0) break;
    Int c0 = x[target].coeff(0);
    const Row& sub = canonical_row(target);
    for (const auto& [z, c] : sub) add_scaled(x[z], c, -c0, 0);
  }

  for (auto it = x.begin(); it != x.end();) {
    if (it->second.is_zero())
      it = x.erase(it);
    else
      ++it;
  }
  auto self = x.find(w);
  internal_check(self != x.end() && self->second == LPoly::unit(),
                 "canonical row lost its leading term");
  for (const auto& [z, c] : x)
    internal_check(z == w || c.positive_exponents_only(),
                   "canonical row coefficient outside v Z[v]");
  return memo_.emplace(w, std::move(x)).first->second;
}

LPoly Antispherical::n_poly(Id y, Id w) {
  if (!ctx_->dominant_alcove(y) || !ctx_->dominant_alcove(w)) return LPoly::zero();
  const Row& row = canonical_row(w);
  auto it = row.find(y);
  return it == row.end() ? LPoly::zero() : it->second;
}

}  // namespace wsk

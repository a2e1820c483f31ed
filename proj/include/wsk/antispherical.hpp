/*
  This is antispherical.hpp: the canonical basis of the antispherical
  module over the Hecke algebra of W_e, indexed by dominant alcoves.

  The module is sgn tensored up from the finite parabolic: it has a
  standard basis N_y indexed by the minimal-length coset representatives
  y (equivalently, y.C a dominant alcove), with right action

      N_y (H_s + v) = N_{ys} + v N_y      if ys > y and ys minimal
                      N_{ys} + v^{-1} N_y if ys < y
                      0                   if ys is not minimal (wall case)

  in the normalization H_s^2 = (v^{-1} - v) H_s + 1.  The canonical basis
  element Nbar_w is computed by induction on length: with s a right
  descent of w, the product Nbar_{ws} (H_s + v) is bar-invariant and
  equals Nbar_w plus integer-constant-term contamination at shorter
  indices, which is removed by subtracting those canonical elements.
  The result satisfies

      Nbar_w = N_w + sum over y < w of n_{y,w}(v) N_y,  n_{y,w} in v Z[v].

  The polynomials n_{y,w} carry the layer multiplicities of the
  semisimple filtrations: they are the antispherical inverse
  Kazhdan-Lusztig family in the parameter v = t, with q = t^2.
*/

#pragma once

#include <map>

#include "wsk/affine.hpp"
#include "wsk/qpoly.hpp"

namespace wsk {

class Antispherical {
 public:
  using Id = GroupContext::Id;
  using Row = std::map<Id, LPoly>;

  explicit Antispherical(GroupContext& ctx, std::size_t row_cap = 200000)
      : ctx_(&ctx), row_cap_(row_cap) {}

  // w must index a dominant alcove
  const Row& canonical_row(Id w);

  // n_{y,w}(v); zero unless y <= w with both dominant
  LPoly n_poly(Id y, Id w);

  GroupContext& ctx() const { return *ctx_; }
  std::size_t rows_computed() const { return memo_.size(); }

 private:
  GroupContext* ctx_;
  std::size_t row_cap_;
  std::unordered_map<Id, Row> memo_;
};

}  // namespace wsk

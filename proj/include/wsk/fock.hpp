/*
  This is fock.hpp: graded decomposition numbers for q-Weyl modules in
  type A through the canonical basis of the level-1 q-deformed Fock
  space.

  The Fock space has a standard basis |mu> indexed by partitions,
  realized on semi-infinite q-wedges; a wedge in m slots carries the
  index tuple I_j = mu_j - j + m, strictly decreasing.  Products with
  out-of-order indices straighten by the two-index rule (indices k < l,
  difference class d = (l - k) mod e):

      u_k u_l = -u_l u_k                               if d = 0
      u_k u_l = -q^{-1} u_l u_k
                + (q^{-2} - 1) sum_{i >= 0} (-q^{-1})^i u_{a_i} u_{b_i}

  where the interleaving offsets walk c = d, e, e + d, 2e, ... so that
  (a_i, b_i) = (l - c, k + c) while a_i > b_i.  The bar involution
  reverses a wedge, straightens, and divides by the diagonal monomial
  (a residue-content constant, checked per class); the canonical basis
  G(mu) = |mu> + sum of q Z[q] terms at dominance-smaller partitions is
  the unique bar-invariant correction, computed Gaussian-style.

  The graded multiplicity [Delta(lambda) : L(nu)]_q is the coefficient
  of |lambda'> in G(nu'), with both labels conjugated.  Everything here
  is validated in the test suite against hand-computed small cases, a
  sum-formula consistency check, and frozen values from an independent
  prototype of this construction and of the LLT ladder algorithm.
*/

#pragma once

#include <map>

#include "wsk/partitions.hpp"
#include "wsk/qpoly.hpp"

namespace wsk {

// expansion of one canonical basis element over the standard basis:
// partition -> coefficient in Z[q]
using FockColumn = std::map<Partition, QPoly>;

class FockCache {
 public:
  explicit FockCache(Int e) : e_(e) {}

  Int e() const { return e_; }

  // G(lam) over the standard basis; computing a column builds the whole
  // degree block |lam| once and memoizes it
  const FockColumn& canonical_column(const Partition& lam, int workers = 1);

  // graded decomposition row of the q-Weyl module Delta(lam) in the
  // n-column Schur category: nu -> [Delta(lam) : L(nu)]_q over the
  // partitions nu of |lam| with at most n parts
  FockColumn weyl_row(const Partition& lam, int n, int workers = 1);

 private:
  const std::map<Partition, FockColumn>& block(Int r, int workers);

  Int e_;
  std::map<Int, std::map<Partition, FockColumn>> blocks_;
};

}  // namespace wsk

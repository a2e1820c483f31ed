/*
  This is jantzen.hpp: the graded sum-formula consistency gate.

  For a dominant weight lambda the Jantzen filtration of the quantum
  Weyl module Delta(lambda) satisfies

      sum_{i>0} ch J^i = sum_{beta>0} sum_{0<me<N} chi(lambda - (N-me) beta),
      N = <lambda+rho, beta^vee>,

  where chi is the Weyl character symbol, extended by the dot-action
  sign rules (zero on walls).  A candidate family of graded
  decomposition rows determines both sides: the right side directly,
  the left side because layer k of the semisimple filtration
  contributes k copies of each composition factor to the sum of the
  J^i.  The gate closes a dominant weight downward under both the
  candidate rows and the sum formula, then checks the identity at every
  weight of the closure.  A family that fails anywhere is rejected
  wholesale.
*/

#pragma once

#include <functional>
#include <map>
#include <string>

#include "wsk/qpoly.hpp"
#include "wsk/root_datum.hpp"

namespace wsk {

// graded decomposition row of one dominant weight, diagonal included:
// composition-factor label -> multiplicity polynomial in q
using GradedRow = std::map<std::vector<Int>, QPoly>;
using RowProvider = std::function<GradedRow(const Vec&)>;

struct JantzenReport {
  bool ok = true;
  std::string detail;  // empty when ok, else the first violated identity
};

// formal character sum on the right side of the sum formula, as a signed
// multiset of dominant chi-labels
std::map<std::vector<Int>, Int> jantzen_character_sum(const RootDatum& datum, Int e,
                                                      const Vec& lambda);

// checks the identity at lambda and every dominant weight discovered
// below it; `rows` must accept any such weight
JantzenReport jantzen_validate(const RootDatum& datum, Int e, const Vec& lambda,
                               const RowProvider& rows);

}  // namespace wsk

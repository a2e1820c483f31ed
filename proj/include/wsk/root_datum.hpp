/*
  This is root_datum.hpp: simply laced root data in fundamental-weight
  coordinates.

  Weights are integer vectors in the basis of fundamental weights.  A root
  beta is carried in two coordinate systems at once: its fundamental-weight
  coordinates (the column combination of the Cartan matrix) and its
  root coordinates (coefficients on the simple roots).  For simply laced
  types the pairing <x, beta^vee> of a weight x with a coroot is the plain
  dot product of the root coordinates of beta with x, which keeps every
  hyperplane computation in exact integers.
*/

#pragma once

#include <map>
#include <utility>

#include "wsk/types.hpp"

namespace wsk {

struct Root {
  Vec fw;  // coordinates in the fundamental-weight basis
  Vec rc;  // coordinates on the simple roots
};

struct RootDatum {
  Family family = Family::A;
  int rank = 0;
  Mat cartan;
  std::vector<Root> positive;  // simple roots first, then by increasing height
  Vec rho;                     // sum of fundamental weights: all-ones vector
  int theta_index = -1;        // position of the highest root in `positive`

  // fw coordinates of +-beta -> (sign, index into `positive`)
  std::map<std::vector<Int>, std::pair<int, int>> lookup;

  // <x, beta^vee> for x in fw coordinates
  Int pairing(const Vec& x, int root_index) const {
    return positive[static_cast<std::size_t>(root_index)].rc.dot(x);
  }

  const Root& theta() const { return positive[static_cast<std::size_t>(theta_index)]; }

  Int height(int root_index) const {
    return positive[static_cast<std::size_t>(root_index)].rc.sum();
  }
};

// family A: rank >= 1; family D: rank >= 3 (the fork at the tail end)
RootDatum build_root_datum(Family family, int rank);

// reflection matrix of the root on fundamental-weight coordinates:
// s_beta(x) = x - <x, beta^vee> beta
Mat reflection_matrix(const RootDatum& datum, int root_index);

}  // namespace wsk

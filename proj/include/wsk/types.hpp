/*
  This is types.hpp: shared scalar and container types for wsk.

  All arithmetic in the library is exact 64-bit integer arithmetic; Eigen
  provides the dense vector and matrix containers.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wsk {

using Int = std::int64_t;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

enum class Family { A, D };

inline char family_letter(Family f) { return f == Family::A ? 'A' : 'D'; }

/* Error taxonomy shared across modules; the CLI maps these onto its
   exit-code contract (invalid input 2, resource cap 3, internal 10). */

struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

inline std::vector<Int> to_std(const Vec& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

inline Vec from_std(const std::vector<Int>& v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = v[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace wsk

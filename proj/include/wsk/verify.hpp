/*
  This is verify.hpp: exhaustive order-theoretic and polynomial verifiers.

  Each suite sweeps a finite configuration space and reports every
  violation it finds; nothing is sampled, nothing is tolerance-based.
  The suites:

    orders   strong linkage against Bruhat comparison of upper-closure
             elements over a dominance box, plus the transport identities
             between the distinguished coset representatives d, eps, w0 d
             and the conjugation/translation formulas relating them to
             upper-closure elements.

    klpoly   the signed inversion identity between the polynomial family
             P and its inverse family Q over all Bruhat pairs up to a
             length bound, both multiplication orders, with degree and
             positivity sanity checks.

    parity   layer-parity purity of every layer table over all partitions
             of a given size.
*/

#pragma once

#include "wsk/klpoly.hpp"
#include "wsk/mult_engine.hpp"

namespace wsk {

struct VerifyFailure {
  std::string check;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::string context;
  long long cases_checked = 0;
  long long inconclusive = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty() && inconclusive == 0; }
  void merge(const VerifyReport& other);
};

struct VerifyConfig {
  Family family = Family::A;
  int rank = 1;
  Int e = 2;
  Int box_multiple = 4;  // dominance box: <mu+rho, beta^vee> <= box_multiple * e
  Int max_length = 8;    // klpoly sweep bound
  Int r = 6;             // parity sweep partition size
  int n = 0;             // parity sweep columns; 0 means n = r
};

// all dominant weights with <mu+rho, beta^vee> <= bound for every positive
// root beta, in ascending lexicographic coordinate order
std::vector<Vec> dominant_box(GroupContext& ctx, Int bound);

// strong linkage vs Bruhat order on upper-closure elements, same-orbit
// pairs, plus the length-equals-depth identity
VerifyReport verify_strong_linkage(const VerifyConfig& cfg);

// distinguished representative identities on one regular and one singular
// orbit inside the box (substituting a second singular orbit with a note
// when the context has no regular integral orbit)
VerifyReport verify_order_transport(const VerifyConfig& cfg);

// both of the above as the one CLI-facing orders suite
VerifyReport verify_orders(const VerifyConfig& cfg);

VerifyReport verify_klpoly(const VerifyConfig& cfg);

VerifyReport verify_parity(const VerifyConfig& cfg);

}  // namespace wsk

// Frozen reference values for the regression suite.  Canonical basis rows
// were computed by an independent prototype and cross-checked against
// inverse-triangularity identities; layer tables were computed by an
// independent Fock-space prototype and cross-checked against a ladder
// algorithm implementation, hand calculations, and the graded sum formula
// before being frozen here.  Tests compare library output against these
// verbatim; any mismatch is a regression, not an excuse to refresh the
// constants.
#pragma once

#include <map>
#include <vector>

#include "wsk/types.hpp"

namespace oracle {

using Word = std::vector<int>;

// one antispherical canonical basis element N_w, as the list of pairs
// (y, polynomial in v), with the polynomial given by exponent -> coefficient
struct RowEntry {
  Word y;
  std::map<int, long long> coeffs;
};
struct Row {
  Word w;
  std::vector<RowEntry> entries;
};

// one layer table keyed by weight: entries map a dominant weight to its
// multiplicity vector by layer index (index i = coefficient of v^i)
struct WeightTable {
  std::vector<wsk::Int> lambda;
  std::map<std::vector<wsk::Int>, std::vector<long long>> entries;
};

// affine A1, J-minimal rows up to length 4 (independent of e)
inline const std::vector<Row> kRowsA1 = {
    {{}, {{{}, {{0, 1}}}}},
    {{0}, {{{}, {{1, 1}}}, {{0}, {{0, 1}}}}},
    {{0, 1}, {{{0}, {{1, 1}}}, {{0, 1}, {{0, 1}}}}},
    {{0, 1, 0}, {{{0, 1}, {{1, 1}}}, {{0, 1, 0}, {{0, 1}}}}},
    {{0, 1, 0, 1}, {{{0, 1, 0}, {{1, 1}}}, {{0, 1, 0, 1}, {{0, 1}}}}},
};

// affine A2, J-minimal rows up to length 4 (independent of e)
inline const std::vector<Row> kRowsA2 = {
    {{}, {{{}, {{0, 1}}}}},
    {{0}, {{{}, {{1, 1}}}, {{0}, {{0, 1}}}}},
    {{0, 1}, {{{0}, {{1, 1}}}, {{0, 1}, {{0, 1}}}}},
    {{0, 2}, {{{0}, {{1, 1}}}, {{0, 2}, {{0, 1}}}}},
    {{0, 1, 2},
     {{{0}, {{2, 1}}},
      {{0, 1}, {{1, 1}}},
      {{0, 2}, {{1, 1}}},
      {{0, 1, 2}, {{0, 1}}}}},
    {{0, 2, 1},
     {{{0}, {{2, 1}}},
      {{0, 2}, {{1, 1}}},
      {{0, 1}, {{1, 1}}},
      {{0, 2, 1}, {{0, 1}}}}},
    {{0, 1, 2, 0},
     {{{}, {{2, 1}}},
      {{0}, {{1, 1}}},
      {{0, 1, 2}, {{1, 1}}},
      {{0, 1, 2, 0}, {{0, 1}}}}},
    {{0, 1, 2, 1},
     {{{0}, {{3, 1}}},
      {{0, 1}, {{2, 1}}},
      {{0, 2}, {{2, 1}}},
      {{0, 1, 2}, {{1, 1}}},
      {{0, 2, 1}, {{1, 1}}},
      {{0, 1, 2, 1}, {{0, 1}}}}},
    {{0, 2, 1, 0},
     {{{}, {{2, 1}}},
      {{0}, {{1, 1}}},
      {{0, 2, 1}, {{1, 1}}},
      {{0, 2, 1, 0}, {{0, 1}}}}},
};

// q-Weyl layer tables for A1 at e = 2, keyed by the highest weight
inline const std::vector<WeightTable> kTablesA1E2 = {
    {{0}, {{{0}, {1}}}},
    {{2}, {{{0}, {0, 1}}, {{2}, {1}}}},
    {{4}, {{{2}, {0, 1}}, {{4}, {1}}}},
    {{6}, {{{4}, {0, 1}}, {{6}, {1}}}},
    {{3}, {{{3}, {1}}}},
    {{7}, {{{7}, {1}}}},
    {{1}, {{{1}, {1}}}},
    {{5}, {{{5}, {1}}}},
};

// q-Weyl layer tables for A2 at e = 2
inline const std::vector<WeightTable> kTablesA2E2 = {
    {{0, 0}, {{{0, 0}, {1}}}},
    {{1, 1}, {{{1, 1}, {1}}}},
    {{2, 0}, {{{0, 1}, {0, 1}}, {{2, 0}, {1}}}},
    {{0, 2}, {{{0, 2}, {1}}, {{1, 0}, {0, 1}}}},
    {{2, 2}, {{{0, 0}, {0, 0, 1}}, {{0, 3}, {0, 1}}, {{2, 2}, {1}}, {{3, 0}, {0, 1}}}},
    {{3, 1}, {{{3, 1}, {1}}}},
    {{4, 0}, {{{2, 1}, {0, 1}}, {{4, 0}, {1}}}},
    {{2, 1}, {{{0, 2}, {0, 1}}, {{1, 0}, {0, 0, 1}}, {{2, 1}, {1}}}},
};

// q-Weyl layer tables for A2 at e = 3
inline const std::vector<WeightTable> kTablesA2E3 = {
    {{0, 0}, {{{0, 0}, {1}}}},
    {{1, 1}, {{{0, 0}, {0, 1}}, {{1, 1}, {1}}}},
    {{3, 0}, {{{1, 1}, {0, 1}}, {{3, 0}, {1}}}},
    {{2, 2}, {{{2, 2}, {1}}}},
    {{1, 4},
     {{{0, 0}, {0, 1}},
      {{0, 3}, {0, 1}},
      {{1, 1}, {0, 0, 1}},
      {{1, 4}, {1}},
      {{3, 0}, {0, 1}}}},
};

}  // namespace oracle

/*
  This is alcove.hpp: alcove geometry for the dot action of W_e on weights.

  Throughout, a weight mu is handled through its shifted vector
  v = mu + rho.  The fundamental alcove is C = {v : 0 < <v,alpha^vee> < e}
  and the antidominant chamber is pinned as C^- = w0.C, with closure a
  fundamental domain for the dot action.

  The canonical elements attached to a dominant weight mu:

    f(mu)   the unique element with mu in the upper closure of f(mu).C;
            its alcove table is n_alpha = ceil(<v,alpha^vee>/e) - 1, and
            the element is recovered by walking an interior rational point
            of that alcove back to C.

    w_mu    the minimal element (in the length of the C^--wall
            presentation, i.e. l(w0 w w0)) with w_mu^{-1}. mu in the
            closure of C^-.  It equals f(mu) w0; minimality and uniqueness
            are exercised against brute-force coset enumeration in the
            test suite.

    d(mu), eps(mu)   the distinguished double-coset and coset
            representatives over (finite Weyl group, stabilizer of the
            base point); computed by exact minimization, with the
            conjugation relation f(mu) = w0 d(mu) w0 verified exhaustively.
*/

#pragma once

#include "wsk/affine.hpp"

namespace wsk {

struct AlcoveCoords {
  std::vector<Int> n;  // indexed like RootDatum::positive
};

AlcoveCoords alcove_of(GroupContext& ctx, GroupContext::Id w);

inline Int d_value(const AlcoveCoords& a) {
  Int s = 0;
  for (Int x : a.n) s += x;
  return s;
}

// the element whose alcove contains the rational point num/den (which must
// avoid every affine wall)
GroupContext::Id element_of_alcove_at(GroupContext& ctx, const Vec& num, Int den);

// f(mu); requires mu dominant
GroupContext::Id upper_closure_element(GroupContext& ctx, const Vec& mu);

// whether mu lies in the upper closure of w.C, i.e. w = f(mu); pure table
// comparison against an already-interned element, safe to call concurrently
bool in_upper_closure(GroupContext& ctx, GroupContext::Id w, const Vec& mu);

// w_mu = f(mu) w0; requires mu dominant
GroupContext::Id min_antidominant_element(GroupContext& ctx, const Vec& mu);

// canonical representative of the dot orbit of mu in closure(C^-), plus an
// element eps with eps . base = mu (not necessarily the minimal one)
struct BasePoint {
  Vec base;
  GroupContext::Id eps;
};
BasePoint base_point(GroupContext& ctx, const Vec& mu);

// generators of the stabilizer of a point of closure(C^-): the finite wall
// reflections through it plus the reflection in the far wall when touched
std::vector<GroupContext::Id> stabilizer_gens(GroupContext& ctx, const Vec& base);

// full stabilizer subgroup by closure; capped
std::vector<GroupContext::Id> group_closure(GroupContext& ctx,
                                            const std::vector<GroupContext::Id>& gens,
                                            std::size_t cap = 100000);

// the finite Weyl subgroup as a list of ids
std::vector<GroupContext::Id> finite_subgroup(GroupContext& ctx, std::size_t cap = 100000);

struct DoubleCosetData {
  GroupContext::Id d;
  GroupContext::Id eps;
  GroupContext::Id w0d;
};
// requires mu dominant and in the dot orbit of base (base in closure(C^-))
DoubleCosetData double_coset_data(GroupContext& ctx, const Vec& mu, const Vec& base);

enum class Linkage { kTrue, kFalse, kInconclusive };

// the strong-linkage order: mu up-arrow nu through single affine
// reflections that each move up in dominance; breadth-first search over the
// dominance interval, honestly reporting a hit of the search bound
Linkage strong_linkage_up(GroupContext& ctx, const Vec& mu, const Vec& nu,
                          std::size_t search_bound = 200000);

bool dominance_leq_weights(GroupContext& ctx, const Vec& mu, const Vec& nu);

}  // namespace wsk

/*
  This is affine.hpp: the affine Weyl group W_e as finite Weyl group
  semidirect translations by e times the root lattice, acting on weights
  through the rho-shifted dot action.

  Elements are pairs (f, gamma) with f in the finite Weyl group and gamma
  in the root lattice (stored in fundamental-weight coordinates); the pair
  acts on shifted weights by v -> f(v + e gamma).  The pinned group law is

      (f1, gamma1)(f2, gamma2) = (f1 f2, f2^{-1} gamma1 + gamma2),

  so that the action is a left action: ((a b) . v) = (a . (b . v)).
  Inverses are (f, gamma)^{-1} = (f^{-1}, -f gamma).

  Lengths come from exact hyperplane counting.  For the alcove w.C, with
  C = {v : 0 < <v, alpha^vee> < e for all positive alpha}, the wall-crossing
  count toward beta is

      n_beta(w) = <gamma, delta^vee> - [delta < 0],   delta = f^{-1}(beta),

  and l(w) = sum over positive beta of |n_beta(w)|.  The table (n_beta)
  identifies the alcove, hence the element, uniquely.

  A GroupContext interns elements behind small integer ids; all heavier
  layers (Bruhat order, polynomial recursions, canonical bases) work with
  ids only.
*/

#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "wsk/root_datum.hpp"

namespace wsk {

struct AffineElement {
  Mat f;   // finite part on fundamental-weight coordinates
  Mat fi;  // inverse of f
  Vec g;   // translation component, fundamental-weight coordinates
};

class GroupContext {
 public:
  using Id = std::int32_t;

  GroupContext(Family family, int rank, Int e);

  const RootDatum& datum() const { return datum_; }
  Family family() const { return datum_.family; }
  int rank() const { return datum_.rank; }
  Int e() const { return e_; }
  int num_gens() const { return datum_.rank + 1; }  // index 0 is the affine node

  Id identity() const { return id_identity_; }
  Id gen(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  Id w0() const { return id_w0_; }
  // reflection in the far wall of C^-: the same finite part as the affine
  // generator but with the opposite translation
  Id s0_minus() const { return id_s0_minus_; }

  const AffineElement& el(Id w) const { return elements_[static_cast<std::size_t>(w)]; }
  Id intern(const AffineElement& w);

  Id multiply(Id a, Id b);
  Id multiply_gen(Id a, int i);  // cached right multiplication by gen(i)
  Id inverse(Id a);
  Id conj_w0(Id a);  // w0 a w0

  // dot action on weights: mu -> f((mu + rho) + e gamma) - rho
  Vec dot_act(Id w, const Vec& mu);
  // plain affine action on already-shifted vectors v = mu + rho
  Vec act_shifted(Id w, const Vec& v) const;

  const std::vector<Int>& alcove(Id w);  // the n_beta table of w.C
  Int length(Id w);
  Int length_minus(Id w);  // length of w0 w w0
  bool dominant_alcove(Id w);  // all n_beta >= 0

  bool is_left_descent(Id w, int i);
  bool is_right_descent(Id w, int i);
  std::vector<int> left_descents(Id w);
  std::vector<int> right_descents(Id w);

  // canonical reduced word by least-index left-descent stripping
  std::vector<int> reduced_word(Id w);
  Id from_word(const std::vector<int>& word);

  bool bruhat_leq(Id y, Id w);
  bool bruhat_leq_minus(Id y, Id w) { return bruhat_leq(conj_w0(y), conj_w0(w)); }

  // all elements of length <= bound, ordered by (length, element key);
  // throws ResourceCapError beyond `cap` elements
  std::vector<Id> enumerate_up_to_length(Int bound, std::size_t cap = 1000000);

  // minimal representative of w modulo right multiplication by the listed
  // generators: strip right descents in J until none remains
  Id min_coset_rep(Id w, const std::vector<int>& J);

  std::size_t num_interned() const { return elements_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Int>& v) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (Int x : v) {
        for (int b = 0; b < 8; ++b) {
          h ^= static_cast<std::size_t>(x >> (8 * b)) & 0xff;
          h *= 1099511628211ull;
        }
      }
      return h;
    }
  };

  std::vector<Int> key_of(const AffineElement& w) const;
  void compute_tables(Id w);

  RootDatum datum_;
  Int e_;

  std::vector<AffineElement> elements_;
  std::vector<std::vector<Int>> alcoves_;
  std::vector<Int> lengths_;
  std::vector<char> dominant_;
  std::unordered_map<std::vector<Int>, Id, KeyHash> index_;

  std::vector<Id> gens_;
  Id id_identity_ = -1;
  Id id_w0_ = -1;
  Id id_s0_minus_ = -1;

  std::unordered_map<std::uint64_t, Id> mul_gen_cache_;
  std::unordered_map<std::uint64_t, char> bruhat_cache_;
};

}  // namespace wsk

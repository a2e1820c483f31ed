/*
  This is klpoly.hpp: Kazhdan-Lusztig polynomials P_{y,w} over the affine
  Weyl group, the inverse family Q_{y,w} defined by signed inversion of the
  P-matrix over Bruhat intervals, and a persistent line-oriented cache.

  The recursion for P is the classical one.  Fix the least right descent s
  of w and put u = ws.  For y <= w:

      ys > y:  P_{y,w} = P_{ys,w}
      ys < y:  P_{y,w} = P_{ys,u} + q P_{y,u}
                         - sum over y <= z <= u with zs < z of
                           mu(z,u) q^{(l(w)-l(z))/2} P_{y,z}

  where mu(z,u) is the coefficient of q^{(l(u)-l(z)-1)/2} in P_{z,u}.
  The inverse family is recovered triangularly from

      sum_{y <= z <= w} (-1)^{l(z)-l(y)} P_{y,z} Q_{z,w} = delta_{y,w}.
*/

#pragma once

#include <map>
#include <string>

#include "wsk/affine.hpp"
#include "wsk/qpoly.hpp"

namespace wsk {

enum class KLKind { P, Q };

class KLTable {
 public:
  KLTable(GroupContext& ctx, KLKind kind) : ctx_(&ctx), kind_(kind) {}

  KLKind kind() const { return kind_; }
  std::string fingerprint() const;  // "<kind> <family> <rank> <e>"
  std::size_t size() const { return entries_.size(); }

  bool has(GroupContext::Id y, GroupContext::Id w) const;
  const QPoly* find(GroupContext::Id y, GroupContext::Id w) const;
  void put(GroupContext::Id y, GroupContext::Id w, QPoly p);

  GroupContext& ctx() const { return *ctx_; }

  // iteration in a canonical order (reduced-word keyed) for serialization
  template <class F>
  void for_each_sorted(F&& f) const {
    std::map<std::pair<std::vector<int>, std::vector<int>>, const QPoly*> sorted;
    for (const auto& [k, v] : entries_)
      sorted[{ctx_->reduced_word(static_cast<GroupContext::Id>(k >> 32)),
              ctx_->reduced_word(static_cast<GroupContext::Id>(k & 0xffffffff))}] = &v;
    for (const auto& [k, v] : sorted) f(k.first, k.second, *v);
  }

 private:
  GroupContext* ctx_;
  KLKind kind_;
  std::unordered_map<std::uint64_t, QPoly> entries_;
};

// default interval cap, per contract: fail loudly beyond this many elements
inline constexpr std::size_t kIntervalCap = 200000;

std::vector<GroupContext::Id> bruhat_interval(GroupContext& ctx, GroupContext::Id y,
                                              GroupContext::Id w,
                                              std::size_t cap = kIntervalCap);

QPoly kl_p(GroupContext& ctx, KLTable& table, GroupContext::Id y, GroupContext::Id w,
           std::size_t cap = kIntervalCap);
Int mu_coeff(GroupContext& ctx, KLTable& table, GroupContext::Id y, GroupContext::Id w,
             std::size_t cap = kIntervalCap);
QPoly inverse_kl_q(GroupContext& ctx, KLTable& tableP, KLTable& tableQ,
                   GroupContext::Id y, GroupContext::Id w,
                   std::size_t cap = kIntervalCap);

/*
  Cache file format (KLCACHE v1): header line

      KLCACHE v1 <kind> <family> <rank> <e>

  then one line per entry, `y_word;w_word;c0,c1,...,ck` with reduced words
  as comma-separated generator indices and `-` for the empty word.
  Loading rejects any header that does not match the receiving table's
  fingerprint.
*/
void cache_save(const KLTable& table, const std::string& path);
void cache_load(GroupContext& ctx, KLTable& table, const std::string& path);

}  // namespace wsk

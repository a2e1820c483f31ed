/*
  This is fock.cpp: the q-wedge realization of the level-1 q-Fock space,
  its bar involution, and the canonical basis, per degree block.

  LPoly is used throughout this file as exact Laurent arithmetic in q
  itself; nothing here mixes with the v-side polynomials of the alcove
  layer.  The construction self-checks at every stage: the straightened
  bar matrix must be unitriangular for dominance with a constant
  normalizing monomial on each residue block, the involution must
  square to the identity, and the corrected basis must have positive
  off-diagonal entries in strictly positive degree.
*/

#include "wsk/fock.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace wsk {

namespace {

using Wedge = std::vector<int>;
using Combo = std::map<Wedge, LPoly>;
using BarColumn = std::map<Partition, LPoly>;

LPoly mul_l(const LPoly& a, const LPoly& b) {
  LPoly out;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != 0) add_scaled(out, b, a.c[i], a.lo + static_cast<int>(i));
  return out;
}

LPoly bar_poly(const LPoly& a) {
  LPoly out;
  if (a.is_zero()) return out;
  out.c.assign(a.c.rbegin(), a.c.rend());
  out.lo = -a.max_exp();
  return out;
}

LPoly negated(const LPoly& a) {
  LPoly out = a;
  for (Int& x : out.c) x = -x;
  return out;
}

// wedge indices of |lam> in m slots: strictly decreasing, minimum 0 when
// the tail of lam is empty
Wedge wedge_of(const Partition& lam, int m) {
  Wedge w(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    Int part = j < static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(j)] : 0;
    w[static_cast<std::size_t>(j)] = static_cast<int>(part) - (j + 1) + m;
  }
  return w;
}

Partition partition_of(const Wedge& w) {
  int m = static_cast<int>(w.size());
  Partition out;
  for (int j = 0; j < m; ++j) {
    Int part = w[static_cast<std::size_t>(j)] + (j + 1) - m;
    internal_check(part >= 0, "wedge does not label a partition");
    if (part > 0) out.push_back(part);
  }
  return out;
}

std::vector<Int> residue_content(const Partition& lam, Int e) {
  std::vector<Int> cnt(static_cast<std::size_t>(e), 0);
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (Int j = 0; j < lam[i]; ++j)
      ++cnt[static_cast<std::size_t>((((j - static_cast<Int>(i)) % e) + e) % e)];
  return cnt;
}

/*
  Straightens products of wedge generators into the strictly decreasing
  basis.  For indices k < l with difference class d = (l - k) mod e the
  two-generator relation is

      u_k u_l = -u_l u_k                                        (d = 0)
      u_k u_l = -q^{-1} u_l u_k
                + (q^{-2} - 1) sum_i (-q^{-1})^i u_{l-c_i} u_{k+c_i}

  with offsets c_i walking d, e, e + d, 2e, ... while the produced pair
  is still out of order.  The rewriting system is confluent, so the
  worklist order does not affect the result.
*/
class Straightener {
 public:
  explicit Straightener(Int e) : e_(static_cast<int>(e)) {}

  Combo straighten(Combo work) {
    Combo out;
    long guard = 0;
    while (!work.empty()) {
      internal_check(++guard < 10000000, "wedge straightening failed to terminate");
      auto node = std::prev(work.end());
      Wedge w = node->first;
      LPoly coef = std::move(node->second);
      work.erase(node);
      if (coef.is_zero()) continue;
      std::size_t bad = w.size();
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] <= w[i + 1]) {
          bad = i;
          break;
        }
      }
      if (bad == w.size()) {
        LPoly& dst = out[w];
        add_scaled(dst, coef, 1, 0);
        if (dst.is_zero()) out.erase(w);
        continue;
      }
      if (w[bad] == w[bad + 1]) continue;
      for (const auto& term : rule(w[bad], w[bad + 1])) {
        Wedge w2 = w;
        w2[bad] = term.first[0];
        w2[bad + 1] = term.first[1];
        LPoly& dst = work[w2];
        add_scaled(dst, mul_l(term.second, coef), 1, 0);
        if (dst.is_zero()) work.erase(w2);
      }
    }
    return out;
  }

  // bar(|lam>): reverse the wedge, straighten, divide by the diagonal
  // monomial so the result is |lam> plus lower terms
  BarColumn bar_of(const Partition& lam, int m, int* drift_out) {
    Wedge w = wedge_of(lam, m);
    Combo start;
    start.emplace(Wedge(w.rbegin(), w.rend()), LPoly::unit());
    Combo terms = straighten(std::move(start));
    auto self = terms.find(w);
    internal_check(self != terms.end(), "bar image misses the diagonal");
    const LPoly& dc = self->second;
    internal_check(dc.c.size() == 1 && (dc.c[0] == 1 || dc.c[0] == -1),
                   "bar diagonal is not a monomial");
    int drift = dc.lo;
    Int sign = dc.c[0];
    BarColumn col;
    for (const auto& [u, cu] : terms) {
      LPoly adj;
      add_scaled(adj, cu, sign, -drift);
      col.emplace(partition_of(u), std::move(adj));
    }
    if (drift_out) *drift_out = drift;
    return col;
  }

 private:
  using RuleTerm = std::pair<std::array<int, 2>, LPoly>;

  const std::vector<RuleTerm>& rule(int k, int l) {
    auto key = std::make_pair(k, l);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<RuleTerm> out;
    int d = (l - k) % e_;
    if (d == 0) {
      out.push_back({{l, k}, LPoly{0, {-1}}});
    } else {
      out.push_back({{l, k}, LPoly{-1, {-1}}});
      int c = 0;
      for (int i = 0;; ++i) {
        c += i % 2 == 0 ? d : e_ - d;
        int a = l - c;
        int b = k + c;
        if (a <= b) break;
        LPoly coeff{-2 - i, {1, 0, -1}};
        if (i % 2 == 1) coeff = negated(coeff);
        out.push_back({{a, b}, std::move(coeff)});
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  int e_;
  std::map<std::pair<int, int>, std::vector<RuleTerm>> memo_;
};

}  // namespace

const std::map<Partition, FockColumn>& FockCache::block(Int r, int workers) {
  auto found = blocks_.find(r);
  if (found != blocks_.end()) return found->second;
  if (e_ < 2) throw InvalidInputError("Fock canonical basis requires e >= 2");

  int m = static_cast<int>(r);
  std::vector<Partition> parts = list_partitions(m, r);
  std::sort(parts.begin(), parts.end());
  const std::size_t np = parts.size();

  std::vector<BarColumn> bar_cols(np);
  std::vector<int> drifts(np, 0);
  auto run = [&](std::size_t lo, std::size_t hi) {
    Straightener st(e_);
    for (std::size_t i = lo; i < hi; ++i) bar_cols[i] = st.bar_of(parts[i], m, &drifts[i]);
  };
  std::size_t nthreads = std::min<std::size_t>(std::max(workers, 1), std::max<std::size_t>(np, 1));
  if (nthreads <= 1) {
    run(0, np);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nthreads);
    std::size_t chunk = (np + nthreads - 1) / nthreads;
    std::size_t slot = 0;
    for (std::size_t a = 0; a < np; a += chunk, ++slot)
      pool.emplace_back([&run, &errs, a, chunk, np, slot] {
        try {
          run(a, std::min(a + chunk, np));
        } catch (...) {
          errs[slot] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& err : errs)
      if (err) std::rethrow_exception(err);
  }

  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < np; ++i) index.emplace(parts[i], i);

  std::map<std::vector<Int>, int> drift_by_content;
  for (std::size_t i = 0; i < np; ++i) {
    const Partition& lam = parts[i];
    const BarColumn& col = bar_cols[i];
    auto self = col.find(lam);
    internal_check(self != col.end() && self->second == LPoly::unit(),
                   "bar matrix diagonal is not one");
    for (const auto& [mu, cf] : col) {
      if (mu == lam || cf.is_zero()) continue;
      internal_check(mu < lam && dominance_leq_partitions(mu, lam),
                     "bar matrix is not dominance triangular");
    }
    auto ins = drift_by_content.emplace(residue_content(lam, e_), drifts[i]);
    internal_check(ins.first->second == drifts[i],
                   "bar normalization drifts within a residue block");
  }

  for (std::size_t i = 0; i < np; ++i) {
    BarColumn sq;
    for (const auto& [mu, cf] : bar_cols[i]) {
      LPoly b = bar_poly(cf);
      for (const auto& [nu, cg] : bar_cols[index.at(mu)])
        add_scaled(sq[nu], mul_l(b, cg), 1, 0);
    }
    for (const auto& [nu, cf] : sq) {
      if (nu == parts[i])
        internal_check(cf == LPoly::unit(), "bar squared is not the identity");
      else
        internal_check(cf.is_zero(), "bar squared is not the identity");
    }
  }

  /*
    Gaussian correction, ascending lex (dominance-lower implies
    lex-lower, so dependencies are ready): repeatedly take the lex-top
    coordinate where bar(c) differs from c, split off its positive part
    p, and add p G(mu).  Each pass kills the top defect, which is forced
    to be antisymmetric under bar.
  */
  std::vector<BarColumn> gcols(np);
  for (std::size_t i = 0; i < np; ++i) {
    const Partition& lam = parts[i];
    BarColumn cvec;
    cvec.emplace(lam, LPoly::unit());
    long guard = 0;
    while (true) {
      internal_check(++guard < 100000, "canonical correction failed to terminate");
      BarColumn delta;
      for (const auto& [mu, cf] : cvec) {
        LPoly b = bar_poly(cf);
        for (const auto& [nu, cg] : bar_cols[index.at(mu)])
          add_scaled(delta[nu], mul_l(b, cg), 1, 0);
      }
      for (const auto& [mu, cf] : cvec) add_scaled(delta[mu], cf, -1, 0);
      const Partition* mu_top = nullptr;
      const LPoly* defect = nullptr;
      for (auto it = delta.rbegin(); it != delta.rend(); ++it) {
        if (!it->second.is_zero()) {
          mu_top = &it->first;
          defect = &it->second;
          break;
        }
      }
      if (!mu_top) break;
      internal_check(*mu_top < lam, "correction target is not below the label");
      internal_check(bar_poly(*defect) == negated(*defect),
                     "correction defect is not antisymmetric");
      LPoly pos;
      for (int k = std::max(1, defect->min_exp()); k <= defect->max_exp(); ++k) {
        Int c = defect->coeff(k);
        if (c != 0) add_scaled(pos, LPoly::unit(), c, k);
      }
      for (const auto& [nu, cg] : gcols[index.at(*mu_top)]) {
        LPoly& dst = cvec[nu];
        add_scaled(dst, mul_l(pos, cg), 1, 0);
        if (dst.is_zero()) cvec.erase(nu);
      }
    }
    gcols[i] = std::move(cvec);
  }

  std::map<Partition, FockColumn> blk;
  for (std::size_t i = 0; i < np; ++i) {
    FockColumn col;
    for (const auto& [mu, cf] : gcols[i]) {
      if (cf.is_zero()) continue;
      if (mu == parts[i]) {
        internal_check(cf == LPoly::unit(), "canonical diagonal is not one");
      } else {
        internal_check(mu < parts[i] && dominance_leq_partitions(mu, parts[i]),
                       "canonical basis is not dominance triangular");
        internal_check(cf.positive_exponents_only(),
                       "off-diagonal canonical entry at q^0 or below");
      }
      internal_check(cf.min_exp() >= 0, "negative exponent in canonical entry");
      QPoly qp;
      qp.c.assign(static_cast<std::size_t>(cf.max_exp() + 1), 0);
      for (int k = 0; k <= cf.max_exp(); ++k) {
        Int c = cf.coeff(k);
        internal_check(c >= 0, "negative coefficient in canonical entry");
        qp.c[static_cast<std::size_t>(k)] = c;
      }
      col.emplace(mu, std::move(qp));
    }
    blk.emplace(parts[i], std::move(col));
  }
  return blocks_.emplace(r, std::move(blk)).first->second;
}

const FockColumn& FockCache::canonical_column(const Partition& lam, int workers) {
  if (!is_partition(lam)) throw InvalidInputError("not a partition");
  const auto& blk = block(partition_sum(lam), workers);
  auto it = blk.find(lam);
  internal_check(it != blk.end(), "partition missing from its degree block");
  return it->second;
}

FockColumn FockCache::weyl_row(const Partition& lam, int n, int workers) {
  if (!is_partition(lam)) throw InvalidInputError("not a partition");
  if (static_cast<int>(lam.size()) > n)
    throw InvalidInputError("partition has more than n parts");
  Int r = partition_sum(lam);
  const auto& blk = block(r, workers);
  Partition lc = conjugate(lam);
  Partition core = e_core(lam, e_);
  FockColumn out;
  for (const Partition& nu : list_partitions(n, r)) {
    auto gi = blk.find(conjugate(nu));
    internal_check(gi != blk.end(), "column label missing from its degree block");
    auto it = gi->second.find(lc);
    bool nonzero = it != gi->second.end() && !it->second.is_zero();
    if (e_core(nu, e_) == core) {
      if (nonzero) out.emplace(nu, it->second);
    } else {
      internal_check(!nonzero, "nonzero multiplicity across distinct e-cores");
    }
  }
  auto self = out.find(lam);
  internal_check(self != out.end() && self->second == QPoly::one(),
                 "weyl row diagonal is not one");
  return out;
}

}  // namespace wsk

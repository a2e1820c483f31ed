/*
  This is alcove.cpp: alcove walks, canonical elements, stabilizers,
  strong linkage and dominance.
*/

#include "wsk/alcove.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

namespace wsk {

AlcoveCoords alcove_of(GroupContext& ctx, GroupContext::Id w) {
  return AlcoveCoords{ctx.alcove(w)};
}

/*
  Walk an exact rational point num/den to the fundamental alcove.  Each
  step reflects through a violated wall of C: the finite wall i when
  <p, alpha_i^vee> < 0, the affine wall when <p, theta^vee> > e den.
  The accumulated product u maps the original point into C, so the alcove
  containing the point is u^{-1}.C.  The point must be wall-regular, which
  makes the loop strictly reduce the number of separating walls.
*/
GroupContext::Id element_of_alcove_at(GroupContext& ctx, const Vec& num, Int den) {
  const RootDatum& datum = ctx.datum();
  Vec p = num;
  GroupContext::Id u = ctx.identity();
  Int ed = ctx.e() * den;
  for (std::size_t guard = 0;; ++guard) {
    internal_check(guard < 1000000, "alcove walk failed to terminate");
    int move = -1;
    for (int i = 0; i < datum.rank; ++i) {
      Int c = p[i];
      internal_check(c != 0, "alcove walk hit a finite wall");
      if (c < 0) {
        move = i + 1;
        break;
      }
    }
    if (move < 0) {
      Int c = datum.theta().rc.dot(p);
      internal_check(c % ed != 0, "alcove walk hit an affine wall");
      if (c > ed) move = 0;
    }
    if (move < 0) break;
    const AffineElement& s = ctx.el(ctx.gen(move));
    p = s.f * (p + ed * s.g);
    u = ctx.multiply(ctx.gen(move), u);
  }
  return ctx.inverse(u);
}

namespace {

void require_dominant(const Vec& mu) {
  if ((mu.array() < 0).any())
    throw InvalidInputError("weight is not dominant");
}

}  // namespace

GroupContext::Id upper_closure_element(GroupContext& ctx, const Vec& mu) {
  require_dominant(mu);
  const RootDatum& datum = ctx.datum();
  Vec v = mu + datum.rho;

  /*
    The target alcove has n_alpha = ceil(<v,alpha^vee>/e) - 1: on every
    wall through v this selects the lower side, elsewhere the alcove of v
    itself.  The interior point (2H-1)/(2H) v with H past every pairing
    realizes exactly that table.
  */
  Int h = 2;
  for (std::size_t b = 0; b < datum.positive.size(); ++b)
    h = std::max(h, datum.pairing(v, static_cast<int>(b)) + 1);
  GroupContext::Id f = element_of_alcove_at(ctx, Vec((2 * h - 1) * v), 2 * h);

  const std::vector<Int>& table = ctx.alcove(f);
  for (std::size_t b = 0; b < datum.positive.size(); ++b) {
    Int c = datum.pairing(v, static_cast<int>(b));
    Int want = (c % ctx.e() == 0) ? c / ctx.e() - 1 : c / ctx.e();
    internal_check(table[b] == want, "upper closure element has the wrong alcove");
  }
  return f;
}

bool in_upper_closure(GroupContext& ctx, GroupContext::Id w, const Vec& mu) {
  const RootDatum& datum = ctx.datum();
  Vec v = mu + datum.rho;
  const std::vector<Int>& table = ctx.alcove(w);
  for (std::size_t b = 0; b < datum.positive.size(); ++b) {
    Int c = datum.pairing(v, static_cast<int>(b));
    Int q = c >= 0 ? c / ctx.e() : -((-c + ctx.e() - 1) / ctx.e());
    Int want = (c % ctx.e() == 0) ? q - 1 : q;
    if (table[b] != want) return false;
  }
  return true;
}

GroupContext::Id min_antidominant_element(GroupContext& ctx, const Vec& mu) {
  return ctx.multiply(upper_closure_element(ctx, mu), ctx.w0());
}

BasePoint base_point(GroupContext& ctx, const Vec& mu) {
  const RootDatum& datum = ctx.datum();
  Vec v = mu + datum.rho;
  GroupContext::Id acc = ctx.identity();
  Int e = ctx.e();
  for (std::size_t guard = 0;; ++guard) {
    internal_check(guard < 1000000, "base point walk failed to terminate");
    int finite = -1;
    for (int i = 0; i < datum.rank; ++i) {
      if (v[i] > 0) {
        finite = i;
        break;
      }
    }
    if (finite >= 0) {
      const AffineElement& s = ctx.el(ctx.gen(finite + 1));
      v = s.f * v;
      acc = ctx.multiply(ctx.gen(finite + 1), acc);
      continue;
    }
    if (datum.theta().rc.dot(v) < -e) {
      const AffineElement& s = ctx.el(ctx.s0_minus());
      v = s.f * (v + e * s.g);
      acc = ctx.multiply(ctx.s0_minus(), acc);
      continue;
    }
    break;
  }
  return BasePoint{Vec(v - datum.rho), ctx.inverse(acc)};
}

std::vector<GroupContext::Id> stabilizer_gens(GroupContext& ctx, const Vec& base) {
  const RootDatum& datum = ctx.datum();
  Vec v = base + datum.rho;
  std::vector<GroupContext::Id> gens;
  for (int i = 0; i < datum.rank; ++i)
    if (v[i] == 0) gens.push_back(ctx.gen(i + 1));
  if (datum.theta().rc.dot(v) == -ctx.e()) gens.push_back(ctx.s0_minus());
  return gens;
}

std::vector<GroupContext::Id> group_closure(GroupContext& ctx,
                                            const std::vector<GroupContext::Id>& gens,
                                            std::size_t cap) {
  std::set<GroupContext::Id> seen{ctx.identity()};
  std::deque<GroupContext::Id> todo{ctx.identity()};
  while (!todo.empty()) {
    GroupContext::Id w = todo.front();
    todo.pop_front();
    for (GroupContext::Id g : gens) {
      GroupContext::Id x = ctx.multiply(w, g);
      if (seen.insert(x).second) {
        if (seen.size() > cap)
          throw ResourceCapError("subgroup closure cap exceeded at " + std::to_string(cap));
        todo.push_back(x);
      }
    }
  }
  return std::vector<GroupContext::Id>(seen.begin(), seen.end());
}

std::vector<GroupContext::Id> finite_subgroup(GroupContext& ctx, std::size_t cap) {
  std::vector<GroupContext::Id> gens;
  for (int i = 1; i <= ctx.rank(); ++i) gens.push_back(ctx.gen(i));
  return group_closure(ctx, gens, cap);
}

DoubleCosetData double_coset_data(GroupContext& ctx, const Vec& mu, const Vec& base) {
  require_dominant(mu);
  BasePoint bp = base_point(ctx, mu);
  if (bp.base != base)
    throw InvalidInputError("weight is not in the dot orbit of the base point");

  DoubleCosetData out;
  out.eps = min_antidominant_element(ctx, mu);
  internal_check(ctx.dot_act(out.eps, base) == mu, "eps does not reach the weight");

  std::vector<GroupContext::Id> stab =
      group_closure(ctx, stabilizer_gens(ctx, base));
  std::vector<GroupContext::Id> finite = finite_subgroup(ctx);

  GroupContext::Id best = -1;
  Int best_len = -1;
  bool tie = false;
  for (GroupContext::Id u : finite) {
    GroupContext::Id ue = ctx.multiply(u, out.eps);
    for (GroupContext::Id s : stab) {
      GroupContext::Id cand = ctx.multiply(ue, s);
      Int len = ctx.length_minus(cand);
      if (best < 0 || len < best_len) {
        best = cand;
        best_len = len;
        tie = false;
      } else if (len == best_len && cand != best) {
        tie = true;
      }
    }
  }
  internal_check(best >= 0 && !tie, "double coset minimum is not unique");
  out.d = best;
  out.w0d = ctx.multiply(ctx.w0(), out.d);
  return out;
}

namespace {

/*
  Coefficients of diff on the simple roots, or nothing when diff is not in
  the root lattice.  The double solve only guesses; the verification that
  follows is exact integer arithmetic.
*/
std::optional<Vec> simple_root_coords(GroupContext& ctx, const Vec& diff) {
  if (diff.isZero()) return Vec(Vec::Zero(ctx.rank()));
  Eigen::MatrixXd cd = ctx.datum().cartan.cast<double>();
  Eigen::VectorXd xd = cd.fullPivLu().solve(diff.cast<double>());
  Vec x(ctx.rank());
  for (int i = 0; i < ctx.rank(); ++i) {
    double r = std::round(xd[i]);
    if (std::abs(xd[i] - r) > 1e-6) return std::nullopt;
    x[i] = static_cast<Int>(r);
  }
  if (ctx.datum().cartan * x != diff) return std::nullopt;
  return x;
}

}  // namespace

bool dominance_leq_weights(GroupContext& ctx, const Vec& mu, const Vec& nu) {
  std::optional<Vec> x = simple_root_coords(ctx, Vec(nu - mu));
  return x && (x->array() >= 0).all();
}

Linkage strong_linkage_up(GroupContext& ctx, const Vec& mu, const Vec& nu,
                          std::size_t search_bound) {
  if (mu == nu) return Linkage::kTrue;
  std::optional<Vec> span = simple_root_coords(ctx, Vec(nu - mu));
  if (!span || (span->array() < 0).any()) return Linkage::kFalse;

  /*
    Breadth-first search upward: from xi, a legal step reflects in a wall
    <x+rho, beta^vee> = ke lying strictly above xi, which adds the positive
    multiple (ke - c) beta; every intermediate stays inside the dominance
    interval [mu, nu], so the state space is finite.  The step size is
    bounded by the largest simple-root coefficient of nu - mu: each legal
    image keeps nu - image in the positive cone, and subtracting
    (ke - c) beta removes at least (ke - c) from some coefficient.
  */
  const RootDatum& datum = ctx.datum();
  Int e = ctx.e();
  Int max_step = span->maxCoeff();
  std::set<std::vector<Int>> seen{to_std(mu)};
  std::deque<Vec> todo{mu};
  while (!todo.empty()) {
    Vec xi = todo.front();
    todo.pop_front();
    Vec v = xi + datum.rho;
    for (std::size_t b = 0; b < datum.positive.size(); ++b) {
      const Root& beta = datum.positive[b];
      Int c = datum.pairing(v, static_cast<int>(b));
      for (Int ke = (c >= 0 ? c / e + 1 : -((-c) / e)) * e; ke - c <= max_step; ke += e) {
        if (ke <= c) continue;
        Vec img = xi + (ke - c) * beta.fw;
        if (!dominance_leq_weights(ctx, img, nu)) continue;
        if (img == nu) return Linkage::kTrue;
        if (seen.insert(to_std(img)).second) {
          if (seen.size() > search_bound) return Linkage::kInconclusive;
          todo.push_back(img);
        }
      }
    }
  }
  return Linkage::kFalse;
}

}  // namespace wsk

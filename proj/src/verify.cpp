/*
  This is verify.cpp: exhaustive sweep implementations for the verifier
  suites declared in verify.hpp.
*/

#include "wsk/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace wsk {

void VerifyReport::merge(const VerifyReport& other) {
  cases_checked += other.cases_checked;
  inconclusive += other.inconclusive;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

namespace {

std::string context_label(const VerifyConfig& cfg) {
  std::ostringstream os;
  os << family_letter(cfg.family) << cfg.rank << " e=" << cfg.e;
  return os.str();
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string word_str(GroupContext& ctx, GroupContext::Id w) {
  std::ostringstream os;
  os << '[';
  std::vector<int> word = ctx.reduced_word(w);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << word[i];
  }
  os << ']';
  return os.str();
}

// translations by e*xi for the small dominant root-lattice elements xi
// with at most two simple-root summands
std::vector<Vec> translation_candidates(GroupContext& ctx) {
  const RootDatum& datum = ctx.datum();
  int rank = datum.rank;
  std::vector<Vec> out;
  std::vector<Int> c(static_cast<std::size_t>(rank), 0);
  auto emit = [&]() {
    Vec xi = Vec::Zero(rank);
    for (int i = 0; i < rank; ++i) xi += c[static_cast<std::size_t>(i)] * datum.positive[static_cast<std::size_t>(i)].fw;
    if ((xi.array() >= 0).all() && (xi.array() != 0).any()) out.push_back(xi);
  };
  std::function<void(int, Int)> rec = [&](int i, Int left) {
    if (i == rank) {
      emit();
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      c[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
    c[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, 2);
  return out;
}

GroupContext::Id translation_element(GroupContext& ctx, const Vec& xi) {
  AffineElement t;
  t.f = Mat::Identity(ctx.rank(), ctx.rank());
  t.fi = t.f;
  t.g = xi;
  return ctx.intern(t);
}

struct OrbitSplit {
  std::vector<std::pair<Vec, std::vector<Vec>>> chosen;  // (base, members)
  std::vector<std::string> notes;
  bool has_regular = false;
};

OrbitSplit pick_orbits(GroupContext& ctx, const std::vector<Vec>& box) {
  std::map<std::vector<Int>, std::vector<Vec>> classes;
  for (const Vec& mu : box) classes[to_std(base_point(ctx, mu).base)].push_back(mu);

  OrbitSplit out;
  std::vector<std::pair<Vec, std::vector<Vec>>> regulars, singulars;
  for (const auto& [key, members] : classes) {
    Vec base = from_std(key);
    if (stabilizer_gens(ctx, base).empty())
      regulars.emplace_back(base, members);
    else
      singulars.emplace_back(base, members);
  }
  if (!regulars.empty()) {
    out.chosen.push_back(regulars.front());
    out.has_regular = true;
  } else {
    out.notes.push_back(
        "no regular integral orbit meets the box; substituting a second singular orbit");
    if (singulars.size() > 1) out.chosen.push_back(singulars[1]);
  }
  if (!singulars.empty())
    out.chosen.push_back(singulars.front());
  else
    out.notes.push_back("no singular orbit meets the box");
  return out;
}

}  // namespace

std::vector<Vec> dominant_box(GroupContext& ctx, Int bound) {
  const RootDatum& datum = ctx.datum();
  int rank = datum.rank;
  std::vector<Vec> out;
  Vec mu = Vec::Zero(rank);
  for (;;) {
    Vec v = mu + datum.rho;
    bool inside = true;
    for (std::size_t b = 0; b < datum.positive.size() && inside; ++b)
      inside = datum.pairing(v, static_cast<int>(b)) <= bound;
    if (inside) out.push_back(mu);
    int i = rank - 1;
    while (i >= 0 && mu[i] == bound - 1) {
      mu[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++mu[i];
  }
  return out;
}

VerifyReport verify_strong_linkage(const VerifyConfig& cfg) {
  GroupContext ctx(cfg.family, cfg.rank, cfg.e);
  VerifyReport rep{"orders", context_label(cfg), 0, 0, {}, {}};
  Int bound = cfg.box_multiple * cfg.e;

  std::vector<Vec> box = dominant_box(ctx, bound);
  std::vector<GroupContext::Id> fs(box.size());
  std::map<std::vector<Int>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < box.size(); ++i) {
    fs[i] = upper_closure_element(ctx, box[i]);
    ++rep.cases_checked;
    if (ctx.length(fs[i]) != d_value(alcove_of(ctx, fs[i])))
      rep.failures.push_back({"length_equals_depth", "mu=" + vec_str(box[i])});
    classes[to_std(base_point(ctx, box[i]).base)].push_back(i);
  }

  for (const auto& [key, idxs] : classes) {
    for (std::size_t a : idxs) {
      for (std::size_t b : idxs) {
        Linkage lk = strong_linkage_up(ctx, box[a], box[b]);
        bool br = ctx.bruhat_leq(fs[a], fs[b]);
        ++rep.cases_checked;
        if (lk == Linkage::kInconclusive) {
          ++rep.inconclusive;
          continue;
        }
        if ((lk == Linkage::kTrue) != br)
          rep.failures.push_back(
              {"linkage_iff_bruhat", "mu=" + vec_str(box[a]) + " nu=" + vec_str(box[b]) +
                                         " linkage=" + (lk == Linkage::kTrue ? "1" : "0") +
                                         " bruhat=" + (br ? "1" : "0")});
      }
    }
  }
  return rep;
}

VerifyReport verify_order_transport(const VerifyConfig& cfg) {
  GroupContext ctx(cfg.family, cfg.rank, cfg.e);
  VerifyReport rep{"orders", context_label(cfg), 0, 0, {}, {}};
  Int bound = cfg.box_multiple * cfg.e;

  std::vector<Vec> box = dominant_box(ctx, bound);
  OrbitSplit split = pick_orbits(ctx, box);
  rep.notes = split.notes;
  std::vector<Vec> xis = translation_candidates(ctx);

  bool first_orbit = true;
  for (const auto& [base, members] : split.chosen) {
    bool regular = first_orbit && split.has_regular;
    first_orbit = false;

    std::vector<DoubleCosetData> dd;
    std::vector<GroupContext::Id> fmu(members.size());
    dd.reserve(members.size());
    Int lw0 = ctx.length_minus(ctx.w0());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Vec& mu = members[i];
      fmu[i] = upper_closure_element(ctx, mu);
      try {
        dd.push_back(double_coset_data(ctx, mu, base));
      } catch (const InternalError& err) {
        rep.failures.push_back({"distinguished_unique", "mu=" + vec_str(mu) + " " + err.what()});
        dd.push_back({ctx.identity(), ctx.identity(), ctx.identity()});
        continue;
      }
      const DoubleCosetData& c = dd.back();
      rep.cases_checked += 4;
      if (ctx.dot_act(c.w0d, base) != mu)
        rep.failures.push_back({"distinguished_reach", "mu=" + vec_str(mu)});
      if (ctx.length_minus(c.w0d) != lw0 + ctx.length_minus(c.d))
        rep.failures.push_back({"length_additivity", "mu=" + vec_str(mu)});
      if (!ctx.bruhat_leq_minus(c.d, c.eps) || !ctx.bruhat_leq_minus(c.eps, c.w0d))
        rep.failures.push_back({"coset_chain", "mu=" + vec_str(mu)});
      GroupContext::Id conj = ctx.multiply(ctx.multiply(ctx.w0(), c.d), ctx.w0());
      if (fmu[i] != conj)
        rep.failures.push_back({"conjugation_formula",
                                "mu=" + vec_str(mu) + " f=" + word_str(ctx, fmu[i]) +
                                    " w0dw0=" + word_str(ctx, conj)});
    }

    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = 0; b < members.size(); ++b) {
        bool q1 = ctx.bruhat_leq_minus(dd[a].d, dd[b].d);
        bool q2 = ctx.bruhat_leq_minus(dd[a].eps, dd[b].eps);
        bool q3 = ctx.bruhat_leq_minus(dd[a].w0d, dd[b].w0d);
        ++rep.cases_checked;
        if (q1 != q2 || q2 != q3)
          rep.failures.push_back({"three_way_order",
                                  "mu=" + vec_str(members[a]) + " nu=" + vec_str(members[b]) +
                                      " d:" + std::to_string(q1) + " eps:" + std::to_string(q2) +
                                      " w0d:" + std::to_string(q3)});
      }
    }

    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const Vec& xi : xis) {
        GroupContext::Id z = translation_element(ctx, xi);
        Vec shifted = members[i] + ctx.e() * xi;
        GroupContext::Id lhs = upper_closure_element(ctx, shifted);
        GroupContext::Id zf = ctx.multiply(z, fmu[i]);
        rep.cases_checked += 2;
        if (lhs != zf)
          rep.failures.push_back(
              {"translation_formula", "mu=" + vec_str(members[i]) + " xi=" + vec_str(xi)});
        if (ctx.length(zf) != ctx.length(z) + ctx.length(fmu[i]))
          rep.failures.push_back(
              {"translation_additivity", "mu=" + vec_str(members[i]) + " xi=" + vec_str(xi)});
      }
    }

    if (regular) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = 0; b < members.size(); ++b) {
          Linkage lk = strong_linkage_up(ctx, members[a], members[b]);
          ++rep.cases_checked;
          if (lk == Linkage::kInconclusive) {
            ++rep.inconclusive;
            continue;
          }
          if ((lk == Linkage::kTrue) != ctx.bruhat_leq(fmu[a], fmu[b]))
            rep.failures.push_back({"dominant_pair_linkage", "mu=" + vec_str(members[a]) +
                                                                 " nu=" + vec_str(members[b])});
        }
      }
    }
  }
  if (!split.has_regular)
    rep.notes.push_back("dominant-pair linkage cases skipped: no regular orbit in this context");
  return rep;
}

VerifyReport verify_orders(const VerifyConfig& cfg) {
  VerifyReport rep = verify_strong_linkage(cfg);
  rep.merge(verify_order_transport(cfg));
  return rep;
}

VerifyReport verify_klpoly(const VerifyConfig& cfg) {
  GroupContext ctx(cfg.family, cfg.rank, cfg.e);
  VerifyReport rep{"klpoly", context_label(cfg), 0, 0, {}, {}};
  KLTable tp(ctx, KLKind::P), tq(ctx, KLKind::Q);

  std::vector<GroupContext::Id> els = ctx.enumerate_up_to_length(cfg.max_length);
  for (GroupContext::Id w : els) {
    for (GroupContext::Id y : els) {
      if (!ctx.bruhat_leq(y, w)) continue;
      const QPoly& p = kl_p(ctx, tp, y, w);
      inverse_kl_q(ctx, tp, tq, y, w);
      ++rep.cases_checked;
      if (y == w && !(p == QPoly::one()))
        rep.failures.push_back({"diagonal_one", "w=" + word_str(ctx, w)});
      if (y != w && !p.is_zero() && 2 * p.degree() > ctx.length(w) - ctx.length(y) - 1)
        rep.failures.push_back(
            {"degree_bound", "y=" + word_str(ctx, y) + " w=" + word_str(ctx, w)});
      for (Int c : p.c)
        if (c < 0)
          rep.failures.push_back(
              {"nonnegative_coefficients", "y=" + word_str(ctx, y) + " w=" + word_str(ctx, w)});
    }
  }

  for (GroupContext::Id w : els) {
    for (GroupContext::Id y : els) {
      if (!ctx.bruhat_leq(y, w)) continue;
      QPoly pq = QPoly::zero(), qp = QPoly::zero();
      for (GroupContext::Id z : els) {
        if (!ctx.bruhat_leq(y, z) || !ctx.bruhat_leq(z, w)) continue;
        Int sign = (ctx.length(z) - ctx.length(y)) % 2 == 0 ? 1 : -1;
        const QPoly* pyz = tp.find(y, z);
        const QPoly* qzw = tq.find(z, w);
        const QPoly* qyz = tq.find(y, z);
        const QPoly* pzw = tp.find(z, w);
        internal_check(pyz && qzw && qyz && pzw, "interval pair missing from tables");
        pq = add(pq, scale(mul(*pyz, *qzw), sign));
        qp = add(qp, scale(mul(*qyz, *pzw), sign));
      }
      QPoly expected = y == w ? QPoly::one() : QPoly::zero();
      rep.cases_checked += 2;
      if (!(pq == expected))
        rep.failures.push_back(
            {"inversion_identity", "side=PQ y=" + word_str(ctx, y) + " w=" + word_str(ctx, w)});
      if (!(qp == expected))
        rep.failures.push_back(
            {"inversion_identity", "side=QP y=" + word_str(ctx, y) + " w=" + word_str(ctx, w)});
    }
  }
  return rep;
}

VerifyReport verify_parity(const VerifyConfig& cfg) {
  VerifyReport rep{"parity", context_label(cfg), 0, 0, {}, {}};
  int n = cfg.n > 0 ? cfg.n : static_cast<int>(cfg.r);
  rep.context = "A" + std::to_string(n - 1) + " e=" + std::to_string(cfg.e) +
                " r=" + std::to_string(cfg.r);
  if (n == 1) {
    ++rep.cases_checked;
    return rep;
  }

  Engine eng(Family::A, n - 1, cfg.e);
  GroupContext& ctx = eng.ctx();
  std::map<std::vector<Int>, Int> lengths;
  auto lminus = [&](const Partition& p) {
    auto it = lengths.find(p);
    if (it != lengths.end()) return it->second;
    Int l = ctx.length_minus(min_antidominant_element(ctx, to_weight(p, n)));
    lengths.emplace(p, l);
    return l;
  };

  for (const Partition& lambda : list_partitions(n, cfg.r)) {
    LayerTable t = weyl_layer_table(eng, lambda, n);
    validate_table(t);
    Int ll = lminus(lambda);
    for (std::size_t i = 0; i < t.layers.size(); ++i) {
      for (const LayerEntry& entry : t.layers[i]) {
        ++rep.cases_checked;
        if ((static_cast<Int>(i) - (ll - lminus(entry.label))) % 2 != 0)
          rep.failures.push_back({"layer_parity",
                                  "lambda=" + partition_str(lambda) + " nu=" +
                                      partition_str(entry.label) + " i=" + std::to_string(i)});
      }
    }
  }
  return rep;
}

}  // namespace wsk

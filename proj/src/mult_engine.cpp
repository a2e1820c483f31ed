/*
  This is mult_engine.cpp: layer-table assembly from the q-Fock canonical
  basis (type A) and gated antispherical rows (type D).
*/

#include "wsk/mult_engine.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "wsk/jantzen.hpp"

namespace wsk {

namespace {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void sort_layer(std::vector<LayerEntry>& layer) {
  std::sort(layer.begin(), layer.end(), [](const LayerEntry& a, const LayerEntry& b) {
    return a.label > b.label;  // reverse-lexicographic: larger labels first
  });
}

bool outside_range(Family family, int rank, Int e) {
  if (e < 2) return true;
  return family == Family::D && rank % 2 == 1 && e < 3;
}

void append_layers(LayerTable& t, const std::vector<Int>& label, const QPoly& p) {
  for (int k = 0; k <= p.degree(); ++k) {
    Int c = p.coeff(k);
    if (c == 0) continue;
    if (static_cast<int>(t.layers.size()) <= k) t.layers.resize(static_cast<std::size_t>(k) + 1);
    t.layers[static_cast<std::size_t>(k)].push_back({label, c});
  }
}

void finish_layers(LayerTable& t) {
  for (auto& layer : t.layers) sort_layer(layer);
  while (!t.layers.empty() && t.layers.back().empty()) t.layers.pop_back();
}

// the antispherical reading of one weight row; polynomials come back in
// nonnegative powers of v (the diagonal is 1, off-diagonal entries are
// strictly positive by the parabolic degree bound)
GradedRow alcove_candidate_row(Engine& eng, const Vec& lambda, int workers) {
  GroupContext& ctx = eng.ctx();
  BasePoint bp = base_point(ctx, lambda);
  Vec anchor = ctx.dot_act(ctx.w0(), bp.base);

  GroupContext::Id y = upper_closure_element(ctx, lambda);
  const Antispherical::Row& row = eng.basis().canonical_row(y);

  std::vector<std::pair<GroupContext::Id, const LPoly*>> support;
  support.reserve(row.size());
  for (const auto& [z, poly] : row) support.emplace_back(z, &poly);

  std::vector<std::optional<Vec>> accepted(support.size());
  auto scan = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Vec nu = ctx.dot_act(support[i].first, anchor);
      if ((nu.array() < 0).any()) continue;
      if (!in_upper_closure(ctx, support[i].first, nu)) continue;
      accepted[i] = std::move(nu);
    }
  };
  std::size_t nthreads = std::min<std::size_t>(std::max(workers, 1), support.size());
  if (nthreads <= 1) {
    scan(0, support.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (support.size() + nthreads - 1) / nthreads;
    for (std::size_t a = 0; a < support.size(); a += chunk)
      pool.emplace_back(scan, a, std::min(a + chunk, support.size()));
    for (auto& th : pool) th.join();
  }

  GradedRow out;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!accepted[i]) continue;
    const LPoly& poly = *support[i].second;
    internal_check(poly.is_zero() || poly.min_exp() >= 0,
                   "negative grading in an accepted support entry");
    QPoly qp;
    if (!poly.is_zero()) {
      qp.c.assign(static_cast<std::size_t>(poly.max_exp() + 1), 0);
      for (int k = 0; k <= poly.max_exp(); ++k)
        qp.c[static_cast<std::size_t>(k)] = poly.coeff(k);
    }
    bool fresh = out.emplace(to_std(*accepted[i]), std::move(qp)).second;
    internal_check(fresh, "two support elements reached the same weight");
  }
  return out;
}

// type A weights pad to partitions at degree sum_i (i+1) lambda_i
Partition weight_partition_label(const Vec& lambda, int n) {
  Int s = 0;
  for (int i = 0; i + 1 < n; ++i) s += (i + 1) * lambda[i];
  return from_weight(lambda, n, s);
}

}  // namespace

LayerTable weyl_layer_table_weight(Engine& eng, const Vec& lambda, int workers) {
  GroupContext& ctx = eng.ctx();
  if (lambda.size() != ctx.rank()) throw InvalidInputError("weight length does not match rank");
  if ((lambda.array() < 0).any()) throw InvalidInputError("weight is not dominant");

  LayerTable t;
  t.family = ctx.family();
  t.rank = ctx.rank();
  t.e = ctx.e();
  t.partition_indexed = false;
  t.lambda_label = to_std(lambda);
  t.table_kind = "weyl";
  t.outside_proven_range = outside_range(ctx.family(), ctx.rank(), ctx.e());
  t.regular_orbit = stabilizer_gens(ctx, base_point(ctx, lambda).base).empty();

  if (ctx.family() == Family::A) {
    t.q_convention = kQConventionFock;
    int n = ctx.rank() + 1;
    Partition lam = weight_partition_label(lambda, n);
    for (const auto& [nu, p] : eng.fock().weyl_row(lam, n, workers))
      append_layers(t, to_std(to_weight(nu, n)), p);
  } else {
    t.q_convention = kQConventionAlcove;
    GradedRow row = alcove_candidate_row(eng, lambda, workers);
    JantzenReport gate = jantzen_validate(
        ctx.datum(), ctx.e(), lambda,
        [&eng, workers](const Vec& nu) { return alcove_candidate_row(eng, nu, workers); });
    if (!gate.ok)
      throw InternalError("type D table failed sum-formula validation: " + gate.detail);
    for (const auto& [label, p] : row) append_layers(t, label, p);
  }

  finish_layers(t);
  return t;
}

LayerTable trivial_table(const Partition& lambda, Int e, const std::string& kind) {
  LayerTable t;
  t.family = Family::A;
  t.rank = 0;
  t.e = e;
  t.partition_indexed = true;
  t.lambda_label = lambda;
  t.q_convention = kQConventionFock;
  t.table_kind = kind;
  t.regular_orbit = true;
  std::vector<Int> label = kind == "specht" ? conjugate(lambda) : lambda;
  t.layers.push_back({LayerEntry{label, 1}});
  return t;
}

LayerTable weyl_layer_table(Engine& eng, const Partition& lambda, int n, int workers) {
  if (!is_partition(lambda)) throw InvalidInputError("not a partition");
  if (static_cast<int>(lambda.size()) > n)
    throw InvalidInputError("partition has more than n parts");
  if (eng.ctx().family() != Family::A || eng.ctx().rank() != n - 1)
    throw InvalidInputError("partition tables need a type A engine of rank n-1");

  LayerTable t;
  t.family = Family::A;
  t.rank = eng.ctx().rank();
  t.e = eng.ctx().e();
  t.partition_indexed = true;
  t.lambda_label = lambda;
  t.q_convention = kQConventionFock;
  t.table_kind = "weyl";
  t.outside_proven_range = outside_range(Family::A, t.rank, t.e);
  t.regular_orbit =
      stabilizer_gens(eng.ctx(), base_point(eng.ctx(), to_weight(lambda, n)).base).empty();

  for (const auto& [nu, p] : eng.fock().weyl_row(lambda, n, workers)) append_layers(t, nu, p);
  finish_layers(t);
  return t;
}

LayerTable specht_layer_table(Engine& eng, const Partition& lambda, int workers) {
  Int r = partition_sum(lambda);
  int n = static_cast<int>(r);
  LayerTable w = weyl_layer_table(eng, lambda, n, workers);

  LayerTable t = w;
  t.table_kind = "specht";
  t.layers.clear();
  std::size_t depth = w.layers.size();
  t.layers.resize(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    for (const auto& entry : w.layers[depth - 1 - i]) {
      if (!is_e_restricted(entry.label, w.e)) continue;
      t.layers[i].push_back({conjugate(entry.label), entry.mult});
    }
    sort_layer(t.layers[i]);
  }
  while (!t.layers.empty() && t.layers.back().empty()) t.layers.pop_back();
  return t;
}

LayerTable modular_table(Engine& eng, const Partition& lambda, int n, Int p, int workers) {
  if (!is_prime(p)) throw InvalidInputError("p must be prime");
  Int r = partition_sum(lambda);
  if (p * p <= r)
    throw InvalidInputError("p^2 <= r is outside the conjecture's stated range");
  internal_check(eng.ctx().e() == p, "modular table requires an engine with e = p");
  LayerTable t = weyl_layer_table(eng, lambda, n, workers);
  t.table_kind = "modular";
  t.assumes_james = true;
  t.assumes_bipartite = true;
  return t;
}

std::vector<Partition> linkage_class(Engine& eng, const Partition& lambda, int n) {
  Int r = partition_sum(lambda);
  GroupContext& ctx = eng.ctx();
  std::vector<Partition> out;
  if (n == 1 || ctx.rank() == 0) {
    out.push_back(lambda);
    return out;
  }
  Vec base = base_point(ctx, to_weight(lambda, n)).base;
  for (const Partition& mu : list_partitions(n, r))
    if (base_point(ctx, to_weight(mu, n)).base == base) out.push_back(mu);
  return out;
}

ParityClass parity_class(Engine& eng, const Partition& lambda, int n) {
  if (n == 1) return ParityClass::E;
  GroupContext& ctx = eng.ctx();
  Int lm = ctx.length_minus(min_antidominant_element(ctx, to_weight(lambda, n)));
  return lm % 2 == 0 ? ParityClass::E : ParityClass::O;
}

Int decomposition_number(Engine& eng, const Partition& lambda, const Partition& nu, int n) {
  if (partition_sum(lambda) != partition_sum(nu)) return 0;
  if (n == 1) return lambda == nu ? 1 : 0;
  if (eng.ctx().family() != Family::A || eng.ctx().rank() != n - 1)
    throw InvalidInputError("decomposition numbers need a type A engine of rank n-1");
  FockColumn row = eng.fock().weyl_row(lambda, n);
  auto it = row.find(nu);
  return it == row.end() ? 0 : it->second.eval_one();
}

void validate_table(const LayerTable& t) {
  internal_check(!t.layers.empty(), "table has no layers");
  if (t.table_kind != "specht") {
    internal_check(t.layers[0].size() == 1, "layer 0 is not a singleton");
    internal_check(t.layers[0][0].label == t.lambda_label && t.layers[0][0].mult == 1,
                   "layer 0 is not (lambda, 1)");
    for (std::size_t i = 1; i < t.layers.size(); ++i)
      for (const auto& entry : t.layers[i])
        internal_check(entry.label != t.lambda_label, "lambda appears below layer 0");
  }
  internal_check(!t.layers.back().empty(), "trailing empty layer survived trimming");
  for (const auto& layer : t.layers)
    for (const auto& entry : layer)
      internal_check(entry.mult > 0, "nonpositive multiplicity");
}

}  // namespace wsk

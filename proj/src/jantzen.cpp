/*
  This is jantzen.cpp: the graded sum-formula consistency gate.
*/

#include "wsk/jantzen.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace wsk {

namespace {

using ChiSum = std::map<std::vector<Int>, Int>;

std::string weight_str(const std::vector<Int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + ")";
}

// walks v = weight + rho to the strictly dominant chamber by simple
// reflections, tracking the sign; a wall hit kills the character
std::optional<std::pair<int, Vec>> dominant_sort(const RootDatum& datum, Vec v) {
  int sign = 1;
  long guard = 0;
  while (true) {
    internal_check(++guard < 1000000, "dominant sort failed to terminate");
    int neg = -1;
    bool wall = false;
    for (int i = 0; i < datum.rank; ++i) {
      if (v[i] == 0) {
        wall = true;
        break;
      }
      if (v[i] < 0 && neg < 0) neg = i;
    }
    if (wall) return std::nullopt;
    if (neg < 0) return std::make_pair(sign, std::move(v));
    Int c = v[neg];
    v -= c * datum.cartan.col(neg);
    sign = -sign;
  }
}

void add_chi(ChiSum& acc, const std::vector<Int>& key, Int c) {
  auto it = acc.emplace(key, 0).first;
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

}  // namespace

ChiSum jantzen_character_sum(const RootDatum& datum, Int e, const Vec& lambda) {
  ChiSum acc;
  Vec v = lambda + datum.rho;
  for (std::size_t b = 0; b < datum.positive.size(); ++b) {
    Int n = datum.pairing(v, static_cast<int>(b));
    for (Int me = e; me < n; me += e) {
      Vec u = v - (n - me) * datum.positive[b].fw;
      auto sorted = dominant_sort(datum, std::move(u));
      if (!sorted) continue;
      add_chi(acc, to_std(sorted->second - datum.rho), sorted->first);
    }
  }
  return acc;
}

JantzenReport jantzen_validate(const RootDatum& datum, Int e, const Vec& lambda,
                               const RowProvider& rows) {
  JantzenReport report;

  std::map<std::vector<Int>, GradedRow> row_of;
  std::map<std::vector<Int>, ChiSum> lhs_of;
  std::vector<std::vector<Int>> todo{to_std(lambda)};
  std::set<std::vector<Int>> seen{to_std(lambda)};
  while (!todo.empty()) {
    if (seen.size() > 100000) {
      report.ok = false;
      report.detail = "downward closure did not stabilize";
      return report;
    }
    std::vector<Int> nu = std::move(todo.back());
    todo.pop_back();
    Vec nv = from_std(nu);
    GradedRow row = rows(nv);
    internal_check(row.count(nu) == 1 && row.at(nu) == QPoly::one(),
                   "candidate row diagonal is not one");
    ChiSum lhs = jantzen_character_sum(datum, e, nv);
    auto enqueue = [&](const std::vector<Int>& mu) {
      if (seen.insert(mu).second) todo.push_back(mu);
    };
    for (const auto& [mu, p] : row) enqueue(mu);
    for (const auto& [mu, c] : lhs) enqueue(mu);
    lhs_of.emplace(nu, std::move(lhs));
    row_of.emplace(std::move(nu), std::move(row));
  }

  // chi-expansion of each simple character, by triangular recursion on
  // the candidate rows; a dependency cycle means the family cannot come
  // from a filtration and is rejected
  std::map<std::vector<Int>, ChiSum> chl;
  std::map<std::vector<Int>, int> state;  // 1 in progress, 2 done
  std::function<bool(const std::vector<Int>&)> expand = [&](const std::vector<Int>& nu) {
    int& st = state[nu];
    if (st == 2) return true;
    if (st == 1) {
      report.ok = false;
      report.detail = "candidate rows are not triangular at " + weight_str(nu);
      return false;
    }
    st = 1;
    ChiSum out;
    add_chi(out, nu, 1);
    auto ri = row_of.find(nu);
    internal_check(ri != row_of.end(), "weight escaped the discovered closure");
    for (const auto& [mu, p] : ri->second) {
      if (mu == nu) continue;
      Int d = p.eval_one();
      if (d == 0) continue;
      if (!expand(mu)) return false;
      for (const auto& [xi, c] : chl.at(mu)) add_chi(out, xi, -d * c);
    }
    chl.emplace(nu, std::move(out));
    state[nu] = 2;
    return true;
  };

  for (const auto& [nu, row] : row_of) {
    if (!expand(nu)) return report;
    ChiSum rhs;
    for (const auto& [mu, p] : row) {
      Int t = 0;
      for (std::size_t k = 1; k < p.c.size(); ++k) t += static_cast<Int>(k) * p.c[k];
      if (t == 0) continue;
      for (const auto& [xi, c] : chl.at(mu)) add_chi(rhs, xi, t * c);
    }
    if (rhs != lhs_of.at(nu)) {
      report.ok = false;
      std::ostringstream os;
      os << "sum formula fails at " << weight_str(nu) << ": expected ";
      for (const auto& [xi, c] : lhs_of.at(nu)) os << c << "*chi" << weight_str(xi) << " ";
      os << "got ";
      for (const auto& [xi, c] : rhs) os << c << "*chi" << weight_str(xi) << " ";
      report.detail = os.str();
      return report;
    }
  }
  return report;
}

}  // namespace wsk

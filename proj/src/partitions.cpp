/*
  This is partitions.cpp: partition combinatorics.
*/

#include "wsk/partitions.hpp"

#include <algorithm>

namespace wsk {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

Int partition_sum(const Partition& p) {
  Int s = 0;
  for (Int x : p) s += x;
  return s;
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (Int row = 1; row <= p[0]; ++row) {
    Int count = 0;
    for (Int x : p)
      if (x >= row) ++count;
    out.push_back(count);
  }
  return out;
}

bool dominance_leq_partitions(const Partition& mu, const Partition& lambda) {
  if (partition_sum(mu) != partition_sum(lambda))
    throw InvalidInputError("dominance compares partitions of equal size");
  Int su = 0, sl = 0;
  std::size_t k = std::max(mu.size(), lambda.size());
  for (std::size_t i = 0; i < k; ++i) {
    su += i < mu.size() ? mu[i] : 0;
    sl += i < lambda.size() ? lambda[i] : 0;
    if (su > sl) return false;
  }
  return true;
}

bool is_e_regular(const Partition& p, Int e) {
  Int run = 1;
  for (std::size_t i = 1; i < p.size(); ++i) {
    run = p[i] == p[i - 1] ? run + 1 : 1;
    if (run >= e) return false;
  }
  return p.empty() || run < e;
}

bool is_e_restricted(const Partition& p, Int e) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    Int next = i + 1 < p.size() ? p[i + 1] : 0;
    if (p[i] - next > e - 1) return false;
  }
  return true;
}

Vec to_weight(const Partition& p, int n) {
  if (static_cast<int>(p.size()) > n)
    throw InvalidInputError("partition has more parts than the weight lattice rank allows");
  Vec w = Vec::Zero(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    Int a = i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : 0;
    Int b = i + 1 < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i) + 1] : 0;
    w[i] = a - b;
  }
  return w;
}

Partition from_weight(const Vec& weight, int n, Int r) {
  internal_check(weight.size() == n - 1, "weight rank mismatch");
  std::vector<Int> parts(static_cast<std::size_t>(n), 0);
  for (int i = n - 2; i >= 0; --i)
    parts[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i) + 1] + weight[i];
  Int s = 0;
  for (Int x : parts) s += x;
  internal_check((r - s) % n == 0, "weight is not in the partition degree class");
  Int t = (r - s) / n;
  Partition out;
  for (Int x : parts) {
    Int part = x + t;
    internal_check(part >= 0, "weight has no partition label at this degree");
    if (part > 0) out.push_back(part);
  }
  return out;
}

/*
  e-core via beta-numbers: take first-column hook lengths beta_i =
  p_i + (len - 1 - i) on a bead count that is a multiple of e; removing an
  e-rim-hook is subtracting e from a beta-number while staying distinct,
  so the core's beta-set slides every bead as low as it goes on its runner
  mod e.  The result is independent of any removal order.
*/
Partition e_core(const Partition& p, Int e) {
  if (e < 2) throw InvalidInputError("e-core requires e >= 2");
  Int len = static_cast<Int>(p.size());
  Int beads = ((len + e - 1) / e) * e;
  if (beads == 0) beads = e;
  std::vector<Int> beta;
  for (Int i = 0; i < beads; ++i) {
    Int part = i < len ? p[static_cast<std::size_t>(i)] : 0;
    beta.push_back(part + (beads - 1 - i));
  }
  std::vector<std::vector<Int>> runners(static_cast<std::size_t>(e));
  for (Int b : beta) runners[static_cast<std::size_t>(b % e)].push_back(b);
  std::vector<Int> packed;
  for (Int rr = 0; rr < e; ++rr) {
    std::size_t count = runners[static_cast<std::size_t>(rr)].size();
    for (std::size_t j = 0; j < count; ++j) packed.push_back(rr + e * static_cast<Int>(j));
  }
  std::sort(packed.begin(), packed.end(), std::greater<Int>());
  Partition out;
  for (std::size_t i = 0; i < packed.size(); ++i) {
    Int part = packed[i] - (static_cast<Int>(packed.size()) - 1 - static_cast<Int>(i));
    if (part > 0) out.push_back(part);
  }
  return out;
}

std::vector<Partition> list_partitions(int n, Int r) {
  std::vector<Partition> out;
  Partition cur;
  // reverse-lexicographic: larger first parts first
  auto rec = [&](auto&& self, Int remaining, Int maxpart, int slots) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (slots == 0) return;
    for (Int part = std::min(maxpart, remaining); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part, slots - 1);
      cur.pop_back();
    }
  };
  rec(rec, r, r, n);
  return out;
}

std::string partition_str(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace wsk

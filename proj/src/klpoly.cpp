/*
  This is klpoly.cpp: the Kazhdan-Lusztig recursions, interval enumeration
  and the cache round trip.
*/

#include "wsk/klpoly.hpp"

#include <fstream>
#include <sstream>

namespace wsk {

namespace {

inline std::uint64_t pack(GroupContext::Id y, GroupContext::Id w) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(y)) << 32) |
         static_cast<std::uint32_t>(w);
}

std::string word_str(const std::vector<int>& w) {
  if (w.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

std::vector<int> parse_word(const std::string& s) {
  if (s == "-") return {};
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw InvalidInputError("malformed word in cache entry");
    out.push_back(std::stoi(tok));
  }
  return out;
}

}  // namespace

std::string KLTable::fingerprint() const {
  return std::string(kind_ == KLKind::P ? "P" : "Q") + " " + family_letter(ctx_->family()) +
         " " + std::to_string(ctx_->rank()) + " " + std::to_string(ctx_->e());
}

bool KLTable::has(GroupContext::Id y, GroupContext::Id w) const {
  return entries_.count(pack(y, w)) != 0;
}

const QPoly* KLTable::find(GroupContext::Id y, GroupContext::Id w) const {
  auto it = entries_.find(pack(y, w));
  return it == entries_.end() ? nullptr : &it->second;
}

void KLTable::put(GroupContext::Id y, GroupContext::Id w, QPoly p) {
  entries_[pack(y, w)] = std::move(p);
}

std::vector<GroupContext::Id> bruhat_interval(GroupContext& ctx, GroupContext::Id y,
                                              GroupContext::Id w, std::size_t cap) {
  std::vector<GroupContext::Id> out;
  for (GroupContext::Id z : ctx.enumerate_up_to_length(ctx.length(w))) {
    if (ctx.bruhat_leq(y, z) && ctx.bruhat_leq(z, w)) {
      out.push_back(z);
      if (out.size() > cap)
        throw ResourceCapError("bruhat interval cap exceeded at " + std::to_string(cap));
    }
  }
  return out;
}

QPoly kl_p(GroupContext& ctx, KLTable& table, GroupContext::Id y, GroupContext::Id w,
           std::size_t cap) {
  if (!ctx.bruhat_leq(y, w)) return QPoly::zero();
  if (y == w) {
    if (!table.has(y, w)) table.put(y, w, QPoly::one());
    return QPoly::one();
  }
  if (const QPoly* hit = table.find(y, w)) return *hit;

  int s = 0;
  while (!ctx.is_right_descent(w, s)) ++s;
  QPoly result;
  if (!ctx.is_right_descent(y, s)) {
    result = kl_p(ctx, table, ctx.multiply_gen(y, s), w, cap);
  } else {
    GroupContext::Id u = ctx.multiply_gen(w, s);
    GroupContext::Id ys = ctx.multiply_gen(y, s);
    result = add(kl_p(ctx, table, ys, u, cap), shift(kl_p(ctx, table, y, u, cap), 1));
    for (GroupContext::Id z : bruhat_interval(ctx, y, u, cap)) {
      if (!ctx.is_right_descent(z, s)) continue;
      Int m = mu_coeff(ctx, table, z, u, cap);
      if (m == 0) continue;
      Int gap = ctx.length(w) - ctx.length(z);
      internal_check(gap % 2 == 0, "odd exponent in correction term");
      result = sub(result, scale(shift(kl_p(ctx, table, y, z, cap), static_cast<int>(gap / 2)), m));
    }
  }
  for (Int c : result.c) internal_check(c >= 0, "negative coefficient in P");
  Int bound = ctx.length(w) - ctx.length(y) - 1;
  internal_check(2 * result.degree() <= bound, "degree bound violated in P");
  table.put(y, w, result);
  return result;
}

Int mu_coeff(GroupContext& ctx, KLTable& table, GroupContext::Id y, GroupContext::Id w,
             std::size_t cap) {
  Int gap = ctx.length(w) - ctx.length(y);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return kl_p(ctx, table, y, w, cap).coeff(static_cast<int>((gap - 1) / 2));
}

QPoly inverse_kl_q(GroupContext& ctx, KLTable& tableP, KLTable& tableQ,
                   GroupContext::Id y, GroupContext::Id w, std::size_t cap) {
  if (!ctx.bruhat_leq(y, w)) return QPoly::zero();
  if (y == w) {
    if (!tableQ.has(y, w)) tableQ.put(y, w, QPoly::one());
    return QPoly::one();
  }
  if (const QPoly* hit = tableQ.find(y, w)) return *hit;

  QPoly acc;
  for (GroupContext::Id z : bruhat_interval(ctx, y, w, cap)) {
    if (z == y) continue;
    QPoly term = mul(kl_p(ctx, tableP, y, z, cap), inverse_kl_q(ctx, tableP, tableQ, z, w, cap));
    Int sign = (ctx.length(z) - ctx.length(y)) % 2 == 0 ? 1 : -1;
    acc = sign > 0 ? add(acc, term) : sub(acc, term);
  }
  QPoly result = scale(acc, -1);
  tableQ.put(y, w, result);
  return result;
}

void cache_save(const KLTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw InvalidInputError("cannot write cache file " + path);
  out << "KLCACHE v1 " << table.fingerprint() << "\n";
  table.for_each_sorted([&out](const std::vector<int>& y, const std::vector<int>& w,
                               const QPoly& p) {
    out << word_str(y) << ";" << word_str(w) << ";";
    if (p.is_zero()) {
      out << "0";
    } else {
      for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i) out << ',';
        out << p.c[i];
      }
    }
    out << "\n";
  });
}

void cache_load(GroupContext& ctx, KLTable& table, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot read cache file " + path);
  std::string header;
  if (!std::getline(in, header)) throw InvalidInputError("empty cache file " + path);
  std::string expected = "KLCACHE v1 " + table.fingerprint();
  if (header != expected)
    throw InvalidInputError("cache fingerprint mismatch: file has \"" + header +
                            "\", context needs \"" + expected + "\"");
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t a = line.find(';');
    std::size_t b = line.find(';', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos)
      throw InvalidInputError("corrupt cache entry at line " + std::to_string(lineno));
    GroupContext::Id y = ctx.from_word(parse_word(line.substr(0, a)));
    GroupContext::Id w = ctx.from_word(parse_word(line.substr(a + 1, b - a - 1)));
    QPoly p;
    std::stringstream ss(line.substr(b + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw InvalidInputError("corrupt coefficient at line " + std::to_string(lineno));
      p.c.push_back(std::stoll(tok));
    }
    p.trim();
    table.put(y, w, std::move(p));
  }
}

}  // namespace wsk

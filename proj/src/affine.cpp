/*
  This is affine.cpp: group arithmetic, lengths, descents, reduced words,
  Bruhat order and bounded enumeration for the affine Weyl group.
*/

#include "wsk/affine.hpp"

#include <algorithm>

namespace wsk {

namespace {

inline std::uint64_t pack(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

GroupContext::GroupContext(Family family, int rank, Int e)
    : datum_(build_root_datum(family, rank)), e_(e) {
  if (e < 1) throw InvalidInputError("e must be >= 1");

  AffineElement id;
  id.f = Mat::Identity(rank, rank);
  id.fi = id.f;
  id.g = Vec::Zero(rank);
  id_identity_ = intern(id);

  // the affine generator reflects in <v, theta^vee> = e: s_theta then a
  // translation by -theta
  const Root& theta = datum_.theta();
  AffineElement s0;
  s0.f = reflection_matrix(datum_, datum_.theta_index);
  s0.fi = s0.f;
  s0.g = -theta.fw;
  gens_.push_back(intern(s0));

  AffineElement s0m = s0;
  s0m.g = theta.fw;
  id_s0_minus_ = intern(s0m);

  for (int i = 0; i < rank; ++i) {
    AffineElement s;
    s.f = reflection_matrix(datum_, i);  // simple roots come first in `positive`
    s.fi = s.f;
    s.g = Vec::Zero(rank);
    gens_.push_back(intern(s));
  }

  // longest finite element: walk rho to -rho through simple reflections
  Vec v = datum_.rho;
  Id w = id_identity_;
  while (true) {
    int i = -1;
    for (int j = 0; j < rank; ++j) {
      if (v[j] > 0) {
        i = j;
        break;
      }
    }
    if (i < 0) break;
    v = el(gen(i + 1)).f * v;
    w = multiply(gen(i + 1), w);
  }
  id_w0_ = w;
}

std::vector<Int> GroupContext::key_of(const AffineElement& w) const {
  std::vector<Int> key;
  key.reserve(static_cast<std::size_t>(datum_.rank) * (datum_.rank + 1));
  for (int r = 0; r < datum_.rank; ++r)
    for (int c = 0; c < datum_.rank; ++c) key.push_back(w.f(r, c));
  for (int r = 0; r < datum_.rank; ++r) key.push_back(w.g[r]);
  return key;
}

GroupContext::Id GroupContext::intern(const AffineElement& w) {
  std::vector<Int> key = key_of(w);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  Id id = static_cast<Id>(elements_.size());
  elements_.push_back(w);
  alcoves_.emplace_back();
  lengths_.push_back(-1);
  dominant_.push_back(0);
  index_.emplace(std::move(key), id);
  compute_tables(id);
  return id;
}

void GroupContext::compute_tables(Id w) {
  const AffineElement& a = elements_[static_cast<std::size_t>(w)];
  std::vector<Int> n(datum_.positive.size());
  Int total = 0;
  bool dom = true;
  for (std::size_t b = 0; b < datum_.positive.size(); ++b) {
    Vec dw = a.fi * datum_.positive[b].fw;
    auto it = datum_.lookup.find(to_std(dw));
    internal_check(it != datum_.lookup.end(), "finite part does not permute the roots");
    auto [sign, idx] = it->second;
    Int c = datum_.positive[static_cast<std::size_t>(idx)].rc.dot(a.g);
    if (sign < 0) c = -c - 1;
    n[b] = c;
    total += c < 0 ? -c : c;
    if (c < 0) dom = false;
  }
  alcoves_[static_cast<std::size_t>(w)] = std::move(n);
  lengths_[static_cast<std::size_t>(w)] = total;
  dominant_[static_cast<std::size_t>(w)] = dom ? 1 : 0;
}

GroupContext::Id GroupContext::multiply(Id a, Id b) {
  const AffineElement& x = el(a);
  const AffineElement& y = el(b);
  AffineElement z;
  z.f = x.f * y.f;
  z.fi = y.fi * x.fi;
  z.g = y.fi * x.g + y.g;
  return intern(z);
}

GroupContext::Id GroupContext::multiply_gen(Id a, int i) {
  std::uint64_t k = pack(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(i));
  auto it = mul_gen_cache_.find(k);
  if (it != mul_gen_cache_.end()) return it->second;
  Id r = multiply(a, gen(i));
  mul_gen_cache_.emplace(k, r);
  return r;
}

GroupContext::Id GroupContext::inverse(Id a) {
  const AffineElement& x = el(a);
  AffineElement z;
  z.f = x.fi;
  z.fi = x.f;
  z.g = -(x.f * x.g);
  return intern(z);
}

GroupContext::Id GroupContext::conj_w0(Id a) {
  return multiply(multiply(id_w0_, a), id_w0_);
}

Vec GroupContext::dot_act(Id w, const Vec& mu) {
  const AffineElement& a = el(w);
  Vec v = mu + datum_.rho;
  return a.f * (v + e_ * a.g) - datum_.rho;
}

Vec GroupContext::act_shifted(Id w, const Vec& v) const {
  const AffineElement& a = el(w);
  return a.f * (v + e_ * a.g);
}

const std::vector<Int>& GroupContext::alcove(Id w) {
  return alcoves_[static_cast<std::size_t>(w)];
}

Int GroupContext::length(Id w) { return lengths_[static_cast<std::size_t>(w)]; }

Int GroupContext::length_minus(Id w) { return length(conj_w0(w)); }

bool GroupContext::dominant_alcove(Id w) {
  return dominant_[static_cast<std::size_t>(w)] != 0;
}

bool GroupContext::is_left_descent(Id w, int i) {
  return length(multiply(gen(i), w)) < length(w);
}

bool GroupContext::is_right_descent(Id w, int i) {
  return length(multiply_gen(w, i)) < length(w);
}

std::vector<int> GroupContext::left_descents(Id w) {
  std::vector<int> out;
  for (int i = 0; i < num_gens(); ++i)
    if (is_left_descent(w, i)) out.push_back(i);
  return out;
}

std::vector<int> GroupContext::right_descents(Id w) {
  std::vector<int> out;
  for (int i = 0; i < num_gens(); ++i)
    if (is_right_descent(w, i)) out.push_back(i);
  return out;
}

std::vector<int> GroupContext::reduced_word(Id w) {
  std::vector<int> word;
  Id cur = w;
  while (cur != id_identity_) {
    int i = 0;
    while (!is_left_descent(cur, i)) {
      ++i;
      internal_check(i < num_gens(), "nonidentity element without left descent");
    }
    word.push_back(i);
    cur = multiply(gen(i), cur);
  }
  return word;
}

GroupContext::Id GroupContext::from_word(const std::vector<int>& word) {
  Id cur = id_identity_;
  for (int i : word) {
    if (i < 0 || i >= num_gens()) throw InvalidInputError("generator index out of range");
    cur = multiply_gen(cur, i);
  }
  return cur;
}

/*
  Bruhat order by the descent recursion: for y != w pick any left descent
  s of w; then y <= w iff (sy <= sw when sy < y) or (y <= sw when sy > y).
  Memoized on the pair of ids.
*/
bool GroupContext::bruhat_leq(Id y, Id w) {
  if (y == w) return true;
  if (length(y) >= length(w)) return false;
  std::uint64_t k = pack(static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(w));
  auto it = bruhat_cache_.find(k);
  if (it != bruhat_cache_.end()) return it->second != 0;
  int s = 0;
  while (!is_left_descent(w, s)) ++s;
  Id sw = multiply(gen(s), w);
  Id sy = multiply(gen(s), y);
  bool r = length(sy) < length(y) ? bruhat_leq(sy, sw) : bruhat_leq(y, sw);
  bruhat_cache_.emplace(k, r ? 1 : 0);
  return r;
}

std::vector<GroupContext::Id> GroupContext::enumerate_up_to_length(Int bound,
                                                                   std::size_t cap) {
  std::vector<Id> out{id_identity_};
  std::vector<Id> layer{id_identity_};
  while (!layer.empty()) {
    std::vector<Id> next;
    for (Id w : layer) {
      Int lw = length(w);
      if (lw >= bound) continue;
      for (int i = 0; i < num_gens(); ++i) {
        Id v = multiply_gen(w, i);
        if (length(v) == lw + 1) next.push_back(v);
      }
    }
    std::sort(next.begin(), next.end(), [this](Id a, Id b) {
      return key_of(el(a)) < key_of(el(b));
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (out.size() + next.size() > cap)
      throw ResourceCapError("enumeration cap exceeded at " + std::to_string(cap) +
                             " elements");
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

GroupContext::Id GroupContext::min_coset_rep(Id w, const std::vector<int>& J) {
  Id cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J) {
      if (is_right_descent(cur, i)) {
        cur = multiply_gen(cur, i);
        moved = true;
      }
    }
  }
  return cur;
}

}  // namespace wsk

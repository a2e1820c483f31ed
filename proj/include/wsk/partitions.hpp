/*
  This is partitions.hpp: partition combinatorics for the symmetric-group
  and Schur-algebra indexing layer: dominance, conjugation, e-regularity
  and e-restriction, the weight map into type A, e-cores and enumeration.
*/

#pragma once

#include "wsk/types.hpp"

namespace wsk {

using Partition = std::vector<Int>;  // weakly decreasing positive parts

bool is_partition(const Partition& p);
Int partition_sum(const Partition& p);

Partition conjugate(const Partition& p);

// dominance on partitions of equal size: all prefix sums compare
bool dominance_leq_partitions(const Partition& mu, const Partition& lambda);

// no part value repeated e or more times
bool is_e_regular(const Partition& p, Int e);
// all consecutive differences at most e-1
bool is_e_restricted(const Partition& p, Int e);

// the A_{n-1} weight with coordinates lambda_i - lambda_{i+1}; requires at
// most n parts
Vec to_weight(const Partition& p, int n);

// inverse of to_weight on partitions of r with at most n parts
Partition from_weight(const Vec& weight, int n, Int r);

// remove e-rim-hooks until none remain (computed on beta-numbers, which is
// order-independent by construction)
Partition e_core(const Partition& p, Int e);

// all partitions of r with at most n parts, reverse-lexicographic
std::vector<Partition> list_partitions(int n, Int r);

std::string partition_str(const Partition& p);

}  // namespace wsk

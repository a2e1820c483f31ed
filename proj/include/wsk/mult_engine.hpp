/*
  This is mult_engine.hpp: semisimple-series layer tables.

  Type A tables are graded decomposition numbers computed on the q-Fock
  space: the layer-i multiplicity of nu in the table of lambda is the
  coefficient of q^i in the standard-basis expansion of the canonical
  basis element at the conjugate labels.  The construction is exact and
  covers every dominant weight, regular or singular, at every e >= 2;
  layer 0 is lambda itself with multiplicity one, and column sums
  evaluate the grading at 1.

  Type D tables are assembled from the antispherical canonical-basis
  row at f(lambda): a support element z contributes the dominant weight
  nu = (z w0).(base point of lambda) when f(nu) = z (other
  representatives of the same weight are killed by translation to the
  wall), and the layer-i multiplicity of nu is the v^i-coefficient of
  n_{z,f(lambda)}.  Every type D table must pass the graded Jantzen
  sum-formula gate over the whole downward closure of lambda before it
  is emitted; a rejected table raises an internal error that names the
  first violated identity instead of printing anything.

  The q-Specht table is the q-Weyl table of the same partition read
  through the contravariant diamond functor: layer indices reverse
  (i -> depth-1-i), non-e-restricted labels drop, and surviving labels
  are conjugated.
*/

#pragma once

#include <memory>

#include "wsk/alcove.hpp"
#include "wsk/antispherical.hpp"
#include "wsk/fock.hpp"
#include "wsk/partitions.hpp"

namespace wsk {

struct LayerEntry {
  std::vector<Int> label;  // partition parts (type A) or weight coordinates
  Int mult = 0;
};

struct LayerTable {
  Family family = Family::A;
  int rank = 0;
  Int e = 2;
  bool partition_indexed = true;
  std::vector<Int> lambda_label;
  std::vector<std::vector<LayerEntry>> layers;
  bool outside_proven_range = false;
  bool assumes_james = false;
  bool assumes_bipartite = false;
  bool regular_orbit = false;
  std::string q_convention;
  std::string table_kind;  // "weyl" | "specht" | "modular"
};

inline constexpr const char* kQConventionFock =
    "q-Fock canonical basis: layer i multiplicity of nu is the coefficient of "
    "q^i in the standard-basis expansion of G at the conjugate labels";

inline constexpr const char* kQConventionAlcove =
    "antispherical inverse Kazhdan-Lusztig family, validated against the "
    "graded Jantzen sum formula; layer i multiplicity is the v^i-coefficient "
    "of n_{f(nu),f(lambda)}, v = t, q = t^2";

// one affine context with its shared canonical-basis and Fock memos
class Engine {
 public:
  Engine(Family family, int rank, Int e)
      : ctx_(family, rank, e), basis_(ctx_), fock_(e) {}

  GroupContext& ctx() { return ctx_; }
  Antispherical& basis() { return basis_; }
  FockCache& fock() { return fock_; }

 private:
  GroupContext ctx_;
  Antispherical basis_;
  FockCache fock_;
};

enum class ParityClass { E, O };

// weight-level table; labels are weight coordinate vectors; type A work
// shards the per-column bar computation across `workers` threads, type D
// shards the support scan, and assembly stays sequential either way
LayerTable weyl_layer_table_weight(Engine& eng, const Vec& lambda, int workers = 1);

// partition-level table in type A with n rows available
LayerTable weyl_layer_table(Engine& eng, const Partition& lambda, int n, int workers = 1);
LayerTable specht_layer_table(Engine& eng, const Partition& lambda, int workers = 1);
// p prime with p^2 > r; numerically the e = p table with conjecture flags
LayerTable modular_table(Engine& eng, const Partition& lambda, int n, Int p, int workers = 1);

std::vector<Partition> linkage_class(Engine& eng, const Partition& lambda, int n);

ParityClass parity_class(Engine& eng, const Partition& lambda, int n);

Int decomposition_number(Engine& eng, const Partition& lambda, const Partition& nu, int n);

// degenerate rank-0 context (n = 1): every table is a singleton
LayerTable trivial_table(const Partition& lambda, Int e, const std::string& kind);

// validation used before any table is emitted; throws InternalError
void validate_table(const LayerTable& t);

}  // namespace wsk

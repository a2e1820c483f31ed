/*
  This is wsk_main.cpp: the wsk command-line tool.

  Subcommands:

    mult-table    semisimple-series layer table of a q-Weyl module
    specht-table  the same table read through the diamond functor
    orbit         linkage class, e-core, and parity class of a partition
    verify        exhaustive verifier suites (orders | klpoly | parity | all)
    cache         build/info/clear for the persistent polynomial cache

  Exit codes: 0 success, 2 invalid input, 3 resource cap, 4 counterexample
  found by a verifier, 5 verifier inconclusive (bound hit), 10 internal
  validation failure.
*/

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "wsk/klpoly.hpp"
#include "wsk/mult_engine.hpp"
#include "wsk/verify.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;
constexpr int kExitCounterexample = 4;
constexpr int kExitInconclusive = 5;
constexpr int kExitInternal = 10;

struct Options {
  std::string family = "A";
  int rank = 2;
  long long e = 2;
  long long r = 0;
  int n = 0;
  std::string lambda;
  long long p = 0;
  bool assume_james = false;
  std::string format = "json";
  int workers = 0;
  long long box_multiple = 4;
  long long max_length = 8;
  std::string cache_path;
  std::string suite;
  std::string cache_action;
};

wsk::Family parse_family(const std::string& s) {
  if (s == "A") return wsk::Family::A;
  if (s == "D") return wsk::Family::D;
  throw wsk::InvalidInputError("family must be A or D");
}

std::vector<wsk::Int> parse_int_list(const std::string& s) {
  std::vector<wsk::Int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != tok.size()) throw wsk::InvalidInputError("bad integer in list: '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw wsk::InvalidInputError("empty integer list");
  return out;
}

bool prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --p engages the characteristic-p reading: e becomes p and the output is
// flagged with the assumptions it rides on
long long resolve_modular(const Options& opt, long long r) {
  if (!prime(opt.p)) throw wsk::InvalidInputError("--p must be prime");
  if (opt.p * opt.p <= r)
    throw wsk::InvalidInputError("p^2 <= r is outside the conjecture's stated range");
  if (!opt.assume_james)
    throw wsk::InvalidInputError("--p requires --assume-james (the table is conjectural)");
  return opt.p;
}

int effective_workers(const Options& opt) {
  if (opt.workers > 0) return opt.workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::string cache_dir(const Options& opt) {
  if (const char* env = std::getenv("WSK_CACHE")) return env;
  if (!opt.cache_path.empty()) return opt.cache_path;
  return ".wsk-cache";
}

std::string join_spaces(const std::vector<wsk::Int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

ordered_json context_json(wsk::Family fam, int rank, long long e, const wsk::LayerTable* t) {
  ordered_json c;
  c["family"] = std::string(1, wsk::family_letter(fam));
  c["rank"] = rank;
  c["e"] = e;
  ordered_json flags;
  flags["outside_proven_range"] = t ? t->outside_proven_range : false;
  flags["assumes_james"] = t ? t->assumes_james : false;
  flags["assumes_bipartite"] = t ? t->assumes_bipartite : false;
  c["flags"] = flags;
  return c;
}

void emit_table(const wsk::LayerTable& t, const std::string& format) {
  wsk::validate_table(t);
  bool weight_labels = !t.partition_indexed;
  if (format == "csv") {
    std::cout << "i,label,mult\n";
    for (std::size_t i = 0; i < t.layers.size(); ++i)
      for (const wsk::LayerEntry& entry : t.layers[i])
        std::cout << i << ',' << (weight_labels ? "w:" : "") << join_spaces(entry.label) << ','
                  << entry.mult << '\n';
    return;
  }
  ordered_json j;
  j["schema"] = "wsk.table.v1";
  j["context"] = context_json(t.family, t.rank, t.e, &t);
  j["lambda"] = t.lambda_label;
  ordered_json layers = ordered_json::array();
  for (std::size_t i = 0; i < t.layers.size(); ++i) {
    ordered_json layer;
    layer["i"] = i;
    ordered_json entries = ordered_json::array();
    for (const wsk::LayerEntry& entry : t.layers[i]) {
      ordered_json ej;
      ej["label"] = entry.label;
      ej["mult"] = entry.mult;
      entries.push_back(ej);
    }
    layer["entries"] = entries;
    layers.push_back(layer);
  }
  j["layers"] = layers;
  ordered_json meta;
  meta["q_convention"] = t.q_convention;
  meta["basepoint_convention"] = "Cminus=w0.C";
  meta["table_kind"] = t.table_kind;
  meta["filtration"] =
      t.regular_orbit ? "semisimple series; equals the radical filtration" : "semisimple series";
  j["metadata"] = meta;
  std::cout << j.dump(2) << '\n';
}

wsk::Partition parse_partition_arg(const Options& opt) {
  if (opt.lambda.empty()) throw wsk::InvalidInputError("--lambda is required");
  if (opt.lambda.rfind("w:", 0) == 0)
    throw wsk::InvalidInputError("weight input (w: prefix) is for family D only");
  wsk::Partition lam = parse_int_list(opt.lambda);
  if (!wsk::is_partition(lam))
    throw wsk::InvalidInputError("--lambda must be weakly decreasing and nonnegative");
  return lam;
}

wsk::Vec parse_weight_arg(const Options& opt, int rank) {
  if (opt.lambda.empty()) throw wsk::InvalidInputError("--lambda is required");
  if (opt.lambda.rfind("w:", 0) != 0)
    throw wsk::InvalidInputError("family D takes weight input, e.g. --lambda w:1,0,2");
  std::vector<wsk::Int> coords = parse_int_list(opt.lambda.substr(2));
  if (static_cast<int>(coords.size()) != rank)
    throw wsk::InvalidInputError("weight length does not match rank");
  return wsk::from_std(coords);
}

int cmd_mult_table(const Options& opt) {
  wsk::Family fam = parse_family(opt.family);
  if (fam == wsk::Family::D) {
    if (opt.p) throw wsk::InvalidInputError("--p applies to partition (family A) tables only");
    wsk::Vec weight = parse_weight_arg(opt, opt.rank);
    wsk::Engine eng(fam, opt.rank, opt.e);
    emit_table(weyl_layer_table_weight(eng, weight, effective_workers(opt)), opt.format);
    return kExitOk;
  }

  wsk::Partition lam = parse_partition_arg(opt);
  long long r = wsk::partition_sum(lam);
  if (opt.r && opt.r != r) throw wsk::InvalidInputError("--r does not match |lambda|");
  int n = opt.n > 0 ? opt.n : static_cast<int>(r);
  if (n < 1) throw wsk::InvalidInputError("n must be at least 1");
  if (static_cast<int>(lam.size()) > n)
    throw wsk::InvalidInputError("partition has more than n parts");

  long long e = opt.e;
  bool modular = opt.p != 0;
  if (modular) e = resolve_modular(opt, r);

  if (n == 1) {
    wsk::LayerTable t = wsk::trivial_table(lam, e, "weyl");
    if (modular) {
      t.table_kind = "modular";
      t.assumes_james = true;
      t.assumes_bipartite = true;
    }
    emit_table(t, opt.format);
    return kExitOk;
  }

  wsk::Engine eng(wsk::Family::A, n - 1, e);
  wsk::LayerTable t = modular ? wsk::modular_table(eng, lam, n, opt.p, effective_workers(opt))
                              : wsk::weyl_layer_table(eng, lam, n, effective_workers(opt));
  emit_table(t, opt.format);
  return kExitOk;
}

int cmd_specht_table(const Options& opt) {
  if (parse_family(opt.family) != wsk::Family::A)
    throw wsk::InvalidInputError("specht-table is partition-indexed (family A)");
  wsk::Partition lam = parse_partition_arg(opt);
  long long r = wsk::partition_sum(lam);
  if (opt.r && opt.r != r) throw wsk::InvalidInputError("--r does not match |lambda|");
  if (opt.n && opt.n != static_cast<int>(r))
    throw wsk::InvalidInputError("specht-table works with n = r");

  long long e = opt.e;
  bool modular = opt.p != 0;
  if (modular) e = resolve_modular(opt, r);

  wsk::LayerTable t;
  if (r <= 1) {
    t = wsk::trivial_table(lam, e, "specht");
  } else {
    wsk::Engine eng(wsk::Family::A, static_cast<int>(r) - 1, e);
    t = wsk::specht_layer_table(eng, lam, effective_workers(opt));
  }
  if (modular) {
    t.assumes_james = true;
    t.assumes_bipartite = true;
  }
  emit_table(t, opt.format);
  return kExitOk;
}

int cmd_orbit(const Options& opt) {
  if (parse_family(opt.family) != wsk::Family::A)
    throw wsk::InvalidInputError("orbit is partition-indexed (family A)");
  wsk::Partition lam = parse_partition_arg(opt);
  long long r = wsk::partition_sum(lam);
  if (opt.r && opt.r != r) throw wsk::InvalidInputError("--r does not match |lambda|");
  int n = opt.n > 0 ? opt.n : static_cast<int>(r);
  if (n < 1) throw wsk::InvalidInputError("n must be at least 1");
  if (static_cast<int>(lam.size()) > n)
    throw wsk::InvalidInputError("partition has more than n parts");

  std::vector<wsk::Partition> members;
  wsk::ParityClass pc;
  if (n == 1) {
    members = {lam};
    pc = wsk::ParityClass::E;
  } else {
    wsk::Engine eng(wsk::Family::A, n - 1, opt.e);
    members = wsk::linkage_class(eng, lam, n);
    pc = wsk::parity_class(eng, lam, n);
  }
  wsk::Partition core = wsk::e_core(lam, opt.e);

  if (opt.format == "csv") {
    std::cout << "label\n";
    for (const wsk::Partition& m : members) std::cout << join_spaces(m) << '\n';
    return kExitOk;
  }
  ordered_json j;
  j["schema"] = "wsk.orbit.v1";
  j["context"] = context_json(wsk::Family::A, n - 1, opt.e, nullptr);
  j["lambda"] = lam;
  ordered_json cls = ordered_json::array();
  for (const wsk::Partition& m : members) cls.push_back(m);
  j["class"] = cls;
  j["e_core"] = core;
  j["parity_class"] = pc == wsk::ParityClass::E ? "E" : "O";
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

ordered_json report_json(const wsk::VerifyReport& rep, const Options& opt) {
  ordered_json j;
  j["schema"] = "wsk.verify.v1";
  j["suite"] = rep.suite;
  ordered_json c;
  c["family"] = opt.family;
  c["rank"] = opt.rank;
  c["e"] = opt.e;
  c["box_multiple"] = opt.box_multiple;
  c["max_length"] = opt.max_length;
  c["r"] = opt.r > 0 ? opt.r : 6;
  c["label"] = rep.context;
  j["context"] = c;
  j["cases_checked"] = rep.cases_checked;
  j["inconclusive"] = rep.inconclusive;
  ordered_json fails = ordered_json::array();
  for (const wsk::VerifyFailure& f : rep.failures) {
    ordered_json fj;
    fj["check"] = f.check;
    fj["detail"] = f.detail;
    fails.push_back(fj);
  }
  j["failures"] = fails;
  j["notes"] = rep.notes;
  return j;
}

int cmd_verify(const Options& opt) {
  wsk::VerifyConfig cfg;
  cfg.family = parse_family(opt.family);
  cfg.rank = opt.rank;
  cfg.e = opt.e;
  cfg.box_multiple = opt.box_multiple;
  cfg.max_length = opt.max_length;
  cfg.r = opt.r > 0 ? opt.r : 6;
  cfg.n = opt.n;

  std::vector<wsk::VerifyReport> reps;
  if (opt.suite == "orders" || opt.suite == "all") reps.push_back(wsk::verify_orders(cfg));
  if (opt.suite == "klpoly" || opt.suite == "all") reps.push_back(wsk::verify_klpoly(cfg));
  if (opt.suite == "parity" || opt.suite == "all") reps.push_back(wsk::verify_parity(cfg));
  if (reps.empty())
    throw wsk::InvalidInputError("--suite must be one of orders, klpoly, parity, all");

  if (reps.size() == 1) {
    std::cout << report_json(reps[0], opt).dump(2) << '\n';
  } else {
    ordered_json arr = ordered_json::array();
    for (const wsk::VerifyReport& rep : reps) arr.push_back(report_json(rep, opt));
    std::cout << arr.dump(2) << '\n';
  }

  bool failed = false, inconclusive = false;
  for (const wsk::VerifyReport& rep : reps) {
    failed = failed || !rep.failures.empty();
    inconclusive = inconclusive || rep.inconclusive > 0;
  }
  if (failed) return kExitCounterexample;
  if (inconclusive) return kExitInconclusive;
  return kExitOk;
}

// header and entry count of one cache file, without needing a group context
std::pair<std::string, long long> cache_file_info(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {"", 0};
  std::string header;
  std::getline(in, header);
  long long entries = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++entries;
  return {header, entries};
}

int cmd_cache(const Options& opt) {
  std::string dir = cache_dir(opt);
  std::string pfile = (fs::path(dir) / "P.klcache").string();
  std::string qfile = (fs::path(dir) / "Q.klcache").string();

  if (opt.cache_action == "build") {
    wsk::GroupContext ctx(parse_family(opt.family), opt.rank, opt.e);
    wsk::KLTable tp(ctx, wsk::KLKind::P), tq(ctx, wsk::KLKind::Q);
    fs::create_directories(dir);
    if (fs::exists(pfile)) wsk::cache_load(ctx, tp, pfile);
    if (fs::exists(qfile)) wsk::cache_load(ctx, tq, qfile);
    std::vector<wsk::GroupContext::Id> els = ctx.enumerate_up_to_length(opt.max_length);
    for (wsk::GroupContext::Id w : els) {
      for (wsk::GroupContext::Id y : els) {
        if (!ctx.bruhat_leq(y, w)) continue;
        wsk::kl_p(ctx, tp, y, w);
        wsk::inverse_kl_q(ctx, tp, tq, y, w);
      }
    }
    wsk::cache_save(tp, pfile);
    wsk::cache_save(tq, qfile);
    ordered_json j;
    j["schema"] = "wsk.cache.v1";
    j["action"] = "build";
    j["path"] = dir;
    j["fingerprint_p"] = tp.fingerprint();
    j["fingerprint_q"] = tq.fingerprint();
    j["entries_p"] = tp.size();
    j["entries_q"] = tq.size();
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  if (opt.cache_action == "info") {
    auto [ph, pn] = cache_file_info(pfile);
    auto [qh, qn] = cache_file_info(qfile);
    ordered_json j;
    j["schema"] = "wsk.cache.v1";
    j["action"] = "info";
    j["path"] = dir;
    j["header_p"] = ph;
    j["header_q"] = qh;
    j["entries_p"] = pn;
    j["entries_q"] = qn;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  if (opt.cache_action == "clear") {
    int removed = 0;
    removed += fs::remove(pfile) ? 1 : 0;
    removed += fs::remove(qfile) ? 1 : 0;
    ordered_json j;
    j["schema"] = "wsk.cache.v1";
    j["action"] = "clear";
    j["path"] = dir;
    j["removed"] = removed;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  throw wsk::InvalidInputError("cache action must be build, info, or clear");
}

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--family", opt.family, "root system family: A or D");
  cmd->add_option("--rank", opt.rank, "Coxeter rank (family D and context-level commands)");
  cmd->add_option("--e", opt.e, "linkage parameter e (quantum characteristic)");
  cmd->add_option("--r", opt.r, "partition size (validated against --lambda)");
  cmd->add_option("--n", opt.n, "number of columns available (type A)");
  cmd->add_option("--lambda", opt.lambda,
                  "partition '3,2,1' (family A) or weight 'w:1,0,2' (family D)");
  cmd->add_option("--p", opt.p, "prime for the characteristic-p reading (sets e = p)");
  cmd->add_flag("--assume-james", opt.assume_james,
                "acknowledge the conjectural hypotheses behind --p tables");
  cmd->add_option("--format", opt.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--workers", opt.workers, "worker threads (0 = all cores)");
  cmd->add_option("--box-multiple", opt.box_multiple, "verifier dominance box, multiples of e");
  cmd->add_option("--max-length", opt.max_length, "length bound for enumeration suites");
  cmd->add_option("--cache-path", opt.cache_path, "cache directory (WSK_CACHE overrides)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact semisimple-series layer tables for q-Weyl and q-Specht modules"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* mult = app.add_subcommand("mult-table", "q-Weyl module layer table");
  add_common_options(mult, opt);
  CLI::App* specht = app.add_subcommand("specht-table", "q-Specht module layer table");
  add_common_options(specht, opt);
  CLI::App* orbit = app.add_subcommand("orbit", "linkage class, e-core, parity class");
  add_common_options(orbit, opt);
  CLI::App* verify = app.add_subcommand("verify", "run an exhaustive verifier suite");
  add_common_options(verify, opt);
  verify->add_option("--suite", opt.suite, "orders | klpoly | parity | all")
      ->required()
      ->check(CLI::IsMember({"orders", "klpoly", "parity", "all"}));
  CLI::App* cache = app.add_subcommand("cache", "build, inspect, or clear the polynomial cache");
  add_common_options(cache, opt);
  cache->add_option("action", opt.cache_action, "build | info | clear")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (app.got_subcommand(mult)) return cmd_mult_table(opt);
    if (app.got_subcommand(specht)) return cmd_specht_table(opt);
    if (app.got_subcommand(orbit)) return cmd_orbit(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(cache)) return cmd_cache(opt);
  } catch (const wsk::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const wsk::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const wsk::InternalError& e) {
    std::cerr << "internal validation failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInvalid;
}

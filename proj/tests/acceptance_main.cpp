/*
  Acceptance gate for the wsk library and CLI.  Each criterion prints one
  PASS/FAIL line; the process exits nonzero if any criterion fails.  The
  sweeps are exhaustive over their stated ranges, never sampled, except
  where a criterion is explicitly about sampling (CLI determinism, cache
  round trip).
*/

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wsk/fock.hpp"
#include "wsk/jantzen.hpp"
#include "wsk/klpoly.hpp"
#include "wsk/mult_engine.hpp"
#include "wsk/verify.hpp"

namespace {

struct CriterionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CriterionFailure(what);
}

std::string describe(const wsk::VerifyReport& rep) {
  std::ostringstream os;
  os << rep.context << ":";
  if (rep.inconclusive > 0) os << " " << rep.inconclusive << " inconclusive";
  for (std::size_t i = 0; i < rep.failures.size() && i < 3; ++i)
    os << " [" << rep.failures[i].check << " " << rep.failures[i].detail << "]";
  if (rep.failures.size() > 3) os << " (+" << rep.failures.size() - 3 << " more)";
  return os.str();
}

void require_ok(const wsk::VerifyReport& rep) {
  require(rep.failures.empty() && rep.inconclusive == 0, describe(rep));
}

// runs a shell command, captures stdout bytes, returns (exit code, output)
std::pair<int, std::string> run_command(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  require(pipe != nullptr, "cannot spawn: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

// criterion 1: signed inversion between P and Q over every Bruhat pair of
// the affine A2 group up to length 8, both multiplication orders
std::string criterion_kl_inversion() {
  wsk::VerifyConfig cfg;
  cfg.family = wsk::Family::A;
  cfg.rank = 2;
  cfg.e = 2;
  cfg.max_length = 8;
  wsk::VerifyReport rep = wsk::verify_klpoly(cfg);
  require_ok(rep);
  require(rep.cases_checked > 0, "empty sweep");
  return std::to_string(rep.cases_checked) + " checks over affine A2, lengths <= 8";
}

const std::vector<std::pair<int, wsk::Int>> kOrderContexts = {
    {1, 2}, {1, 3}, {2, 2}, {2, 3}};

// criterion 2: strong linkage coincides with Bruhat comparison of
// upper-closure elements over the 4e dominance box, with no inconclusive
// chain searches
std::string criterion_linkage_order() {
  long long cases = 0;
  for (const auto& [rank, e] : kOrderContexts) {
    wsk::VerifyConfig cfg;
    cfg.family = wsk::Family::A;
    cfg.rank = rank;
    cfg.e = e;
    cfg.box_multiple = 4;
    wsk::VerifyReport rep = wsk::verify_strong_linkage(cfg);
    require_ok(rep);
    cases += rep.cases_checked;
  }
  return std::to_string(cases) + " pairs across A1/A2, e in {2,3}, box 4e";
}

// criterion 3: distinguished-representative identities (reach, length
// additivity, coset chain, conjugation, three-way order, translation) on
// one regular and one singular orbit per context
std::string criterion_order_transport() {
  long long cases = 0;
  for (const auto& [rank, e] : kOrderContexts) {
    wsk::VerifyConfig cfg;
    cfg.family = wsk::Family::A;
    cfg.rank = rank;
    cfg.e = e;
    cfg.box_multiple = 4;
    wsk::VerifyReport rep = wsk::verify_order_transport(cfg);
    require_ok(rep);
    cases += rep.cases_checked;
  }
  return std::to_string(cases) + " identity checks across A1/A2, e in {2,3}";
}

// criterion 4: every nonzero entry of every layer table sits at a layer
// index matching the length difference parity, all partitions of r <= 8
std::string criterion_layer_parity() {
  long long cases = 0;
  for (wsk::Int e : {wsk::Int{2}, wsk::Int{3}}) {
    for (wsk::Int r = 1; r <= 8; ++r) {
      wsk::VerifyConfig cfg;
      cfg.e = e;
      cfg.r = r;
      cfg.n = 0;
      wsk::VerifyReport rep = wsk::verify_parity(cfg);
      require_ok(rep);
      cases += rep.cases_checked;
    }
  }
  return std::to_string(cases) + " table entries, r <= 8, e in {2,3}, n = r";
}

// criterion 5: top layer is exactly (lambda, 1); column sums equal the
// ungraded decomposition numbers; Specht tables are the reversed
// e-restricted conjugates of Weyl tables; e > r makes every class a
// singleton with a one-layer table
std::string criterion_structural() {
  long long cases = 0;
  for (wsk::Int e : {wsk::Int{2}, wsk::Int{3}}) {
    wsk::LayerTable one = wsk::trivial_table({1}, e, "weyl");
    require(one.layers.size() == 1 && one.layers[0].size() == 1 &&
                one.layers[0][0].label == std::vector<wsk::Int>{1} && one.layers[0][0].mult == 1,
            "single box table is not trivial");
    wsk::LayerTable ones = wsk::trivial_table({1}, e, "specht");
    require(ones.layers.size() == 1 && ones.layers[0].size() == 1 &&
                ones.layers[0][0].label == std::vector<wsk::Int>{1},
            "single box Specht table is not trivial");
    ++cases;
    for (wsk::Int r = 2; r <= 6; ++r) {
      int n = static_cast<int>(r);
      wsk::Engine eng(wsk::Family::A, n - 1, e);
      std::vector<wsk::Partition> all = wsk::list_partitions(n, r);
      for (const wsk::Partition& lam : all) {
        wsk::LayerTable t = wsk::weyl_layer_table(eng, lam, n);
        wsk::validate_table(t);
        require(t.layers[0].size() == 1 && t.layers[0][0].label == lam &&
                    t.layers[0][0].mult == 1,
                "top layer is not (lambda, 1) at " + wsk::partition_str(lam));

        std::map<std::vector<wsk::Int>, wsk::Int> sums;
        for (const auto& layer : t.layers)
          for (const wsk::LayerEntry& entry : layer) sums[entry.label] += entry.mult;
        for (const wsk::Partition& nu : all) {
          wsk::Int expect = 0;
          auto it = sums.find(nu);
          if (it != sums.end()) expect = it->second;
          require(wsk::decomposition_number(eng, lam, nu, n) == expect,
                  "column sum mismatch at " + wsk::partition_str(lam) + " / " +
                      wsk::partition_str(nu));
          ++cases;
        }

        wsk::LayerTable s = wsk::specht_layer_table(eng, lam);
        std::size_t depth = t.layers.size();
        std::vector<std::vector<std::pair<std::vector<wsk::Int>, wsk::Int>>> expect(depth);
        for (std::size_t i = 0; i < depth; ++i)
          for (const wsk::LayerEntry& entry : t.layers[depth - 1 - i])
            if (wsk::is_e_restricted(entry.label, e))
              expect[i].emplace_back(wsk::conjugate(entry.label), entry.mult);
        while (!expect.empty() && expect.back().empty()) expect.pop_back();
        require(s.layers.size() == expect.size(),
                "specht depth mismatch at " + wsk::partition_str(lam));
        for (std::size_t i = 0; i < expect.size(); ++i) {
          std::multiset<std::pair<std::vector<wsk::Int>, wsk::Int>> a, b;
          for (const wsk::LayerEntry& entry : s.layers[i]) a.insert({entry.label, entry.mult});
          for (const auto& p : expect[i]) b.insert(p);
          require(a == b, "specht layer mismatch at " + wsk::partition_str(lam));
          ++cases;
        }
      }
    }
  }

  for (wsk::Int r = 2; r <= 6; ++r) {
    int n = static_cast<int>(r);
    wsk::Engine eng(wsk::Family::A, n - 1, r + 1);
    for (const wsk::Partition& lam : wsk::list_partitions(n, r)) {
      wsk::LayerTable t = wsk::weyl_layer_table(eng, lam, n);
      require(t.layers.size() == 1 && t.layers[0].size() == 1,
              "e > r table not a singleton at " + wsk::partition_str(lam));
      require(wsk::linkage_class(eng, lam, n).size() == 1,
              "e > r class not a singleton at " + wsk::partition_str(lam));
      ++cases;
    }
  }
  return std::to_string(cases) + " structural checks, r <= 6";
}

// criterion 6: dot-orbit linkage classes coincide with e-core equality
// over all partitions of every r <= 8
std::string criterion_linkage_core() {
  long long cases = 0;
  // r = 1 has the single partition (1), its own e-core and linkage class
  require(wsk::list_partitions(1, 1).size() == 1 && wsk::e_core({1}, 2) == wsk::Partition{1},
          "single box core mismatch");
  cases += 2;
  for (wsk::Int e : {wsk::Int{2}, wsk::Int{3}}) {
    for (wsk::Int r = 2; r <= 8; ++r) {
      int n = static_cast<int>(r);
      wsk::Engine eng(wsk::Family::A, n - 1, e);
      std::vector<wsk::Partition> all = wsk::list_partitions(n, r);
      for (const wsk::Partition& lam : all) {
        std::set<wsk::Partition> got;
        for (const wsk::Partition& mu : wsk::linkage_class(eng, lam, n)) got.insert(mu);
        std::set<wsk::Partition> expect;
        for (const wsk::Partition& mu : all)
          if (wsk::e_core(mu, e) == wsk::e_core(lam, e)) expect.insert(mu);
        require(got == expect, "class mismatch at " + wsk::partition_str(lam) +
                                   ", e=" + std::to_string(e));
        ++cases;
      }
    }
  }
  return std::to_string(cases) + " classes, r <= 8, e in {2,3}";
}

// criterion 7: the CLI's table output is byte-identical between one
// worker and eight workers on 20 configurations
std::string criterion_cli_determinism(const std::string& wsk_path) {
  require(!wsk_path.empty(), "no CLI binary path supplied");
  int configs = 0;
  for (wsk::Int e : {wsk::Int{2}, wsk::Int{3}}) {
    for (wsk::Int r : {wsk::Int{5}, wsk::Int{6}, wsk::Int{7}, wsk::Int{8}, wsk::Int{9}}) {
      std::vector<wsk::Partition> parts = wsk::list_partitions(3, r);
      for (const wsk::Partition& lam : {parts.front(), parts[parts.size() / 2]}) {
        std::ostringstream base;
        base << "'" << wsk_path << "' mult-table --family A --n 3 --r " << r << " --e " << e
             << " --lambda " << wsk::partition_str(lam) << " --format json --workers ";
        auto [code1, out1] = run_command(base.str() + "1");
        auto [code8, out8] = run_command(base.str() + "8");
        std::string label = "e=" + std::to_string(e) + " lambda=" + wsk::partition_str(lam);
        require(code1 == 0 && code8 == 0, "CLI exit nonzero at " + label);
        require(!out1.empty(), "CLI emitted nothing at " + label);
        require(out1 == out8, "worker outputs differ at " + label);
        ++configs;
      }
    }
  }
  require(configs == 20, "expected 20 configurations, ran " + std::to_string(configs));
  return "20 configurations byte-identical between 1 and 8 workers";
}

// criterion 8: polynomials survive a save/load round trip bit-exactly and
// a fingerprint mismatch is rejected
std::string criterion_cache_round_trip() {
  wsk::GroupContext ctx(wsk::Family::A, 2, 2);
  wsk::KLTable tp(ctx, wsk::KLKind::P), tq(ctx, wsk::KLKind::Q);
  std::vector<wsk::GroupContext::Id> els = ctx.enumerate_up_to_length(7);
  std::vector<std::pair<wsk::GroupContext::Id, wsk::GroupContext::Id>> pairs;
  for (wsk::GroupContext::Id w : els)
    for (wsk::GroupContext::Id y : els)
      if (ctx.bruhat_leq(y, w)) {
        wsk::kl_p(ctx, tp, y, w);
        wsk::inverse_kl_q(ctx, tp, tq, y, w);
        pairs.emplace_back(y, w);
      }
  require(pairs.size() >= 1000, "interval too small for the sampling target");

  char dir_template[] = "/tmp/wsk-accept-XXXXXX";
  char* dir = mkdtemp(dir_template);
  require(dir != nullptr, "cannot create temporary directory");
  std::string pa = std::string(dir) + "/P.klcache";
  std::string qa = std::string(dir) + "/Q.klcache";
  wsk::cache_save(tp, pa);
  wsk::cache_save(tq, qa);

  wsk::GroupContext fresh(wsk::Family::A, 2, 2);
  wsk::KLTable lp(fresh, wsk::KLKind::P), lq(fresh, wsk::KLKind::Q);
  wsk::cache_load(fresh, lp, pa);
  wsk::cache_load(fresh, lq, qa);

  auto reintern = [&](wsk::GroupContext::Id w) {
    wsk::GroupContext::Id out = fresh.identity();
    for (int g : ctx.reduced_word(w)) out = fresh.multiply(out, fresh.gen(g));
    return out;
  };

  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < 1000; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    const auto& [y, w] = pairs[static_cast<std::size_t>(state % pairs.size())];
    const wsk::QPoly* livep = tp.find(y, w);
    const wsk::QPoly* liveq = tq.find(y, w);
    const wsk::QPoly* loadp = lp.find(reintern(y), reintern(w));
    const wsk::QPoly* loadq = lq.find(reintern(y), reintern(w));
    require(livep && loadp && *livep == *loadp, "P mismatch after round trip");
    require(liveq && loadq && *liveq == *loadq, "Q mismatch after round trip");
  }

  bool rejected = false;
  try {
    wsk::KLTable wrong(fresh, wsk::KLKind::Q);
    wsk::cache_load(fresh, wrong, pa);
  } catch (const wsk::InvalidInputError&) {
    rejected = true;
  }
  require(rejected, "fingerprint mismatch was accepted");

  std::remove(pa.c_str());
  std::remove(qa.c_str());
  std::string rmdir_cmd = "rmdir '" + std::string(dir) + "'";
  run_command(rmdir_cmd);
  return "1000 sampled pairs identical; mismatched fingerprint rejected";
}

struct Criterion {
  std::string name;
  double budget_seconds;  // 0 = no stated budget
  std::function<std::string()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::string wsk_path = argc > 1 ? argv[1] : "";
  std::vector<Criterion> criteria = {
      {"kl-inversion", 60.0, criterion_kl_inversion},
      {"linkage-order-equivalence", 120.0, criterion_linkage_order},
      {"order-transport-identities", 120.0, criterion_order_transport},
      {"layer-parity-purity", 0.0, criterion_layer_parity},
      {"structural-table-invariants", 0.0, criterion_structural},
      {"linkage-core-oracle", 60.0, criterion_linkage_core},
      {"cli-determinism", 0.0, [&wsk_path] { return criterion_cli_determinism(wsk_path); }},
      {"cache-round-trip", 0.0, criterion_cache_round_trip},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = true;
    try {
      note = c.run();
    } catch (const std::exception& e) {
      ok = false;
      note = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      note = "exceeded time budget of " + std::to_string(c.budget_seconds) + "s";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (ok ? "PASS" : "FAIL") << "  " << c.name << " (" << secs << "s): " << note;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

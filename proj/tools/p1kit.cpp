#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "p1kit/conn.hpp"
#include "p1kit/errors.hpp"
#include "p1kit/io.hpp"
#include "p1kit/ktheory.hpp"
#include "p1kit/pointcount.hpp"
#include "p1kit/random.hpp"
#include "p1kit/strata.hpp"
#include "p1kit/stromme.hpp"

namespace {

using namespace p1kit;
using nlohmann::json;

enum Exit : int { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };
enum class Format { Human, Csv, Json };

struct RunConfig {
  std::uint64_t seed = 0;
  std::string field = "Q";
  Format format = Format::Human;
  double budget = kDefaultCountBudget;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string slash_join(const auto& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : "/") + std::to_string(v);
  return s;
}

// A pencil from --pencil FILE, or a seeded random full-rank pencil from --random D,r.
struct PencilSource {
  std::string path;
  std::vector<std::size_t> random;
  bool scramble = false;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("--pencil", path, "pencil JSON file");
    auto* rnd = cmd->add_option("--random", random, "random full-rank pencil with the given D,r")->delimiter(',')->expected(2);
    file->excludes(rnd);
    cmd->add_flag("--scramble", scramble, "replace the pencil by a seeded random equivalent");
  }

  Pencil load(const RunConfig& cfg) const {
    const Field f = Field::parse(cfg.field);
    Rng rng(cfg.seed);
    Pencil p = Pencil::empty(f, 1);
    if (!path.empty()) {
      p = pencil_from_json(read_file(path), f);
    } else if (random.size() == 2) {
      const std::size_t D = random[0], r = random[1];
      if (r == 0) throw UsageError("--random needs r >= 1");
      for (;;) {
        FieldMatrix a(f, D + r, D), b(f, D + r, D);
        for (std::size_t i = 0; i < D + r; ++i)
          for (std::size_t j = 0; j < D; ++j) {
            a.set(i, j, rng.scalar(f));
            b.set(i, j, rng.scalar(f));
          }
        p = Pencil(std::move(a), std::move(b));
        if (full_rank_everywhere(p)) break;
      }
    } else {
      throw UsageError("one of --pencil or --random is required");
    }
    if (scramble) p = random_equivalent(p, rng.next());
    return p;
  }
};

int cmd_splitting_type(const RunConfig& cfg, const PencilSource& src, bool cohomology) {
  const Pencil p = src.load(cfg);
  if (!full_rank_everywhere(p)) {
    std::cout << "pencil is not full rank everywhere\n" << pencil_to_json(p) << "\n";
    return kFail;
  }
  const SplittingType e = splitting_type(p);
  const int D = static_cast<int>(p.source_rank());
  std::vector<CohDims> table;
  if (cohomology)
    for (int n = -D - 2; n <= 3; ++n) table.push_back(cohomology_dims(p, n));

  if (cfg.format == Format::Json) {
    json out{{"splitting_type", e.to_string()}, {"D", p.source_rank()}, {"r", p.cokernel_rank()}};
    if (cohomology) {
      out["cohomology"] = json::array();
      for (const auto& c : table) out["cohomology"].push_back({{"n", c.twist}, {"h0", c.h0}, {"h1", c.h1}});
    }
    std::cout << out.dump() << "\n";
    return kOk;
  }
  std::cout << e.to_string() << "\n";
  if (cohomology) {
    std::cout << "n,h0,h1\n";
    for (const auto& c : table) std::cout << c.twist << "," << c.h0 << "," << c.h1 << "\n";
  }
  return kOk;
}

int cmd_stromme(const RunConfig& cfg, const PencilSource& src) {
  const Pencil p = src.load(cfg);
  if (!full_rank_everywhere(p)) {
    std::cout << "pencil is not full rank everywhere\n" << pencil_to_json(p) << "\n";
    return kFail;
  }
  const Pencil res = forward_resolution(p);
  const SplittingType before = splitting_type(p), after = splitting_type(res);
  const bool pass = before == after && composite_vanishes(p, res);
  if (cfg.format == Format::Json) {
    std::cout << json{{"original", before.to_string()}, {"recovered", after.to_string()}, {"verdict", pass ? "PASS" : "FAIL"}}.dump()
              << "\n";
  } else {
    std::cout << "original: " << before.to_string() << "\nrecovered: " << after.to_string() << "\n"
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  if (!pass) std::cout << "input: " << pencil_to_json(p) << "\nresolution: " << pencil_to_json(res) << "\n";
  return pass ? kOk : kFail;
}

int cmd_strata_table(const RunConfig& cfg, std::size_t r, long d, std::uint64_t max_codim) {
  if (r == 0) throw UsageError("--r must be >= 1");
  const auto types = enumerate_splitting_types(r, d, max_codim);
  if (cfg.format == Format::Json) {
    for (const auto& e : types) {
      const SplittingStratum s = make_stratum(e);
      std::cout << json{{"e", e.to_string()}, {"u", s.codim}, {"multiplicities", s.multiplicities}, {"flag_poincare", s.flag_poincare}}.dump()
                << "\n";
    }
    return kOk;
  }
  std::cout << "e,u,multiplicities,flag_poincare\n";
  for (const auto& e : types) {
    const SplittingStratum s = make_stratum(e);
    std::cout << slash_join(e.parts()) << "," << s.codim << "," << slash_join(s.multiplicities) << ","
              << slash_join(s.flag_poincare) << "\n";
  }
  return kOk;
}

int cmd_chow_betti(const RunConfig& cfg, std::size_t r, long d, std::size_t max_codim) {
  if (r == 0) throw UsageError("--r must be >= 1");
  const BettiTable strata = betti_via_strata(r, d, max_codim);
  const BettiTable subring = subring_betti(r, max_codim).ranks;
  const BettiTable parts = partition_betti(r, max_codim);
  const bool match = strata == subring && subring == parts;
  const char* verdict = match ? "MATCH" : "MISMATCH";
  if (cfg.format == Format::Json) {
    std::cout << json{{"strata", strata.ranks}, {"subring", subring.ranks}, {"partitions", parts.ranks}, {"match", match}}.dump()
              << "\n";
  } else {
    std::cout << "source";
    for (std::size_t i = 0; i <= max_codim; ++i) std::cout << ",codim" << i;
    std::cout << ",match\n";
    for (const auto& [name, t] : {std::pair{"strata", &strata}, {"subring", &subring}, {"partitions", &parts}}) {
      std::cout << name;
      for (auto v : t->ranks) std::cout << "," << v;
      std::cout << "," << verdict << "\n";
    }
  }
  return match ? kOk : kFail;
}

int cmd_ktheory(const RunConfig& cfg, std::size_t r_max, long part_min, long part_bound, long m_max) {
  if (part_min > part_bound) throw UsageError("--part-min exceeds --part-bound");
  std::size_t identities = 0, stromme = 0;
  std::vector<std::string> failures;
  std::function<void(std::size_t, long, std::vector<long>&)> sweep = [&](std::size_t r, long hi, std::vector<long>& cur) {
    if (cur.size() == r) {
      const SplittingType e(cur);
      for (long m = -e.min_part(); m <= m_max; ++m) {
        ++identities;
        if (!verify_appendix_identity(e, m)) {
          const auto s = appendix_identity_sides(e, m);
          failures.push_back("pushforward identity " + e.to_string() + " m=" + std::to_string(m) + " lhs=" + s.lhs.to_string() +
                             " rhs=" + s.rhs.to_string());
        }
      }
      if (e.min_part() >= 0) {
        ++stromme;
        if (!verify_stromme_k(e)) failures.push_back("stromme " + e.to_string() + " class=" + class_of(e).to_string());
      }
      return;
    }
    for (long v = hi; v >= part_min; --v) {
      cur.push_back(v);
      sweep(r, v, cur);
      cur.pop_back();
    }
  };
  for (std::size_t r = 1; r <= r_max; ++r) {
    std::vector<long> cur;
    sweep(r, part_bound, cur);
  }
  const bool pass = failures.empty();
  if (cfg.format == Format::Json) {
    std::cout << json{{"pushforward_identity_cases", identities}, {"stromme_cases", stromme}, {"failures", failures}, {"verdict", pass ? "PASS" : "FAIL"}}.dump()
              << "\n";
  } else {
    std::cout << "pushforward identity: " << identities << " cases\n"
              << "stromme K identity: " << stromme << " cases\n";
    for (const auto& f : failures) std::cout << "counterexample: " << f << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kFail;
}

int cmd_conn(const RunConfig& cfg, const std::string& preset, long n) {
  const auto lines = replay_preset(preset, n);
  bool pass = true;
  for (const auto& l : lines) {
    if (!l.flagged) pass = pass && l.pass;
    const std::string verdict = l.flagged ? "FLAGGED" : (l.pass ? "PASS" : "FAIL");
    switch (cfg.format) {
      case Format::Json:
        std::cout << json{{"label", l.label}, {"derived", l.derived}, {"claimed", l.claimed}, {"verdict", verdict}}.dump() << "\n";
        break;
      case Format::Csv:
        std::cout << l.label << "," << l.derived << "," << l.claimed << "," << verdict << "\n";
        break;
      case Format::Human:
        std::cout << l.label << ": derived " << l.derived << ", claimed " << l.claimed << ", " << verdict << "\n";
        break;
    }
  }
  if (cfg.format == Format::Human)
    std::cout << "preset " << preset << ": " << lines.size() << " lines, " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kFail;
}

int cmd_pointcount(const RunConfig& cfg, const std::string& model, std::size_t D, std::size_t r,
                   const std::vector<std::uint32_t>& qs, unsigned threads, double max_dev) {
  std::vector<CountReport> reports;
  for (auto q : qs) {
    const CountReport rep = model == "kronecker" ? count_kronecker_locus(D, r, q, cfg.budget, threads)
                                                 : count_fr_locus(D, r, q, cfg.budget, threads);
    std::cout << rep.to_json() << "\n";
    reports.push_back(rep);
  }
  std::set<std::uint32_t> distinct(qs.begin(), qs.end());
  if (distinct.size() < 3) {
    std::cout << json{{"codim_fit", nullptr}, {"note", "codim_fit needs at least 3 distinct q"}}.dump() << "\n";
    return kOk;
  }
  const CodimFit fit = codim_fit(reports);
  const bool pass = fit.fitted == 0 || fit.max_deviation <= max_dev;
  json out{{"codim_fit", fit.max_deviation}, {"fitted", fit.fitted}, {"expected_codim", r}, {"verdict", pass ? "PASS" : "FAIL"}};
  if (!fit.note.empty()) out["note"] = fit.note;
  std::cout << out.dump() << "\n";
  return pass ? kOk : kFail;
}

int cmd_selftest(const RunConfig& cfg, const std::vector<int>& only, unsigned threads) {
  bool pass = true;
  std::vector<int> ids = only;
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8};
  for (int id : ids) {
    if (id < 1 || id > 8) throw UsageError("criterion ids are 1..8");
    const auto res = acceptance::run_criterion(id, threads);
    pass = pass && res.passed;
    if (cfg.format == Format::Json)
      std::cout << json{{"id", res.id}, {"name", res.name}, {"passed", res.passed}, {"seconds", res.seconds}, {"limit", res.limit}, {"detail", res.detail}}.dump()
                << "\n";
    else
      std::cout << acceptance::format(res) << "\n";
    std::cout.flush();
  }
  return pass ? kOk : kFail;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations with vector bundles on the projective line"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format = "human";
  app.add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--field", cfg.field, "Q or Fp:<p>")->capture_default_str();
  app.add_option("--format", format, "human, csv or json")->check(CLI::IsMember({"human", "csv", "json"}))->capture_default_str();
  app.add_option("--budget", cfg.budget, "largest enumeration size allowed")->capture_default_str();

  std::function<int()> action;

  PencilSource st_src;
  bool cohomology = false;
  auto* st = app.add_subcommand("splitting-type", "splitting type of the cokernel of a pencil");
  st_src.attach(st);
  st->add_flag("--cohomology", cohomology, "also print h0, h1 on the twist window [-D-2, 3]");
  st->callback([&] { action = [&] { return cmd_splitting_type(cfg, st_src, cohomology); }; });

  PencilSource sr_src;
  auto* sr = app.add_subcommand("stromme-roundtrip", "forward resolution and splitting-type comparison");
  sr_src.attach(sr);
  sr->callback([&] { action = [&] { return cmd_stromme(cfg, sr_src); }; });

  std::size_t r = 2;
  long d = 0;
  std::uint64_t max_codim = 6;
  auto* tab = app.add_subcommand("strata-table", "splitting strata of rank r, degree d");
  tab->add_option("--r", r)->required();
  tab->add_option("--d", d)->capture_default_str();
  tab->add_option("--max-codim", max_codim)->capture_default_str();
  tab->callback([&] { action = [&] { return cmd_strata_table(cfg, r, d, max_codim); }; });

  auto* chow = app.add_subcommand("chow-betti", "Betti numbers three ways");
  chow->add_option("--r", r)->required();
  chow->add_option("--d", d, "degree used by the stratification sum")->capture_default_str();
  chow->add_option("--max-codim", max_codim)->capture_default_str();
  chow->callback([&] { action = [&] { return cmd_chow_betti(cfg, r, d, max_codim); }; });

  std::size_t r_max = 4;
  long part_min = -3, part_bound = 5, m_max = 5;
  auto* kt = app.add_subcommand("ktheory-verify", "sweep of the K_0 identities");
  kt->add_option("--r-max", r_max)->capture_default_str();
  kt->add_option("--part-min", part_min)->capture_default_str();
  kt->add_option("--part-bound", part_bound)->capture_default_str();
  kt->add_option("--m-max", m_max)->capture_default_str();
  kt->callback([&] { action = [&] { return cmd_ktheory(cfg, r_max, part_min, part_bound, m_max); }; });

  std::string preset;
  long n = 3;
  auto* conn = app.add_subcommand("conn-check", "replay a connectivity ledger");
  conn->add_option("--preset", preset)->required()->check(CLI::IsMember({"claimBGL", "gs1", "gs2", "grid", "p-final"}));
  conn->add_option("--n", n)->capture_default_str();
  conn->callback([&] { action = [&] { return cmd_conn(cfg, preset, n); }; });

  std::string model = "kronecker";
  std::size_t D = 1;
  std::vector<std::uint32_t> qs{2, 3, 5};
  unsigned threads = 4;
  double max_dev = 0.75;
  auto* pc = app.add_subcommand("pointcount", "exhaustive count of the full-rank locus");
  pc->add_option("--model", model)->check(CLI::IsMember({"kronecker", "fr"}))->capture_default_str();
  pc->add_option("--D", D)->capture_default_str();
  pc->add_option("--r", r)->capture_default_str();
  pc->add_option("--q", qs, "comma-separated primes")->delimiter(',');
  pc->add_option("--threads", threads)->capture_default_str();
  pc->add_option("--max-deviation", max_dev)->capture_default_str();
  pc->callback([&] { action = [&] { return cmd_pointcount(cfg, model, D, r, qs, threads, max_dev); }; });

  std::vector<int> only;
  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
  self->add_option("--only", only, "criterion ids")->delimiter(',');
  self->add_option("--threads", threads)->capture_default_str();
  self->callback([&] { action = [&] { return cmd_selftest(cfg, only, threads); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Human;

  try {
    return action();
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
}

// sl2lab: growth, diameter, spectrum, mixing, escape, pivot, tori, family
// experiments over SL2(F_q), plus a verify-all property suite. Emits CSV or
// JSON; identical config and seed give byte-identical output.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "sl2/bgfamily.hpp"
#include "sl2/cayley.hpp"
#include "sl2/escape.hpp"
#include "sl2/growth.hpp"
#include "sl2/io.hpp"
#include "sl2/structure.hpp"
#include "sl2/verify.hpp"

using nlohmann::json;
using namespace sl2;

namespace {

struct RunConfig {
  std::string command;
  uint32_t p = 5;
  uint32_t alpha = 1;
  std::string preset = "unipotent";  // or "triple3"
  std::string gen_file;
  std::string variety = "tr2-4";
  std::string variety_file;
  int kmax = 8;
  int L = 24;
  uint32_t dense_cap = 5000;
  double tol = 1e-6;
  uint64_t seed = 7;
  uint32_t pmax = 101;
  uint64_t instances = 100;
  std::string out;
  std::string format = "csv";  // or "json"
};

std::vector<IntMat2> generator_mats(const RunConfig& cfg) {
  if (!cfg.gen_file.empty()) {
    std::ifstream in(cfg.gen_file);
    if (!in) fail(Err::BadInput, "cannot open " + cfg.gen_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return generators_from_json(ss.str());
  }
  if (cfg.preset == "unipotent") return unipotent_pair();
  if (cfg.preset == "triple3") return triple3_pair();
  fail(Err::BadInput, "unknown preset " + cfg.preset);
}

GroupSet generator_set(const RunConfig& cfg, GroupPtr G) {
  const Field& F = G->field();
  std::vector<Sl2Elem> elems;
  for (const IntMat2& m : generator_mats(cfg))
    elems.push_back(G->make(F.from_int(m.a.convert_to<int64_t>()),
                            F.from_int(m.b.convert_to<int64_t>()),
                            F.from_int(m.c.convert_to<int64_t>()),
                            F.from_int(m.d.convert_to<int64_t>())));
  return GroupSet::of_elems(G, elems);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) fail(Err::BadInput, "cannot write " + cfg.out);
  out << text;
}

json config_json(const RunConfig& cfg) {
  json j;
  j["p"] = cfg.p;
  j["alpha"] = cfg.alpha;
  j["preset"] = cfg.gen_file.empty() ? cfg.preset : ("file:" + cfg.gen_file);
  j["seed"] = cfg.seed;
  j["kmax"] = cfg.kmax;
  j["L"] = cfg.L;
  j["dense_cap"] = cfg.dense_cap;
  j["tol"] = cfg.tol;
  return j;
}

int finish(const RunConfig& cfg, json& report, const std::string& csv_text) {
  report["command"] = cfg.command;
  report["config"] = config_json(cfg);
  if (!report.contains("violations")) report["violations"] = json::array();
  if (cfg.format == "json") {
    emit(cfg, report.dump(2) + "\n");
  } else {
    emit(cfg, csv_text);
    if (!report["violations"].empty())
      std::cerr << report["violations"].dump() << "\n";
  }
  return report["violations"].empty() ? 0 : 1;
}

int cmd_growth(RunConfig cfg) {
  Field F = Field::make(cfg.p, cfg.alpha);
  GroupPtr G = Group::enumerate(F);
  if (G->order() <= 4096) G->ensure_mul_table();
  GroupSet A = generator_set(cfg, G);

  json report;
  json violations = json::array();
  GrowthReport tri = trichotomy(A);
  report["results"]["sizes"] = tri.sizes;
  report["results"]["sym_sizes"] = tri.sym_sizes;
  if (tri.delta_meas) report["results"]["delta_meas"] = *tri.delta_meas;
  report["results"]["covered"] = tri.covered;
  if (!tri.dichotomy_holds) violations.push_back("growth dichotomy violated");

  PlunneckeReport plu = verify_plunnecke_chain(A, std::max(cfg.kmax, 3));
  report["results"]["plunnecke"] = {
      {"k", plu.k},
      {"mony_holds", plu.mony_holds},
      {"marmundo_holds", plu.marmundo_holds}};
  if (plu.jotor_holds) report["results"]["plunnecke"]["jotor_holds"] = *plu.jotor_holds;
  if (!plu.mony_holds || !plu.marmundo_holds ||
      (plu.jotor_holds && !*plu.jotor_holds))
    violations.push_back("plunnecke chain violated");

  Rng rng(cfg.seed);
  uint64_t ruzsa_bad = 0;
  for (uint64_t i = 0; i < cfg.instances; ++i) {
    GroupSet X = random_set(G, 1 + uint32_t(rng.below(std::min(G->order(), 40u))), rng);
    GroupSet Y = random_set(G, 1 + uint32_t(rng.below(std::min(G->order(), 40u))), rng);
    GroupSet Z = random_set(G, 1 + uint32_t(rng.below(std::min(G->order(), 40u))), rng);
    if (!verify_ruzsa(X, Y, Z).holds) ++ruzsa_bad;
  }
  report["results"]["ruzsa_instances"] = cfg.instances;
  if (ruzsa_bad) violations.push_back("ruzsa triangle violated");

  RssWitness rss = find_rss(A);
  TorusExponents te = torus_exponents(A, rss.g, 3);
  report["results"]["torus_exponents"] = {{"torus_meet", te.torus_meet},
                                          {"variety_meet", te.variety_meet},
                                          {"r13", te.r13},
                                          {"r23", te.r23}};

  report["violations"] = violations;
  std::ostringstream csv;
  csv << "k,size,sym_size\n";
  for (size_t i = 0; i < tri.sizes.size(); ++i)
    csv << (i + 1) << ',' << tri.sizes[i] << ',' << tri.sym_sizes[i] << '\n';
  csv << "# torus exponent ratios at the rss witness (k=3)\n";
  csv << "torus_meet,variety_meet,r13,r23\n";
  csv << te.torus_meet << ',' << te.variety_meet << ',' << fmt_double(te.r13) << ','
      << fmt_double(te.r23) << '\n';
  return finish(cfg, report, csv.str());
}

int cmd_diameter(RunConfig cfg) {
  Field F = Field::make(cfg.p, cfg.alpha);
  GroupPtr G = Group::enumerate(F);
  GroupSet A = generator_set(cfg, G);
  BfsReport rep = bfs(A);

  json report;
  report["results"]["diameter"] = rep.diameter;
  report["results"]["ball_sizes"] = rep.ball_sizes;
  std::ostringstream csv;
  csv << "radius,ball_size\n";
  for (size_t r = 0; r < rep.ball_sizes.size(); ++r)
    csv << r << ',' << rep.ball_sizes[r] << '\n';
  return finish(cfg, report, csv.str());
}

int cmd_spectrum(RunConfig cfg) {
  Field F = Field::make(cfg.p, cfg.alpha);
  GroupPtr G = Group::enumerate(F);
  GroupSet A = generator_set(cfg, G);
  GroupSet sym = A.unite(A.inverse());
  SpectralReport rep = dense_spectrum(sym, cfg.dense_cap);

  json report;
  json violations = json::array();
  bool mult_ok = verify_multiplicity(rep, F);
  bool bound_ok = verify_eig_bound(rep, sym);
  report["results"]["nu1"] = rep.eigenvalues.size() > 1 ? rep.eigenvalues[1] : 1.0;
  report["results"]["gap"] = rep.gap;
  report["results"]["trace_identity_residual"] = rep.trace_identity_residual;
  report["results"]["multiplicity_ok"] = mult_ok;
  report["results"]["eig_bound_ok"] = bound_ok;
  report["results"]["clusters"] = json::array();
  for (const auto& c : rep.clusters)
    report["results"]["clusters"].push_back({{"value", c.value}, {"mult", c.multiplicity}});
  if (!mult_ok) violations.push_back("multiplicity below (q-1)/2");
  if (!bound_ok) violations.push_back("eigenvalue bound violated");
  if (rep.trace_identity_residual > 1e-6) violations.push_back("trace identity violated");
  report["violations"] = violations;

  std::ostringstream csv;
  csv << "j,nu_j,cluster_id\n";
  size_t cluster = 0, used = 0;
  for (size_t j = 0; j < rep.eigenvalues.size(); ++j) {
    if (used == rep.clusters[cluster].multiplicity) {
      ++cluster;
      used = 0;
    }
    ++used;
    csv << j << ',' << fmt_double(rep.eigenvalues[j]) << ',' << cluster << '\n';
  }
  return finish(cfg, report, csv.str());
}

int cmd_mixing(RunConfig cfg) {
  Field F = Field::make(cfg.p, cfg.alpha);
  GroupPtr G = Group::enumerate(F);
  GroupSet A = generator_set(cfg, G);
  GroupSet sym = A.unite(A.inverse());
  MixingProfile prof = mixing_profile(sym, cfg.L);

  json report;
  json violations = json::array();
  report["results"]["l2"] = prof.l2;
  report["results"]["ratios"] = prof.ratios;
  report["results"]["identity_ok"] = prof.identity_ok;
  if (!prof.identity_ok) violations.push_back("convolution identity violated");
  report["violations"] = violations;

  std::ostringstream csv;
  csv << "ell,l2norm,ratio\n";
  for (size_t l = 1; l <= prof.l2.size(); ++l) {
    csv << l << ',' << fmt_double(prof.l2[l - 1]) << ',';
    if (2 * l <= prof.l2.size()) csv << fmt_double(prof.ratios[l - 1]);
    csv << '\n';
  }
  return finish(cfg, report, csv.str());
}

Variety make_variety(const RunConfig& cfg, const Field& F) {
  if (!cfg.variety_file.empty()) {
    std::ifstream in(cfg.variety_file);
    if (!in) fail(Err::BadInput, "cannot open " + cfg.variety_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return Variety::from_json(F, ss.str());
  }
  if (cfg.variety == "b-zero") return Variety::coordinate_zero(F, 1);
  if (cfg.variety == "tr2-4") return Variety::trace_squared_four(F);
  if (cfg.variety == "abcd") return Variety::entry_product_zero(F);
  fail(Err::BadInput, "unknown variety " + cfg.variety);
}

int cmd_escape(RunConfig cfg) {
  Field F = Field::make(cfg.p, cfg.alpha);
  GroupPtr G = Group::enumerate(F);
  if (G->order() <= 4096) G->ensure_mul_table();
  GroupSet A = generator_set(cfg, G);
  Variety W = make_variety(cfg, F);

  json report;
  json violations = json::array();
  EscapeResult res = escape(A, W, G->identity(), cfg.kmax);
  report["results"]["k_min"] = res.k_min;
  report["results"]["witness_count"] = res.witness_count;
  report["results"]["empirical_c"] = double(res.witness_count) / A.size();
  for (const Sl2Elem& w : res.witnesses)
    if (member(W, w)) violations.push_back("witness fails recheck");
  RssWitness rss = find_rss(A);
  report["results"]["rss_k"] = rss.k;
  report["results"]["rss_trace"] = F.to_string(G->trace(rss.g));
  report["violations"] = violations;

  std::ostringstream csv;
  csv << "k_min,witness_count,empirical_c,rss_k\n";
  csv << res.k_min << ',' << res.witness_count << ','
      << fmt_double(double(res.witness_count) / A.size()) << ',' << rss.k << '\n';
  return finish(cfg, report, csv.str());
}

int cmd_pivot(RunConfig cfg) {
  Field F = Field::make(cfg.p, cfg.alpha);
  GroupPtr G = Group::enumerate(F);
  if (G->order() <= 4096) G->ensure_mul_table();
  Rng rng(cfg.seed);

  json report;
  json violations = json::array();
  uint64_t pivots = 0, collisions = 0;
  for (uint64_t i = 0; i < cfg.instances; ++i) {
    GroupSet A = random_set(G, 1 + uint32_t(rng.below(8)), rng);
    uint32_t xi = uint32_t(rng.below(G->order()));
    uint32_t gr = uint32_t(rng.below(G->order()));
    if (!G->is_rss(G->element(gr))) continue;
    PivotResult res = classify_pivot(A, G->element(xi), G->element(gr));
    if (res.is_pivot) {
      ++pivots;
    } else {
      ++collisions;
      GroupSet torus = centralizer(G, G->element(gr)).conjugate(xi);
      const Sl2Elem& w = *res.witness;
      if (!(A.inverse().product(A).contains_elem(w) && torus.contains_elem(w) &&
            w != G->identity() && w != G->minus_identity()))
        violations.push_back("collision witness fails recheck");
    }
  }
  report["results"]["pivots"] = pivots;
  report["results"]["collisions"] = collisions;
  report["violations"] = violations;
  std::ostringstream csv;
  csv << "pivots,collisions\n" << pivots << ',' << collisions << '\n';
  return finish(cfg, report, csv.str());
}

int cmd_tori(RunConfig cfg) {
  Field F = Field::make(cfg.p, cfg.alpha);
  GroupPtr G = Group::enumerate(F);
  if (G->order() <= 4096) G->ensure_mul_table();
  TorusCensus census = count_tori(G);

  json report;
  json violations = json::array();
  report["results"]["n_split"] = census.n_split;
  report["results"]["n_nonsplit"] = census.n_nonsplit;
  report["results"]["pairwise_ok"] = census.pairwise_ok;
  if (!census.pairwise_ok) violations.push_back("tori pairwise intersection violated");
  report["violations"] = violations;
  std::ostringstream csv;
  csv << "n_split,n_nonsplit,pairwise_ok\n"
      << census.n_split << ',' << census.n_nonsplit << ',' << census.pairwise_ok << '\n';
  return finish(cfg, report, csv.str());
}

int cmd_family(RunConfig cfg) {
  std::vector<uint32_t> primes;
  for (uint32_t p = 2; p <= cfg.pmax; ++p)
    if (is_prime_u32(p)) primes.push_back(p);
  FamilyBudget budget;
  budget.dense_cap = cfg.dense_cap;
  budget.lambda_tol = cfg.tol;
  std::vector<FamilyRow> rows = family_scan(generator_mats(cfg), primes, budget);

  json report;
  json violations = json::array();
  json jrows = json::array();
  for (const FamilyRow& r : rows) {
    json jr;
    jr["p"] = r.p;
    jr["generated"] = r.generated;
    jr["girth_lb"] = r.girth_lb;
    if (r.nu1) jr["nu1"] = *r.nu1;
    if (r.gap) jr["gap"] = *r.gap;
    if (r.diameter) jr["diameter"] = *r.diameter;
    if (r.diam_over_log) jr["diam_over_log"] = *r.diam_over_log;
    if (r.girth_exact) jr["girth_exact"] = *r.girth_exact;
    if (r.mix_steps) jr["mix_steps"] = *r.mix_steps;
    jrows.push_back(jr);
    if (r.gap && *r.gap <= 0) violations.push_back("gap <= 0 at p=" + std::to_string(r.p));
    if (r.girth_exact && *r.girth_exact < r.girth_lb)
      violations.push_back("girth below bound at p=" + std::to_string(r.p));
  }
  report["results"]["rows"] = jrows;
  report["violations"] = violations;
  return finish(cfg, report, family_csv(rows));
}

int cmd_verify_all(RunConfig cfg) {
  std::vector<uint32_t> extra;
  if (cfg.p != 0) extra.push_back(cfg.p);
  VerifyReport rep = verify_all(cfg.seed, cfg.instances, extra);

  json report;
  json violations = json::array();
  json checks = json::array();
  for (const CheckResult& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"instances", c.instances},
                      {"violations", c.violations},
                      {"details", c.details}});
    if (c.violations)
      violations.push_back(c.name + ": " + std::to_string(c.violations) + " violations");
  }
  report["results"]["seed"] = rep.seed;
  report["results"]["instances_per_check"] = rep.instances_per_check;
  report["results"]["checks"] = checks;
  report["violations"] = violations;

  std::ostringstream csv;
  csv << "check,instances,violations\n";
  for (const CheckResult& c : rep.checks)
    csv << c.name << ',' << c.instances << ',' << c.violations << '\n';
  cfg.format = cfg.format.empty() ? "json" : cfg.format;
  return finish(cfg, report, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growth and expansion laboratory for SL2(F_q)"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* cap = std::getenv("SL2LAB_DENSE_CAP")) cfg.dense_cap = std::atoi(cap);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime modulus");
    sub->add_option("--alpha", cfg.alpha, "extension degree (1 or 2)");
    sub->add_option("--preset", cfg.preset, "generator preset: unipotent | triple3");
    sub->add_option("--gen-file", cfg.gen_file, "generator JSON file");
    sub->add_option("--kmax", cfg.kmax, "maximum power / escape depth");
    sub->add_option("--L", cfg.L, "mixing steps");
    sub->add_option("--dense-cap", cfg.dense_cap, "dense spectrum cap");
    sub->add_option("--tol", cfg.tol, "iterative eigenvalue tolerance");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--instances", cfg.instances, "random instances per check");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "csv (default) or json");
  };

  CLI::App* growth = app.add_subcommand("growth", "trichotomy and growth inequalities");
  CLI::App* diameter = app.add_subcommand("diameter", "BFS balls and diameter");
  CLI::App* spectrum = app.add_subcommand("spectrum", "dense spectrum and multiplicity");
  CLI::App* mixing = app.add_subcommand("mixing", "l2 flattening profile");
  CLI::App* escape_cmd = app.add_subcommand("escape", "escape from a subvariety");
  CLI::App* pivot = app.add_subcommand("pivot", "pivot classification sample");
  CLI::App* tori = app.add_subcommand("tori", "maximal torus census");
  CLI::App* family = app.add_subcommand("family", "prime family scan");
  CLI::App* verify = app.add_subcommand("verify-all", "full property suite");
  for (CLI::App* sub : {growth, diameter, spectrum, mixing, escape_cmd, pivot, tori, family, verify})
    add_common(sub);
  escape_cmd->add_option("--variety", cfg.variety, "builtin variety: b-zero | tr2-4 | abcd");
  escape_cmd->add_option("--variety-file", cfg.variety_file, "variety JSON file");
  family->add_option("--pmax", cfg.pmax, "largest prime in the scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (growth->parsed()) { cfg.command = "growth"; return cmd_growth(cfg); }
    if (diameter->parsed()) { cfg.command = "diameter"; return cmd_diameter(cfg); }
    if (spectrum->parsed()) { cfg.command = "spectrum"; return cmd_spectrum(cfg); }
    if (mixing->parsed()) { cfg.command = "mixing"; return cmd_mixing(cfg); }
    if (escape_cmd->parsed()) { cfg.command = "escape"; return cmd_escape(cfg); }
    if (pivot->parsed()) { cfg.command = "pivot"; return cmd_pivot(cfg); }
    if (tori->parsed()) { cfg.command = "tori"; return cmd_tori(cfg); }
    if (family->parsed()) { cfg.command = "family"; return cmd_family(cfg); }
    if (verify->parsed()) { cfg.command = "verify-all"; return cmd_verify_all(cfg); }
  } catch (const SlError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

// Command-line front end: generators, verifiers, bound evaluation, the
// discharging engine and the sampling harness. Exit codes are a stable
// contract: 0 success/pass, 1 check failure, 2 usage error, 3 bad input.

#include <CLI11.hpp>
#include <iostream>

#include "kplanar/bounds.hpp"
#include "kplanar/constructions.hpp"
#include "kplanar/discharging.hpp"
#include "kplanar/experiments.hpp"
#include "kplanar/json_io.hpp"
#include "kplanar/planarize.hpp"
#include "kplanar/svg.hpp"
#include "kplanar/tables.hpp"

using namespace kplanar;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

json new_report(const std::string& kind) {
  json j;
  j["schema_version"] = 1;
  j["report"] = kind;
  return j;
}

json bound_constant_json(const BoundConstant& b) {
  json j;
  if (b.root) {
    j["kind"] = "root";
    j["radicand"] = b.root->radicand.str();
    j["degree"] = b.root->degree;
    auto e = enclose_root(*b.root);
    j["enclosure"] = {e.lo.str(), e.hi.str()};
    j["decimal3_up"] = render_root_decimal(*b.root, 3, true);
    j["decimal3_down"] = render_root_decimal(*b.root, 3, false);
  } else {
    j["kind"] = "rational";
    j["slope"] = b.slope->str();
    j["intercept"] = b.intercept.str();
  }
  j["per_sqrt_k"] = b.per_sqrt_k;
  j["cited"] = b.cited;
  j["source"] = b.source;
  if (b.validity_threshold) j["valid_for_m_at_least"] = b.validity_threshold->str() + " n";
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

json cell_json(const TableCell& c) {
  json j;
  j["kind"] = c.kind;
  j["exact"] = c.exact;
  if (!c.decimal3.empty()) j["decimal3"] = c.decimal3;
  if (!c.decimal2.empty()) j["decimal2"] = c.decimal2;
  if (!c.source.empty()) j["source"] = c.source;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

int cmd_generate(const std::string& family, int rows, int cols, bool wrap,
                 const std::string& out, const std::string& svg) {
  auto fam = parse_family(family);
  if (!fam) {
    std::cerr << "unknown family: " << family << "\n";
    return kExitUsage;
  }
  auto [d, cert] = generate({*fam, rows, cols, wrap});
  if (!out.empty()) save_drawing(d, out);
  if (!svg.empty()) save_svg(d, svg);
  json j = new_report("generate");
  j["family"] = family;
  j["rows"] = rows;
  j["cols"] = cols;
  j["wrap"] = wrap;
  j["certificate"] = {
      {"expected_k", cert.expected_k},
      {"expects_c3_free", cert.expects_c3_free},
      {"expects_c4_free", cert.expects_c4_free},
      {"vertex_count", cert.vertex_count},
      {"edge_count", cert.edge_count},
      {"asymptotic_density", cert.asymptotic_density.str()},
      {"boundary_deficit", cert.boundary_deficit.str()},
  };
  if (cert.expected_girth_min)
    j["certificate"]["expected_girth_min"] = *cert.expected_girth_min;
  if (!out.empty()) j["drawing"] = out;
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& in, const std::string& checks_csv,
               std::optional<int> expect_k, std::optional<int> expect_girth) {
  DrawnGraph d = load_drawing(in);
  std::set<std::string> checks;
  {
    std::stringstream ss(checks_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) checks.insert(tok);
  }
  const std::set<std::string> known = {"girth", "c3", "c4", "kplanar", "density"};
  for (const auto& c : checks)
    if (!known.count(c)) {
      std::cerr << "unknown check: " << c << "\n";
      return kExitUsage;
    }

  json j = new_report("verify");
  bool all_pass = true;
  auto add = [&](const std::string& name, json detail, bool pass) {
    detail["pass"] = pass;
    j["checks"][name] = std::move(detail);
    all_pass = all_pass && pass;
  };

  if (checks.count("girth")) {
    int g = girth(d.graph);
    json detail;
    if (g == kInfiniteGirth) detail["girth"] = "infinity";
    else detail["girth"] = g;
    bool pass = !expect_girth || (g >= *expect_girth);
    if (expect_girth) detail["expected_min"] = *expect_girth;
    add("girth", detail, pass);
  }
  if (checks.count("c3")) {
    bool present = has_c3(d.graph);
    add("c3", json{{"c3_free", !present}}, !present);
  }
  if (checks.count("c4")) {
    bool present = has_c4(d.graph);
    add("c4", json{{"c4_free", !present}}, !present);
  }
  if (checks.count("kplanar")) {
    int k = local_crossing_number(d);
    json detail{{"local_crossing_number", k}};
    bool pass = !expect_k || (k <= *expect_k);
    if (expect_k) detail["expected_max"] = *expect_k;
    add("kplanar", detail, pass);
  }
  if (checks.count("density")) {
    auto rep = density_report(d.graph);
    add("density",
        json{{"n", rep.n}, {"m", rep.m}, {"m_over_n", rep.m_over_n.str()}},
        true);
  }
  std::cout << j.dump(2) << "\n";
  return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_bounds(int k, const std::string& setting_s, long long n,
               std::optional<std::string> m_s, const std::string& direction,
               const std::string& format) {
  auto setting = parse_setting(setting_s);
  if (!setting) {
    std::cerr << "unknown setting: " << setting_s << "\n";
    return kExitUsage;
  }
  json j = new_report("bounds");
  j["k"] = k;
  j["setting"] = setting_s;
  j["n"] = n;
  std::optional<Rational> m;
  if (m_s) {
    m = Rational::parse(*m_s);
    j["m"] = m->str();
  }

  try {
    if (direction == "U" || direction == "L") {
      BoundConstant b;
      if (direction == "U") {
        if (k <= 3) b = density_upper(*setting, k);
        else b = density_upper_general_k(*setting, k);
      } else {
        if (k > 3) throw Unavailable("no general-k lower bounds derived here");
        b = density_lower(*setting, k);
      }
      j["constant"] = bound_constant_json(b);
      const Rational N(n);
      if (b.root) {
        RootConstant scaled{b.root->radicand * N.pow((unsigned)b.root->degree),
                            b.root->degree};
        j["bound_decimal"] = render_root_decimal(scaled, 0, direction == "U");
        j["bound_strict"] = direction == "U";
      } else {
        j["bound_exact"] = b.evaluate(N).str();
      }
      if (b.validity_threshold && m)
        j["precondition_met"] = (*m >= *b.validity_threshold * N);
      if (format == "text") {
        std::cout << (direction == "U" ? "upper" : "lower") << " bound for k="
                  << k << " " << setting_s << ": ";
        if (b.root) {
          std::cout << (b.root->degree == 3 ? "cbrt(" : "sqrt(")
                    << b.root->radicand.str() << ")"
                    << (b.per_sqrt_k ? "" : " * n") << ", at n=" << n
                    << (direction == "U" ? " below " : " above ")
                    << j["bound_decimal"].get<std::string>() << "\n";
        } else {
          std::cout << b.slope->str() << "*n"
                    << (b.intercept.is_zero() ? "" : " + " + b.intercept.str())
                    << " = " << j["bound_exact"].get<std::string>()
                    << (b.cited ? " [cited]" : "") << "\n";
        }
      } else {
        std::cout << j.dump(2) << "\n";
      }
      return kExitPass;
    }
    if (direction == "crU") {
      Rational v = cr_upper(k, Rational(n));
      j["cr_upper"] = v.str();
      j["formula"] = k == 2 ? "(10n-20)/3" : "(33n-66)/5";
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }
    if (direction == "crL") {
      auto cl = cr_lower_coefficient(*setting);
      j["coefficient"] = cl.coefficient.str();
      j["coefficient_decimal3"] =
          render_rational_decimal(cl.coefficient, 3, false);
      j["threshold"] = cl.threshold.str() + " n";
      if (m) {
        const Rational N(n);
        if (*m >= cl.threshold * N)
          j["cr_lower"] = (cl.coefficient * m->pow(3) / N.pow(2)).str();
        else
          j["cr_lower"] = nullptr;
      }
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }
  } catch (const Unavailable& e) {
    j["unavailable"] = e.what();
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cerr << "unknown direction: " << direction << "\n";
  return kExitUsage;
}

int cmd_table(const std::string& format) {
  if (format == "text") {
    std::cout << render_tables_text();
    return kExitPass;
  }
  auto dt = table_density();
  auto ct = table_crossing();
  json j = new_report("table");
  const char* settings[4] = {"unrestricted", "c3free", "c4free", "girth5"};
  for (const auto& row : dt.rows) {
    json r;
    r["k"] = row.k_label;
    for (int i = 0; i < 4; ++i) {
      r[settings[i]] = {{"lower", cell_json(row.lower[i])},
                        {"upper", cell_json(row.upper[i])}};
    }
    j["density"].push_back(std::move(r));
  }
  j["crossing"]["planar2_upper"] = cell_json(ct.planar2_upper);
  j["crossing"]["planar3_upper"] = cell_json(ct.planar3_upper);
  for (int i = 0; i < 4; ++i)
    j["crossing"]["general_lower"][settings[i]] = cell_json(ct.general_lower[i]);
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

int cmd_discharge(const std::string& in, const std::string& alpha_s,
                  std::optional<long long> density_t) {
  DrawnGraph d = load_drawing(in);
  Rational alpha = Rational::parse(alpha_s);
  auto p = planarize(d);
  auto led = build_ledger(p, alpha);
  auto sum = charge_sum_check(led);
  auto res = discharge_feasibility(led);

  json j = new_report("discharge");
  j["alpha"] = alpha.str();
  j["n"] = p.original_n;
  j["m"] = p.original_m;
  j["faces"] = json::array();
  for (size_t f = 0; f < p.faces.size(); ++f) {
    j["faces"].push_back({{"id", f},
                          {"size", p.faces[f].size},
                          {"original", p.faces[f].original_count},
                          {"class", face_class_name(led.cls[f])},
                          {"charge", led.charge[f].str()},
                          {"remaining", led.remaining[f].str()}});
  }
  j["charge_sum"] = {{"lhs", sum.lhs.str()}, {"rhs", sum.rhs.str()},
                     {"pass", sum.pass}};
  j["feasible"] = res.feasible;
  j["total_demand"] = res.total_demand.str();
  j["total_routed"] = res.total_routed.str();
  j["transfers"] = json::array();
  for (const auto& t : res.transfers) {
    json tj = {{"from", t.from}, {"to", t.to}, {"amount", t.amount.str()}};
    if (t.via >= 0) tj["via"] = t.via;
    j["transfers"].push_back(std::move(tj));
  }
  if (!res.unsatisfied.empty()) j["unsatisfied"] = res.unsatisfied;
  bool density_ok = true;
  if (res.feasible) {
    // feasibility certifies m <= (2/alpha)(n-2)
    density_ok = Rational(p.original_m) <=
                 Rational(2) / alpha * Rational(p.original_n - 2);
    j["edge_bound_holds"] = density_ok;
  }
  bool formula_ok = true;
  if (density_t) {
    auto rep = density_formula_check(p, *density_t);
    json fj = {{"t", *density_t},
               {"rhs", rep.rhs.str()},
               {"m", rep.m},
               {"pass", rep.pass},
               {"crossings", rep.crossings},
               {"size5_cells", rep.size5_cells},
               {"c5_credit_holds", rep.c5_credit_holds}};
    for (const auto& [size, count] : rep.cells_by_size)
      fj["cells_by_size"][std::to_string(size)] = count;
    j["density_formula"] = std::move(fj);
    formula_ok = rep.pass;
  }
  std::cout << j.dump(2) << "\n";
  return (sum.pass && res.feasible && density_ok && formula_ok)
             ? kExitPass
             : kExitCheckFailed;
}

int cmd_sample(const std::string& in, const std::string& p_s, long long trials,
               uint64_t seed, const std::string& csv) {
  DrawnGraph d = load_drawing(in);
  SamplingConfig cfg{Rational::parse(p_s), trials, seed};
  SamplingReport rep =
      csv.empty() ? sample_induced(d, cfg) : sample_induced_with_trials(d, cfg);
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot write " + csv);
    out << "trial,vertices,edges,crossings\n";
    for (size_t t = 0; t < rep.per_trial.size(); ++t)
      out << t << "," << rep.per_trial[t][0] << "," << rep.per_trial[t][1]
          << "," << rep.per_trial[t][2] << "\n";
  }
  json j = new_report("sample");
  j["prng"] = rep.prng;
  j["p"] = rep.p.str();
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["instance"] = {{"n", rep.n}, {"m", rep.m}, {"crossings", rep.cr}};
  j["mean"] = {{"vertices", rep.mean_vertices.str()},
               {"edges", rep.mean_edges.str()},
               {"crossings", rep.mean_crossings.str()}};
  j["expected"] = {{"vertices", rep.expected_vertices.str()},
                   {"edges", rep.expected_edges.str()},
                   {"crossings", rep.expected_crossings.str()}};
  j["relative_error"] = {{"vertices", rep.rel_err_vertices.decimal(6)},
                         {"edges", rep.rel_err_edges.decimal(6)},
                         {"crossings", rep.rel_err_crossings.decimal(6)}};
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

int cmd_audit(const std::string& in, const std::string& mu_class, int k) {
  DrawnGraph d = load_drawing(in);
  auto setting = parse_setting(mu_class);
  if (!setting || *setting == Setting::unrestricted) {
    std::cerr << "mu-class must be c3free, c4free or girth5\n";
    return kExitUsage;
  }
  auto mu = mu_list(*setting, k);
  auto audit = removal_audit(d, mu);
  json j = new_report("audit");
  j["mu_class"] = mu_class;
  j["k"] = k;
  json mj = json::array();
  for (const auto& [slope, icept] : mu)
    mj.push_back({{"slope", slope.str()}, {"intercept", icept.str()}});
  j["mu"] = std::move(mj);
  j["trace_total"] = audit.trace_total;
  j["bound"] = audit.bound.str();
  j["pass"] = audit.pass;
  j["trace"] = json::array();
  for (auto [e, c] : audit.trace)
    j["trace"].push_back({{"edge", e}, {"crossings", c}});
  std::cout << j.dump(2) << "\n";
  return audit.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for sparse k-planar drawings"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a construction instance");
  std::string family, gen_out, gen_svg;
  int rows = 0, cols = 0;
  bool wrap = false;
  gen->add_option("--family", family)->required();
  gen->add_option("--rows", rows)->required();
  gen->add_option("--cols", cols)->required();
  gen->add_flag("--wrap", wrap);
  gen->add_option("--out", gen_out);
  gen->add_option("--svg", gen_svg);

  // verify
  auto* ver = app.add_subcommand("verify", "run verifier checks on a drawing");
  std::string ver_in, checks = "girth,c3,c4,kplanar,density";
  int expect_k_v = -1, expect_girth_v = -1;
  ver->add_option("--in", ver_in)->required();
  ver->add_option("--checks", checks);
  ver->add_option("--expect-k", expect_k_v);
  ver->add_option("--expect-girth", expect_girth_v);

  // bounds
  auto* bnd = app.add_subcommand("bounds", "evaluate a density/crossing bound");
  int bk = 0;
  std::string bsetting, bdir = "U", bformat = "json", bm;
  long long bn = 0;
  bnd->add_option("--k", bk)->required();
  bnd->add_option("--setting", bsetting)->required();
  bnd->add_option("--n", bn)->required();
  bnd->add_option("--m", bm);
  bnd->add_option("--direction", bdir);
  bnd->add_option("--format", bformat);

  // table
  auto* tab = app.add_subcommand("table", "reproduce the bound tables");
  std::string tformat = "text";
  tab->add_option("--format", tformat);

  // discharge
  auto* dis = app.add_subcommand("discharge", "charge ledger and feasibility");
  std::string dis_in, alpha;
  long long dens_t = -1;
  dis->add_option("--in", dis_in)->required();
  dis->add_option("--alpha", alpha)->required();
  dis->add_option("--density-formula", dens_t);

  // sample
  auto* smp = app.add_subcommand("sample", "random induced subgraph harness");
  std::string smp_in, smp_p, smp_csv;
  long long smp_trials = 0;
  uint64_t smp_seed = 0;
  smp->add_option("--in", smp_in)->required();
  smp->add_option("--p", smp_p)->required();
  smp->add_option("--trials", smp_trials)->required();
  smp->add_option("--seed", smp_seed)->required();
  smp->add_option("--csv", smp_csv);

  // audit
  auto* aud = app.add_subcommand("audit", "greedy uncross vs naive bound");
  std::string aud_in, aud_class;
  int aud_k = 0;
  aud->add_option("--in", aud_in)->required();
  aud->add_option("--mu-class", aud_class)->required();
  aud->add_option("--k", aud_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(family, rows, cols, wrap, gen_out, gen_svg);
    if (*ver)
      return cmd_verify(ver_in, checks,
                        expect_k_v >= 0 ? std::optional<int>(expect_k_v)
                                        : std::nullopt,
                        expect_girth_v >= 0 ? std::optional<int>(expect_girth_v)
                                            : std::nullopt);
    if (*bnd)
      return cmd_bounds(bk, bsetting, bn,
                        bm.empty() ? std::nullopt
                                   : std::optional<std::string>(bm),
                        bdir, bformat);
    if (*tab) return cmd_table(tformat);
    if (*dis)
      return cmd_discharge(dis_in, alpha,
                           dens_t >= 0 ? std::optional<long long>(dens_t)
                                       : std::nullopt);
    if (*smp) return cmd_sample(smp_in, smp_p, smp_trials, smp_seed, smp_csv);
    if (*aud) return cmd_audit(aud_in, aud_class, aud_k);
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DrawingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitUsage;
}
